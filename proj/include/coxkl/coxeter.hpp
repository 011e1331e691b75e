#pragma once

#include <cstdint>
#include <deque>
#include <memory>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "coxkl/numberfield.hpp"

namespace coxkl {

// Generators are 0-based indices everywhere in the library; the CLI and the
// JSON formats use 1-based indices.
using Gen = int;
using ElemRef = int32_t;
constexpr ElemRef kNoElem = -1;

// Subsets of the generating set as bitmasks (rank <= 64).
using GenSet = uint64_t;
inline GenSet gen_bit(Gen s) { return GenSet(1) << s; }
inline bool gen_in(GenSet set, Gen s) { return (set >> s) & 1; }
inline GenSet full_gen_set(int rank) {
  return rank == 64 ? ~GenSet(0) : (GenSet(1) << rank) - 1;
}
std::vector<Gen> gens_of(GenSet set);

enum class Side { left, right };

// Symmetric Coxeter matrix; label 0 encodes infinity, diagonal is 1 and
// off-diagonal labels are >= 2.
struct CoxeterMatrix {
  int rank = 0;
  std::vector<std::vector<unsigned>> labels;

  static CoxeterMatrix dihedral(unsigned m);  // rank 2
  static CoxeterMatrix type_a(int rank);      // simply laced chain
  unsigned label(Gen s, Gen t) const { return labels[s][t]; }
  void validate() const;  // throws std::invalid_argument on bad input
};

struct RightDecomposition {
  ElemRef min_rep;  // the W^J part, no right descent in J
  ElemRef sub;      // the W_J part; min_rep * sub = w, lengths add
};

struct LeftDecomposition {
  ElemRef sub;      // the W_J part; sub * min_rep = w, lengths add
  ElemRef min_rep;  // the part with no left descent in J
};

// A Coxeter system with an interned element store.  Elements are handles
// into the store; every handle carries its length, canonical ShortLex
// reduced word, both descent sets, and the exact matrices of the element and
// its inverse in the reflection representation over Q[y]/(psi), with
// y = 2cos(pi/N) and N the lcm of the finite labels.
//
// The store, the multiplication caches and the Bruhat memo are all mutated
// on use; a CoxeterSystem is single-threaded by contract.
class CoxeterSystem {
 public:
  static std::unique_ptr<CoxeterSystem> create(CoxeterMatrix m);

  int rank() const { return matrix_.rank; }
  const CoxeterMatrix& matrix() const { return matrix_; }
  const NumberField& field() const { return *field_; }
  ElemRef identity() const { return 0; }
  size_t store_size() const { return elems_.size(); }

  int length(ElemRef e) const { return elems_[e].length; }
  const std::vector<uint8_t>& word(ElemRef e) const { return elems_[e].word; }
  GenSet left_descents(ElemRef e) const { return elems_[e].dl; }
  GenSet right_descents(ElemRef e) const { return elems_[e].dr; }
  GenSet support(ElemRef e) const { return elems_[e].supp; }

  ElemRef mult_gen(ElemRef e, Gen s, Side side);
  ElemRef mult_word(ElemRef e, std::span<const uint8_t> letters);
  ElemRef from_word(std::span<const uint8_t> letters);
  ElemRef from_word(std::initializer_list<int> letters);
  ElemRef mult(ElemRef a, ElemRef b);
  ElemRef inverse(ElemRef e);

  bool bruhat_leq(ElemRef u, ElemRef w);

  // s <= w in Bruhat order for a single generator: s lies in the support.
  bool gen_leq(Gen s, ElemRef w) const { return gen_in(support(w), s); }
  bool in_parabolic(ElemRef w, GenSet J) const {
    return (support(w) & ~J) == 0;
  }
  bool is_min_coset_rep(ElemRef w, GenSet H) const {
    return (right_descents(w) & H) == 0;
  }
  bool commutes(Gen r, Gen s) const {
    return r == s || matrix_.label(r, s) == 2;
  }

  RightDecomposition decompose_right(ElemRef w, GenSet J);
  LeftDecomposition decompose_left(ElemRef w, GenSet J);

  // The unique maximum of W_J intersected with [e, w].
  ElemRef max_parabolic_below(ElemRef w, GenSet J);

  // W_J is finite iff the bilinear form restricted to J is positive
  // definite; decided exactly.
  bool parabolic_finite(GenSet J) const;
  // Longest element of W_J; requires parabolic_finite(J).
  ElemRef longest_parabolic(GenSet J);

 private:
  struct FMat {
    std::vector<FieldElem> a;  // rank x rank, row major
  };
  struct Elem {
    std::vector<uint8_t> word;
    int length = 0;
    GenSet dl = 0, dr = 0, supp = 0;
    FMat mat, imat;
    std::vector<ElemRef> lmul, rmul;
    ElemRef inv = kNoElem;
  };

  CoxeterSystem() = default;
  FieldElem b2(Gen s, Gen t) const;  // -2B(alpha_s, alpha_t)
  void lmul_in_place(FMat& m, Gen s) const;
  void rmul_in_place(FMat& m, Gen s) const;
  int root_sign(const FMat& m, Gen col) const;
  GenSet descents_from(const FMat& m) const;
  uint64_t fingerprint(const FMat& m) const;
  ElemRef intern(FMat mat, FMat imat);

  CoxeterMatrix matrix_;
  std::shared_ptr<const NumberField> field_;
  std::vector<FieldElem> minus_two_b_;  // rank*rank table
  std::deque<Elem> elems_;
  std::unordered_map<uint64_t, std::vector<ElemRef>> mat_index_;
  std::unordered_map<std::string, ElemRef> word_index_;
  std::unordered_map<uint64_t, bool> leq_memo_;
};

}  // namespace coxkl
