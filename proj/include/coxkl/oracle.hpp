#pragma once

#include <map>
#include <vector>

#include "coxkl/klpoly.hpp"
#include "coxkl/matching.hpp"

namespace coxkl {

// Independent reference implementations used to cross-check the primary
// paths.  They share only elementary accessors with the code they verify:
// Bruhat order via subword search instead of the descent recursion, matching
// enumeration by filtering all perfect matchings instead of pruned
// backtracking, and ordinary P-polynomials through the classical
// mu-coefficient recursion instead of the inversion identity.

// u <= w iff some reduced word of u embeds as a subword of the canonical
// word of w.
bool subword_leq(CoxeterSystem& sys, ElemRef u, ElemRef w);

// Every special matching of the poset, found by enumerating all perfect
// matchings of the Hasse diagram and filtering with a direct transcription
// of the definition (reachability recomputed locally).
std::vector<Matching> brute_force_special_matchings(const Poset& p);

// All reduced words of an element, by walking down through left descents.
std::vector<std::vector<uint8_t>> all_reduced_words(CoxeterSystem& sys,
                                                    ElemRef e);

// Ordinary Kazhdan-Lusztig P-polynomials through the classical recursion
// with mu-coefficient correction terms.
class MuRecursionKL {
 public:
  explicit MuRecursionKL(CoxeterSystem& sys) : sys_(sys) {}
  PolyZ P(ElemRef u, ElemRef w);
  mpz_class mu(ElemRef z, ElemRef v);

 private:
  CoxeterSystem& sys_;
  std::map<std::pair<ElemRef, ElemRef>, PolyZ> memo_;
  std::map<ElemRef, std::vector<ElemRef>> below_;
  const std::vector<ElemRef>& below(ElemRef w);
};

}  // namespace coxkl
