#pragma once

#include <map>
#include <optional>
#include <unordered_map>
#include <vector>

#include "coxkl/coxeter.hpp"
#include "coxkl/interval.hpp"
#include "coxkl/poly.hpp"

namespace coxkl {

// The two specializations x = q and x = -1 of the parabolic theory; the
// recurrence factor q - 1 - x is -1 in q-mode and q in minus-one-mode.
enum class XMode { q_mode, minus_one };
PolyZ x_factor(XMode x);

// Which left descent the recursion steps on.  The result is independent of
// the choice; tests recompute with both to assert that.
enum class DescentPick { lowest, highest };

// Word-based computation of the parabolic R- and P-polynomials of W^H, one
// instance per (system, H, x-mode).  Values are memoized per element pair.
class KLContext {
 public:
  KLContext(CoxeterSystem& sys, GenSet H, XMode x,
            DescentPick pick = DescentPick::lowest,
            size_t interval_cap = kDefaultIntervalCap);

  CoxeterSystem& sys() const { return sys_; }
  GenSet H() const { return h_; }
  XMode xmode() const { return x_; }

  // R^{H,x}_{u,w}; throws std::invalid_argument unless u, w are minimal
  // coset representatives.
  const PolyZ& R(ElemRef u, ElemRef w);
  // P^{H,x}_{u,w}, recovered from the R-family through the inversion
  // identity and the degree bound; throws std::logic_error if the computed
  // right side is not consistent with to the degree bound.
  const PolyZ& P(ElemRef u, ElemRef w);

  // Flagged elements of [e, w], sorted by (length, word); cached.
  const std::vector<ElemRef>& flagged_below(ElemRef w);

 private:
  void require_rep(ElemRef e) const;
  CoxeterSystem& sys_;
  GenSet h_;
  XMode x_;
  DescentPick pick_;
  size_t cap_;
  std::unordered_map<uint64_t, PolyZ> rmemo_, pmemo_;
  std::map<ElemRef, std::vector<ElemRef>> flagged_;
};

// H = 0 with both x-modes computed and asserted equal.
class OrdinaryKL {
 public:
  explicit OrdinaryKL(CoxeterSystem& sys,
                      size_t interval_cap = kDefaultIntervalCap);
  PolyZ R(ElemRef u, ElemRef w);
  PolyZ P(ElemRef u, ElemRef w);
  KLContext& q_context() { return cq_; }

 private:
  KLContext cq_, cm_;
};

// The dihedral R-polynomial for length difference i >= 1:
//   R_1 = q-1, R_2 = (q-1)^2, R_i = (q-1) R_{i-1} + q R_{i-2}.
PolyZ dihedral_r_polynomial(int i);

// Shape of (W_{s,t} u3) intersected with W^H, for u3 with no left descent
// in {s,t}: empty, the singleton {u3}, one of the two chains (named by the
// generator r with r u3 still a representative), or the whole coset.
enum class CosetCase { empty, singleton, chain_s, chain_t, full };
CosetCase classify_coset(CoxeterSystem& sys, GenSet H, ElemRef u3, Gen s,
                         Gen t);

// Closed forms for R^{H,x}_{u2 u3, w2 w3} in terms of R-values at the coset
// base, valid under the hypotheses detected by classify_coset (and, for the
// two non-trivial cases, at most one of s, t below w3).

// Singleton case: (q-1-x)^{len(w2)} * R_{u3,w3}.
PolyZ r_singleton_case(XMode x, int w2_len, const PolyZ& r_base);

// Full-coset case; p is the generator below w3 when there is one, and
// r_p = R_{p u3, w3} (zero polynomial when p is absent).
PolyZ r_full_coset_case(CoxeterSystem& sys, XMode x, ElemRef u2, ElemRef w2,
                        const PolyZ& r_base, const PolyZ& r_p,
                        std::optional<Gen> p);

// Chain case; r is the generator with r u3 still a representative and
// r_r = R_{r u3, w3}.
PolyZ r_chain_coset_case(CoxeterSystem& sys, XMode x, ElemRef u2, ElemRef w2,
                         Gen s, Gen t, Gen r, const PolyZ& r_base,
                         const PolyZ& r_r);

// P^{H,q}_{u,v} equals the alternating sum of ordinary P_{uw,v} over
// w in W_H.
bool check_parabolic_ordinary_sum(KLContext& parabolic_q, OrdinaryKL& ord,
                                  ElemRef u, ElemRef v);
// P^{H,-1}_{u,v} equals the ordinary P at the pair shifted by the longest
// element of W_H; throws std::domain_error when W_H is infinite.
bool check_longest_shift(KLContext& parabolic_m, OrdinaryKL& ord, ElemRef u,
                         ElemRef v);

}  // namespace coxkl
