#include "coxkl/klpoly.hpp"

#include <bit>
#include <stdexcept>

namespace coxkl {

namespace {

PolyZ q_minus_1() { return PolyZ({mpz_class(-1), mpz_class(1)}); }

uint64_t pack(ElemRef u, ElemRef w) {
  return (uint64_t(uint32_t(u)) << 32) | uint32_t(w);
}

}  // namespace

PolyZ x_factor(XMode x) {
  return x == XMode::q_mode ? PolyZ(-1) : PolyZ::monomial(1, 1);
}

KLContext::KLContext(CoxeterSystem& sys, GenSet H, XMode x, DescentPick pick,
                     size_t interval_cap)
    : sys_(sys), h_(H), x_(x), pick_(pick), cap_(interval_cap) {}

void KLContext::require_rep(ElemRef e) const {
  if (!sys_.is_min_coset_rep(e, h_))
    throw std::invalid_argument("not a minimal coset representative");
}

const PolyZ& KLContext::R(ElemRef u, ElemRef w) {
  require_rep(u);
  require_rep(w);
  uint64_t key = pack(u, w);
  if (auto it = rmemo_.find(key); it != rmemo_.end()) return it->second;
  PolyZ val;
  if (u == w) {
    val = PolyZ::one();
  } else if (!sys_.bruhat_leq(u, w)) {
    val = PolyZ::zero();
  } else {
    GenSet dl = sys_.left_descents(w);
    Gen s = pick_ == DescentPick::lowest
                ? Gen(std::countr_zero(dl))
                : Gen(63 - std::countl_zero(dl));
    ElemRef sw = sys_.mult_gen(w, s, Side::left);
    if (gen_in(sys_.left_descents(u), s)) {
      val = R(sys_.mult_gen(u, s, Side::left), sw);
    } else {
      ElemRef su = sys_.mult_gen(u, s, Side::left);
      if (sys_.is_min_coset_rep(su, h_))
        val = q_minus_1() * R(u, sw) + R(su, sw).shifted(1);
      else
        val = x_factor(x_) * R(u, sw);
    }
  }
  return rmemo_.emplace(key, std::move(val)).first->second;
}

const std::vector<ElemRef>& KLContext::flagged_below(ElemRef w) {
  auto it = flagged_.find(w);
  if (it != flagged_.end()) return it->second;
  BruhatInterval iv = build_interval(sys_, w, h_, cap_);
  std::vector<ElemRef> zs;
  for (int v = 0; v < iv.size(); ++v)
    if (iv.poset.flagged(v)) zs.push_back(iv.element(v));
  return flagged_.emplace(w, std::move(zs)).first->second;
}

const PolyZ& KLContext::P(ElemRef u, ElemRef w) {
  require_rep(u);
  require_rep(w);
  uint64_t key = pack(u, w);
  if (auto it = pmemo_.find(key); it != pmemo_.end()) return it->second;
  PolyZ val;
  if (u == w) {
    val = PolyZ::one();
  } else if (!sys_.bruhat_leq(u, w)) {
    val = PolyZ::zero();
  } else {
    // q^d P(1/q) - P equals the sum of R_{u,z} P_{z,w} over flagged
    // u < z <= w; the degree bound deg P <= (d-1)/2 separates the two
    // halves, so P is read off the low half and the high half must match.
    int d = sys_.length(w) - sys_.length(u);
    PolyZ sum;
    for (ElemRef z : flagged_below(w)) {
      if (z == u || !sys_.bruhat_leq(u, z)) continue;
      sum += R(u, z) * P(z, w);
    }
    val = (-sum).truncated((d - 1) / 2);
    if (val.reversed(d) - val != sum)
      throw std::logic_error("parabolic P: degree-bound split inconsistent");
  }
  return pmemo_.emplace(key, std::move(val)).first->second;
}

OrdinaryKL::OrdinaryKL(CoxeterSystem& sys, size_t interval_cap)
    : cq_(sys, 0, XMode::q_mode, DescentPick::lowest, interval_cap),
      cm_(sys, 0, XMode::minus_one, DescentPick::lowest, interval_cap) {}

PolyZ OrdinaryKL::R(ElemRef u, ElemRef w) {
  const PolyZ& a = cq_.R(u, w);
  if (a != cm_.R(u, w))
    throw std::logic_error("ordinary R: x-modes disagree with H empty");
  return a;
}

PolyZ OrdinaryKL::P(ElemRef u, ElemRef w) {
  const PolyZ& a = cq_.P(u, w);
  if (a != cm_.P(u, w))
    throw std::logic_error("ordinary P: x-modes disagree with H empty");
  return a;
}

PolyZ dihedral_r_polynomial(int i) {
  if (i <= 0) throw std::invalid_argument("dihedral_r_polynomial: i >= 1");
  if (i % 2 == 1) {
    // (q-1) * sum_{k<i} (-q)^k
    std::vector<mpz_class> alt(i);
    for (int k = 0; k < i; ++k) alt[k] = (k % 2 == 0) ? 1 : -1;
    return q_minus_1() * PolyZ(std::move(alt));
  }
  std::vector<mpz_class> even(i - 1, 0);
  for (int k = 0; 2 * k <= i - 2; ++k) even[2 * k] = 1;
  return q_minus_1() * q_minus_1() * PolyZ(std::move(even));
}

CosetCase classify_coset(CoxeterSystem& sys, GenSet H, ElemRef u3, Gen s,
                         Gen t) {
  if (sys.left_descents(u3) & (gen_bit(s) | gen_bit(t)))
    throw std::invalid_argument("classify_coset: u3 has a left descent in {s,t}");
  if (!sys.is_min_coset_rep(u3, H)) return CosetCase::empty;
  bool s_in = sys.is_min_coset_rep(sys.mult_gen(u3, s, Side::left), H);
  bool t_in = sys.is_min_coset_rep(sys.mult_gen(u3, t, Side::left), H);
  if (s_in && t_in) return CosetCase::full;
  if (s_in) return CosetCase::chain_s;
  if (t_in) return CosetCase::chain_t;
  return CosetCase::singleton;
}

PolyZ r_singleton_case(XMode x, int w2_len, const PolyZ& r_base) {
  return x_factor(x).pow(unsigned(w2_len)) * r_base;
}

PolyZ r_full_coset_case(CoxeterSystem& sys, XMode x, ElemRef u2, ElemRef w2,
                        const PolyZ& r_base, const PolyZ& r_p,
                        std::optional<Gen> p) {
  int i = sys.length(w2) - sys.length(u2);
  if (i < -1)
    throw std::invalid_argument("full coset case: length gap below -1");
  (void)x;
  switch (i) {
    case -1:
      return r_p;
    case 0:
      return u2 == w2 ? r_base : q_minus_1() * r_p;
    case 1: {
      bool w2_is_u2p = p && sys.mult_gen(u2, *p, Side::right) == w2;
      PolyZ v = q_minus_1() * r_base;
      if (w2_is_u2p) v += r_p.shifted(1);
      return v;
    }
    default:
      return dihedral_r_polynomial(i) * r_base +
             (dihedral_r_polynomial(i - 1) * r_p).shifted(1);
  }
}

PolyZ r_chain_coset_case(CoxeterSystem& sys, XMode x, ElemRef u2, ElemRef w2,
                         Gen s, Gen t, Gen r, const PolyZ& r_base,
                         const PolyZ& r_r) {
  int i = sys.length(w2) - sys.length(u2);
  if (i < -1)
    throw std::invalid_argument("chain coset case: length gap below -1");
  Gen rbar = r == s ? t : s;
  PolyZ f = x_factor(x);
  switch (i) {
    case -1:
      return r_r;
    case 0:
      return u2 == w2 ? r_base : q_minus_1() * r_r;
    case 1:
      if (gen_in(sys.right_descents(w2), rbar)) return f * r_base;
      if (u2 != sys.identity()) return q_minus_1() * r_base;
      return q_minus_1() * r_base + r_r.shifted(1);
    case 2:
      if (gen_in(sys.right_descents(w2), r))
        return f * (q_minus_1() * r_base + r_r.shifted(1));
      return q_minus_1() * (f * r_base + r_r.shifted(1));
    default:
      return q_minus_1() * f.pow(unsigned(i - 2)) *
             (f * r_base + r_r.shifted(1));
  }
}

bool check_parabolic_ordinary_sum(KLContext& parabolic_q, OrdinaryKL& ord,
                                  ElemRef u, ElemRef v) {
  if (parabolic_q.xmode() != XMode::q_mode)
    throw std::invalid_argument("check needs the q-mode context");
  CoxeterSystem& sys = parabolic_q.sys();
  GenSet H = parabolic_q.H();
  const PolyZ& lhs = parabolic_q.P(u, v);
  // Nonzero terms have z = u w inside [e, v]; scan the interval.
  BruhatInterval iv = build_interval(sys, v, H);
  ElemRef uinv = sys.inverse(u);
  PolyZ rhs;
  for (int zi = 0; zi < iv.size(); ++zi) {
    ElemRef z = iv.element(zi);
    ElemRef w = sys.mult(uinv, z);
    if (!sys.in_parabolic(w, H)) continue;
    PolyZ term = ord.P(z, v);
    rhs += (sys.length(w) % 2 == 0) ? term : -term;
  }
  return lhs == rhs;
}

bool check_longest_shift(KLContext& parabolic_m, OrdinaryKL& ord, ElemRef u,
                         ElemRef v) {
  if (parabolic_m.xmode() != XMode::minus_one)
    throw std::invalid_argument("check needs the minus-one-mode context");
  CoxeterSystem& sys = parabolic_m.sys();
  GenSet H = parabolic_m.H();
  if (!sys.parabolic_finite(H))
    throw std::domain_error("check_longest_shift: W_H is infinite");
  ElemRef w0 = sys.longest_parabolic(H);
  const PolyZ& lhs = parabolic_m.P(u, v);
  return lhs == ord.P(sys.mult(u, w0), sys.mult(v, w0));
}

}  // namespace coxkl
