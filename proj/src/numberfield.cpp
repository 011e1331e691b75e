#include "coxkl/numberfield.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace coxkl {

namespace {

using ZPoly = std::vector<mpz_class>;  // low degree first, no trailing zeros

void ztrim(ZPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Exact division, used only where divisibility is guaranteed.
ZPoly zdiv_exact(const ZPoly& num, const ZPoly& den) {
  ZPoly r = num, q;
  q.assign(num.size() >= den.size() ? num.size() - den.size() + 1 : 0, 0);
  while (r.size() >= den.size() && !r.empty()) {
    mpz_class c = r.back() / den.back();
    size_t off = r.size() - den.size();
    q[off] = c;
    for (size_t i = 0; i < den.size(); ++i) r[off + i] -= c * den[i];
    ztrim(r);
  }
  if (!r.empty()) throw std::logic_error("zdiv_exact: nonzero remainder");
  return q;
}

ZPoly cyclotomic(unsigned n) {
  // x^n - 1 divided by the cyclotomic polynomials of the proper divisors.
  ZPoly num(n + 1, 0);
  num[0] = -1;
  num[n] = 1;
  for (unsigned d = 1; d < n; ++d)
    if (n % d == 0) num = zdiv_exact(num, cyclotomic(d));
  return num;
}

// p_k(y) with p_0 = 2, p_1 = y, p_k = y p_{k-1} - p_{k-2}; then
// p_k(2cos t) = 2cos(k t).
ZPoly cheb2(unsigned k) {
  ZPoly a = {2}, b = {0, 1};  // p_0, p_1
  if (k == 0) return a;
  for (unsigned i = 1; i < k; ++i) {
    ZPoly c(b.size() + 1, 0);
    for (size_t j = 0; j < b.size(); ++j) c[j + 1] = b[j];
    for (size_t j = 0; j < a.size(); ++j) c[j] -= a[j];
    ztrim(c);
    a = std::move(b);
    b = std::move(c);
  }
  return b;
}

// Minimal polynomial of 2cos(2pi/n) for n >= 3: fold the (self-reciprocal)
// cyclotomic polynomial of degree 2m through x^k + x^-k = p_k(x + 1/x).
ZPoly fold_cyclotomic(unsigned n) {
  ZPoly phi = cyclotomic(n);
  size_t m = (phi.size() - 1) / 2;
  ZPoly psi = {phi[m]};
  for (size_t k = 1; k <= m; ++k) {
    ZPoly pk = cheb2(unsigned(k));
    if (psi.size() < pk.size()) psi.resize(pk.size(), 0);
    for (size_t j = 0; j < pk.size(); ++j) psi[j] += phi[m + k] * pk[j];
  }
  ztrim(psi);
  return psi;
}

int qsign(const mpq_class& v) { return sgn(v); }

mpq_class eval_q(const ZPoly& p, const mpq_class& x) {
  mpq_class acc = 0;
  for (size_t i = p.size(); i-- > 0;) acc = acc * x + mpq_class(p[i]);
  return acc;
}

// Descartes bound on the number of roots of p in the open interval (c, d):
// sign variation count of (1+x)^deg p((c + d x)/(1+x)).
int descartes_in(const ZPoly& p, const mpq_class& c, const mpq_class& d) {
  int deg = int(p.size()) - 1;
  // Clear denominators of c and d first: replace p(z) by a polynomial with
  // integer coefficients evaluated on integer c', d' over a common q.
  mpz_class cl = lcm(c.get_den(), d.get_den());
  mpz_class cn = c.get_num() * (cl / c.get_den());
  mpz_class dn = d.get_num() * (cl / d.get_den());
  // q(x) = sum_i a_i (cn + dn x)^i (cl + cl x)^{deg-i}, same variations.
  std::vector<mpz_class> q(deg + 1, 0);
  std::vector<mpz_class> lin1(deg + 1), lin2(deg + 1);
  for (int i = 0; i <= deg; ++i) {
    if (p[i] == 0) continue;
    // (cn + dn x)^i
    std::vector<mpz_class> a = {1};
    for (int k = 0; k < i; ++k) {
      std::vector<mpz_class> b(a.size() + 1, 0);
      for (size_t j = 0; j < a.size(); ++j) {
        b[j] += a[j] * cn;
        b[j + 1] += a[j] * dn;
      }
      a = std::move(b);
    }
    // times (cl(1 + x))^{deg-i}
    for (int k = 0; k < deg - i; ++k) {
      std::vector<mpz_class> b(a.size() + 1, 0);
      for (size_t j = 0; j < a.size(); ++j) {
        b[j] += a[j] * cl;
        b[j + 1] += a[j] * cl;
      }
      a = std::move(b);
    }
    for (size_t j = 0; j < a.size(); ++j) q[j] += p[i] * a[j];
  }
  int var = 0, last = 0;
  for (auto& x : q) {
    int s = sgn(x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++var;
    last = s;
  }
  return var;
}

// Rightmost isolating interval of p in (c, d); p has no rational roots here.
bool isolate_rightmost(const ZPoly& p, mpq_class c, mpq_class d, mpq_class* lo,
                       mpq_class* hi) {
  int v = descartes_in(p, c, d);
  if (v == 0) return false;
  if (v == 1) {
    *lo = c;
    *hi = d;
    return true;
  }
  mpq_class m = (c + d) / 2;
  if (eval_q(p, m) == 0) throw std::logic_error("unexpected rational root");
  if (isolate_rightmost(p, m, d, lo, hi)) return true;
  return isolate_rightmost(p, c, m, lo, hi);
}

}  // namespace

std::shared_ptr<const NumberField> NumberField::make(unsigned N) {
  if (N < 2) throw std::invalid_argument("NumberField: N must be >= 2");
  auto f = std::shared_ptr<NumberField>(new NumberField);
  f->n_ = N;
  f->psi_ = fold_cyclotomic(2 * N);
  if (f->psi_.size() == 2) {
    // Linear modulus: y is rational, bracket it directly.
    mpq_class root(-f->psi_[0], f->psi_[1]);
    f->lo_ = root - 1;
    f->hi_ = root + 1;
  } else {
    if (!isolate_rightmost(f->psi_, mpq_class(-2), mpq_class(2), &f->lo_,
                           &f->hi_))
      throw std::logic_error("NumberField: root isolation failed");
  }
  return f;
}

std::vector<mpq_class> NumberField::two_cos(unsigned k) const {
  ZPoly pk = cheb2(k);
  // Reduce mod psi (monic) with rational arithmetic.
  std::vector<mpq_class> r(pk.size());
  for (size_t i = 0; i < pk.size(); ++i) r[i] = pk[i];
  size_t d = psi_.size() - 1;
  while (r.size() > d) {
    mpq_class c = r.back();
    size_t off = r.size() - 1 - d;
    if (c != 0)
      for (size_t i = 0; i <= d; ++i) r[off + i] -= c * mpq_class(psi_[i]);
    r.pop_back();
  }
  r.resize(d, mpq_class(0));
  return r;
}

void NumberField::refine(int steps) const {
  if (degree() == 1) return;  // rational y, bracket already tight enough
  int slo = qsign(eval_q(psi_, lo_));
  for (int i = 0; i < steps; ++i) {
    mpq_class m = (lo_ + hi_) / 2;
    int sm = qsign(eval_q(psi_, m));
    if (sm == 0) throw std::logic_error("refine: hit a rational root");
    if (sm == slo)
      lo_ = m;
    else
      hi_ = m;
  }
}

int NumberField::sign_of(const std::vector<mpq_class>& coeffs) const {
  bool zero = true;
  for (const auto& c : coeffs)
    if (c != 0) zero = false;
  if (zero) return 0;
  if (degree() == 1) {
    // Elements are plain rationals.
    return qsign(coeffs.empty() ? mpq_class(0) : coeffs[0]);
  }
  for (;;) {
    // Interval Horner evaluation on the current bracket.
    mpq_class a = 0, b = 0;  // running interval [a, b]
    for (size_t i = coeffs.size(); i-- > 0;) {
      mpq_class p1 = a * lo_, p2 = a * hi_, p3 = b * lo_, p4 = b * hi_;
      mpq_class mn = std::min(std::min(p1, p2), std::min(p3, p4));
      mpq_class mx = std::max(std::max(p1, p2), std::max(p3, p4));
      a = mn + coeffs[i];
      b = mx + coeffs[i];
    }
    if (qsign(a) > 0) return 1;
    if (qsign(b) < 0) return -1;
    refine(4);
  }
}

FieldElem::FieldElem(const NumberField* f, std::vector<mpq_class> coeffs)
    : f_(f), c_(std::move(coeffs)) {
  assert(int(c_.size()) <= f->degree());
  c_.resize(f->degree(), mpq_class(0));
}

FieldElem FieldElem::zero(const NumberField* f) {
  return FieldElem(f, std::vector<mpq_class>(f->degree(), mpq_class(0)));
}

FieldElem FieldElem::one(const NumberField* f) {
  return rational(f, mpq_class(1));
}

FieldElem FieldElem::rational(const NumberField* f, const mpq_class& v) {
  std::vector<mpq_class> c(f->degree(), mpq_class(0));
  c[0] = v;
  return FieldElem(f, std::move(c));
}

bool FieldElem::is_zero() const {
  for (const auto& x : c_)
    if (x != 0) return false;
  return true;
}

int FieldElem::sign() const { return f_->sign_of(c_); }

double FieldElem::approx() const {
  f_->refine(48);
  auto [lo, hi] = f_->bracket();
  double y = (lo.get_d() + hi.get_d()) / 2;
  double acc = 0;
  for (size_t i = c_.size(); i-- > 0;) acc = acc * y + c_[i].get_d();
  return acc;
}

FieldElem operator+(const FieldElem& a, const FieldElem& b) {
  FieldElem r = a;
  for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] += b.c_[i];
  return r;
}

FieldElem operator-(const FieldElem& a, const FieldElem& b) {
  FieldElem r = a;
  for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] -= b.c_[i];
  return r;
}

FieldElem FieldElem::operator-() const {
  FieldElem r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

FieldElem operator*(const FieldElem& a, const FieldElem& b) {
  const auto* f = a.f_;
  size_t d = f->degree();
  std::vector<mpq_class> prod(2 * d - 1, mpq_class(0));
  for (size_t i = 0; i < d; ++i) {
    if (a.c_[i] == 0) continue;
    for (size_t j = 0; j < d; ++j) {
      if (b.c_[j] == 0) continue;
      prod[i + j] += a.c_[i] * b.c_[j];
    }
  }
  const auto& psi = f->modulus();
  for (size_t k = prod.size(); k-- > d;) {
    if (prod[k] == 0) continue;
    mpq_class c = prod[k];
    size_t off = k - d;
    for (size_t i = 0; i <= d; ++i) prod[off + i] -= c * mpq_class(psi[i]);
  }
  prod.resize(d);
  return FieldElem(f, std::move(prod));
}

FieldElem FieldElem::inverse() const {
  if (is_zero()) throw std::domain_error("FieldElem::inverse of zero");
  // Extended Euclid in Q[y] against the (irreducible) modulus.
  using QP = std::vector<mpq_class>;
  auto deg = [](const QP& p) {
    for (size_t i = p.size(); i-- > 0;)
      if (p[i] != 0) return int(i);
    return -1;
  };
  QP r0(f_->modulus().size());
  for (size_t i = 0; i < r0.size(); ++i) r0[i] = f_->modulus()[i];
  QP r1 = c_;
  // Invariant: r_i = t_i * psi + s_i * this; only s is tracked.
  QP s0 = {mpq_class(0)}, s1 = {mpq_class(1)};
  while (deg(r1) > 0) {
    // Divide r0 by r1: r0 = q * r1 + rem.
    QP q(deg(r0) - deg(r1) + 1, mpq_class(0));
    QP rem = r0;
    while (deg(rem) >= deg(r1)) {
      int k = deg(rem) - deg(r1);
      mpq_class c = rem[deg(rem)] / r1[deg(r1)];
      q[k] += c;
      for (int i = 0; i <= deg(r1); ++i) rem[i + k] -= c * r1[i];
    }
    if (deg(rem) < 0)
      throw std::logic_error("inverse: modulus is not irreducible");
    QP qs(q.size() + s1.size() - 1, mpq_class(0));
    for (size_t i = 0; i < q.size(); ++i)
      for (size_t j = 0; j < s1.size(); ++j) qs[i + j] += q[i] * s1[j];
    QP ns = s0;
    if (ns.size() < qs.size()) ns.resize(qs.size(), mpq_class(0));
    for (size_t i = 0; i < qs.size(); ++i) ns[i] -= qs[i];
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(ns);
  }
  mpq_class lead = r1[deg(r1)];
  std::vector<mpq_class> out(f_->degree(), mpq_class(0));
  for (size_t i = 0; i < s1.size() && i < out.size(); ++i)
    out[i] = s1[i] / lead;
  return FieldElem(f_, std::move(out));
}

}  // namespace coxkl
