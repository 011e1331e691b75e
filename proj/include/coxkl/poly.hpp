#pragma once

#include <climits>
#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace coxkl {

// Dense univariate polynomial over Z in the indeterminate q.
// Coefficients are stored low degree first; the representation is kept
// canonical (no trailing zeros), so the zero polynomial has an empty
// coefficient vector and degree() == kNegInfDegree.
class PolyZ {
 public:
  static constexpr int kNegInfDegree = INT_MIN;

  PolyZ() = default;
  explicit PolyZ(long constant);
  explicit PolyZ(std::vector<mpz_class> coeffs);

  static PolyZ zero() { return PolyZ(); }
  static PolyZ one() { return PolyZ(1); }
  // The monomial c * q^k.
  static PolyZ monomial(long c, int k);

  bool is_zero() const { return c_.empty(); }
  int degree() const { return c_.empty() ? kNegInfDegree : int(c_.size()) - 1; }
  const std::vector<mpz_class>& coeffs() const { return c_; }
  mpz_class coeff(int k) const;

  PolyZ operator-() const;
  PolyZ& operator+=(const PolyZ& o);
  PolyZ& operator-=(const PolyZ& o);
  friend PolyZ operator+(PolyZ a, const PolyZ& b) { return a += b; }
  friend PolyZ operator-(PolyZ a, const PolyZ& b) { return a -= b; }
  friend PolyZ operator*(const PolyZ& a, const PolyZ& b);
  PolyZ& operator*=(const PolyZ& o) { return *this = *this * o; }

  bool operator==(const PolyZ& o) const { return c_ == o.c_; }
  bool operator!=(const PolyZ& o) const { return c_ != o.c_; }

  // q^k * this.
  PolyZ shifted(int k) const;
  // Drops every term of degree > k.
  PolyZ truncated(int k) const;
  // q^d * p(1/q); requires degree() <= d.
  PolyZ reversed(int d) const;
  PolyZ pow(unsigned e) const;

  // Human-readable sparse form, e.g. "q^3 - 2q^2 + 2q - 1"; "0" when zero.
  std::string to_string() const;

 private:
  void trim();
  std::vector<mpz_class> c_;
};

}  // namespace coxkl
