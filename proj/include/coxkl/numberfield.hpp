#pragma once

#include <memory>
#include <vector>

#include <gmpxx.h>

namespace coxkl {

// The real field Q(y) with y = 2cos(pi/N), presented as Q[y]/(psi) where psi
// is the minimal polynomial of y over Q.  All entries of the reflection
// representation of a Coxeter system whose finite labels divide N live here.
//
// The field keeps a rational isolating interval for y (y is the largest real
// root of psi) and refines it on demand to certify signs of field elements.
// Refinement mutates shared state, so a NumberField and everything built on
// it is single-threaded by contract.
class NumberField {
 public:
  // y = 2cos(pi/N); requires N >= 2.
  static std::shared_ptr<const NumberField> make(unsigned N);

  unsigned order() const { return n_; }
  int degree() const { return int(psi_.size()) - 1; }
  // Monic minimal polynomial of y, integer coefficients, low degree first.
  const std::vector<mpz_class>& modulus() const { return psi_; }

  // 2cos(k*pi/N) as a reduced coefficient vector (the Chebyshev-like word
  // p_k(y), p_0 = 2, p_1 = y, p_k = y p_{k-1} - p_{k-2}, reduced mod psi).
  std::vector<mpq_class> two_cos(unsigned k) const;

  // Current isolating interval for y.
  std::pair<mpq_class, mpq_class> bracket() const { return {lo_, hi_}; }
  // Halves the bracket `steps` times (exact bisection on psi).
  void refine(int steps) const;

  // Sign of sum c_i y^i for a reduced coefficient vector (size <= degree);
  // returns -1, 0 or +1, exact.
  int sign_of(const std::vector<mpq_class>& coeffs) const;

 private:
  NumberField() = default;
  unsigned n_ = 0;
  std::vector<mpz_class> psi_;
  mutable mpq_class lo_, hi_;  // psi(lo_) and psi(hi_) have opposite signs
};

// An element of a NumberField: polynomial in y of degree < deg(psi) with
// rational coefficients, always kept reduced.
class FieldElem {
 public:
  FieldElem() = default;  // unusable until assigned; field() == nullptr
  FieldElem(const NumberField* f, std::vector<mpq_class> coeffs);

  static FieldElem zero(const NumberField* f);
  static FieldElem one(const NumberField* f);
  static FieldElem rational(const NumberField* f, const mpq_class& v);

  const NumberField* field() const { return f_; }
  const std::vector<mpq_class>& coeffs() const { return c_; }

  bool is_zero() const;
  int sign() const;  // certified: -1, 0, +1
  double approx() const;

  friend FieldElem operator+(const FieldElem& a, const FieldElem& b);
  friend FieldElem operator-(const FieldElem& a, const FieldElem& b);
  friend FieldElem operator*(const FieldElem& a, const FieldElem& b);
  FieldElem operator-() const;
  FieldElem inverse() const;  // requires nonzero
  bool operator==(const FieldElem& o) const { return c_ == o.c_; }
  bool operator!=(const FieldElem& o) const { return !(*this == o); }

 private:
  const NumberField* f_ = nullptr;
  std::vector<mpq_class> c_;  // size == degree of the field
};

}  // namespace coxkl
