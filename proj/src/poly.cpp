#include "coxkl/poly.hpp"

#include <sstream>
#include <stdexcept>

namespace coxkl {

PolyZ::PolyZ(long constant) {
  if (constant != 0) c_.emplace_back(constant);
}

PolyZ::PolyZ(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) { trim(); }

PolyZ PolyZ::monomial(long c, int k) {
  if (c == 0) return PolyZ();
  if (k < 0) throw std::invalid_argument("monomial: negative degree");
  std::vector<mpz_class> v(k + 1);
  v[k] = c;
  return PolyZ(std::move(v));
}

mpz_class PolyZ::coeff(int k) const {
  if (k < 0 || k >= int(c_.size())) return mpz_class(0);
  return c_[k];
}

void PolyZ::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

PolyZ PolyZ::operator-() const {
  PolyZ r(*this);
  for (auto& x : r.c_) x = -x;
  return r;
}

PolyZ& PolyZ::operator+=(const PolyZ& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

PolyZ& PolyZ::operator-=(const PolyZ& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

PolyZ operator*(const PolyZ& a, const PolyZ& b) {
  if (a.is_zero() || b.is_zero()) return PolyZ();
  std::vector<mpz_class> r(a.c_.size() + b.c_.size() - 1);
  for (size_t i = 0; i < a.c_.size(); ++i)
    for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  return PolyZ(std::move(r));
}

PolyZ PolyZ::shifted(int k) const {
  if (is_zero()) return PolyZ();
  if (k < 0) throw std::invalid_argument("shifted: negative shift");
  std::vector<mpz_class> r(c_.size() + k);
  for (size_t i = 0; i < c_.size(); ++i) r[i + k] = c_[i];
  return PolyZ(std::move(r));
}

PolyZ PolyZ::truncated(int k) const {
  if (k < 0) return PolyZ();
  std::vector<mpz_class> r(c_.begin(),
                           c_.begin() + std::min(c_.size(), size_t(k) + 1));
  return PolyZ(std::move(r));
}

PolyZ PolyZ::reversed(int d) const {
  if (is_zero()) return PolyZ();
  if (degree() > d) throw std::invalid_argument("reversed: degree exceeds d");
  std::vector<mpz_class> r(d + 1);
  for (size_t i = 0; i < c_.size(); ++i) r[d - i] = c_[i];
  return PolyZ(std::move(r));
}

PolyZ PolyZ::pow(unsigned e) const {
  PolyZ r = one(), b = *this;
  while (e) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

std::string PolyZ::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const mpz_class& c = c_[k];
    if (c == 0) continue;
    mpz_class a = abs(c);
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (a != 1 || k == 0) os << a.get_str();
    if (k >= 1) os << "q";
    if (k >= 2) os << "^" << k;
  }
  return os.str();
}

}  // namespace coxkl
