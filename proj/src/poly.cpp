#include "fockvolt/poly.hpp"

#include <cmath>
#include <stdexcept>

namespace fockvolt {

namespace {
bool finite(Complex c) { return std::isfinite(c.real()) && std::isfinite(c.imag()); }
}  // namespace

Poly::Poly(std::vector<Complex> coeffs) : c_(std::move(coeffs)) {
  for (const Complex& c : c_)
    if (!finite(c)) throw std::invalid_argument("Poly: non-finite coefficient");
  trim();
}

Poly Poly::constant(Complex c) { return Poly{{c}}; }

Poly Poly::identity() { return Poly{{Complex{0.0}, Complex{1.0}}}; }

Poly Poly::monomial(int n, Complex c) {
  if (n < 0) throw std::invalid_argument("Poly::monomial: negative degree");
  std::vector<Complex> v(static_cast<size_t>(n) + 1, Complex{});
  v.back() = c;
  return Poly{std::move(v)};
}

Complex Poly::coeff(int k) const {
  if (k < 0 || static_cast<size_t>(k) >= c_.size()) return {};
  return c_[static_cast<size_t>(k)];
}

Complex Poly::leading() const { return c_.empty() ? Complex{} : c_.back(); }

Complex Poly::eval(Complex z) const {
  Complex acc{};
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * z + *it;
  return acc;
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Complex> d(c_.size() - 1);
  for (size_t k = 1; k < c_.size(); ++k) d[k - 1] = static_cast<double>(k) * c_[k];
  return Poly{std::move(d)};
}

Poly Poly::antiderivative() const {
  if (c_.empty()) return {};
  std::vector<Complex> a(c_.size() + 1, Complex{});
  for (size_t k = 0; k < c_.size(); ++k) a[k + 1] = c_[k] / static_cast<double>(k + 1);
  return Poly{std::move(a)};
}

Poly Poly::drop_constant() const {
  if (c_.empty()) return {};
  std::vector<Complex> v = c_;
  v[0] = Complex{};
  return Poly{std::move(v)};
}

double Poly::envelope(double r) const {
  double acc = 0.0, rk = 1.0;
  for (const Complex& c : c_) {
    acc += std::abs(c) * rk;
    rk *= r;
  }
  return acc;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Complex{});
  for (size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Complex{});
  for (size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
  trim();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Complex> prod(a.c_.size() + b.c_.size() - 1, Complex{});
  for (size_t i = 0; i < a.c_.size(); ++i)
    for (size_t j = 0; j < b.c_.size(); ++j) prod[i + j] += a.c_[i] * b.c_[j];
  return Poly{std::move(prod)};
}

Poly operator*(Complex s, const Poly& p) {
  std::vector<Complex> v = p.c_;
  for (Complex& c : v) c *= s;
  return Poly{std::move(v)};
}

void Poly::trim() {
  while (!c_.empty() && c_.back() == Complex{}) c_.pop_back();
}

}  // namespace fockvolt
