#pragma once

#include <complex>
#include <vector>

namespace fockvolt {

using Complex = std::complex<double>;

/// Complex polynomial with coefficients in ascending degree and trailing
/// zeros trimmed. The empty coefficient list is the zero polynomial.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Complex> coeffs);
  static Poly constant(Complex c);
  static Poly identity();  // z
  static Poly monomial(int n, Complex c = Complex{1.0, 0.0});

  const std::vector<Complex>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  Complex coeff(int k) const;
  Complex leading() const;
  Complex at0() const { return c_.empty() ? Complex{} : c_.front(); }

  Complex eval(Complex z) const;  // Horner
  Poly derivative() const;
  Poly antiderivative() const;  // the primitive vanishing at 0
  Poly drop_constant() const;

  /// sum_k |c_k| r^k, an upper bound for |p(z)| on |z| = r.
  double envelope(double r) const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Complex s, const Poly& p);
  bool operator==(const Poly&) const = default;

 private:
  std::vector<Complex> c_;
  void trim();
};

}  // namespace fockvolt
