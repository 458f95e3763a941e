#pragma once

#include <memory>
#include <string>
#include <vector>

#include "fockvolt/poly.hpp"
#include "fockvolt/quadrature.hpp"
#include "fockvolt/weight.hpp"

namespace fockvolt {

/// Envelope |f(z)| <= C (1+|z|)^degree exp(quad |z|^2 + lin |z|), with the
/// fastest-growth direction when the exponential part is nontrivial.
struct GrowthEnvelope {
  double quad = 0.0;
  double lin = 0.0;
  int degree = 0;
  bool superquadratic = false;  // exponent polynomial of degree >= 3
  double direction = 0.0;
};

/// Verdict of the symbolic growth analysis deciding whether the weighted sup
/// sup |f| e^{-psi_m} is finite. BoundaryDirectional flags the razor case
/// (quadratic coefficient of modulus exactly 1/2, m = 0, linear term with a
/// nonzero component along the maximizing rays): the sup grows along one ray
/// and decays along the opposite one.
struct MembershipReport {
  enum class Verdict { Member, NonMember, BoundaryDirectional };
  Verdict verdict = Verdict::Member;
  double direction = 0.0;
  std::string detail;
  bool sup_finite() const { return verdict == Verdict::Member; }
};

/// Exact symbolic representation of the entire functions the operators act
/// on: polynomials, p(z) e^{q(z)}, lazy Volterra images, lazy resolvent
/// images, and the polynomial-combination closure of these under
/// differentiation. Immutable; evaluation is pure.
class EntireFunction {
 public:
  enum class Kind { Poly, ExpPoly, VolterraImage, ResolventImage, PolyTimes, Sum };

  EntireFunction();  // zero function
  static EntireFunction poly(Poly p);
  static EntireFunction exp_poly(Poly prefactor, Poly exponent);
  static EntireFunction constant(Complex c);
  static EntireFunction identity();

  Kind kind() const;
  bool is_zero() const;

  Complex evaluate(Complex z, const QuadConfig& cfg = {}) const;
  /// f(z) e^{-log_shift}; the shift is absorbed into the exponential factors
  /// before exponentiation, so weighted magnitudes never overflow even when
  /// the raw value would.
  Complex eval_scaled(Complex z, Complex log_shift, const QuadConfig& cfg = {}) const;
  Complex value_at_zero() const;

  /// Exact symbolic derivative; never introduces quadrature for polynomial,
  /// exp-polynomial or Volterra inputs.
  EntireFunction derivative() const;

  GrowthEnvelope envelope() const;
  std::string describe() const;

  // Variant accessors; throw std::logic_error on kind mismatch.
  const Poly& poly_coeffs() const;
  const Poly& exp_prefactor() const;
  const Poly& exp_exponent() const;

  friend EntireFunction volterra_apply(const Poly& g, const EntireFunction& f);
  friend EntireFunction resolvent_apply(const Poly& g1, Complex lambda, const EntireFunction& h);
  friend EntireFunction poly_times(const Poly& c, const EntireFunction& f);
  friend EntireFunction sum_of(std::vector<EntireFunction> terms);
  friend MembershipReport membership(const EntireFunction& f, const Weight& w);

 private:
  struct Node;
  std::shared_ptr<const Node> node_;
  explicit EntireFunction(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
};

/// V_g f(z) = int_0^z f(w) g'(w) dw. Polynomial inputs integrate exactly;
/// anything else stays lazy and is evaluated by segment quadrature.
EntireFunction volterra_apply(const Poly& g, const EntireFunction& f);

/// The unique entire solution f of lambda f - V_{g1} f = h (lambda != 0),
/// f(0) = h(0)/lambda. Constant h yields (h(0)/lambda) e^{g1(z)/lambda}
/// exactly; the constant term of g1 is immaterial and dropped.
EntireFunction resolvent_apply(const Poly& g1, Complex lambda, const EntireFunction& h);

EntireFunction poly_times(const Poly& c, const EntireFunction& f);
EntireFunction scale(Complex s, const EntireFunction& f);
EntireFunction sum_of(std::vector<EntireFunction> terms);

/// Decides whether p e^q has finite weighted sup against e^{-psi_m} by
/// symbolic growth analysis of the exponent, the order-m log term and the
/// prefactor degree. |alpha| = 1/2 detection uses tolerance 1e-12.
MembershipReport exp_poly_membership(const Poly& p, const Poly& q, const Weight& w);

MembershipReport membership(const EntireFunction& f, const Weight& w);

}  // namespace fockvolt
