#include "fockvolt/entire_function.hpp"

#include <cmath>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace fockvolt {

struct EntireFunction::Node {
  Kind kind;
  // Poly: p = coefficients.
  // ExpPoly: p = prefactor, q = exponent (deg q >= 1).
  // VolterraImage: p = g', child = f.
  // ResolventImage: p = g1 (constant term dropped), lambda, child = h, child2 = h'.
  // PolyTimes: p = multiplier, child = inner function.
  // Sum: terms.
  Poly p;
  Poly q;
  Complex lambda{};
  std::vector<EntireFunction> children;  // [f] / [h, h'] per kind
  std::vector<EntireFunction> terms;
};

namespace {
bool finite(Complex c) { return std::isfinite(c.real()) && std::isfinite(c.imag()); }
}  // namespace

EntireFunction::EntireFunction() : EntireFunction(poly(Poly{})) {}

EntireFunction EntireFunction::poly(Poly p) {
  Node n;
  n.kind = Kind::Poly;
  n.p = std::move(p);
  return EntireFunction(std::make_shared<const Node>(std::move(n)));
}

EntireFunction EntireFunction::exp_poly(Poly prefactor, Poly exponent) {
  if (prefactor.is_zero()) return poly(Poly{});
  if (exponent.is_constant()) {
    // Constant exponent is absorbed into the prefactor.
    return poly(std::exp(exponent.at0()) * prefactor);
  }
  Node n;
  n.kind = Kind::ExpPoly;
  n.p = std::move(prefactor);
  n.q = std::move(exponent);
  return EntireFunction(std::make_shared<const Node>(std::move(n)));
}

EntireFunction EntireFunction::constant(Complex c) { return poly(Poly::constant(c)); }

EntireFunction EntireFunction::identity() { return poly(Poly::identity()); }

EntireFunction::Kind EntireFunction::kind() const { return node_->kind; }

bool EntireFunction::is_zero() const { return node_->kind == Kind::Poly && node_->p.is_zero(); }

const Poly& EntireFunction::poly_coeffs() const {
  if (node_->kind != Kind::Poly) throw std::logic_error("EntireFunction: not a polynomial");
  return node_->p;
}

const Poly& EntireFunction::exp_prefactor() const {
  if (node_->kind != Kind::ExpPoly) throw std::logic_error("EntireFunction: not an exp-polynomial");
  return node_->p;
}

const Poly& EntireFunction::exp_exponent() const {
  if (node_->kind != Kind::ExpPoly) throw std::logic_error("EntireFunction: not an exp-polynomial");
  return node_->q;
}

Complex EntireFunction::value_at_zero() const {
  const Node& n = *node_;
  switch (n.kind) {
    case Kind::Poly: return n.p.at0();
    case Kind::ExpPoly: return n.p.at0() * std::exp(n.q.at0());
    case Kind::VolterraImage: return {};
    case Kind::ResolventImage: return n.children[0].value_at_zero() / n.lambda;
    case Kind::PolyTimes: return n.p.at0() * n.children[0].value_at_zero();
    case Kind::Sum: {
      Complex acc{};
      for (const EntireFunction& t : n.terms) acc += t.value_at_zero();
      return acc;
    }
  }
  return {};
}

Complex EntireFunction::evaluate(Complex z, const QuadConfig& cfg) const {
  return eval_scaled(z, Complex{}, cfg);
}

Complex EntireFunction::eval_scaled(Complex z, Complex log_shift, const QuadConfig& cfg) const {
  const Node& n = *node_;
  switch (n.kind) {
    case Kind::Poly: return n.p.eval(z) * std::exp(-log_shift);
    case Kind::ExpPoly: return n.p.eval(z) * std::exp(n.q.eval(z) - log_shift);
    case Kind::PolyTimes: return n.p.eval(z) * n.children[0].eval_scaled(z, log_shift, cfg);
    case Kind::Sum: {
      Complex acc{};
      for (const EntireFunction& t : n.terms) acc += t.eval_scaled(z, log_shift, cfg);
      return acc;
    }
    case Kind::VolterraImage: {
      if (z == Complex{}) return {};
      const EntireFunction& f = n.children[0];
      return integrate_segment(
          [&](Complex w) { return f.eval_scaled(w, log_shift, cfg) * n.p.eval(w); }, Complex{}, z,
          cfg);
    }
    case Kind::ResolventImage: {
      const EntireFunction& h = n.children[0];
      const EntireFunction& hp = n.children[1];
      const Complex g1z = n.p.eval(z);
      const Complex head = h.value_at_zero() * std::exp(g1z / n.lambda - log_shift);
      Complex tail{};
      if (!hp.is_zero() && z != Complex{}) {
        tail = integrate_segment(
            [&](Complex w) {
              return hp.eval_scaled(w, log_shift - (g1z - n.p.eval(w)) / n.lambda, cfg);
            },
            Complex{}, z, cfg);
      }
      return (head + tail) / n.lambda;
    }
  }
  return {};
}

EntireFunction EntireFunction::derivative() const {
  const Node& n = *node_;
  switch (n.kind) {
    case Kind::Poly: return poly(n.p.derivative());
    case Kind::ExpPoly: return exp_poly(n.p.derivative() + n.p * n.q.derivative(), n.q);
    case Kind::VolterraImage: return poly_times(n.p, n.children[0]);
    case Kind::ResolventImage: {
      // lambda y' = g1' y + h'
      const Complex inv = 1.0 / n.lambda;
      std::vector<EntireFunction> terms;
      terms.push_back(poly_times(inv * n.p.derivative(), *this));
      terms.push_back(scale(inv, n.children[1]));
      return sum_of(std::move(terms));
    }
    case Kind::PolyTimes: {
      std::vector<EntireFunction> terms;
      terms.push_back(poly_times(n.p.derivative(), n.children[0]));
      terms.push_back(poly_times(n.p, n.children[0].derivative()));
      return sum_of(std::move(terms));
    }
    case Kind::Sum: {
      std::vector<EntireFunction> terms;
      terms.reserve(n.terms.size());
      for (const EntireFunction& t : n.terms) terms.push_back(t.derivative());
      return sum_of(std::move(terms));
    }
  }
  return {};
}

GrowthEnvelope EntireFunction::envelope() const {
  const Node& n = *node_;
  switch (n.kind) {
    case Kind::Poly: return {0.0, 0.0, std::max(0, n.p.degree()), false, 0.0};
    case Kind::ExpPoly: {
      GrowthEnvelope e;
      e.degree = std::max(0, n.p.degree());
      if (n.q.degree() >= 3) {
        e.superquadratic = true;
        e.direction = -std::arg(n.q.leading()) / n.q.degree();
        return e;
      }
      const Complex a2 = n.q.coeff(2), a1 = n.q.coeff(1);
      e.quad = std::abs(a2);
      e.lin = std::abs(a1);
      e.direction = (a2 != Complex{}) ? -std::arg(a2) / 2.0
                                      : (a1 != Complex{} ? -std::arg(a1) : 0.0);
      return e;
    }
    case Kind::VolterraImage: {
      GrowthEnvelope e = n.children[0].envelope();
      e.degree += std::max(0, n.p.degree()) + 1;
      return e;
    }
    case Kind::ResolventImage: {
      GrowthEnvelope e = n.children[0].envelope();
      const double qa = std::abs(n.p.coeff(2)) / std::abs(n.lambda);
      if (qa > e.quad) {
        e.quad = qa;
        e.direction = -std::arg(n.p.coeff(2) / n.lambda) / 2.0;
      }
      e.lin += std::abs(n.p.coeff(1)) / std::abs(n.lambda);
      e.degree += std::max(0, n.p.degree());
      if (n.p.degree() >= 3) e.superquadratic = true;
      return e;
    }
    case Kind::PolyTimes: {
      GrowthEnvelope e = n.children[0].envelope();
      e.degree += std::max(0, n.p.degree());
      return e;
    }
    case Kind::Sum: {
      GrowthEnvelope e;
      for (const EntireFunction& t : n.terms) {
        GrowthEnvelope te = t.envelope();
        if (te.superquadratic) e.superquadratic = true;
        if (te.quad > e.quad) {
          e.quad = te.quad;
          e.direction = te.direction;
        }
        e.lin = std::max(e.lin, te.lin);
        e.degree = std::max(e.degree, te.degree);
      }
      return e;
    }
  }
  return {};
}

std::string EntireFunction::describe() const {
  const Node& n = *node_;
  std::ostringstream os;
  switch (n.kind) {
    case Kind::Poly: os << "poly(deg " << n.p.degree() << ")"; break;
    case Kind::ExpPoly: os << "exppoly(deg p " << n.p.degree() << ", deg q " << n.q.degree() << ")"; break;
    case Kind::VolterraImage: os << "volterra[" << n.children[0].describe() << "]"; break;
    case Kind::ResolventImage:
      os << "resolvent(lambda=" << n.lambda << ")[" << n.children[0].describe() << "]";
      break;
    case Kind::PolyTimes: os << "poly*" << n.children[0].describe(); break;
    case Kind::Sum: os << "sum(" << n.terms.size() << " terms)"; break;
  }
  return os.str();
}

EntireFunction volterra_apply(const Poly& g, const EntireFunction& f) {
  Poly gp = g.derivative();
  if (gp.is_zero() || f.is_zero()) return EntireFunction::poly(Poly{});
  if (f.kind() == EntireFunction::Kind::Poly)
    return EntireFunction::poly((f.poly_coeffs() * gp).antiderivative());
  EntireFunction::Node n;
  n.kind = EntireFunction::Kind::VolterraImage;
  n.p = std::move(gp);
  n.children.push_back(f);
  return EntireFunction(std::make_shared<const EntireFunction::Node>(std::move(n)));
}

EntireFunction resolvent_apply(const Poly& g1, Complex lambda, const EntireFunction& h) {
  if (lambda == Complex{})
    throw std::invalid_argument(
        "resolvent_apply: lambda = 0 is never in the resolvent set (V_g is not invertible)");
  if (!finite(lambda)) throw std::invalid_argument("resolvent_apply: non-finite lambda");
  const Poly g1n = g1.drop_constant();
  const Complex inv = 1.0 / lambda;
  if (g1n.derivative().is_zero()) return scale(inv, h);
  if (h.kind() == EntireFunction::Kind::Poly && h.poly_coeffs().is_constant()) {
    const Complex h0 = h.poly_coeffs().at0();
    if (h0 == Complex{}) return EntireFunction::poly(Poly{});
    return EntireFunction::exp_poly(Poly::constant(h0 * inv), inv * g1n);
  }
  EntireFunction::Node n;
  n.kind = EntireFunction::Kind::ResolventImage;
  n.p = g1n;
  n.lambda = lambda;
  n.children.push_back(h);
  n.children.push_back(h.derivative());
  return EntireFunction(std::make_shared<const EntireFunction::Node>(std::move(n)));
}

EntireFunction poly_times(const Poly& c, const EntireFunction& f) {
  if (c.is_zero() || f.is_zero()) return EntireFunction::poly(Poly{});
  switch (f.kind()) {
    case EntireFunction::Kind::Poly: return EntireFunction::poly(c * f.poly_coeffs());
    case EntireFunction::Kind::ExpPoly:
      return EntireFunction::exp_poly(c * f.exp_prefactor(), f.exp_exponent());
    default: break;
  }
  if (f.node_->kind == EntireFunction::Kind::PolyTimes)
    return poly_times(c * f.node_->p, f.node_->children[0]);
  if (f.node_->kind == EntireFunction::Kind::Sum) {
    std::vector<EntireFunction> terms;
    terms.reserve(f.node_->terms.size());
    for (const EntireFunction& t : f.node_->terms) terms.push_back(poly_times(c, t));
    return sum_of(std::move(terms));
  }
  EntireFunction::Node n;
  n.kind = EntireFunction::Kind::PolyTimes;
  n.p = c;
  n.children.push_back(f);
  return EntireFunction(std::make_shared<const EntireFunction::Node>(std::move(n)));
}

EntireFunction scale(Complex s, const EntireFunction& f) {
  if (s == Complex{1.0, 0.0}) return f;
  return poly_times(Poly::constant(s), f);
}

EntireFunction sum_of(std::vector<EntireFunction> terms) {
  std::vector<EntireFunction> flat;
  Poly poly_acc;
  for (EntireFunction& t : terms) {
    if (t.is_zero()) continue;
    if (t.node_->kind == EntireFunction::Kind::Sum) {
      for (const EntireFunction& s : t.node_->terms) {
        if (s.kind() == EntireFunction::Kind::Poly)
          poly_acc += s.poly_coeffs();
        else
          flat.push_back(s);
      }
    } else if (t.kind() == EntireFunction::Kind::Poly) {
      poly_acc += t.poly_coeffs();
    } else {
      flat.push_back(std::move(t));
    }
  }
  if (!poly_acc.is_zero()) flat.push_back(EntireFunction::poly(std::move(poly_acc)));
  if (flat.empty()) return EntireFunction::poly(Poly{});
  if (flat.size() == 1) return flat.front();
  EntireFunction::Node n;
  n.kind = EntireFunction::Kind::Sum;
  n.terms = std::move(flat);
  return EntireFunction(std::make_shared<const EntireFunction::Node>(std::move(n)));
}

MembershipReport exp_poly_membership(const Poly& p, const Poly& q, const Weight& w) {
  constexpr double kBoundaryTol = 1e-12;
  MembershipReport rep;
  if (p.is_zero()) {
    rep.detail = "zero function";
    return rep;
  }
  const int dq = q.degree();
  if (dq <= 1) {
    rep.detail = "exponent of degree <= 1: gaussian weight dominates";
    return rep;
  }
  if (dq >= 3) {
    rep.verdict = MembershipReport::Verdict::NonMember;
    rep.direction = -std::arg(q.leading()) / dq;
    std::ostringstream os;
    os << "exponent degree " << dq << " beats the quadratic weight: weighted log-modulus grows like "
       << std::abs(q.leading()) << " r^" << dq << " along theta=" << rep.direction;
    rep.detail = os.str();
    return rep;
  }
  const Complex alpha = q.coeff(2);
  const Complex beta = q.coeff(1);
  const double margin = 0.5 - std::abs(alpha);
  const double theta0 = -std::arg(alpha) / 2.0;
  if (margin > kBoundaryTol) {
    std::ostringstream os;
    os << "quadratic coefficient modulus " << std::abs(alpha) << " < 1/2 (margin " << margin << ")";
    rep.detail = os.str();
    return rep;
  }
  if (margin < -kBoundaryTol) {
    rep.verdict = MembershipReport::Verdict::NonMember;
    rep.direction = theta0;
    std::ostringstream os;
    os << "weighted log-modulus grows like " << -margin << " r^2 along theta=" << theta0;
    rep.detail = os.str();
    return rep;
  }
  // |alpha| = 1/2: the r^2 terms cancel along theta0 and theta0 + pi.
  if (w.m >= 1) {
    rep.verdict = MembershipReport::Verdict::NonMember;
    rep.direction = theta0;
    std::ostringstream os;
    os << "boundary quadratic coefficient with m = " << w.m
       << ": weighted log-modulus grows like " << w.m << " log(1+r) along theta=" << theta0;
    rep.detail = os.str();
    return rep;
  }
  const double proj = (beta * std::polar(1.0, theta0)).real();
  if (std::abs(proj) > kBoundaryTol * std::max(1.0, std::abs(beta))) {
    const double dir = proj > 0 ? theta0 : theta0 + M_PI;
    rep.verdict = MembershipReport::Verdict::BoundaryDirectional;
    rep.direction = dir;
    std::ostringstream os;
    os << "boundary quadratic coefficient, m = 0: weighted log-modulus grows like "
       << std::abs(proj) << " r along theta=" << dir
       << " and decays along the opposite ray; raw weighted sup is infinite";
    rep.detail = os.str();
    return rep;
  }
  // Linear term has no component along the maximizing rays; the prefactor
  // degree decides.
  if (p.degree() >= 1) {
    rep.verdict = MembershipReport::Verdict::NonMember;
    rep.direction = theta0;
    std::ostringstream os;
    os << "boundary quadratic coefficient, m = 0, balanced linear term: prefactor degree "
       << p.degree() << " grows like r^" << p.degree() << " along theta=" << theta0;
    rep.detail = os.str();
    return rep;
  }
  rep.detail =
      "boundary quadratic coefficient, m = 0, balanced linear term, constant prefactor: weighted "
      "modulus is bounded along the maximizing rays and decays elsewhere";
  return rep;
}

MembershipReport membership(const EntireFunction& f, const Weight& w) {
  using Kind = EntireFunction::Kind;
  const EntireFunction::Node& n = *f.node_;
  switch (n.kind) {
    case Kind::Poly: {
      MembershipReport rep;
      rep.detail = "polynomial: gaussian weight dominates";
      return rep;
    }
    case Kind::ExpPoly: return exp_poly_membership(n.p, n.q, w);
    case Kind::PolyTimes: return membership(n.children[0], w);
    case Kind::Sum: {
      for (const EntireFunction& t : n.terms) {
        MembershipReport rep = membership(t, w);
        if (!rep.sup_finite()) return rep;  // term cancellation is not modelled
      }
      MembershipReport rep;
      rep.detail = "every summand has finite weighted sup";
      return rep;
    }
    default: break;
  }
  // Volterra and resolvent images: decide from the growth envelope.
  constexpr double kBoundaryTol = 1e-12;
  const GrowthEnvelope env = f.envelope();
  MembershipReport rep;
  if (env.superquadratic) {
    rep.verdict = MembershipReport::Verdict::NonMember;
    rep.direction = env.direction;
    rep.detail = "envelope exponent of degree >= 3";
    return rep;
  }
  const double margin = 0.5 - env.quad;
  std::ostringstream os;
  if (margin > kBoundaryTol) {
    os << "envelope quadratic coefficient " << env.quad << " < 1/2";
    rep.detail = os.str();
    return rep;
  }
  if (margin < -kBoundaryTol) {
    rep.verdict = MembershipReport::Verdict::NonMember;
    rep.direction = env.direction;
    os << "envelope log-modulus grows like " << -margin << " r^2 along theta=" << env.direction;
    rep.detail = os.str();
    return rep;
  }
  rep.verdict = MembershipReport::Verdict::BoundaryDirectional;
  rep.direction = env.direction;
  rep.detail = "envelope quadratic coefficient at the boundary 1/2; finiteness undecided";
  return rep;
}

}  // namespace fockvolt
