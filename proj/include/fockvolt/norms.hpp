#pragma once

#include <string>
#include <string_view>

#include "fockvolt/entire_function.hpp"
#include "fockvolt/quadrature.hpp"
#include "fockvolt/sup_search.hpp"
#include "fockvolt/weight.hpp"

namespace fockvolt {

/// Two-sided comparison of a norm functional against its derivative-based
/// equivalent, for one function.
struct EquivalenceReport {
  double lhs = 0.0;
  double rhs = 0.0;
  double ratio = 0.0;
  std::string function_id;
  int m = 0;
  double p = 0.0;  // infinity() for sup norms
};

/// sup |f(z)| e^{-psi_m(z)}.
NormResult norm_sup(const EntireFunction& f, const Weight& w, const QuadConfig& cfg);

/// ( int |f|^p e^{-p psi_m} dA )^{1/p}, 0 < p < infinity. Divergence is
/// decided symbolically before any quadrature runs.
NormResult norm_p(const EntireFunction& f, const Weight& w, double p, const QuadConfig& cfg);

/// |f(0)| + sup |f'(z)| e^{-psi_m(z)} / D_m(|z|), with f' taken symbolically;
/// Volterra images need no quadrature at all on this route.
NormResult norm_sup_LP(const EntireFunction& f, const Weight& w, const QuadConfig& cfg);

/// ( |f(0)|^p + int |f'|^p e^{-p psi_m} / D_m^p dA )^{1/p}.
NormResult norm_p_LP(const EntireFunction& f, const Weight& w, double p, const QuadConfig& cfg);

/// For quadratic g and |lambda| > 2|a|: compares
///   lhs = sup |e^{g/lambda} f| e^{-psi_m}
///   rhs = |f(0)| + sup |e^{g/lambda}| |f'| e^{-psi_m} / D_m
/// Supports polynomial and exp-polynomial f (the closure of the family under
/// multiplication by e^{g/lambda}).
EquivalenceReport smoothing_check(const Poly& g, Complex lambda, const EntireFunction& f,
                               const Weight& w, const QuadConfig& cfg, std::string_view id = {});

}  // namespace fockvolt
