#pragma once

#include "fockvolt/entire_function.hpp"
#include "fockvolt/quadrature.hpp"
#include "fockvolt/weight.hpp"

namespace fockvolt {

enum class SupWeight {
  Plain,            // |f(z)| e^{-psi_m(z)}
  LittlewoodPaley,  // |f(z)| e^{-psi_m(z)} / D_m(|z|)
};

/// Global weighted sup over the plane. The finite/infinite decision is made
/// symbolically first (quadrature never "discovers" divergence); the finite
/// branch runs a polar coarse grid, per-direction golden-section refinement
/// in the radius, and a local angular refinement around the best direction.
/// Deterministic: fixed grids, sequential reductions.
NormResult sup_search(const EntireFunction& f, const Weight& w, const QuadConfig& cfg,
                      SupWeight form = SupWeight::Plain);

}  // namespace fockvolt
