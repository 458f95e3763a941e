#pragma once

#include <string>
#include <vector>

#include "fockvolt/entire_function.hpp"
#include "fockvolt/quadrature.hpp"

namespace fockvolt {

struct CorpusEntry {
  std::string id;
  EntireFunction f;
};

/// The shared verification corpus: monomials up to degree 12, seeded random
/// polynomials of degree <= 8 with coefficients in the unit disk, gaussians
/// e^{alpha z^2} below the critical coefficient, and e^{beta z}.
std::vector<CorpusEntry> standard_corpus(int n_random = 30, unsigned seed = 20240901u);

struct CriterionResult {
  int index = 0;
  std::string name;
  bool passed = false;
  double elapsed_seconds = 0.0;
  double time_limit_seconds = 0.0;
  std::string detail;
};

inline constexpr int kCriterionCount = 10;

/// Runs one acceptance criterion (1-based). Every tolerance and threshold is
/// pinned in code; the result carries a per-check detail transcript.
CriterionResult run_criterion(int index, const QuadConfig& cfg, const std::string& cache_dir = {});

/// Runs all criteria; with threads > 0 the criteria run concurrently and the
/// results are assembled in index order.
std::vector<CriterionResult> run_acceptance(const QuadConfig& cfg, int threads = 0,
                                            const std::string& cache_dir = {});

std::string format_criterion_line(const CriterionResult& r);

}  // namespace fockvolt
