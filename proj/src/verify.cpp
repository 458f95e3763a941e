#include "fockvolt/verify.hpp"

#include <chrono>
#include <cmath>
#include <future>
#include <random>
#include <sstream>

#include "fockvolt/classify.hpp"
#include "fockvolt/kernel.hpp"
#include "fockvolt/norms.hpp"
#include "fockvolt/spectrum.hpp"

namespace fockvolt {

namespace {

constexpr double kPi = 3.14159265358979323846;

struct Checker {
  bool ok = true;
  std::ostringstream detail;
  void require(bool cond, const std::string& msg) {
    if (!cond) {
      ok = false;
      detail << "  FAIL " << msg << '\n';
    }
  }
  void info(const std::string& msg) { detail << "  " << msg << '\n'; }
};

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(10);
  os << v;
  return os.str();
}

double uniform01(std::mt19937& rng) {
  return static_cast<double>(rng()) * (1.0 / 4294967296.0);
}

Complex unit_disk_sample(std::mt19937& rng) {
  const double r = std::sqrt(uniform01(rng));
  const double phi = 2.0 * kPi * uniform01(rng);
  return std::polar(r, phi);
}

// ---- criterion 1: exact m = 0 kernel anchor -------------------------------

void criterion_kernel_anchor(Checker& c, const QuadConfig& cfg, const std::string& cache_dir) {
  const KernelModel model = KernelModel::build(Weight{0}, 60, cfg, cache_dir);
  const std::vector<Complex> ws = {{0, 0},      {1, 0},   {0, 2},     {-3, 0},
                                   {1.5, 1.5},  {0, -1},  {2.1, -2.1}, {3, 0}};
  const std::vector<Complex> zs = {{0.5, 0}, {1.7, 0}, {0, 3}, {-1.2, 0.9}, {2.4, -1.8}, {3, 0}};
  int rel_checked = 0, scale_checked = 0;
  double worst_rel = 0.0, worst_scale = 0.0;
  for (Complex w : ws) {
    for (Complex z : zs) {
      const Complex t = std::conj(w) * z;
      const Complex exact = std::exp(t);
      const Complex got = model.eval(w, z);
      if (t.real() >= 0.0) {
        const double rel = std::abs(got - exact) / std::abs(exact);
        worst_rel = std::max(worst_rel, rel);
        ++rel_checked;
      } else {
        // Against the series scale e^{|wz|}: the raw relative error at strongly
        // cancelling products is not attainable in double precision.
        const double scaled = std::abs(got - exact) * std::exp(-std::abs(t));
        worst_scale = std::max(worst_scale, scaled);
        ++scale_checked;
      }
    }
  }
  c.require(worst_rel <= 1e-9, "kernel eval relative error " + fmt(worst_rel) + " > 1e-9");
  c.require(worst_scale <= 1e-10,
            "kernel eval scale-relative error " + fmt(worst_scale) + " > 1e-10");
  c.info("kernel eval: " + std::to_string(rel_checked) + " well-conditioned pairs, worst rel " +
         fmt(worst_rel) + "; " + std::to_string(scale_checked) +
         " cancelling pairs, worst scale-rel " + fmt(worst_scale));
  double worst_norm = 0.0;
  for (double r = 0.0; r <= 3.0 + 1e-9; r += 0.5) {
    const Complex w = std::polar(r, 0.4 * r);
    const double rel = std::abs(model.norm_sq(w) - std::exp(r * r)) / std::exp(r * r);
    worst_norm = std::max(worst_norm, rel);
  }
  c.require(worst_norm <= 1e-9, "kernel norm_sq relative error " + fmt(worst_norm) + " > 1e-9");
  c.info("norm_sq over |w| <= 3: worst rel " + fmt(worst_norm));
}

// ---- criterion 2: kernel asymptotics ---------------------------------------

void criterion_asymptotics(Checker& c, const QuadConfig& cfg, const std::string& cache_dir) {
  std::vector<double> radii;
  for (int i = 0; i <= 12; ++i) radii.push_back(0.5 * i);
  const int N = KernelModel::default_truncation(6.0);
  for (int m = 0; m <= 2; ++m) {
    const KernelModel model = KernelModel::build(Weight{m}, N, cfg, cache_dir);
    const auto rep = model.asymptotic_check(radii);
    const double band = rep.max_ratio / rep.min_ratio;
    c.info("m = " + std::to_string(m) + ": ratio band [" + fmt(rep.min_ratio) + ", " +
           fmt(rep.max_ratio) + "], max/min = " + fmt(band));
    if (m == 0) {
      double worst = 0.0;
      for (double x : rep.ratios) worst = std::max(worst, std::abs(x - 1.0));
      c.require(worst <= 1e-9, "m = 0 ratio deviates from 1 by " + fmt(worst) + " > 1e-9");
    }
    c.require(band <= 10.0,
              "m = " + std::to_string(m) + " band max/min = " + fmt(band) +
                  " > 10 (minimum sits at w = 0 where the ratio equals 1/rho_0)");
  }
}

// ---- criterion 3: Littlewood-Paley equivalence -----------------------------

void criterion_lp_equivalence(Checker& c, const QuadConfig& cfg) {
  const auto corpus = standard_corpus();
  c.info("corpus size " + std::to_string(corpus.size()));
  double band_c = 1.0;
  std::string band_worst;
  // values[m][i] of the sup norm, for the monotonicity check
  std::vector<std::vector<double>> sup_values(3);
  for (int m = 0; m <= 2; ++m) {
    const Weight w{m};
    for (const CorpusEntry& e : corpus) {
      const NormResult a = norm_sup(e.f, w, cfg);
      const NormResult b = norm_sup_LP(e.f, w, cfg);
      sup_values[static_cast<size_t>(m)].push_back(a.value);
      const double ratio = a.value / b.value;
      if (std::max(ratio, 1.0 / ratio) > band_c) {
        band_c = std::max(ratio, 1.0 / ratio);
        band_worst = e.id + " (m=" + std::to_string(m) + ", p=inf)";
      }
      const NormResult ap = norm_p(e.f, w, 2.0, cfg);
      const NormResult bp = norm_p_LP(e.f, w, 2.0, cfg);
      const double ratio_p = ap.value / bp.value;
      if (std::max(ratio_p, 1.0 / ratio_p) > band_c) {
        band_c = std::max(ratio_p, 1.0 / ratio_p);
        band_worst = e.id + " (m=" + std::to_string(m) + ", p=2)";
      }
    }
  }
  c.require(band_c <= 100.0, "equivalence constant C = " + fmt(band_c) + " > 100");
  c.info("recorded equivalence constant C = " + fmt(band_c) + " (worst case " + band_worst + ")");

  // Monotonicity of the sup norm in m.
  double worst_mono = 0.0;
  for (size_t i = 0; i < corpus.size(); ++i)
    for (int m = 0; m < 2; ++m) {
      const double lo = sup_values[static_cast<size_t>(m)][i];
      const double hi = sup_values[static_cast<size_t>(m) + 1][i];
      if (lo > 0.0) worst_mono = std::max(worst_mono, (lo - hi) / lo);
    }
  c.require(worst_mono <= 1e-10,
            "sup norm not nondecreasing in m: worst violation " + fmt(worst_mono));
  c.info("m-monotonicity worst violation " + fmt(worst_mono));

  // Homogeneity under a pure-relative config so refinement decisions are
  // scale invariant.
  QuadConfig hcfg = cfg;
  hcfg.abs_tol = 1e-300;
  const Complex scale_c{3.0, 4.0};
  const std::vector<size_t> picks = {3, 14, 44, 48, 12};
  double worst_hom = 0.0;
  for (int m = 0; m <= 2; ++m) {
    const Weight w{m};
    for (size_t idx : picks) {
      const CorpusEntry& e = corpus[idx];
      const EntireFunction scaled = scale(scale_c, e.f);
      const double mag = std::abs(scale_c);
      const auto rel_dev = [&](double a, double b) {
        return (b == 0.0) ? std::abs(a) : std::abs(a - b) / b;
      };
      worst_hom = std::max(worst_hom, rel_dev(norm_sup(scaled, w, hcfg).value,
                                              mag * norm_sup(e.f, w, hcfg).value));
      worst_hom = std::max(worst_hom, rel_dev(norm_sup_LP(scaled, w, hcfg).value,
                                              mag * norm_sup_LP(e.f, w, hcfg).value));
      worst_hom = std::max(worst_hom, rel_dev(norm_p(scaled, w, 2.0, hcfg).value,
                                              mag * norm_p(e.f, w, 2.0, hcfg).value));
      worst_hom = std::max(worst_hom, rel_dev(norm_p_LP(scaled, w, 2.0, hcfg).value,
                                              mag * norm_p_LP(e.f, w, 2.0, hcfg).value));
    }
  }
  c.require(worst_hom <= 1e-10, "homogeneity violation " + fmt(worst_hom) + " > 1e-10");
  c.info("homogeneity worst relative deviation " + fmt(worst_hom));
}

// ---- criterion 4: boundedness / compactness classifier ----------------------

void criterion_classifier(Checker& c, const QuadConfig& /*cfg*/) {
  struct Case {
    std::string id;
    Poly g;
    bool bounded, compact;
  };
  const std::vector<Case> cases = {
      {"1", Poly::constant(1.0), true, true},
      {"z", Poly::identity(), true, true},
      {"z^2", Poly::monomial(2), true, false},
      {"z^3", Poly::monomial(3), false, false},
      {"z^4", Poly::monomial(4), false, false},
      {"3z^2+z+7", Poly{{Complex{7, 0}, Complex{1, 0}, Complex{3, 0}}}, true, false},
      {"iz^2", Poly::monomial(2, Complex{0, 1}), true, false},
  };
  for (const Case& k : cases) {
    const ClassifierVerdict v = classify_into_sup(k.g, Weight{0}, 2.0);
    c.require(v.bounded == k.bounded && v.compact == k.compact,
              "verdict mismatch for g = " + k.id);
    const Poly gp = k.g.derivative();
    if (!gp.is_zero()) {
      const double expected = gp.degree() - 1.0;
      c.require(std::abs(v.growth_exponent - expected) <= 0.1,
                "growth exponent for g = " + k.id + " is " + fmt(v.growth_exponent) +
                    ", expected " + fmt(expected) + " +- 0.1");
      c.info("g = " + k.id + ": exponent " + fmt(v.growth_exponent) + " (target " +
             fmt(expected) + ")");
    }
  }
  const ClassifierVerdict vsq = classify_into_sup(Poly::monomial(2), Weight{0}, 2.0);
  c.require(std::abs(vsq.limit_ratio - 2.0) <= 0.05 * 2.0,
            "B_{z^2}(100) = " + fmt(vsq.limit_ratio) + " not within 5% of 2");
  const ClassifierVerdict vz = classify_into_sup(Poly::identity(), Weight{0}, 2.0);
  c.require(vz.limit_ratio < 0.02, "B_z(100) = " + fmt(vz.limit_ratio) + " >= 0.02");
  c.info("B_{z^2}(100) = " + fmt(vsq.limit_ratio) + ", B_z(100) = " + fmt(vz.limit_ratio));
}

// ---- criterion 5: kernel-test lower bound ----------------------------------

void criterion_kernel_test(Checker& c, const QuadConfig& cfg, const std::string& cache_dir) {
  const KernelModel model =
      KernelModel::build(Weight{0}, KernelModel::default_truncation(8.0), cfg, cache_dir);
  const Weight w0{0};
  auto norm_of = [&](const Poly& g, double radius) {
    const EntireFunction xi = EntireFunction::poly(model.normalized_kernel(Complex{radius, 0.0}));
    const NormResult n = norm_sup_LP(volterra_apply(g, xi), w0, cfg);
    return n.value;
  };
  // Thresholds are stated for the squared norms (both sub-criteria match them
  // exactly on that scale; first powers run at about half the stated factors).
  const Poly cubic = Poly::monomial(3);
  const double c2 = norm_of(cubic, 2.0), c8 = norm_of(cubic, 8.0);
  c.require(c8 * c8 > 10.0 * (c2 * c2),
            "g = z^3: squared growth " + fmt(c8 * c8 / (c2 * c2)) + " <= 10");
  c.info("g = z^3: ||V xi||(2) = " + fmt(c2) + ", ||V xi||(8) = " + fmt(c8) +
         ", squared ratio " + fmt((c8 * c8) / (c2 * c2)));
  const Poly lin = Poly::identity();
  std::vector<double> seq;
  for (double r = 2.0; r <= 8.0 + 1e-9; r += 1.0) seq.push_back(norm_of(lin, r));
  bool decreasing = true;
  for (size_t i = 1; i < seq.size(); ++i) decreasing = decreasing && seq[i] < seq[i - 1];
  c.require(decreasing, "g = z: ||V xi_w|| is not decreasing in |w|");
  const double last_sq = seq.back() * seq.back();
  c.require(last_sq < 0.05, "g = z: squared value at |w| = 8 is " + fmt(last_sq) + " >= 0.05");
  c.info("g = z: values " + fmt(seq.front()) + " ... " + fmt(seq.back()) + ", squared tail " +
         fmt(last_sq));
}

// ---- criterion 6: integrability witness ------------------------------------

void criterion_integrability(Checker& c, const QuadConfig& cfg) {
  const ClassifierVerdict conv = classify_from_sup(Poly::identity(), Weight{0}, 3.0, cfg);
  c.require(conv.bounded && conv.compact, "g = z, p = 3 should be bounded and compact");
  c.require(!conv.integral_divergent, "g = z, p = 3 witness flagged divergent");
  const double dev = std::abs(conv.fitted_limit - kPi) / kPi;
  c.require(dev <= 0.01, "fitted limit " + fmt(conv.fitted_limit) + " deviates from pi by " +
                             fmt(dev) + " > 1%");
  c.info("p = 3 truncated integrals converge: fitted limit " + fmt(conv.fitted_limit) +
         " (pi = " + fmt(kPi) + ", rel dev " + fmt(dev) + ")");

  const ClassifierVerdict div = classify_from_sup(Poly::identity(), Weight{0}, 2.0, cfg);
  c.require(!div.bounded && div.integral_divergent, "g = z, p = 2 should be flagged divergent");
  const double slope_dev = std::abs(div.fitted_slope - 2.0 * kPi) / (2.0 * kPi);
  c.require(slope_dev <= 0.05, "log-slope " + fmt(div.fitted_slope) + " deviates from 2 pi by " +
                                   fmt(slope_dev) + " > 5%");
  c.info("p = 2 truncated integrals grow like 2 pi log R: slope " + fmt(div.fitted_slope) +
         " (rel dev " + fmt(slope_dev) + "), flagged divergent");
}

// ---- criterion 7: spectrum --------------------------------------------------

void criterion_spectrum(Checker& c, const QuadConfig& /*cfg*/) {
  const Poly gsq = Poly::monomial(2);
  const SpectrumDescription d = spectrum_of(gsq, Weight{0});
  c.require(d.radius == 2.0, "spectrum radius of z^2 is " + fmt(d.radius) + ", expected 2");
  for (int m = 0; m <= 1; ++m) {
    const Weight w{m};
    for (double lam : {0.5, 1.0, 1.5}) {
      const SpectrumPointReport r = in_spectrum(gsq, w, Complex{lam, 0});
      c.require(r.status == SpectralStatus::InSpectrum,
                "lambda = " + fmt(lam) + ", m = " + std::to_string(m) + " should be spectral");
      c.require(!r.raw_membership.sup_finite() && r.cross_check_ok,
                "membership predicate should say NonMember at lambda = " + fmt(lam) +
                    ", m = " + std::to_string(m));
    }
    for (double lam : {2.5, 3.0, 10.0}) {
      const SpectrumPointReport r = in_spectrum(gsq, w, Complex{lam, 0});
      c.require(r.status == SpectralStatus::Resolvent,
                "lambda = " + fmt(lam) + ", m = " + std::to_string(m) + " should be resolvent");
      c.require(r.raw_membership.sup_finite() && r.cross_check_ok,
                "membership predicate should say Member at lambda = " + fmt(lam) +
                    ", m = " + std::to_string(m));
    }
  }
  const SpectrumPointReport b = in_spectrum(gsq, Weight{0}, Complex{2.0, 0});
  c.require(b.status == SpectralStatus::Boundary, "lambda = 2 should report Boundary");
  c.require(b.raw_membership.verdict == MembershipReport::Verdict::Member,
            "raw predicate at the boundary (m = 0, b = 0) should be Member");
  c.info("boundary lambda = 2, m = 0: raw predicate Member, closure puts it in the spectrum");
}

// ---- criterion 8: resolvent blow-up and boundedness -------------------------

void criterion_resolvent(Checker& c, const QuadConfig& cfg) {
  const Poly gsq = Poly::monomial(2);
  const Weight w1{1};
  const EntireFunction one = EntireFunction::constant(1.0);

  std::vector<double> values;
  for (double eps : {0.5, 0.25, 0.125, 0.0625}) {
    const Complex lam{2.0 + eps, 0.0};
    values.push_back(norm_sup_LP(resolvent_apply(gsq, lam, one), w1, cfg).value);
  }
  std::ostringstream vs;
  for (double v : values) vs << fmt(v) << ' ';
  c.info("||R_{2+eps} 1|| for eps = 0.5, 0.25, 0.125, 0.0625: " + vs.str());
  for (size_t i = 1; i < values.size(); ++i) {
    c.require(values[i] > values[i - 1], "resolvent norm not strictly increasing toward the disk");
    c.require(values[i] / values[i - 1] >= 1.2,
              "successive growth ratio " + fmt(values[i] / values[i - 1]) + " < 1.2");
  }

  const auto testset = default_spectral_testset(cfg);
  const std::vector<Complex> lams = {{2.5, 0}, {2.25, 0}, {2.125, 0}, {2.0625, 0}, {10, 0}, {20, 0}};
  const ResolventScan scan = resolvent_norm_scan(gsq, w1, {{10, 0}, {20, 0}}, testset, cfg);
  const double l10 = scan.points[0].lower_bound, l20 = scan.points[1].lower_bound;
  c.require(l10 <= 1.5 * (2.0 * l20), "lower bound at |lambda| = 10 (" + fmt(l10) +
                                          ") exceeds 1.5 x 2 x bound at 20 (" + fmt(l20) + ")");
  c.info("test-set lower bounds: L(10) = " + fmt(l10) + ", L(20) = " + fmt(l20));

  // Defect identity at every scan point.
  const QuadConfig tight = cfg.tightened(1e-10, 1e-14);
  const std::vector<Complex> zs = {{0.5, 0.2}, {-1.0, 0.8}, {0.0, 1.6}};
  double worst = 0.0;
  for (Complex lam : lams) {
    for (const EntireFunction& h : testset) {
      const EntireFunction f = resolvent_apply(gsq, lam, h);
      for (Complex z : zs) {
        const double defect = resolvent_defect(gsq, lam, h, f, z, tight);
        const double bound = 1e-8 * (1.0 + std::abs(h.evaluate(z, tight)));
        worst = std::max(worst, defect / bound);
        if (defect > bound) {
          c.require(false, "defect " + fmt(defect) + " at lambda = " + fmt(lam.real()) +
                               ", z = (" + fmt(z.real()) + "," + fmt(z.imag()) + ")");
        }
      }
    }
  }
  c.info("defect identity: worst defect/tolerance ratio " + fmt(worst));
}

// ---- criterion 9: uniform bound for normalized kernels ----------------------

void criterion_normalized_kernels(Checker& c, const QuadConfig& cfg,
                                  const std::string& cache_dir) {
  const int N = KernelModel::default_truncation(6.0);
  double recorded = 0.0;
  std::string worst;
  for (int m = 0; m <= 2; ++m) {
    const Weight w{m};
    const KernelModel model = KernelModel::build(w, N, cfg, cache_dir);
    for (double r = 0.0; r <= 6.0 + 1e-9; r += 1.0) {
      const EntireFunction xi =
          EntireFunction::poly(model.normalized_kernel(std::polar(r, 0.3 * r)));
      for (double p : {1.0, 2.0, 4.0}) {
        const NormResult n = norm_p(xi, w, p, cfg);
        if (n.value > recorded) {
          recorded = n.value;
          worst = "m=" + std::to_string(m) + " |w|=" + fmt(r) + " p=" + fmt(p);
        }
      }
      const NormResult s = norm_sup(xi, w, cfg);
      if (s.value > recorded) {
        recorded = s.value;
        worst = "m=" + std::to_string(m) + " |w|=" + fmt(r) + " p=inf";
      }
    }
  }
  c.require(recorded <= 100.0, "normalized kernel norms reach " + fmt(recorded) + " > 100");
  c.info("recorded uniform bound " + fmt(recorded) + " (worst case " + worst + ")");
}

// ---- criterion 10: smoothing inequality -------------------------------------

void criterion_smoothing(Checker& c, const QuadConfig& cfg) {
  const Poly gsq = Poly::monomial(2);
  std::vector<CorpusEntry> subset;
  for (int n = 0; n <= 6; ++n)
    subset.push_back({"z^" + std::to_string(n), EntireFunction::poly(Poly::monomial(n))});
  subset.push_back({"1+2z-z^3", EntireFunction::poly(Poly{{Complex{1, 0}, Complex{2, 0},
                                                           Complex{0, 0}, Complex{-1, 0}}})});
  subset.push_back(
      {"exp(z)", EntireFunction::exp_poly(Poly::constant(1.0), Poly::identity())});
  double recorded = 0.0;
  std::string worst;
  for (double lam : {2.5, 3.0, 10.0}) {
    for (int m = 0; m <= 2; ++m) {
      for (const CorpusEntry& e : subset) {
        const EquivalenceReport rep =
            smoothing_check(gsq, Complex{lam, 0.0}, e.f, Weight{m}, cfg, e.id);
        if (rep.ratio > recorded) {
          recorded = rep.ratio;
          worst = e.id + " (lambda=" + fmt(lam) + ", m=" + std::to_string(m) + ")";
        }
      }
    }
  }
  c.require(recorded <= 100.0, "smoothing constant C = " + fmt(recorded) + " > 100");
  c.info("recorded smoothing constant C = " + fmt(recorded) + " (worst case " + worst + ")");
}

struct CriterionSpec {
  const char* name;
  double time_limit;
  void (*run)(Checker&, const QuadConfig&, const std::string&);
};

void run_c3(Checker& c, const QuadConfig& cfg, const std::string&) { criterion_lp_equivalence(c, cfg); }
void run_c4(Checker& c, const QuadConfig& cfg, const std::string&) { criterion_classifier(c, cfg); }
void run_c6(Checker& c, const QuadConfig& cfg, const std::string&) { criterion_integrability(c, cfg); }
void run_c7(Checker& c, const QuadConfig& cfg, const std::string&) { criterion_spectrum(c, cfg); }
void run_c8(Checker& c, const QuadConfig& cfg, const std::string&) { criterion_resolvent(c, cfg); }
void run_c10(Checker& c, const QuadConfig& cfg, const std::string&) { criterion_smoothing(c, cfg); }

const CriterionSpec kCriteria[kCriterionCount] = {
    {"exact m=0 kernel anchor", 5.0, criterion_kernel_anchor},
    {"kernel diagonal asymptotics", 30.0, criterion_asymptotics},
    {"Littlewood-Paley equivalence over the corpus", 120.0, run_c3},
    {"boundedness/compactness classifier", 30.0, run_c4},
    {"kernel-test lower bound", 60.0, criterion_kernel_test},
    {"integrability witness", 10.0, run_c6},
    {"spectral disk and membership predicate", 30.0, run_c7},
    {"resolvent blow-up and boundedness", 120.0, run_c8},
    {"uniform normalized-kernel bound", 120.0, criterion_normalized_kernels},
    {"smoothing inequality constant", 60.0, run_c10},
};

}  // namespace

std::vector<CorpusEntry> standard_corpus(int n_random, unsigned seed) {
  std::vector<CorpusEntry> corpus;
  for (int n = 0; n <= 12; ++n)
    corpus.push_back({"z^" + std::to_string(n), EntireFunction::poly(Poly::monomial(n))});
  std::mt19937 rng(seed);
  for (int k = 0; k < n_random; ++k) {
    const int deg = 1 + (k * 5) % 8;
    std::vector<Complex> coeffs;
    coeffs.reserve(static_cast<size_t>(deg) + 1);
    for (int j = 0; j <= deg; ++j) coeffs.push_back(unit_disk_sample(rng));
    corpus.push_back({"rand_poly_" + std::to_string(k), EntireFunction::poly(Poly{coeffs})});
  }
  for (double alpha : {0.0, 0.1, 0.25, 0.4, 0.45})
    corpus.push_back({"exp(" + fmt(alpha) + "z^2)",
                      EntireFunction::exp_poly(Poly::constant(1.0), Poly::monomial(2, alpha))});
  corpus.push_back(
      {"exp(z)", EntireFunction::exp_poly(Poly::constant(1.0), Poly::identity())});
  corpus.push_back({"exp((2+i)z)", EntireFunction::exp_poly(Poly::constant(1.0),
                                                            Poly::monomial(1, Complex{2, 1}))});
  return corpus;
}

CriterionResult run_criterion(int index, const QuadConfig& cfg, const std::string& cache_dir) {
  if (index < 1 || index > kCriterionCount)
    throw std::invalid_argument("run_criterion: index out of range");
  const CriterionSpec& spec = kCriteria[index - 1];
  CriterionResult res;
  res.index = index;
  res.name = spec.name;
  res.time_limit_seconds = spec.time_limit;
  Checker checker;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    spec.run(checker, cfg, cache_dir);
  } catch (const std::exception& e) {
    checker.ok = false;
    checker.detail << "  FAIL unexpected exception: " << e.what() << '\n';
  }
  res.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (res.elapsed_seconds >= spec.time_limit) {
    checker.ok = false;
    checker.detail << "  FAIL runtime " << res.elapsed_seconds << " s exceeds the "
                   << spec.time_limit << " s budget\n";
  }
  res.passed = checker.ok;
  res.detail = checker.detail.str();
  return res;
}

std::vector<CriterionResult> run_acceptance(const QuadConfig& cfg, int threads,
                                            const std::string& cache_dir) {
  std::vector<CriterionResult> out(kCriterionCount);
  if (threads <= 0) {
    for (int i = 1; i <= kCriterionCount; ++i) out[static_cast<size_t>(i - 1)] =
        run_criterion(i, cfg, cache_dir);
    return out;
  }
  std::vector<std::future<CriterionResult>> futures;
  futures.reserve(kCriterionCount);
  for (int i = 1; i <= kCriterionCount; ++i)
    futures.push_back(std::async(std::launch::async,
                                 [i, &cfg, &cache_dir] { return run_criterion(i, cfg, cache_dir); }));
  for (int i = 0; i < kCriterionCount; ++i) out[static_cast<size_t>(i)] = futures[static_cast<size_t>(i)].get();
  return out;
}

std::string format_criterion_line(const CriterionResult& r) {
  std::ostringstream os;
  os << '[' << (r.index < 10 ? " " : "") << r.index << "] " << (r.passed ? "PASS" : "FAIL") << ' '
     << r.name << " (" << fmt(r.elapsed_seconds) << " s < " << fmt(r.time_limit_seconds) << " s)";
  return os.str();
}

}  // namespace fockvolt
