// Command line front end: norm, apply, classify, kernel, spectrum, resolvent,
// verify. Structured results go to stdout or --out as JSON; scan grids can
// additionally be written as CSV. Exit codes: 0 success, 1 domain/input
// error, 2 numeric non-convergence.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "fockvolt/classify.hpp"
#include "fockvolt/function_io.hpp"
#include "fockvolt/kernel.hpp"
#include "fockvolt/norms.hpp"
#include "fockvolt/spectrum.hpp"
#include "fockvolt/verify.hpp"

using namespace fockvolt;
using nlohmann::ordered_json;

namespace {

struct CommonOpts {
  std::string config_file;
  std::string out_file;
  std::string csv_file;
  std::string cache_dir;
  int threads = 0;
  // flag-level config overrides (applied over file over defaults)
  std::optional<double> rel_tol, abs_tol, max_radius;
  std::optional<int> angular_samples, radial_panels, max_refinements;
};

QuadConfig effective_config(const CommonOpts& o) {
  QuadConfig cfg;
  if (!o.config_file.empty()) {
    std::ifstream in(o.config_file);
    if (!in) throw IoError("cannot open config file '" + o.config_file + "'", "$");
    nlohmann::json j;
    try {
      in >> j;
    } catch (const nlohmann::json::exception& e) {
      throw IoError(std::string("invalid JSON: ") + e.what(), "$");
    }
    cfg = config_from_json(j);
  }
  if (o.rel_tol) cfg.rel_tol = *o.rel_tol;
  if (o.abs_tol) cfg.abs_tol = *o.abs_tol;
  if (o.max_radius) cfg.max_radius = *o.max_radius;
  if (o.angular_samples) cfg.angular_samples = *o.angular_samples;
  if (o.radial_panels) cfg.radial_panels = *o.radial_panels;
  if (o.max_refinements) cfg.max_refinements = *o.max_refinements;
  cfg.validate();
  return cfg;
}

std::string cache_dir_of(const CommonOpts& o) {
  if (!o.cache_dir.empty()) return o.cache_dir;
  if (const char* env = std::getenv("FOCKVOLT_CACHE_DIR")) return env;
  return {};
}

Complex parse_complex_flag(const std::string& s) {
  // "re" or "re,im"
  const auto comma = s.find(',');
  try {
    if (comma == std::string::npos) return Complex{std::stod(s), 0.0};
    return Complex{std::stod(s.substr(0, comma)), std::stod(s.substr(comma + 1))};
  } catch (...) {
    throw IoError("expected RE or RE,IM", "--flag '" + s + "'");
  }
}

ordered_json norm_result_json(const NormResult& r) {
  ordered_json j;
  if (r.finite()) {
    j["kind"] = "finite";
    j["value"] = r.value;
    j["argmax"] = {r.argmax.real(), r.argmax.imag()};
    j["err"] = r.err_estimate;
  } else {
    j["kind"] = "infinite";
    j["direction"] = r.direction;
    j["growth"] = r.growth_report;
  }
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

ordered_json membership_json(const MembershipReport& rep) {
  const char* v = rep.verdict == MembershipReport::Verdict::Member
                      ? "member"
                      : (rep.verdict == MembershipReport::Verdict::NonMember
                             ? "nonmember"
                             : "boundary-directional");
  return ordered_json{{"verdict", v}, {"direction", rep.direction}, {"detail", rep.detail}};
}

const char* status_name(SpectralStatus s) {
  switch (s) {
    case SpectralStatus::InSpectrum: return "spectrum";
    case SpectralStatus::Resolvent: return "resolvent-set";
    case SpectralStatus::Boundary: return "boundary";
  }
  return "?";
}

// Every report carries the command echo, the effective config, and timings.
ordered_json make_report(const std::string& command, const CommonOpts& o, const QuadConfig& cfg,
                         ordered_json results, double elapsed) {
  ordered_json rep;
  rep["command"] = command;
  rep["config"] = ordered_json::parse(config_to_json(cfg).dump());
  rep["threads"] = o.threads;
  rep["results"] = std::move(results);
  rep["timings"] = ordered_json{{"elapsed_seconds", elapsed}};
  return rep;
}

void emit_report(const CommonOpts& o, const ordered_json& rep) {
  if (!o.out_file.empty()) {
    std::ofstream out(o.out_file);
    out << rep.dump(2) << '\n';
  }
  std::cout << rep.dump(2) << '\n';
}

void maybe_write_csv(const CommonOpts& o, const std::vector<std::string>& header,
                     const std::vector<std::vector<std::string>>& rows) {
  if (o.csv_file.empty()) return;
  std::ofstream out(o.csv_file);
  write_csv(out, header, rows);
}

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

void add_common(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--config", o.config_file, "JSON file with quadrature settings");
  cmd->add_option("--out", o.out_file, "write the JSON report to this file");
  cmd->add_option("--csv", o.csv_file, "write grid results as CSV");
  cmd->add_option("--cache-dir", o.cache_dir,
                  "kernel moment cache directory (defaults to FOCKVOLT_CACHE_DIR)");
  cmd->add_option("--threads", o.threads, "worker threads; 0 means sequential");
  cmd->add_option("--rel-tol", o.rel_tol, "relative quadrature tolerance");
  cmd->add_option("--abs-tol", o.abs_tol, "absolute quadrature tolerance");
  cmd->add_option("--max-radius", o.max_radius, "truncation radius cap");
  cmd->add_option("--angular-samples", o.angular_samples, "initial angular sample count");
  cmd->add_option("--radial-panels", o.radial_panels, "initial radial panel count");
  cmd->add_option("--max-refinements", o.max_refinements, "adaptive refinement cap");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"numerical laboratory for Volterra-type integral operators on Fock-Sobolev spaces"};
  app.require_subcommand(1);

  std::string command_echo;
  {
    std::ostringstream os;
    for (int i = 0; i < argc; ++i) os << (i ? " " : "") << argv[i];
    command_echo = os.str();
  }

  // ---- norm ----
  auto* norm_cmd = app.add_subcommand("norm", "weighted norm of a function");
  CommonOpts norm_o;
  add_common(norm_cmd, norm_o);
  int norm_m = 0;
  std::string norm_p_s = "inf";
  std::string norm_lp = "direct";
  std::string norm_func;
  bool norm_clamped = false;
  norm_cmd->add_option("--m", norm_m, "Sobolev order")->required();
  norm_cmd->add_option("--p", norm_p_s, "exponent: a positive number or 'inf'");
  norm_cmd->add_option("--lp", norm_lp, "route: direct or paley")
      ->check(CLI::IsMember({"direct", "paley"}));
  norm_cmd->add_option("--func", norm_func, "function spec file")->required();
  norm_cmd->add_flag("--clamped-normalizer", norm_clamped,
                     "use max(0.25, 1+psi') instead of 1+r (sensitivity mode)");

  // ---- apply ----
  auto* apply_cmd = app.add_subcommand("apply", "apply the Volterra operator V_g");
  CommonOpts apply_o;
  add_common(apply_cmd, apply_o);
  std::string apply_g, apply_func;
  std::vector<std::string> apply_at;
  apply_cmd->add_option("--g", apply_g, "symbol file (polynomial)")->required();
  apply_cmd->add_option("--func", apply_func, "function spec file")->required();
  apply_cmd->add_option("--at", apply_at, "evaluation points RE,IM (repeatable)");

  // ---- classify ----
  auto* cls_cmd = app.add_subcommand("classify", "boundedness/compactness verdict for V_g");
  CommonOpts cls_o;
  add_common(cls_cmd, cls_o);
  std::string cls_g, cls_dir = "into-sup";
  int cls_m = 0;
  double cls_p = 2.0;
  cls_cmd->add_option("--g", cls_g, "symbol file (polynomial)")->required();
  cls_cmd->add_option("--m", cls_m, "Sobolev order");
  cls_cmd->add_option("--p", cls_p, "exponent of the companion space");
  cls_cmd->add_option("--direction", cls_dir, "into-sup or from-sup")
      ->check(CLI::IsMember({"into-sup", "from-sup"}));

  // ---- kernel ----
  auto* ker_cmd = app.add_subcommand("kernel", "reproducing kernel model queries");
  CommonOpts ker_o;
  add_common(ker_cmd, ker_o);
  int ker_m = 0, ker_N = 0;
  std::string ker_w = "0,0", ker_z, ker_check;
  ker_cmd->add_option("--m", ker_m, "Sobolev order")->required();
  ker_cmd->add_option("--w", ker_w, "kernel base point RE,IM");
  ker_cmd->add_option("--z", ker_z, "evaluation point RE,IM");
  ker_cmd->add_option("--N", ker_N, "series truncation (default from |w|)");
  ker_cmd->add_option("--check", ker_check, "asymptotic, normb or reproducing")
      ->check(CLI::IsMember({"asymptotic", "normb", "reproducing"}));

  // ---- spectrum ----
  auto* spec_cmd = app.add_subcommand("spectrum", "spectral disk and resolvent scan");
  CommonOpts spec_o;
  add_common(spec_cmd, spec_o);
  std::string spec_g, spec_scan, spec_testset = "default";
  int spec_m = 0;
  spec_cmd->add_option("--g", spec_g, "symbol file (polynomial)")->required();
  spec_cmd->add_option("--m", spec_m, "Sobolev order");
  spec_cmd->add_option("--scan", spec_scan, "RMIN:RMAX:STEPS scan along the positive real axis");
  spec_cmd->add_option("--testset", spec_testset, "test set for lower bounds");

  // ---- resolvent ----
  auto* res_cmd = app.add_subcommand("resolvent", "apply (lambda I - V_g)^{-1}");
  CommonOpts res_o;
  add_common(res_cmd, res_o);
  std::string res_g, res_h, res_lambda;
  std::vector<std::string> res_at;
  res_cmd->add_option("--g", res_g, "symbol file (polynomial)")->required();
  res_cmd->add_option("--lambda", res_lambda, "resolvent parameter RE,IM")->required();
  res_cmd->add_option("--rhs", res_h, "right-hand side spec file")->required();
  res_cmd->add_option("--at", res_at, "evaluation points RE,IM (repeatable)");

  // ---- verify ----
  auto* ver_cmd = app.add_subcommand("verify", "run the acceptance suite");
  CommonOpts ver_o;
  add_common(ver_cmd, ver_o);
  std::string ver_suite = "all";
  ver_cmd->add_option("--suite", ver_suite, "'all' or a criterion number 1..10");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  const auto t0 = std::chrono::steady_clock::now();
  auto elapsed = [&] {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  };

  try {
    if (norm_cmd->parsed()) {
      const QuadConfig cfg = effective_config(norm_o);
      const Weight w{norm_m, norm_clamped ? NormalizerMode::ClampedRaw : NormalizerMode::OnePlusR};
      const EntireFunction f = load_function(norm_func);
      NormResult r;
      if (norm_p_s == "inf") {
        r = (norm_lp == "direct") ? norm_sup(f, w, cfg) : norm_sup_LP(f, w, cfg);
      } else {
        const double p = std::stod(norm_p_s);
        r = (norm_lp == "direct") ? norm_p(f, w, p, cfg) : norm_p_LP(f, w, p, cfg);
      }
      emit_report(norm_o, make_report(command_echo, norm_o, cfg, norm_result_json(r), elapsed()));
      return 0;
    }

    if (apply_cmd->parsed()) {
      const QuadConfig cfg = effective_config(apply_o);
      const EntireFunction g = load_function(apply_g);
      if (g.kind() != EntireFunction::Kind::Poly)
        throw IoError("the symbol g must be a polynomial", "$.type");
      const EntireFunction f = load_function(apply_func);
      const EntireFunction image = volterra_apply(g.poly_coeffs(), f);
      ordered_json results;
      results["image"] = ordered_json::parse(function_to_json(image).dump());
      if (!apply_at.empty()) {
        ordered_json evals = ordered_json::array();
        for (const std::string& s : apply_at) {
          const Complex z = parse_complex_flag(s);
          const Complex v = image.evaluate(z, cfg);
          evals.push_back({{"z", {z.real(), z.imag()}}, {"value", {v.real(), v.imag()}}});
        }
        results["evaluations"] = evals;
      }
      emit_report(apply_o, make_report(command_echo, apply_o, cfg, results, elapsed()));
      return 0;
    }

    if (cls_cmd->parsed()) {
      const QuadConfig cfg = effective_config(cls_o);
      const EntireFunction g = load_function(cls_g);
      if (g.kind() != EntireFunction::Kind::Poly)
        throw IoError("the symbol g must be a polynomial", "$.type");
      const Weight w{cls_m};
      const ClassifierVerdict v = (cls_dir == "into-sup")
                                      ? classify_into_sup(g.poly_coeffs(), w, cls_p)
                                      : classify_from_sup(g.poly_coeffs(), w, cls_p, cfg);
      ordered_json results;
      results["direction"] = cls_dir;
      results["bounded"] = v.bounded;
      results["compact"] = v.compact;
      results["reason"] = v.reason;
      if (cls_dir == "into-sup") {
        results["sup_ratio"] = v.sup_ratio;
        if (std::isfinite(v.growth_exponent)) results["growth_exponent"] = v.growth_exponent;
        results["limit_ratio"] = v.limit_ratio;
        results["ring_radii"] = v.ring_radii;
        results["ring_sups"] = v.ring_sups;
      } else {
        results["integral_divergent"] = v.integral_divergent;
        results["disk_radii"] = v.disk_radii;
        results["disk_integrals"] = v.disk_integrals;
        results["fitted_limit"] = v.fitted_limit;
        results["fitted_slope"] = v.fitted_slope;
      }
      std::vector<std::vector<std::string>> rows;
      if (cls_dir == "into-sup")
        for (size_t i = 0; i < v.ring_radii.size(); ++i)
          rows.push_back({fmt(v.ring_radii[i]), fmt(v.ring_sups[i])});
      else
        for (size_t i = 0; i < v.disk_radii.size(); ++i)
          rows.push_back({fmt(v.disk_radii[i]), fmt(v.disk_integrals[i])});
      maybe_write_csv(cls_o, {"radius", "value"}, rows);
      emit_report(cls_o, make_report(command_echo, cls_o, cfg, results, elapsed()));
      return 0;
    }

    if (ker_cmd->parsed()) {
      const QuadConfig cfg = effective_config(ker_o);
      const Weight w{ker_m};
      const Complex wpt = parse_complex_flag(ker_w);
      const int N = ker_N > 0 ? ker_N : KernelModel::default_truncation(std::max(6.0, std::abs(wpt)));
      const KernelModel model = KernelModel::build(w, N, cfg, cache_dir_of(ker_o));
      ordered_json results;
      results["m"] = ker_m;
      results["N"] = N;
      results["norm_sq"] = model.norm_sq(wpt);
      if (!ker_z.empty()) {
        const Complex z = parse_complex_flag(ker_z);
        const Complex v = model.eval(wpt, z);
        results["eval"] = {v.real(), v.imag()};
      }
      if (ker_check == "asymptotic") {
        std::vector<double> radii;
        for (int i = 0; i <= 12; ++i) radii.push_back(0.5 * i);
        const auto rep = model.asymptotic_check(radii);
        results["check"] = {{"name", "asymptotic"},
                            {"radii", rep.radii},
                            {"ratios", rep.ratios},
                            {"min_ratio", rep.min_ratio},
                            {"max_ratio", rep.max_ratio}};
        std::vector<std::vector<std::string>> rows;
        for (size_t i = 0; i < rep.radii.size(); ++i)
          rows.push_back({fmt(rep.radii[i]), fmt(rep.ratios[i])});
        maybe_write_csv(ker_o, {"radius", "ratio"}, rows);
      } else if (ker_check == "normb") {
        ordered_json vals = ordered_json::array();
        double recorded = 0.0;
        for (double r = 0.0; r <= 6.0 + 1e-9; r += 1.0) {
          const EntireFunction xi = EntireFunction::poly(model.normalized_kernel(Complex{r, 0}));
          for (double p : {1.0, 2.0, 4.0}) {
            const double value = norm_p(xi, w, p, cfg).value;
            vals.push_back({{"w", r}, {"p", p}, {"norm", value}});
            recorded = std::max(recorded, value);
          }
          const double s = norm_sup(xi, w, cfg).value;
          vals.push_back({{"w", r}, {"p", "inf"}, {"norm", s}});
          recorded = std::max(recorded, s);
        }
        results["check"] = {{"name", "normb"}, {"values", vals}, {"recorded_bound", recorded}};
      } else if (ker_check == "reproducing") {
        const Poly f{{Complex{1, 0}, Complex{2, 0}, Complex{0, 0}, Complex{-1, 0}}};
        const double residual = model.reproducing_residual(f, wpt, cfg);
        results["check"] = {{"name", "reproducing"}, {"test_poly", "1+2z-z^3"},
                            {"residual", residual}};
      }
      emit_report(ker_o, make_report(command_echo, ker_o, cfg, results, elapsed()));
      return 0;
    }

    if (spec_cmd->parsed()) {
      const QuadConfig cfg = effective_config(spec_o);
      const EntireFunction g = load_function(spec_g);
      if (g.kind() != EntireFunction::Kind::Poly)
        throw IoError("the symbol g must be a polynomial", "$.type");
      const Weight w{spec_m};
      const SpectrumDescription d = spectrum_of(g.poly_coeffs(), w);
      ordered_json results;
      results["a"] = {d.a.real(), d.a.imag()};
      results["radius"] = d.radius;
      results["note"] = d.characterization_note;
      if (!spec_scan.empty()) {
        if (spec_testset != "default")
          throw IoError("unknown test set '" + spec_testset + "'", "--testset");
        double rmin = 0, rmax = 0;
        int steps = 0;
        if (std::sscanf(spec_scan.c_str(), "%lf:%lf:%d", &rmin, &rmax, &steps) != 3 || steps < 1)
          throw IoError("expected RMIN:RMAX:STEPS", "--scan");
        std::vector<Complex> lambdas;
        for (int i = 0; i < steps; ++i)
          lambdas.push_back(Complex{rmin + (rmax - rmin) * i / std::max(1, steps - 1), 0.0});
        const auto testset = default_spectral_testset(cfg);
        const ResolventScan scan = resolvent_norm_scan(g.poly_coeffs(), w, lambdas, testset, cfg);
        ordered_json pts = ordered_json::array();
        std::vector<std::vector<std::string>> rows;
        for (const auto& pt : scan.points) {
          ordered_json pj;
          pj["lambda"] = {pt.lambda.real(), pt.lambda.imag()};
          pj["status"] = status_name(pt.status);
          pj["lower_bound"] = pt.lower_bound;
          if (!pt.notes.empty()) pj["notes"] = pt.notes;
          pts.push_back(pj);
          rows.push_back({fmt(pt.lambda.real()), fmt(pt.lambda.imag()), status_name(pt.status),
                          fmt(pt.lower_bound)});
        }
        results["scan"] = pts;
        maybe_write_csv(spec_o, {"lambda_re", "lambda_im", "status", "lower_bound"}, rows);
      }
      emit_report(spec_o, make_report(command_echo, spec_o, cfg, results, elapsed()));
      return 0;
    }

    if (res_cmd->parsed()) {
      const QuadConfig cfg = effective_config(res_o);
      const EntireFunction g = load_function(res_g);
      if (g.kind() != EntireFunction::Kind::Poly)
        throw IoError("the symbol g must be a polynomial", "$.type");
      const Complex lambda = parse_complex_flag(res_lambda);
      const EntireFunction h = load_function(res_h);
      const EntireFunction f = resolvent_apply(g.poly_coeffs(), lambda, h);
      ordered_json results;
      results["image"] = ordered_json::parse(function_to_json(f).dump());
      const Complex f0 = f.value_at_zero();
      results["value_at_zero"] = {f0.real(), f0.imag()};
      ordered_json evals = ordered_json::array();
      for (const std::string& s : res_at) {
        const Complex z = parse_complex_flag(s);
        const Complex v = f.evaluate(z, cfg);
        const double defect = resolvent_defect(g.poly_coeffs(), lambda, h, f, z, cfg);
        evals.push_back({{"z", {z.real(), z.imag()}},
                         {"value", {v.real(), v.imag()}},
                         {"defect", defect}});
      }
      if (!evals.empty()) results["evaluations"] = evals;
      const SpectrumPointReport sp = in_spectrum(g.poly_coeffs(), Weight{0}, lambda);
      results["status"] = status_name(sp.status);
      if (sp.has_membership) results["membership"] = membership_json(sp.raw_membership);
      emit_report(res_o, make_report(command_echo, res_o, cfg, results, elapsed()));
      return 0;
    }

    if (ver_cmd->parsed()) {
      const QuadConfig cfg = effective_config(ver_o);
      std::vector<CriterionResult> results;
      if (ver_suite == "all") {
        results = run_acceptance(cfg, ver_o.threads, cache_dir_of(ver_o));
      } else {
        results.push_back(run_criterion(std::stoi(ver_suite), cfg, cache_dir_of(ver_o)));
      }
      ordered_json rj = ordered_json::array();
      bool all_pass = true;
      for (const CriterionResult& r : results) {
        std::cout << format_criterion_line(r) << '\n';
        if (!r.detail.empty()) std::cout << r.detail;
        all_pass = all_pass && r.passed;
        rj.push_back({{"index", r.index},
                      {"name", r.name},
                      {"passed", r.passed},
                      {"elapsed_seconds", r.elapsed_seconds},
                      {"time_limit_seconds", r.time_limit_seconds},
                      {"detail", r.detail}});
      }
      ordered_json rep = make_report(command_echo, ver_o, cfg, rj, elapsed());
      if (!ver_o.out_file.empty()) {
        std::ofstream out(ver_o.out_file);
        out << rep.dump(2) << '\n';
      }
      std::cout << (all_pass ? "acceptance suite: PASS" : "acceptance suite: FAIL") << '\n';
      return all_pass ? 0 : 1;
    }
  } catch (const IoError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return 1;
  } catch (const QuadratureError& e) {
    std::cerr << "numeric non-convergence: " << e.what() << " (estimates " << e.estimate_prev
              << ", " << e.estimate_last << ")\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "domain error: " << e.what() << '\n';
    return 1;
  } catch (const std::domain_error& e) {
    std::cerr << "domain error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
