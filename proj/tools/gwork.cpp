// Command-line driver: work/threshold evaluation for explicit states, PPT
// classification, randomized scatter datasets and curve sweeps.

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "experiments.hpp"
#include "gausswork/work.hpp"

using namespace gausswork;
using nlohmann::json;

namespace {

constexpr double kVerdictBand = 1e-9;

struct WorkArgs {
  std::string family;
  double a = std::numeric_limits<double>::quiet_NaN();
  double b = std::numeric_limits<double>::quiet_NaN();
  double c = std::numeric_limits<double>::quiet_NaN();
  double d = std::numeric_limits<double>::quiet_NaN();
  std::vector<double> corr;
  double lambda = 1.0;
  double phi = 0.0;
  bool avg_angle = false;
  bool as_json = false;
};

void require_param(double v, const char* name) {
  if (std::isnan(v)) throw InvalidParams(std::string("missing required parameter --") + name);
}

std::string threshold_verdict(double w, double w_sep) {
  if (std::abs(w - w_sep) < kVerdictBand) return "inconclusive";
  return w > w_sep ? "entangled" : "separable";
}

int cmd_work(const WorkArgs& args) {
  auto family = family_from_name(args.family);
  if (!family) throw InvalidParams("unknown family '" + args.family + "'");

  json out;
  out["family"] = args.family;
  out["lambda"] = args.lambda;

  WorkResult res;
  std::string policy = "phi=" + cli::format_double(args.phi);
  std::string verdict;
  double w_sep = std::numeric_limits<double>::quiet_NaN();
  double w_max = std::numeric_limits<double>::quiet_NaN();

  switch (*family) {
    case StateFamily::SymmetricSts: {
      require_param(args.a, "a");
      require_param(args.c, "c");
      res = work_symmetric_closed(args.a, args.c, args.lambda);
      w_sep = work_sep_symmetric(args.a, args.lambda).value;
      w_max = work_max_symmetric(args.a);
      verdict = threshold_verdict(res.value, w_sep);
      policy = "independent";
      out["params"] = {{"a", args.a}, {"c", args.c}};
      break;
    }
    case StateFamily::Sts: {
      require_param(args.a, "a");
      require_param(args.b, "b");
      require_param(args.c, "c");
      res = work_sts_closed(args.a, args.b, args.c, args.lambda);
      w_sep = work_sep_sts(args.a, args.b, args.lambda).value;
      w_max = work_max_sts(args.a, args.b, args.lambda);
      verdict = threshold_verdict(res.value, w_sep);
      policy = "independent";
      out["params"] = {{"a", args.a}, {"b", args.b}, {"c", args.c}};
      break;
    }
    case StateFamily::StandardForm: {
      require_param(args.a, "a");
      require_param(args.b, "b");
      require_param(args.c, "c");
      require_param(args.d, "d");
      CovarianceMatrix sigma = build_two_mode(TwoModeStandardForm{args.a, args.b, args.c, args.d});
      res = args.avg_angle
                ? work_avg_angle(sigma, args.lambda)
                : work_one_measurement(sigma, GaussianMeasurement{args.lambda, args.phi, 1});
      if (args.avg_angle) policy = "averaged";
      w_sep = separable_bound_general(args.a, args.b, args.lambda).value;
      w_max = work_max_sts(args.a, args.b, args.lambda);
      // The threshold is only an upper bound for separable states here, so
      // report the exact PPT verdict alongside the witness.
      verdict = classify(sigma).class_label();
      out["witnessed"] = res.value > w_sep + kVerdictBand;
      out["params"] = {{"a", args.a}, {"b", args.b}, {"c", args.c}, {"d", args.d}};
      break;
    }
    case StateFamily::PureTripartite:
    case StateFamily::SymmetricMixedTripartite:
    case StateFamily::GeneralTripartite: {
      require_param(args.a, "a");
      CovarianceMatrix sigma = [&] {
        if (*family == StateFamily::SymmetricMixedTripartite)
          return build_symmetric_mixed_tripartite(args.a);
        require_param(args.b, "b");
        require_param(args.c, "c");
        if (*family == StateFamily::PureTripartite)
          return build_pure_tripartite(PureTripartiteParams{args.a, args.b, args.c});
        if (args.corr.size() != 9)
          throw InvalidParams("general tripartite states need --corr c1,...,c9");
        GeneralTripartiteParams p{args.a, args.b, args.c, {}};
        std::copy(args.corr.begin(), args.corr.end(), p.corr.begin());
        return build_general_tripartite(p);
      }();
      res = args.avg_angle
                ? work_tripartite_avg(sigma, args.lambda, args.lambda)
                : work_tripartite(sigma, GaussianMeasurement{args.lambda, args.phi, 2},
                                  GaussianMeasurement{args.lambda, args.phi, 1});
      if (args.avg_angle)
        policy = "averaged";
      else if (args.lambda == 1.0)
        policy = "independent";
      verdict = classify(sigma).class_label();
      out["params"] = {{"a", args.a}};
      if (!std::isnan(args.b)) out["params"]["b"] = args.b;
      if (!std::isnan(args.c)) out["params"]["c"] = args.c;
      break;
    }
  }

  out["W"] = res.value;
  out["path"] = work_path_name(res.path);
  out["averaged"] = res.averaged;
  out["phi_policy"] = policy;
  if (!std::isnan(w_sep)) out["W_sep"] = w_sep;
  if (!std::isnan(w_max)) out["W_max"] = w_max;
  out["verdict"] = verdict;

  if (args.as_json) {
    std::cout << out.dump() << "\n";
    return 0;
  }
  std::cout << "family: " << args.family << "\n";
  std::cout << "lambda = " << cli::format_double(args.lambda) << "   phi policy: " << policy
            << "\n";
  std::cout << "W      = " << cli::format_double(res.value) << "   ["
            << work_path_name(res.path) << "]\n";
  if (!std::isnan(w_sep)) std::cout << "W_sep  = " << cli::format_double(w_sep) << "\n";
  if (!std::isnan(w_max)) std::cout << "W_max  = " << cli::format_double(w_max) << "\n";
  std::cout << "verdict: " << verdict << "\n";
  return 0;
}

struct ClassifyArgs {
  std::string family;
  std::string matrix_path;
  double a = std::numeric_limits<double>::quiet_NaN();
  double b = std::numeric_limits<double>::quiet_NaN();
  double c = std::numeric_limits<double>::quiet_NaN();
  double d = std::numeric_limits<double>::quiet_NaN();
  std::vector<double> corr;
};

CovarianceMatrix load_matrix(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw InvalidParams("cannot open matrix file " + path);
  std::vector<double> vals;
  double v;
  while (is >> v) vals.push_back(v);
  int dim;
  if (vals.size() == 16)
    dim = 4;
  else if (vals.size() == 36)
    dim = 6;
  else
    throw InvalidParams("matrix file must hold 16 or 36 numbers, got " +
                        std::to_string(vals.size()));
  Matrix m(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) m(i, j) = vals[i * dim + j];
  CovarianceMatrix sigma(dim / 2, m);
  if (!is_physical(sigma)) throw Unphysical("matrix file does not describe a physical state");
  return sigma;
}

int cmd_classify(const ClassifyArgs& args) {
  CovarianceMatrix sigma = [&] {
    if (!args.matrix_path.empty()) return load_matrix(args.matrix_path);
    auto family = family_from_name(args.family);
    if (!family) throw InvalidParams("unknown family '" + args.family + "'");
    switch (*family) {
      case StateFamily::SymmetricSts:
        require_param(args.a, "a");
        require_param(args.c, "c");
        return build_two_mode(SymmetricStsParams{args.a, args.c});
      case StateFamily::Sts:
        require_param(args.a, "a");
        require_param(args.b, "b");
        require_param(args.c, "c");
        return build_two_mode(SqueezedThermalParams{args.a, args.b, args.c});
      case StateFamily::StandardForm:
        require_param(args.a, "a");
        require_param(args.b, "b");
        require_param(args.c, "c");
        require_param(args.d, "d");
        return build_two_mode(TwoModeStandardForm{args.a, args.b, args.c, args.d});
      case StateFamily::PureTripartite:
        require_param(args.a, "a");
        require_param(args.b, "b");
        require_param(args.c, "c");
        return build_pure_tripartite(PureTripartiteParams{args.a, args.b, args.c});
      case StateFamily::SymmetricMixedTripartite:
        require_param(args.a, "a");
        return build_symmetric_mixed_tripartite(args.a);
      case StateFamily::GeneralTripartite: {
        require_param(args.a, "a");
        require_param(args.b, "b");
        require_param(args.c, "c");
        if (args.corr.size() != 9)
          throw InvalidParams("general tripartite states need --corr c1,...,c9");
        GeneralTripartiteParams p{args.a, args.b, args.c, {}};
        std::copy(args.corr.begin(), args.corr.end(), p.corr.begin());
        return build_general_tripartite(p);
      }
    }
    throw InvalidParams("unknown family");
  }();

  SeparabilityVerdict verdict = classify(sigma);
  static const char* kLabels[3][3] = {{"a|b", "b|a", ""}, {"a|bc", "b|ac", "c|ab"}};
  json out;
  out["modes"] = verdict.n_modes;
  out["class"] = verdict.class_label();
  out["entangled"] = verdict.entangled;
  out["bipartitions"] = json::array();
  for (const auto& bp : verdict.bipartitions) {
    const char* label = kLabels[verdict.n_modes - 2][bp.transposed_mode];
    out["bipartitions"].push_back({{"bipartition", label},
                                   {"nu_min", bp.nu_min},
                                   {"separable", bp.separable}});
  }
  std::cout << out.dump() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"extractable-work toolkit for two- and three-mode Gaussian states"};
  app.require_subcommand(1);

  WorkArgs wargs;
  CLI::App* work = app.add_subcommand("work", "evaluate work and thresholds for one state");
  work->add_option("--family", wargs.family, "state family")->required();
  work->add_option("--a", wargs.a, "first local variance");
  work->add_option("--b", wargs.b, "second local variance");
  work->add_option("--c", wargs.c, "correlation (or third local variance)");
  work->add_option("--d", wargs.d, "second correlation entry");
  work->add_option("--corr", wargs.corr, "nine tripartite correlation entries")->delimiter(',');
  work->add_option("--lambda", wargs.lambda, "measurement strength (0 homodyne, 1 heterodyne)");
  work->add_option("--phi", wargs.phi, "measurement angle");
  work->add_flag("--avg-angle", wargs.avg_angle, "average over the measurement angle(s)");
  work->add_flag("--json", wargs.as_json, "emit a JSON document instead of text");

  ClassifyArgs cargs;
  CLI::App* cls = app.add_subcommand("classify", "PPT classification of a state");
  cls->add_option("--family", cargs.family, "state family");
  cls->add_option("--matrix", cargs.matrix_path, "whitespace-separated 4x4 or 6x6 matrix file");
  cls->add_option("--a", cargs.a, "first local variance");
  cls->add_option("--b", cargs.b, "second local variance");
  cls->add_option("--c", cargs.c, "correlation (or third local variance)");
  cls->add_option("--d", cargs.d, "second correlation entry");
  cls->add_option("--corr", cargs.corr, "nine tripartite correlation entries")->delimiter(',');

  cli::ExperimentConfig scfg;
  std::string scatter_figure, scatter_family, config_path;
  CLI::App* scatter = app.add_subcommand("scatter", "randomized dataset generation");
  scatter->add_option("--figure", scatter_figure, "dataset preset id");
  scatter->add_option("--config", config_path, "JSON config file");
  scatter->add_option("--family", scatter_family, "state family for custom runs");
  auto* opt_lambda = scatter->add_option("--lambda", scfg.lambda, "measurement strength");
  auto* opt_avg = scatter->add_flag("--avg-angle", scfg.avg_angle, "average over angles");
  auto* opt_phi = scatter->add_option("--phi", scfg.phi, "pointwise measurement angle");
  auto* opt_samples = scatter->add_option("--samples", scfg.samples, "sample count");
  auto* opt_seed = scatter->add_option("--seed", scfg.seed, "random seed");
  auto* opt_workers = scatter->add_option("--workers", scfg.workers, "worker thread count");
  auto* opt_out = scatter->add_option("--out", scfg.out, "output CSV path");
  auto* opt_curves = scatter->add_option("--curves", scfg.curves_out, "threshold curves path");
  double blim = 0.0, lo = 0.0, hi = 0.0, clo = 0.0, chi = 0.0;
  auto* opt_bmax = scatter->add_option("--b-max", blim, "upper bound on the second variance");
  auto* opt_llo = scatter->add_option("--local-min", lo, "lower bound of local variances");
  auto* opt_lhi = scatter->add_option("--local-max", hi, "upper bound of local variances");
  auto* opt_clo = scatter->add_option("--corr-min", clo, "lower bound of correlations");
  auto* opt_chi = scatter->add_option("--corr-max", chi, "upper bound of correlations");

  cli::SweepSpec sweep_spec;
  std::string sweep_figure, sweep_family;
  CLI::App* sweep = app.add_subcommand("sweep", "dense curve evaluation");
  sweep->add_option("--figure", sweep_figure, "sweep preset id");
  sweep->add_option("--family", sweep_family, "state family for custom sweeps");
  auto* sw_vary = sweep->add_option("--vary", sweep_spec.vary, "parameter on the x axis");
  auto* sw_a = sweep->add_option("--a", sweep_spec.a, "fixed first local variance");
  auto* sw_b = sweep->add_option("--b", sweep_spec.b, "fixed second local variance");
  auto* sw_lam = sweep->add_option("--lambda", sweep_spec.lambdas, "strengths, one curve each")
                     ->delimiter(',');
  auto* sw_pts = sweep->add_option("--points", sweep_spec.points, "grid size");
  auto* sw_from = sweep->add_option("--from", sweep_spec.from, "x start");
  auto* sw_to = sweep->add_option("--to", sweep_spec.to, "x end");
  auto* sw_avg = sweep->add_flag("--avg-angle", sweep_spec.avg_angle, "average over angles");
  sweep->add_option("--out", sweep_spec.out, "output CSV path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (app.got_subcommand(work)) return cmd_work(wargs);
    if (app.got_subcommand(cls)) return cmd_classify(cargs);

    if (app.got_subcommand(scatter)) {
      cli::ExperimentConfig cfg;
      if (!scatter_figure.empty()) cfg = cli::scatter_preset(scatter_figure);
      if (!config_path.empty()) {
        std::ifstream is(config_path);
        if (!is) throw InvalidParams("cannot open config file " + config_path);
        json j = json::parse(is);
        cli::apply_config_json(cfg, j);
      }
      if (!scatter_family.empty()) {
        auto f = family_from_name(scatter_family);
        if (!f) throw InvalidParams("unknown family '" + scatter_family + "'");
        cfg.family = *f;
        cfg.ranges = default_ranges(*f);
        if (!*opt_samples) cfg.samples = family_modes(*f) == 3 ? 10000 : 20000;
      }
      if (*opt_lambda) cfg.lambda = scfg.lambda;
      if (*opt_avg) cfg.avg_angle = scfg.avg_angle;
      if (*opt_phi) cfg.phi = scfg.phi;
      if (*opt_samples) cfg.samples = scfg.samples;
      if (*opt_seed) cfg.seed = scfg.seed;
      if (*opt_workers) cfg.workers = scfg.workers;
      if (*opt_out) cfg.out = scfg.out;
      if (*opt_curves) cfg.curves_out = scfg.curves_out;
      if (*opt_bmax) cfg.ranges.b_max = blim;
      if (*opt_llo) cfg.ranges.local.lo = lo;
      if (*opt_lhi) cfg.ranges.local.hi = hi;
      if (*opt_clo) cfg.ranges.corr.lo = clo;
      if (*opt_chi) cfg.ranges.corr.hi = chi;
      cli::run_scatter(cfg);
      return 0;
    }

    if (app.got_subcommand(sweep)) {
      cli::SweepSpec spec;
      if (!sweep_figure.empty()) spec = cli::sweep_preset(sweep_figure);
      if (!sweep_family.empty()) {
        auto f = family_from_name(sweep_family);
        if (!f) throw InvalidParams("unknown family '" + sweep_family + "'");
        spec.family = *f;
      }
      if (*sw_vary) spec.vary = sweep_spec.vary;
      if (*sw_a) spec.a = sweep_spec.a;
      if (*sw_b) spec.b = sweep_spec.b;
      if (*sw_lam) spec.lambdas = sweep_spec.lambdas;
      if (*sw_pts) spec.points = sweep_spec.points;
      if (*sw_from) spec.from = sweep_spec.from;
      if (*sw_to) spec.to = sweep_spec.to;
      if (*sw_avg) spec.avg_angle = sweep_spec.avg_angle;
      spec.out = sweep_spec.out;
      cli::run_sweep(spec);
      return 0;
    }
  } catch (const QuadratureFailure& e) {
    std::cerr << "quadrature failure: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
