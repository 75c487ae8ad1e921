#include "experiments.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <mutex>
#include <thread>

namespace gausswork::cli {

namespace {

struct Row {
  SampleRecord rec;
  std::string policy;
  std::string cls;
  double work = 0.0;
};

std::string csv_field(double v) {
  return std::isnan(v) ? std::string() : format_double(v);
}

std::string phi_policy_label(const ExperimentConfig& cfg) {
  switch (cfg.family) {
    case StateFamily::SymmetricSts:
    case StateFamily::Sts:
    case StateFamily::PureTripartite:
      return "independent";
    default:
      break;
  }
  if (cfg.avg_angle) return "averaged";
  if (cfg.lambda == 1.0) return "independent";
  return "phi=" + format_double(cfg.phi);
}

Row compute_row(const ExperimentConfig& cfg, std::uint64_t index, std::uint64_t* attempts) {
  Row row;
  row.rec = sample_one(cfg.family, cfg.seed, index, cfg.ranges, attempts);
  row.policy = phi_policy_label(cfg);

  const SampleRecord& r = row.rec;
  CovarianceMatrix sigma = r.build();
  row.cls = classify(sigma).class_label();

  try {
    switch (cfg.family) {
      case StateFamily::SymmetricSts:
        row.work = work_symmetric_closed(r.a, r.c, cfg.lambda).value;
        break;
      case StateFamily::Sts:
        row.work = work_sts_closed(r.a, r.b, r.c, cfg.lambda).value;
        break;
      case StateFamily::StandardForm:
        row.work = cfg.avg_angle
                       ? work_avg_angle(sigma, cfg.lambda).value
                       : work_one_measurement(sigma, GaussianMeasurement{cfg.lambda, cfg.phi, 1})
                             .value;
        break;
      default:
        row.work = cfg.avg_angle
                       ? work_tripartite_avg(sigma, cfg.lambda, cfg.lambda).value
                       : work_tripartite(sigma, GaussianMeasurement{cfg.lambda, cfg.phi, 2},
                                         GaussianMeasurement{cfg.lambda, cfg.phi, 1})
                             .value;
        break;
    }
  } catch (const QuadratureFailure& e) {
    throw QuadratureFailure(std::string(e.what()) + "; sample " + std::to_string(index) +
                            " params " + r.to_json().dump());
  }
  return row;
}

std::string derive_curves_path(const std::string& out) {
  const auto dot = out.rfind('.');
  if (dot == std::string::npos || out.find('/', dot) != std::string::npos)
    return out + "_curves";
  return out.substr(0, dot) + "_curves" + out.substr(dot);
}

void write_rows(const ExperimentConfig& cfg, const std::vector<Row>& rows) {
  std::ofstream os(cfg.out, std::ios::binary);
  if (!os) throw InvalidParams("cannot open output file " + cfg.out);
  os << "sample_id,family,a,b,c,d,c1,c2,c3,c4,c5,c6,c7,c8,c9,lambda,phi_policy,class,W\n";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const Row& row = rows[i];
    const SampleRecord& r = row.rec;
    os << i << ',' << family_name(r.family) << ',' << csv_field(r.a) << ',' << csv_field(r.b)
       << ',' << csv_field(r.c) << ',' << csv_field(r.d);
    for (int k = 0; k < 9; ++k)
      os << ',' << (r.has_corr ? format_double(r.corr[k]) : std::string());
    os << ',' << format_double(cfg.lambda) << ',' << row.policy << ',' << row.cls << ','
       << format_double(row.work) << '\n';
  }
}

void write_curves(const ExperimentConfig& cfg) {
  const std::string path = cfg.curves_out.empty() ? derive_curves_path(cfg.out) : cfg.curves_out;
  std::ofstream os(path, std::ios::binary);
  if (!os) throw InvalidParams("cannot open curves file " + path);

  const double lo = cfg.ranges.local.lo;
  const double hi = cfg.ranges.local.hi;
  const std::string& id = cfg.figure;

  if (id == "2a" || id == "2b") {
    os << "a,W_sep,W_max\n";
    for (int i = 0; i <= 200; ++i) {
      const double a = lo + (hi - lo) * i / 200.0;
      os << format_double(a) << ',' << format_double(work_sep_symmetric(a, cfg.lambda).value)
         << ',' << format_double(work_max_symmetric(a)) << '\n';
    }
  } else if (id == "3a" || id == "3b") {
    os << "a,b,W_sep,W_max\n";
    for (int i = 0; i <= 40; ++i)
      for (int j = 0; j <= 40; ++j) {
        const double a = lo + (hi - lo) * i / 40.0;
        const double b = lo + (hi - lo) * j / 40.0;
        os << format_double(a) << ',' << format_double(b) << ','
           << format_double(work_sep_sts(a, b, cfg.lambda).value) << ','
           << format_double(work_max_sts(a, b, cfg.lambda)) << '\n';
      }
  } else if (id == "4") {
    const double bmax = cfg.ranges.b_max.value_or(hi);
    os << "a,W_sep_at_bmax,W_max_diag\n";
    for (int i = 0; i <= 200; ++i) {
      const double a = lo + (hi - lo) * i / 200.0;
      os << format_double(a) << ',' << format_double(work_sep_sts(a, bmax, cfg.lambda).value)
         << ',' << format_double(work_max_sts(a, a, cfg.lambda)) << '\n';
    }
  } else if (id == "5") {
    os << "a,b,W_sep_bound,W_sep_sts_branch,W_sep_q_branch,W_max\n";
    for (int i = 0; i <= 40; ++i)
      for (int j = 0; j <= 40; ++j) {
        const double a = lo + (hi - lo) * i / 40.0;
        const double b = lo + (hi - lo) * j / 40.0;
        const double sts_branch = work_sep_sts(a, b, cfg.lambda).value;
        const double q_branch = average_over_angle(
            [&](double phi) { return separable_work_q_correlated(a, b, cfg.lambda, phi); });
        os << format_double(a) << ',' << format_double(b) << ','
           << format_double(std::max(sts_branch, q_branch)) << ',' << format_double(sts_branch)
           << ',' << format_double(q_branch) << ','
           << format_double(work_max_sts(a, b, cfg.lambda)) << '\n';
      }
  } else if (id == "6a" || id == "6b") {
    os << "a,W_max\n";
    for (int i = 0; i <= 200; ++i) {
      const double a = lo + (hi - lo) * i / 200.0;
      os << format_double(a) << ',' << format_double(std::log(2.0 * a)) << '\n';
    }
  }
}

}  // namespace

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

ExperimentConfig scatter_preset(const std::string& id) {
  ExperimentConfig cfg;
  cfg.figure = id;
  if (id == "2a" || id == "2b") {
    cfg.family = StateFamily::SymmetricSts;
    cfg.lambda = (id == "2b") ? 1.0 : 0.0;
    cfg.samples = 20000;
  } else if (id == "3a" || id == "3b") {
    cfg.family = StateFamily::Sts;
    cfg.lambda = (id == "3b") ? 1.0 : 0.0;
    cfg.samples = 20000;
  } else if (id == "4") {
    cfg.family = StateFamily::Sts;
    cfg.lambda = 0.0;
    cfg.samples = 20000;
    cfg.ranges.b_max = 3.0;
  } else if (id == "5") {
    cfg.family = StateFamily::StandardForm;
    cfg.lambda = 3.0;
    cfg.avg_angle = true;
    cfg.samples = 20000;
  } else if (id == "6a" || id == "6b") {
    cfg.family = StateFamily::GeneralTripartite;
    cfg.lambda = (id == "6b") ? 1.0 : 0.0;
    cfg.avg_angle = (id == "6a");
    cfg.samples = 10000;
  } else {
    throw InvalidParams("unknown scatter preset '" + id + "'");
  }
  cfg.ranges = [&] {
    SampleRanges r = default_ranges(cfg.family);
    if (id == "4") r.b_max = 3.0;
    return r;
  }();
  return cfg;
}

SweepSpec sweep_preset(const std::string& id) {
  SweepSpec spec;
  spec.figure = id;
  if (id == "2c") {
    spec.family = StateFamily::SymmetricSts;
    spec.vary = "c";
    spec.a = 3.0;
    spec.lambdas = {1.0, 5.0, 0.0};
    spec.points = 257;
  } else if (id == "7") {
    spec.family = StateFamily::SymmetricMixedTripartite;
    spec.vary = "a";
    spec.from = 0.5;
    spec.to = 10.0;
    spec.points = 128;
  } else {
    throw InvalidParams("unknown sweep preset '" + id + "'");
  }
  return spec;
}

void apply_config_json(ExperimentConfig& cfg, const nlohmann::json& j) {
  if (j.contains("figure")) {
    cfg = scatter_preset(j.at("figure").get<std::string>());
  }
  if (j.contains("family")) {
    auto f = family_from_name(j.at("family").get<std::string>());
    if (!f) throw InvalidParams("unknown family in config");
    cfg.family = *f;
    cfg.ranges = default_ranges(*f);
  }
  if (j.contains("lambda")) cfg.lambda = j.at("lambda").get<double>();
  if (j.contains("avg_angle")) cfg.avg_angle = j.at("avg_angle").get<bool>();
  if (j.contains("phi")) cfg.phi = j.at("phi").get<double>();
  if (j.contains("samples")) cfg.samples = j.at("samples").get<int>();
  if (j.contains("seed")) cfg.seed = j.at("seed").get<std::uint64_t>();
  if (j.contains("workers")) cfg.workers = j.at("workers").get<int>();
  if (j.contains("out")) cfg.out = j.at("out").get<std::string>();
  if (j.contains("curves_out")) cfg.curves_out = j.at("curves_out").get<std::string>();
  if (j.contains("ranges")) {
    const auto& r = j.at("ranges");
    if (r.contains("local")) {
      cfg.ranges.local.lo = r.at("local").at(0).get<double>();
      cfg.ranges.local.hi = r.at("local").at(1).get<double>();
    }
    if (r.contains("corr")) {
      cfg.ranges.corr.lo = r.at("corr").at(0).get<double>();
      cfg.ranges.corr.hi = r.at("corr").at(1).get<double>();
    }
    if (r.contains("b_max")) cfg.ranges.b_max = r.at("b_max").get<double>();
  }
}

nlohmann::json config_to_json(const ExperimentConfig& cfg) {
  nlohmann::json j;
  if (!cfg.figure.empty()) j["figure"] = cfg.figure;
  j["family"] = family_name(cfg.family);
  j["lambda"] = cfg.lambda;
  j["avg_angle"] = cfg.avg_angle;
  j["phi"] = cfg.phi;
  j["samples"] = cfg.samples;
  j["seed"] = cfg.seed;
  j["workers"] = cfg.workers;
  j["out"] = cfg.out;
  j["ranges"] = {{"local", {cfg.ranges.local.lo, cfg.ranges.local.hi}},
                 {"corr", {cfg.ranges.corr.lo, cfg.ranges.corr.hi}}};
  if (cfg.ranges.b_max) j["ranges"]["b_max"] = *cfg.ranges.b_max;
  return j;
}

void run_scatter(const ExperimentConfig& cfg) {
  if (cfg.samples <= 0) throw InvalidParams("sample count must be positive");
  if (cfg.workers < 1) throw InvalidParams("worker count must be at least 1");
  if (cfg.out.empty()) throw InvalidParams("scatter needs an output path");

  std::vector<Row> rows(cfg.samples);
  std::atomic<std::uint64_t> cursor{0};
  std::atomic<std::uint64_t> attempts{0};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::mutex error_mutex;

  auto worker = [&] {
    for (;;) {
      const std::uint64_t i = cursor.fetch_add(1);
      if (i >= static_cast<std::uint64_t>(cfg.samples) || failed.load()) break;
      try {
        std::uint64_t att = 0;
        rows[i] = compute_row(cfg, i, &att);
        attempts.fetch_add(att);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!failed.exchange(true)) error = std::current_exception();
      }
    }
  };

  if (cfg.workers == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(cfg.workers);
    for (int t = 0; t < cfg.workers; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (failed.load()) std::rethrow_exception(error);

  const double acceptance =
      static_cast<double>(cfg.samples) / static_cast<double>(attempts.load());
  if (acceptance < 1e-3)
    std::cerr << "warning: low acceptance rate " << acceptance << " for family "
              << family_name(cfg.family) << "\n";

  write_rows(cfg, rows);
  if (!cfg.figure.empty()) write_curves(cfg);
}

void run_sweep(const SweepSpec& spec) {
  if (spec.points < 2) throw InvalidParams("sweep needs at least 2 points");
  if (spec.out.empty()) throw InvalidParams("sweep needs an output path");
  std::ofstream os(spec.out, std::ios::binary);
  if (!os) throw InvalidParams("cannot open output file " + spec.out);
  os << "x,curve,W\n";

  auto emit = [&](double x, const std::string& curve, double w) {
    os << format_double(x) << ',' << curve << ',' << format_double(w) << '\n';
  };

  if (spec.figure == "7") {
    for (int i = 0; i < spec.points; ++i) {
      const double a = spec.from + (spec.to - spec.from) * i / (spec.points - 1.0);
      CovarianceMatrix sigma = build_symmetric_mixed_tripartite(a);
      emit(a, "heterodyne",
           work_tripartite(sigma, GaussianMeasurement::heterodyne(2),
                           GaussianMeasurement::heterodyne(1))
               .value);
      emit(a, "homodyne-averaged", work_tripartite_avg(sigma, 0.0, 0.0).value);
      emit(a, "pure", std::log(2.0 * a));
    }
    return;
  }

  // Symmetric-family sweeps over c (preset 2c and custom ones).
  switch (spec.family) {
    case StateFamily::SymmetricSts: {
      if (spec.vary != "c") throw InvalidParams("symmetric sweeps vary c");
      const double to = std::isnan(spec.to) ? c_max_symmetric(spec.a) : spec.to;
      for (int i = 0; i < spec.points; ++i) {
        const double c = spec.from + (to - spec.from) * i / (spec.points - 1.0);
        for (double lam : spec.lambdas)
          emit(c, "lambda=" + format_double(lam), work_symmetric_closed(spec.a, c, lam).value);
      }
      break;
    }
    case StateFamily::Sts: {
      if (spec.vary != "c") throw InvalidParams("squeezed thermal sweeps vary c");
      if (std::isnan(spec.b)) throw InvalidParams("squeezed thermal sweeps need b");
      const double to = std::isnan(spec.to) ? c_max_sts(spec.a, spec.b) : spec.to;
      for (int i = 0; i < spec.points; ++i) {
        const double c = spec.from + (to - spec.from) * i / (spec.points - 1.0);
        for (double lam : spec.lambdas)
          emit(c, "lambda=" + format_double(lam),
               work_sts_closed(spec.a, spec.b, c, lam).value);
      }
      break;
    }
    case StateFamily::SymmetricMixedTripartite: {
      if (spec.vary != "a") throw InvalidParams("symmetric mixed tripartite sweeps vary a");
      const double to = std::isnan(spec.to) ? 10.0 : spec.to;
      for (int i = 0; i < spec.points; ++i) {
        const double a = spec.from + (to - spec.from) * i / (spec.points - 1.0);
        CovarianceMatrix sigma = build_symmetric_mixed_tripartite(a);
        for (double lam : spec.lambdas) {
          const double w =
              spec.avg_angle
                  ? work_tripartite_avg(sigma, lam, lam).value
                  : work_tripartite(sigma, GaussianMeasurement{lam, 0.0, 2},
                                    GaussianMeasurement{lam, 0.0, 1})
                        .value;
          emit(a, "lambda=" + format_double(lam), w);
        }
      }
      break;
    }
    default:
      throw InvalidParams("unsupported sweep family " + family_name(spec.family));
  }
}

}  // namespace gausswork::cli
