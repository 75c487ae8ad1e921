#include "gausswork/sampling.hpp"

#include <cmath>

namespace gausswork {

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;

std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

// Guard against pathological ranges; default ranges accept far sooner.
constexpr std::uint64_t kMaxAttempts = 100'000'000ull;

}  // namespace

CounterRng::CounterRng(std::uint64_t seed, std::uint64_t stream)
    : key_(mix64(seed + kGolden) ^ mix64(stream * kGolden + 1)), counter_(0) {}

std::uint64_t CounterRng::next() {
  counter_ += kGolden;
  return mix64(counter_ ^ key_);
}

double CounterRng::uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

double CounterRng::uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

std::string family_name(StateFamily f) {
  switch (f) {
    case StateFamily::SymmetricSts:
      return "sym-sts";
    case StateFamily::Sts:
      return "sts";
    case StateFamily::StandardForm:
      return "standard";
    case StateFamily::PureTripartite:
      return "pure-tri";
    case StateFamily::SymmetricMixedTripartite:
      return "sym-mixed-tri";
    case StateFamily::GeneralTripartite:
      return "general-tri";
  }
  return "?";
}

std::optional<StateFamily> family_from_name(std::string_view name) {
  for (StateFamily f :
       {StateFamily::SymmetricSts, StateFamily::Sts, StateFamily::StandardForm,
        StateFamily::PureTripartite, StateFamily::SymmetricMixedTripartite,
        StateFamily::GeneralTripartite}) {
    if (family_name(f) == name) return f;
  }
  return std::nullopt;
}

int family_modes(StateFamily f) {
  switch (f) {
    case StateFamily::SymmetricSts:
    case StateFamily::Sts:
    case StateFamily::StandardForm:
      return 2;
    default:
      return 3;
  }
}

SampleRanges default_ranges(StateFamily f) {
  SampleRanges r;
  if (family_modes(f) == 3) r.local = {0.5, 3.0};
  return r;
}

CovarianceMatrix SampleRecord::build() const {
  switch (family) {
    case StateFamily::SymmetricSts:
      return build_two_mode(SymmetricStsParams{a, c});
    case StateFamily::Sts:
      return build_two_mode(SqueezedThermalParams{a, b, c});
    case StateFamily::StandardForm:
      return build_two_mode(TwoModeStandardForm{a, b, c, d});
    case StateFamily::PureTripartite:
      return build_pure_tripartite(PureTripartiteParams{a, b, c});
    case StateFamily::SymmetricMixedTripartite:
      return build_symmetric_mixed_tripartite(a);
    case StateFamily::GeneralTripartite:
      return build_general_tripartite(GeneralTripartiteParams{a, b, c, corr});
  }
  throw InvalidParams("unknown family");
}

nlohmann::json SampleRecord::to_json() const {
  nlohmann::json j;
  j["family"] = family_name(family);
  j["seed"] = seed;
  auto put = [&j](const char* key, double v) {
    if (!std::isnan(v)) j[key] = v;
  };
  put("a", a);
  put("b", b);
  put("c", c);
  put("d", d);
  if (has_corr)
    for (int i = 0; i < 9; ++i) j["c" + std::to_string(i + 1)] = corr[i];
  return j;
}

SampleRecord sample_one(StateFamily family, std::uint64_t seed, std::uint64_t index,
                        const SampleRanges& ranges, std::uint64_t* attempts) {
  CounterRng rng(seed, index);
  SampleRecord rec;
  rec.family = family;
  rec.seed = seed;
  rec.index = index;

  const Interval local = ranges.local;
  const double b_hi = ranges.b_max ? std::min(*ranges.b_max, local.hi) : local.hi;

  for (std::uint64_t attempt = 1; attempt <= kMaxAttempts; ++attempt) {
    bool ok = false;
    switch (family) {
      case StateFamily::SymmetricSts: {
        // Physical by construction: c is drawn inside the closed-form bound.
        rec.a = rng.uniform(local.lo, local.hi);
        rec.c = rng.uniform(0.0, c_max_symmetric(rec.a));
        ok = true;
        break;
      }
      case StateFamily::Sts: {
        rec.a = rng.uniform(local.lo, local.hi);
        rec.b = rng.uniform(local.lo, b_hi);
        rec.c = rng.uniform(0.0, c_box_sts(rec.a, rec.b));
        ok = std::abs(rec.c) <= c_max_sts(rec.a, rec.b);
        break;
      }
      case StateFamily::StandardForm: {
        rec.a = rng.uniform(local.lo, local.hi);
        rec.b = rng.uniform(local.lo, b_hi);
        const double box = c_box_sts(rec.a, rec.b);
        rec.c = rng.uniform(-box, box);
        rec.d = rng.uniform(-box, box);
        CovarianceMatrix sigma(2, [&] {
          Matrix m = Matrix::Zero(4, 4);
          m(0, 0) = m(1, 1) = rec.a;
          m(2, 2) = m(3, 3) = rec.b;
          m(0, 2) = m(2, 0) = rec.c;
          m(1, 3) = m(3, 1) = rec.d;
          return m;
        }());
        ok = is_physical(sigma);
        break;
      }
      case StateFamily::PureTripartite: {
        rec.a = rng.uniform(local.lo, local.hi);
        rec.b = rng.uniform(local.lo, local.hi);
        rec.c = rng.uniform(local.lo, local.hi);
        ok = pure_tripartite_valid(PureTripartiteParams{rec.a, rec.b, rec.c});
        break;
      }
      case StateFamily::SymmetricMixedTripartite: {
        rec.a = rng.uniform(local.lo, local.hi);
        ok = true;
        break;
      }
      case StateFamily::GeneralTripartite: {
        rec.a = rng.uniform(local.lo, local.hi);
        rec.b = rng.uniform(local.lo, local.hi);
        rec.c = rng.uniform(local.lo, local.hi);
        for (double& v : rec.corr) v = rng.uniform(ranges.corr.lo, ranges.corr.hi);
        rec.has_corr = true;
        GeneralTripartiteParams p{rec.a, rec.b, rec.c, rec.corr};
        Matrix m(6, 6);
        const auto& cc = rec.corr;
        m << p.a, 0, cc[0], 0, cc[2], cc[4],
             0, p.a, 0, cc[1], 0, cc[3],
             cc[0], 0, p.b, 0, cc[5], cc[7],
             0, cc[1], 0, p.b, cc[8], cc[6],
             cc[2], 0, cc[5], cc[8], p.c, 0,
             cc[4], cc[3], cc[7], cc[6], 0, p.c;
        ok = is_physical(CovarianceMatrix(3, m));
        break;
      }
    }
    if (ok) {
      if (attempts) *attempts += attempt;
      return rec;
    }
  }
  throw InvalidParams("sampling ranges produced no physical state after " +
                      std::to_string(kMaxAttempts) + " attempts");
}

SampleBatch sample_random(StateFamily family, int count, std::uint64_t seed,
                          const SampleRanges& ranges) {
  if (count <= 0) throw InvalidParams("sample count must be positive");
  SampleBatch batch;
  batch.records.reserve(count);
  std::uint64_t attempts = 0;
  for (int i = 0; i < count; ++i)
    batch.records.push_back(sample_one(family, seed, static_cast<std::uint64_t>(i), ranges,
                                       &attempts));
  batch.acceptance_rate = static_cast<double>(count) / static_cast<double>(attempts);
  batch.low_acceptance = batch.acceptance_rate < 1e-3;
  return batch;
}

}  // namespace gausswork
