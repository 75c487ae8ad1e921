#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "gausswork/states.hpp"

namespace gausswork {

/// Keyed counter generator built on the splitmix64 finalizer. Each draw
/// mixes (key, counter), so a stream is a pure function of (seed, stream) and
/// the sequence is identical on every platform and thread layout.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed, std::uint64_t stream = 0);

  std::uint64_t next();
  /// Uniform double in [0, 1), 53 random bits.
  double uniform();
  double uniform(double lo, double hi);

 private:
  std::uint64_t key_;
  std::uint64_t counter_;
};

enum class StateFamily {
  SymmetricSts,
  Sts,
  StandardForm,
  PureTripartite,
  SymmetricMixedTripartite,
  GeneralTripartite,
};

std::string family_name(StateFamily f);
std::optional<StateFamily> family_from_name(std::string_view name);
int family_modes(StateFamily f);

struct Interval {
  double lo = 0.0;
  double hi = 1.0;
};

/// Per-parameter sampling intervals. Local variances are drawn from `local`
/// (clipped to b_max for the second mode when set); correlation entries of
/// the twelve-parameter tripartite family are drawn from `corr`. The
/// correlation of the two-mode families is drawn inside the family's own
/// closed-form box instead.
struct SampleRanges {
  Interval local{0.5, 5.0};
  Interval corr{-2.0, 2.0};
  std::optional<double> b_max;
};

SampleRanges default_ranges(StateFamily f);

/// One accepted parameter draw. Absent parameters are NaN.
struct SampleRecord {
  StateFamily family = StateFamily::SymmetricSts;
  std::uint64_t seed = 0;
  std::uint64_t index = 0;
  double a = std::numeric_limits<double>::quiet_NaN();
  double b = std::numeric_limits<double>::quiet_NaN();
  double c = std::numeric_limits<double>::quiet_NaN();
  double d = std::numeric_limits<double>::quiet_NaN();
  std::array<double, 9> corr{};
  bool has_corr = false;

  CovarianceMatrix build() const;
  nlohmann::json to_json() const;
};

/// Deterministic rejection sampler for sample `index` of stream `seed`.
/// Draws parameters uniformly and rejects through the physicality check, so
/// every returned record builds a physical state. The number of attempts is
/// accumulated into *attempts when given.
SampleRecord sample_one(StateFamily family, std::uint64_t seed, std::uint64_t index,
                        const SampleRanges& ranges, std::uint64_t* attempts = nullptr);

struct SampleBatch {
  std::vector<SampleRecord> records;
  double acceptance_rate = 1.0;
  bool low_acceptance = false;  // acceptance below 1e-3
};

SampleBatch sample_random(StateFamily family, int count, std::uint64_t seed,
                          const SampleRanges& ranges);

}  // namespace gausswork
