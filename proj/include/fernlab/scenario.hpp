#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "fernlab/blockshape.hpp"
#include "fernlab/hodge.hpp"
#include "fernlab/matrix.hpp"

namespace fernlab::cli {

// Deterministic 64-bit generator (splitmix64); the single source of
// randomness, so identical (scenario, seed) runs are byte-identical.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();
  // Uniform on {lo..hi} (small ranges only).
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);

 private:
  std::uint64_t state_;
};

struct ScenarioFile {
  std::optional<int> n;
  std::optional<std::vector<int>> r;
  std::set<int> i0prime;
  int d_l = 1;
  std::optional<Matrix> g;
  std::optional<std::vector<std::int64_t>> weights;
  std::optional<hodge::GL4Params> gl4;
  std::optional<std::uint64_t> seed;
  std::optional<int> k;      // Steinberg segment length
  int cusp = 1;              // Steinberg cuspidal block size
  std::optional<std::set<int>> j0, j1;

  weyl::BlockShape shape() const;  // requires n and r
  hodge::Weights flag_weights() const;
};

// Parses and validates the JSON scenario text. Parse failures raise
// Error(Parse); invariant violations raise Error(Validation) or finer kinds.
ScenarioFile parse_scenario(const std::string& json_text);

// Unit upper-triangular with off-diagonal entries uniform in {-9..9}.
Matrix sample_unit_upper(int n, Rng& rng);

// g = b*w0 resampled (<= 100 tries) until the flag of g is non-critical for
// the shape.
Matrix sample_generic_g(const weyl::BlockShape& shape, Rng& rng);

}  // namespace fernlab::cli
