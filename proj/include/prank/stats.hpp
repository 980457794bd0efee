#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <variant>

namespace prank {

/*
  Counter-based random stream keyed by (seed, stream id).

  Output k is a SplitMix64-style finalizer applied to key + k * golden, so the
  sequence depends only on the two integers and the draw index, never on the
  platform's <random> implementation. Child streams are derived by hashing,
  which is how per-vertex and per-run work gets independent randomness.
*/
class RngStream {
 public:
  using result_type = std::uint64_t;

  RngStream(std::uint64_t seed, std::uint64_t stream_id = 0);

  std::uint64_t seed() const noexcept { return seed_; }
  std::uint64_t stream_id() const noexcept { return stream_; }

  std::uint64_t next() noexcept;
  result_type operator()() noexcept { return next(); }
  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

  /// Uniform on [0, 1) with 53 random bits.
  double uniform() noexcept;
  /// Uniform integer on [lo, hi], unbiased.
  std::uint64_t uniform_int(std::uint64_t lo, std::uint64_t hi) noexcept;

  /// Independent stream keyed by this stream's identity and `id`.
  RngStream derive(std::uint64_t id) const noexcept;

 private:
  std::uint64_t seed_;
  std::uint64_t stream_;
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

/// 64-bit avalanche mix, exposed for seed derivation.
std::uint64_t mix64(std::uint64_t x) noexcept;

struct Normal {
  double mean = 0.0;
  double stddev = 1.0;
};
struct Uniform {
  double lo = 0.0;
  double hi = 1.0;
};
struct LogNormal {
  double mu = 0.0;
  double sigma = 1.0;
};
struct Exponential {
  double rate = 1.0;
};
using Distribution = std::variant<Normal, Uniform, LogNormal, Exponential>;

/// One variate. Normal draws use the Box-Muller transform of two uniforms.
/// Throws std::invalid_argument on invalid parameters.
double draw(const Distribution& dist, RngStream& rng);

struct KsResult {
  double statistic = 0.0;
  double p_value = 1.0;
  std::size_t n = 0;
  std::size_t m = 0;
};

/// Two-sample Kolmogorov-Smirnov test. The statistic is the exact sup gap of
/// the two ECDFs; the p-value is the asymptotic Kolmogorov distribution with
/// Stephens' effective-size correction.
KsResult ks_two_sample(std::span<const double> a, std::span<const double> b);

/// Complementary Kolmogorov distribution Q(lambda) = P(K > lambda).
double kolmogorov_q(double lambda);

/// Exact partial sum 1 + 1/2 + ... + 1/n.
double harmonic(std::size_t n);
/// ln(n) + 1/(2n) + 0.57722.
double harmonic_euler(std::size_t n);

}  // namespace prank
