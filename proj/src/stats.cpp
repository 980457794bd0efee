#include "prank/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace prank {

namespace {
constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;
}

std::uint64_t mix64(std::uint64_t x) noexcept {
  x ^= x >> 30;
  x *= 0xBF58476D1CE4E5B9ULL;
  x ^= x >> 27;
  x *= 0x94D049BB133111EBULL;
  x ^= x >> 31;
  return x;
}

RngStream::RngStream(std::uint64_t seed, std::uint64_t stream_id)
    : seed_(seed), stream_(stream_id), key_(mix64(mix64(seed + kGolden) ^ (stream_id * 0xD6E8FEB86659FD93ULL))) {}

std::uint64_t RngStream::next() noexcept {
  ++counter_;
  return mix64(key_ + counter_ * kGolden);
}

double RngStream::uniform() noexcept { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

std::uint64_t RngStream::uniform_int(std::uint64_t lo, std::uint64_t hi) noexcept {
  const std::uint64_t range = hi - lo + 1;
  if (range == 0) return next();
  // Lemire's nearly-divisionless bounded draw.
  unsigned __int128 m = static_cast<unsigned __int128>(next()) * range;
  auto low = static_cast<std::uint64_t>(m);
  if (low < range) {
    const std::uint64_t threshold = -range % range;
    while (low < threshold) {
      m = static_cast<unsigned __int128>(next()) * range;
      low = static_cast<std::uint64_t>(m);
    }
  }
  return lo + static_cast<std::uint64_t>(m >> 64);
}

RngStream RngStream::derive(std::uint64_t id) const noexcept { return RngStream(key_, id); }

double draw(const Distribution& dist, RngStream& rng) {
  auto standard_normal = [&rng] {
    const double u1 = 1.0 - rng.uniform();  // (0, 1]
    const double u2 = rng.uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
  };
  return std::visit(
      [&](const auto& d) -> double {
        using T = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<T, Normal>) {
          if (!(d.stddev > 0)) throw std::invalid_argument("normal: stddev must be > 0");
          return d.mean + d.stddev * standard_normal();
        } else if constexpr (std::is_same_v<T, Uniform>) {
          if (!(d.lo < d.hi)) throw std::invalid_argument("uniform: requires lo < hi");
          return d.lo + (d.hi - d.lo) * rng.uniform();
        } else if constexpr (std::is_same_v<T, LogNormal>) {
          if (!(d.sigma > 0)) throw std::invalid_argument("lognormal: sigma must be > 0");
          return std::exp(d.mu + d.sigma * standard_normal());
        } else {
          if (!(d.rate > 0)) throw std::invalid_argument("exponential: rate must be > 0");
          return -std::log1p(-rng.uniform()) / d.rate;
        }
      },
      dist);
}

double kolmogorov_q(double lambda) {
  if (!(lambda > 0)) return 1.0;
  double q;
  if (lambda < 1.18) {
    // Dual theta-function form; the alternating series converges too slowly here.
    const double pi2 = std::numbers::pi * std::numbers::pi;
    double sum = 0.0;
    for (int j = 1; j < 100; ++j) {
      const double k = 2.0 * j - 1.0;
      const double term = std::exp(-k * k * pi2 / (8.0 * lambda * lambda));
      sum += term;
      if (term < 1e-12) break;
    }
    q = 1.0 - std::sqrt(2.0 * std::numbers::pi) / lambda * sum;
  } else {
    double sum = 0.0;
    double sign = 1.0;
    for (int j = 1; j < 100; ++j) {
      const double term = std::exp(-2.0 * j * j * lambda * lambda);
      sum += sign * term;
      sign = -sign;
      if (term < 1e-12) break;
    }
    q = 2.0 * sum;
  }
  return std::clamp(q, 0.0, 1.0);
}

KsResult ks_two_sample(std::span<const double> a, std::span<const double> b) {
  if (a.empty() || b.empty()) throw std::invalid_argument("ks_two_sample: empty sample");
  auto finite = [](double x) { return std::isfinite(x); };
  if (!std::all_of(a.begin(), a.end(), finite) || !std::all_of(b.begin(), b.end(), finite)) {
    throw std::invalid_argument("ks_two_sample: non-finite value");
  }
  std::vector<double> x(a.begin(), a.end());
  std::vector<double> y(b.begin(), b.end());
  std::sort(x.begin(), x.end());
  std::sort(y.begin(), y.end());

  const double n = static_cast<double>(x.size());
  const double m = static_cast<double>(y.size());
  std::size_t i = 0, j = 0;
  double d = 0.0;
  while (i < x.size() && j < y.size()) {
    // Advance both ECDFs past every copy of the next value before measuring.
    const double v = std::min(x[i], y[j]);
    while (i < x.size() && x[i] == v) ++i;
    while (j < y.size() && y[j] == v) ++j;
    d = std::max(d, std::abs(static_cast<double>(i) / n - static_cast<double>(j) / m));
  }

  KsResult r;
  r.statistic = d;
  r.n = x.size();
  r.m = y.size();
  if (d == 0.0) {
    r.p_value = 1.0;
  } else {
    const double ne = n * m / (n + m);
    const double sq = std::sqrt(ne);
    r.p_value = kolmogorov_q((sq + 0.12 + 0.11 / sq) * d);
  }
  return r;
}

double harmonic(std::size_t n) {
  if (n < 1) throw std::invalid_argument("harmonic: n must be >= 1");
  double h = 0.0;
  for (std::size_t k = n; k >= 1; --k) h += 1.0 / static_cast<double>(k);
  return h;
}

double harmonic_euler(std::size_t n) {
  if (n < 1) throw std::invalid_argument("harmonic_euler: n must be >= 1");
  const double x = static_cast<double>(n);
  return std::log(x) + 1.0 / (2.0 * x) + 0.57722;
}

}  // namespace prank
