#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <stdexcept>
#include <vector>

namespace bicseek {

/// Seeded random source used by every stochastic component.
///
/// The engine is std::mt19937_64, whose output sequence is fixed by the
/// standard. Distributions are hand-rolled on top of it because the standard
/// library's distribution objects produce different streams on different
/// implementations, which would break seed-for-seed reproducibility.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform integer in [0, bound), bound > 0. Rejection sampling, no modulo bias.
  std::uint64_t uniform_u64(std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("Rng::uniform_u64: bound must be > 0");
    const std::uint64_t threshold = (~bound + 1) % bound;  // 2^64 mod bound
    std::uint64_t x = engine_();
    while (x < threshold) x = engine_();
    return x % bound;
  }

  std::size_t uniform_index(std::size_t bound) {
    return static_cast<std::size_t>(uniform_u64(static_cast<std::uint64_t>(bound)));
  }

  /// Uniform real in [0, 1) with 53 random bits.
  double uniform_real() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  double uniform_real(double lo, double hi) { return lo + (hi - lo) * uniform_real(); }

  /// Standard normal via Box-Muller; the spare value is cached.
  double normal() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    double u1 = uniform_real();
    while (u1 <= 0.0) u1 = uniform_real();
    const double u2 = uniform_real();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double t = 2.0 * 3.14159265358979323846 * u2;
    spare_ = r * std::sin(t);
    has_spare_ = true;
    return r * std::cos(t);
  }

  double normal(double mean, double sigma) { return mean + sigma * normal(); }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[uniform_index(i)]);
  }

  /// k distinct indices from [0, n), returned sorted ascending.
  std::vector<std::size_t> sample_sorted(std::size_t n, std::size_t k) {
    if (k > n) throw std::invalid_argument("Rng::sample_sorted: k > n");
    std::vector<std::size_t> out;
    out.reserve(k);
    if (k * 3 >= n) {
      std::vector<std::size_t> idx(n);
      for (std::size_t i = 0; i < n; ++i) idx[i] = i;
      shuffle(idx);
      out.assign(idx.begin(), idx.begin() + static_cast<std::ptrdiff_t>(k));
    } else {
      std::vector<bool> taken(n, false);
      while (out.size() < k) {
        const std::size_t c = uniform_index(n);
        if (!taken[c]) {
          taken[c] = true;
          out.push_back(c);
        }
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  std::mt19937_64 engine_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

/// Stable 64-bit mix for deriving independent sub-stream seeds.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (salt + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace bicseek
