#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <utility>
#include <vector>

namespace outbranch {

// mt19937_64 with hand-rolled bounded draws: the standard distributions are
// not specified bit-exactly, and seeded output must match across platforms.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  // Uniform in [lo, hi], inclusive.
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);

  // Uniform in [0, 1).
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  bool chance(double p) { return unit() < p; }

  template <class T> void shuffle(std::vector<T> &v) {
    for (std::size_t i = v.size(); i > 1; --i)
      std::swap(v[i - 1], v[static_cast<std::size_t>(uniform(0, static_cast<std::int64_t>(i) - 1))]);
  }

  // Independent stream for trial `index`, stable regardless of thread count.
  static Rng for_trial(std::uint64_t seed, std::uint64_t index);

private:
  std::mt19937_64 engine_;
};

// Explicit seed if given, else SPARSE_OUTBRANCH_SEED, else `fallback`.
// Throws InputError when the variable is set but not an unsigned integer.
std::uint64_t resolve_seed(std::optional<std::uint64_t> explicit_seed, std::uint64_t fallback = 1);

} // namespace outbranch
