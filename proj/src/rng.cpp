#include "outbranch/rng.hpp"

#include <cstdlib>
#include <string>

#include "outbranch/digraph.hpp"

namespace outbranch {

std::int64_t Rng::uniform(std::int64_t lo, std::int64_t hi) {
  if (hi < lo)
    throw std::invalid_argument("Rng::uniform: empty range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  if (span == 0)
    return static_cast<std::int64_t>(next());
  // Rejection keeps the draw unbiased.
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
  std::uint64_t x;
  do
    x = next();
  while (x >= limit);
  return lo + static_cast<std::int64_t>(x % span);
}

Rng Rng::for_trial(std::uint64_t seed, std::uint64_t index) {
  // splitmix64 finalizer to decorrelate neighbouring trial indices
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return Rng(z ^ (z >> 31));
}

std::uint64_t resolve_seed(std::optional<std::uint64_t> explicit_seed, std::uint64_t fallback) {
  if (explicit_seed)
    return *explicit_seed;
  const char *env = std::getenv("SPARSE_OUTBRANCH_SEED");
  if (!env || !*env)
    return fallback;
  std::string text(env);
  std::size_t used = 0;
  unsigned long long value = 0;
  try {
    value = std::stoull(text, &used);
  } catch (const std::exception &) {
    used = 0;
  }
  if (used != text.size() || text[0] == '-')
    throw InputError("SPARSE_OUTBRANCH_SEED is not an unsigned integer: '" + text + "'");
  return value;
}

} // namespace outbranch
