#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "nhm/kernel.hpp"

namespace nhm::testing {

using Rng = std::mt19937_64;

inline constexpr std::uint64_t kDefaultSeed = 20240917;

inline long uniform(Rng& rng, long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng);
}

inline bool coin(Rng& rng, int percent = 50) { return uniform(rng, 0, 99) < percent; }

// Small denominators keep coincidences (shared abscissae, equal endpoints)
// frequent enough to exercise the boundary cases.
inline Rational rational(Rng& rng, long span = 6) {
  static constexpr long dens[] = {1, 2, 3, 4, 8};
  const long den = dens[uniform(rng, 0, 4)];
  return make_rational(uniform(rng, -span * den, span * den), den);
}

inline Rational positive(Rng& rng, long span = 3) {
  static constexpr long dens[] = {1, 2, 4, 8};
  const long den = dens[uniform(rng, 0, 3)];
  return make_rational(uniform(rng, 1, span * den), den);
}

/// Length 1..max_len; the last step is an equality with probability twin_pct.
inline FeatherPoint feather_point(Rng& rng, std::size_t max_len = 4, int twin_pct = 30) {
  const auto len = static_cast<std::size_t>(uniform(rng, 1, static_cast<long>(max_len)));
  std::vector<Rational> s{rational(rng)};
  for (std::size_t i = 1; i < len; ++i) {
    if (i + 1 == len && coin(rng, twin_pct)) {
      s.push_back(s.back());
    } else {
      s.push_back(Rational(s.back() + positive(rng)));
    }
  }
  return FeatherPoint::make(std::move(s));
}

inline MultiLinePoint line_point(Rng& rng, unsigned k) {
  return {rational(rng), static_cast<unsigned>(uniform(rng, 0, k - 1))};
}

inline IntervalSet interval_set(Rng& rng, int max_parts = 3) {
  std::vector<Interval> raw;
  const long n = uniform(rng, 0, max_parts);
  for (long i = 0; i < n; ++i) {
    ExtRat lo = coin(rng, 10) ? ExtRat::neg_inf() : ExtRat(rational(rng));
    ExtRat hi = coin(rng, 10) ? ExtRat::pos_inf() : ExtRat(rational(rng));
    if (hi < lo) std::swap(lo, hi);
    raw.push_back({lo, hi});
  }
  return IntervalSet(std::move(raw));
}

/// Wave over a random base; a few base points are lifted to random levels.
inline Wave wave(Rng& rng, unsigned k) {
  IntervalSet base = interval_set(rng);
  std::map<Rational, unsigned> lift;
  if (k > 1) {
    for (int i = 0; i < 3; ++i) {
      const Rational x = rational(rng);
      if (iset_contains(base, x) && coin(rng, 60)) {
        lift[x] = static_cast<unsigned>(uniform(rng, 1, k - 1));
      }
    }
  }
  return Wave(std::move(base), std::move(lift));
}

}  // namespace nhm::testing
