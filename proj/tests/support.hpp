#pragma once

// Random generators and independent oracles shared by the unit tests and the
// acceptance runner. Nothing here calls the section minimizer or the Manin
// formula of the library.

#include <algorithm>
#include <array>
#include <cstdint>
#include <random>
#include <vector>

#include "kcone/cones.hpp"
#include "kcone/threefold.hpp"

namespace kcone::testing {

using Rng = std::mt19937_64;

inline long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

inline DivisorClass random_class(Rng& rng, long lo, long hi) {
  DivisorClass::Coordinates c;
  for (auto& v : c) v = uniform(rng, lo, hi);
  return DivisorClass(c);
}

inline WeylWord random_word(Rng& rng, std::size_t max_length, int letters = kNumRoots) {
  std::vector<int> w(static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(max_length))));
  for (auto& l : w) l = static_cast<int>(uniform(rng, 0, letters - 1));
  return WeylWord(std::move(w));
}

inline SectionCoords random_integral_coords(Rng& rng, long bound) {
  std::array<long, kMwRank> a;
  for (auto& v : a) v = uniform(rng, -bound, bound);
  return SectionCoords::from_ints(a);
}

/// Random element of any coset: integral part in [-bound, bound].
inline SectionCoords random_coords(Rng& rng, long bound) {
  SectionCoords t = random_integral_coords(rng, bound);
  switch (uniform(rng, 0, 2)) {
    case 1: return t + SectionCoords::coset_generator();
    case 2: return t - SectionCoords::coset_generator();
    default: return t;
  }
}

inline DivisorClass random_interior_point(Rng& rng, long max_weight) {
  std::array<long, kNumRoots> w;
  for (auto& v : w) v = uniform(rng, 1, max_weight);
  return chamber_probe(w);
}

/// Section class from coordinates, evaluated directly from
/// 3d h - (d - s - 1) e1 - sum (d + a_i) e_i with n = 3a.
inline std::array<long long, kPicardRank> manin_from_thirds(const std::array<long long, kMwRank>& n) {
  long long sum = 0;
  long long squares = 0;
  for (long long v : n) {
    sum += v;
    squares += v * v;
  }
  // 9d = (sum n^2 + (sum n)^2) / 2 + 3 sum n, 9s = 3 sum n.
  const long long d9 = (squares + sum * sum) / 2 + 3 * sum;
  const long long s9 = 3 * sum;
  std::array<long long, kPicardRank> out{};
  out[0] = 3 * d9 / 9;
  out[1] = -(d9 - s9 - 9) / 9;
  for (int i = 0; i < kMwRank; ++i) out[i + 2] = -(d9 + 3 * n[i]) / 9;
  return out;
}

struct BruteMinimum {
  long long value18 = 0;                              // 18 * min x.sigma
  std::vector<std::array<long long, kMwRank>> argmin;  // in thirds, sorted
  std::size_t leaves = 0;
};

/// Exhaustive minimum of x.sigma over sections with 3a in [lo3[i], hi3[i]],
/// all cosets. The pruning bound drops the nonnegative k (sum n)^2 term, so
/// it only uses the separable part and needs no factorization.
inline BruteMinimum brute_force_min(const std::array<long long, kPicardRank>& x,
                                    const std::array<long long, kMwRank>& lo3,
                                    const std::array<long long, kMwRank>& hi3) {
  // 18 x.sigma = k (sum n_i^2 + (sum n_i)^2) + 6 sum L_i n_i - 18 x_e1,
  // k = 3 x_h + sum x_ei, L_i = k - x_e1 + x_ei.
  long long k = 3 * x[0];
  for (int i = 1; i < kPicardRank; ++i) k += x[i];
  std::array<long long, kMwRank> L;
  for (int i = 0; i < kMwRank; ++i) L[i] = k - x[1] + x[i + 2];
  const long long c18 = -18 * x[1];

  BruteMinimum out;
  out.value18 = c18;  // a = 0 gives the section e1
  for (int coset = 0; coset < 3; ++coset) {
    const long long residue = (3 - coset) % 3;  // n = 3a = -coset mod 3
    std::array<std::vector<long long>, kMwRank> values;
    std::array<long long, kMwRank + 1> tail_min{};
    bool empty = false;
    for (int i = 0; i < kMwRank; ++i) {
      for (long long n = lo3[i]; n <= hi3[i]; ++n) {
        if (((n % 3) + 3) % 3 == residue) values[i].push_back(n);
      }
      if (values[i].empty()) empty = true;
    }
    if (empty) continue;
    for (int i = kMwRank - 1; i >= 0; --i) {
      long long best = INT64_MAX;
      for (long long n : values[i]) best = std::min(best, k * n * n + 6 * L[i] * n);
      tail_min[i] = tail_min[i + 1] + best;
    }
    std::array<long long, kMwRank> n{};
    auto rec = [&](auto& self, int i, long long partial, long long sum) -> void {
      if (partial + tail_min[i] + c18 > out.value18) return;
      if (i == kMwRank) {
        ++out.leaves;
        long long v = partial + k * sum * sum + c18;
        if (v < out.value18) {
          out.value18 = v;
          out.argmin.clear();
        }
        if (v == out.value18) out.argmin.push_back(n);
        return;
      }
      for (long long v : values[i]) {
        n[i] = v;
        self(self, i + 1, partial + k * v * v + 6 * L[i] * v, sum + v);
      }
    };
    rec(rec, 0, 0, 0);
  }
  // a = 0 itself is always a candidate with value c18.
  bool zero_seen = false;
  for (const auto& a : out.argmin) zero_seen = zero_seen || a == std::array<long long, kMwRank>{};
  if (out.value18 == c18 && !zero_seen) out.argmin.push_back({});
  std::sort(out.argmin.begin(), out.argmin.end());
  out.argmin.erase(std::unique(out.argmin.begin(), out.argmin.end()), out.argmin.end());
  return out;
}

inline std::array<long long, kPicardRank> to_ll(const DivisorClass& x) {
  std::array<long long, kPicardRank> out;
  for (std::size_t k = 0; k < kPicardRank; ++k) out[k] = x[k].get_si();
  return out;
}

inline std::array<long long, kMwRank> to_thirds(const SectionCoords& a) {
  std::array<long long, kMwRank> out;
  for (int i = 0; i < kMwRank; ++i) {
    Rational v = a.values()[i] * 3;
    out[i] = v.get_num().get_si();
  }
  return out;
}

}  // namespace kcone::testing
