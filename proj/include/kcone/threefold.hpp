#pragma once

// Divisor classes on the fiber product X = S1 x_{P1} S2. A class is a pair
// (A1, A2) of surface classes modulo (A1, A2) ~ (A1 + m f, A2 - m f).

#include <array>
#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "kcone/cones.hpp"
#include "kcone/lattice.hpp"
#include "kcone/mordell_weil.hpp"

namespace kcone {

inline constexpr int kThreefoldRank = 2 * kPicardRank - 1;

int picard_rank();

class ThreefoldClass {
 public:
  using Coordinates = std::array<Integer, kThreefoldRank>;

  ThreefoldClass() = default;
  ThreefoldClass(DivisorClass a1, DivisorClass a2) : a1_(std::move(a1)), a2_(std::move(a2)) {}

  /// Coordinates on (h, e1..e9 of S1; h, e1..e8 of S2), with e9 of S2
  /// eliminated through f1 = f2.
  static ThreefoldClass from_coordinates(const Coordinates& v);

  /// The stored representative pair.
  const DivisorClass& a1() const { return a1_; }
  const DivisorClass& a2() const { return a2_; }

  /// The representative whose A2 has zero e9 coefficient.
  ThreefoldClass canonical() const;
  /// The gauge m with canonical() == gauge_shift(*this, m).
  Integer canonical_gauge() const;
  Coordinates coordinates() const;

  friend bool operator==(const ThreefoldClass& a, const ThreefoldClass& b);
  /// Lexicographic on coordinates().
  friend std::strong_ordering operator<=>(const ThreefoldClass& a, const ThreefoldClass& b);

  std::string to_string() const;

 private:
  DivisorClass a1_;
  DivisorClass a2_;
};

/// (A1 + m f, A2 - m f).
ThreefoldClass gauge_shift(const ThreefoldClass& a, const Integer& m);

struct ThreefoldNef {
  bool nef = false;
  std::optional<Integer> mu1;  // section_floor of A1, absent when A1.f < 0 or A1.f = 0 off the fiber line
  std::optional<Integer> mu2;
  /// Gauges m for which A1 + m f and A2 - m f are both nef: [-mu1, mu2].
  std::optional<std::pair<Integer, Integer>> interval;
  std::optional<Integer> witness;  // -mu1 when the interval is nonempty
};

ThreefoldNef threefold_nef_verdict(const ThreefoldClass& a);
bool threefold_nef_test(const ThreefoldClass& a);

struct ThreefoldMap {
  LatticeMap map1;
  LatticeMap map2;

  ThreefoldClass apply(const ThreefoldClass& a) const;
  bool fixes_fiber() const;
};

ThreefoldMap aut_element(const SectionCoords& t1, const SectionCoords& t2);

struct ThreefoldReduction {
  SectionCoords t1;
  SectionCoords t2;
  /// aut_element(t1, t2) applied to the input, stored in the gauge where
  /// both factors lie in their fundamental domains.
  ThreefoldClass image;
  /// Gauge m used before reducing: the nef witness, or 0 for non-nef input.
  Integer gauge;
};

ThreefoldReduction threefold_reduce(const ThreefoldClass& a, long max_steps = kDefaultMaxSteps);

struct CensusEntry {
  ThreefoldClass representative;  // canonical gauge
  int factor = 0;                 // 1 or 2; 0 for the common fiber class
  DivisorClass surface_edge;      // orbit representative on its factor
  std::size_t hits = 0;           // enumerated rays landing on this entry
  std::size_t domain_points = 0;  // points of the surface orbit inside the domain
  bool nef = false;
  bool in_domain = false;
};

struct CensusReport {
  long bound = 0;
  std::size_t chamber_edges = 0;
  std::size_t translations = 0;
  std::size_t rays = 0;
  std::vector<CensusEntry> representatives;  // sorted by representative

  bool all_nef() const;
  bool all_in_domain() const;
  std::vector<ThreefoldClass> representative_set() const;
};

/// Translations used by the census at a bound: integral t with
/// |t|_1 <= bound, and +-(coset_generator + n) with |n|_1 <= bound - 1.
std::vector<SectionCoords> census_translations(long bound);

/// Edges of the nef cone of X obtained from chamber edges of either factor
/// moved by census_translations(bound), reduced and collected up to Aut(X).
CensusReport edge_orbit_census(long bound, long max_steps = kDefaultMaxSteps);

}  // namespace kcone
