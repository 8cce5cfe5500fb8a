#pragma once

// Sections of the elliptic fibration in Mordell-Weil coordinates, Manin's
// formula for their divisor classes, and the translation group acting on
// Pic(S) by lattice isometries.

#include <array>
#include <optional>
#include <span>
#include <vector>

#include "kcone/lattice.hpp"
#include "kcone/weyl.hpp"

namespace kcone {

inline constexpr int kMwRank = 8;

/// Coordinates (a2, ..., a9) of the Mordell-Weil element -sum a_i [e_i - e_1].
/// All a_i are congruent to -coset/3 modulo 1; coset 0 is the subgroup
/// generated by translations by e1, ..., e9.
class SectionCoords {
 public:
  using Values = std::array<Rational, kMwRank>;

  SectionCoords() = default;
  /// Derives the coset from the values; throws InvalidArgument when the
  /// residues disagree or a denominator is not 1 or 3.
  explicit SectionCoords(const Values& a);
  /// Same, and also checks the declared coset.
  SectionCoords(const Values& a, int coset);

  static SectionCoords zero() { return SectionCoords(); }
  static SectionCoords from_ints(std::span<const long, kMwRank> a);
  /// Coordinates of the section e_j: zero for j = 1, -delta_j otherwise.
  static SectionCoords of_exceptional(int j);
  /// The generator 1/3 sum_{i>=2} [e_i - e_1] of the index-three extension.
  static SectionCoords coset_generator();

  /// a_i for 2 <= i <= 9.
  const Rational& a(int i) const;
  const Values& values() const { return a_; }
  int coset() const { return coset_; }
  bool is_zero() const;

  friend SectionCoords operator+(const SectionCoords& x, const SectionCoords& y);
  friend SectionCoords operator-(const SectionCoords& x);
  friend SectionCoords operator-(const SectionCoords& x, const SectionCoords& y) { return x + (-y); }
  friend bool operator==(const SectionCoords& x, const SectionCoords& y);
  friend bool operator<(const SectionCoords& x, const SectionCoords& y);

  std::string to_string() const;

 private:
  Values a_{};
  int coset_ = 0;
};

/// d and s of Manin's formula, with a_1 := 0 so every sum runs over 2..9.
struct ManinAux {
  Rational d;
  Rational s;
};

ManinAux manin_aux(const SectionCoords::Values& a);

/// 3d h - (d - s - 1) e1 - sum_{i>=2} (d + a_i) e_i.
DivisorClass manin_class(const SectionCoords& a);
/// Evaluates the formula on arbitrary rationals; throws NonIntegral when a
/// coefficient is not an integer.
DivisorClass manin_class(const SectionCoords::Values& a);

/// Left inverse of manin_class. Throws NotASection.
SectionCoords class_to_coords(const DivisorClass& sigma);

SectionCoords mw_add(const SectionCoords& a, const SectionCoords& b);

/// The isometry of Pic(S) induced by translation by t. Fixes f and sends
/// the section with coordinates c to the section with coordinates c + t.
LatticeMap translation_map(const SectionCoords& t);

/// Interior probe point of the fundamental chamber with x.alpha_k = weights[k]
/// and zero e9-coefficient. Weights must be positive.
DivisorClass chamber_probe(std::span<const long, kNumRoots> weights);
DivisorClass default_chamber_probe();

/// Expresses translation by t as a word in the fundamental reflections by
/// reducing t(x) for interior probe points x and checking matrix equality.
/// Throws WordNotFound if no probe yields a matching word.
WeylWord translation_as_weyl_word(const SectionCoords& t, long max_steps = kDefaultMaxSteps,
                                  std::span<const DivisorClass> probes = {});

/// How the printed permutation tuples are read.
enum class TupleReading { OneLine, Cycle };

const char* tuple_reading_name(TupleReading r);

/// The six printed permutations P1..P6 (index 0 holds P1) of the product
/// P6 w_s P5 w_s P4 w_s P3 w_s P2 w_s P1 t_2 = Id, with w_s the reflection
/// in h - e1 - e2 - e3.
struct PrintedWordData {
  std::array<std::array<int, kBlowups>, 6> perms;
};

PrintedWordData printed_word_data();

/// The composite word P6 w_s ... w_s P1 under a given reading of the tuples.
WeylWord printed_word(const PrintedWordData& data, TupleReading reading);

struct PrintedWordCheck {
  bool one_line_identity = false;
  bool cycle_identity = false;
  std::optional<TupleReading> interpretation;  // set iff exactly one reading works
  bool ok = false;                             // at least one reading works
};

PrintedWordCheck verify_paper_word(const PrintedWordData& data);
PrintedWordCheck verify_paper_word();

}  // namespace kcone
