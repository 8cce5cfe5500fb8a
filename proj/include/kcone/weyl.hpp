#pragma once

// Root basis B of f-perp, the Weyl group W it generates, and reduction of
// classes into the closed fundamental chamber by successive reflections.

#include <array>
#include <bitset>
#include <cstdint>
#include <span>
#include <vector>

#include "kcone/lattice.hpp"

namespace kcone {

inline constexpr int kNumRoots = 9;
inline constexpr long kDefaultMaxSteps = 10000;

/// A simple root: index 0 is h - e1 - e2 - e3, index i in 1..8 is e_i - e_{i+1}.
struct Root {
  int index;
  DivisorClass cls;
};

const std::array<Root, kNumRoots>& simple_roots();
const DivisorClass& simple_root(int index);

using RootSubset = std::bitset<kNumRoots>;

inline RootSubset all_roots() { return RootSubset().set(); }
/// The E8 sub-basis: every simple root except e8 - e9.
inline RootSubset e8_roots() { return RootSubset().set().reset(8); }

/// s_alpha(x) = x + (x.alpha) alpha. Rejects alpha with alpha^2 != -2.
DivisorClass reflect(const DivisorClass& x, const DivisorClass& alpha);
DivisorClass reflect(const DivisorClass& x, int root_index);

/// A product of fundamental reflections. letters[0] is applied last, i.e.
/// the word [l0, l1, ..., lk] is the map s_l0 s_l1 ... s_lk.
class WeylWord {
 public:
  WeylWord() = default;
  explicit WeylWord(std::vector<int> letters);

  const std::vector<int>& letters() const { return letters_; }
  const LatticeMap& matrix() const { return matrix_; }
  std::size_t length() const { return letters_.size(); }

  WeylWord inverse() const;
  /// (a * b)(x) = a(b(x)).
  friend WeylWord operator*(const WeylWord& a, const WeylWord& b);
  friend bool operator==(const WeylWord& a, const WeylWord& b) { return a.letters_ == b.letters_; }

 private:
  WeylWord(std::vector<int> letters, LatticeMap matrix)
      : letters_(std::move(letters)), matrix_(std::move(matrix)) {}

  std::vector<int> letters_;
  LatticeMap matrix_;
};

/// Folds reflect over the letters, right to left.
DivisorClass apply_word(const WeylWord& w, const DivisorClass& x);

bool word_is_identity(const WeylWord& w);

enum class ChamberPosition { Interior, Boundary, Outside };

const char* chamber_position_name(ChamberPosition p);

/// Position of x relative to the fundamental chamber {x : x.alpha > 0 for all alpha in B}.
ChamberPosition chamber_position(const DivisorClass& x);

struct Reduction {
  WeylWord word;       // word(x) == image
  DivisorClass image;  // pairs >= 0 with every root of the subset
};

/// Reflect in the lowest-index root of `roots` that pairs strictly
/// negatively with the current class until none does. Throws
/// Error(NotReduced) after max_steps reflections.
Reduction bourbaki_reduce(const DivisorClass& x, RootSubset roots, long max_steps = kDefaultMaxSteps);

/// Membership in the union of the W(E8)-translates of the closed chamber.
bool in_fundamental_domain(const DivisorClass& x);

/// Permutation pi of {1..9} acting by e_i -> e_{pi(i)}, written as a word in
/// the adjacent transpositions e_i - e_{i+1}. `image[i-1]` is pi(i).
WeylWord permutation_word(std::span<const int, kBlowups> image);

/// The one-line form of a single cycle (c1 c2 ... ck) on {1..9}.
std::array<int, kBlowups> cycle_to_one_line(std::span<const int> cycle);

}  // namespace kcone
