#include "kcone/weyl.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "kcone/error.hpp"

namespace kcone {

namespace {

std::array<Root, kNumRoots> build_roots() {
  std::array<Root, kNumRoots> roots;
  roots[0] = {0, DivisorClass::from_ints({1, -1, -1, -1, 0, 0, 0, 0, 0, 0})};
  for (int i = 1; i <= 8; ++i) {
    roots[i] = {i, DivisorClass::exceptional(i) - DivisorClass::exceptional(i + 1)};
  }
  return roots;
}

void check_letter(int letter) {
  if (letter < 0 || letter >= kNumRoots) {
    throw Error(ErrorCode::InvalidArgument, "root index out of range: " + std::to_string(letter));
  }
}

// Left-multiply m by the reflection in alpha: s(M) = M + alpha (alpha^T G M).
void reflect_rows(LatticeMap& m, const DivisorClass& alpha) {
  for (std::size_t col = 0; col < kPicardRank; ++col) {
    Integer p = pair(m.column(col), alpha);
    if (sgn(p) == 0) continue;
    for (std::size_t row = 0; row < kPicardRank; ++row) {
      if (sgn(alpha[row]) != 0) m.at(row, col) += p * alpha[row];
    }
  }
}

LatticeMap word_matrix(const std::vector<int>& letters) {
  LatticeMap m;
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) reflect_rows(m, simple_root(*it));
  return m;
}

}  // namespace

const std::array<Root, kNumRoots>& simple_roots() {
  static const std::array<Root, kNumRoots> roots = build_roots();
  return roots;
}

const DivisorClass& simple_root(int index) {
  check_letter(index);
  return simple_roots()[index].cls;
}

DivisorClass reflect(const DivisorClass& x, const DivisorClass& alpha) {
  if (pair(alpha, alpha) != -2) {
    throw Error(ErrorCode::InvalidArgument, "reflection requires a class of self-intersection -2, got " +
                                                alpha.to_string());
  }
  return x + pair(x, alpha) * alpha;
}

DivisorClass reflect(const DivisorClass& x, int root_index) {
  const DivisorClass& alpha = simple_root(root_index);
  return x + pair(x, alpha) * alpha;
}

WeylWord::WeylWord(std::vector<int> letters) : letters_(std::move(letters)) {
  for (int l : letters_) check_letter(l);
  matrix_ = word_matrix(letters_);
}

WeylWord WeylWord::inverse() const {
  std::vector<int> rev(letters_.rbegin(), letters_.rend());
  return WeylWord(std::move(rev), matrix_.isometry_inverse());
}

WeylWord operator*(const WeylWord& a, const WeylWord& b) {
  std::vector<int> letters = a.letters_;
  letters.insert(letters.end(), b.letters_.begin(), b.letters_.end());
  return WeylWord(std::move(letters), a.matrix_ * b.matrix_);
}

DivisorClass apply_word(const WeylWord& w, const DivisorClass& x) {
  DivisorClass y = x;
  const auto& letters = w.letters();
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) y = reflect(y, *it);
  return y;
}

bool word_is_identity(const WeylWord& w) { return w.matrix().is_identity(); }

const char* chamber_position_name(ChamberPosition p) {
  switch (p) {
    case ChamberPosition::Interior: return "interior";
    case ChamberPosition::Boundary: return "boundary";
    case ChamberPosition::Outside: return "outside";
  }
  return "unknown";
}

ChamberPosition chamber_position(const DivisorClass& x) {
  bool on_wall = false;
  for (const auto& root : simple_roots()) {
    int s = sgn(pair(x, root.cls));
    if (s < 0) return ChamberPosition::Outside;
    if (s == 0) on_wall = true;
  }
  return on_wall ? ChamberPosition::Boundary : ChamberPosition::Interior;
}

Reduction bourbaki_reduce(const DivisorClass& x, RootSubset roots, long max_steps) {
  if (max_steps < 1) throw Error(ErrorCode::InvalidArgument, "max_steps must be at least 1");
  DivisorClass y = x;
  // Letters are collected in application order and reversed at the end.
  std::vector<int> applied;
  for (;;) {
    int hit = -1;
    for (int i = 0; i < kNumRoots; ++i) {
      if (roots.test(i) && sgn(pair(y, simple_root(i))) < 0) {
        hit = i;
        break;
      }
    }
    if (hit < 0) break;
    if (static_cast<long>(applied.size()) >= max_steps) {
      throw Error(ErrorCode::NotReduced, "chamber reduction did not finish within " + std::to_string(max_steps) +
                                             " reflections for " + x.to_string());
    }
    y = reflect(y, hit);
    applied.push_back(hit);
  }
  std::reverse(applied.begin(), applied.end());
  return {WeylWord(std::move(applied)), std::move(y)};
}

bool in_fundamental_domain(const DivisorClass& x) {
  // Each step lengthens the reducing element by one, and the longest element
  // of W(E8) has length 120.
  Reduction r = bourbaki_reduce(x, e8_roots(), 120);
  return chamber_position(r.image) != ChamberPosition::Outside;
}

WeylWord permutation_word(std::span<const int, kBlowups> image) {
  std::set<int> seen(image.begin(), image.end());
  if (seen.size() != kBlowups || *seen.begin() != 1 || *seen.rbegin() != kBlowups) {
    throw Error(ErrorCode::InvalidArgument, "not a permutation of 1..9");
  }
  // Bubble sort the one-line form by swapping adjacent positions. Each swap
  // right-multiplies by a transposition, so pi t_j1 ... t_jm = id and
  // pi = t_jm ... t_j1.
  std::array<int, kBlowups> arr;
  std::copy(image.begin(), image.end(), arr.begin());
  std::vector<int> swaps;
  for (int pass = 0; pass < kBlowups; ++pass) {
    for (int j = 0; j + 1 < kBlowups; ++j) {
      if (arr[j] > arr[j + 1]) {
        std::swap(arr[j], arr[j + 1]);
        swaps.push_back(j + 1);
      }
    }
  }
  std::reverse(swaps.begin(), swaps.end());
  return WeylWord(std::move(swaps));
}

std::array<int, kBlowups> cycle_to_one_line(std::span<const int> cycle) {
  std::array<int, kBlowups> one_line;
  for (int i = 0; i < kBlowups; ++i) one_line[i] = i + 1;
  std::set<int> seen;
  for (int c : cycle) {
    if (c < 1 || c > kBlowups || !seen.insert(c).second) {
      throw Error(ErrorCode::InvalidArgument, "cycle entries must be distinct values in 1..9");
    }
  }
  for (std::size_t k = 0; k < cycle.size(); ++k) {
    one_line[cycle[k] - 1] = cycle[(k + 1) % cycle.size()];
  }
  return one_line;
}

}  // namespace kcone
