#pragma once

// Exact model of Pic(S) = Z^10 for a general rational elliptic surface S,
// presented as the blowup of P^2 in nine points. Coordinates are taken in
// the basis (h, e1, ..., e9) with the intersection form diag(1, -1, ..., -1).

#include <gmpxx.h>

#include <array>
#include <compare>
#include <cstddef>
#include <span>
#include <string>

namespace kcone {

using Integer = mpz_class;
using Rational = mpq_class;

inline constexpr std::size_t kPicardRank = 10;
inline constexpr int kBlowups = 9;

/// An integral divisor class D = h_coeff * h + sum_i e_coeff[i] * e_i.
class DivisorClass {
 public:
  using Coordinates = std::array<Integer, kPicardRank>;

  DivisorClass() = default;
  DivisorClass(Integer coeff_h, const std::array<Integer, kBlowups>& coeff_e);
  explicit DivisorClass(const Coordinates& coords) : coords_(coords) {}

  static DivisorClass hyperplane();
  /// The exceptional class e_i, 1 <= i <= 9.
  static DivisorClass exceptional(int i);
  static DivisorClass from_ints(std::initializer_list<long> coords);

  const Integer& coeff_h() const { return coords_[0]; }
  /// Coefficient of e_i, 1 <= i <= 9.
  const Integer& coeff_e(int i) const;

  const Integer& operator[](std::size_t k) const { return coords_[k]; }
  std::span<const Integer, kPicardRank> coords() const { return coords_; }

  bool is_zero() const;

  DivisorClass& operator+=(const DivisorClass& other);
  DivisorClass& operator-=(const DivisorClass& other);
  DivisorClass& operator*=(const Integer& scalar);

  friend DivisorClass operator+(DivisorClass a, const DivisorClass& b) { return a += b; }
  friend DivisorClass operator-(DivisorClass a, const DivisorClass& b) { return a -= b; }
  friend DivisorClass operator-(DivisorClass a) { return a *= Integer(-1); }
  friend DivisorClass operator*(const Integer& s, DivisorClass a) { return a *= s; }
  friend DivisorClass operator*(long s, DivisorClass a) { return a *= Integer(s); }

  friend bool operator==(const DivisorClass& a, const DivisorClass& b);
  /// Lexicographic order on (h, e1, ..., e9).
  friend std::strong_ordering operator<=>(const DivisorClass& a, const DivisorClass& b);

  std::string to_string() const;

 private:
  Coordinates coords_{};
};

/// The intersection pairing x.y = x_h y_h - sum x_ei y_ei.
Integer pair(const DivisorClass& x, const DivisorClass& y);

/// f = -K_S = 3h - sum e_i, the class of a fiber.
DivisorClass fiber_class();

/// sigma^2 = -1 and sigma.f = 1.
bool is_section_class(const DivisorClass& x);

/// Entry (i, j) of the Gram matrix diag(1, -1, ..., -1).
int gram_entry(std::size_t i, std::size_t j);

/// I/O converter for the alternative basis (h, -e1, ..., -e9) in which a
/// class is written [b, a1, ..., a9]. Never used internally.
std::array<Integer, kPicardRank> to_negated_basis(const DivisorClass& x);
DivisorClass from_negated_basis(const std::array<Integer, kPicardRank>& v);

/// An integral 10x10 matrix acting on DivisorClass coordinates (columns are
/// images of the basis vectors).
class LatticeMap {
 public:
  LatticeMap();  // identity

  static LatticeMap identity() { return LatticeMap(); }
  /// Build from the images of h, e1, ..., e9.
  static LatticeMap from_images(const std::array<DivisorClass, kPicardRank>& images);

  const Integer& at(std::size_t row, std::size_t col) const { return m_[row * kPicardRank + col]; }
  Integer& at(std::size_t row, std::size_t col) { return m_[row * kPicardRank + col]; }

  DivisorClass apply(const DivisorClass& x) const;
  DivisorClass column(std::size_t col) const;

  friend LatticeMap operator*(const LatticeMap& a, const LatticeMap& b);
  friend bool operator==(const LatticeMap& a, const LatticeMap& b) = default;

  bool is_identity() const;
  /// M^T G M = G.
  bool preserves_form() const;
  bool fixes(const DivisorClass& x) const { return apply(x) == x; }
  /// Inverse of a form-preserving map, G M^T G. Throws if the map is not an isometry.
  LatticeMap isometry_inverse() const;

 private:
  std::array<Integer, kPicardRank * kPicardRank> m_;
};

}  // namespace kcone
