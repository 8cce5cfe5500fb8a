#include "kcone/lattice.hpp"

#include <sstream>

#include "kcone/error.hpp"

namespace kcone {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "INVALID_ARGUMENT";
    case ErrorCode::NotASection: return "NOT_A_SECTION";
    case ErrorCode::NotReduced: return "NOT_REDUCED";
    case ErrorCode::NonIntegral: return "NON_INTEGRAL";
    case ErrorCode::InternalNonIntegral: return "INTERNAL_NON_INTEGRAL";
    case ErrorCode::WordNotFound: return "WORD_NOT_FOUND";
    case ErrorCode::FiberDegenerate: return "FIBER_DEGENERATE";
    case ErrorCode::Degenerate: return "DEGENERATE";
    case ErrorCode::MalformedInput: return "MALFORMED_INPUT";
    case ErrorCode::Internal: return "INTERNAL";
  }
  return "UNKNOWN";
}

DivisorClass::DivisorClass(Integer coeff_h, const std::array<Integer, kBlowups>& coeff_e) {
  coords_[0] = std::move(coeff_h);
  for (int i = 0; i < kBlowups; ++i) coords_[i + 1] = coeff_e[i];
}

DivisorClass DivisorClass::hyperplane() {
  DivisorClass x;
  x.coords_[0] = 1;
  return x;
}

DivisorClass DivisorClass::exceptional(int i) {
  if (i < 1 || i > kBlowups) {
    throw Error(ErrorCode::InvalidArgument, "exceptional index out of range: " + std::to_string(i));
  }
  DivisorClass x;
  x.coords_[i] = 1;
  return x;
}

DivisorClass DivisorClass::from_ints(std::initializer_list<long> coords) {
  if (coords.size() != kPicardRank) {
    throw Error(ErrorCode::InvalidArgument, "a divisor class has 10 coordinates");
  }
  DivisorClass x;
  std::size_t k = 0;
  for (long c : coords) x.coords_[k++] = c;
  return x;
}

const Integer& DivisorClass::coeff_e(int i) const {
  if (i < 1 || i > kBlowups) {
    throw Error(ErrorCode::InvalidArgument, "exceptional index out of range: " + std::to_string(i));
  }
  return coords_[i];
}

bool DivisorClass::is_zero() const {
  for (const auto& c : coords_) {
    if (sgn(c) != 0) return false;
  }
  return true;
}

DivisorClass& DivisorClass::operator+=(const DivisorClass& other) {
  for (std::size_t k = 0; k < kPicardRank; ++k) coords_[k] += other.coords_[k];
  return *this;
}

DivisorClass& DivisorClass::operator-=(const DivisorClass& other) {
  for (std::size_t k = 0; k < kPicardRank; ++k) coords_[k] -= other.coords_[k];
  return *this;
}

DivisorClass& DivisorClass::operator*=(const Integer& scalar) {
  for (auto& c : coords_) c *= scalar;
  return *this;
}

bool operator==(const DivisorClass& a, const DivisorClass& b) {
  for (std::size_t k = 0; k < kPicardRank; ++k) {
    if (a.coords_[k] != b.coords_[k]) return false;
  }
  return true;
}

std::strong_ordering operator<=>(const DivisorClass& a, const DivisorClass& b) {
  for (std::size_t k = 0; k < kPicardRank; ++k) {
    int c = cmp(a.coords_[k], b.coords_[k]);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

std::string DivisorClass::to_string() const {
  std::ostringstream os;
  os << "(" << coords_[0] << ";";
  for (int i = 1; i <= kBlowups; ++i) os << (i == 1 ? " " : ", ") << coords_[i];
  os << ")";
  return os.str();
}

Integer pair(const DivisorClass& x, const DivisorClass& y) {
  Integer acc = x[0] * y[0];
  for (std::size_t k = 1; k < kPicardRank; ++k) acc -= x[k] * y[k];
  return acc;
}

DivisorClass fiber_class() {
  return DivisorClass::from_ints({3, -1, -1, -1, -1, -1, -1, -1, -1, -1});
}

bool is_section_class(const DivisorClass& x) {
  return pair(x, x) == -1 && pair(x, fiber_class()) == 1;
}

int gram_entry(std::size_t i, std::size_t j) {
  if (i != j) return 0;
  return i == 0 ? 1 : -1;
}

std::array<Integer, kPicardRank> to_negated_basis(const DivisorClass& x) {
  std::array<Integer, kPicardRank> v;
  v[0] = x[0];
  for (std::size_t k = 1; k < kPicardRank; ++k) v[k] = -x[k];
  return v;
}

DivisorClass from_negated_basis(const std::array<Integer, kPicardRank>& v) {
  DivisorClass::Coordinates c;
  c[0] = v[0];
  for (std::size_t k = 1; k < kPicardRank; ++k) c[k] = -v[k];
  return DivisorClass(c);
}

LatticeMap::LatticeMap() {
  for (std::size_t i = 0; i < kPicardRank; ++i) at(i, i) = 1;
}

LatticeMap LatticeMap::from_images(const std::array<DivisorClass, kPicardRank>& images) {
  LatticeMap m;
  for (std::size_t col = 0; col < kPicardRank; ++col) {
    for (std::size_t row = 0; row < kPicardRank; ++row) m.at(row, col) = images[col][row];
  }
  return m;
}

DivisorClass LatticeMap::apply(const DivisorClass& x) const {
  DivisorClass::Coordinates out;
  for (std::size_t row = 0; row < kPicardRank; ++row) {
    Integer acc = 0;
    for (std::size_t col = 0; col < kPicardRank; ++col) {
      if (sgn(x[col]) != 0) acc += at(row, col) * x[col];
    }
    out[row] = std::move(acc);
  }
  return DivisorClass(out);
}

DivisorClass LatticeMap::column(std::size_t col) const {
  DivisorClass::Coordinates out;
  for (std::size_t row = 0; row < kPicardRank; ++row) out[row] = at(row, col);
  return DivisorClass(out);
}

LatticeMap operator*(const LatticeMap& a, const LatticeMap& b) {
  LatticeMap out;
  for (std::size_t i = 0; i < kPicardRank; ++i) {
    for (std::size_t j = 0; j < kPicardRank; ++j) {
      Integer acc = 0;
      for (std::size_t k = 0; k < kPicardRank; ++k) acc += a.at(i, k) * b.at(k, j);
      out.at(i, j) = std::move(acc);
    }
  }
  return out;
}

bool LatticeMap::is_identity() const {
  for (std::size_t i = 0; i < kPicardRank; ++i) {
    for (std::size_t j = 0; j < kPicardRank; ++j) {
      if (at(i, j) != (i == j ? 1 : 0)) return false;
    }
  }
  return true;
}

bool LatticeMap::preserves_form() const {
  for (std::size_t i = 0; i < kPicardRank; ++i) {
    for (std::size_t j = i; j < kPicardRank; ++j) {
      if (pair(column(i), column(j)) != gram_entry(i, j)) return false;
    }
  }
  return true;
}

LatticeMap LatticeMap::isometry_inverse() const {
  if (!preserves_form()) {
    throw Error(ErrorCode::InvalidArgument, "isometry_inverse called on a map that is not an isometry");
  }
  LatticeMap inv;
  for (std::size_t i = 0; i < kPicardRank; ++i) {
    for (std::size_t j = 0; j < kPicardRank; ++j) {
      inv.at(i, j) = gram_entry(i, i) * gram_entry(j, j) * at(j, i);
    }
  }
  return inv;
}

}  // namespace kcone
