#include <algorithm>
#include <functional>

#include "internal.hpp"
#include "kcone/cones.hpp"
#include "kcone/error.hpp"

namespace kcone {

namespace {

// Q0 = I/2 + J/2 on R^8 (Q0(a) = sum a_i^2 + sum_{j<k} a_j a_k).
Rational q0_entry(int i, int j) { return i == j ? Rational(1) : Rational(1, 2); }

// Q0(y) = sum_i pivots[i] (y_i + sum_{j>i} mult[i][j] y_j)^2, by symmetric
// Gaussian elimination on the exact rational matrix.
struct Q0Factor {
  std::array<Rational, kMwRank> pivots;
  std::array<std::array<Rational, kMwRank>, kMwRank> mult;
};

const Q0Factor& q0_factor() {
  static const Q0Factor factor = [] {
    std::array<std::array<Rational, kMwRank>, kMwRank> m;
    for (int i = 0; i < kMwRank; ++i) {
      for (int j = 0; j < kMwRank; ++j) m[i][j] = q0_entry(i, j);
    }
    Q0Factor f;
    for (int i = 0; i < kMwRank; ++i) {
      f.pivots[i] = m[i][i];
      if (sgn(f.pivots[i]) <= 0) throw Error(ErrorCode::Internal, "Q0 is not positive definite");
      for (int j = i + 1; j < kMwRank; ++j) f.mult[i][j] = m[i][j] / m[i][i];
      for (int j = i + 1; j < kMwRank; ++j) {
        for (int k = i + 1; k < kMwRank; ++k) m[j][k] -= m[i][j] * m[i][k] / m[i][i];
      }
    }
    return f;
  }();
  return factor;
}

// Integers n with (n - u)^2 <= r2, as a closed range (empty when lo > hi).
std::pair<Integer, Integer> integer_window(const Rational& u, const Rational& r2) {
  if (sgn(r2) < 0) return {Integer(1), Integer(0)};
  Integer floor_r2;
  mpz_fdiv_q(floor_r2.get_mpz_t(), r2.get_num_mpz_t(), r2.get_den_mpz_t());
  Integer r;
  mpz_sqrt(r.get_mpz_t(), floor_r2.get_mpz_t());  // floor(sqrt(r2))
  Integer fu;
  mpz_fdiv_q(fu.get_mpz_t(), u.get_num_mpz_t(), u.get_den_mpz_t());
  Integer lo = fu - r - 1;
  Integer hi = fu + r + 2;
  auto inside = [&](const Integer& n) {
    Rational d = Rational(n) - u;
    return d * d <= r2;
  };
  while (lo <= hi && !inside(lo)) ++lo;
  while (hi >= lo && !inside(hi)) --hi;
  return {lo, hi};
}

// Continuous minimizer a* = -(1/k)(I - J/9) L and the value there.
struct Center {
  std::array<Rational, kMwRank> point;
  Rational value;
};

Center continuous_center(const QuadraticModel& model) {
  const Rational k(model.fiber_degree);
  Rational sum = 0;
  Rational squares = 0;
  for (const auto& l : model.linear) {
    sum += l;
    squares += l * l;
  }
  Center c;
  for (int i = 0; i < kMwRank; ++i) c.point[i] = -(model.linear[i] - sum / 9) / k;
  c.value = model.constant - (squares - sum * sum / 9) / (2 * k);
  return c;
}

}  // namespace

namespace {

// Coefficients of sigma - e1 on the root basis, in terms of d, s and a_2..a_9.
template <typename T>
std::array<T, kNumRoots> root_coefficients(const T& d, const T& s, const std::array<T, kMwRank>& a) {
  auto ai = [&](int i) -> const T& { return a[i - 2]; };
  return {3 * d,
          2 * d + s,
          4 * d + s - ai(2),
          6 * d + s - ai(2) - ai(3),
          5 * d + s - ai(2) - ai(3) - ai(4),
          4 * d + ai(6) + ai(7) + ai(8) + ai(9),
          3 * d + ai(7) + ai(8) + ai(9),
          2 * d + ai(8) + ai(9),
          d + ai(9)};
}

}  // namespace

std::array<Rational, kNumRoots> lemma24_coefficients(const SectionCoords& a) {
  const ManinAux aux = manin_aux(a.values());
  std::array<Rational, kNumRoots> c = root_coefficients<Rational>(aux.d, aux.s, a.values());
  if (combine_roots(c) != manin_class(a) - DivisorClass::exceptional(1)) {
    throw Error(ErrorCode::Internal, "root decomposition does not reconstruct sigma - e1 for " + a.to_string());
  }
  return c;
}

std::array<long long, kNumRoots> lemma24_coefficients_integral(const std::array<long long, kMwRank>& a) {
  long long s = 0;
  long long squares = 0;
  for (long long v : a) {
    s += v;
    squares += v * v;
  }
  const long long d = squares + (s * s - squares) / 2 + s;
  return root_coefficients<long long>(d, s, a);
}

DivisorClass combine_roots(const std::array<Rational, kNumRoots>& coeffs) {
  std::array<Rational, kPicardRank> acc{};
  for (int i = 0; i < kNumRoots; ++i) {
    const DivisorClass& alpha = simple_root(i);
    for (std::size_t k = 0; k < kPicardRank; ++k) acc[k] += coeffs[i] * alpha[k];
  }
  DivisorClass::Coordinates out;
  for (std::size_t k = 0; k < kPicardRank; ++k) {
    if (acc[k].get_den() != 1) throw Error(ErrorCode::NonIntegral, "root combination is not integral");
    out[k] = acc[k].get_num();
  }
  return DivisorClass(out);
}

Rational two_d_plus_s(const SectionCoords& a) {
  const ManinAux aux = manin_aux(a.values());
  Rational value = 2 * aux.d + aux.s;
  Rational squares = 0;
  for (const auto& v : a.values()) squares += v * v;
  Rational shifted = aux.s + Rational(3, 2);
  Rational closed = squares + shifted * shifted - Rational(9, 4);
  if (value != closed) throw Error(ErrorCode::Internal, "2d + s identity failed for " + a.to_string());
  return value;
}

Rational QuadraticModel::evaluate(const SectionCoords::Values& a) const {
  Rational acc = constant;
  for (int i = 0; i < kMwRank; ++i) {
    acc += linear[i] * a[i];
    for (int j = 0; j < kMwRank; ++j) acc += quadratic[i][j] * a[i] * a[j];
  }
  return acc;
}

QuadraticModel section_value_form(const DivisorClass& x) {
  // x.sigma = (x.f) d - x_e1 (s + 1) + sum_{i>=2} x_ei a_i and d = Q0(a) + s.
  QuadraticModel m;
  m.fiber_degree = pair(x, fiber_class());
  const Rational k(m.fiber_degree);
  const Integer& x1 = x.coeff_e(1);
  for (int i = 0; i < kMwRank; ++i) {
    for (int j = 0; j < kMwRank; ++j) m.quadratic[i][j] = k * q0_entry(i, j);
    m.linear[i] = k - x1 + x.coeff_e(i + 2);
  }
  m.constant = -x1;
  return m;
}

SectionCoords::Values coset_shift(int coset) {
  if (coset < 0 || coset > 2) throw Error(ErrorCode::InvalidArgument, "coset must be 0, 1 or 2");
  SectionCoords::Values v;
  Rational third(-coset, 3);
  third.canonicalize();
  v.fill(third);
  return v;
}

SearchBox certified_box(const DivisorClass& x) {
  QuadraticModel model = section_value_form(x);
  if (sgn(model.fiber_degree) <= 0) {
    throw Error(ErrorCode::FiberDegenerate, "x.f must be positive for section minimization");
  }
  Center center = continuous_center(model);
  // Q0(y) <= R gives y_i^2 <= R (Q0^{-1})_ii = 16R/9.
  Rational radius = (model.constant - center.value) / Rational(model.fiber_degree);
  Rational bound = radius * Rational(16, 9);
  Integer fb;
  mpz_fdiv_q(fb.get_mpz_t(), bound.get_num_mpz_t(), bound.get_den_mpz_t());
  Integer r;
  mpz_sqrt(r.get_mpz_t(), fb.get_mpz_t());
  r += 1;
  SearchBox box;
  for (int i = 0; i < kMwRank; ++i) {
    const Rational& c = center.point[i];
    Integer fl;
    mpz_fdiv_q(fl.get_mpz_t(), c.get_num_mpz_t(), c.get_den_mpz_t());
    box.lo[i] = fl - r;
    box.hi[i] = fl + r + 1;
  }
  return box;
}

SectionMinimum min_over_sections(const DivisorClass& x) {
  const QuadraticModel model = section_value_form(x);
  if (sgn(model.fiber_degree) <= 0) {
    throw Error(ErrorCode::FiberDegenerate, "x.f = " + model.fiber_degree.get_str() + " is not positive");
  }
  const Rational k(model.fiber_degree);
  const Q0Factor& factor = q0_factor();
  const Center center = continuous_center(model);

  // Start from the zero section: x.e1 is attained, so the minimum is at most it.
  Rational best = model.constant;
  std::vector<SectionCoords::Values> found;

  for (int coset = 0; coset < 3; ++coset) {
    const SectionCoords::Values shift = coset_shift(coset);
    SectionCoords::Values a;
    std::array<Rational, kMwRank> y;  // a - a*

    // Depth-first Fincke-Pohst sweep from the last coordinate down.
    std::function<void(int, const Rational&)> descend = [&](int level, const Rational& partial) {
      const Rational radius = (best - center.value) / k;
      if (level < 0) {
        Rational value = model.evaluate(a);
        if (value < best) {
          best = value;
          found.clear();
        }
        if (value == best) found.push_back(a);
        return;
      }
      Rational offset = 0;
      for (int j = level + 1; j < kMwRank; ++j) offset += factor.mult[level][j] * y[j];
      // pivots[level] (y_level + offset)^2 <= radius - partial
      Rational budget = (radius - partial) / factor.pivots[level];
      Rational u = center.point[level] - offset - shift[level];
      auto [lo, hi] = integer_window(u, budget);
      for (Integer n = lo; n <= hi; ++n) {
        a[level] = Rational(n) + shift[level];
        y[level] = a[level] - center.point[level];
        Rational term = y[level] + offset;
        Rational next = partial + factor.pivots[level] * term * term;
        // The radius may have shrunk since the window was computed.
        if (next > (best - center.value) / k) continue;
        descend(level - 1, next);
      }
    };
    descend(kMwRank - 1, Rational(0));
  }

  SectionMinimum out;
  if (best.get_den() != 1) throw Error(ErrorCode::Internal, "section minimum is not an integer");
  out.mu = best.get_num();
  for (const auto& a : found) out.minimizers.emplace_back(a);
  std::sort(out.minimizers.begin(), out.minimizers.end());
  out.minimizers.erase(std::unique(out.minimizers.begin(), out.minimizers.end()), out.minimizers.end());
  return out;
}

std::optional<Integer> fiber_multiple(const DivisorClass& x) {
  // f = (3; -1, ..., -1), so lambda = x_h / 3 = -x_ei.
  Integer lambda = -x.coeff_e(1);
  if (lambda * fiber_class() == x) return lambda;
  return std::nullopt;
}

std::optional<Integer> section_floor(const DivisorClass& x) {
  int s = sgn(pair(x, fiber_class()));
  if (s > 0) return min_over_sections(x).mu;
  if (s == 0) return fiber_multiple(x);
  return std::nullopt;
}

bool surface_nef_test(const DivisorClass& x) {
  int s = sgn(pair(x, fiber_class()));
  if (s > 0) return sgn(min_over_sections(x).mu) >= 0;
  if (s < 0) return false;
  // A functional bounded below on the section lattice is constant on it,
  // which pins x to the line through f.
  auto lambda = fiber_multiple(x);
  return lambda && sgn(*lambda) >= 0;
}

RationalCone nef_chamber_polytope() {
  std::vector<RationalVector> gens;
  for (const auto& root : simple_roots()) gens.push_back(to_rational(root.cls));
  for (int i = 1; i <= kBlowups; ++i) gens.push_back(to_rational(DivisorClass::exceptional(i)));
  return dual_cone(RationalCone(kPicardRank, std::move(gens)), DiagonalForm::intersection());
}

bool is_nef_edge(const DivisorClass& x) {
  if (x.is_zero() || !surface_nef_test(x)) return false;
  // Isotropic nef classes are extremal in the closed positive cone.
  if (sgn(pair(x, x)) == 0) return true;
  SectionMinimum m = min_over_sections(x);
  if (sgn(m.mu) > 0) return false;
  std::vector<IntegerVector> rows;
  for (const auto& a : m.minimizers) {
    DivisorClass s = manin_class(a);
    rows.emplace_back(s.coords().begin(), s.coords().end());
  }
  return detail::integer_rank(std::move(rows)) == kPicardRank - 1;
}

}  // namespace kcone
