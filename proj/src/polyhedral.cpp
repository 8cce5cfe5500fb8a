#include <algorithm>
#include <numeric>
#include <string>

#include "kcone/cones.hpp"
#include "kcone/error.hpp"
#include "internal.hpp"

namespace kcone {

namespace {

Integer dot_int(const IntegerVector& a, const IntegerVector& b) {
  Integer acc = 0;
  for (std::size_t k = 0; k < a.size(); ++k) acc += a[k] * b[k];
  return acc;
}

IntegerVector make_primitive(IntegerVector v) {
  Integer g = 0;
  for (const auto& c : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  if (g > 1) {
    for (auto& c : v) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  }
  return v;
}

bool is_zero(const IntegerVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Integer& c) { return sgn(c) == 0; });
}

// Rank of a set of integer vectors by fraction-free elimination.
std::size_t rank_of(std::vector<IntegerVector> rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && sgn(rows[pivot][col]) == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (sgn(rows[r][col]) == 0) continue;
      Integer a = rows[rank][col];
      Integer b = rows[r][col];
      for (std::size_t c = 0; c < cols; ++c) rows[r][c] = rows[r][c] * a - rows[rank][c] * b;
      rows[r] = make_primitive(std::move(rows[r]));
    }
    ++rank;
  }
  return rank;
}

IntegerVector combine(const Integer& ca, const IntegerVector& a, const Integer& cb, const IntegerVector& b) {
  IntegerVector out(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) out[k] = ca * a[k] + cb * b[k];
  return make_primitive(std::move(out));
}

// Double description method with an explicit lineality space. Constraints
// are processed in order; after each step `lineality` spans the lineality
// space and `rays` are the extreme rays modulo it.
struct DoubleDescription {
  std::size_t dim;
  std::vector<IntegerVector> lineality;
  std::vector<IntegerVector> rays;
  std::vector<IntegerVector> processed;

  explicit DoubleDescription(std::size_t d) : dim(d) {
    for (std::size_t k = 0; k < d; ++k) {
      IntegerVector e(d, Integer(0));
      e[k] = 1;
      lineality.push_back(std::move(e));
    }
  }

  std::vector<bool> zero_set(const IntegerVector& r) const {
    std::vector<bool> z(processed.size());
    for (std::size_t i = 0; i < processed.size(); ++i) z[i] = sgn(dot_int(processed[i], r)) == 0;
    return z;
  }

  void add(const IntegerVector& a) {
    if (is_zero(a)) return;
    // Case 1: a is not constant on the lineality space.
    for (std::size_t i = 0; i < lineality.size(); ++i) {
      Integer al = dot_int(a, lineality[i]);
      if (sgn(al) == 0) continue;
      IntegerVector l0 = lineality[i];
      if (sgn(al) < 0) {
        for (auto& c : l0) c = -c;
        al = -al;
      }
      std::vector<IntegerVector> next_lin;
      for (std::size_t j = 0; j < lineality.size(); ++j) {
        if (j == i) continue;
        Integer aj = dot_int(a, lineality[j]);
        IntegerVector v = sgn(aj) == 0 ? lineality[j] : combine(al, lineality[j], -aj, l0);
        if (!is_zero(v)) next_lin.push_back(std::move(v));
      }
      for (auto& r : rays) {
        Integer ar = dot_int(a, r);
        if (sgn(ar) != 0) r = combine(al, r, -ar, l0);
      }
      lineality = std::move(next_lin);
      rays.push_back(make_primitive(l0));
      processed.push_back(a);
      return;
    }
    // Case 2: ordinary double description step.
    std::vector<IntegerVector> pos, zero, neg;
    std::vector<Integer> pos_val, neg_val;
    for (auto& r : rays) {
      Integer v = dot_int(a, r);
      int s = sgn(v);
      if (s > 0) {
        pos.push_back(r);
        pos_val.push_back(v);
      } else if (s == 0) {
        zero.push_back(r);
      } else {
        neg.push_back(r);
        neg_val.push_back(v);
      }
    }
    std::vector<IntegerVector> all = rays;
    std::vector<std::vector<bool>> zsets;
    zsets.reserve(all.size());
    for (const auto& r : all) zsets.push_back(zero_set(r));
    auto index_of = [&](const IntegerVector& r) {
      return static_cast<std::size_t>(std::find(all.begin(), all.end(), r) - all.begin());
    };
    const std::size_t pointed_dim = dim - lineality.size();
    std::vector<IntegerVector> next = pos;
    next.insert(next.end(), zero.begin(), zero.end());
    for (std::size_t p = 0; p < pos.size(); ++p) {
      const std::size_t ip = index_of(pos[p]);
      for (std::size_t n = 0; n < neg.size(); ++n) {
        const std::size_t in = index_of(neg[n]);
        std::vector<bool> common(processed.size());
        std::size_t count = 0;
        for (std::size_t k = 0; k < processed.size(); ++k) {
          common[k] = zsets[ip][k] && zsets[in][k];
          count += common[k];
        }
        if (pointed_dim >= 2 && count + 2 < pointed_dim) continue;
        bool adjacent = true;
        for (std::size_t o = 0; o < all.size() && adjacent; ++o) {
          if (o == ip || o == in) continue;
          bool contains = true;
          for (std::size_t k = 0; k < processed.size(); ++k) {
            if (common[k] && !zsets[o][k]) {
              contains = false;
              break;
            }
          }
          if (contains) adjacent = false;
        }
        if (!adjacent) continue;
        // (a.p) n - (a.n) p vanishes on a and is a positive combination.
        next.push_back(combine(pos_val[p], neg[n], -neg_val[n], pos[p]));
      }
    }
    std::sort(next.begin(), next.end(), [](const IntegerVector& x, const IntegerVector& y) {
      return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end(),
                                          [](const Integer& u, const Integer& v) { return cmp(u, v) < 0; });
    });
    next.erase(std::unique(next.begin(), next.end()), next.end());
    rays = std::move(next);
    processed.push_back(a);
  }
};

bool rational_less(const RationalVector& a, const RationalVector& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                      [](const Rational& u, const Rational& v) { return cmp(u, v) < 0; });
}

void sort_unique(std::vector<RationalVector>& vs) {
  std::sort(vs.begin(), vs.end(), rational_less);
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
}

RationalVector to_rationals(const IntegerVector& v) {
  RationalVector out(v.size());
  for (std::size_t k = 0; k < v.size(); ++k) out[k] = v[k];
  return out;
}

IntegerVector scale_to_integers(const RationalVector& v) {
  Integer l = 1;
  for (const auto& c : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  IntegerVector out(v.size());
  for (std::size_t k = 0; k < v.size(); ++k) out[k] = (v[k].get_num() * l) / v[k].get_den();
  return out;
}

}  // namespace

DiagonalForm DiagonalForm::intersection() {
  std::vector<int> d(kPicardRank, -1);
  d[0] = 1;
  return {d};
}

Rational DiagonalForm::apply(const RationalVector& x, const RationalVector& y) const {
  Rational acc = 0;
  for (std::size_t k = 0; k < diag.size(); ++k) acc += diag[k] * x[k] * y[k];
  return acc;
}

RationalVector DiagonalForm::lower(const RationalVector& x) const {
  RationalVector out(x.size());
  for (std::size_t k = 0; k < x.size(); ++k) out[k] = diag[k] * x[k];
  return out;
}

RationalCone::RationalCone(std::size_t dim, std::vector<RationalVector> generators, std::vector<RationalVector> facets)
    : dim_(dim), generators_(std::move(generators)), facets_(std::move(facets)) {
  for (const auto& g : generators_) {
    if (g.size() != dim_) throw Error(ErrorCode::InvalidArgument, "generator has wrong dimension");
    if (std::all_of(g.begin(), g.end(), [](const Rational& c) { return sgn(c) == 0; })) {
      throw Error(ErrorCode::InvalidArgument, "cone generators must be nonzero");
    }
  }
  for (const auto& c : facets_) {
    if (c.size() != dim_) throw Error(ErrorCode::InvalidArgument, "facet has wrong dimension");
    for (const auto& g : generators_) {
      if (sgn(dot(c, g)) < 0) throw Error(ErrorCode::InvalidArgument, "facet list is not valid for the generators");
    }
  }
}

RationalVector to_rational(const DivisorClass& x) {
  RationalVector v(kPicardRank);
  for (std::size_t k = 0; k < kPicardRank; ++k) v[k] = x[k];
  return v;
}

Rational dot(const RationalVector& a, const RationalVector& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::InvalidArgument, "dimension mismatch");
  Rational acc = 0;
  for (std::size_t k = 0; k < a.size(); ++k) acc += a[k] * b[k];
  return acc;
}

IntegerVector primitive(const RationalVector& v) { return make_primitive(scale_to_integers(v)); }

RationalVector canonical_ray(const RationalVector& v) { return to_rationals(primitive(v)); }

std::vector<RationalVector> extreme_rays(std::size_t dim, const std::vector<RationalVector>& constraints) {
  DoubleDescription dd(dim);
  for (const auto& c : constraints) {
    if (c.size() != dim) throw Error(ErrorCode::InvalidArgument, "constraint has wrong dimension");
    dd.add(primitive(c));
  }
  std::vector<RationalVector> out;
  for (const auto& r : dd.rays) out.push_back(to_rationals(r));
  for (const auto& l : dd.lineality) {
    RationalVector v = to_rationals(make_primitive(l));
    out.push_back(v);
    for (auto& c : v) c = -c;
    out.push_back(std::move(v));
  }
  sort_unique(out);
  return out;
}

RationalCone dual_cone(const RationalCone& cone, const DiagonalForm& form) {
  if (cone.generators().empty()) throw Error(ErrorCode::Degenerate, "dual of a cone without generators");
  if (form.diag.size() != cone.dim()) throw Error(ErrorCode::InvalidArgument, "form has wrong dimension");
  std::vector<RationalVector> constraints;
  for (const auto& g : cone.generators()) constraints.push_back(canonical_ray(form.lower(g)));
  std::vector<RationalVector> rays = extreme_rays(cone.dim(), constraints);
  RationalCone as_generated(cone.dim(), constraints);
  std::vector<RationalVector> facets = irredundant_generators(as_generated);
  return RationalCone(cone.dim(), std::move(rays), std::move(facets));
}

RationalCone dual_cone(const RationalCone& cone) { return dual_cone(cone, DiagonalForm::standard(cone.dim())); }

Membership cone_member(const RationalVector& x, const RationalCone& cone) {
  const std::size_t n = cone.dim();
  const std::size_t m = cone.generators().size();
  if (x.size() != n) throw Error(ErrorCode::InvalidArgument, "point has wrong dimension");

  // Tableau rows 0..n-1 hold sign(x_i) (G lambda + art = x); row n holds the
  // reduced costs of min sum(art). Columns: m structural, n artificial, rhs.
  const std::size_t cols = m + n + 1;
  std::vector<RationalVector> t(n + 1, RationalVector(cols));
  std::vector<std::size_t> basis(n);
  std::vector<int> flip(n);
  for (std::size_t i = 0; i < n; ++i) {
    flip[i] = sgn(x[i]) < 0 ? -1 : 1;
    for (std::size_t j = 0; j < m; ++j) t[i][j] = flip[i] * cone.generators()[j][i];
    t[i][m + i] = 1;
    t[i][cols - 1] = flip[i] * x[i];
    basis[i] = m + i;
  }
  for (std::size_t j = 0; j < cols; ++j) {
    Rational acc = 0;
    if (j < m || j == cols - 1) {
      for (std::size_t i = 0; i < n; ++i) acc -= t[i][j];
    }
    t[n][j] = acc;
  }

  for (;;) {
    std::size_t enter = cols;
    for (std::size_t j = 0; j + 1 < cols; ++j) {
      if (sgn(t[n][j]) < 0) {
        enter = j;
        break;
      }
    }
    if (enter == cols) break;
    std::size_t leave = n;
    Rational best;
    for (std::size_t i = 0; i < n; ++i) {
      if (sgn(t[i][enter]) <= 0) continue;
      Rational ratio = t[i][cols - 1] / t[i][enter];
      if (leave == n || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave == n) throw Error(ErrorCode::Internal, "phase-one simplex reported an unbounded direction");
    Rational piv = t[leave][enter];
    for (auto& c : t[leave]) c /= piv;
    for (std::size_t i = 0; i <= n; ++i) {
      if (i == leave || sgn(t[i][enter]) == 0) continue;
      Rational factor = t[i][enter];
      for (std::size_t j = 0; j < cols; ++j) t[i][j] -= factor * t[leave][j];
    }
    basis[leave] = enter;
  }

  Membership out;
  // The objective row holds -(sum of artificials) in the rhs column.
  if (sgn(t[n][cols - 1]) == 0) {
    out.member = true;
    out.combination.assign(m, Rational(0));
    for (std::size_t i = 0; i < n; ++i) {
      if (basis[i] < m) out.combination[basis[i]] = t[i][cols - 1];
    }
    for (std::size_t k = 0; k < n; ++k) {
      Rational acc = 0;
      for (std::size_t j = 0; j < m; ++j) acc += out.combination[j] * cone.generators()[j][k];
      if (acc != x[k]) throw Error(ErrorCode::Internal, "membership combination failed verification");
    }
  } else {
    // Duals y_i = 1 - (reduced cost of artificial i); separator = -flip * y.
    out.member = false;
    out.separator.resize(n);
    for (std::size_t i = 0; i < n; ++i) out.separator[i] = -flip[i] * (1 - t[n][m + i]);
    out.separator = canonical_ray(out.separator);
    for (const auto& g : cone.generators()) {
      if (sgn(dot(out.separator, g)) < 0) throw Error(ErrorCode::Internal, "Farkas certificate failed on a generator");
    }
    if (sgn(dot(out.separator, x)) >= 0) throw Error(ErrorCode::Internal, "Farkas certificate does not separate");
  }
  return out;
}

std::vector<RationalVector> irredundant_generators(const RationalCone& cone) {
  std::vector<RationalVector> gens;
  for (const auto& g : cone.generators()) gens.push_back(canonical_ray(g));
  sort_unique(gens);
  for (std::size_t i = 0; i < gens.size();) {
    std::vector<RationalVector> others;
    for (std::size_t j = 0; j < gens.size(); ++j) {
      if (j != i) others.push_back(gens[j]);
    }
    if (!others.empty() && cone_member(gens[i], RationalCone(cone.dim(), others)).member) {
      gens.erase(gens.begin() + static_cast<std::ptrdiff_t>(i));
    } else {
      ++i;
    }
  }
  return gens;
}

bool same_cone(const RationalCone& a, const RationalCone& b) {
  if (a.dim() != b.dim()) return false;
  auto contained = [](const RationalCone& inner, const RationalCone& outer) {
    for (const auto& g : inner.generators()) {
      if (outer.generators().empty() || !cone_member(g, outer).member) return false;
    }
    return true;
  };
  return contained(a, b) && contained(b, a);
}

namespace detail {

std::size_t integer_rank(std::vector<IntegerVector> rows) { return rank_of(std::move(rows)); }

}  // namespace detail

}  // namespace kcone
