#pragma once

// Exact rational cone computations and the nef cone of S:
//  - double description conversion and LP membership with certificates,
//  - the integral decomposition of a section against the root basis,
//  - nef testing through exact minimization of x.sigma over all sections,
//  - reduction of classes into the fundamental domain for translations.

#include <array>
#include <optional>
#include <vector>

#include "kcone/lattice.hpp"
#include "kcone/mordell_weil.hpp"
#include "kcone/weyl.hpp"

namespace kcone {

using RationalVector = std::vector<Rational>;
using IntegerVector = std::vector<Integer>;

/// Diagonal bilinear form used to identify vectors with covectors.
struct DiagonalForm {
  std::vector<int> diag;

  static DiagonalForm standard(std::size_t dim) { return {std::vector<int>(dim, 1)}; }
  static DiagonalForm intersection();

  Rational apply(const RationalVector& x, const RationalVector& y) const;
  RationalVector lower(const RationalVector& x) const;  // x -> covector <x, .>
};

/// A polyhedral cone given by generators, optionally with an H-description
/// (covectors c with c.x >= 0 on the cone, plain dot product).
class RationalCone {
 public:
  RationalCone(std::size_t dim, std::vector<RationalVector> generators, std::vector<RationalVector> facets = {});

  std::size_t dim() const { return dim_; }
  const std::vector<RationalVector>& generators() const { return generators_; }
  const std::vector<RationalVector>& facets() const { return facets_; }
  bool has_facets() const { return !facets_.empty(); }

 private:
  std::size_t dim_;
  std::vector<RationalVector> generators_;
  std::vector<RationalVector> facets_;
};

RationalVector to_rational(const DivisorClass& x);
Rational dot(const RationalVector& a, const RationalVector& b);

/// Positive rescaling to a primitive integer vector. Zero stays zero.
IntegerVector primitive(const RationalVector& v);
RationalVector canonical_ray(const RationalVector& v);

/// Extreme rays (plus both directions of a lineality basis) of
/// {x : c.x >= 0 for every c in constraints}, canonical and sorted.
std::vector<RationalVector> extreme_rays(std::size_t dim, const std::vector<RationalVector>& constraints);

/// Dual cone {y : <y, g> >= 0 for all generators g} under `form`. Both
/// descriptions are returned; facets are the irredundant lowered generators.
/// Throws Degenerate on an empty generator list.
RationalCone dual_cone(const RationalCone& cone, const DiagonalForm& form);
RationalCone dual_cone(const RationalCone& cone);

struct Membership {
  bool member = false;
  RationalVector combination;  // nonnegative, sum combination[j] * g_j == x
  RationalVector separator;    // c.g_j >= 0 for all j and c.x < 0
};

/// Exact phase-one simplex with Bland's rule; the answer always carries a
/// checked certificate.
Membership cone_member(const RationalVector& x, const RationalCone& cone);

/// Irredundant generators in canonical form.
std::vector<RationalVector> irredundant_generators(const RationalCone& cone);
/// Mutual containment of the two generated cones.
bool same_cone(const RationalCone& a, const RationalCone& b);

/// Coefficients of sigma - e1 on (h-e1-e2-e3, e1-e2, ..., e8-e9) where
/// sigma = manin_class(a).
std::array<Rational, kNumRoots> lemma24_coefficients(const SectionCoords& a);
/// The same coefficients for integral a in machine integers (no
/// reconstruction check); valid while |a_i| stays far below 2^15.
std::array<long long, kNumRoots> lemma24_coefficients_integral(const std::array<long long, kMwRank>& a);
DivisorClass combine_roots(const std::array<Rational, kNumRoots>& coeffs);

/// 2d + s, cross-checked against sum a_i^2 + (sum a_i + 3/2)^2 - 9/4.
Rational two_d_plus_s(const SectionCoords& a);

/// x . manin_class(a) = a^T Q a + L.a + c, with Q = (x.f) Q0 and
/// Q0(a) = sum a_i^2 + sum_{j<k} a_j a_k.
struct QuadraticModel {
  Integer fiber_degree;
  std::array<std::array<Rational, kMwRank>, kMwRank> quadratic;
  std::array<Rational, kMwRank> linear;
  Rational constant;

  Rational evaluate(const SectionCoords::Values& a) const;
};

QuadraticModel section_value_form(const DivisorClass& x);

/// The constant shift (-coset/3, ..., -coset/3) of a coset of the section lattice.
SectionCoords::Values coset_shift(int coset);

struct SectionMinimum {
  Integer mu;
  std::vector<SectionCoords> minimizers;  // sorted
};

/// Exact minimum of x.sigma over all sections sigma (all three cosets).
/// Requires x.f > 0, otherwise throws FiberDegenerate.
SectionMinimum min_over_sections(const DivisorClass& x);

/// A box of integers containing every coordinate vector a (any coset) with
/// x.manin_class(a) <= x.e1. Requires x.f > 0.
struct SearchBox {
  std::array<Integer, kMwRank> lo;
  std::array<Integer, kMwRank> hi;
};
SearchBox certified_box(const DivisorClass& x);

/// lambda with x = lambda f, if any.
std::optional<Integer> fiber_multiple(const DivisorClass& x);

/// Smallest value of x.sigma over sections when x is nef against the fiber:
/// min_over_sections for x.f > 0, lambda for x = lambda f, nothing otherwise.
std::optional<Integer> section_floor(const DivisorClass& x);

bool surface_nef_test(const DivisorClass& x);

/// The cone {x : x.alpha >= 0 for alpha in B} cut by the dual of
/// cone(B, e1, ..., e9), with canonical sorted rays.
RationalCone nef_chamber_polytope();

/// True when the nef class x spans an extremal ray of the nef cone.
bool is_nef_edge(const DivisorClass& x);

struct DomainReduction {
  SectionCoords translation;  // image = translation_map(translation) x
  WeylWord e8_word;           // e8_word(image) lies in the closed chamber
  DivisorClass image;
};

DomainReduction reduce_mod_translations(const DivisorClass& x, long max_steps = kDefaultMaxSteps);

struct OrbitRepresentative {
  SectionCoords translation;  // image = translation_map(translation) x
  DivisorClass image;
  std::size_t domain_points;  // points of the orbit inside the domain
};

/// The lexicographically smallest point of the translation orbit of x that
/// lies in the fundamental domain.
OrbitRepresentative canonical_domain_representative(const DivisorClass& x, long max_steps = kDefaultMaxSteps);

}  // namespace kcone
