#include "kcone/threefold.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "kcone/error.hpp"

namespace kcone {

int picard_rank() { return kThreefoldRank; }

ThreefoldClass ThreefoldClass::from_coordinates(const Coordinates& v) {
  DivisorClass::Coordinates c1;
  DivisorClass::Coordinates c2;
  for (std::size_t k = 0; k < kPicardRank; ++k) c1[k] = v[k];
  for (std::size_t k = 0; k < kPicardRank - 1; ++k) c2[k] = v[kPicardRank + k];
  c2[kPicardRank - 1] = 0;
  return {DivisorClass(c1), DivisorClass(c2)};
}

Integer ThreefoldClass::canonical_gauge() const {
  // f has e9 coefficient -1, so A2 - m f has e9 coefficient c + m.
  return -a2_.coeff_e(9);
}

ThreefoldClass ThreefoldClass::canonical() const { return gauge_shift(*this, canonical_gauge()); }

ThreefoldClass::Coordinates ThreefoldClass::coordinates() const {
  ThreefoldClass c = canonical();
  Coordinates v;
  for (std::size_t k = 0; k < kPicardRank; ++k) v[k] = c.a1_[k];
  for (std::size_t k = 0; k < kPicardRank - 1; ++k) v[kPicardRank + k] = c.a2_[k];
  return v;
}

bool operator==(const ThreefoldClass& a, const ThreefoldClass& b) { return a.coordinates() == b.coordinates(); }

std::strong_ordering operator<=>(const ThreefoldClass& a, const ThreefoldClass& b) {
  const auto va = a.coordinates();
  const auto vb = b.coordinates();
  for (int k = 0; k < kThreefoldRank; ++k) {
    int c = cmp(va[k], vb[k]);
    if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

std::string ThreefoldClass::to_string() const {
  return "(" + a1_.to_string() + ", " + a2_.to_string() + ")";
}

ThreefoldClass gauge_shift(const ThreefoldClass& a, const Integer& m) {
  const DivisorClass mf = m * fiber_class();
  return {a.a1() + mf, a.a2() - mf};
}

ThreefoldNef threefold_nef_verdict(const ThreefoldClass& a) {
  ThreefoldNef out;
  out.mu1 = section_floor(a.a1());
  out.mu2 = section_floor(a.a2());
  if (!out.mu1 || !out.mu2) return out;
  // (A1 + m f).sigma = A1.sigma + m for every section sigma.
  Integer lo = -*out.mu1;
  const Integer& hi = *out.mu2;
  if (lo <= hi) {
    out.nef = true;
    out.interval = std::make_pair(lo, hi);
    out.witness = lo;
  }
  return out;
}

bool threefold_nef_test(const ThreefoldClass& a) { return threefold_nef_verdict(a).nef; }

ThreefoldClass ThreefoldMap::apply(const ThreefoldClass& a) const {
  return {map1.apply(a.a1()), map2.apply(a.a2())};
}

bool ThreefoldMap::fixes_fiber() const { return map1.fixes(fiber_class()) && map2.fixes(fiber_class()); }

ThreefoldMap aut_element(const SectionCoords& t1, const SectionCoords& t2) {
  return {translation_map(t1), translation_map(t2)};
}

ThreefoldReduction threefold_reduce(const ThreefoldClass& a, long max_steps) {
  ThreefoldNef verdict = threefold_nef_verdict(a);
  ThreefoldReduction out;
  out.gauge = verdict.witness.value_or(Integer(0));
  ThreefoldClass shifted = gauge_shift(a, out.gauge);
  DomainReduction r1 = reduce_mod_translations(shifted.a1(), max_steps);
  DomainReduction r2 = reduce_mod_translations(shifted.a2(), max_steps);
  out.t1 = r1.translation;
  out.t2 = r2.translation;
  out.image = ThreefoldClass(r1.image, r2.image);
  return out;
}

bool CensusReport::all_nef() const {
  return std::all_of(representatives.begin(), representatives.end(), [](const CensusEntry& e) { return e.nef; });
}

bool CensusReport::all_in_domain() const {
  return std::all_of(representatives.begin(), representatives.end(),
                     [](const CensusEntry& e) { return e.in_domain; });
}

std::vector<ThreefoldClass> CensusReport::representative_set() const {
  std::vector<ThreefoldClass> out;
  for (const auto& e : representatives) out.push_back(e.representative);
  return out;
}

namespace {

// Integer vectors of length kMwRank with l1 norm at most `bound`.
void l1_ball(long bound, std::vector<std::array<long, kMwRank>>& out) {
  std::array<long, kMwRank> v{};
  auto rec = [&](auto& self, int pos, long left) -> void {
    if (pos == kMwRank) {
      out.push_back(v);
      return;
    }
    for (long x = -left; x <= left; ++x) {
      v[pos] = x;
      self(self, pos + 1, left - (x < 0 ? -x : x));
    }
    v[pos] = 0;
  };
  if (bound >= 0) rec(rec, 0, bound);
}

DivisorClass to_divisor(const RationalVector& ray) {
  IntegerVector v = primitive(ray);
  DivisorClass::Coordinates c;
  for (std::size_t k = 0; k < kPicardRank; ++k) c[k] = v[k];
  return DivisorClass(c);
}

}  // namespace

std::vector<SectionCoords> census_translations(long bound) {
  if (bound < 0) throw Error(ErrorCode::InvalidArgument, "census bound must be nonnegative");
  std::vector<SectionCoords> out;
  std::vector<std::array<long, kMwRank>> ball;
  l1_ball(bound, ball);
  for (const auto& v : ball) out.push_back(SectionCoords::from_ints(v));
  if (bound >= 1) {
    ball.clear();
    l1_ball(bound - 1, ball);
    const SectionCoords g = SectionCoords::coset_generator();
    for (const auto& v : ball) {
      SectionCoords n = SectionCoords::from_ints(v);
      out.push_back(g + n);
      out.push_back(-(g + n));
    }
  }
  std::sort(out.begin(), out.end(), [](const SectionCoords& a, const SectionCoords& b) {
    if (a.coset() != b.coset()) return a.coset() < b.coset();
    return a < b;
  });
  return out;
}

CensusReport edge_orbit_census(long bound, long max_steps) {
  CensusReport report;
  report.bound = bound;

  std::vector<DivisorClass> edges;
  const RationalCone chamber = nef_chamber_polytope();
  for (const auto& ray : chamber.generators()) {
    DivisorClass x = to_divisor(ray);
    if (is_nef_edge(x)) edges.push_back(x);
  }
  report.chamber_edges = edges.size();

  const std::vector<SectionCoords> translations = census_translations(bound);
  report.translations = translations.size();

  std::map<ThreefoldClass, CensusEntry> found;
  using CanonicalPair = std::pair<OrbitRepresentative, OrbitRepresentative>;
  std::map<std::pair<DivisorClass, DivisorClass>, CanonicalPair> canonical;
  const DivisorClass zero;
  for (const auto& edge : edges) {
    for (const auto& t : translations) {
      const DivisorClass moved = translation_map(t).apply(edge);
      for (int side = 1; side <= 2; ++side) {
        ThreefoldClass ray = side == 1 ? ThreefoldClass(moved, zero) : ThreefoldClass(zero, moved);
        ++report.rays;
        ThreefoldReduction red = threefold_reduce(ray, max_steps);
        // Pick the canonical point of each surface orbit, then the canonical gauge.
        auto key = std::make_pair(red.image.a1(), red.image.a2());
        auto cached = canonical.find(key);
        if (cached == canonical.end()) {
          cached = canonical.emplace(key, CanonicalPair{canonical_domain_representative(key.first, max_steps),
                                                        canonical_domain_representative(key.second, max_steps)})
                       .first;
        }
        const OrbitRepresentative& c1 = cached->second.first;
        const OrbitRepresentative& c2 = cached->second.second;
        ThreefoldClass rep = ThreefoldClass(c1.image, c2.image).canonical();
        auto [it, inserted] = found.try_emplace(rep);
        CensusEntry& entry = it->second;
        if (inserted) {
          entry.representative = rep;
          const bool on_fiber = fiber_multiple(c1.image).has_value() && fiber_multiple(c2.image).has_value();
          entry.factor = on_fiber ? 0 : (c2.image.is_zero() || fiber_multiple(c2.image) ? 1 : 2);
          entry.surface_edge = entry.factor == 2 ? c2.image : c1.image;
          entry.domain_points = entry.factor == 2 ? c2.domain_points : c1.domain_points;
          entry.nef = threefold_nef_test(rep);
          entry.in_domain = in_fundamental_domain(c1.image) && in_fundamental_domain(c2.image);
        }
        ++entry.hits;
      }
    }
  }
  for (auto& [key, entry] : found) report.representatives.push_back(std::move(entry));
  return report;
}

}  // namespace kcone
