#include "doctest.h"
#include "kcone/threefold.hpp"
#include "../support.hpp"

using namespace kcone;

namespace {
const DivisorClass h = DivisorClass::hyperplane();
const DivisorClass f = fiber_class();
DivisorClass e(int i) { return DivisorClass::exceptional(i); }
}  // namespace

TEST_CASE("rank and coordinates") {
  CHECK(picard_rank() == 19);
  CHECK(ThreefoldClass(f, DivisorClass()).coordinates() == ThreefoldClass(DivisorClass(), f).coordinates());
  CHECK(ThreefoldClass(f, DivisorClass()) == ThreefoldClass(DivisorClass(), f));
  CHECK(ThreefoldClass(h, DivisorClass()) != ThreefoldClass(DivisorClass(), h));

  testing::Rng rng(73);
  for (int n = 0; n < 100; ++n) {
    ThreefoldClass a(testing::random_class(rng, -9, 9), testing::random_class(rng, -9, 9));
    auto back = ThreefoldClass::from_coordinates(a.coordinates());
    CHECK(back == a);
    CHECK(a.canonical() == a);
    CHECK(a.canonical().a2().coeff_e(9) == 0);
  }
}

TEST_CASE("gauge shifts") {
  ThreefoldClass zero;
  CHECK(gauge_shift(zero, 5) == zero);
  ThreefoldClass hh(h, h);
  CHECK(gauge_shift(hh, 0).a1() == h);
  ThreefoldClass shifted = gauge_shift(hh, 1);
  CHECK(shifted.a1() == h + f);
  CHECK(shifted.a2() == h - f);
  CHECK(shifted == hh);
  CHECK(gauge_shift(gauge_shift(hh, 7), -7).a1() == h);
  CHECK(gauge_shift(gauge_shift(hh, 7), -7).a2() == h);
}

TEST_CASE("threefold nef examples") {
  ThreefoldNef hh = threefold_nef_verdict(ThreefoldClass(h, h));
  CHECK(hh.nef);
  CHECK(hh.mu1 == Integer(0));
  CHECK(hh.mu2 == Integer(0));
  CHECK(hh.witness == Integer(0));

  ThreefoldNef e1h = threefold_nef_verdict(ThreefoldClass(e(1), h));
  CHECK_FALSE(e1h.nef);
  CHECK(e1h.mu1 == Integer(-1));
  CHECK_FALSE(e1h.witness.has_value());

  ThreefoldNef edge = threefold_nef_verdict(ThreefoldClass(e(1), h + f));
  CHECK(edge.nef);
  REQUIRE(edge.interval.has_value());
  CHECK(edge.interval->first == 1);
  CHECK(edge.interval->second == 1);
  CHECK(edge.witness == Integer(1));
  CHECK(surface_nef_test(e(1) + f));
  CHECK(surface_nef_test(h));

  CHECK(threefold_nef_test(ThreefoldClass(f, DivisorClass())));
  CHECK_FALSE(threefold_nef_test(ThreefoldClass(-f, DivisorClass())));
  CHECK_FALSE(threefold_nef_test(ThreefoldClass(e(1) - e(2), h)));
}

TEST_CASE("nef verdict is gauge invariant") {
  testing::Rng rng(79);
  for (int n = 0; n < 40; ++n) {
    ThreefoldClass a(testing::random_interior_point(rng, 3) - long(testing::uniform(rng, 0, 6)) * f,
                     testing::random_interior_point(rng, 3));
    bool v = threefold_nef_test(a);
    CHECK(threefold_nef_test(gauge_shift(a, testing::uniform(rng, -5, 5))) == v);
    ThreefoldNef d = threefold_nef_verdict(a);
    if (d.witness) {
      ThreefoldClass w = gauge_shift(a, *d.witness);
      CHECK(surface_nef_test(w.a1()));
      CHECK(surface_nef_test(w.a2()));
    }
  }
}

TEST_CASE("automorphisms") {
  ThreefoldMap id = aut_element(SectionCoords::zero(), SectionCoords::zero());
  CHECK(id.map1.is_identity());
  CHECK(id.map2.is_identity());
  CHECK(id.fixes_fiber());

  ThreefoldMap t = aut_element(SectionCoords::of_exceptional(2), SectionCoords::zero());
  ThreefoldClass image = t.apply(ThreefoldClass(e(1), h));
  CHECK(image.a1() == e(2));
  CHECK(image.a2() == h);

  testing::Rng rng(83);
  int checked = 0;
  for (int n = 0; n < 100; ++n) {
    ThreefoldClass a(testing::random_interior_point(rng, 3), testing::random_interior_point(rng, 3));
    REQUIRE(threefold_nef_test(a));
    ThreefoldMap g = aut_element(testing::random_coords(rng, 1), testing::random_coords(rng, 1));
    CHECK(g.fixes_fiber());
    CHECK(threefold_nef_test(g.apply(a)));
    CHECK(g.apply(gauge_shift(a, 3)) == g.apply(a));
    ++checked;
  }
  CHECK(checked == 100);
}

TEST_CASE("threefold reduction") {
  auto p = default_chamber_probe();
  ThreefoldClass a0(p, p);
  ThreefoldReduction r = threefold_reduce(a0);
  CHECK(r.t1.is_zero());
  CHECK(r.t2.is_zero());
  CHECK(r.image == a0);

  ThreefoldClass moved = aut_element(SectionCoords::of_exceptional(2), SectionCoords::zero()).apply(a0);
  ThreefoldReduction back = threefold_reduce(moved);
  CHECK(back.image == a0);
  CHECK(back.t1 == -SectionCoords::of_exceptional(2));

  testing::Rng rng(89);
  for (int n = 0; n < 20; ++n) {
    ThreefoldClass a(testing::random_interior_point(rng, 3), testing::random_interior_point(rng, 3));
    ThreefoldClass b = aut_element(testing::random_coords(rng, 1), testing::random_coords(rng, 1)).apply(a);
    ThreefoldReduction rb = threefold_reduce(b);
    CHECK(aut_element(rb.t1, rb.t2).apply(b) == rb.image);
    CHECK(in_fundamental_domain(rb.image.a1()));
    CHECK(in_fundamental_domain(rb.image.a2()));
  }
}

TEST_CASE("edge orbit census at small bounds") {
  CHECK(census_translations(0).size() == 1);
  CensusReport r0 = edge_orbit_census(0);
  CensusReport r1 = edge_orbit_census(1);
  CHECK(r0.chamber_edges == 3);
  CHECK(r0.representatives.size() == 5);
  CHECK(r1.representative_set() == r0.representative_set());
  CHECK(r1.all_nef());
  CHECK(r1.all_in_domain());
  std::size_t hits = 0;
  for (const auto& entry : r1.representatives) {
    hits += entry.hits;
    CHECK(threefold_nef_test(entry.representative));
  }
  CHECK(hits == r1.rays);
  CHECK(r1.rays == 2 * r1.chamber_edges * r1.translations);
}
