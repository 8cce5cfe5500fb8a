#include <deque>
#include <set>

#include "kcone/cones.hpp"
#include "kcone/error.hpp"

namespace kcone {

namespace {

constexpr std::size_t kMaxStabilizerOrbit = 100000;

// Translation T with T(sigma) = e9, as section coordinates.
SectionCoords translation_to_e9(const DivisorClass& sigma) {
  return SectionCoords::of_exceptional(9) - class_to_coords(sigma);
}

}  // namespace

DomainReduction reduce_mod_translations(const DivisorClass& x, long max_steps) {
  // u(x) = r in the closed chamber; w = u^{-1} so that w^{-1}(x) = r.
  const Reduction to_chamber = bourbaki_reduce(x, all_roots(), max_steps);
  const LatticeMap w = to_chamber.word.matrix().isometry_inverse();
  const DivisorClass e9 = DivisorClass::exceptional(9);

  // w(e9) is a section; move it back to e9 by a translation.
  const SectionCoords t = translation_to_e9(w.apply(e9));
  const LatticeMap tm = translation_map(t);
  const LatticeMap tw = tm * w;
  if (!tw.fixes(e9) || !tw.fixes(fiber_class())) {
    throw Error(ErrorCode::Internal, "T w does not fix e9 and f");
  }

  DomainReduction out;
  out.translation = t;
  out.image = tm.apply(x);
  Reduction e8 = bourbaki_reduce(out.image, e8_roots(), 120);
  // T w restricted to (e9, f)-perp lies in W(E8); the E8 reduction must
  // land on the same chamber point.
  if (e8.image != to_chamber.image || chamber_position(e8.image) == ChamberPosition::Outside) {
    throw Error(ErrorCode::Internal, "E8 reduction of the translated class missed the chamber point");
  }
  if (chamber_position(to_chamber.image) == ChamberPosition::Interior && !(e8.word.matrix() * tw).is_identity()) {
    throw Error(ErrorCode::Internal, "w' T w is not the identity for an interior chamber point");
  }
  out.e8_word = std::move(e8.word);
  return out;
}

OrbitRepresentative canonical_domain_representative(const DivisorClass& x, long max_steps) {
  const Reduction to_chamber = bourbaki_reduce(x, all_roots(), max_steps);
  const DivisorClass& r = to_chamber.image;

  RootSubset fixing;
  for (int i = 0; i < kNumRoots; ++i) {
    if (sgn(pair(r, simple_root(i))) == 0) fixing.set(i);
  }
  if (fixing.all()) {
    // r lies on the line through f, which every translation fixes.
    return {SectionCoords::zero(), x, 1};
  }

  // The stabilizer of r is generated by the simple reflections fixing it;
  // collect the orbit of e9 under it.
  std::set<DivisorClass> orbit;
  std::deque<DivisorClass> queue;
  orbit.insert(DivisorClass::exceptional(9));
  queue.push_back(DivisorClass::exceptional(9));
  while (!queue.empty()) {
    DivisorClass c = std::move(queue.front());
    queue.pop_front();
    for (int i = 0; i < kNumRoots; ++i) {
      if (!fixing.test(i)) continue;
      DivisorClass next = reflect(c, i);
      if (orbit.insert(next).second) {
        if (orbit.size() > kMaxStabilizerOrbit) throw Error(ErrorCode::Internal, "stabilizer orbit too large");
        queue.push_back(std::move(next));
      }
    }
  }

  // Every w with w(r) = x is u^{-1} s with s in the stabilizer; each gives a
  // domain point T x with T w(e9) = e9.
  const LatticeMap u_inv = to_chamber.word.matrix().isometry_inverse();
  std::optional<OrbitRepresentative> best;
  std::set<DivisorClass> points;
  for (const auto& sigma : orbit) {
    SectionCoords t = translation_to_e9(u_inv.apply(sigma));
    DivisorClass z = translation_map(t).apply(x);
    if (!in_fundamental_domain(z)) {
      throw Error(ErrorCode::Internal, "stabilizer translate left the fundamental domain");
    }
    points.insert(z);
    if (!best || z < best->image) best = OrbitRepresentative{t, z, 0};
  }
  best->domain_points = points.size();
  return *best;
}

}  // namespace kcone
