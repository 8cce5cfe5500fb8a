#include "kcone/mordell_weil.hpp"

#include <sstream>
#include <string>

#include "kcone/error.hpp"

namespace kcone {

namespace {

// Residue class of 3a modulo 3, or -1 when the denominator is not 1 or 3.
int third_residue(const Rational& a) {
  const Integer& den = a.get_den();
  if (den != 1 && den != 3) return -1;
  Rational scaled = a * 3;
  Integer num = scaled.get_num();
  Integer r = num % 3;
  if (r < 0) r += 3;
  return static_cast<int>(r.get_si());
}

int coset_of(const SectionCoords::Values& a) {
  int coset = -1;
  for (const auto& v : a) {
    int r = third_residue(v);
    if (r < 0) {
      throw Error(ErrorCode::InvalidArgument, "section coordinate " + v.get_str() + " has denominator other than 1 or 3");
    }
    // a = -coset/3 mod 1, hence coset = -3a mod 3.
    int c = (3 - r) % 3;
    if (coset >= 0 && c != coset) {
      throw Error(ErrorCode::InvalidArgument, "section coordinates lie in different cosets of the index-three subgroup");
    }
    coset = c;
  }
  return coset < 0 ? 0 : coset;
}

Integer require_integer(const Rational& q, ErrorCode code, const char* what) {
  if (q.get_den() != 1) {
    throw Error(code, std::string(what) + " is not integral: " + q.get_str());
  }
  return q.get_num();
}

}  // namespace

SectionCoords::SectionCoords(const Values& a) : a_(a) {
  for (auto& v : a_) v.canonicalize();
  coset_ = coset_of(a_);
}

SectionCoords::SectionCoords(const Values& a, int coset) : SectionCoords(a) {
  if (coset != coset_) {
    throw Error(ErrorCode::InvalidArgument, "declared coset " + std::to_string(coset) +
                                                " does not match the coordinates (coset " + std::to_string(coset_) + ")");
  }
}

SectionCoords SectionCoords::from_ints(std::span<const long, kMwRank> a) {
  Values v;
  for (int k = 0; k < kMwRank; ++k) v[k] = a[k];
  return SectionCoords(v);
}

SectionCoords SectionCoords::of_exceptional(int j) {
  if (j < 1 || j > kBlowups) {
    throw Error(ErrorCode::InvalidArgument, "exceptional index out of range: " + std::to_string(j));
  }
  Values v;
  if (j >= 2) v[j - 2] = -1;
  return SectionCoords(v);
}

SectionCoords SectionCoords::coset_generator() {
  Values v;
  for (auto& x : v) x = Rational(-1, 3);
  return SectionCoords(v);
}

const Rational& SectionCoords::a(int i) const {
  if (i < 2 || i > kBlowups) {
    throw Error(ErrorCode::InvalidArgument, "section coordinate index must be in 2..9");
  }
  return a_[i - 2];
}

bool SectionCoords::is_zero() const {
  for (const auto& v : a_) {
    if (sgn(v) != 0) return false;
  }
  return true;
}

SectionCoords operator+(const SectionCoords& x, const SectionCoords& y) {
  SectionCoords out;
  for (int k = 0; k < kMwRank; ++k) out.a_[k] = x.a_[k] + y.a_[k];
  out.coset_ = (x.coset_ + y.coset_) % 3;
  return out;
}

SectionCoords operator-(const SectionCoords& x) {
  SectionCoords out;
  for (int k = 0; k < kMwRank; ++k) out.a_[k] = -x.a_[k];
  out.coset_ = (3 - x.coset_) % 3;
  return out;
}

bool operator==(const SectionCoords& x, const SectionCoords& y) {
  return x.coset_ == y.coset_ && x.a_ == y.a_;
}

bool operator<(const SectionCoords& x, const SectionCoords& y) {
  for (int k = 0; k < kMwRank; ++k) {
    int c = cmp(x.a_[k], y.a_[k]);
    if (c != 0) return c < 0;
  }
  return false;
}

std::string SectionCoords::to_string() const {
  std::ostringstream os;
  os << "[";
  for (int k = 0; k < kMwRank; ++k) os << (k ? ", " : "") << a_[k];
  os << "]/" << coset_;
  return os.str();
}

ManinAux manin_aux(const SectionCoords::Values& a) {
  Rational s = 0;
  Rational squares = 0;
  for (const auto& v : a) {
    s += v;
    squares += v * v;
  }
  // sum_{j<k} a_j a_k = (s^2 - sum a_i^2) / 2
  Rational cross = (s * s - squares) / 2;
  return {squares + cross + s, s};
}

DivisorClass manin_class(const SectionCoords::Values& a) {
  ManinAux aux = manin_aux(a);
  DivisorClass::Coordinates c;
  c[0] = require_integer(Rational(3 * aux.d), ErrorCode::NonIntegral, "coefficient of h");
  c[1] = require_integer(Rational(-(aux.d - aux.s - 1)), ErrorCode::NonIntegral, "coefficient of e1");
  for (int i = 2; i <= kBlowups; ++i) {
    c[i] = require_integer(Rational(-(aux.d + a[i - 2])), ErrorCode::NonIntegral, "coefficient of e_i");
  }
  return DivisorClass(c);
}

DivisorClass manin_class(const SectionCoords& a) { return manin_class(a.values()); }

SectionCoords class_to_coords(const DivisorClass& sigma) {
  if (!is_section_class(sigma)) {
    throw Error(ErrorCode::NotASection, sigma.to_string() + " is not a section class");
  }
  Rational d(sigma.coeff_h(), 3);
  d.canonicalize();
  SectionCoords::Values a;
  for (int i = 2; i <= kBlowups; ++i) a[i - 2] = -Rational(sigma.coeff_e(i)) - d;
  ManinAux aux = manin_aux(a);
  if (aux.d != d || Rational(-(aux.d - aux.s - 1)) != Rational(sigma.coeff_e(1))) {
    throw Error(ErrorCode::NotASection, sigma.to_string() + " fails the Manin consistency check");
  }
  SectionCoords out;
  try {
    out = SectionCoords(a);
  } catch (const Error&) {
    throw Error(ErrorCode::NotASection, sigma.to_string() + " has coordinates outside the section lattice");
  }
  if (manin_class(out) != sigma) {
    throw Error(ErrorCode::NotASection, sigma.to_string() + " does not round-trip through Manin's formula");
  }
  return out;
}

SectionCoords mw_add(const SectionCoords& a, const SectionCoords& b) { return a + b; }

LatticeMap translation_map(const SectionCoords& t) {
  if (t.is_zero()) return LatticeMap::identity();
  std::array<DivisorClass, kPicardRank> images;
  DivisorClass sum = fiber_class();
  for (int j = 1; j <= kBlowups; ++j) {
    images[j] = manin_class(mw_add(SectionCoords::of_exceptional(j), t));
    sum += images[j];
  }
  // h = (f + sum e_i) / 3
  DivisorClass::Coordinates hc;
  for (std::size_t k = 0; k < kPicardRank; ++k) {
    if (!mpz_divisible_ui_p(sum[k].get_mpz_t(), 3)) {
      throw Error(ErrorCode::InternalNonIntegral, "translation by " + t.to_string() + " does not map h integrally");
    }
    hc[k] = sum[k] / 3;
  }
  images[0] = DivisorClass(hc);
  LatticeMap m = LatticeMap::from_images(images);
  if (!m.preserves_form() || !m.fixes(fiber_class())) {
    throw Error(ErrorCode::Internal, "translation by " + t.to_string() + " is not an isometry fixing f");
  }
  return m;
}

DivisorClass chamber_probe(std::span<const long, kNumRoots> weights) {
  for (long w : weights) {
    if (w <= 0) throw Error(ErrorCode::InvalidArgument, "probe weights must be positive");
  }
  // x = b h - sum c_i e_i with x.(e_i - e_{i+1}) = c_i - c_{i+1} and
  // x.(h - e1 - e2 - e3) = b - c1 - c2 - c3; c9 = 0.
  std::array<Integer, kBlowups + 1> c;
  c[9] = 0;
  for (int i = 8; i >= 1; --i) c[i] = c[i + 1] + weights[i];
  Integer b = weights[0] + c[1] + c[2] + c[3];
  DivisorClass::Coordinates coords;
  coords[0] = b;
  for (int i = 1; i <= kBlowups; ++i) coords[i] = -c[i];
  return DivisorClass(coords);
}

DivisorClass default_chamber_probe() {
  static const std::array<long, kNumRoots> weights{10, 9, 8, 7, 6, 5, 4, 3, 2};
  return chamber_probe(weights);
}

WeylWord translation_as_weyl_word(const SectionCoords& t, long max_steps, std::span<const DivisorClass> probes) {
  std::vector<DivisorClass> candidates(probes.begin(), probes.end());
  if (candidates.empty()) {
    static const std::array<std::array<long, kNumRoots>, 3> weight_sets{{
        {10, 9, 8, 7, 6, 5, 4, 3, 2},
        {1, 2, 3, 4, 5, 6, 7, 8, 9},
        {2, 3, 5, 7, 11, 13, 17, 19, 23},
    }};
    for (const auto& w : weight_sets) candidates.push_back(chamber_probe(w));
  }
  LatticeMap target = translation_map(t);
  for (const auto& probe : candidates) {
    if (chamber_position(probe) != ChamberPosition::Interior) {
      throw Error(ErrorCode::InvalidArgument, "probe " + probe.to_string() + " is not interior to the chamber");
    }
    Reduction r = bourbaki_reduce(target.apply(probe), all_roots(), max_steps);
    WeylWord candidate = r.word.inverse();
    if (candidate.matrix() == target) return candidate;
  }
  throw Error(ErrorCode::WordNotFound, "no probe point produced a word for translation by " + t.to_string());
}

const char* tuple_reading_name(TupleReading r) {
  return r == TupleReading::OneLine ? "one-line" : "cycle";
}

PrintedWordData printed_word_data() {
  return PrintedWordData{{{
      {1, 9, 2, 3, 4, 5, 6, 7, 8},  // P1
      {1, 7, 8, 2, 3, 4, 5, 6, 9},  // P2
      {4, 5, 6, 1, 2, 3, 7, 8, 9},  // P3
      {7, 8, 9, 1, 2, 3, 4, 5, 6},  // P4
      {1, 5, 6, 2, 3, 4, 7, 8, 9},  // P5
      {2, 3, 4, 1, 5, 6, 7, 8, 9},  // P6
  }}};
}

WeylWord printed_word(const PrintedWordData& data, TupleReading reading) {
  const WeylWord ws({0});
  auto perm = [&](int k) {
    const auto& tuple = data.perms[k];
    if (reading == TupleReading::OneLine) return permutation_word(std::span<const int, kBlowups>(tuple));
    auto one_line = cycle_to_one_line(tuple);
    return permutation_word(std::span<const int, kBlowups>(one_line));
  };
  WeylWord w = perm(5);
  for (int k = 4; k >= 0; --k) w = w * ws * perm(k);
  return w;
}

PrintedWordCheck verify_paper_word(const PrintedWordData& data) {
  const LatticeMap t2 = translation_map(SectionCoords::of_exceptional(2));
  PrintedWordCheck check;
  check.one_line_identity = (printed_word(data, TupleReading::OneLine).matrix() * t2).is_identity();
  check.cycle_identity = (printed_word(data, TupleReading::Cycle).matrix() * t2).is_identity();
  if (check.one_line_identity != check.cycle_identity) {
    check.interpretation = check.one_line_identity ? TupleReading::OneLine : TupleReading::Cycle;
  }
  check.ok = check.one_line_identity || check.cycle_identity;
  return check;
}

PrintedWordCheck verify_paper_word() { return verify_paper_word(printed_word_data()); }

}  // namespace kcone
