#include "json_io.hpp"

#include <regex>

#include "kcone/error.hpp"

namespace kcone::json_io {

void malformed(const std::string& path, const std::string& what) {
  throw Error(ErrorCode::MalformedInput, (path.empty() ? "/" : path) + ": " + what);
}

bool has(const Json& j, const char* key) { return j.is_object() && j.contains(key); }

const Json& field(const Json& j, const std::string& path, const char* key) {
  if (!j.is_object()) malformed(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) malformed(child(path, key), "missing field");
  return *it;
}

std::string child(const std::string& path, const std::string& key) { return path + "/" + key; }
std::string child(const std::string& path, std::size_t index) { return path + "/" + std::to_string(index); }

Json integer(const Integer& n) {
  if (n.fits_slong_p()) return Json(n.get_si());
  return Json(n.get_str());
}

Integer read_integer(const Json& j, const std::string& path) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return Integer(std::to_string(j.get<std::uint64_t>()));
    return Integer(std::to_string(j.get<std::int64_t>()));
  }
  if (j.is_string()) {
    static const std::regex pattern("-?[0-9]+");
    const auto& s = j.get_ref<const std::string&>();
    if (!std::regex_match(s, pattern)) malformed(path, "expected an integer string, got \"" + s + "\"");
    return Integer(s);
  }
  malformed(path, "expected an integer");
}

long read_long(const Json& j, const std::string& path) {
  Integer n = read_integer(j, path);
  if (!n.fits_slong_p()) malformed(path, "integer out of range");
  return n.get_si();
}

Json rational(const Rational& q) { return Json(q.get_str()); }

Rational read_rational(const Json& j, const std::string& path) {
  if (j.is_number_integer()) return Rational(read_integer(j, path));
  if (!j.is_string()) malformed(path, "expected a rational \"p/q\"");
  static const std::regex pattern("-?[0-9]+(/[0-9]+)?");
  const auto& s = j.get_ref<const std::string&>();
  if (!std::regex_match(s, pattern)) malformed(path, "expected a rational \"p/q\", got \"" + s + "\"");
  Rational q(s);
  if (sgn(q.get_den()) == 0) malformed(path, "zero denominator");
  q.canonicalize();
  return q;
}

Json divisor(const DivisorClass& x) {
  Json e = Json::array();
  for (int i = 1; i <= kBlowups; ++i) e.push_back(integer(x.coeff_e(i)));
  return Json{{"h", integer(x.coeff_h())}, {"e", e}};
}

DivisorClass read_divisor(const Json& j, const std::string& path) {
  const Json& h = field(j, path, "h");
  const Json& e = field(j, path, "e");
  const std::string epath = child(path, "e");
  if (!e.is_array() || e.size() != kBlowups) malformed(epath, "expected an array of 9 integers");
  std::array<Integer, kBlowups> ce;
  for (std::size_t i = 0; i < kBlowups; ++i) ce[i] = read_integer(e[i], child(epath, i));
  return DivisorClass(read_integer(h, child(path, "h")), ce);
}

Json word(const WeylWord& w) { return Json{{"letters", w.letters()}}; }

WeylWord read_word(const Json& j, const std::string& path) {
  const Json& letters = field(j, path, "letters");
  const std::string lpath = child(path, "letters");
  if (!letters.is_array()) malformed(lpath, "expected an array");
  std::vector<int> out;
  for (std::size_t k = 0; k < letters.size(); ++k) {
    long v = read_long(letters[k], child(lpath, k));
    if (v < 0 || v >= kNumRoots) malformed(child(lpath, k), "root index must be in 0..8");
    out.push_back(static_cast<int>(v));
  }
  return WeylWord(std::move(out));
}

std::array<int, kBlowups> read_permutation(const Json& j, const std::string& path) {
  const Json& perm = field(j, path, "perm");
  const std::string ppath = child(path, "perm");
  std::string notation = "one-line";
  if (has(j, "notation")) {
    const Json& n = j["notation"];
    if (!n.is_string() || (n != "one-line" && n != "cycle")) {
      malformed(child(path, "notation"), "expected \"one-line\" or \"cycle\"");
    }
    notation = n.get<std::string>();
  }
  if (!perm.is_array()) malformed(ppath, "expected an array");
  std::vector<int> values;
  for (std::size_t k = 0; k < perm.size(); ++k) {
    long v = read_long(perm[k], child(ppath, k));
    if (v < 1 || v > kBlowups) malformed(child(ppath, k), "entries must be in 1..9");
    values.push_back(static_cast<int>(v));
  }
  std::vector<bool> seen(kBlowups + 1, false);
  for (int v : values) {
    if (seen[v]) malformed(ppath, "repeated entry " + std::to_string(v));
    seen[v] = true;
  }
  if (notation == "cycle") return cycle_to_one_line(values);
  if (values.size() != kBlowups) malformed(ppath, "one-line notation needs 9 entries");
  std::array<int, kBlowups> out;
  std::copy(values.begin(), values.end(), out.begin());
  return out;
}

Json section_coords(const SectionCoords& a) {
  Json values = Json::array();
  for (const auto& v : a.values()) values.push_back(rational(v));
  return Json{{"a", values}, {"coset", a.coset()}};
}

SectionCoords read_section_coords(const Json& j, const std::string& path) {
  const Json& a = field(j, path, "a");
  const std::string apath = child(path, "a");
  if (!a.is_array() || a.size() != kMwRank) malformed(apath, "expected an array of 8 rationals");
  SectionCoords::Values v;
  for (std::size_t k = 0; k < kMwRank; ++k) v[k] = read_rational(a[k], child(apath, k));
  try {
    if (has(j, "coset")) {
      long c = read_long(j["coset"], child(path, "coset"));
      if (c < 0 || c > 2) malformed(child(path, "coset"), "coset must be 0, 1 or 2");
      return SectionCoords(v, static_cast<int>(c));
    }
    return SectionCoords(v);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::MalformedInput) throw;
    malformed(apath, e.what());
  }
}

Json rational_vector(const RationalVector& v) {
  Json out = Json::array();
  for (const auto& q : v) out.push_back(rational(q));
  return out;
}

RationalVector read_rational_vector(const Json& j, const std::string& path) {
  if (!j.is_array()) malformed(path, "expected an array of rationals");
  RationalVector out;
  for (std::size_t k = 0; k < j.size(); ++k) out.push_back(read_rational(j[k], child(path, k)));
  return out;
}

Json cone(const RationalCone& c) {
  Json rays = Json::array();
  for (const auto& r : c.generators()) rays.push_back(rational_vector(r));
  Json facets = Json::array();
  for (const auto& f : c.facets()) facets.push_back(rational_vector(f));
  return Json{{"rays", rays}, {"facets", facets}};
}

std::vector<RationalVector> read_rays(const Json& j, const std::string& path) {
  if (!j.is_array()) malformed(path, "expected an array of vectors");
  std::vector<RationalVector> out;
  for (std::size_t k = 0; k < j.size(); ++k) {
    out.push_back(read_rational_vector(j[k], child(path, k)));
    if (out.back().size() != out.front().size()) malformed(child(path, k), "vectors differ in length");
  }
  return out;
}

Json threefold_class(const ThreefoldClass& a) {
  ThreefoldClass c = a.canonical();
  return Json{{"A1", divisor(c.a1())}, {"A2", divisor(c.a2())}};
}

ThreefoldClass read_threefold_class(const Json& j, const std::string& path) {
  return {read_divisor(field(j, path, "A1"), child(path, "A1")), read_divisor(field(j, path, "A2"), child(path, "A2"))};
}

}  // namespace kcone::json_io
