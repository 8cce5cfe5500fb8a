#pragma once

// JSON encoding of the domain types. Readers take the JSON pointer of the
// value so malformed input can be reported by field path.

#include <string>

#include "json.hpp"

#include "kcone/cones.hpp"
#include "kcone/threefold.hpp"

namespace kcone::json_io {

using Json = nlohmann::ordered_json;

[[noreturn]] void malformed(const std::string& path, const std::string& what);

const Json& field(const Json& j, const std::string& path, const char* key);
bool has(const Json& j, const char* key);
std::string child(const std::string& path, const std::string& key);
std::string child(const std::string& path, std::size_t index);

Json integer(const Integer& n);  // number when it fits in int64, else a string
Integer read_integer(const Json& j, const std::string& path);
long read_long(const Json& j, const std::string& path);

Json rational(const Rational& q);  // "p/q", or "n" for integers
Rational read_rational(const Json& j, const std::string& path);

Json divisor(const DivisorClass& x);
DivisorClass read_divisor(const Json& j, const std::string& path);

Json word(const WeylWord& w);
WeylWord read_word(const Json& j, const std::string& path);

/// {"perm": [...], "notation": "one-line" | "cycle"} as a one-line image.
std::array<int, kBlowups> read_permutation(const Json& j, const std::string& path);

Json section_coords(const SectionCoords& a);
SectionCoords read_section_coords(const Json& j, const std::string& path);

Json rational_vector(const RationalVector& v);
RationalVector read_rational_vector(const Json& j, const std::string& path);
Json cone(const RationalCone& c);
std::vector<RationalVector> read_rays(const Json& j, const std::string& path);

Json threefold_class(const ThreefoldClass& a);  // canonical gauge
ThreefoldClass read_threefold_class(const Json& j, const std::string& path);

}  // namespace kcone::json_io
