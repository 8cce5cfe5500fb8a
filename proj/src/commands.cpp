#include "kcone/commands.hpp"

#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <regex>

#include "json_io.hpp"
#include "kcone/error.hpp"

namespace kcone::commands {

namespace {

using json_io::Json;
using namespace json_io;

using Handler = std::function<Json(const Json&, const Options&)>;

// A bare class, or {"x": class}.
DivisorClass read_x(const Json& in) {
  if (has(in, "x")) return read_divisor(in["x"], "/x");
  return read_divisor(in, "");
}

Json optional_integer(const std::optional<Integer>& n) { return n ? Json(n->get_str()) : Json(nullptr); }

Json cmd_pair(const Json& in, const Options&) {
  DivisorClass x;
  DivisorClass y;
  if (in.is_array()) {
    if (in.size() != 2) malformed("", "expected two classes");
    x = read_divisor(in[0], "/0");
    y = read_divisor(in[1], "/1");
  } else {
    x = read_divisor(field(in, "", "x"), "/x");
    y = read_divisor(field(in, "", "y"), "/y");
  }
  return Json{{"value", pair(x, y).get_str()}};
}

Json cmd_reflect(const Json& in, const Options&) {
  DivisorClass x = read_divisor(field(in, "", "x"), "/x");
  DivisorClass image;
  if (has(in, "root")) {
    long i = read_long(in["root"], "/root");
    if (i < 0 || i >= kNumRoots) malformed("/root", "root index must be in 0..8");
    image = reflect(x, static_cast<int>(i));
  } else if (has(in, "alpha")) {
    image = reflect(x, read_divisor(in["alpha"], "/alpha"));
  } else {
    malformed("/root", "missing field (or give /alpha)");
  }
  return Json{{"image", divisor(image)}};
}

RootSubset read_roots(const Json& in) {
  if (!has(in, "roots")) return all_roots();
  const Json& r = in["roots"];
  if (r.is_string()) {
    if (r == "all") return all_roots();
    if (r == "e8") return e8_roots();
    malformed("/roots", "expected \"all\", \"e8\" or a list of root indices");
  }
  if (!r.is_array()) malformed("/roots", "expected \"all\", \"e8\" or a list of root indices");
  RootSubset out;
  for (std::size_t k = 0; k < r.size(); ++k) {
    long i = read_long(r[k], child("/roots", k));
    if (i < 0 || i >= kNumRoots) malformed(child("/roots", k), "root index must be in 0..8");
    out.set(static_cast<std::size_t>(i));
  }
  return out;
}

Json cmd_reduce(const Json& in, const Options& opt) {
  DivisorClass x = read_x(in);
  Reduction r = bourbaki_reduce(x, read_roots(in), opt.max_steps);
  return Json{{"word", word(r.word)},
              {"image", divisor(r.image)},
              {"position", chamber_position_name(chamber_position(r.image))}};
}

Json cmd_manin(const Json& in, const Options&) {
  if (has(in, "class")) {
    return Json{{"coords", section_coords(class_to_coords(read_divisor(in["class"], "/class")))}};
  }
  SectionCoords a = read_section_coords(in, "");
  ManinAux aux = manin_aux(a.values());
  return Json{{"class", divisor(manin_class(a))}, {"d", rational(aux.d)}, {"s", rational(aux.s)}};
}

Json cmd_word(const Json& in, const Options& opt) {
  if (has(in, "translation")) {
    SectionCoords t = read_section_coords(in["translation"], "/translation");
    WeylWord w = translation_as_weyl_word(t, opt.max_steps);
    return Json{{"word", word(w)}, {"length", w.length()}, {"matrix_equal", w.matrix() == translation_map(t)}};
  }
  if (has(in, "perm")) {
    std::array<int, kBlowups> image = read_permutation(in, "");
    return Json{{"word", word(permutation_word(image))}, {"one_line", image}};
  }
  if (has(in, "letters")) {
    WeylWord w = read_word(in, "");
    Json out{{"word", word(w)}, {"identity", word_is_identity(w)}};
    if (has(in, "x")) out["image"] = divisor(apply_word(w, read_divisor(in["x"], "/x")));
    return out;
  }
  malformed("/translation", "missing field (or give /perm or /letters)");
}

// "(2,3,4,1,5,6,7,8,9)" -> {2, 3, ...}
std::array<int, kBlowups> parse_tuple(const Json& j, const std::string& path) {
  if (!j.is_string()) malformed(path, "expected a tuple string \"(a,b,...)\"");
  static const std::regex pattern(R"(\(\s*[1-9](\s*,\s*[1-9]){8}\s*\))");
  const auto& s = j.get_ref<const std::string&>();
  if (!std::regex_match(s, pattern)) malformed(path, "expected nine entries \"(a,b,...)\", got \"" + s + "\"");
  std::array<int, kBlowups> out;
  std::size_t k = 0;
  for (char c : s) {
    if (c >= '1' && c <= '9') out[k++] = c - '0';
  }
  return out;
}

Json thm22_fixture() {
  PrintedWordData data = printed_word_data();
  Json out{{"relation", "P6 ws P5 ws P4 ws P3 ws P2 ws P1 t2 = Id"},
           {"ws", "reflection in h - e1 - e2 - e3"},
           {"t2", section_coords(SectionCoords::of_exceptional(2))}};
  for (int k = 5; k >= 0; --k) {
    std::string s = "(";
    for (int i = 0; i < kBlowups; ++i) s += (i ? "," : "") + std::to_string(data.perms[k][i]);
    out["P" + std::to_string(k + 1)] = s + ")";
  }
  return out;
}

PrintedWordData read_thm22_fixture(const Json& in) {
  PrintedWordData data;
  for (int k = 0; k < 6; ++k) {
    const std::string key = "P" + std::to_string(k + 1);
    data.perms[k] = parse_tuple(field(in, "", key.c_str()), "/" + key);
  }
  return data;
}

Json cmd_verify_thm22(const Json& in, const Options& opt) {
  PrintedWordData data = printed_word_data();
  if (in.is_object() && !in.empty()) {
    data = read_thm22_fixture(in);
  } else if (!opt.data_dir.empty()) {
    std::ifstream file(std::filesystem::path(opt.data_dir) / "thm22_word.json");
    if (file) {
      Json fixture;
      try {
        fixture = Json::parse(file);
      } catch (const Json::exception& e) {
        throw Error(ErrorCode::MalformedInput, std::string("/: thm22_word.json: ") + e.what());
      }
      data = read_thm22_fixture(fixture);
    }
  }
  PrintedWordCheck check = verify_paper_word(data);
  Json out;
  out["interpretation"] = check.interpretation ? Json(tuple_reading_name(*check.interpretation)) : Json(nullptr);
  out["identity"] = check.interpretation.has_value();
  out["readings"] = Json{{tuple_reading_name(TupleReading::OneLine), check.one_line_identity},
                         {tuple_reading_name(TupleReading::Cycle), check.cycle_identity}};
  return out;
}

Json cmd_lemma24(const Json& in, const Options&) {
  SectionCoords a = read_section_coords(in, "");
  auto c = lemma24_coefficients(a);
  DivisorClass sigma = manin_class(a);
  bool exception = false;
  for (int i = 1; i <= kBlowups; ++i) exception = exception || sigma == DivisorClass::exceptional(i);
  bool nonnegative = std::all_of(c.begin(), c.end(), [](const Rational& q) { return sgn(q) >= 0; });
  Json coeffs = Json::array();
  for (const auto& q : c) coeffs.push_back(rational(q));
  return Json{{"coefficients", coeffs},
              {"sigma", divisor(sigma)},
              {"exception", exception},
              {"nonnegative", nonnegative},
              {"two_d_plus_s", rational(two_d_plus_s(a))}};
}

Json cmd_nef_surface(const Json& in, const Options&) {
  DivisorClass x = read_x(in);
  std::optional<Integer> mu = section_floor(x);
  return Json{{"nef", surface_nef_test(x)}, {"mu", optional_integer(mu)}};
}

Json cmd_nef_threefold(const Json& in, const Options&) {
  ThreefoldClass a = read_threefold_class(in, "");
  ThreefoldNef v = threefold_nef_verdict(a);
  Json interval = v.interval ? Json::array({v.interval->first.get_str(), v.interval->second.get_str()}) : Json(nullptr);
  return Json{{"nef", v.nef},
              {"mu1", optional_integer(v.mu1)},
              {"mu2", optional_integer(v.mu2)},
              {"interval", interval},
              {"witness", optional_integer(v.witness)},
              {"class", threefold_class(a)}};
}

Json cmd_dual(const Json& in, const Options&) {
  std::vector<RationalVector> rays = read_rays(field(in, "", "rays"), "/rays");
  if (rays.empty()) malformed("/rays", "at least one ray is required");
  std::string form = "standard";
  if (has(in, "form")) {
    if (!in["form"].is_string()) malformed("/form", "expected \"standard\" or \"intersection\"");
    form = in["form"].get<std::string>();
    if (form != "standard" && form != "intersection") malformed("/form", "expected \"standard\" or \"intersection\"");
  }
  const std::size_t dim = rays.front().size();
  if (form == "intersection" && dim != kPicardRank) malformed("/rays", "the intersection form needs vectors of length 10");
  RationalCone cone(dim, rays);
  return json_io::cone(form == "standard" ? dual_cone(cone) : dual_cone(cone, DiagonalForm::intersection()));
}

Json cmd_member(const Json& in, const Options&) {
  RationalVector x = read_rational_vector(field(in, "", "x"), "/x");
  std::vector<RationalVector> rays = read_rays(field(in, "", "rays"), "/rays");
  for (std::size_t k = 0; k < rays.size(); ++k) {
    if (rays[k].size() != x.size()) malformed(child("/rays", k), "length differs from /x");
  }
  Membership m = cone_member(x, RationalCone(x.size(), rays));
  Json out{{"member", m.member}};
  if (m.member) {
    out["combination"] = rational_vector(m.combination);
  } else {
    out["separator"] = rational_vector(m.separator);
  }
  return out;
}

Json cmd_chamber(const Json&, const Options&) {
  RationalCone chamber = nef_chamber_polytope();
  Json out = json_io::cone(chamber);
  Json edges = Json::array();
  for (const auto& ray : chamber.generators()) {
    IntegerVector v = primitive(ray);
    DivisorClass::Coordinates c;
    for (std::size_t k = 0; k < kPicardRank; ++k) c[k] = v[k];
    DivisorClass x(c);
    if (is_nef_edge(x)) edges.push_back(divisor(x));
  }
  out["edges"] = edges;
  return out;
}

Json cmd_reduce_domain(const Json& in, const Options& opt) {
  DivisorClass x = read_x(in);
  DomainReduction r = reduce_mod_translations(x, opt.max_steps);
  OrbitRepresentative c = canonical_domain_representative(x, opt.max_steps);
  return Json{{"translation", section_coords(r.translation)},
              {"e8_word", word(r.e8_word)},
              {"image", divisor(r.image)},
              {"in_domain", in_fundamental_domain(r.image)},
              {"canonical",
               Json{{"translation", section_coords(c.translation)},
                    {"image", divisor(c.image)},
                    {"domain_points", c.domain_points}}}};
}

Json cmd_census(const Json& in, const Options& opt) {
  long bound = 1;
  if (has(in, "bound")) bound = read_long(in["bound"], "/bound");
  if (opt.bound) bound = *opt.bound;
  if (bound < 0) malformed("/bound", "bound must be nonnegative");
  CensusReport report = edge_orbit_census(bound, opt.max_steps);
  Json reps = Json::array();
  for (const auto& e : report.representatives) {
    reps.push_back(Json{{"class", threefold_class(e.representative)},
                        {"factor", e.factor},
                        {"surface_edge", divisor(e.surface_edge)},
                        {"hits", e.hits},
                        {"domain_points", e.domain_points},
                        {"nef", e.nef},
                        {"in_domain", e.in_domain}});
  }
  return Json{{"bound", report.bound},
              {"chamber_edges", report.chamber_edges},
              {"translations", report.translations},
              {"rays", report.rays},
              {"all_nef", report.all_nef()},
              {"all_in_domain", report.all_in_domain()},
              {"representatives", reps}};
}

const std::map<std::string, Handler>& handlers() {
  static const std::map<std::string, Handler> table{
      {"pair", cmd_pair},
      {"reflect", cmd_reflect},
      {"reduce", cmd_reduce},
      {"manin", cmd_manin},
      {"word", cmd_word},
      {"verify-thm22", cmd_verify_thm22},
      {"lemma24", cmd_lemma24},
      {"nef-surface", cmd_nef_surface},
      {"nef-threefold", cmd_nef_threefold},
      {"dual", cmd_dual},
      {"member", cmd_member},
      {"chamber", cmd_chamber},
      {"reduce-domain", cmd_reduce_domain},
      {"census", cmd_census},
  };
  return table;
}

std::string render(const Json& j) { return j.dump(2) + "\n"; }

Result error_result(const Error& e) {
  Json out{{"error", error_code_name(e.code())}};
  std::string message = e.what();
  if (e.code() == ErrorCode::MalformedInput) {
    auto colon = message.find(": ");
    if (colon != std::string::npos) {
      out["path"] = message.substr(0, colon);
      message = message.substr(colon + 2);
    }
  }
  out["message"] = message;
  return {render(out), e.code() == ErrorCode::MalformedInput ? kMalformed : kDomainError};
}

}  // namespace

const std::vector<std::string>& names() {
  static const std::vector<std::string> out = [] {
    std::vector<std::string> v;
    for (const auto& [name, handler] : handlers()) v.push_back(name);
    return v;
  }();
  return out;
}

Result run(const std::string& command, const std::string& input, const Options& options) {
  try {
    auto it = handlers().find(command);
    if (it == handlers().end()) throw Error(ErrorCode::MalformedInput, "/: unknown command \"" + command + "\"");
    if (options.max_steps < 1) throw Error(ErrorCode::MalformedInput, "/: max-steps must be at least 1");
    Json in = Json::object();
    if (input.find_first_not_of(" \t\r\n") != std::string::npos) {
      try {
        in = Json::parse(input);
      } catch (const Json::parse_error& e) {
        throw Error(ErrorCode::MalformedInput, std::string("/: ") + e.what());
      }
    }
    return {render(it->second(in, options)), kOk};
  } catch (const Error& e) {
    return error_result(e);
  } catch (const std::exception& e) {
    return error_result(Error(ErrorCode::Internal, e.what()));
  }
}

namespace {

struct GoldenCase {
  const char* name;
  const char* command;
  Json input;
};

std::vector<GoldenCase> golden_cases() {
  const Json h = divisor(DivisorClass::hyperplane());
  const Json f = divisor(fiber_class());
  const Json e1 = divisor(DivisorClass::exceptional(1));
  const Json e2 = divisor(DivisorClass::exceptional(2));
  const DivisorClass t2h = translation_map(SectionCoords::of_exceptional(2)).apply(DivisorClass::hyperplane());
  const SectionCoords t = SectionCoords::of_exceptional(2) + SectionCoords::of_exceptional(5);
  const DivisorClass moved_probe = translation_map(t).apply(default_chamber_probe());
  Json roots = Json::array();
  for (const auto& r : simple_roots()) roots.push_back(rational_vector(to_rational(r.cls)));
  return {
      {"pair_f_f", "pair", Json{{"x", f}, {"y", f}}},
      {"pair_h_e1", "pair", Json{{"x", h}, {"y", e1}}},
      {"reflect_h_ws", "reflect", Json{{"x", h}, {"root", 0}}},
      {"reflect_e1_root1", "reflect", Json{{"x", e1}, {"root", 1}}},
      {"reduce_t2_h", "reduce", Json{{"x", divisor(t2h)}}},
      {"reduce_e1_root1", "reduce", Json{{"x", e1}, {"roots", {1}}}},
      {"manin_minus_delta2", "manin", section_coords(SectionCoords::of_exceptional(2))},
      {"manin_coset_generator", "manin", section_coords(SectionCoords::coset_generator())},
      {"manin_inverse_e2", "manin", Json{{"class", e2}}},
      {"word_cycle_12", "word", Json{{"perm", {1, 2}}, {"notation", "cycle"}}},
      {"word_translation_e2", "word", Json{{"translation", section_coords(SectionCoords::of_exceptional(2))}}},
      {"verify_thm22", "verify-thm22", thm22_fixture()},
      {"lemma24_minus_delta2", "lemma24", section_coords(SectionCoords::of_exceptional(2))},
      {"lemma24_coset_generator", "lemma24", section_coords(SectionCoords::coset_generator())},
      {"nef_surface_h", "nef-surface", h},
      {"nef_surface_e1", "nef-surface", e1},
      {"nef_surface_f", "nef-surface", f},
      {"nef_threefold_h_h", "nef-threefold", Json{{"A1", h}, {"A2", h}}},
      {"nef_threefold_e1_h", "nef-threefold", Json{{"A1", e1}, {"A2", h}}},
      {"nef_threefold_e1_h_plus_f", "nef-threefold",
       Json{{"A1", e1}, {"A2", divisor(DivisorClass::hyperplane() + fiber_class())}}},
      {"dual_quadrant", "dual", Json{{"rays", Json::array({Json::array({"1", "0"}), Json::array({"1", "1"})})}}},
      {"member_f_in_roots", "member", Json{{"x", rational_vector(to_rational(fiber_class()))}, {"rays", roots}}},
      {"member_e1_not_in_roots", "member",
       Json{{"x", rational_vector(to_rational(DivisorClass::exceptional(1)))}, {"rays", roots}}},
      {"chamber", "chamber", Json::object()},
      {"reduce_domain_probe", "reduce-domain", divisor(moved_probe)},
      {"census_bound_1", "census", Json{{"bound", 1}}},
  };
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  out << text;
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

}  // namespace

std::vector<std::string> emit_fixtures(const std::string& dir) {
  namespace fs = std::filesystem;
  const fs::path root(dir);
  std::error_code ec;
  fs::create_directories(root / "golden", ec);
  if (ec) throw std::runtime_error("cannot create " + (root / "golden").string() + ": " + ec.message());

  std::vector<std::string> written;
  const fs::path fixture = root / "thm22_word.json";
  write_file(fixture, render(thm22_fixture()));
  written.push_back(fixture.string());

  for (const auto& c : golden_cases()) {
    const std::string input = render(c.input);
    Result r = run(c.command, input);
    Json doc{{"command", c.command},
             {"input", c.input},
             {"exit_code", r.exit_code},
             {"output", Json::parse(r.output)}};
    const fs::path path = root / "golden" / (std::string(c.name) + ".json");
    write_file(path, render(doc));
    written.push_back(path.string());
  }
  return written;
}

}  // namespace kcone::commands
