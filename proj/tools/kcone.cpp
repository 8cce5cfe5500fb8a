// kcone: command-line front end over the libkcone C interface.
//
//   kcone <command> [--input FILE|-] [--max-steps N] [--bound N] [--config FILE]
//   kcone emit-fixtures [--output DIR]

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "kcone/kcone.h"

namespace {

constexpr int kMalformed = 2;

struct CommandInfo {
  const char* name;
  const char* help;
};

const CommandInfo kCommands[] = {
    {"pair", "intersection number x.y"},
    {"reflect", "reflect a class in a simple root or a given root"},
    {"reduce", "reduce a class into the fundamental chamber"},
    {"manin", "section class from Mordell-Weil coordinates, or back"},
    {"word", "Weyl words for translations and permutations"},
    {"verify-thm22", "check the printed word for the translation by e2"},
    {"lemma24", "coefficients of sigma - e1 on the root basis"},
    {"nef-surface", "nef test on the surface"},
    {"nef-threefold", "nef test on the fiber product"},
    {"dual", "dual cone"},
    {"member", "cone membership with a certificate"},
    {"chamber", "nef part of the fundamental chamber"},
    {"reduce-domain", "move a class into the translation domain"},
    {"census", "orbit census of nef chamber edges on the threefold"},
};

struct Settings {
  std::string input;
  std::optional<long> max_steps;
  std::optional<long> bound;
  std::string format = "json";
  std::string config;
  std::string data_dir;
  std::string output_dir = "data";
};

std::string read_all(std::istream& in) {
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

int usage_error(const std::string& message) {
  nlohmann::ordered_json doc{{"error", "MALFORMED_INPUT"}, {"path", "/"}, {"message", message}};
  std::cerr << doc.dump(2) << "\n";
  return kMalformed;
}

// Precedence: built-in default < KCONE_MAX_STEPS < config file < flags.
std::optional<std::string> apply_config(Settings& s, long& max_steps, long& bound) {
  if (const char* env = std::getenv("KCONE_MAX_STEPS")) {
    try {
      max_steps = std::stol(env);
    } catch (const std::exception&) {
      return "KCONE_MAX_STEPS is not an integer: " + std::string(env);
    }
  }
  if (!s.config.empty()) {
    std::ifstream file(s.config);
    if (!file) return "cannot read config file " + s.config;
    nlohmann::json cfg;
    try {
      cfg = nlohmann::json::parse(file);
      if (cfg.contains("max_steps")) max_steps = cfg.at("max_steps").get<long>();
      if (cfg.contains("bound")) bound = cfg.at("bound").get<long>();
      if (cfg.contains("data_dir") && s.data_dir.empty()) s.data_dir = cfg.at("data_dir").get<std::string>();
    } catch (const std::exception& e) {
      return "config file " + s.config + ": " + e.what();
    }
  }
  if (s.max_steps) max_steps = *s.max_steps;
  if (s.bound) bound = *s.bound;
  return std::nullopt;
}

int run_command(const std::string& command, Settings& s) {
  if (s.format != "json") return usage_error("unsupported format \"" + s.format + "\"");
  long max_steps = 0;
  long bound = -1;
  if (auto err = apply_config(s, max_steps, bound)) return usage_error(*err);

  std::string input;
  if (s.input == "-") {
    input = read_all(std::cin);
  } else if (!s.input.empty()) {
    std::ifstream file(s.input, std::ios::binary);
    if (!file) return usage_error("cannot read input file " + s.input);
    input = read_all(file);
  }

  char* output = nullptr;
  int exit_code = 0;
  kcone_status st = kcone_run(command.c_str(), input.c_str(), max_steps, bound,
                              s.data_dir.empty() ? nullptr : s.data_dir.c_str(), &output, &exit_code);
  if (st != KCONE_OK) {
    std::cerr << kcone_status_name(st) << ": " << kcone_last_error() << "\n";
    return 1;
  }
  (exit_code == 0 ? std::cout : std::cerr) << output;
  kcone_string_free(output);
  return exit_code;
}

int run_emit(const Settings& s) {
  char* listing = nullptr;
  kcone_status st = kcone_emit_fixtures(s.output_dir.c_str(), &listing);
  if (st != KCONE_OK) {
    std::cerr << kcone_status_name(st) << ": " << kcone_last_error() << "\n";
    return 1;
  }
  std::cout << listing;
  kcone_string_free(listing);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact lattice computations for rational elliptic surfaces and their fiber products"};
  app.require_subcommand(1);
  Settings s;
  std::string chosen;

  for (const auto& [name, help] : kCommands) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("--input,-i", s.input, "JSON input file, or - for standard input");
    sub->add_option("--max-steps", s.max_steps, "reflection cap for reductions")->check(CLI::PositiveNumber);
    sub->add_option("--bound", s.bound, "census translation bound")->check(CLI::NonNegativeNumber);
    sub->add_option("--format", s.format, "output format (json)");
    sub->add_option("--config", s.config, "JSON config file with max_steps, bound, data_dir");
    sub->add_option("--data-dir", s.data_dir, "directory holding thm22_word.json");
    sub->callback([&chosen, name = name] { chosen = name; });
  }
  CLI::App* emit = app.add_subcommand("emit-fixtures", "write fixture and golden files");
  emit->add_option("--output,-o", s.output_dir, "target directory");
  emit->callback([&chosen] { chosen = "emit-fixtures"; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kMalformed;
  }

  if (chosen == "emit-fixtures") return run_emit(s);
  return run_command(chosen, s);
}
