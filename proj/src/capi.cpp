#include "kcone/kcone.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "json_io.hpp"
#include "kcone/commands.hpp"
#include "kcone/error.hpp"

struct kcone_class {
  kcone::DivisorClass value;
};

struct kcone_word {
  kcone::WeylWord value;
};

namespace {

thread_local std::string last_error;

kcone_status fail(kcone_status status, const std::string& message) {
  last_error = message;
  return status;
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

// Runs f, mapping exceptions onto status codes.
template <typename F>
kcone_status guarded(F&& f) {
  try {
    last_error.clear();
    f();
    return KCONE_OK;
  } catch (const kcone::Error& e) {
    return fail(static_cast<kcone_status>(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(KCONE_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(KCONE_INTERNAL, e.what());
  }
}

#define KCONE_REQUIRE(p) \
  if (!(p)) return fail(KCONE_NULL_POINTER, #p " is null")

}  // namespace

extern "C" {

const char* kcone_version(void) { return "1.0.0"; }

const char* kcone_status_name(kcone_status status) {
  switch (status) {
    case KCONE_OK: return "OK";
    case KCONE_NULL_POINTER: return "NULL_POINTER";
    case KCONE_IO_ERROR: return "IO_ERROR";
    default: return kcone::error_code_name(static_cast<kcone::ErrorCode>(status));
  }
}

const char* kcone_last_error(void) { return last_error.c_str(); }

void kcone_string_free(char* s) { std::free(s); }

kcone_status kcone_class_new(const long coords[10], kcone_class** out) {
  KCONE_REQUIRE(coords);
  KCONE_REQUIRE(out);
  return guarded([&] {
    kcone::DivisorClass::Coordinates c;
    for (std::size_t k = 0; k < kcone::kPicardRank; ++k) c[k] = coords[k];
    *out = new kcone_class{kcone::DivisorClass(c)};
  });
}

kcone_status kcone_class_from_json(const char* json, kcone_class** out) {
  KCONE_REQUIRE(json);
  KCONE_REQUIRE(out);
  return guarded([&] {
    kcone::json_io::Json j;
    try {
      j = kcone::json_io::Json::parse(json);
    } catch (const std::exception& e) {
      throw kcone::Error(kcone::ErrorCode::MalformedInput, std::string("/: ") + e.what());
    }
    *out = new kcone_class{kcone::json_io::read_divisor(j, "")};
  });
}

kcone_status kcone_class_to_json(const kcone_class* x, char** out) {
  KCONE_REQUIRE(x);
  KCONE_REQUIRE(out);
  return guarded([&] { *out = copy_string(kcone::json_io::divisor(x->value).dump()); });
}

kcone_status kcone_class_coeff(const kcone_class* x, int index, char** out) {
  KCONE_REQUIRE(x);
  KCONE_REQUIRE(out);
  if (index < 0 || index >= static_cast<int>(kcone::kPicardRank)) {
    return fail(KCONE_INVALID_ARGUMENT, "coefficient index must be in 0..9");
  }
  return guarded([&] { *out = copy_string(x->value[index].get_str()); });
}

void kcone_class_free(kcone_class* x) { delete x; }

kcone_status kcone_pair(const kcone_class* x, const kcone_class* y, char** out) {
  KCONE_REQUIRE(x);
  KCONE_REQUIRE(y);
  KCONE_REQUIRE(out);
  return guarded([&] { *out = copy_string(kcone::pair(x->value, y->value).get_str()); });
}

kcone_status kcone_reflect(const kcone_class* x, int root_index, kcone_class** out) {
  KCONE_REQUIRE(x);
  KCONE_REQUIRE(out);
  return guarded([&] { *out = new kcone_class{kcone::reflect(x->value, root_index)}; });
}

kcone_status kcone_reduce(const kcone_class* x, long max_steps, kcone_word** word, kcone_class** image) {
  KCONE_REQUIRE(x);
  KCONE_REQUIRE(word);
  KCONE_REQUIRE(image);
  return guarded([&] {
    long cap = max_steps > 0 ? max_steps : kcone::kDefaultMaxSteps;
    kcone::Reduction r = kcone::bourbaki_reduce(x->value, kcone::all_roots(), cap);
    *word = new kcone_word{std::move(r.word)};
    *image = new kcone_class{std::move(r.image)};
  });
}

kcone_status kcone_surface_nef(const kcone_class* x, int* nef) {
  KCONE_REQUIRE(x);
  KCONE_REQUIRE(nef);
  return guarded([&] { *nef = kcone::surface_nef_test(x->value) ? 1 : 0; });
}

kcone_status kcone_word_new(const int* letters, size_t length, kcone_word** out) {
  KCONE_REQUIRE(out);
  if (length > 0) KCONE_REQUIRE(letters);
  return guarded([&] {
    std::vector<int> v(letters, letters + length);
    *out = new kcone_word{kcone::WeylWord(std::move(v))};
  });
}

size_t kcone_word_length(const kcone_word* w) { return w ? w->value.length() : 0; }

int kcone_word_letter(const kcone_word* w, size_t k) {
  if (!w || k >= w->value.length()) return -1;
  return w->value.letters()[k];
}

kcone_status kcone_word_apply(const kcone_word* w, const kcone_class* x, kcone_class** out) {
  KCONE_REQUIRE(w);
  KCONE_REQUIRE(x);
  KCONE_REQUIRE(out);
  return guarded([&] { *out = new kcone_class{kcone::apply_word(w->value, x->value)}; });
}

kcone_status kcone_word_is_identity(const kcone_word* w, int* identity) {
  KCONE_REQUIRE(w);
  KCONE_REQUIRE(identity);
  return guarded([&] { *identity = kcone::word_is_identity(w->value) ? 1 : 0; });
}

void kcone_word_free(kcone_word* w) { delete w; }

kcone_status kcone_run(const char* command, const char* input_json, long max_steps, long bound,
                       const char* data_dir, char** output, int* exit_code) {
  KCONE_REQUIRE(command);
  KCONE_REQUIRE(output);
  KCONE_REQUIRE(exit_code);
  return guarded([&] {
    kcone::commands::Options options;
    if (max_steps > 0) options.max_steps = max_steps;
    if (bound >= 0) options.bound = bound;
    if (data_dir) options.data_dir = data_dir;
    kcone::commands::Result r = kcone::commands::run(command, input_json ? input_json : "", options);
    *output = copy_string(r.output);
    *exit_code = r.exit_code;
  });
}

kcone_status kcone_emit_fixtures(const char* dir, char** listing) {
  KCONE_REQUIRE(dir);
  KCONE_REQUIRE(listing);
  try {
    last_error.clear();
    std::string text;
    for (const auto& path : kcone::commands::emit_fixtures(dir)) text += path + "\n";
    *listing = copy_string(text);
    return KCONE_OK;
  } catch (const kcone::Error& e) {
    return fail(static_cast<kcone_status>(e.code()), e.what());
  } catch (const std::exception& e) {
    return fail(KCONE_IO_ERROR, e.what());
  }
}

}  // extern "C"
