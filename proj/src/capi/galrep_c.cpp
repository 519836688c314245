#include "galrep/galrep.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "galrep/commands.hpp"
#include "galrep/errors.hpp"
#include "galrep/fixture.hpp"

struct galrep_fixture {
  galrep::Fixture value;
};

struct galrep_options {
  galrep::CommandOptions value;
};

namespace {

thread_local std::string last_error;

galrep_status set_error(galrep_status status, const std::string& message) {
  last_error = message;
  return status;
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <class F>
galrep_status guarded(F&& body) {
  try {
    last_error.clear();
    return body();
  } catch (const galrep::Error& e) {
    return set_error(static_cast<galrep_status>(e.kind()), e.what());
  } catch (const std::exception& e) {
    return set_error(GALREP_ERR_INTERNAL, std::string("internal error: ") + e.what());
  } catch (...) {
    return set_error(GALREP_ERR_INTERNAL, "internal error");
  }
}

}  // namespace

extern "C" {

const char* galrep_last_error(void) { return last_error.c_str(); }

galrep_status galrep_fixture_load(const char* path, galrep_fixture** out) {
  if (!path || !out) return set_error(GALREP_ERR_VALIDATION, "null argument");
  return guarded([&] {
    *out = new galrep_fixture{galrep::parse_fixture_file(path)};
    return GALREP_OK;
  });
}

galrep_status galrep_fixture_parse(const char* text, galrep_fixture** out) {
  if (!text || !out) return set_error(GALREP_ERR_VALIDATION, "null argument");
  return guarded([&] {
    *out = new galrep_fixture{galrep::parse_fixture_text(text)};
    return GALREP_OK;
  });
}

void galrep_fixture_free(galrep_fixture* fixture) { delete fixture; }

galrep_status galrep_fixture_serialize(const galrep_fixture* fixture, char** out) {
  if (!fixture || !out) return set_error(GALREP_ERR_VALIDATION, "null argument");
  return guarded([&] {
    *out = copy_string(galrep::serialize_fixture(fixture->value));
    return *out ? GALREP_OK : set_error(GALREP_ERR_INTERNAL, "out of memory");
  });
}

int galrep_fixture_equal(const galrep_fixture* a, const galrep_fixture* b) {
  return a && b && a->value == b->value ? 1 : 0;
}

galrep_options* galrep_options_new(void) { return new galrep_options{}; }
void galrep_options_free(galrep_options* options) { delete options; }

void galrep_options_add_rep(galrep_options* options, const char* name) {
  if (options && name) options->value.reps.emplace_back(name);
}
void galrep_options_set_subgroup(galrep_options* options, const char* name) {
  if (options && name) options->value.subgroup = name;
}
void galrep_options_set_limit(galrep_options* options, uint64_t limit) {
  if (options) options->value.limit = static_cast<std::size_t>(limit);
}
void galrep_options_set_prime(galrep_options* options, uint64_t prime) {
  if (options) options->value.prime = prime;
}
void galrep_options_set_stride(galrep_options* options, uint64_t stride) {
  if (options) options->value.stride = static_cast<std::size_t>(stride);
}
void galrep_options_set_degree(galrep_options* options, uint32_t degree) {
  if (options) options->value.degree = degree;
}
void galrep_options_set_records(galrep_options* options, int records) {
  if (options) options->value.records = records != 0;
}

galrep_status galrep_run(const galrep_fixture* fixture, const char* const* words, size_t word_count,
                         const galrep_options* options, char** out) {
  if (!fixture || !out || (word_count > 0 && !words)) return set_error(GALREP_ERR_VALIDATION, "null argument");
  return guarded([&] {
    std::vector<std::string> command(words, words + word_count);
    static const galrep::CommandOptions defaults;
    const auto result = galrep::run_command(command, fixture->value, options ? options->value : defaults);
    *out = copy_string(result.output);
    if (result.status != 0) return set_error(static_cast<galrep_status>(result.status), result.error);
    return GALREP_OK;
  });
}

void galrep_string_free(char* s) { std::free(s); }

}  // extern "C"
