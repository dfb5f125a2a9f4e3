#include "purecheck/purecheck.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <memory>
#include <new>
#include <optional>
#include <stdexcept>
#include <string>

#include "purecheck/automaton.hpp"
#include "purecheck/patch.hpp"
#include "purecheck/runner.hpp"

struct pc_suite {
  purecheck::runner::Suite impl;
  std::vector<std::string> tags;  // joined per entry, kept for borrowed views
};

struct pc_report {
  purecheck::runner::Report impl;
};

struct pc_word {
  purecheck::patch::Word<purecheck::patch::Edit> impl;
};

namespace {

thread_local std::string last_error;

struct StatusError : std::runtime_error {
  StatusError(pc_status s, const std::string& what) : std::runtime_error(what), status(s) {}
  pc_status status;
};

void require(const void* p, const char* what) {
  if (p == nullptr) throw StatusError(PC_NULL_ARGUMENT, std::string(what) + " is null");
}

template <class F>
pc_status try_(F f) {
  try {
    f();
    last_error.clear();
    return PC_OK;
  } catch (const StatusError& e) {
    last_error = e.what();
    return e.status;
  } catch (const purecheck::patch::ParseError& e) {
    last_error = e.what();
    return PC_PARSE_ERROR;
  } catch (const purecheck::runner::ConfigError& e) {
    last_error = e.what();
    return PC_CONFIG_ERROR;
  } catch (const std::invalid_argument& e) {
    last_error = e.what();
    return PC_INVALID_ARGUMENT;
  } catch (const std::length_error& e) {
    last_error = e.what();
    return PC_OUT_OF_RANGE;
  } catch (const std::out_of_range& e) {
    last_error = e.what();
    return PC_OUT_OF_RANGE;
  } catch (const std::exception& e) {
    last_error = e.what();
    return PC_INTERNAL_ERROR;
  } catch (...) {
    last_error = "unknown error";
    return PC_INTERNAL_ERROR;
  }
}

char* duplicate(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.data(), s.size());
  out[s.size()] = '\0';
  return out;
}

void check_index(std::size_t index, std::size_t size) {
  if (index >= size) {
    throw StatusError(PC_OUT_OF_RANGE, "index " + std::to_string(index) +
                                           " out of range for size " + std::to_string(size));
  }
}

pc_outcome to_c(purecheck::Outcome o) {
  switch (o) {
    case purecheck::Outcome::holds: return PC_HOLDS;
    case purecheck::Outcome::falsified: return PC_FALSIFIED;
    case purecheck::Outcome::logical_error: return PC_LOGICAL_ERROR;
    case purecheck::Outcome::tactical_error: return PC_TACTICAL_ERROR;
  }
  return PC_TACTICAL_ERROR;
}

void refresh_tags(pc_suite& s) {
  s.tags.clear();
  for (const auto& e : s.impl.entries()) {
    std::string joined;
    for (const auto& t : e.tags) joined += (joined.empty() ? "" : ",") + t;
    s.tags.push_back(std::move(joined));
  }
}

}  // namespace

extern "C" {

const char* pc_status_string(pc_status status) {
  switch (status) {
    case PC_OK: return "ok";
    case PC_NULL_ARGUMENT: return "null argument";
    case PC_INVALID_ARGUMENT: return "invalid argument";
    case PC_PARSE_ERROR: return "parse error";
    case PC_CONFIG_ERROR: return "configuration error";
    case PC_OUT_OF_RANGE: return "out of range";
    case PC_INTERNAL_ERROR: return "internal error";
  }
  return "unknown status";
}

const char* pc_last_error(void) { return last_error.c_str(); }

const char* pc_version(void) { return "0.1.0"; }

void pc_string_free(char* s) { std::free(s); }

pc_status pc_suite_create(pc_suite_kind kind, pc_suite** out) {
  return try_([&] {
    require(out, "out");
    *out = nullptr;
    auto s = std::make_unique<pc_suite>();
    switch (kind) {
      case PC_SUITE_EMPTY: break;
      case PC_SUITE_DEFAULT: s->impl = purecheck::runner::default_suite(); break;
      case PC_SUITE_CONTROLS: s->impl = purecheck::runner::control_suite(); break;
      case PC_SUITE_ALL: s->impl = purecheck::runner::full_suite(); break;
      default: throw StatusError(PC_INVALID_ARGUMENT, "unknown suite kind");
    }
    refresh_tags(*s);
    *out = s.release();
  });
}

void pc_suite_destroy(pc_suite* suite) { delete suite; }

pc_status pc_suite_size(const pc_suite* suite, size_t* out) {
  return try_([&] {
    require(suite, "suite");
    require(out, "out");
    *out = suite->impl.size();
  });
}

pc_status pc_suite_entry_name(const pc_suite* suite, size_t index, const char** out) {
  return try_([&] {
    require(suite, "suite");
    require(out, "out");
    check_index(index, suite->impl.size());
    *out = suite->impl.entries()[index].name.c_str();
  });
}

pc_status pc_suite_entry_tags(const pc_suite* suite, size_t index, const char** out) {
  return try_([&] {
    require(suite, "suite");
    require(out, "out");
    check_index(index, suite->tags.size());
    *out = suite->tags[index].c_str();
  });
}

pc_status pc_suite_add_constant(pc_suite* suite, const char* name, int value) {
  return try_([&] {
    require(suite, "suite");
    require(name, "name");
    suite->impl.add(name, purecheck::check(purecheck::Meta<bool>(value != 0)));
    refresh_tags(*suite);
  });
}

pc_status pc_suite_run(const pc_suite* suite, int confidence, const char* filter,
                       unsigned jobs, pc_report** out) {
  return try_([&] {
    require(suite, "suite");
    require(out, "out");
    *out = nullptr;
    std::optional<std::string> f;
    if (filter != nullptr) f = filter;
    auto report = suite->impl.run(confidence, f, jobs == 0 ? 1 : jobs);
    *out = new pc_report{std::move(report)};
  });
}

void pc_report_destroy(pc_report* report) { delete report; }

pc_status pc_report_size(const pc_report* report, size_t* out) {
  return try_([&] {
    require(report, "report");
    require(out, "out");
    *out = report->impl.entries().size();
  });
}

pc_status pc_report_entry(const pc_report* report, size_t index, pc_entry* out) {
  return try_([&] {
    require(report, "report");
    require(out, "out");
    check_index(index, report->impl.entries().size());
    const auto& e = report->impl.entries()[index];
    out->name = e.name.c_str();
    out->outcome = to_c(e.outcome);
    out->counterexample = e.counterexample.c_str();
    out->diagnostic = e.diagnostic.c_str();
    out->samples = e.samples;
    out->ms = e.ms;
  });
}

pc_status pc_report_summary(const pc_report* report, pc_summary* out) {
  return try_([&] {
    require(report, "report");
    require(out, "out");
    const auto& s = report->impl.summary();
    *out = pc_summary{s.holds, s.falsified, s.logical_error, s.tactical_error};
  });
}

pc_status pc_report_exit_code(const pc_report* report, int* out) {
  return try_([&] {
    require(report, "report");
    require(out, "out");
    *out = report->impl.exit_code();
  });
}

pc_status pc_report_render(const pc_report* report, pc_format format, char** out) {
  return try_([&] {
    require(report, "report");
    require(out, "out");
    *out = nullptr;
    switch (format) {
      case PC_FORMAT_TEXT: *out = duplicate(report->impl.to_text()); break;
      case PC_FORMAT_JSON: *out = duplicate(report->impl.to_json()); break;
      default: throw StatusError(PC_INVALID_ARGUMENT, "unknown format");
    }
  });
}

pc_status pc_word_parse(const char* text, pc_word** out) {
  return try_([&] {
    require(text, "text");
    require(out, "out");
    *out = nullptr;
    *out = new pc_word{purecheck::patch::parse_word(text)};
  });
}

void pc_word_destroy(pc_word* word) { delete word; }

pc_status pc_word_size(const pc_word* word, size_t* out) {
  return try_([&] {
    require(word, "word");
    require(out, "out");
    *out = word->impl.literals.size();
  });
}

pc_status pc_word_render(const pc_word* word, char** out) {
  return try_([&] {
    require(word, "word");
    require(out, "out");
    *out = duplicate(purecheck::patch::render(word->impl));
  });
}

pc_status pc_word_apply(const pc_word* word, const char* input, int* defined, char** out) {
  return try_([&] {
    require(word, "word");
    require(input, "input");
    require(defined, "defined");
    require(out, "out");
    *out = nullptr;
    auto r = purecheck::patch::action(std::string(input), word->impl);
    *defined = r.has_value() ? 1 : 0;
    if (r) *out = duplicate(*r);
  });
}

pc_status pc_word_semantics(const pc_word* word, char** out) {
  return try_([&] {
    require(word, "word");
    require(out, "out");
    *out = duplicate(show(purecheck::automaton::semantics(word->impl)));
  });
}

pc_status pc_word_equiv(const pc_word* x, const pc_word* y, int* out) {
  return try_([&] {
    require(x, "x");
    require(y, "y");
    require(out, "out");
    *out = purecheck::automaton::word_equiv(x->impl, y->impl) ? 1 : 0;
  });
}

pc_status pc_brute_force_equiv(const pc_word* x, const pc_word* y, const char* alphabet,
                               int max_len, int* out) {
  return try_([&] {
    require(x, "x");
    require(y, "y");
    require(alphabet, "alphabet");
    require(out, "out");
    *out = purecheck::runner::brute_force_equiv(x->impl, y->impl, alphabet, max_len) ? 1
                                                                                        : 0;
  });
}

}  // extern "C"
