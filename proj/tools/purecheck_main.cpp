// purecheck: runs the shipped check suites and the word-problem oracle.
//
// Exit codes: 0 all checks hold (or the oracle agrees), 1 a check is
// falsified (or the oracle disagrees), 2 an evaluation error and nothing
// falsified, 3 bad usage, unreadable input or an invalid configuration.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "purecheck/purecheck.h"

namespace {

constexpr int exit_usage = 3;
constexpr int default_confidence = 100;

struct Failure {
  std::string message;
};

void ok(pc_status s, const std::string& context) {
  if (s != PC_OK) {
    throw Failure{context + ": " + pc_status_string(s) + ": " + pc_last_error()};
  }
}

struct SuiteDeleter {
  void operator()(pc_suite* s) const { pc_suite_destroy(s); }
};
struct ReportDeleter {
  void operator()(pc_report* r) const { pc_report_destroy(r); }
};
struct WordDeleter {
  void operator()(pc_word* w) const { pc_word_destroy(w); }
};
struct StringDeleter {
  void operator()(char* s) const { pc_string_free(s); }
};
using SuitePtr = std::unique_ptr<pc_suite, SuiteDeleter>;
using ReportPtr = std::unique_ptr<pc_report, ReportDeleter>;
using WordPtr = std::unique_ptr<pc_word, WordDeleter>;
using StringPtr = std::unique_ptr<char, StringDeleter>;

const std::map<std::string, pc_suite_kind> suite_kinds{
    {"default", PC_SUITE_DEFAULT}, {"controls", PC_SUITE_CONTROLS}, {"all", PC_SUITE_ALL}};

SuitePtr make_suite(const std::string& kind) {
  pc_suite* s = nullptr;
  ok(pc_suite_create(suite_kinds.at(kind), &s), "building suite");
  return SuitePtr(s);
}

int confidence_from_env() {
  const char* env = std::getenv("PURECHECK_CONFIDENCE");
  if (env == nullptr || *env == '\0') return default_confidence;
  try {
    std::size_t used = 0;
    int n = std::stoi(env, &used);
    if (env[used] != '\0') throw std::invalid_argument(env);
    return n;
  } catch (const std::exception&) {
    throw Failure{std::string("PURECHECK_CONFIDENCE is not an integer: ") + env};
  }
}

WordPtr read_word(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure{"cannot read " + path};
  std::stringstream buf;
  buf << in.rdbuf();
  pc_word* w = nullptr;
  ok(pc_word_parse(buf.str().c_str(), &w), path);
  return WordPtr(w);
}

std::string take(char* s) { return StringPtr(s).get(); }

struct RunOptions {
  std::optional<int> confidence;
  std::optional<std::string> filter;
  std::string format = "text";
  std::string suite = "default";
  unsigned jobs = 1;
};

int run(const RunOptions& o) {
  int confidence = o.confidence ? *o.confidence : confidence_from_env();
  SuitePtr suite = make_suite(o.suite);
  pc_report* raw = nullptr;
  ok(pc_suite_run(suite.get(), confidence, o.filter ? o.filter->c_str() : nullptr, o.jobs,
                  &raw),
     "running suite");
  ReportPtr report(raw);
  char* text = nullptr;
  ok(pc_report_render(report.get(), o.format == "json" ? PC_FORMAT_JSON : PC_FORMAT_TEXT,
                      &text),
     "rendering report");
  std::cout << take(text);
  int code = 0;
  ok(pc_report_exit_code(report.get(), &code), "reading report");
  return code;
}

int list(const std::string& kind, bool tags) {
  SuitePtr suite = make_suite(kind);
  std::size_t n = 0;
  ok(pc_suite_size(suite.get(), &n), "listing");
  for (std::size_t i = 0; i < n; ++i) {
    const char* name = nullptr;
    ok(pc_suite_entry_name(suite.get(), i, &name), "listing");
    std::cout << name;
    if (tags) {
      const char* t = nullptr;
      ok(pc_suite_entry_tags(suite.get(), i, &t), "listing");
      std::cout << "  [" << t << "]";
    }
    std::cout << "\n";
  }
  return 0;
}

int oracle(int max_len, const std::string& alphabet, const std::string& first,
           const std::string& second) {
  WordPtr x = read_word(first);
  WordPtr y = read_word(second);
  char* s = nullptr;
  for (auto [label, w] : {std::pair{"1", x.get()}, std::pair{"2", y.get()}}) {
    ok(pc_word_render(w, &s), "rendering");
    std::cout << "word " << label << ":      " << take(s) << "\n";
    ok(pc_word_semantics(w, &s), "semantics");
    std::cout << "automaton " << label << ": " << take(s) << "\n";
  }
  int by_automata = 0;
  int by_search = 0;
  ok(pc_word_equiv(x.get(), y.get(), &by_automata), "word_equiv");
  ok(pc_brute_force_equiv(x.get(), y.get(), alphabet.c_str(), max_len, &by_search),
     "brute force");
  std::cout << "word_equiv:  " << (by_automata ? "true" : "false") << "\n"
            << "brute force: " << (by_search ? "true" : "false") << " (alphabet \""
            << alphabet << "\", length <= " << max_len << ")\n"
            << (by_automata == by_search ? "agree" : "DISAGREE") << "\n";
  return by_automata == by_search ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Property checks for patch algebras and their automaton model"};
  app.require_subcommand(1);

  RunOptions run_opts;
  auto* run_cmd = app.add_subcommand("run", "Run a check suite");
  run_cmd->add_option("--confidence", run_opts.confidence,
                      "Sample budget per check (default: $PURECHECK_CONFIDENCE or 100)");
  run_cmd->add_option("--filter", run_opts.filter, "Only checks whose name contains this");
  run_cmd->add_option("--format", run_opts.format, "Report format")
      ->check(CLI::IsMember({"text", "json"}));
  run_cmd->add_option("--suite", run_opts.suite, "Which suite to run")
      ->check(CLI::IsMember({"default", "controls", "all"}));
  run_cmd->add_option("--jobs", run_opts.jobs, "Checks evaluated in parallel")
      ->check(CLI::Range(1u, 256u));

  std::string list_suite = "default";
  bool list_tags = false;
  auto* list_cmd = app.add_subcommand("list", "List registered checks");
  list_cmd->add_flag("--tags", list_tags, "Show tags");
  list_cmd->add_option("--suite", list_suite, "Which suite to list")
      ->check(CLI::IsMember({"default", "controls", "all"}));

  int max_len = 6;
  std::string alphabet = "ab";
  std::string first;
  std::string second;
  auto* oracle_cmd =
      app.add_subcommand("oracle", "Compare two edit words by automata and brute force");
  oracle_cmd->add_option("--max-len", max_len, "Longest input string tried")
      ->check(CLI::NonNegativeNumber);
  oracle_cmd->add_option("--alphabet", alphabet, "Input characters tried");
  oracle_cmd->add_option("wordfile1", first, "First word, one edit per line")->required();
  oracle_cmd->add_option("wordfile2", second, "Second word")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : exit_usage;
  }

  try {
    if (*run_cmd) return run(run_opts);
    if (*list_cmd) return list(list_suite, list_tags);
    if (*oracle_cmd) return oracle(max_len, alphabet, first, second);
  } catch (const Failure& f) {
    std::cerr << "purecheck: " << f.message << "\n";
    return exit_usage;
  }
  return exit_usage;
}
