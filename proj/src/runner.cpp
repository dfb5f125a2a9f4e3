#include "purecheck/runner.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <thread>

#include <json.hpp>

#include "purecheck/show.hpp"

namespace purecheck::runner {

Report::Report(std::vector<EntryResult> entries) : entries_(std::move(entries)) {
  for (const auto& e : entries_) {
    switch (e.outcome) {
      case Outcome::holds: ++summary_.holds; break;
      case Outcome::falsified: ++summary_.falsified; break;
      case Outcome::logical_error: ++summary_.logical_error; break;
      case Outcome::tactical_error: ++summary_.tactical_error; break;
    }
  }
}

int Report::exit_code() const {
  if (summary_.falsified > 0) return 1;
  if (summary_.logical_error + summary_.tactical_error > 0) return 2;
  return 0;
}

std::string Report::to_json() const {
  nlohmann::ordered_json entries = nlohmann::ordered_json::array();
  for (const auto& e : entries_) {
    nlohmann::ordered_json j;
    j["name"] = e.name;
    j["verdict"] = std::string(to_string(e.outcome));
    j["counterexample"] = e.counterexample;
    j["samples"] = e.samples;
    j["ms"] = e.ms;
    if (!e.diagnostic.empty()) j["diagnostic"] = e.diagnostic;
    entries.push_back(std::move(j));
  }
  nlohmann::ordered_json out;
  out["entries"] = std::move(entries);
  out["summary"] = {{"holds", summary_.holds},
                    {"falsified", summary_.falsified},
                    {"logical_error", summary_.logical_error},
                    {"tactical_error", summary_.tactical_error}};
  // Counterexamples may hold arbitrary bytes.
  return out.dump(2, ' ', false, nlohmann::ordered_json::error_handler_t::replace) + "\n";
}

std::string Report::to_text() const {
  std::string out;
  for (const auto& e : entries_) {
    char stats[64];
    std::snprintf(stats, sizeof stats, "  (%zu samples, %.1f ms)", e.samples, e.ms);
    std::string line(to_string(e.outcome));
    line.resize(std::max<std::size_t>(line.size() + 1, 16), ' ');
    line += e.name;
    if (!e.counterexample.empty()) line += "  at " + e.counterexample;
    if (!e.diagnostic.empty()) line += "  " + e.diagnostic;
    out += line + stats + "\n";
  }
  out += "summary: " + std::to_string(summary_.holds) + " holds, " +
         std::to_string(summary_.falsified) + " falsified, " +
         std::to_string(summary_.logical_error) + " logical_error, " +
         std::to_string(summary_.tactical_error) + " tactical_error\n";
  return out;
}

void Suite::add(std::string name, Check check, std::vector<std::string> tags) {
  for (const auto& e : entries_) {
    if (e.name == name) throw ConfigError("duplicate check name: " + name);
  }
  entries_.push_back(SuiteEntry{std::move(name), std::move(check), std::move(tags)});
}

void Suite::add(NamedCheck named, std::vector<std::string> tags) {
  add(std::move(named.name), std::move(named.check), std::move(tags));
}

void Suite::add_all(std::vector<NamedCheck> named, const std::vector<std::string>& tags) {
  for (auto& n : named) add(std::move(n), tags);
}

namespace {

EntryResult evaluate(const SuiteEntry& entry, int confidence) {
  auto start = std::chrono::steady_clock::now();
  Verdict v = entry.check.perform(confidence);
  auto stop = std::chrono::steady_clock::now();

  EntryResult r;
  r.name = entry.name;
  r.outcome = v.outcome();
  if (v.is_falsified()) {
    r.counterexample = truncate(v.counterexample().value_or("<no sample>"),
                                counterexample_limit);
  }
  r.diagnostic = v.diagnostic();
  r.samples = v.samples();
  r.ms = std::chrono::duration<double, std::milli>(stop - start).count();
  return r;
}

}  // namespace

Report Suite::run(int confidence, const std::optional<std::string>& filter,
                  unsigned jobs) const {
  if (confidence < 1) throw std::invalid_argument("confidence must be at least 1");

  std::vector<const SuiteEntry*> selected;
  for (const auto& e : entries_) {
    if (!filter || e.name.find(*filter) != std::string::npos) selected.push_back(&e);
  }

  std::vector<EntryResult> results(selected.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < selected.size();) {
      results[i] = evaluate(*selected[i], confidence);
    }
  };
  unsigned threads = std::clamp<unsigned>(jobs, 1, std::max<std::size_t>(selected.size(), 1));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  return Report(std::move(results));
}

std::vector<std::string> all_strings(const std::string& alphabet, int max_len) {
  std::vector<std::string> out{""};
  std::size_t level_start = 0;
  for (int len = 1; len <= max_len; ++len) {
    std::size_t level_end = out.size();
    for (std::size_t i = level_start; i < level_end; ++i) {
      for (char c : alphabet) out.push_back(out[i] + c);
    }
    level_start = level_end;
  }
  return out;
}

bool brute_force_equiv(const patch::Word<patch::Edit>& x,
                       const patch::Word<patch::Edit>& y, const std::string& alphabet,
                       int max_len) {
  if (max_len < 0) throw std::invalid_argument("max_len must be non-negative");
  if (alphabet.empty()) throw std::invalid_argument("alphabet must be nonempty");
  for (const auto& s : all_strings(alphabet, max_len)) {
    if (patch::action(s, x) != patch::action(s, y)) return false;
  }
  return true;
}

}  // namespace purecheck::runner
