#pragma once

// Named suites of checks, their execution at a confidence, and reports.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "purecheck/check.hpp"
#include "purecheck/patch.hpp"

namespace purecheck::runner {

/// A suite that cannot be built, such as one registering a name twice.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SuiteEntry {
  std::string name;
  Check check;
  std::vector<std::string> tags;
};

/// Counterexamples longer than this are cut in reports.
inline constexpr std::size_t counterexample_limit = 200;

struct EntryResult {
  std::string name;
  Outcome outcome = Outcome::holds;
  std::string counterexample;  ///< empty unless falsified
  std::string diagnostic;      ///< empty unless an error
  std::size_t samples = 0;
  double ms = 0;
};

struct Summary {
  std::size_t holds = 0;
  std::size_t falsified = 0;
  std::size_t logical_error = 0;
  std::size_t tactical_error = 0;

  std::size_t total() const { return holds + falsified + logical_error + tactical_error; }
};

class Report {
 public:
  explicit Report(std::vector<EntryResult> entries);

  const std::vector<EntryResult>& entries() const { return entries_; }
  const Summary& summary() const { return summary_; }

  /// 0 when everything holds, 1 when anything is falsified, otherwise 2.
  int exit_code() const;

  std::string to_json() const;
  std::string to_text() const;

 private:
  std::vector<EntryResult> entries_;
  Summary summary_;
};

class Suite {
 public:
  /// Throws ConfigError when the name is taken.
  void add(std::string name, Check check, std::vector<std::string> tags = {});
  void add(NamedCheck named, std::vector<std::string> tags = {});
  void add_all(std::vector<NamedCheck> named, const std::vector<std::string>& tags = {});

  const std::vector<SuiteEntry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }

  /// Runs every entry whose name contains `filter`. Entries may be evaluated
  /// on up to `jobs` threads; the report keeps registration order.
  /// Throws std::invalid_argument for a confidence below 1.
  Report run(int confidence, const std::optional<std::string>& filter = std::nullopt,
             unsigned jobs = 1) const;

 private:
  std::vector<SuiteEntry> entries_;
};

/// Laws and adequacy checks expected to hold.
Suite default_suite();
/// Known-false properties; every entry is expected to be falsified.
Suite control_suite();
/// Both of the above.
Suite full_suite();

/// Every string over `alphabet` of length at most `max_len`, shortest first.
std::vector<std::string> all_strings(const std::string& alphabet, int max_len);

/// Agreement of the two actions on every string of `all_strings`.
bool brute_force_equiv(const patch::Word<patch::Edit>& x,
                       const patch::Word<patch::Edit>& y, const std::string& alphabet,
                       int max_len);

}  // namespace purecheck::runner
