#include "purecheck/check.hpp"

#include <stdexcept>

namespace purecheck {

std::string_view to_string(Outcome outcome) {
  switch (outcome) {
    case Outcome::holds: return "holds";
    case Outcome::falsified: return "falsified";
    case Outcome::logical_error: return "logical_error";
    case Outcome::tactical_error: return "tactical_error";
  }
  return "unknown";
}

Verdict::Verdict(Outcome outcome, std::optional<std::string> counterexample,
                 std::string diagnostic, std::size_t samples)
    : outcome_(outcome),
      counterexample_(std::move(counterexample)),
      diagnostic_(std::move(diagnostic)),
      samples_(samples) {}

Verdict Verdict::holds(std::size_t samples) {
  return Verdict(Outcome::holds, std::nullopt, {}, samples);
}

Verdict Verdict::falsified(std::optional<std::string> counterexample,
                           std::size_t samples) {
  return Verdict(Outcome::falsified, std::move(counterexample), {}, samples);
}

Verdict Verdict::logical_error(std::string diagnostic, std::size_t samples) {
  return Verdict(Outcome::logical_error, std::nullopt, std::move(diagnostic),
                 samples);
}

Verdict Verdict::tactical_error(std::string diagnostic) {
  return Verdict(Outcome::tactical_error, std::nullopt, std::move(diagnostic),
                 0);
}

Verdict Verdict::with_samples(std::size_t samples) const {
  Verdict copy = *this;
  copy.samples_ = samples;
  return copy;
}

std::string describe(const Verdict& verdict) {
  std::string out(to_string(verdict.outcome()));
  if (verdict.counterexample()) out += " at " + *verdict.counterexample();
  if (!verdict.diagnostic().empty()) out += ": " + verdict.diagnostic();
  return out;
}

std::string describe_exception(std::exception_ptr error) {
  try {
    if (error) std::rethrow_exception(error);
  } catch (const std::exception& e) {
    return e.what();
  } catch (...) {
    return "unknown exception";
  }
  return "no exception";
}

Check::Check(Perform perform) : perform_(std::move(perform)) {
  if (!perform_) throw std::invalid_argument("Check requires a function");
}

Verdict Check::perform(int confidence) const {
  try {
    return perform_(confidence);
  } catch (...) {
    return Verdict::tactical_error(describe_exception(std::current_exception()));
  }
}

Check check_true() {
  return Check([](int) { return Verdict::holds(); });
}

Check conjoin(Check first, Check second) {
  return Check([first = std::move(first), second = std::move(second)](int n) {
    Verdict a = first.perform(n);
    if (!a.is_holds()) return a;
    Verdict b = second.perform(n);
    return b.with_samples(a.samples() + b.samples());
  });
}

Check conjoin_all(std::vector<Check> clauses) {
  return Check([clauses = std::move(clauses)](int n) {
    std::size_t used = 0;
    for (const auto& clause : clauses) {
      Verdict v = clause.perform(n);
      used += v.samples();
      if (!v.is_holds()) return v.with_samples(used);
    }
    return Verdict::holds(used);
  });
}

Check tactic(std::function<Check()> build) {
  return Check([build = std::move(build)](int n) {
    std::optional<Check> built;
    try {
      built.emplace(build());
    } catch (...) {
      return Verdict::tactical_error(
          "could not state the proposition: " +
          describe_exception(std::current_exception()));
    }
    return built->perform(n);
  });
}

Check Checkable<bool>::check(const Meta<bool>& p) {
  return Check([value = p.reflect()](int) {
    return value ? Verdict::holds(1) : Verdict::falsified(std::nullopt, 1);
  });
}

Check Checkable<Thunk>::check(const Meta<Thunk>& p) {
  return Check([thunk = p.reflect()](int) {
    try {
      return thunk() ? Verdict::holds(1) : Verdict::falsified(std::nullopt, 1);
    } catch (...) {
      return Verdict::logical_error(describe_exception(std::current_exception()),
                                    1);
    }
  });
}

Check check_bool(const Meta<bool>& p) { return check(p); }
Check check_lazy(const Meta<Thunk>& p) { return check(p); }
Check check_unit(const Meta<Unit>& p) { return check(p); }

}  // namespace purecheck
