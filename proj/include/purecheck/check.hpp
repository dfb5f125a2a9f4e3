#pragma once

// Heuristic checks and the shapes of checkable propositions.
//
// A Check maps a confidence (the sample budget) to a Verdict. Sampling can
// miss counterexamples but never invents them, so a larger confidence can only
// turn Holds into Falsified, not the other way round.

#include <cstddef>
#include <exception>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <variant>
#include <vector>

#include "purecheck/generator.hpp"
#include "purecheck/meta.hpp"
#include "purecheck/show.hpp"

namespace purecheck {

enum class Outcome { holds, falsified, logical_error, tactical_error };

std::string_view to_string(Outcome outcome);

/// Result of one evaluation.
///
///   holds           the property holds on every sample tried
///   falsified       a sample refutes it (marked false)
///   logical_error   evaluating the property failed (marked bottom)
///   tactical_error  the property could not even be stated (bottom)
class Verdict {
 public:
  static Verdict holds(std::size_t samples = 0);
  static Verdict falsified(std::optional<std::string> counterexample,
                           std::size_t samples = 0);
  static Verdict logical_error(std::string diagnostic, std::size_t samples = 0);
  static Verdict tactical_error(std::string diagnostic);

  Outcome outcome() const { return outcome_; }
  bool is_holds() const { return outcome_ == Outcome::holds; }
  bool is_falsified() const { return outcome_ == Outcome::falsified; }

  /// Rendering of the refuting sample; only set when falsified.
  const std::optional<std::string>& counterexample() const {
    return counterexample_;
  }
  /// Error text; only set for the two error outcomes.
  const std::string& diagnostic() const { return diagnostic_; }
  /// Number of samples evaluated.
  std::size_t samples() const { return samples_; }

  Verdict with_samples(std::size_t samples) const;

  bool operator==(const Verdict&) const = default;

 private:
  Verdict(Outcome outcome, std::optional<std::string> counterexample,
          std::string diagnostic, std::size_t samples);

  Outcome outcome_;
  std::optional<std::string> counterexample_;
  std::string diagnostic_;
  std::size_t samples_;
};

std::string describe(const Verdict& verdict);

class Check {
 public:
  using Perform = std::function<Verdict(int)>;

  explicit Check(Perform perform);

  /// Evaluates at the given confidence. Exceptions escaping the underlying
  /// function are reported as tactical errors.
  Verdict perform(int confidence) const;

 private:
  Perform perform_;
};

/// The unit of conjunction: holds at every confidence.
Check check_true();

/// Both clauses at the same confidence, left to right; the first clause that
/// does not hold decides the verdict. Sample counts add up.
Check conjoin(Check first, Check second);
Check conjoin_all(std::vector<Check> clauses);

inline Check operator&&(Check a, Check b) {
  return conjoin(std::move(a), std::move(b));
}

/// Defers building a check; a failure while building is a tactical error.
Check tactic(std::function<Check()> build);

std::string describe_exception(std::exception_ptr error);

struct NamedCheck {
  std::string name;
  Check check;
};

// ----------------------------------------------------------------------------
// Bounded quantification

template <class A, class B>
struct For {
  Generator<A> bound;
  Fn<A, B> body;
};

/// Two bounded quantifiers where the inner bound does not depend on the outer
/// variable.
template <class A, class B, class C>
struct NestedFor {
  Generator<A> outer_bound;
  Generator<B> inner_bound;
  std::function<C(const A&, const B&)> body;
};

template <class A, class B, class C>
For<std::pair<A, B>, C> qmerge(const NestedFor<A, B, C>& q) {
  return For<std::pair<A, B>, C>{
      gpair(q.outer_bound, q.inner_bound),
      [body = q.body](const std::pair<A, B>& xy) {
        return body(xy.first, xy.second);
      }};
}

/// Universal check of `p` over the samples of `g`. The first failing sample,
/// in enumeration order, is reported; a throwing predicate is a logical error
/// and a throwing generator a tactical one.
template <class A>
Check check_with(Generator<A> g, Meta<Predicate<A>> p) {
  return Check([g = std::move(g), p = std::move(p).reflect()](int n) {
    std::vector<A> samples;
    try {
      samples = g.generate(n);
    } catch (...) {
      return Verdict::tactical_error("generator failed: " +
                                     describe_exception(std::current_exception()));
    }
    std::size_t used = 0;
    for (const auto& x : samples) {
      ++used;
      bool ok = false;
      try {
        ok = p(x);
      } catch (...) {
        return Verdict::logical_error(
            "predicate failed on " + show_or_placeholder(x) + ": " +
                describe_exception(std::current_exception()),
            used);
      }
      if (!ok) return Verdict::falsified(show_or_placeholder(x), used);
    }
    return Verdict::holds(used);
  });
}

// ----------------------------------------------------------------------------
// Checkable propositions

/// Customization point: `static Check check(const Meta<T>&)`.
template <class T>
struct Checkable;

template <class T>
concept CheckableProposition = requires(const Meta<T>& p) {
  { Checkable<T>::check(p) } -> std::same_as<Check>;
};

template <class T>
  requires CheckableProposition<T>
Check check(const Meta<T>& p) {
  return Checkable<T>::check(p);
}

/// A proposition whose evaluation is deferred until checking time.
using Thunk = std::function<bool()>;

template <>
struct Checkable<bool> {
  static Check check(const Meta<bool>& p);
};

template <>
struct Checkable<Thunk> {
  static Check check(const Meta<Thunk>& p);
};

template <>
struct Checkable<Unit> {
  static Check check(const Meta<Unit>&) { return check_true(); }
};

template <class P, class Q>
  requires CheckableProposition<P> && CheckableProposition<Q>
struct Checkable<std::pair<P, Q>> {
  static Check check(const Meta<std::pair<P, Q>>& p) {
    return conjoin(purecheck::check(Meta<P>(p.reflect().first)),
                   purecheck::check(Meta<Q>(p.reflect().second)));
  }
};

template <class P>
  requires CheckableProposition<P>
struct Checkable<std::vector<P>> {
  static Check check(const Meta<std::vector<P>>& ps) {
    std::vector<Check> clauses;
    clauses.reserve(ps.reflect().size());
    for (const auto& p : ps.reflect()) {
      clauses.push_back(purecheck::check(Meta<P>(static_cast<P>(p))));
    }
    return conjoin_all(std::move(clauses));
  }
};

template <class A>
  requires HasDefaultGenerator<A>
struct Checkable<Predicate<A>> {
  static Check check(const Meta<Predicate<A>>& p) {
    return check_with(default_generator<A>(), p);
  }
};

/// Curried two-argument propositions are sampled together over pairs.
template <class A, class B>
  requires HasDefaultGenerator<A> && HasDefaultGenerator<B>
struct Checkable<Fn<A, Predicate<B>>> {
  static Check check(const Meta<Fn<A, Predicate<B>>>& p) {
    return check_with(default_generator<std::pair<A, B>>(), uncurry(p));
  }
};

template <class A>
struct Checkable<For<A, bool>> {
  static Check check(const Meta<For<A, bool>>& q) {
    return check_with(q.reflect().bound, Meta<Predicate<A>>(q.reflect().body));
  }
};

template <class A, class B>
struct Checkable<NestedFor<A, B, bool>> {
  static Check check(const Meta<NestedFor<A, B, bool>>& q) {
    return purecheck::check(Meta(qmerge(q.reflect())));
  }
};

// Named entry points for the individual instances.

Check check_bool(const Meta<bool>& p);
Check check_lazy(const Meta<Thunk>& p);
Check check_unit(const Meta<Unit>& p);

template <class P, class Q>
Check check_pair(const Meta<std::pair<P, Q>>& p) {
  return check(p);
}

template <class P>
Check check_list(const Meta<std::vector<P>>& ps) {
  return check(ps);
}

template <class A>
Check check_predicate(const Meta<Predicate<A>>& p) {
  return check(p);
}

template <class A>
Check check_for(const Meta<For<A, bool>>& q) {
  return check(q);
}

}  // namespace purecheck
