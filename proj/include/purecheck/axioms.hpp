#pragma once

// Nominal axioms: every law is a value of its own type, mapped by
// `axiomatic(a)` to the marked proposition it stands for and by `key(a)` to a
// registry name. Structure operations are fixed when the axiom type is formed;
// equality and generators are only demanded when the proposition is checked.

#include <concepts>
#include <cstdlib>
#include <functional>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "purecheck/check.hpp"
#include "purecheck/meta.hpp"
#include "purecheck/patch.hpp"
#include "purecheck/type_name.hpp"

namespace purecheck::axioms {

/// A monoid presented as a type: `empty()`, `combine(a, b)` and a `name()`
/// used in registry keys.
template <class M>
concept MonoidStructure = requires(const typename M::value_type& a,
                                   const typename M::value_type& b) {
  { M::empty() } -> std::convertible_to<typename M::value_type>;
  { M::combine(a, b) } -> std::convertible_to<typename M::value_type>;
  { M::name() } -> std::convertible_to<std::string>;
};

namespace monoids {

template <class T>
struct Concat;

template <>
struct Concat<std::string> {
  using value_type = std::string;
  static std::string empty() { return {}; }
  static std::string combine(const std::string& a, const std::string& b) { return a + b; }
  static std::string name() { return "string"; }
};

template <class U>
struct Concat<std::vector<U>> {
  using value_type = std::vector<U>;
  static value_type empty() { return {}; }
  static value_type combine(const value_type& a, const value_type& b) {
    value_type out = a;
    out.insert(out.end(), b.begin(), b.end());
    return out;
  }
  static std::string name() { return type_name<value_type>(); }
};

struct Trivial {
  using value_type = Unit;
  static Unit empty() { return {}; }
  static Unit combine(const Unit&, const Unit&) { return {}; }
  static std::string name() { return "unit"; }
};

template <class T>
struct Sum {
  using value_type = T;
  static T empty() { return T{}; }
  static T combine(const T& a, const T& b) { return a + b; }
  static std::string name() { return type_name<T>() + ":sum"; }
};

/// Not a monoid: subtraction is not associative. Kept as a negative control.
template <class T>
struct Difference {
  using value_type = T;
  static T empty() { return T{}; }
  static T combine(const T& a, const T& b) { return a - b; }
  static std::string name() { return type_name<T>() + ":sub"; }
};

}  // namespace monoids

// ----------------------------------------------------------------------------
// Monoid laws

template <MonoidStructure M>
struct MonoidLeftUnit {};
template <MonoidStructure M>
struct MonoidRightUnit {};
template <MonoidStructure M>
struct MonoidAssoc {};
/// Not part of the monoid theory; holds only for commutative monoids.
template <MonoidStructure M>
struct MonoidCommute {};

template <MonoidStructure M>
Meta<Predicate<typename M::value_type>> axiomatic(MonoidLeftUnit<M>) {
  using T = typename M::value_type;
  return Meta<Predicate<T>>([](const T& x) { return M::combine(M::empty(), x) == x; });
}

template <MonoidStructure M>
Meta<Predicate<typename M::value_type>> axiomatic(MonoidRightUnit<M>) {
  using T = typename M::value_type;
  return Meta<Predicate<T>>([](const T& x) { return M::combine(x, M::empty()) == x; });
}

template <MonoidStructure M>
Meta<Predicate<std::tuple<typename M::value_type, typename M::value_type,
                          typename M::value_type>>>
axiomatic(MonoidAssoc<M>) {
  using T = typename M::value_type;
  return Meta<Predicate<std::tuple<T, T, T>>>([](const std::tuple<T, T, T>& xyz) {
    const auto& [x, y, z] = xyz;
    return M::combine(M::combine(x, y), z) == M::combine(x, M::combine(y, z));
  });
}

template <MonoidStructure M>
Meta<Predicate<std::pair<typename M::value_type, typename M::value_type>>>
axiomatic(MonoidCommute<M>) {
  using T = typename M::value_type;
  return Meta<Predicate<std::pair<T, T>>>([](const std::pair<T, T>& xy) {
    return M::combine(xy.first, xy.second) == M::combine(xy.second, xy.first);
  });
}

template <MonoidStructure M>
std::string key(MonoidLeftUnit<M>) {
  return "monoid.left_unit<" + std::string(M::name()) + ">";
}
template <MonoidStructure M>
std::string key(MonoidRightUnit<M>) {
  return "monoid.right_unit<" + std::string(M::name()) + ">";
}
template <MonoidStructure M>
std::string key(MonoidAssoc<M>) {
  return "monoid.assoc<" + std::string(M::name()) + ">";
}
template <MonoidStructure M>
std::string key(MonoidCommute<M>) {
  return "monoid.commute<" + std::string(M::name()) + ">";
}

/// An axiom: a key and a checkable proposition.
template <class A>
concept Axiom = requires(const A& a) {
  { key(a) } -> std::convertible_to<std::string>;
  { purecheck::check(axiomatic(a)) } -> std::same_as<Check>;
};

template <Axiom A>
NamedCheck law(const A& a) {
  return NamedCheck{key(a), tactic([a] { return purecheck::check(axiomatic(a)); })};
}

/// The three monoid laws. The bundle is fixed; instances cannot replace a law.
template <MonoidStructure M>
std::vector<NamedCheck> monoid_laws() {
  return {law(MonoidLeftUnit<M>{}), law(MonoidRightUnit<M>{}), law(MonoidAssoc<M>{})};
}

// ----------------------------------------------------------------------------
// Right monoid actions

template <class A, class S>
using RAction = std::function<S(const S&, const A&)>;

/// s <| mempty == s
template <MonoidStructure M, class S>
struct RActionUnit {
  RAction<typename M::value_type, S> act;
  std::string label;
};

/// s <| (y <> z) == (s <| y) <| z
template <MonoidStructure M, class S>
struct RActionCompose {
  RAction<typename M::value_type, S> act;
  std::string label;
};

template <MonoidStructure M, class S>
Meta<Predicate<S>> axiomatic(const RActionUnit<M, S>& a) {
  return Meta<Predicate<S>>(
      [act = a.act](const S& s) { return act(s, M::empty()) == s; });
}

template <MonoidStructure M, class S>
Meta<Predicate<std::tuple<S, typename M::value_type, typename M::value_type>>>
axiomatic(const RActionCompose<M, S>& a) {
  using T = typename M::value_type;
  return Meta<Predicate<std::tuple<S, T, T>>>(
      [act = a.act](const std::tuple<S, T, T>& syz) {
        const auto& [s, y, z] = syz;
        return act(s, M::combine(y, z)) == act(act(s, y), z);
      });
}

template <MonoidStructure M, class S>
std::string key(const RActionUnit<M, S>& a) {
  return "raction.unit<" + type_name<S>() + "," + a.label + ">";
}
template <MonoidStructure M, class S>
std::string key(const RActionCompose<M, S>& a) {
  return "raction.compose<" + type_name<S>() + "," + a.label + ">";
}

/// The action of a monoid on itself by right multiplication.
template <MonoidStructure M>
RAction<typename M::value_type, typename M::value_type> self_action() {
  using T = typename M::value_type;
  return [](const T& s, const T& a) { return M::combine(s, a); };
}

// ----------------------------------------------------------------------------
// Patches

/// Where a patch applies, undoing it from the result restores the original.
template <class S, class P>
struct PatchInvert {};

template <class S, class P>
Meta<Predicate<std::pair<S, P>>> axiomatic(PatchInvert<S, P>) {
  return Meta<Predicate<std::pair<S, P>>>([](const std::pair<S, P>& sp) {
    const auto& [s, p] = sp;
    auto applied = action(s, p);
    if (!applied) return true;
    return undo(*applied, p) == std::optional<S>(s);
  });
}

template <class S, class P>
std::string key(PatchInvert<S, P>) {
  return "patch.invert<" + type_name<S>() + "," + type_name<P>() + ">";
}

// ----------------------------------------------------------------------------
// Restricted tactics

/// Opt-in membership for `NonNeg`; never inferred.
template <class A>
inline constexpr bool nonneg_eligible = false;

/// An integer law restated for |k|. Only formed over eligible axioms.
template <class A>
  requires nonneg_eligible<A>
struct NonNeg {
  A base;
};

// abs is idempotent, so a lifted axiom is itself eligible.
template <class A>
inline constexpr bool nonneg_eligible<NonNeg<A>> = nonneg_eligible<A>;

inline int checked_abs(int k) {
  if (k == std::numeric_limits<int>::min()) {
    throw std::overflow_error("abs of the least int is not representable");
  }
  return std::abs(k);
}

template <class A>
  requires nonneg_eligible<A>
Meta<Predicate<int>> axiomatic(const NonNeg<A>& a) {
  Predicate<int> base = axiomatic(a.base).reflect();
  return Meta<Predicate<int>>(
      [base = std::move(base)](const int& k) { return base(checked_abs(k)); });
}

template <class A>
  requires nonneg_eligible<A>
std::string key(const NonNeg<A>& a) {
  return "nonneg." + key(a.base);
}

template <class A>
  requires nonneg_eligible<A>
Meta<Predicate<int>> nonneg_lift(const A& a) {
  return axiomatic(NonNeg<A>{a});
}

/// repeat(k, 'a') has length k; true for k >= 0 only.
struct RepeatLength {};

inline std::string repeat(int k, char c) {
  return k > 0 ? std::string(static_cast<std::size_t>(k), c) : std::string();
}

inline Meta<Predicate<int>> axiomatic(RepeatLength) {
  return Meta<Predicate<int>>([](const int& k) {
    return static_cast<long long>(repeat(k, 'a').size()) == k;
  });
}

inline std::string key(RepeatLength) { return "repeat_length"; }

template <>
inline constexpr bool nonneg_eligible<RepeatLength> = true;

}  // namespace purecheck::axioms
