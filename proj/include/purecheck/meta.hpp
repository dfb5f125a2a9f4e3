#pragma once

// Meta-level marking.
//
// A value wrapped in Meta is declared meta-logical: it is something to be
// checked (or a building block for something to be checked), never an input to
// ordinary computation. Code falls into four strata by how it uses the marker:
//
//   operational   no Meta anywhere in the signature;
//   assertive     Meta at the root of the type (Meta<bool>, Meta<Fn<A>>, ...),
//                 each definition is a checking obligation;
//   tactical      Meta in non-root position (A -> Meta<B>, Meta<A> -> Meta<B>),
//                 builds or transforms assertions, no obligation of its own;
//   transcendent  generic over a wrapper that admits Meta as an instance.
//
// The last stratum is a documentation discipline only; nothing here encodes it.

#include <compare>
#include <functional>
#include <type_traits>
#include <utility>

namespace purecheck {

/// The single value of the empty proposition.
struct Unit {
  auto operator<=>(const Unit&) const = default;
};

/// Unary function over a const reference; the shape every quantified
/// proposition takes once uncurried.
template <class A, class R = bool>
using Fn = std::function<R(const A&)>;

template <class A>
using Predicate = Fn<A, bool>;

template <class T>
class Meta {
 public:
  using value_type = T;

  explicit Meta(T value) : value_(std::move(value)) {}

  const T& reflect() const& { return value_; }
  T&& reflect() && { return std::move(value_); }

 private:
  T value_;
};

template <class T>
Meta(T) -> Meta<T>;

template <class T>
Meta<std::decay_t<T>> mark(T&& value) {
  return Meta<std::decay_t<T>>(std::forward<T>(value));
}

template <class T>
struct is_meta : std::false_type {};
template <class T>
struct is_meta<Meta<T>> : std::true_type {};

/// Explicit meta-logical universal quantifier: turns a pointwise tactic into a
/// single assertion over all points.
template <class A, class F>
  requires is_meta<std::invoke_result_t<const F&, const A&>>::value
auto foreach(F f) {
  using B = typename std::invoke_result_t<const F&, const A&>::value_type;
  return Meta<Fn<A, B>>(
      Fn<A, B>([f = std::move(f)](const A& x) { return f(x).reflect(); }));
}

/// Uncurries a marked two-argument proposition into one over pairs, the form
/// the quantifier instances sample.
template <class A, class B>
Meta<Predicate<std::pair<A, B>>> uncurry(const Meta<Fn<A, Predicate<B>>>& p) {
  return Meta<Predicate<std::pair<A, B>>>(
      [f = p.reflect()](const std::pair<A, B>& xy) {
        return f(xy.first)(xy.second);
      });
}

}  // namespace purecheck
