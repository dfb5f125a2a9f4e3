#pragma once

// Constructive existentials.
//
// Sampling cannot approximate an existential monotonically, so existentials
// are decided by construction instead: a value encoding the predicate offers
// a `witness(p)` (found by argument-dependent lookup) that yields a candidate
// or nothing. These quantifiers are plain operational code; they carry no
// confidence parameter and are not marked.

#include <concepts>
#include <optional>
#include <type_traits>
#include <utility>

namespace purecheck {

template <class T>
struct is_optional : std::false_type {};
template <class T>
struct is_optional<std::optional<T>> : std::true_type {};

template <class P>
concept WitnessSource = requires(const P& p) {
  witness(p);
  requires is_optional<std::decay_t<decltype(witness(p))>>::value;
};

template <WitnessSource P>
using witness_type =
    typename std::decay_t<decltype(witness(std::declval<const P&>()))>::value_type;

/// The witness, if any, satisfies `q`; no witness means false.
template <WitnessSource P, class Q>
  requires std::predicate<const Q&, const witness_type<P>&>
bool exists(const P& p, const Q& q) {
  auto x = witness(p);
  return x ? static_cast<bool>(q(*x)) : false;
}

template <WitnessSource P>
bool exists_some(const P& p) {
  return witness(p).has_value();
}

/// Like `exists`, but the absence of a witness counts as true.
template <WitnessSource P, class Q>
  requires std::predicate<const Q&, const witness_type<P>&>
bool exists_or_vacuous(const P& p, const Q& q) {
  auto x = witness(p);
  return x ? static_cast<bool>(q(*x)) : true;
}

/// A witness source holding a fixed answer.
template <class B>
struct Given {
  std::optional<B> value;
};

template <class B>
std::optional<B> witness(const Given<B>& g) {
  return g.value;
}

}  // namespace purecheck
