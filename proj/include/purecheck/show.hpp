#pragma once

// Stable text renderings used in counterexample reports. Domain types add
// their own `show` overloads in their namespace; the templates below find
// them by argument-dependent lookup.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "purecheck/meta.hpp"

namespace purecheck {

std::string show(bool value);
std::string show(int value);
std::string show(long value);
std::string show(long long value);
std::string show(unsigned value);
std::string show(unsigned long value);
std::string show(unsigned long long value);
std::string show(char value);
std::string show(const std::string& value);
std::string show(const char* value);
std::string show(Unit);

template <class A, class B>
std::string show(const std::pair<A, B>& value);
template <class... T>
std::string show(const std::tuple<T...>& value);
template <class T>
std::string show(const std::vector<T>& value);
template <class T>
std::string show(const std::optional<T>& value);

/// Escapes a character for use inside a quoted rendering; printable ASCII
/// other than the quote and backslash passes through.
std::string escape_char(char c, char quote);

/// Cuts a rendering to at most `limit` characters, marking the cut.
std::string truncate(std::string text, std::size_t limit = 200);

template <class A, class B>
std::string show(const std::pair<A, B>& value) {
  return "(" + show(value.first) + ", " + show(value.second) + ")";
}

template <class... T>
std::string show(const std::tuple<T...>& value) {
  std::string out = "(";
  std::apply(
      [&out](const auto&... xs) {
        std::size_t i = 0;
        ((out += (i++ == 0 ? "" : ", ") + show(xs)), ...);
      },
      value);
  return out + ")";
}

template <class T>
std::string show(const std::vector<T>& value) {
  std::string out = "[";
  for (std::size_t i = 0; i < value.size(); ++i) {
    if (i != 0) out += ", ";
    if constexpr (std::is_same_v<T, bool>) {
      out += show(static_cast<bool>(value[i]));
    } else {
      out += show(value[i]);
    }
  }
  return out + "]";
}

template <class T>
std::string show(const std::optional<T>& value) {
  return value ? "Just " + show(*value) : std::string("Nothing");
}

template <class T>
concept Showable = requires(const T& x) {
  { show(x) } -> std::convertible_to<std::string>;
};

/// Rendering for values that may lack a `show` overload.
template <class T>
std::string show_or_placeholder(const T& x) {
  if constexpr (Showable<T>) {
    return show(x);
  } else {
    return "<value>";
  }
}

}  // namespace purecheck
