#pragma once

// Stable type names used to build registry keys.

#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "purecheck/meta.hpp"

namespace purecheck {

/// Customization point: `static std::string name();`.
template <class T>
struct TypeName;

template <>
struct TypeName<bool> {
  static std::string name() { return "bool"; }
};
template <>
struct TypeName<int> {
  static std::string name() { return "int"; }
};
template <>
struct TypeName<char> {
  static std::string name() { return "char"; }
};
template <>
struct TypeName<std::string> {
  static std::string name() { return "string"; }
};
template <>
struct TypeName<Unit> {
  static std::string name() { return "unit"; }
};
template <class T>
struct TypeName<std::vector<T>> {
  static std::string name() { return "list<" + TypeName<T>::name() + ">"; }
};
template <class A, class B>
struct TypeName<std::pair<A, B>> {
  static std::string name() {
    return "(" + TypeName<A>::name() + "," + TypeName<B>::name() + ")";
  }
};

template <class T>
std::string type_name() {
  return TypeName<T>::name();
}

}  // namespace purecheck
