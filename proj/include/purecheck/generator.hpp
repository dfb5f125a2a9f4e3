#pragma once

// Deterministic sample enumeration.
//
// A Generator maps a size budget n to at most n distinct samples. Every
// generator in this header is prefix-monotone: generate(m) is a prefix of
// generate(n) whenever m <= n. Checks built on prefix-monotone generators can
// only ever gain counterexamples as the confidence grows.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <memory>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "purecheck/meta.hpp"

namespace purecheck {

template <class T>
class Generator {
 public:
  using value_type = T;
  using Enumerate = std::function<std::vector<T>(std::size_t)>;

  explicit Generator(Enumerate enumerate)
      : enumerate_(std::make_shared<const Enumerate>(std::move(enumerate))) {}

  /// At most `n` samples; the empty list for n <= 0.
  std::vector<T> generate(long long n) const {
    if (n <= 0) return {};
    auto size = static_cast<std::size_t>(n);
    std::vector<T> out = (*enumerate_)(size);
    if (out.size() > size) out.erase(out.begin() + static_cast<std::ptrdiff_t>(size), out.end());
    return out;
  }

 private:
  std::shared_ptr<const Enumerate> enumerate_;
};

template <class T>
std::vector<T> generate(const Generator<T>& g, long long n) {
  return g.generate(n);
}

// ----------------------------------------------------------------------------
// Primitive enumerations

/// false, true.
Generator<bool> gbool();
/// 0, 1, -1, 2, -2, ...
Generator<int> gint();
/// 0, 1, 2, ...
Generator<int> gnatural();
/// 'a'..'z', '0'..'9', then the remaining printable ASCII in code order.
Generator<char> gchar();
/// Length-lexicographic strings over `alphabet`: "", "a", "b", ..., "aa", ...
Generator<std::string> gstring(std::string alphabet = "abc");

/// The i-th element of the zig-zag integer enumeration.
int zigzag(std::size_t index);
/// The full character enumeration order (95 printable characters).
const std::string& char_order();

template <class T>
Generator<T> gempty() {
  return Generator<T>([](std::size_t) { return std::vector<T>{}; });
}

/// The first n entries of a fixed, duplicate-free list.
template <class T>
Generator<T> gelements(std::vector<T> values) {
  return Generator<T>([values = std::move(values)](std::size_t n) {
    auto count = std::min(n, values.size());
    return std::vector<T>(values.begin(), values.begin() + count);
  });
}

/// At most `limit` elements of `g`.
template <class T>
Generator<T> gtake(std::size_t limit, Generator<T> g) {
  return Generator<T>([limit, g = std::move(g)](std::size_t n) {
    return g.generate(static_cast<long long>(std::min(n, limit)));
  });
}

// ----------------------------------------------------------------------------
// Combinators

/// Elementwise image. `f` has to be injective on the enumerated range or the
/// result loses distinctness.
template <class F, class A>
auto gmap(F f, Generator<A> g) {
  using B = std::decay_t<std::invoke_result_t<const F&, const A&>>;
  return Generator<B>([f = std::move(f), g = std::move(g)](std::size_t n) {
    std::vector<B> out;
    auto xs = g.generate(static_cast<long long>(n));
    out.reserve(xs.size());
    for (const auto& x : xs) out.push_back(f(x));
    return out;
  });
}

/// Index pairs (i, j) with i < rows and j < cols in Cantor diagonal order
/// (by i + j, then by i), truncated to `limit`.
std::vector<std::pair<std::size_t, std::size_t>> diagonal_indices(
    std::size_t rows, std::size_t cols, std::size_t limit);

/// Cartesian sample product: both marginals are queried at the full budget and
/// combined along diagonals, so each marginal index used stays near sqrt(2n).
template <class A, class B>
Generator<std::pair<A, B>> gpair(Generator<A> g, Generator<B> h) {
  return Generator<std::pair<A, B>>(
      [g = std::move(g), h = std::move(h)](std::size_t n) {
        auto xs = g.generate(static_cast<long long>(n));
        auto ys = h.generate(static_cast<long long>(n));
        std::vector<std::pair<A, B>> out;
        for (auto [i, j] : diagonal_indices(xs.size(), ys.size(), n)) {
          out.emplace_back(xs[i], ys[j]);
        }
        return out;
      });
}

template <class A, class B, class C>
Generator<std::tuple<A, B, C>> gtriple(Generator<A> g, Generator<B> h,
                                       Generator<C> k) {
  return gmap(
      [](const std::pair<A, std::pair<B, C>>& p) {
        return std::tuple<A, B, C>(p.first, p.second.first, p.second.second);
      },
      gpair(std::move(g), gpair(std::move(h), std::move(k))));
}

/// Fair round-robin merge. The streams must be pairwise disjoint for the
/// result to stay duplicate-free.
template <class T>
Generator<T> ginterleave(std::vector<Generator<T>> streams) {
  return Generator<T>([streams = std::move(streams)](std::size_t n) {
    std::vector<std::vector<T>> parts;
    parts.reserve(streams.size());
    for (const auto& s : streams) {
      parts.push_back(s.generate(static_cast<long long>(n)));
    }
    std::vector<T> out;
    for (std::size_t round = 0; out.size() < n; ++round) {
      bool any = false;
      for (auto& part : parts) {
        if (round < part.size()) {
          any = true;
          out.push_back(std::move(part[round]));
          if (out.size() == n) break;
        }
      }
      if (!any) break;
    }
    return out;
  });
}

/// Lists of exactly `length` elements; the length is split in halves so the
/// elements stay balanced against each other.
template <class T>
Generator<std::vector<T>> glist_of_length(const Generator<T>& g,
                                          std::size_t length) {
  if (length == 0) return gelements(std::vector<std::vector<T>>(1));
  if (length == 1) {
    return gmap([](const T& x) { return std::vector<T>{x}; }, g);
  }
  auto left = glist_of_length(g, (length + 1) / 2);
  auto right = glist_of_length(g, length / 2);
  return gmap(
      [](const std::pair<std::vector<T>, std::vector<T>>& p) {
        std::vector<T> out = p.first;
        out.insert(out.end(), p.second.begin(), p.second.end());
        return out;
      },
      gpair(std::move(left), std::move(right)));
}

/// Lists of up to `max_length` elements, the lengths interleaved fairly.
template <class T>
Generator<std::vector<T>> glist(Generator<T> g, std::size_t max_length = 4) {
  std::vector<Generator<std::vector<T>>> by_length;
  for (std::size_t len = 0; len <= max_length; ++len) {
    by_length.push_back(glist_of_length(g, len));
  }
  return ginterleave(std::move(by_length));
}

/// First occurrences of `g`, in order. The source is scanned up to
/// `scan_factor * n` samples, so the result may fall short of n when the
/// source is highly redundant.
template <class T>
Generator<T> gdistinct(Generator<T> g, std::size_t scan_factor = 16) {
  return Generator<T>([g = std::move(g), scan_factor](std::size_t n) {
    std::vector<T> out;
    std::set<T> seen;
    std::size_t scanned = 0;
    std::size_t request = n;
    const std::size_t cap = n * scan_factor;
    while (out.size() < n) {
      auto xs = g.generate(static_cast<long long>(request));
      for (std::size_t i = scanned; i < xs.size() && out.size() < n; ++i) {
        if (seen.insert(xs[i]).second) out.push_back(xs[i]);
      }
      scanned = xs.size();
      if (xs.size() < request || request >= cap) break;
      request = std::min(cap, request * 2);
    }
    return out;
  });
}

// ----------------------------------------------------------------------------
// Default generators

/// Customization point: specialize with `static Generator<T> generator();`.
template <class T>
struct Some;

template <class T>
concept HasDefaultGenerator = requires {
  { Some<T>::generator() } -> std::same_as<Generator<T>>;
};

template <class T>
  requires HasDefaultGenerator<T>
Generator<T> default_generator() {
  return Some<T>::generator();
}

template <>
struct Some<bool> {
  static Generator<bool> generator() { return gbool(); }
};
template <>
struct Some<int> {
  static Generator<int> generator() { return gint(); }
};
template <>
struct Some<char> {
  static Generator<char> generator() { return gchar(); }
};
template <>
struct Some<std::string> {
  static Generator<std::string> generator() { return gstring(); }
};
template <>
struct Some<Unit> {
  static Generator<Unit> generator() { return gelements(std::vector<Unit>(1)); }
};

template <class A, class B>
struct Some<std::pair<A, B>> {
  static Generator<std::pair<A, B>> generator() {
    return gpair(default_generator<A>(), default_generator<B>());
  }
};

template <class A, class B, class C>
struct Some<std::tuple<A, B, C>> {
  static Generator<std::tuple<A, B, C>> generator() {
    return gtriple(default_generator<A>(), default_generator<B>(),
                   default_generator<C>());
  }
};

template <class T>
struct Some<std::vector<T>> {
  static Generator<std::vector<T>> generator() {
    return glist(default_generator<T>());
  }
};

}  // namespace purecheck
