#pragma once

// Normal-form string transducers: the fully abstract model of edit words.
//
// An automaton reads its input left to right. It alternates between inserting
// a literal string and consuming one input character, either copying it
// (skip) or removing it provided it matches (del); at the end the rest of the
// input is returned unchanged. Fail rejects every input.
//
//   Editor      = Fail | Try Insertion
//   Insertion   = Ins prefix Consumption
//   Consumption = Skip Insertion | Del char Insertion | Return
//
// Insertions directly after a deletion are indistinguishable from insertions
// before it, so the normal form keeps every insertion that follows a del
// empty. With that rule, two automata denote the same partial function on
// strings exactly when they are structurally equal.
//
// The chain is stored flat: an Insertion is its leading prefix followed by a
// list of steps, each step being one consumption and the prefix inserted after
// it.

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "purecheck/check.hpp"
#include "purecheck/existential.hpp"
#include "purecheck/generator.hpp"
#include "purecheck/meta.hpp"
#include "purecheck/patch.hpp"
#include "purecheck/type_name.hpp"

namespace purecheck::automaton {

using patch::Edit;
using patch::Word;

enum class StepKind { skip, del };

struct Step {
  StepKind kind = StepKind::skip;
  char expected = '\0';  ///< required character of a del; '\0' for skips
  std::string then_insert;

  auto operator<=>(const Step&) const = default;
};

class Insertion;

class Consumption {
 public:
  static Consumption ret();
  static Consumption skip(Insertion next);
  static Consumption del(char c, Insertion next);

  explicit Consumption(std::vector<Step> steps = {});

  bool is_return() const { return steps_.empty(); }
  StepKind head_kind() const;
  char head_char() const;
  /// The insertion after the head step.
  Insertion rest() const;

  const std::vector<Step>& steps() const { return steps_; }

  auto operator<=>(const Consumption&) const = default;

 private:
  std::vector<Step> steps_;
};

class Insertion {
 public:
  /// The raw node; no normalization. Use `ins` to build normal forms.
  Insertion(std::string prefix, Consumption next);

  const std::string& prefix() const { return prefix_; }
  const Consumption& next() const { return next_; }
  const std::vector<Step>& steps() const { return next_.steps(); }
  /// Number of input characters read before returning.
  std::size_t consumed() const { return next_.steps().size(); }

  auto operator<=>(const Insertion&) const = default;

 private:
  std::string prefix_;
  Consumption next_;
};

class Editor {
 public:
  static Editor fail();
  static Editor attempt(Insertion body);
  /// Fail for nothing, Try otherwise.
  static Editor lift(std::optional<Insertion> body);

  bool is_fail() const { return !body_.has_value(); }
  /// The automaton body; throws std::logic_error on Fail.
  const Insertion& body() const;
  const std::optional<Insertion>& maybe_body() const { return body_; }

  auto operator<=>(const Editor&) const = default;

 private:
  explicit Editor(std::optional<Insertion> body) : body_(std::move(body)) {}

  std::optional<Insertion> body_;
};

/// Smart constructor: moves an insertion that would follow a del in front of
/// it. Normal at the root when `next` is normal below.
Insertion ins(std::string prefix, Consumption next);

/// The identity automaton, Ins "" Return.
const Insertion& done();

/// No insertion directly after a del anywhere in the chain.
bool is_normal(const Insertion& a);
bool is_normal(const Editor& a);

// ----------------------------------------------------------------------------
// Action on strings

std::optional<std::string> action(const std::string& s, const Consumption& c);
std::optional<std::string> action(const std::string& s, const Insertion& a);
std::optional<std::string> action(const std::string& s, const Editor& a);

inline std::optional<std::string> editor_action(const std::string& s,
                                                const Editor& a) {
  return action(s, a);
}

// ----------------------------------------------------------------------------
// Splicing single edits onto the output of an automaton
//
// editor_insert(a, i, c) denotes s -> a(s) >>= string_insert(., i, c);
// nothing means that composite is defined nowhere.

std::optional<Insertion> editor_insert(const Insertion& a, int i, char c);
std::optional<Insertion> editor_delete(const Insertion& a, int i, char c);

inline std::optional<Insertion> edit_insert(const Insertion& a, int i, char c) {
  return editor_insert(a, i, c);
}
inline std::optional<Insertion> edit_delete(const Insertion& a, int i, char c) {
  return editor_delete(a, i, c);
}

/// Editors are closed under splicing: the result is Fail where the
/// insertion-level splice has none.
std::optional<Editor> edit_insert(const Editor& a, int i, char c);
std::optional<Editor> edit_delete(const Editor& a, int i, char c);

/// The automaton of a word: its literals folded over `done`.
Editor semantics(const Word<Edit>& w);

/// Decides whether two words denote the same action.
bool word_equiv(const Word<Edit>& x, const Word<Edit>& y);

/// Defined on every string: Try with an empty consumption chain.
bool is_total(const Editor& a);

// ----------------------------------------------------------------------------
// Witness encodings

/// Some input is accepted.
struct Def {
  Editor x;
};
/// Some input is rejected.
struct Undef {
  Editor x;
};
/// Some input is accepted by `accepted` and rejected by `rejected`.
struct DefUndef {
  Editor accepted;
  Editor rejected;
};
/// Some input on which the two automata differ.
struct Diff {
  Editor left;
  Editor right;
};

std::optional<std::string> witness(const Def& p);
std::optional<std::string> witness(const Undef& p);
std::optional<std::string> witness(const DefUndef& p);
std::optional<std::string> witness(const Diff& p);

inline std::optional<std::string> witness_def(const Editor& a) {
  return witness(Def{a});
}
inline std::optional<std::string> witness_undef(const Editor& a) {
  return witness(Undef{a});
}
inline std::optional<std::string> witness_def_undef(const Editor& x,
                                                    const Editor& y) {
  return witness(DefUndef{x, y});
}
inline std::optional<std::string> witness_diff(const Editor& x,
                                               const Editor& y) {
  return witness(Diff{x, y});
}

/// Filler used wherever any accepted character will do.
inline constexpr char filler_char = 'a';

// ----------------------------------------------------------------------------
// Equivalences

/// Pointwise agreement of two patches under their action on strings.
template <class X, class Y>
Meta<Predicate<std::string>> patch_eq(X x, Y y) {
  return Meta<Predicate<std::string>>(
      [x = std::move(x), y = std::move(y)](const std::string& s) {
        return action(s, x) == action(s, y);
      });
}

/// Equal, or constructively different.
Meta<bool> cons_eq(const Editor& x, const Editor& y);

/// The six named consistency checks of the model.
std::vector<NamedCheck> adequacy_suite();

// ----------------------------------------------------------------------------
// Rendering: Try[Ins "ab"; Skip; Ins ""; Del 'c'; Ins ""; Return], Fail

std::string show(const Consumption& c);
std::string show(const Insertion& a);
std::string show(const Editor& a);

}  // namespace purecheck::automaton

namespace purecheck {

/// Editors reachable from generated words, duplicates removed.
template <>
struct Some<automaton::Editor> {
  static Generator<automaton::Editor> generator();
};

template <>
struct TypeName<automaton::Editor> {
  static std::string name() { return "Editor"; }
};

}  // namespace purecheck
