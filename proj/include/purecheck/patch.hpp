#pragma once

// Patches acting partially on states, their inverses, and group words.
//
// A patch type P acts on a state type S through `action(s, p)`, which returns
// nothing where the patch does not apply. Polar patches have `inv(p)`, from
// which `undo(s, p) = action(s, inv(p))` follows. Literals and words lift any
// such patch; edits are the concrete generators acting on strings.

#include <compare>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "purecheck/generator.hpp"
#include "purecheck/show.hpp"
#include "purecheck/type_name.hpp"

namespace purecheck::patch {

enum class Polarity { positive, negative };
enum class EditOp { insert, del };

struct Edit {
  EditOp op = EditOp::insert;
  int pos = 0;  ///< 0-based
  char arg = 'a';

  auto operator<=>(const Edit&) const = default;
};

template <class P>
struct Literal {
  Polarity polarity = Polarity::positive;
  P atom{};

  auto operator<=>(const Literal&) const = default;
};

/// Sequence of polarized literals. Structural equality only; semantic
/// equality is decided through the automaton model.
template <class P>
struct Word {
  std::vector<Literal<P>> literals;

  auto operator<=>(const Word&) const = default;
};

// ----------------------------------------------------------------------------
// Inversion

inline Polarity inv(Polarity p) {
  return p == Polarity::positive ? Polarity::negative : Polarity::positive;
}

inline EditOp inv(EditOp op) {
  return op == EditOp::insert ? EditOp::del : EditOp::insert;
}

inline Edit inv(const Edit& e) { return Edit{inv(e.op), e.pos, e.arg}; }

template <class P>
Literal<P> inv(const Literal<P>& l) {
  return Literal<P>{inv(l.polarity), l.atom};
}

/// Reverses the order and flips every literal.
template <class P>
Word<P> inv(const Word<P>& w) {
  Word<P> out;
  out.literals.reserve(w.literals.size());
  for (auto it = w.literals.rbegin(); it != w.literals.rend(); ++it) {
    out.literals.push_back(inv(*it));
  }
  return out;
}

/// Free-monoid concatenation; no reduction.
template <class P>
Word<P> operator+(Word<P> a, const Word<P>& b) {
  a.literals.insert(a.literals.end(), b.literals.begin(), b.literals.end());
  return a;
}

Word<Edit> from_list(const std::vector<Edit>& edits);
std::vector<Literal<Edit>> to_list(const Word<Edit>& w);

inline Literal<Edit> positive(Edit e) { return {Polarity::positive, e}; }
inline Literal<Edit> negative(Edit e) { return {Polarity::negative, e}; }

// ----------------------------------------------------------------------------
// String editing

/// Inserts `c` before position `i`; defined iff 0 <= i <= |s|.
std::optional<std::string> string_insert(const std::string& s, int i, char c);
/// Removes the character at `i`; defined iff 0 <= i < |s| and s[i] == c.
std::optional<std::string> string_delete(const std::string& s, int i, char c);

inline std::optional<std::string> edit_insert(const std::string& s, int i,
                                              char c) {
  return string_insert(s, i, c);
}
inline std::optional<std::string> edit_delete(const std::string& s, int i,
                                              char c) {
  return string_delete(s, i, c);
}

/// States that interpret the two edit operations.
template <class S>
concept Editable = requires(const S& s, int i, char c) {
  { edit_insert(s, i, c) } -> std::same_as<std::optional<S>>;
  { edit_delete(s, i, c) } -> std::same_as<std::optional<S>>;
};

// ----------------------------------------------------------------------------
// Actions

template <Editable S>
std::optional<S> action(const S& s, const Edit& e) {
  return e.op == EditOp::insert ? edit_insert(s, e.pos, e.arg)
                                : edit_delete(s, e.pos, e.arg);
}

template <class S, class P>
std::optional<S> undo(const S& s, const P& p) {
  return action(s, inv(p));
}

template <class S, class P>
std::optional<S> action(const S& s, const Literal<P>& l) {
  return l.polarity == Polarity::positive ? action(s, l.atom) : undo(s, l.atom);
}

/// Left-to-right fold; undefined as soon as one step is.
template <class S, class P>
std::optional<S> action(const S& s, const Word<P>& w) {
  std::optional<S> state = s;
  for (const auto& l : w.literals) {
    state = action(*state, l);
    if (!state) break;
  }
  return state;
}

// ----------------------------------------------------------------------------
// Text rendering: "+2:a" inserts 'a' at 2, "-3:b" deletes 'b' at 3, a leading
// '~' marks a negative literal. Words are comma separated.

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset);
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

std::string render(const Edit& e);
std::string render(const Literal<Edit>& l);
std::string render(const Word<Edit>& w);

Edit parse_edit(std::string_view text);
Literal<Edit> parse_literal(std::string_view text);
/// Literals separated by commas or newlines. Lines starting with '#' and
/// blank lines are skipped.
Word<Edit> parse_word(std::string_view text);

std::string show(Polarity p);
std::string show(EditOp op);
std::string show(const Edit& e);
std::string show(const Literal<Edit>& l);
std::string show(const Word<Edit>& w);

}  // namespace purecheck::patch

namespace purecheck {

template <>
struct Some<patch::Polarity> {
  static Generator<patch::Polarity> generator() {
    return gelements(std::vector<patch::Polarity>{patch::Polarity::positive,
                                                  patch::Polarity::negative});
  }
};

template <>
struct Some<patch::EditOp> {
  static Generator<patch::EditOp> generator() {
    return gelements(
        std::vector<patch::EditOp>{patch::EditOp::insert, patch::EditOp::del});
  }
};

/// Edits over ((op, position), char), positions drawn from the naturals.
template <>
struct Some<patch::Edit> {
  static Generator<patch::Edit> generator();
};

template <class P>
  requires HasDefaultGenerator<P>
struct Some<patch::Literal<P>> {
  static Generator<patch::Literal<P>> generator() {
    return gmap(
        [](const std::pair<patch::Polarity, P>& p) {
          return patch::Literal<P>{p.first, p.second};
        },
        gpair(default_generator<patch::Polarity>(), default_generator<P>()));
  }
};

/// Words of up to four literals.
template <class P>
  requires HasDefaultGenerator<P>
struct Some<patch::Word<P>> {
  static Generator<patch::Word<P>> generator() {
    return gmap(
        [](const std::vector<patch::Literal<P>>& ls) {
          return patch::Word<P>{ls};
        },
        glist(default_generator<patch::Literal<P>>(), 4));
  }
};

template <>
struct TypeName<patch::Edit> {
  static std::string name() { return "Edit"; }
};
template <class P>
struct TypeName<patch::Literal<P>> {
  static std::string name() { return "Literal<" + TypeName<P>::name() + ">"; }
};
template <class P>
struct TypeName<patch::Word<P>> {
  static std::string name() { return "Word<" + TypeName<P>::name() + ">"; }
};

}  // namespace purecheck
