#include "purecheck/automaton.hpp"

namespace purecheck::automaton {

namespace {

bool defined(const std::string& s, const Editor& a) { return action(s, a).has_value(); }

// Propositions over two editors, sampled together as pairs.
template <class F>
Meta<Fn<Editor, Predicate<Editor>>> over_pairs(F body) {
  return foreach<Editor>([body](const Editor& x) {
    return Meta<Predicate<Editor>>([body, x](const Editor& y) { return body(x, y); });
  });
}

Check semantics_sound() {
  return check(foreach<Word<Edit>>(
      [](const Word<Edit>& w) { return patch_eq(w, semantics(w)); }));
}

Check semantics_abstract() {
  return check(over_pairs(
      [](const Editor& x, const Editor& y) { return cons_eq(x, y).reflect(); }));
}

Check def_sound_complete() {
  return check(Meta<Predicate<Editor>>([](const Editor& x) {
    return x == Editor::fail() ||
           exists(Def{x}, [&](const std::string& s) { return defined(s, x); });
  }));
}

Check undef_sound_complete() {
  return check(Meta<Predicate<Editor>>([](const Editor& x) {
    return is_total(x) ||
           exists(Undef{x}, [&](const std::string& s) { return !defined(s, x); });
  }));
}

Check def_undef_sound() {
  return check(over_pairs([](const Editor& x, const Editor& y) {
    return exists_or_vacuous(DefUndef{x, y}, [&](const std::string& s) {
      return defined(s, x) && !defined(s, y);
    });
  }));
}

Check diff_sound_complete() {
  return check(over_pairs([](const Editor& x, const Editor& y) {
    return x == y || exists(Diff{x, y}, [&](const std::string& s) {
             return action(s, x) != action(s, y);
           });
  }));
}

}  // namespace

std::vector<NamedCheck> adequacy_suite() {
  return {
      {"adequacy.semantics_sound", tactic(semantics_sound)},
      {"adequacy.semantics_abstract", tactic(semantics_abstract)},
      {"adequacy.def_sound_complete", tactic(def_sound_complete)},
      {"adequacy.undef_sound_complete", tactic(undef_sound_complete)},
      {"adequacy.def_undef_sound", tactic(def_undef_sound)},
      {"adequacy.diff_sound_complete", tactic(diff_sound_complete)},
  };
}

}  // namespace purecheck::automaton
