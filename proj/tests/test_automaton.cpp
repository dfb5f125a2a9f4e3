#include <doctest.h>

#include <string>
#include <vector>

#include "oracle.hpp"
#include "purecheck/automaton.hpp"

using namespace purecheck;
using namespace purecheck::automaton;
using patch::EditOp;
using patch::from_list;

namespace {

Consumption Ret() { return Consumption::ret(); }
Consumption Skip(Insertion next) { return Consumption::skip(std::move(next)); }
Consumption Del(char c, Insertion next) { return Consumption::del(c, std::move(next)); }
Insertion Ins(std::string p, Consumption next) { return Insertion(std::move(p), std::move(next)); }
Editor Try(Insertion a) { return Editor::attempt(std::move(a)); }

Edit insert(int p, char c) { return {EditOp::insert, p, c}; }
Edit remove(int p, char c) { return {EditOp::del, p, c}; }

const Editor identity = Editor::attempt(Ins("", Ret()));

std::vector<Editor> sample_editors(long long n) {
  return default_generator<Editor>().generate(n);
}

}  // namespace

TEST_CASE("the smart constructor hoists insertions over deletions") {
  CHECK(ins("x", Del('a', Ins("y", Ret()))) == Ins("xy", Del('a', Ins("", Ret()))));
  CHECK(ins("x", Skip(Ins("y", Ret()))) == Ins("x", Skip(Ins("y", Ret()))));
  CHECK(ins("", Ret()) == done());
  CHECK_FALSE(is_normal(Ins("", Del('a', Ins("y", Ret())))));
  CHECK(is_normal(ins("", Del('a', Ins("y", Ret())))));
}

TEST_CASE("structure views") {
  auto a = Ins("p", Skip(Ins("q", Del('z', Ins("", Ret())))));
  CHECK(a.consumed() == 2);
  CHECK(a.next().head_kind() == StepKind::skip);
  CHECK(a.next().rest() == Ins("q", Del('z', Ins("", Ret()))));
  CHECK(a.next().rest().next().head_char() == 'z');
  CHECK_THROWS(Ret().rest());
  CHECK_THROWS(Editor::fail().body());
}

TEST_CASE("action of automata on strings") {
  CHECK(action("c", Try(Ins("ab", Ret()))) == "abc");
  CHECK(action("xy", Try(Ins("", Skip(Ins("-", Ret()))))) == "x-y");
  CHECK_FALSE(action("", Try(Ins("", Skip(Ins("", Ret()))))));
  CHECK(action("ab", Try(Ins("", Del('a', Ins("", Ret()))))) == "b");
  CHECK_FALSE(action("bb", Try(Ins("", Del('a', Ins("", Ret()))))));
  CHECK_FALSE(action("abc", Editor::fail()));
  CHECK(action("ab", Ret()) == "ab");
  CHECK(editor_action("q", identity) == "q");
}

TEST_CASE("semantics of words") {
  CHECK(semantics(Word<Edit>{}) == identity);
  CHECK(semantics(from_list({insert(0, 'a')})) == Try(Ins("a", Ret())));
  CHECK(semantics(from_list({insert(1, 'a')})) == Try(Ins("", Skip(Ins("a", Ret())))));
  CHECK(semantics(from_list({remove(0, 'a')})) == Try(Ins("", Del('a', Ins("", Ret())))));
  CHECK(semantics(from_list({insert(0, 'a'), remove(0, 'b')})) == Editor::fail());
  CHECK(semantics(from_list({insert(1, 'a'), remove(1, 'a')})) ==
        Try(Ins("", Skip(Ins("", Ret())))));
  CHECK(semantics(from_list({insert(0, 'a'), remove(1, 'a')})) ==
        Try(Ins("a", Del('a', Ins("", Ret())))));
  CHECK(semantics(from_list({remove(0, 'a'), insert(0, 'a')})) ==
        Try(Ins("a", Del('a', Ins("", Ret())))));
  CHECK(semantics(Word<Edit>{{patch::negative(insert(0, 'a'))}}) ==
        Try(Ins("", Del('a', Ins("", Ret())))));
}

TEST_CASE("the word problem example from the design notes") {
  auto x = from_list({insert(2, 'a'), remove(3, 'b')});
  auto y = from_list({remove(2, 'b'), insert(2, 'a')});
  CHECK(semantics(x) == semantics(y));
  CHECK(word_equiv(x, y));
  CHECK(word_equiv(x, x));
  CHECK_FALSE(word_equiv(from_list({insert(0, 'a')}), from_list({insert(0, 'b')})));
}

TEST_CASE("splicing matches composition with the reference edits") {
  auto inputs = oracle::strings_upto("ab", 4);
  auto editors = sample_editors(150);
  for (const auto& e : editors) {
    if (e.is_fail()) continue;
    const Insertion& a = e.body();
    for (int i = -1; i <= 5; ++i) {
      for (char c : std::string("ab")) {
        auto spliced_ins = editor_insert(a, i, c);
        auto spliced_del = editor_delete(a, i, c);
        if (spliced_ins) CHECK(is_normal(*spliced_ins));
        if (spliced_del) CHECK(is_normal(*spliced_del));
        for (const auto& s : inputs) {
          auto out = oracle::run_insertion(s, a);
          auto want_ins = out ? oracle::insert_at(*out, i, c) : std::nullopt;
          auto want_del = out ? oracle::delete_at(*out, i, c) : std::nullopt;
          auto got_ins = spliced_ins ? oracle::run_insertion(s, *spliced_ins) : std::nullopt;
          auto got_del = spliced_del ? oracle::run_insertion(s, *spliced_del) : std::nullopt;
          CHECK(got_ins == want_ins);
          CHECK(got_del == want_del);
        }
      }
    }
  }
}

TEST_CASE("splicing onto Fail stays Fail") {
  CHECK(edit_insert(Editor::fail(), 0, 'a') == Editor::fail());
  CHECK(edit_delete(Editor::fail(), 3, 'a') == Editor::fail());
  CHECK(edit_delete(identity, 0, 'a') == Try(Ins("", Del('a', Ins("", Ret())))));
  CHECK_FALSE(editor_insert(done(), -1, 'a'));
  CHECK_THROWS_AS(editor_insert(done(), 1 << 30, 'a'), std::length_error);
}

TEST_CASE("generated automata are in normal form") {
  auto words = default_generator<Word<Edit>>().generate(400);
  for (const auto& w : words) CHECK(is_normal(semantics(w)));
}

TEST_CASE("totality") {
  CHECK(is_total(Try(Ins("abc", Ret()))));
  CHECK_FALSE(is_total(Editor::fail()));
  CHECK_FALSE(is_total(Try(Ins("", Skip(Ins("", Ret()))))));
  CHECK_FALSE(is_total(Try(Ins("", Del('a', Ins("", Ret()))))));
  for (const auto& s : oracle::strings_upto("ab", 4)) {
    CHECK(action(s, Try(Ins("abc", Ret()))).has_value());
  }
}

TEST_CASE("witness examples") {
  auto skip = Try(Ins("", Skip(Ins("", Ret()))));
  auto del_a = Try(Ins("", Del('a', Ins("", Ret()))));

  CHECK_FALSE(witness_def(Editor::fail()));
  CHECK(witness_def(Try(Ins("", Del('q', Ins("", Ret()))))) == "q");
  CHECK(witness_def(Try(Ins("x", Ret()))) == "");

  CHECK(witness_undef(Editor::fail()) == "");
  CHECK_FALSE(witness_undef(identity));
  CHECK(witness_undef(skip) == "");

  CHECK(witness_def_undef(identity, Editor::fail()) == "");
  CHECK_FALSE(witness_def_undef(skip, skip));
  auto sep = witness_def_undef(skip, del_a);
  REQUIRE(sep);
  CHECK(sep->size() == 1);
  CHECK(*sep != "a");
  CHECK_FALSE(witness_def_undef(del_a, skip));

  CHECK_FALSE(witness_diff(skip, skip));
  CHECK(witness_diff(identity, Editor::fail()) == "");
  auto x = Try(Ins("", Skip(Ins("a", Ret()))));
  auto y = Try(Ins("a", Skip(Ins("", Ret()))));
  auto d = witness_diff(x, y);
  REQUIRE(d);
  REQUIRE(d->size() == 1);
  CHECK(*d != "a");
  CHECK(action(*d, x) == *d + "a");
  CHECK(action(*d, y) == "a" + *d);
}

TEST_CASE("witnesses are sound and complete on generated automata") {
  auto inputs = oracle::strings_upto("ab", 5);
  auto editors = sample_editors(120);
  for (const auto& x : editors) {
    auto def = witness_def(x);
    if (def) CHECK(action(*def, x).has_value());
    else CHECK(x.is_fail());
    auto undef = witness_undef(x);
    if (undef) CHECK_FALSE(action(*undef, x).has_value());
    else CHECK(is_total(x));
    for (const auto& y : editors) {
      auto du = witness_def_undef(x, y);
      if (du) {
        CHECK(action(*du, x).has_value());
        CHECK_FALSE(action(*du, y).has_value());
      }
      auto diff = witness_diff(x, y);
      if (diff) CHECK(action(*diff, x) != action(*diff, y));
      else CHECK(x == y);
      if (!du) {
        for (const auto& s : inputs) CHECK_FALSE((action(s, x) && !action(s, y)));
      }
    }
  }
}

TEST_CASE("equivalence propositions") {
  auto w = from_list({insert(1, 'b')});
  CHECK(check(patch_eq(w, w)).perform(50).is_holds());
  CHECK(check(patch_eq(w, semantics(w))).perform(200).is_holds());
  CHECK(check(patch_eq(w, identity)).perform(50).is_falsified());
  CHECK(cons_eq(identity, identity).reflect());
  CHECK(cons_eq(identity, Editor::fail()).reflect());
}

TEST_CASE("the adequacy suite holds") {
  auto suite = adequacy_suite();
  REQUIRE(suite.size() == 6);
  for (const auto& named : suite) {
    INFO(named.name);
    CHECK(named.check.perform(200).is_holds());
  }
}

TEST_CASE("rendering") {
  CHECK(show(Editor::fail()) == "Fail");
  CHECK(show(identity) == "Try[Ins \"\"; Return]");
  CHECK(show(Try(Ins("ab", Skip(Ins("", Del('c', Ins("", Ret())))))))
        == "Try[Ins \"ab\"; Skip; Ins \"\"; Del 'c'; Ins \"\"; Return]");
  CHECK(show(Try(Ins("\"", Ret()))) == "Try[Ins \"\\\"\"; Return]");
}
