#include <doctest.h>

#include <string>

#include "oracle.hpp"
#include "purecheck/patch.hpp"

using namespace purecheck::patch;

namespace {

Edit ins(int p, char c) { return {EditOp::insert, p, c}; }
Edit del(int p, char c) { return {EditOp::del, p, c}; }

}  // namespace

TEST_CASE("string edits") {
  CHECK(string_insert("abc", 1, 'x') == "axbc");
  CHECK(string_insert("abc", 3, 'x') == "abcx");
  CHECK_FALSE(string_insert("abc", 4, 'x'));
  CHECK_FALSE(string_insert("abc", -1, 'x'));
  CHECK(string_delete("abc", 1, 'b') == "ac");
  CHECK_FALSE(string_delete("abc", 1, 'c'));
  CHECK_FALSE(string_delete("abc", 3, 'c'));
  CHECK_FALSE(string_delete("", 0, 'a'));
}

TEST_CASE("string edits agree with the reference") {
  for (const auto& s : oracle::strings_upto("ab", 4)) {
    for (int i = -1; i <= 5; ++i) {
      for (char c : std::string("ab")) {
        CHECK(string_insert(s, i, c) == oracle::insert_at(s, i, c));
        CHECK(string_delete(s, i, c) == oracle::delete_at(s, i, c));
      }
    }
  }
}

TEST_CASE("inversion is an involution that reverses words") {
  CHECK(inv(Polarity::positive) == Polarity::negative);
  CHECK(inv(EditOp::del) == EditOp::insert);
  CHECK(inv(ins(2, 'a')) == del(2, 'a'));
  Word<Edit> w = from_list({ins(0, 'a'), del(1, 'b')});
  Word<Edit> expect{{negative(del(1, 'b')), negative(ins(0, 'a'))}};
  CHECK(inv(w) == expect);
  CHECK(inv(inv(w)) == w);
  CHECK(inv(Word<Edit>{}) == Word<Edit>{});
}

TEST_CASE("actions of edits, literals and words") {
  CHECK(action(std::string("ab"), ins(1, 'x')) == "axb");
  CHECK(undo(std::string("axb"), ins(1, 'x')) == "ab");
  CHECK(action(std::string("ab"), negative(ins(0, 'a'))) == "b");
  CHECK_FALSE(action(std::string("ab"), negative(ins(0, 'b'))));
  Word<Edit> w = from_list({ins(2, 'a'), del(3, 'b')});
  CHECK(action(std::string("abb"), w) == "aba");
  CHECK_FALSE(action(std::string("ab"), w));
  CHECK(action(std::string("q"), Word<Edit>{}) == "q");
  CHECK(to_list(w).size() == 2);
}

TEST_CASE("word action agrees with the reference on small words") {
  auto words = oracle::words_upto(oracle::literals(2, "ab"), 2);
  for (const auto& w : words) {
    for (const auto& s : oracle::strings_upto("ab", 3)) {
      CHECK(action(s, w) == oracle::apply_word(s, w));
    }
  }
}

TEST_CASE("rendering and parsing") {
  CHECK(render(ins(2, 'a')) == "+2:a");
  CHECK(render(del(3, 'b')) == "-3:b");
  CHECK(render(negative(ins(0, ','))) == "~+0:,");
  CHECK(render(ins(0, '\n')) == "+0:\\n");
  CHECK(render(ins(0, '\x01')) == "+0:\\x01");
  CHECK(parse_edit("+12:z") == ins(12, 'z'));
  CHECK(parse_literal("~-0:\\\\") == negative(del(0, '\\')));
  CHECK(parse_word("+2:a\n-3:b\n") == from_list({ins(2, 'a'), del(3, 'b')}));
  CHECK(parse_word("# comment\n\n+2:a\r\n-3:b") == from_list({ins(2, 'a'), del(3, 'b')}));
  CHECK(parse_word("+1:,,-0:x") == from_list({ins(1, ','), del(0, 'x')}));
  CHECK(parse_word("") == Word<Edit>{});
  CHECK(parse_edit("+0:\\x41") == ins(0, 'A'));

  for (const auto& w : oracle::words_upto(oracle::literals(1, "a,\\#"), 2)) {
    CHECK(parse_word(render(w)) == w);
  }
}

TEST_CASE("malformed words are rejected with an offset") {
  CHECK_THROWS_AS(parse_edit("*2:a"), ParseError);
  CHECK_THROWS_AS(parse_edit("+:a"), ParseError);
  CHECK_THROWS_AS(parse_edit("+2a"), ParseError);
  CHECK_THROWS_AS(parse_edit("+2:"), ParseError);
  CHECK_THROWS_AS(parse_edit("+2:ab"), ParseError);
  CHECK_THROWS_AS(parse_edit("+2:\\q"), ParseError);
  CHECK_THROWS_AS(parse_edit("+99999999999:a"), ParseError);
  try {
    parse_word("+1:a\n+2:bc");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 9);
  }
}

TEST_CASE("shows") {
  CHECK(show(Word<Edit>{}) == "[]");
  CHECK(show(from_list({ins(1, 'a')})) == "[+1:a]");
  CHECK(show(EditOp::del) == "Delete");
}
