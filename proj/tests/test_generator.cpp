#include <doctest.h>

#include <algorithm>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "purecheck/automaton.hpp"
#include "purecheck/generator.hpp"
#include "purecheck/patch.hpp"

using namespace purecheck;

namespace {

// Cantor order of the index grid, by sorting instead of walking diagonals.
std::vector<std::pair<std::size_t, std::size_t>> cantor_by_sort(std::size_t rows,
                                                                 std::size_t cols,
                                                                 std::size_t limit) {
  std::vector<std::pair<std::size_t, std::size_t>> all;
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) all.emplace_back(i, j);
  }
  std::sort(all.begin(), all.end(), [](auto a, auto b) {
    return std::pair(a.first + a.second, a.first) < std::pair(b.first + b.second, b.first);
  });
  if (all.size() > limit) all.resize(limit);
  return all;
}

template <class T>
void check_contract(const Generator<T>& g) {
  const std::vector<long long> sizes{0, 1, 2, 7, 32};
  std::vector<T> previous;
  for (long long n : sizes) {
    auto xs = g.generate(n);
    CHECK(xs == g.generate(n));
    CHECK(xs.size() <= static_cast<std::size_t>(n));
    CHECK(std::set<T>(xs.begin(), xs.end()).size() == xs.size());
    REQUIRE(previous.size() <= xs.size());
    CHECK(std::equal(previous.begin(), previous.end(), xs.begin()));
    previous = xs;
  }
  CHECK(g.generate(-3).empty());
}

}  // namespace

TEST_CASE("integers zig-zag from zero") {
  CHECK(gint().generate(5) == std::vector<int>{0, 1, -1, 2, -2});
  CHECK(gnatural().generate(4) == std::vector<int>{0, 1, 2, 3});
  CHECK(zigzag(0) == 0);
  CHECK(zigzag(6) == -3);
}

TEST_CASE("booleans and characters") {
  CHECK(gbool().generate(5) == std::vector<bool>{false, true});
  auto cs = gchar().generate(1000);
  CHECK(cs.size() == 95);
  CHECK(std::string(cs.begin(), cs.begin() + 3) == "abc");
  CHECK(cs[26] == '0');
  for (char c : cs) CHECK((c >= 0x20 && c < 0x7f));
}

TEST_CASE("strings in length-lexicographic order") {
  std::vector<std::string> expect{"",   "a",  "b",  "c",  "aa", "ab", "ac",
                                  "ba", "bb", "bc", "ca", "cb", "cc", "aaa"};
  CHECK(gstring().generate(14) == expect);
  CHECK(gstring("x").generate(3) == std::vector<std::string>{"", "x", "xx"});
}

TEST_CASE("pairs follow the Cantor diagonals") {
  using P = std::pair<bool, bool>;
  CHECK(gpair(gbool(), gbool()).generate(4) ==
        std::vector<P>{{false, false}, {false, true}, {true, false}, {true, true}});

  for (std::size_t n : {0u, 1u, 5u, 10u, 33u}) {
    auto got = gpair(gnatural(), gnatural()).generate(static_cast<long long>(n));
    auto idx = cantor_by_sort(n, n, n);
    REQUIRE(got.size() == idx.size());
    for (std::size_t k = 0; k < idx.size(); ++k) {
      CHECK(got[k].first == static_cast<int>(idx[k].first));
      CHECK(got[k].second == static_cast<int>(idx[k].second));
    }
  }
  // A finite marginal shortens the diagonals but keeps their order.
  auto got = gpair(gbool(), gnatural()).generate(7);
  auto idx = cantor_by_sort(2, 7, 7);
  REQUIRE(got.size() == 7);
  for (std::size_t k = 0; k < 7; ++k) {
    CHECK(static_cast<std::size_t>(got[k].first) == idx[k].first);
    CHECK(static_cast<std::size_t>(got[k].second) == idx[k].second);
  }
}

TEST_CASE("finite products are exhausted") {
  auto all = gpair(gbool(), gelements(std::vector<int>{1, 2, 3})).generate(100);
  CHECK(all.size() == 6);
  auto triples = gtriple(gbool(), gbool(), gbool()).generate(100);
  CHECK(triples.size() == 8);
}

TEST_CASE("lists interleave by length") {
  auto ls = glist(gbool(), 2).generate(100);
  CHECK(ls.size() == 7);
  CHECK(ls.front().empty());
  CHECK(ls[1] == std::vector<bool>{false});
  CHECK(ls[2] == std::vector<bool>{false, false});
  for (const auto& l : glist(gint()).generate(200)) CHECK(l.size() <= 4);
}

TEST_CASE("gdistinct drops repeats in first-occurrence order") {
  auto g = gmap([](const int& x) { return x / 3; }, gnatural());
  CHECK(gdistinct(g).generate(4) == std::vector<int>{0, 1, 2, 3});
  auto finite = gelements(std::vector<int>{1, 1, 2, 1, 3});
  CHECK(gdistinct(finite).generate(10) == std::vector<int>{1, 2, 3});
}

TEST_CASE("small combinators") {
  CHECK(gempty<int>().generate(10).empty());
  CHECK(gtake(2, gnatural()).generate(10) == std::vector<int>{0, 1});
  CHECK(gelements(std::vector<int>{4, 5}).generate(1) == std::vector<int>{4});
  CHECK(gmap([](const int& x) { return x * 2; }, gnatural()).generate(3) ==
        std::vector<int>{0, 2, 4});
  CHECK(generate(gint(), 1) == std::vector<int>{0});
}

TEST_CASE("every exported generator keeps the contract") {
  check_contract(gbool());
  check_contract(gint());
  check_contract(gnatural());
  check_contract(gchar());
  check_contract(gstring());
  check_contract(gempty<int>());
  check_contract(gelements(std::vector<int>{3, 1, 2}));
  check_contract(gtake(5, gint()));
  check_contract(gmap([](const int& x) { return x + 7; }, gint()));
  check_contract(gpair(gint(), gstring()));
  check_contract(gtriple(gint(), gbool(), gchar()));
  check_contract(ginterleave(std::vector<Generator<int>>{gnatural(), gelements(std::vector<int>{-1, -2})}));
  check_contract(glist(gint()));
  check_contract(glist_of_length(gbool(), 3));
  check_contract(gdistinct(gmap([](const int& x) { return x / 2; }, gint())));
  check_contract(default_generator<Unit>());
  check_contract(default_generator<std::vector<std::string>>());
  check_contract(default_generator<patch::Edit>());
  check_contract(default_generator<patch::Literal<patch::Edit>>());
  check_contract(default_generator<patch::Word<patch::Edit>>());
  check_contract(default_generator<automaton::Editor>());
}
