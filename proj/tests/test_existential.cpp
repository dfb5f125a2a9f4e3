#include <doctest.h>

#include <optional>
#include <string>

#include "purecheck/existential.hpp"

using namespace purecheck;

namespace {

// Some even number at least `from`.
struct EvenFrom {
  int from;
};

std::optional<int> witness(const EvenFrom& p) { return p.from % 2 == 0 ? p.from : p.from + 1; }

struct Nowhere {};
std::optional<std::string> witness(const Nowhere&) { return std::nullopt; }

struct NotASource {};

}  // namespace

TEST_CASE("witness sources") {
  static_assert(WitnessSource<EvenFrom>);
  static_assert(WitnessSource<Given<int>>);
  static_assert(!WitnessSource<NotASource>);
  static_assert(std::is_same_v<witness_type<Nowhere>, std::string>);
}

TEST_CASE("exists tests the produced witness") {
  CHECK(exists(EvenFrom{3}, [](int x) { return x % 2 == 0 && x >= 3; }));
  CHECK_FALSE(exists(EvenFrom{3}, [](int x) { return x == 3; }));
  CHECK_FALSE(exists(Nowhere{}, [](const std::string&) { return true; }));
  CHECK(exists(Given<int>{5}, [](int x) { return x == 5; }));
}

TEST_CASE("exists_some only asks for a witness") {
  CHECK(exists_some(EvenFrom{0}));
  CHECK_FALSE(exists_some(Nowhere{}));
  CHECK_FALSE(exists_some(Given<int>{std::nullopt}));
}

TEST_CASE("exists_or_vacuous accepts the absence of a witness") {
  CHECK(exists_or_vacuous(Nowhere{}, [](const std::string&) { return false; }));
  CHECK(exists_or_vacuous(Given<int>{2}, [](int x) { return x == 2; }));
  CHECK_FALSE(exists_or_vacuous(Given<int>{2}, [](int x) { return x == 3; }));
}
