#include "purecheck/automaton.hpp"
#include "purecheck/axioms.hpp"
#include "purecheck/runner.hpp"

namespace purecheck::runner {

using namespace purecheck::axioms;
using patch::Edit;
using patch::Literal;
using patch::Word;

Suite default_suite() {
  using Strings = monoids::Concat<std::string>;
  Suite s;
  s.add_all(monoid_laws<monoids::Concat<std::vector<int>>>(), {"monoid"});
  s.add_all(monoid_laws<Strings>(), {"monoid"});
  s.add_all(monoid_laws<monoids::Trivial>(), {"monoid"});
  s.add(law(MonoidCommute<monoids::Sum<int>>{}), {"monoid"});
  s.add(law(RActionUnit<Strings, std::string>{self_action<Strings>(), "append"}),
        {"action"});
  s.add(law(RActionCompose<Strings, std::string>{self_action<Strings>(), "append"}),
        {"action"});
  s.add(law(PatchInvert<std::string, Edit>{}), {"patch"});
  s.add(law(PatchInvert<std::string, Literal<Edit>>{}), {"patch"});
  s.add(law(PatchInvert<std::string, Word<Edit>>{}), {"patch"});
  s.add(law(NonNeg<RepeatLength>{}), {"nonneg"});
  s.add_all(automaton::adequacy_suite(), {"adequacy"});
  return s;
}

Suite control_suite() {
  Suite s;
  s.add(law(MonoidCommute<monoids::Concat<std::string>>{}), {"control"});
  s.add(law(MonoidAssoc<monoids::Difference<int>>{}), {"control"});
  s.add(law(RepeatLength{}), {"control"});
  return s;
}

Suite full_suite() {
  Suite s = default_suite();
  Suite controls = control_suite();
  for (const auto& e : controls.entries()) s.add(e.name, e.check, e.tags);
  return s;
}

}  // namespace purecheck::runner
