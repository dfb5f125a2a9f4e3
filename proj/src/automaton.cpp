#include "purecheck/automaton.hpp"

#include <stdexcept>

namespace purecheck::automaton {

namespace {

// Splices beyond this many input characters are refused rather than
// materialized.
constexpr std::size_t max_chain = 1u << 20;

std::vector<Step> prepend(Step head, const Insertion& next) {
  std::vector<Step> steps;
  steps.reserve(next.steps().size() + 1);
  steps.push_back(std::move(head));
  steps.insert(steps.end(), next.steps().begin(), next.steps().end());
  return steps;
}

// Applies `ins` at every node, innermost first.
Insertion normalize(std::string prefix, std::vector<Step> steps) {
  for (std::size_t j = steps.size(); j-- > 0;) {
    if (steps[j].kind != StepKind::del || steps[j].then_insert.empty()) continue;
    std::string& before = j == 0 ? prefix : steps[j - 1].then_insert;
    before += steps[j].then_insert;
    steps[j].then_insert.clear();
  }
  return Insertion(std::move(prefix), Consumption(std::move(steps)));
}

void check_growth(std::size_t have, long long more) {
  if (more < 0 || have + static_cast<std::size_t>(more) > max_chain) {
    throw std::length_error("edit position too far beyond the automaton");
  }
}

}  // namespace

Consumption Consumption::ret() { return Consumption(); }

Consumption Consumption::skip(Insertion next) {
  return Consumption(prepend(Step{StepKind::skip, '\0', next.prefix()}, next));
}

Consumption Consumption::del(char c, Insertion next) {
  return Consumption(prepend(Step{StepKind::del, c, next.prefix()}, next));
}

Consumption::Consumption(std::vector<Step> steps) : steps_(std::move(steps)) {
  for (auto& s : steps_) {
    if (s.kind == StepKind::skip) s.expected = '\0';
  }
}

StepKind Consumption::head_kind() const {
  if (steps_.empty()) throw std::logic_error("Return has no head step");
  return steps_.front().kind;
}

char Consumption::head_char() const {
  if (steps_.empty()) throw std::logic_error("Return has no head step");
  return steps_.front().expected;
}

Insertion Consumption::rest() const {
  if (steps_.empty()) throw std::logic_error("Return has no rest");
  return Insertion(steps_.front().then_insert,
                   Consumption(std::vector<Step>(steps_.begin() + 1, steps_.end())));
}

Insertion::Insertion(std::string prefix, Consumption next)
    : prefix_(std::move(prefix)), next_(std::move(next)) {}

Editor Editor::fail() { return Editor(std::nullopt); }

Editor Editor::attempt(Insertion body) { return Editor(std::move(body)); }

Editor Editor::lift(std::optional<Insertion> body) { return Editor(std::move(body)); }

const Insertion& Editor::body() const {
  if (!body_) throw std::logic_error("Fail has no body");
  return *body_;
}

Insertion ins(std::string prefix, Consumption next) {
  std::vector<Step> steps = next.steps();
  if (!steps.empty() && steps.front().kind == StepKind::del) {
    prefix += steps.front().then_insert;
    steps.front().then_insert.clear();
  }
  return Insertion(std::move(prefix), Consumption(std::move(steps)));
}

const Insertion& done() {
  static const Insertion identity("", Consumption::ret());
  return identity;
}

bool is_normal(const Insertion& a) {
  for (const auto& s : a.steps()) {
    if (s.kind == StepKind::del && !s.then_insert.empty()) return false;
  }
  return true;
}

bool is_normal(const Editor& a) { return a.is_fail() || is_normal(a.body()); }

// ----------------------------------------------------------------------------
// Action

std::optional<std::string> action(const std::string& s, const Consumption& c) {
  return action(s, Insertion("", c));
}

std::optional<std::string> action(const std::string& s, const Insertion& a) {
  std::string out = a.prefix();
  std::size_t at = 0;
  for (const auto& step : a.steps()) {
    if (at >= s.size()) return std::nullopt;
    if (step.kind == StepKind::skip) {
      out += s[at];
    } else if (s[at] != step.expected) {
      return std::nullopt;
    }
    ++at;
    out += step.then_insert;
  }
  out.append(s, at);
  return out;
}

std::optional<std::string> action(const std::string& s, const Editor& a) {
  if (a.is_fail()) return std::nullopt;
  return action(s, a.body());
}

// ----------------------------------------------------------------------------
// Splicing

std::optional<Insertion> editor_insert(const Insertion& a, int i, char c) {
  if (i < 0) return std::nullopt;
  std::string prefix = a.prefix();
  std::vector<Step> steps = a.steps();
  long long at = i;
  for (std::size_t j = 0;; ++j) {
    std::string& text = j == 0 ? prefix : steps[j - 1].then_insert;
    if (at <= static_cast<long long>(text.size())) {
      text.insert(text.begin() + at, c);
      return normalize(std::move(prefix), std::move(steps));
    }
    at -= static_cast<long long>(text.size());
    if (j == steps.size()) break;
    if (steps[j].kind == StepKind::skip) --at;
  }
  // Lands at offset `at` >= 1 of the returned remainder.
  check_growth(steps.size(), at);
  for (long long k = 0; k < at; ++k) steps.push_back(Step{StepKind::skip, '\0', ""});
  steps.back().then_insert = std::string(1, c);
  return normalize(std::move(prefix), std::move(steps));
}

std::optional<Insertion> editor_delete(const Insertion& a, int i, char c) {
  if (i < 0) return std::nullopt;
  std::string prefix = a.prefix();
  std::vector<Step> steps = a.steps();
  long long at = i;
  for (std::size_t j = 0;; ++j) {
    std::string& text = j == 0 ? prefix : steps[j - 1].then_insert;
    if (at < static_cast<long long>(text.size())) {
      if (text[static_cast<std::size_t>(at)] != c) return std::nullopt;
      text.erase(text.begin() + at);
      return normalize(std::move(prefix), std::move(steps));
    }
    at -= static_cast<long long>(text.size());
    if (j == steps.size()) break;
    if (steps[j].kind == StepKind::skip) {
      if (at == 0) {
        steps[j].kind = StepKind::del;
        steps[j].expected = c;
        return normalize(std::move(prefix), std::move(steps));
      }
      --at;
    }
  }
  // Character `at` of the returned remainder.
  check_growth(steps.size(), at + 1);
  for (long long k = 0; k < at; ++k) steps.push_back(Step{StepKind::skip, '\0', ""});
  steps.push_back(Step{StepKind::del, c, ""});
  return normalize(std::move(prefix), std::move(steps));
}

std::optional<Editor> edit_insert(const Editor& a, int i, char c) {
  if (a.is_fail()) return a;
  return Editor::lift(editor_insert(a.body(), i, c));
}

std::optional<Editor> edit_delete(const Editor& a, int i, char c) {
  if (a.is_fail()) return a;
  return Editor::lift(editor_delete(a.body(), i, c));
}

Editor semantics(const Word<Edit>& w) {
  return Editor::lift(patch::action(done(), w));
}

bool word_equiv(const Word<Edit>& x, const Word<Edit>& y) {
  return semantics(x) == semantics(y);
}

bool is_total(const Editor& a) { return !a.is_fail() && a.body().steps().empty(); }

// ----------------------------------------------------------------------------
// Witnesses

std::optional<std::string> witness(const Def& p) {
  if (p.x.is_fail()) return std::nullopt;
  std::string s;
  for (const auto& step : p.x.body().steps()) {
    s += step.kind == StepKind::skip ? filler_char : step.expected;
  }
  return s;
}

std::optional<std::string> witness(const Undef& p) {
  if (is_total(p.x)) return std::nullopt;
  // A nonempty spine cannot read the empty string.
  return std::string();
}

std::optional<std::string> witness(const DefUndef& p) {
  auto accepted = witness(Def{p.accepted});
  if (!accepted) return std::nullopt;
  if (p.rejected.is_fail()) return accepted;
  const auto& xs = p.accepted.body().steps();
  const auto& ys = p.rejected.body().steps();
  if (xs.size() < ys.size()) return accepted;
  for (std::size_t k = 0; k < ys.size(); ++k) {
    if (ys[k].kind != StepKind::del) continue;
    char needed = ys[k].expected;
    if (xs[k].kind == StepKind::skip) {
      (*accepted)[k] = needed == filler_char ? 'b' : filler_char;
      return accepted;
    }
    if (xs[k].expected != needed) return accepted;
  }
  // Every input of the accepted domain passes the rejecting spine.
  return std::nullopt;
}

std::optional<std::string> witness(const Diff& p) {
  const Editor& x = p.left;
  const Editor& y = p.right;
  if (x == y) return std::nullopt;
  if (auto s = witness(DefUndef{x, y})) return s;
  if (auto s = witness(DefUndef{y, x})) return s;

  // Same domain, so both are Try with matching spines; distinct fresh
  // characters at the skips expose every difference in the insertions.
  const Insertion& a = x.body();
  const Insertion& b = y.body();
  std::vector<bool> used(256, false);
  auto mark_text = [&](const std::string& t) {
    for (char ch : t) used[static_cast<unsigned char>(ch)] = true;
  };
  for (const Insertion* e : {&a, &b}) {
    mark_text(e->prefix());
    for (const auto& step : e->steps()) mark_text(step.then_insert);
  }
  std::string candidates = char_order();
  for (int v = 1; v < 256; ++v) {
    char ch = static_cast<char>(v);
    if (candidates.find(ch) == std::string::npos) candidates += ch;
  }
  std::size_t next = 0;
  std::string s;
  for (const auto& step : a.steps()) {
    if (step.kind == StepKind::del) {
      s += step.expected;
      continue;
    }
    while (next < candidates.size() &&
           used[static_cast<unsigned char>(candidates[next])]) {
      ++next;
    }
    if (next == candidates.size()) return std::nullopt;
    s += candidates[next++];
  }
  if (action(s, x) == action(s, y)) return std::nullopt;
  return s;
}

Meta<bool> cons_eq(const Editor& x, const Editor& y) {
  return Meta<bool>(x == y || exists_some(Diff{x, y}));
}

// ----------------------------------------------------------------------------
// Rendering

namespace {

std::string show_steps(const std::vector<Step>& steps) {
  std::string out;
  for (const auto& step : steps) {
    out += step.kind == StepKind::skip
               ? std::string("Skip; ")
               : "Del " + purecheck::show(step.expected) + "; ";
    out += "Ins " + purecheck::show(step.then_insert) + "; ";
  }
  return out + "Return";
}

}  // namespace

std::string show(const Consumption& c) { return show_steps(c.steps()); }

std::string show(const Insertion& a) {
  return "Ins " + purecheck::show(a.prefix()) + "; " + show_steps(a.steps());
}

std::string show(const Editor& a) {
  if (a.is_fail()) return "Fail";
  return "Try[" + show(a.body()) + "]";
}

}  // namespace purecheck::automaton

namespace purecheck {

Generator<automaton::Editor> Some<automaton::Editor>::generator() {
  return gdistinct(gmap([](const patch::Word<patch::Edit>& w) {
                          return automaton::semantics(w);
                        },
                        default_generator<patch::Word<patch::Edit>>()));
}

}  // namespace purecheck
