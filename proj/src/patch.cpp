#include "purecheck/patch.hpp"

#include <cctype>
#include <charconv>
#include <cstdio>
#include <limits>

namespace purecheck::patch {

Word<Edit> from_list(const std::vector<Edit>& edits) {
  Word<Edit> w;
  w.literals.reserve(edits.size());
  for (const auto& e : edits) w.literals.push_back(positive(e));
  return w;
}

std::vector<Literal<Edit>> to_list(const Word<Edit>& w) { return w.literals; }

std::optional<std::string> string_insert(const std::string& s, int i, char c) {
  if (i < 0 || static_cast<std::size_t>(i) > s.size()) return std::nullopt;
  std::string out = s;
  out.insert(out.begin() + i, c);
  return out;
}

std::optional<std::string> string_delete(const std::string& s, int i, char c) {
  if (i < 0 || static_cast<std::size_t>(i) >= s.size()) return std::nullopt;
  if (s[static_cast<std::size_t>(i)] != c) return std::nullopt;
  std::string out = s;
  out.erase(out.begin() + i);
  return out;
}

// ----------------------------------------------------------------------------
// Rendering

namespace {

std::string render_arg(char c) {
  switch (c) {
    case '\\': return "\\\\";
    case '\n': return "\\n";
    case '\t': return "\\t";
    case '\r': return "\\r";
    default: break;
  }
  auto u = static_cast<unsigned char>(c);
  if (u < 0x20 || u >= 0x7f) {
    char buf[5];
    std::snprintf(buf, sizeof buf, "\\x%02x", u);
    return buf;
  }
  return std::string(1, c);
}

int hex_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

class LiteralParser {
 public:
  explicit LiteralParser(std::string_view text, std::size_t base = 0)
      : text_(text), base_(base) {}

  Literal<Edit> literal() {
    Literal<Edit> l;
    if (peek() == '~') {
      ++at_;
      l.polarity = Polarity::negative;
    }
    l.atom = edit();
    return l;
  }

  Edit edit() {
    Edit e;
    char sign = next("expected '+' or '-'");
    if (sign == '+') {
      e.op = EditOp::insert;
    } else if (sign == '-') {
      e.op = EditOp::del;
    } else {
      fail("expected '+' or '-'", at_ - 1);
    }
    std::size_t start = at_;
    while (at_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[at_]))) {
      ++at_;
    }
    if (start == at_) fail("expected a position", start);
    auto digits = text_.substr(start, at_ - start);
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), e.pos);
    if (ec != std::errc{}) fail("position out of range", start);
    if (next("expected ':'") != ':') fail("expected ':'", at_ - 1);
    e.arg = argument();
    return e;
  }

  bool done() const { return at_ == text_.size(); }
  std::size_t offset() const { return at_; }

  [[noreturn]] void fail(const std::string& what, std::size_t where) const {
    throw ParseError(what, base_ + where);
  }

 private:
  char peek() const { return at_ < text_.size() ? text_[at_] : '\0'; }

  char next(const char* what) {
    if (at_ >= text_.size()) fail(what, at_);
    return text_[at_++];
  }

  char argument() {
    char c = next("expected a character");
    if (c != '\\') return c;
    char k = next("incomplete escape");
    switch (k) {
      case '\\': return '\\';
      case 'n': return '\n';
      case 't': return '\t';
      case 'r': return '\r';
      case 'x': {
        int hi = hex_value(next("incomplete \\x escape"));
        int lo = hex_value(next("incomplete \\x escape"));
        if (hi < 0 || lo < 0) fail("bad \\x escape", at_ - 2);
        return static_cast<char>(hi * 16 + lo);
      }
      default: fail("unknown escape", at_ - 1);
    }
  }

  std::string_view text_;
  std::size_t base_;
  std::size_t at_ = 0;
};

}  // namespace

ParseError::ParseError(const std::string& what, std::size_t offset)
    : std::runtime_error(what + " at offset " + std::to_string(offset)),
      offset_(offset) {}

std::string render(const Edit& e) {
  return (e.op == EditOp::insert ? "+" : "-") + std::to_string(e.pos) + ":" +
         render_arg(e.arg);
}

std::string render(const Literal<Edit>& l) {
  return (l.polarity == Polarity::negative ? "~" : "") + render(l.atom);
}

std::string render(const Word<Edit>& w) {
  std::string out;
  for (std::size_t i = 0; i < w.literals.size(); ++i) {
    if (i != 0) out += ',';
    out += render(w.literals[i]);
  }
  return out;
}

Edit parse_edit(std::string_view text) {
  LiteralParser p(text);
  Edit e = p.edit();
  if (!p.done()) p.fail("trailing input", p.offset());
  return e;
}

Literal<Edit> parse_literal(std::string_view text) {
  LiteralParser p(text);
  Literal<Edit> l = p.literal();
  if (!p.done()) p.fail("trailing input", p.offset());
  return l;
}

Word<Edit> parse_word(std::string_view text) {
  Word<Edit> w;
  std::size_t at = 0;
  while (at < text.size()) {
    char c = text[at];
    if (c == ',' || c == '\n' || c == '\r' || c == ' ' || c == '\t') {
      ++at;
      continue;
    }
    if (c == '#') {
      while (at < text.size() && text[at] != '\n') ++at;
      continue;
    }
    LiteralParser p(text.substr(at), at);
    w.literals.push_back(p.literal());
    at += p.offset();
    if (at < text.size() && text[at] == '\r') ++at;
    if (at < text.size()) {
      if (text[at] != ',' && text[at] != '\n') {
        throw ParseError("expected ',' or newline", at);
      }
      ++at;
    }
  }
  return w;
}

std::string show(Polarity p) {
  return p == Polarity::positive ? "Positive" : "Negative";
}

std::string show(EditOp op) { return op == EditOp::insert ? "Insert" : "Delete"; }

std::string show(const Edit& e) { return render(e); }
std::string show(const Literal<Edit>& l) { return render(l); }
std::string show(const Word<Edit>& w) { return "[" + render(w) + "]"; }

}  // namespace purecheck::patch

namespace purecheck {

Generator<patch::Edit> Some<patch::Edit>::generator() {
  return gmap(
      [](const std::pair<std::pair<patch::EditOp, int>, char>& p) {
        return patch::Edit{p.first.first, p.first.second, p.second};
      },
      gpair(gpair(default_generator<patch::EditOp>(), gnatural()), gchar()));
}

}  // namespace purecheck
