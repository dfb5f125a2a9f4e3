#include "purecheck/show.hpp"

#include <cstdio>

namespace purecheck {

std::string show(bool value) { return value ? "true" : "false"; }
std::string show(int value) { return std::to_string(value); }
std::string show(long value) { return std::to_string(value); }
std::string show(long long value) { return std::to_string(value); }
std::string show(unsigned value) { return std::to_string(value); }
std::string show(unsigned long value) { return std::to_string(value); }
std::string show(unsigned long long value) { return std::to_string(value); }

std::string escape_char(char c, char quote) {
  switch (c) {
    case '\\': return "\\\\";
    case '\n': return "\\n";
    case '\t': return "\\t";
    case '\r': return "\\r";
    default: break;
  }
  if (c == quote) return std::string("\\") + c;
  auto u = static_cast<unsigned char>(c);
  if (u < 0x20 || u >= 0x7f) {
    char buf[5];
    std::snprintf(buf, sizeof buf, "\\x%02x", u);
    return buf;
  }
  return std::string(1, c);
}

std::string show(char value) { return "'" + escape_char(value, '\'') + "'"; }

std::string show(const std::string& value) {
  std::string out = "\"";
  for (char c : value) out += escape_char(c, '"');
  return out + "\"";
}

std::string show(const char* value) { return show(std::string(value)); }

std::string show(Unit) { return "()"; }

std::string truncate(std::string text, std::size_t limit) {
  if (text.size() <= limit) return text;
  const std::string marker = "...";
  if (limit <= marker.size()) return text.substr(0, limit);
  text.resize(limit - marker.size());
  return text + marker;
}

}  // namespace purecheck
