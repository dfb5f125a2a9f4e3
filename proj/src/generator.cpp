#include "purecheck/generator.hpp"

namespace purecheck {

Generator<bool> gbool() { return gelements(std::vector<bool>{false, true}); }

int zigzag(std::size_t index) {
  if (index == 0) return 0;
  auto magnitude = static_cast<int>((index + 1) / 2);
  return index % 2 == 1 ? magnitude : -magnitude;
}

Generator<int> gint() {
  return Generator<int>([](std::size_t n) {
    std::vector<int> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = zigzag(i);
    return out;
  });
}

Generator<int> gnatural() {
  return Generator<int>([](std::size_t n) {
    std::vector<int> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = static_cast<int>(i);
    return out;
  });
}

const std::string& char_order() {
  static const std::string order = [] {
    std::string s;
    for (char c = 'a'; c <= 'z'; ++c) s += c;
    for (char c = '0'; c <= '9'; ++c) s += c;
    for (int c = 0x20; c < 0x7f; ++c) {
      auto ch = static_cast<char>(c);
      if ((ch >= 'a' && ch <= 'z') || (ch >= '0' && ch <= '9')) continue;
      s += ch;
    }
    return s;
  }();
  return order;
}

Generator<char> gchar() {
  const auto& order = char_order();
  return gelements(std::vector<char>(order.begin(), order.end()));
}

Generator<std::string> gstring(std::string alphabet) {
  return Generator<std::string>([alphabet = std::move(alphabet)](std::size_t n) {
    std::vector<std::string> out;
    out.reserve(n);
    out.emplace_back();
    if (alphabet.empty()) return out;
    // Odometer over digit indices; each wrap-around of the most significant
    // digit moves on to the next length.
    std::vector<std::size_t> digits;
    while (out.size() < n) {
      std::size_t pos = digits.size();
      while (pos > 0) {
        --pos;
        if (++digits[pos] < alphabet.size()) break;
        digits[pos] = 0;
        if (pos == 0) {
          digits.push_back(0);
          break;
        }
      }
      if (digits.empty()) digits.push_back(0);
      std::string s;
      s.reserve(digits.size());
      for (auto d : digits) s += alphabet[d];
      out.push_back(std::move(s));
    }
    return out;
  });
}

std::vector<std::pair<std::size_t, std::size_t>> diagonal_indices(
    std::size_t rows, std::size_t cols, std::size_t limit) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  if (rows == 0 || cols == 0) return out;
  const std::size_t last_diagonal = rows + cols - 2;
  for (std::size_t d = 0; d <= last_diagonal && out.size() < limit; ++d) {
    std::size_t lo = d >= cols ? d - cols + 1 : 0;
    std::size_t hi = std::min(d, rows - 1);
    for (std::size_t i = lo; i <= hi && out.size() < limit; ++i) {
      out.emplace_back(i, d - i);
    }
  }
  return out;
}

}  // namespace purecheck
