#include "nodkit/ids.hpp"

#include <cctype>

namespace nodkit {

namespace {

bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

std::string_view run_at(std::string_view s, std::size_t pos) {
  std::size_t end = pos;
  bool digits = is_digit(s[pos]);
  while (end < s.size() && is_digit(s[end]) == digits) ++end;
  return s.substr(pos, end - pos);
}

int compare_numeric(std::string_view a, std::string_view b) {
  auto strip = [](std::string_view s) {
    std::size_t k = 0;
    while (k + 1 < s.size() && s[k] == '0') ++k;
    return s.substr(k);
  };
  std::string_view x = strip(a), y = strip(b);
  if (x.size() != y.size()) return x.size() < y.size() ? -1 : 1;
  int c = x.compare(y);
  return c < 0 ? -1 : (c > 0 ? 1 : 0);
}

}  // namespace

int id_compare(std::string_view a, std::string_view b) {
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    std::string_view ra = run_at(a, i), rb = run_at(b, j);
    bool da = is_digit(ra[0]), db = is_digit(rb[0]);
    int c;
    if (da && db) {
      c = compare_numeric(ra, rb);
    } else if (da != db) {
      c = da ? -1 : 1;
    } else {
      int k = ra.compare(rb);
      c = k < 0 ? -1 : (k > 0 ? 1 : 0);
    }
    if (c != 0) return c;
    i += ra.size();
    j += rb.size();
  }
  if (i < a.size()) return 1;
  if (j < b.size()) return -1;
  int k = a.compare(b);
  return k < 0 ? -1 : (k > 0 ? 1 : 0);
}

std::string indexed(std::string_view prefix, long i) {
  std::string s(prefix);
  s += std::to_string(i);
  return s;
}

}  // namespace nodkit
