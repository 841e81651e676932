#include "maxplus/value.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <string>

#include "maxplus/error.hpp"

namespace maxplus {

namespace {

std::string lowercase(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Value parse_value(std::string_view text) {
  const std::string_view t = trim(text);
  const std::string lower = lowercase(t);
  if (lower == "-inf") return kNegInf;
  if (lower == "+inf" || lower == "inf") return kPosInf;

  double v = 0.0;
  const char* first = t.data();
  const char* last = t.data() + t.size();
  if (first != last && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (t.empty() || ec != std::errc{} || ptr != last || !std::isfinite(v)) {
    throw Error(Errc::ParseError, "not a max-plus value: '" + std::string(text) + "'");
  }
  return Value{v};
}

std::string format_value(Value v) {
  if (v.is_neg_inf()) return "-inf";
  if (v.is_pos_inf()) return "+inf";
  const double x = v.finite();
  char buf[64];
  if (x == std::trunc(x) && std::abs(x) < 9007199254740992.0) {
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, static_cast<long long>(x));
    return std::string(buf, ptr);
  }
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, ptr);
}

}  // namespace maxplus
