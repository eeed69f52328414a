#include "tripow/rational.hpp"

#include <charconv>

namespace tripow {

namespace {

std::int64_t parse_int(std::string_view text) {
  std::int64_t value = 0;
  const auto* begin = text.data();
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc{} || ptr != end) {
    throw DomainError("Rational::parse: bad integer '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  if (text.empty()) throw DomainError("Rational::parse: empty string");
  const std::size_t slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text), 1);
  return Rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

}  // namespace tripow
