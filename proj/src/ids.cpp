#include "bondlat/ids.hpp"

#include <charconv>

namespace bondlat {

std::optional<std::int64_t> parse_integer(std::string_view text) {
  if (text.empty()) return std::nullopt;
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) return std::nullopt;
  // Only canonical spellings count as numbers, so "007" and "1" stay distinct.
  if (std::to_string(value) != text) return std::nullopt;
  return value;
}

Id::Id(std::string name) : name_(std::move(name)), number_(parse_integer(name_)) {}

Id::Id(std::int64_t number) : name_(std::to_string(number)), number_(number) {}

std::strong_ordering operator<=>(const Id& a, const Id& b) {
  if (a.number_ && b.number_) return *a.number_ <=> *b.number_;
  if (a.number_) return std::strong_ordering::less;
  if (b.number_) return std::strong_ordering::greater;
  return a.name_.compare(b.name_) <=> 0;
}

}  // namespace bondlat
