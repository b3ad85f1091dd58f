#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace bondlat {

/// External name of a vertex or arc.
///
/// Names that spell a decimal integer compare numerically and sort before
/// all other names; the rest compare lexicographically. Every "ascending id"
/// rule in the library refers to this order.
class Id {
 public:
  Id() = default;
  explicit Id(std::string name);
  explicit Id(std::int64_t number);

  const std::string& str() const { return name_; }
  std::optional<std::int64_t> as_integer() const { return number_; }

  friend bool operator==(const Id& a, const Id& b) { return a.name_ == b.name_; }
  friend std::strong_ordering operator<=>(const Id& a, const Id& b);

 private:
  std::string name_;
  std::optional<std::int64_t> number_;
};

std::optional<std::int64_t> parse_integer(std::string_view text);

}  // namespace bondlat
