#pragma once

#include <optional>
#include <string_view>

namespace dsg {

/// Binary word/sentence sentiment. These are also the two node states of the
/// sentiment graph.
enum class Polarity { Positive, Negative };

constexpr Polarity opposite(Polarity p) {
  return p == Polarity::Positive ? Polarity::Negative : Polarity::Positive;
}

std::string_view to_string(Polarity p);

/// Accepts "positive"/"pos"/"+"/"+1" and "negative"/"neg"/"-"/"-1",
/// case-insensitive.
std::optional<Polarity> parse_polarity(std::string_view text);

}  // namespace dsg
