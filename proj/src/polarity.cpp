#include "dsg/polarity.hpp"

#include "dsg/text_util.hpp"

namespace dsg {

std::string_view to_string(Polarity p) {
  return p == Polarity::Positive ? "positive" : "negative";
}

std::optional<Polarity> parse_polarity(std::string_view text) {
  std::string lowered = to_lower(trim(text));
  if (lowered == "positive" || lowered == "pos" || lowered == "+" || lowered == "+1") {
    return Polarity::Positive;
  }
  if (lowered == "negative" || lowered == "neg" || lowered == "-" || lowered == "-1") {
    return Polarity::Negative;
  }
  return std::nullopt;
}

}  // namespace dsg
