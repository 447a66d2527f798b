#include "girthscope/length.hpp"

#include <charconv>

#include "girthscope/errors.hpp"

namespace girthscope {

Length Length::parse(std::string_view text) {
  if (text == "inf" || text == "infinity" || text == "INF" || text == "\xE2\x88\x9E") return infinite();
  value_type v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size())
    throw ValidationError("'" + std::string(text) + "' is not a length (expected a non-negative integer or inf)");
  return Length(v);
}

}  // namespace girthscope
