#include "tropmat/trop_value.hpp"

#include "tropmat/error.hpp"

namespace tropmat {

TropValue parse_trop(const std::string& text) {
  if (text == "inf" || text == "Inf" || text == "INF" || text == "oo")
    return TropValue::infinity();
  return TropValue(parse_rational(text));
}

}  // namespace tropmat
