#pragma once

#include <string>

#include "frobext/extcalc.hpp"
#include "frobext/graded.hpp"
#include "frobext/poly.hpp"

#include "json.hpp"

namespace frobext {
namespace render {

enum class Format { Text, Json, Latex };

Format parse_format(const std::string& name);

/// [[degree, coefficient], ...] ascending.
nlohmann::json poincare_json(const PoincarePoly& p);

/// {"value": n} or {"symbolic": [i, k]}; mixed shifts get both keys.
nlohmann::json shift_json(const ShiftSpec& s);

nlohmann::json partition_json(const Partition& p);

/// "1 + t^2 + t^4", "t^{h(1,0)} * (2)", "t^3 * (1 + t^2)".
std::string answer_value_text(const ExtAnswer& a);
std::string answer_value_latex(const ExtAnswer& a);

std::string label_text(const ExtAnswer& a);  // "Specht[2,1]" or ""

}  // namespace render
}  // namespace frobext
