#pragma once

#include <string_view>

namespace situkg {

inline constexpr int kCompetencyQueryCount = 11;

/// Bundled text of competency question `number` (1..11). Throws Error for
/// any other number.
std::string_view competency_query(int number);

/// Bundled explanation query with its `{{entity_ID}}` and `{{label}}` slots.
std::string_view explanation_query_template();

}  // namespace situkg
