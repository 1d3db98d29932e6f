#include "situkg/queries.h"

#include <array>
#include <string>

#include "situkg/error.h"

namespace situkg {
namespace detail {
extern const std::string_view k_cq01, k_cq02, k_cq03, k_cq04, k_cq05, k_cq06, k_cq07, k_cq08, k_cq09,
    k_cq10, k_cq11, k_explain;
}  // namespace detail

std::string_view competency_query(int number) {
  const std::array<const std::string_view*, kCompetencyQueryCount> texts = {
      &detail::k_cq01, &detail::k_cq02, &detail::k_cq03, &detail::k_cq04, &detail::k_cq05, &detail::k_cq06,
      &detail::k_cq07, &detail::k_cq08, &detail::k_cq09, &detail::k_cq10, &detail::k_cq11};
  if (number < 1 || number > kCompetencyQueryCount) {
    throw Error("competency question number must be between 1 and 11, got " + std::to_string(number));
  }
  return *texts[static_cast<std::size_t>(number - 1)];
}

std::string_view explanation_query_template() { return detail::k_explain; }

}  // namespace situkg
