#pragma once

#include <string>
#include <vector>

#include "situkg/graph.h"

namespace situkg::testing {

// Each check returns human-readable failure descriptions; empty means pass.

/// All competency queries parse, evaluate with at least one row, agree with
/// the brute-force evaluator, and contain the pinned bindings.
std::vector<std::string> check_competency_suite(const Graph& materialized);

/// explain(ARTstract_14978, "impressionism") gives exactly the pinned
/// context, and its narrative names every pinned value.
std::vector<std::string> check_impressionism_explanation(const Graph& materialized);

}  // namespace situkg::testing
