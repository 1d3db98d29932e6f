#pragma once

#include <string>

#include "situkg/graph.h"

namespace situkg::testing {

/// Absolute path of a file under the repository's data/ directory.
std::string data_path(const std::string& relative);

std::string read_text(const std::string& path);

/// images_kg.ttl and situations_kg.ttl merged, as written on disk.
Graph load_fixture_raw();

/// load_fixture_raw() after materialization with the built-in schema.
Graph load_fixture();

/// The toy event file built, serialized, re-parsed and materialized.
Graph load_built_fixture();

}  // namespace situkg::testing
