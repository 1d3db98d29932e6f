#include "fixtures.h"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "situkg/builder.h"
#include "situkg/schema.h"
#include "situkg/turtle.h"

namespace situkg::testing {

std::string data_path(const std::string& relative) { return std::string(SITUKG_DATA_DIR) + "/" + relative; }

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Graph load_fixture_raw() {
  Graph g = parse_turtle(read_text(data_path("fixtures/images_kg.ttl")));
  g.insert_all(parse_turtle(read_text(data_path("fixtures/situations_kg.ttl"))));
  return g;
}

Graph load_fixture() {
  Graph g = load_fixture_raw();
  materialize_in_place(g, builtin_schema());
  return g;
}

Graph load_built_fixture() {
  const auto schema = builtin_schema();
  const auto events = parse_event_lines(read_text(data_path("events/toy_events.jsonl")), &schema);
  const Graph built = build_graph(events, schema);
  Graph g = parse_turtle(serialize_turtle(built, built.prefixes()));
  materialize_in_place(g, schema);
  return g;
}

}  // namespace situkg::testing
