#include "situkg/cli.h"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "situkg/builder.h"
#include "situkg/explain.h"
#include "situkg/queries.h"
#include "situkg/query.h"
#include "situkg/schema.h"
#include "situkg/turtle.h"
#include "situkg/validation.h"

namespace situkg {

namespace {

// Raised inside command handlers; carries the exit code to return.
struct CommandFailure {
  int code;
  std::string message;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CommandFailure{kExitUsage, "cannot read '" + path + "'"};
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw CommandFailure{kExitUsage, "error while reading '" + path + "'"};
  return buf.str();
}

Graph load_graphs(const std::vector<std::string>& paths) {
  Graph merged;
  std::string problems;
  for (const auto& path : paths) {
    auto result = try_parse_turtle(read_file(path));
    for (const auto& e : result.errors) problems += path + ":" + e.to_string() + "\n";
    merged.insert_all(result.graph);
  }
  if (!problems.empty()) {
    problems.pop_back();
    throw CommandFailure{kExitUsage, problems};
  }
  return merged;
}

// Writes `text` to `path`, or to `out` when path is empty.
void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw CommandFailure{kExitUsage, "cannot write '" + path + "'"};
  file << text;
  if (!file) throw CommandFailure{kExitUsage, "error while writing '" + path + "'"};
}

std::string cell_text(const std::optional<Term>& t, const PrefixMap& prefixes) {
  if (!t) return "";
  if (t->is_iri()) {
    if (auto curie = prefixes.shorten(t->value())) return *curie;
    return "<" + t->value() + ">";
  }
  if (t->is_blank()) return "_:" + t->value();
  return t->value();
}

std::string render_solutions(const SolutionSequence& s, const std::string& format, const PrefixMap& prefixes) {
  std::ostringstream out;
  std::vector<std::vector<std::string>> cells;
  for (const auto& row : s.rows) {
    std::vector<std::string> line;
    for (const auto& v : row) line.push_back(cell_text(v, prefixes));
    cells.push_back(std::move(line));
  }
  if (format == "tsv") {
    auto tsv_safe = [](std::string v) {
      std::replace(v.begin(), v.end(), '\t', ' ');
      std::replace(v.begin(), v.end(), '\n', ' ');
      return v;
    };
    for (std::size_t i = 0; i < s.variables.size(); ++i) out << (i ? "\t" : "") << s.variables[i];
    out << '\n';
    for (const auto& line : cells) {
      for (std::size_t i = 0; i < line.size(); ++i) out << (i ? "\t" : "") << tsv_safe(line[i]);
      out << '\n';
    }
    return out.str();
  }
  if (format == "text") {
    for (std::size_t r = 0; r < cells.size(); ++r) {
      if (r) out << '\n';
      for (std::size_t i = 0; i < s.variables.size(); ++i) {
        out << '?' << s.variables[i] << " = " << (s.rows[r][i] ? cells[r][i] : "(unbound)") << '\n';
      }
    }
    out << "(" << s.size() << (s.size() == 1 ? " row" : " rows") << ")\n";
    return out.str();
  }
  // table
  std::vector<std::size_t> width;
  for (const auto& v : s.variables) width.push_back(v.size() + 1);
  for (const auto& line : cells) {
    for (std::size_t i = 0; i < line.size(); ++i) width[i] = std::max(width[i], line[i].size());
  }
  auto print_line = [&](const std::vector<std::string>& line) {
    std::string text;
    for (std::size_t i = 0; i < line.size(); ++i) {
      if (i) text += " | ";
      text += line[i];
      if (i + 1 < line.size()) text.append(width[i] - line[i].size(), ' ');
    }
    out << text << '\n';
  };
  std::vector<std::string> header;
  for (const auto& v : s.variables) header.push_back("?" + v);
  print_line(header);
  std::string rule;
  for (std::size_t i = 0; i < width.size(); ++i) {
    if (i) rule += "-+-";
    rule.append(width[i], '-');
  }
  out << rule << '\n';
  for (const auto& line : cells) print_line(line);
  out << "(" << s.size() << (s.size() == 1 ? " row" : " rows") << ")\n";
  return out.str();
}

struct Options {
  std::vector<std::string> inputs;
  std::string output;
  std::string format;
  bool no_inference = false;
  bool strict = false;
  int cq = 0;
  std::string query_file;
  std::vector<std::string> params;
  std::string entity;
  std::string label;
};

class Cli {
 public:
  Cli(std::ostream& out, std::ostream& err) : out_(out), err_(err) {
    if (const char* env = std::getenv("SITUKG_PREFIX"); env != nullptr && *env != '\0') base_ = env;
    schema_.emplace(builtin_schema(base_));
  }

  int run(const std::vector<std::string>& args) {
    CLI::App app{"Knowledge-graph engine for situated data annotations", "situkg"};
    app.require_subcommand(1, 1);
    Options opt;

    auto* validate = app.add_subcommand("validate", "Check graphs against the built-in schema");
    validate->add_option("files", opt.inputs, "Turtle files")->required();
    validate->add_option("--format", opt.format, "Report format")->check(CLI::IsMember({"text", "json"}));
    validate->add_flag("--strict", opt.strict, "Treat warnings as failures");
    validate->add_flag("--no-inference", opt.no_inference, "Skip materialization");

    auto* query = app.add_subcommand("query", "Run a competency question or a query file");
    query->add_option("files", opt.inputs, "Turtle files")->required();
    auto* cq = query->add_option("--cq", opt.cq, "Competency question number (1-11)");
    auto* qf = query->add_option("--query", opt.query_file, "Query file");
    cq->excludes(qf);
    query->add_option("--param", opt.params, "Template parameter NAME=VALUE")->allow_extra_args(false);
    query->add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"table", "tsv", "text"}));
    query->add_option("--output", opt.output, "Write results to this file");
    query->add_flag("--no-inference", opt.no_inference, "Skip materialization");

    auto* explain_cmd = app.add_subcommand("explain", "Explain how a label came to be attached to an entity");
    explain_cmd->add_option("files", opt.inputs, "Turtle files")->required();
    explain_cmd->add_option("--entity", opt.entity, "Entity local name")->required();
    explain_cmd->add_option("--label", opt.label, "Label string")->required();
    explain_cmd->add_option("--output", opt.output, "Write narratives to this file");
    explain_cmd->add_flag("--no-inference", opt.no_inference, "Skip materialization");

    auto* build = app.add_subcommand("build", "Build a graph from a JSON Lines event file");
    build->add_option("events", opt.inputs, "Event file")->required()->expected(1);
    build->add_option("--output", opt.output, "Write Turtle to this file");

    auto* stats = app.add_subcommand("stats", "Print graph counts");
    stats->add_option("files", opt.inputs, "Turtle files")->required();

    auto* infer = app.add_subcommand("infer", "Write the materialized graph");
    infer->add_option("files", opt.inputs, "Turtle files")->required();
    infer->add_option("--output", opt.output, "Write Turtle to this file");

    std::vector<std::string> reversed(args.size() > 1 ? args.begin() + 1 : args.end(), args.end());
    std::reverse(reversed.begin(), reversed.end());
    try {
      app.parse(reversed);
    } catch (const CLI::ParseError& e) {
      if (e.get_exit_code() == 0) {
        out_ << app.help();
        return kExitOk;
      }
      err_ << "error: " << e.what() << "\n";
      return kExitUsage;
    }

    try {
      if (validate->parsed()) return cmd_validate(opt);
      if (query->parsed()) {
        if (cq->count() == 0 && qf->count() == 0) throw CommandFailure{kExitUsage, "query needs --cq N or --query FILE"};
        return cmd_query(opt, cq->count() > 0);
      }
      if (explain_cmd->parsed()) return cmd_explain(opt);
      if (build->parsed()) return cmd_build(opt);
      if (stats->parsed()) return cmd_stats(opt);
      if (infer->parsed()) return cmd_infer(opt);
    } catch (const CommandFailure& f) {
      err_ << "error: " << f.message << "\n";
      return f.code;
    } catch (const Error& e) {
      err_ << "error: " << e.what() << "\n";
      return kExitUsage;
    }
    return kExitUsage;
  }

 private:
  Graph load(const Options& opt) {
    Graph g = load_graphs(opt.inputs);
    if (!opt.no_inference) materialize_in_place(g, *schema_);
    return g;
  }

  PrefixMap display_prefixes() const { return PrefixMap::standard(base_); }

  int cmd_validate(const Options& opt) {
    Graph g = load(opt);
    ValidationReport report = validate(g, *schema_);
    if (opt.format == "json") {
      out_ << report.to_json();
    } else {
      out_ << report.to_text();
      out_ << report.error_count() << (report.error_count() == 1 ? " error, " : " errors, ") << report.warning_count()
           << (report.warning_count() == 1 ? " warning\n" : " warnings\n");
    }
    if (report.error_count() > 0) return kExitDomainFailure;
    if (opt.strict && report.warning_count() > 0) return kExitDomainFailure;
    return kExitOk;
  }

  int cmd_query(const Options& opt, bool bundled) {
    std::string text;
    if (bundled) {
      if (opt.cq < 1 || opt.cq > kCompetencyQueryCount) {
        throw CommandFailure{kExitUsage, "--cq must be between 1 and " + std::to_string(kCompetencyQueryCount) +
                                             ", got " + std::to_string(opt.cq)};
      }
      text = std::string(competency_query(opt.cq));
    } else {
      text = read_file(opt.query_file);
    }
    QueryParams params;
    for (const auto& p : opt.params) {
      auto eq = p.find('=');
      if (eq == std::string::npos || eq == 0) throw CommandFailure{kExitUsage, "--param expects NAME=VALUE, got '" + p + "'"};
      params[p.substr(0, eq)] = p.substr(eq + 1);
    }
    text = substitute_params(text, params);
    Graph g = load(opt);
    QueryAst ast = parse_query(text, PrefixMap::standard(base_));
    SolutionSequence solutions = evaluate(g, ast);
    emit(render_solutions(solutions, opt.format.empty() ? "table" : opt.format, display_prefixes()), opt.output, out_);
    return kExitOk;
  }

  int cmd_explain(const Options& opt) {
    // Reject bad inputs before touching the files.
    explanation_query_text(opt.entity, opt.label, base_);
    Graph g = load(opt);
    auto contexts = explain(g, opt.entity, opt.label, base_);
    if (contexts.empty()) {
      out_ << "no annotation found\n";
      return kExitOk;
    }
    std::string text;
    for (std::size_t i = 0; i < contexts.size(); ++i) {
      if (i) text += "\n";
      text += render_narrative(contexts[i]) + "\n";
    }
    emit(text, opt.output, out_);
    return kExitOk;
  }

  int cmd_build(const Options& opt) {
    const std::string text = read_file(opt.inputs.front());
    std::vector<AnnotationEvent> events;
    Graph g;
    try {
      events = parse_event_lines(text, &*schema_);
      g = build_graph(events, *schema_);
    } catch (const EventFileError& e) {
      std::string lines;
      for (const auto& [line, message] : e.problems()) {
        err_ << opt.inputs.front() << ":" << line << ": " << message << "\n";
        lines += (lines.empty() ? "" : ", ") + std::to_string(line);
      }
      throw CommandFailure{kExitDomainFailure, "invalid events on line(s) " + lines};
    } catch (const ConflictError& e) {
      throw CommandFailure{kExitDomainFailure, e.what()};
    }
    emit(serialize_turtle(g, g.prefixes()), opt.output, out_);
    std::ostream& note = opt.output.empty() ? err_ : out_;
    note << "built " << g.size() << " triples from " << events.size() << (events.size() == 1 ? " event" : " events");
    if (!opt.output.empty()) note << " into " << opt.output;
    note << "\n";
    return kExitOk;
  }

  // Counts describe the data as written: no materialization, since that
  // would add the schema's own subClassOf axioms. Class counts are
  // subclass-aware instead.
  int cmd_stats(const Options& opt) {
    const Graph g = load_graphs(opt.inputs);
    std::set<Term, TermLess> subjects;
    for (const auto& t : g.triples()) subjects.insert(t.subject);
    const Term type = Term::iri(iri::kRdfType);
    auto instances = [&](std::string_view local) {
      std::set<Term, TermLess> nodes;
      for (const auto& t : g.match({std::nullopt, type, std::nullopt})) {
        if (t.object.is_iri() && schema_->is_subclass_of(t.object.value(), schema_->iri(local))) {
          nodes.insert(t.subject);
        }
      }
      return nodes.size();
    };
    std::set<Term, TermLess> entries;
    for (auto local : {"annotationWithLexicalEntry", "isAnnotatedWithLexicalEntry"}) {
      for (const auto& t : g.match({std::nullopt, schema_->term(local), std::nullopt})) entries.insert(t.object);
    }
    out_ << "triples: " << g.size() << "\n"
         << "subjects: " << subjects.size() << "\n"
         << "annotations: " << instances("Annotation") << "\n"
         << "annotation situations: " << instances("AnnotationSituation") << "\n"
         << "annotators: " << instances("Annotator") << "\n"
         << "images: " << instances("Image") << "\n"
         << "lexical entries: " << entries.size() << "\n";
    return kExitOk;
  }

  int cmd_infer(const Options& opt) {
    Graph g = load_graphs(opt.inputs);
    const std::size_t added = materialize_in_place(g, *schema_);
    PrefixMap prefixes = display_prefixes();
    prefixes.merge(g.prefixes());
    emit(serialize_turtle(g, prefixes), opt.output, out_);
    (opt.output.empty() ? err_ : out_) << "inferred " << added << " triples (" << g.size() << " total)\n";
    return kExitOk;
  }

  std::ostream& out_;
  std::ostream& err_;
  std::string base_{ns::kSituAnnotate};
  std::optional<OntologySchema> schema_;
};

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  return Cli(out, err).run(args);
}

}  // namespace situkg
