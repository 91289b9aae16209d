// Command-line front end. Exit codes: 0 computed or verified, 1 check failed,
// 2 input error.
#include <filesystem>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "stringob/corpus.hpp"
#include "stringob/drawing.hpp"
#include "stringob/figures.hpp"
#include "stringob/generators.hpp"
#include "stringob/io.hpp"
#include "stringob/obstruction.hpp"
#include "stringob/strings.hpp"

namespace fs = std::filesystem;
using namespace stringob;
using io::json;

namespace {

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kInputError = 2;

// Graph from family tokens, or from a graph JSON file if the only token is one.
Graph load_graph(const std::vector<std::string>& tokens) {
  if (tokens.size() == 1 && fs::is_regular_file(tokens[0])) return io::graph_from_json(io::read_json_file(tokens[0]));
  return generate_from_tokens(tokens);
}

void emit(const json& j, const std::string& out) {
  if (out.empty() || out == "-") {
    std::cout << j.dump(2) << "\n";
  } else {
    io::write_text_file(out, j.dump(2) + "\n");
  }
}

// The transcribed figure drawing for a named family, if there is one.
std::optional<Drawing> figure_drawing(const std::vector<std::string>& tokens) {
  if (tokens.empty()) return std::nullopt;
  if (tokens[0] == "heawood" && tokens.size() == 1) return figures::heawood_drawing();
  if (tokens[0] == "gp" && tokens.size() == 1) return figures::gp_drawing();
  if (tokens[0] == "c_cbar" && tokens.size() == 2) return figures::c_cbar_drawing(std::stoul(tokens[1]));
  return std::nullopt;
}

struct ObstructionArgs {
  std::vector<std::string> graph;
  std::string pairs = "s";
  std::string mode = "mod2";
  std::string layout = "moment";
  std::uint64_t seed = 1;
  std::string drawing;
  std::string svg;
  std::string expect;
  std::string out;
};

int cmd_obstruction(const ObstructionArgs& args) {
  const Graph g = load_graph(args.graph);
  const PairKind kind = parse_pair_kind(args.pairs);
  const Mode mode = parse_mode(args.mode);
  auto pairs = std::make_shared<EdgePairSet>(pair_set(g, kind));
  const Graph& h = pairs->graph();

  Drawing d;
  if (!args.drawing.empty()) {
    d = io::drawing_from_json(io::read_json_file(args.drawing));
  } else if (args.layout == "figure") {
    auto fig = figure_drawing(args.graph);
    if (!fig) throw std::invalid_argument("no figure layout for this graph");
    d = kind == PairKind::sd ? subdivide_drawing(*fig, *pairs->subdivision()) : *fig;
  } else if (args.layout == "moment") {
    d = layout_moment_curve(h);
  } else if (args.layout == "convex") {
    std::vector<VertexId> order(h.vertex_count());
    for (VertexId v = 0; v < order.size(); ++v) order[v] = v;
    d = layout_convex_order(h, order);
  } else if (args.layout == "random") {
    d = layout_random(h, args.seed);
  } else {
    throw std::invalid_argument("unknown layout: " + args.layout);
  }
  if (!(d.graph == h)) throw std::invalid_argument("drawing does not match the graph of the pair set");

  const CrossingVector o = crossing_vector(d, *pairs);
  FingerMoveSystem sys(pairs);
  ObstructionReport report = decide(sys, o, mode);
  const bool sound = report.vanishes ? verify_witness(sys, o, report) : verify_certificate(sys, o, report);

  json out = io::report_to_json(report);
  out["odd_pairs"] = o.odd_count();
  emit(out, args.out);
  if (!args.svg.empty()) io::write_text_file(args.svg, export_svg(d, {.highlight = pairs.get()}));

  if (!sound) {
    std::cerr << "error: the reported witness or certificate failed re-verification\n";
    return kCheckFailed;
  }
  if (!args.expect.empty()) {
    const bool want = args.expect == "vanishes";
    if (args.expect != "vanishes" && args.expect != "obstructed")
      throw std::invalid_argument("--expect takes vanishes or obstructed");
    if (report.vanishes != want) return kCheckFailed;
  }
  return kOk;
}

std::optional<Graph> optional_graph(const std::string& path) {
  if (path.empty()) return std::nullopt;
  return io::graph_from_json(io::read_json_file(path));
}

json violations_to_json(const StringReport& report) {
  json list = json::array();
  for (const StringViolation& v : report.violations)
    list.push_back({{"pair", {v.v, v.w}}, {"problem", v.missing_intersection ? "missing intersection" : "unexpected intersection"}});
  return list;
}

json sd_violations_to_json(const SdReport& report) {
  json list = json::array();
  for (const SdViolation& v : report.violations) list.push_back({v.a, v.b});
  return list;
}

int cmd_strings_verify(const std::string& file, const std::string& graph_file) {
  auto graph = optional_graph(graph_file);
  StringRepresentation rep = io::strings_from_json(io::read_json_file(file), graph ? &*graph : nullptr);
  StringReport report = verify_string_representation(rep);
  json out = {{"valid", report.valid()}, {"violations", violations_to_json(report)}};
  if (!report.malformed.empty()) out["malformed"] = report.malformed;
  std::cout << out.dump(2) << "\n";
  return report.valid() ? kOk : kCheckFailed;
}

int cmd_strings_to_drawing(const std::string& file, const std::string& graph_file, const std::string& out) {
  auto graph = optional_graph(graph_file);
  StringRepresentation rep = io::strings_from_json(io::read_json_file(file), graph ? &*graph : nullptr);
  StringReport check = verify_string_representation(rep);
  if (!check.valid()) {
    std::cerr << json{{"valid", false}, {"violations", violations_to_json(check)}}.dump(2) << "\n";
    return kCheckFailed;
  }
  Drawing d = drawing_from_strings(rep);
  SdReport sd = verify_sd_disjointness(barycentric_subdivision(rep.graph), d);
  emit(io::drawing_to_json(d), out);
  if (!sd.passes()) {
    std::cerr << json{{"sd_violations", sd_violations_to_json(sd)}}.dump(2) << "\n";
    return kCheckFailed;
  }
  return kOk;
}

int cmd_strings_from_drawing(const std::string& file, const std::string& graph_file, const std::string& out) {
  if (graph_file.empty()) throw std::invalid_argument("from-drawing needs --graph with the original graph");
  const Graph base = io::graph_from_json(io::read_json_file(graph_file));
  const SubdivisionMap sub = barycentric_subdivision(base);
  Drawing d = io::drawing_from_json(io::read_json_file(file), &sub.star);
  SdReport sd = verify_sd_disjointness(sub, d);
  if (!sd.passes()) {
    std::cerr << json{{"sd_violations", sd_violations_to_json(sd)}}.dump(2) << "\n";
    return kCheckFailed;
  }
  StringRepresentation rep = strings_from_drawing(sub, d);
  emit(io::strings_to_json(rep), out);
  StringReport check = verify_string_representation(rep);
  if (!check.valid()) {
    std::cerr << json{{"valid", false}, {"violations", violations_to_json(check)}}.dump(2) << "\n";
    return kCheckFailed;
  }
  return kOk;
}

int cmd_corpus(const std::string& file, const std::string& out) {
  corpus::CorpusSpec spec = corpus::spec_from_json(io::read_json_file(file));
  corpus::Summary summary = corpus::run(spec);
  emit(corpus::summary_to_json(summary), out);
  return summary.passed() ? kOk : kCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"String graph obstructions: generators, drawings, finger moves and exact solvers"};
  app.require_subcommand(1);

  std::vector<std::string> gen_tokens;
  std::string gen_out;
  auto* gen = app.add_subcommand("gen", "Write a generated graph as JSON");
  gen->add_option("family", gen_tokens, "Family and parameters, e.g. 'complete 5' or 'subdivide 1 complete 5'")
      ->required();
  gen->add_option("-o,--out", gen_out, "Output file (default stdout)");

  ObstructionArgs ob;
  auto* obstruction = app.add_subcommand("obstruction", "Decide whether an obstruction vanishes");
  obstruction->add_option("graph", ob.graph, "Graph JSON file, or family and parameters")->required();
  obstruction->add_option("--pairs", ob.pairs, "Pair set")->check(CLI::IsMember({"delta", "s", "sd"}));
  obstruction->add_option("--mode", ob.mode, "Coefficients")->check(CLI::IsMember({"mod2", "integer"}));
  obstruction->add_option("--layout", ob.layout, "Initial drawing")
      ->check(CLI::IsMember({"moment", "convex", "random", "figure"}));
  obstruction->add_option("--seed", ob.seed, "Seed for --layout random");
  obstruction->add_option("--drawing", ob.drawing, "Drawing JSON to use instead of a layout");
  obstruction->add_option("--svg", ob.svg, "Write the drawing as SVG with odd pairs' crossings marked");
  obstruction->add_option("--expect", ob.expect, "Exit 1 unless the result is 'vanishes' or 'obstructed'");
  obstruction->add_option("-o,--out", ob.out, "Report file (default stdout)");

  std::string str_file, str_graph, str_out;
  auto* strings = app.add_subcommand("strings", "String representations");
  strings->require_subcommand(1);
  auto* verify = strings->add_subcommand("verify", "Check a representation against its graph");
  auto* to_drawing = strings->add_subcommand("to-drawing", "Representation to a drawing of the subdivision");
  auto* from_drawing = strings->add_subcommand("from-drawing", "Drawing of the subdivision to a representation");
  for (auto* sub : {verify, to_drawing, from_drawing}) {
    sub->add_option("file", str_file, "Input JSON")->required();
    sub->add_option("--graph", str_graph, "Graph JSON (the original graph)");
  }
  to_drawing->add_option("-o,--out", str_out, "Output file (default stdout)");
  from_drawing->add_option("-o,--out", str_out, "Output file (default stdout)");

  std::string corpus_file, corpus_out;
  auto* corpus_cmd = app.add_subcommand("corpus", "Run a seeded corpus of checks");
  corpus_cmd->add_option("spec", corpus_file, "Corpus spec JSON")->required();
  corpus_cmd->add_option("-o,--out", corpus_out, "Summary file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    if (gen->parsed()) {
      emit(io::graph_to_json(generate_from_tokens(gen_tokens)), gen_out);
      return kOk;
    }
    if (obstruction->parsed()) return cmd_obstruction(ob);
    if (verify->parsed()) return cmd_strings_verify(str_file, str_graph);
    if (to_drawing->parsed()) return cmd_strings_to_drawing(str_file, str_graph, str_out);
    if (from_drawing->parsed()) return cmd_strings_from_drawing(str_file, str_graph, str_out);
    if (corpus_cmd->parsed()) return cmd_corpus(corpus_file, corpus_out);
  } catch (const NonGenericDrawing& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
