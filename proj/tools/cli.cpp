#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "lineroot/acceptance.hpp"
#include "lineroot/oracle.hpp"
#include "lineroot/reconstruct.hpp"
#include "lineroot/text_format.hpp"

namespace lineroot::cli {

namespace {

struct Streams {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
};

// Reads a whole file, or the input stream for "-".
std::optional<std::string> slurp(const std::string& path, Streams& io) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(io.in), std::istreambuf_iterator<char>());
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) {
    io.err << "lineroot: cannot open " << path << "\n";
    return std::nullopt;
  }
  return std::string(std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>());
}

template <typename Parse>
auto parse_file(const std::string& path, Streams& io, Parse parse)
    -> std::optional<decltype(parse(std::string_view{}))> {
  auto text = slurp(path, io);
  if (!text) return std::nullopt;
  try {
    return parse(*text);
  } catch (const MalformedInput& e) {
    io.err << "lineroot: " << path << ": " << e.what() << "\n";
  } catch (const std::invalid_argument& e) {
    io.err << "lineroot: " << path << ": " << e.what() << "\n";
  }
  return std::nullopt;
}

LineMode mode_from(const std::string& text) { return *parse_line_mode(text); }

int cmd_root(const std::string& path, const std::string& mode_text, bool check, bool split, Streams& io) {
  auto gamma = parse_file(path, io, parse_simple_graph);
  if (!gamma) return malformed_input;
  if (gamma->vertex_count() == 0) {
    io.err << "lineroot: empty graph\n";
    return malformed_input;
  }
  const LineMode mode = mode_from(mode_text);
  auto parts = components(*gamma);
  if (parts.size() > 1 && !split) {
    io.err << "lineroot: graph has " << parts.size() << " components (use --components)\n";
    return disconnected;
  }
  std::string text;
  for (const auto& part : parts) {
    SimpleGraph piece = parts.size() == 1 ? *gamma : induced_subgraph(*gamma, part);
    auto r = reconstruct_root(piece, mode);
    if (!r) {
      io.err << "lineroot: component containing vertex " << part.front() << ": " << r.error().message << "\n";
      return r.error().kind == ErrorKind::not_line_graph ? not_line_graph : malformed_input;
    }
    if (check && !verify(piece, *r)) {
      io.err << "lineroot: verification failed for component containing vertex " << part.front() << "\n";
      return verification_failed;
    }
    text += parts.size() == 1 ? emit_root(*r) : emit_root(*r, part);
  }
  io.out << text;
  return ok;
}

int cmd_linegraph(const std::string& path, const std::string& mode_text, Streams& io) {
  auto g = parse_file(path, io, parse_multigraph);
  if (!g) return malformed_input;
  io.out << format_simple_graph(line_graph(*g, mode_from(mode_text)));
  return ok;
}

int cmd_check_glg(const std::string& path, Streams& io) {
  auto gamma = parse_file(path, io, parse_simple_graph);
  if (!gamma) return malformed_input;
  if (gamma->vertex_count() == 0) {
    io.err << "lineroot: empty graph\n";
    return malformed_input;
  }
  if (!is_connected(*gamma)) {
    io.err << "lineroot: graph is disconnected\n";
    return disconnected;
  }
  auto result = is_generalized_line_graph(*gamma);
  if (!result) {
    io.err << "lineroot: " << result.error().message << "\n";
    return malformed_input;
  }
  if (!result->has_value()) {
    io.out << "not-glg\n";
    return not_line_graph;
  }
  io.out << emit_root(**result);
  return ok;
}

int cmd_delta0(const std::string& path, Streams& io) {
  auto g = parse_file(path, io, parse_multigraph);
  if (!g) return malformed_input;
  if (g->edge_count() == 0) {
    io.err << "lineroot: multigraph has no edges\n";
    return malformed_input;
  }
  if (!is_connected(*g)) {
    io.err << "lineroot: multigraph is disconnected\n";
    return disconnected;
  }
  auto collapsed = delta0_collapse(*g);
  if (!collapsed) {
    io.err << "lineroot: " << collapsed.error().message << "\n";
    return malformed_input;
  }
  std::ostringstream text;
  auto trace = oracle::rewrite_delta0(*g);
  text << "# " << trace.steps.size() << " rewriting step(s)\n";
  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    const auto& s = trace.steps[i];
    text << "# step " << i + 1 << ": x=" << s.witness.x << " y=" << s.witness.y << " z=" << s.witness.z
         << (s.adjacent ? " adjacent" : " non-adjacent") << "\n";
  }
  text << format_multigraph(*collapsed);
  io.out << text.str();
  return ok;
}

int cmd_gen(std::size_t n, std::size_t m, std::uint64_t seed, bool delta0_free, bool connected, Streams& io) {
  try {
    io.out << format_multigraph(
        oracle::random_multigraph(n, m, seed, {.connected = connected, .delta0_free = delta0_free}));
    return ok;
  } catch (const oracle::ConstraintUnsatisfiable& e) {
    io.err << "lineroot: " << e.what() << "\n";
    return not_line_graph;
  } catch (const std::invalid_argument& e) {
    io.err << "lineroot: " << e.what() << "\n";
    return malformed_input;
  }
}

int cmd_selftest(Streams& io) {
  bool all = true;
  acceptance::run_all(acceptance::desk_options(), [&](const acceptance::CriterionResult& r) {
    all = all && r.passed;
    io.out << acceptance::format_result(r) << std::endl;
  });
  return all ? ok : not_line_graph;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  Streams io{in, out, err};
  CLI::App app{"Roots of line graphs of multigraphs", "lineroot"};
  app.require_subcommand(1);

  const std::vector<std::string> modes{"l1", "ge1", "geq1"};
  std::string mode, path;
  bool check = false, split = false;

  auto* root = app.add_subcommand("root", "reconstruct the canonical root of a graph");
  root->add_option("--mode", mode, "l1 or ge1")->required()->check(CLI::IsMember(modes));
  root->add_flag("--verify", check, "check the root against the forward line graph");
  root->add_flag("--components", split, "reconstruct each component separately");
  root->add_option("file", path, "graph file, - for standard input")->required();

  auto* lg = app.add_subcommand("linegraph", "line graph of a multigraph");
  lg->add_option("--mode", mode, "l1 or ge1")->required()->check(CLI::IsMember(modes));
  lg->add_option("file", path, "mgraph file, - for standard input")->required();

  auto* glg = app.add_subcommand("check-glg", "generalized line graph test");
  glg->add_option("file", path, "graph file, - for standard input")->required();

  auto* d0 = app.add_subcommand("delta0", "delta0-free collapse of a multigraph");
  d0->add_option("file", path, "mgraph file, - for standard input")->required();

  std::size_t vertices = 0, edges = 0;
  std::uint64_t seed = 0;
  bool delta0_free = false, connected = false;
  auto* gen = app.add_subcommand("gen", "random multigraph");
  gen->add_option("--vertices", vertices)->required();
  gen->add_option("--edges", edges)->required();
  gen->add_option("--seed", seed)->required();
  gen->add_flag("--delta0-free", delta0_free);
  gen->add_flag("--connected", connected);

  auto* self = app.add_subcommand("selftest", "desk-scale acceptance suite");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, err, err);
    return malformed_input;
  }

  if (root->parsed()) return cmd_root(path, mode, check, split, io);
  if (lg->parsed()) return cmd_linegraph(path, mode, io);
  if (glg->parsed()) return cmd_check_glg(path, io);
  if (d0->parsed()) return cmd_delta0(path, io);
  if (gen->parsed()) return cmd_gen(vertices, edges, seed, delta0_free, connected, io);
  if (self->parsed()) return cmd_selftest(io);
  return malformed_input;
}

}  // namespace lineroot::cli
