#include "tsft/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <ostream>
#include <random>
#include <sstream>

#include "tsft/decide.hpp"
#include "tsft/ext_graph.hpp"
#include "tsft/instance.hpp"
#include "tsft/oracle.hpp"
#include "tsft/reduction.hpp"

namespace tsft::cli {

namespace {

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("error reading '" + path + "'");
  return buf.str();
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw IoError("cannot write '" + path + "'");
  file << text;
  if (!file) throw IoError("error writing '" + path + "'");
}

AllowableSet load(const std::string& path, std::ostream& err) {
  InstanceFile file = parse_instance_file(read_file(path));
  for (const auto& w : file.warnings) err << path << ": warning: " << w << "\n";
  return std::move(file.allowed);
}

int verdict_status(Verdict v) {
  switch (v) {
    case Verdict::cpc_irreducible: return exit_code::irreducible;
    case Verdict::not_cpc_irreducible: return exit_code::not_irreducible;
    case Verdict::empty: return exit_code::empty;
  }
  return exit_code::data;
}

std::string edge_list(const ExtGraph& g) {
  std::string out = "convergent:";
  for (const Arc& a : g.convergent()) out += " " + g.format(a);
  out += "\ndivergent:";
  for (const Fork& f : g.divergent()) out += " " + g.format(f);
  return out + "\n";
}

Symbol essential_symbol(const AllowableSet& essential, const std::string& label) {
  auto s = essential.alphabet().find(label);
  if (!s) throw std::invalid_argument("symbol '" + label + "' is undeclared or not essential");
  return *s;
}

// Convergent edges form one random Hamiltonian path, so reachability is a
// total order and most divergent edges license a step.
ExtGraph bench_graph(std::size_t m, std::mt19937_64& rng) {
  const auto n = std::max<std::size_t>(3, static_cast<std::size_t>(std::ceil(std::sqrt(m))) + 1);
  std::vector<Vertex> order(n);
  for (Vertex v = 0; v < n; ++v) order[v] = v;
  std::shuffle(order.begin(), order.end(), rng);

  std::set<Arc> convergent;
  for (std::size_t i = 0; i + 1 < n; ++i) convergent.insert(Arc{order[i], order[i + 1]});
  std::set<Fork> divergent;
  std::uniform_int_distribution<Vertex> pick(0, static_cast<Vertex>(n - 1));
  while (divergent.size() < m) {
    Fork f{pick(rng), pick(rng), pick(rng)};
    if (f.left != f.right) divergent.insert(f);
  }
  std::vector<std::string> names;
  for (std::size_t v = 0; v < n; ++v) names.push_back(std::to_string(v));
  return ExtGraph(std::move(names), std::move(convergent), std::move(divergent));
}

std::vector<std::size_t> parse_sizes(const std::string& list) {
  std::vector<std::size_t> out;
  std::stringstream in(list);
  for (std::string item; std::getline(in, item, ',');) {
    std::size_t used = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size() || v == 0) {
      throw UsageError("--sizes expects a comma-separated list of positive integers");
    }
    out.push_back(v);
  }
  if (out.empty()) throw UsageError("--sizes is empty");
  return out;
}

struct Options {
  std::string file;
  std::string path;
  bool grouped = false;
  bool certificate = false;
  bool enhanced = false;
  bool forward = false;
  bool trace = false;
  std::string dot_path;
  std::vector<std::string> pair;
  bool witness = false;
  std::size_t symbols = 2;
  double density = 0.5;
  std::uint64_t seed = 1;
  std::size_t samples = 1000;
  std::string sizes = "10,30,100,300,1000";
};

int cmd_decide(const Options& o, std::ostream& out, std::ostream& err) {
  const AllowableSet allowed = load(o.file, err);
  const Certificate cert = decide(allowed, o.grouped ? Route::grouped : Route::direct);
  out << to_string(cert.verdict) << "\n";
  if (o.certificate) out << format_certificate(cert);
  return verdict_status(cert.verdict);
}

int cmd_reduce(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.enhanced && o.forward) throw UsageError("--enhanced and --forward are exclusive");
  const ExtGraph graph = graph_of(load(o.file, err));
  const Fixpoint fix = o.enhanced ? enhanced_fixpoint(graph)
                                  : dc_fixpoint(graph, o.forward ? Rule::forward : Rule::symmetric);
  out << "vertices:";
  for (const auto& n : fix.graph.names()) out << " " << n;
  out << "\n" << edge_list(fix.graph);
  out << "steps: " << fix.steps.size() << "\n";
  const bool strong = fix.graph.vertex_count() > 0 && is_strongly_connected(fix.graph.intrinsic());
  out << "strongly-connected: " << (strong ? "yes" : "no") << "\n";
  if (o.trace) {
    out << "trace:\n";
    for (const auto& s : fix.steps) out << "  " << format_step(fix.graph, s) << "\n";
  }
  if (!o.dot_path.empty()) write_output(o.dot_path, to_dot(fix.graph), out);
  return 0;
}

int cmd_group(const Options& o, std::ostream& out, std::ostream& err) {
  const ExtGraph graph = graph_of(load(o.file, err));
  const GroupedGraph g = grouping(graph);
  for (std::size_t c = 0; c < g.members.size(); ++c) {
    out << g.graph.name(static_cast<Vertex>(c)) << " = {";
    for (std::size_t i = 0; i < g.members[c].size(); ++i) {
      out << (i ? "," : "") << graph.name(g.members[c][i]);
    }
    out << "}\n";
  }
  out << edge_list(g.graph);
  return 0;
}

int cmd_oracle(const Options& o, std::ostream& out, std::ostream& err) {
  const AllowableSet allowed = load(o.file, err);
  if (o.pair.empty()) {
    if (o.witness) throw UsageError("--witness requires --pair");
    const Verdict v = decide_oracle(allowed);
    out << to_string(v) << "\n";
    return verdict_status(v);
  }
  const AllowableSet essential = essentialize(allowed);
  if (essential.alphabet().empty()) {
    out << to_string(Verdict::empty) << "\n";
    return exit_code::empty;
  }
  const Symbol from = essential_symbol(essential, o.pair[0]);
  const Symbol to = essential_symbol(essential, o.pair[1]);
  const ConnTable table(essential, to);
  const bool connected = table.connected(from);
  out << o.pair[0] << " -> " << o.pair[1] << ": "
      << (connected ? "CPC-connected" : "not CPC-connected") << "\n";
  if (connected && o.witness) {
    out << "witness (depth " << table.round(from) << "):\n";
    out << table.witness(from)->format(essential.alphabet());
  }
  return connected ? 0 : 1;
}

int cmd_dot(const Options& o, std::ostream& out, std::ostream& err) {
  write_output(o.path, to_dot(graph_of(load(o.file, err))), out);
  return 0;
}

int cmd_gen(const Options& o, std::ostream& out) {
  if (!(o.density >= 0.0 && o.density <= 1.0)) throw UsageError("--density must lie in [0, 1]");
  out << format_instance(random_instance(o.symbols, o.density, o.seed));
  return 0;
}

int cmd_crosscheck(const Options& o, std::ostream& out) {
  std::vector<AllowableSet> instances;
  const bool exhaustive = o.symbols <= 2;
  if (exhaustive) {
    const std::size_t blocks = o.symbols * o.symbols * o.symbols;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << blocks); ++mask) {
      instances.push_back(instance_from_mask(o.symbols, mask));
    }
  } else {
    std::mt19937_64 rng(o.seed);
    for (std::size_t i = 0; i < o.samples; ++i) {
      const double density = unit_interval(rng);
      instances.push_back(random_instance(o.symbols, density, rng));
    }
  }

  std::size_t agree = 0;
  std::size_t counts[3] = {0, 0, 0};
  for (const AllowableSet& b : instances) {
    const Certificate direct = decide_direct(b);
    const Certificate grouped = decide_grouped(b);
    const Verdict oracle = decide_oracle(b);
    const bool ok = direct.verdict == grouped.verdict && direct.verdict == oracle &&
                    check_certificate(b, direct) && check_certificate(b, grouped);
    if (ok) {
      ++agree;
      ++counts[static_cast<int>(direct.verdict)];
      continue;
    }
    out << "disagreement: direct=" << to_string(direct.verdict)
        << " grouped=" << to_string(grouped.verdict) << " oracle=" << to_string(oracle) << "\n"
        << format_instance(b);
  }
  out << agree << "/" << instances.size() << " agree"
      << (exhaustive ? " (exhaustive)" : " (sampled)") << "\n";
  out << "irreducible: " << counts[0] << ", not irreducible: " << counts[1]
      << ", empty: " << counts[2] << "\n";
  return agree == instances.size() ? 0 : exit_code::disagreement;
}

int cmd_bench(const Options& o, std::ostream& out, std::ostream& err) {
  const auto sizes = parse_sizes(o.sizes);
  std::mt19937_64 rng(o.seed);
  out << "vertices,conv_edges,div_edges,steps,micros\n";
  bool bounded = true;
  for (std::size_t m : sizes) {
    const ExtGraph g = bench_graph(m, rng);
    const auto start = std::chrono::steady_clock::now();
    const Fixpoint fix = dc_fixpoint(g);
    const auto micros = std::chrono::duration_cast<std::chrono::microseconds>(
                            std::chrono::steady_clock::now() - start)
                            .count();
    const std::size_t n = g.vertex_count();
    out << n << "," << g.convergent().size() << "," << g.divergent().size() << ","
        << fix.steps.size() << "," << micros << "\n";
    if (fix.steps.size() > n * n) {
      err << "bench: " << fix.steps.size() << " steps exceed |V|^2 = " << n * n << "\n";
      bounded = false;
    }
  }
  return bounded ? 0 : exit_code::disagreement;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Decide CPC-irreducibility of 1-step tree shifts of finite type", "tsft"};
  app.require_subcommand(1);
  Options o;

  auto* decide_cmd = app.add_subcommand("decide", "Decide CPC-irreducibility (exit 0/1/2)");
  decide_cmd->add_option("FILE", o.file, "Instance file")->required();
  decide_cmd->add_flag("--grouped", o.grouped, "Use SCC grouping between reduction steps");
  decide_cmd->add_flag("--certificate", o.certificate, "Print the certificate");

  auto* reduce_cmd = app.add_subcommand("reduce", "Print the (d,c)-reduction fixpoint");
  reduce_cmd->add_option("FILE", o.file, "Instance file")->required();
  reduce_cmd->add_flag("--enhanced", o.enhanced, "Drop each divergent edge once it is used");
  reduce_cmd->add_flag("--forward", o.forward, "Only use paths from left child to right child");
  reduce_cmd->add_flag("--trace", o.trace, "Print the reduction steps");
  reduce_cmd->add_option("--dot", o.dot_path, "Write the fixpoint as DOT ('-' for stdout)");

  auto* group_cmd = app.add_subcommand("group", "Print the SCC partition and grouped graph");
  group_cmd->add_option("FILE", o.file, "Instance file")->required();

  auto* oracle_cmd = app.add_subcommand("oracle", "Fixed-point CPC-connectedness oracle");
  oracle_cmd->add_option("FILE", o.file, "Instance file")->required();
  oracle_cmd->add_option("--pair", o.pair, "Check one ordered pair FROM TO")->expected(2);
  oracle_cmd->add_flag("--witness", o.witness, "Print a minimal-depth witness pattern");

  auto* dot_cmd = app.add_subcommand("dot", "Write the extended graph as DOT");
  dot_cmd->add_option("FILE", o.file, "Instance file")->required();
  dot_cmd->add_option("PATH", o.path, "Output path ('-' for stdout)")->required();

  auto* gen_cmd = app.add_subcommand("gen", "Print a random instance");
  gen_cmd->add_option("--symbols", o.symbols, "Alphabet size")->required()->check(CLI::Range(1, 64));
  gen_cmd->add_option("--density", o.density, "Probability of keeping each block")->required();
  gen_cmd->add_option("--seed", o.seed, "Random seed")->required();

  auto* cross_cmd = app.add_subcommand("crosscheck", "Compare all deciders");
  cross_cmd->add_option("--symbols", o.symbols, "Alphabet size (exhaustive when <= 2)")
      ->check(CLI::Range(1, 16));
  cross_cmd->add_option("--samples", o.samples, "Random instances when sampling");
  cross_cmd->add_option("--seed", o.seed, "Random seed");

  auto* bench_cmd = app.add_subcommand("bench", "Time dc_fixpoint; CSV to stdout");
  bench_cmd->add_option("--sizes", o.sizes, "Comma-separated divergent edge counts");
  bench_cmd->add_option("--seed", o.seed, "Random seed");

  std::vector<std::string> argv_store{"tsft"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return 0;
    }
    err << "tsft: " << e.what() << "\n";
    return exit_code::usage;
  }

  try {
    if (*decide_cmd) return cmd_decide(o, out, err);
    if (*reduce_cmd) return cmd_reduce(o, out, err);
    if (*group_cmd) return cmd_group(o, out, err);
    if (*oracle_cmd) return cmd_oracle(o, out, err);
    if (*dot_cmd) return cmd_dot(o, out, err);
    if (*gen_cmd) return cmd_gen(o, out);
    if (*cross_cmd) return cmd_crosscheck(o, out);
    if (*bench_cmd) return cmd_bench(o, out, err);
  } catch (const IoError& e) {
    err << "tsft: " << e.what() << "\n";
    return exit_code::io;
  } catch (const UsageError& e) {
    err << "tsft: " << e.what() << "\n";
    return exit_code::usage;
  } catch (const ParseError& e) {
    err << "tsft: " << o.file << ":" << e.what() << "\n";
    return exit_code::data;
  } catch (const std::exception& e) {
    err << "tsft: " << e.what() << "\n";
    return exit_code::data;
  }
  return exit_code::usage;
}

}  // namespace tsft::cli
