#include "roadcolor/cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <fstream>
#include <iterator>
#include <sstream>

#include "roadcolor/bench.hpp"
#include "roadcolor/document.hpp"
#include "roadcolor/dot.hpp"
#include "roadcolor/engine.hpp"
#include "roadcolor/error.hpp"
#include "roadcolor/generator.hpp"
#include "roadcolor/oracle.hpp"
#include "roadcolor/red_forest.hpp"

namespace roadcolor {

namespace {

enum Exit { kOk = 0, kFailed = 1, kMalformed = 2, kPrecondition = 3 };

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int exit_code(Errc c) {
  switch (c) {
    case Errc::Parse:
    case Errc::Shape:
    case Errc::Version:
    case Errc::Unsatisfiable: return kMalformed;
    case Errc::NotIrreducible:
    case Errc::NotAperiodic:
    case Errc::TooLarge:
    case Errc::TooSmall: return kPrecondition;
    default: return kFailed;
  }
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file || !(file << text)) throw InputError("cannot write " + path);
}

Digraph graph_of(const Document& doc) {
  if (const auto* a = std::get_if<Automaton>(&doc)) return a->as_digraph();
  return std::get<Digraph>(doc);
}

Automaton automaton_of(const Document& doc) {
  if (const auto* a = std::get_if<Automaton>(&doc)) return *a;
  throw InputError("expected a colored document (\"delta\")");
}

std::string word_text(const Word& w) {
  std::string s;
  for (Letter l : w) s += (s.empty() ? "" : " ") + std::to_string(l);
  return s;
}

struct Options {
  std::string in, out;
  bool periodic = false, verify = false, word = false;
  GenSpec gen;
  std::string family = "random";
  std::vector<std::size_t> sizes{64, 128, 256, 512, 1024};
  std::size_t seeds = 5;
  std::string mode = "enumerate";
  std::vector<State> pair;
};

int color(const Options& o, std::ostream& out, std::ostream& err) {
  const Digraph g = graph_of(read_document(slurp(o.in)));
  const EngineReport rep = o.periodic ? periodic_find_coloring(g) : find_coloring(g);
  if (!is_equivalent(rep.automaton, g)) {
    err << "coloring is not equivalent to the input graph\n";
    return kFailed;
  }
  if (o.verify) {
    if (!o.periodic && !oracle::is_synchronized(rep.automaton)) {
      err << "coloring is not synchronized\n";
      return kFailed;
    }
    if (o.periodic && g.size() <= 12 && oracle::minimal_rank(rep.automaton) != period(g)) {
      err << "minimal rank differs from the period\n";
      return kFailed;
    }
  }
  emit(o.out, write_document(rep.automaton), out);
  return kOk;
}

int verify(const Options& o, std::ostream& out) {
  const Automaton a = automaton_of(read_document(slurp(o.in)));
  const bool sync = oracle::is_synchronized(a);
  out << "synchronized: " << (sync ? "yes" : "no") << "\n";
  if (sync) {
    out << "rank: 1\n";
  } else if (a.size() <= 12) {
    out << "rank: " << oracle::minimal_rank(a) << "\n";
  }
  if (o.word && sync) {
    const auto w = a.size() <= 16 ? oracle::shortest_sync_word(a) : oracle::greedy_sync_word(a);
    out << "word: " << word_text(*w) << "\n";
  }
  return sync ? kOk : kFailed;
}

int gen(Options o, std::ostream& out) {
  const auto family = parse_family(o.family);
  if (!family) throw InputError("unknown family " + o.family);
  o.gen.family = *family;
  emit(o.out, write_document(gen_random(o.gen)), out);
  return kOk;
}

int run_oracle(const Options& o, std::ostream& out) {
  const Document doc = read_document(slurp(o.in));
  if (o.mode == "enumerate") {
    std::size_t total = 0, sync = 0;
    oracle::enumerate_colorings(graph_of(doc), [&](const Automaton& a) {
      ++total;
      sync += oracle::is_synchronized(a);
      return true;
    });
    out << "colorings: " << total << "\nsynchronized: " << sync << "\n";
    return kOk;
  }
  const Automaton a = automaton_of(doc);
  if (o.mode == "rank") {
    out << "rank: " << oracle::minimal_rank(a) << "\n";
    return kOk;
  }
  if (o.pair.size() != 2) throw InputError("stable needs two states");
  const bool stable = oracle::is_stable(a, o.pair[0], o.pair[1]);
  out << "stable: " << (stable ? "yes" : "no") << "\n";
  return stable ? kOk : kFailed;
}

int bench(const Options& o, std::ostream& out, std::ostream& err) {
  const auto family = parse_family(o.family);
  if (!family) throw InputError("unknown family " + o.family);
  std::vector<std::uint64_t> seeds;
  for (std::size_t i = 0; i < o.seeds; ++i) seeds.push_back(o.gen.seed + i);
  const BenchResult r = bench_scaling(*family, o.sizes, o.gen.k, seeds);
  write_table(out, r.records);
  if (std::isnan(r.slope)) err << "warning: slope undefined with fewer than two sizes\n";
  err << "slope: " << r.slope << "\nsearch slope: " << r.search_slope << "\n";
  return kOk;
}

int analyze_doc(const Options& o, std::ostream& out) {
  const Document doc = read_document(slurp(o.in));
  const Digraph g = graph_of(doc);
  const bool sc = is_strongly_connected(g);
  out << "n: " << g.size() << "\nk: " << g.degree() << "\nstrongly connected: " << (sc ? "yes" : "no") << "\n";
  if (sc) out << "period: " << period(g) << "\n";
  const Automaton a = std::holds_alternative<Automaton>(doc) ? std::get<Automaton>(doc) : Automaton(g);
  const RedForest f = analyze(a);
  out << "clusters: " << f.cluster_count() << "\ncycle lengths:";
  for (std::uint32_t len : f.cycle_length) out << ' ' << len;
  out << "\nmax level: " << f.max_level << "\nmaximal states: " << f.maximal_states.size()
      << "\ncondition (*): " << (satisfies_condition_star(f) ? "yes" : "no")
      << "\ncondition (**): " << (satisfies_condition_double_star(a, f) ? "yes" : "no") << "\n";
  return kOk;
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Synchronizing colorings of aperiodic graphs", "roadcolor"};
  app.require_subcommand(1);
  Options o;

  auto* c = app.add_subcommand("color", "Find a synchronizing coloring");
  c->add_option("--in", o.in, "Graph document")->required();
  c->add_option("--out", o.out, "Output file, default stdout");
  c->add_flag("--periodic", o.periodic, "Minimal-rank coloring for periodic graphs");
  c->add_flag("--verify", o.verify, "Check the result with the oracle");

  auto* v = app.add_subcommand("verify", "Check a colored document");
  v->add_option("--in", o.in, "Colored document")->required();
  v->add_flag("--word", o.word, "Print a reset word");

  auto* g = app.add_subcommand("gen", "Generate a graph document");
  g->add_option("--n", o.gen.n, "States")->check(CLI::PositiveNumber);
  g->add_option("--k", o.gen.k, "Out-degree")->check(CLI::PositiveNumber);
  g->add_option("--seed", o.gen.seed, "Seed");
  g->add_option("--period", o.gen.period, "Target period")->check(CLI::PositiveNumber);
  g->add_option("--family", o.family, "random, cycle_trees, bunched_layers or figure_fixture");
  g->add_option("--out", o.out, "Output file, default stdout");

  auto* r = app.add_subcommand("oracle", "Brute-force checks");
  r->add_option("--in", o.in, "Document")->required();
  r->add_option("--mode", o.mode, "enumerate, rank or stable")
      ->check(CLI::IsMember({"enumerate", "rank", "stable"}));
  r->add_option("states", o.pair, "P Q for stable");

  auto* b = app.add_subcommand("bench", "Operation-count scaling table");
  b->add_option("--family", o.family, "Generator family");
  b->add_option("--sizes", o.sizes, "Sizes, ascending")->delimiter(',');
  b->add_option("--k", o.gen.k, "Out-degree")->check(CLI::PositiveNumber);
  b->add_option("--seed", o.gen.seed, "First seed");
  b->add_option("--seeds", o.seeds, "Seeds per size")->check(CLI::PositiveNumber);

  auto* d = app.add_subcommand("export-dot", "Graphviz output");
  d->add_option("--in", o.in, "Document")->required();
  d->add_option("--out", o.out, "Output file, default stdout");

  auto* a = app.add_subcommand("analyze", "Period, connectivity and red forest summary");
  a->add_option("--in", o.in, "Document")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kMalformed;
  }

  try {
    if (c->parsed()) return color(o, out, err);
    if (v->parsed()) return verify(o, out);
    if (g->parsed()) return gen(o, out);
    if (r->parsed()) return run_oracle(o, out);
    if (b->parsed()) return bench(o, out, err);
    if (d->parsed()) {
      emit(o.out, export_dot(read_document(slurp(o.in))), out);
      return kOk;
    }
    return analyze_doc(o, out);
  } catch (const Error& e) {
    err << e.what() << "\n";
    return exit_code(e.code());
  } catch (const InputError& e) {
    err << e.what() << "\n";
    return kMalformed;
  }
}

}  // namespace roadcolor
