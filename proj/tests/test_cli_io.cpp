#include <doctest.h>

#include <unistd.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "helpers.hpp"
#include "roadcolor/cli.hpp"
#include "roadcolor/document.hpp"
#include "roadcolor/dot.hpp"
#include "roadcolor/error.hpp"
#include "roadcolor/fixtures.hpp"

using namespace roadcolor;
using namespace roadcolor::test;
namespace fs = std::filesystem;

namespace {

constexpr const char* kFig1 = "{\"version\":\"1\",\"n\":4,\"k\":2,\"adj\":[[1,0],[3,1],[0,2],[2,3]]}\n";

Errc read_error(const std::string& text) {
  try {
    read_document(text);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("document accepted: " << text);
  return Errc::Parse;
}

std::size_t count(const std::string& s, const std::string& needle) {
  std::size_t c = 0;
  for (auto i = s.find(needle); i != std::string::npos; i = s.find(needle, i + 1)) ++c;
  return c;
}

struct Scratch {
  fs::path dir = fs::temp_directory_path() / ("roadcolor-cli-" + std::to_string(::getpid()));
  Scratch() { fs::create_directories(dir); }
  ~Scratch() { fs::remove_all(dir); }

  std::string put(const std::string& name, const std::string& text) const {
    std::ofstream(dir / name) << text;
    return (dir / name).string();
  }
  std::string get(const std::string& name) const {
    std::ifstream in(dir / name);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  }
};

struct Run {
  int code;
  std::string out, err;
};

Run cli(std::vector<std::string> args) {
  args.insert(args.begin(), "roadcolor");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli_main(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_SUITE("cli_io") {
  TEST_CASE("reading documents") {
    const Document g = read_document(kFig1);
    REQUIRE(std::holds_alternative<Digraph>(g));
    CHECK(std::get<Digraph>(g) == fig1_graph());

    const Document one = read_document("{\"version\":\"1\",\"n\":1,\"k\":1,\"delta\":[[0]]}");
    REQUIRE(std::holds_alternative<Automaton>(one));
    CHECK(std::get<Automaton>(one).size() == 1);

    CHECK(read_error("{\"version\":\"1\",\"n\":2,\"k\":2,\"adj\":[[1,0,1],[0,1]]}") == Errc::Shape);
    CHECK(read_error("{\"version\":\"1\",\"n\":2,\"k\":1,\"adj\":[[1],[2]]}") == Errc::Shape);
    CHECK(read_error("{\"version\":\"1\",\"n\":1,\"k\":1,\"adj\":[[0]],\"delta\":[[0]]}") == Errc::Shape);
    CHECK(read_error("{\"version\":\"1\",\"n\":1,\"k\":1}") == Errc::Shape);
    CHECK(read_error("{\"version\":\"2\",\"n\":1,\"k\":1,\"adj\":[[0]]}") == Errc::Version);
    CHECK(read_error("{\"version\":\"1\",\"n\":1,") == Errc::Parse);
    CHECK(read_error("[1,2]") == Errc::Parse);
    CHECK(read_error("{\"version\":\"1\",\"n\":1,\"k\":1,\"adj\":[[\"a\"]]}") == Errc::Parse);
  }

  TEST_CASE("writing documents") {
    CHECK(write_document(fig1_graph()) == kFig1);
    CHECK(write_document(read_document(kFig1)) == kFig1);
    CHECK(write_document(fig1_right()) ==
          "{\"version\":\"1\",\"n\":4,\"k\":2,\"delta\":[[1,0],[3,1],[2,0],[2,3]]}\n");
  }

  TEST_CASE("round trips") {
    for (const Fixture& fx : fixtures()) {
      const std::string text = write_document(fx.automaton);
      const Document back = read_document(text);
      CHECK(std::get<Automaton>(back) == fx.automaton);
      CHECK(write_document(back) == text);
      CHECK(write_document(read_document(write_document(fx.automaton.as_digraph()))) ==
            write_document(fx.automaton.as_digraph()));
    }
    Rng rng(83);
    for (int i = 0; i < 100; ++i) {
      const Digraph g = gen_random({1 + rng.below(40), 2 + rng.below(3), rng.next(), 1, Family::CycleTrees});
      const Document doc = i % 2 ? Document(g) : Document(random_coloring(rng, g));
      const std::string text = write_document(doc);
      CHECK(write_document(read_document(text)) == text);
    }
  }

  TEST_CASE("dot export") {
    const std::string right = export_dot(fig1_right());
    CHECK(count(right, "->") == 8);
    CHECK(count(right, "color=red") == 4);
    CHECK(count(right, "style=dashed") == 4);
    CHECK(right.find("2 -> 2 [label=\"0\", color=red, style=bold]") != std::string::npos);

    const std::string loop = export_dot(Digraph(1, 1, {{0}}));
    CHECK(count(loop, "->") == 1);
    CHECK(loop.find("0 -> 0") != std::string::npos);
  }

  TEST_CASE("color and verify") {
    Scratch s;
    const std::string in = s.put("fig1.json", kFig1);
    const std::string out = (s.dir / "c.json").string();
    const Run color = cli({"color", "--in", in, "--out", out, "--verify"});
    CHECK(color.code == 0);
    const Document colored_doc = read_document(s.get("c.json"));
    CHECK(is_equivalent(std::get<Automaton>(colored_doc), fig1_graph()));

    const Run ok = cli({"verify", "--in", out, "--word"});
    CHECK(ok.code == 0);
    CHECK(ok.out.find("synchronized: yes") != std::string::npos);
    CHECK(ok.out.find("word: ") != std::string::npos);

    const Run left = cli({"verify", "--in", s.put("left.json", write_document(fig1_left()))});
    CHECK(left.code == 1);
    CHECK(left.out.find("rank: 4") != std::string::npos);

    CHECK(cli({"verify", "--in", in}).code == 2);
  }

  TEST_CASE("preconditions and malformed input") {
    Scratch s;
    const std::string period3 = s.put("period3.json", write_document(Digraph(3, 2, {{1, 1}, {2, 2}, {0, 0}})));
    const Run plain = cli({"color", "--in", period3});
    CHECK(plain.code == 3);
    CHECK_FALSE(plain.err.empty());
    CHECK(plain.out.empty());

    const Run periodic = cli({"color", "--in", period3, "--periodic", "--verify"});
    CHECK(periodic.code == 0);
    CHECK(std::get<Automaton>(read_document(periodic.out)).size() == 3);

    CHECK(cli({"color", "--in", s.put("bad.json", "{\"version\":")}).code == 2);
    CHECK(cli({"color", "--in", (s.dir / "missing.json").string()}).code == 2);
    CHECK(cli({"color"}).code == 2);
    CHECK(cli({}).code == 2);
    CHECK(cli({"color", "--in", s.put("red.json", write_document(Digraph(2, 1, {{0}, {0}})))}).code == 3);
  }

  TEST_CASE("gen, oracle, analyze, export-dot, bench") {
    Scratch s;
    const Run a = cli({"gen", "--n", "12", "--k", "3", "--seed", "5", "--family", "bunched_layers"});
    const Run b = cli({"gen", "--n", "12", "--k", "3", "--seed", "5", "--family", "bunched_layers"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(std::get<Digraph>(read_document(a.out)) == gen_random({12, 3, 5, 1, Family::BunchedLayers}));
    CHECK(cli({"gen", "--n", "4", "--period", "3"}).code == 2);
    CHECK(cli({"gen", "--family", "lattice"}).code == 2);

    const std::string fig1 = s.put("fig1.json", kFig1);
    const Run enumerate = cli({"oracle", "--in", fig1, "--mode", "enumerate"});
    CHECK(enumerate.out == "colorings: 16\nsynchronized: 12\n");
    const std::string right = s.put("right.json", write_document(fig1_right()));
    CHECK(cli({"oracle", "--in", right, "--mode", "rank"}).out == "rank: 1\n");
    CHECK(cli({"oracle", "--in", right, "--mode", "stable", "0", "3"}).code == 0);
    const std::string left = s.put("left.json", write_document(fig1_left()));
    CHECK(cli({"oracle", "--in", left, "--mode", "stable", "0", "1"}).code == 1);

    const Run info = cli({"analyze", "--in", right});
    CHECK(info.out.find("period: 1") != std::string::npos);
    CHECK(info.out.find("max level: 3") != std::string::npos);

    const Run dot = cli({"export-dot", "--in", right});
    CHECK(dot.out == export_dot(fig1_right()));

    const Run bench = cli({"bench", "--sizes", "16,32", "--seeds", "2"});
    CHECK(bench.code == 0);
    CHECK(count(bench.out, "\n") == 5);
    CHECK(bench.err.find("slope: ") != std::string::npos);
  }

  TEST_CASE("outputs never break equivalence") {
    Scratch s;
    Rng rng(89);
    for (int i = 0; i < 20; ++i) {
      const Digraph g = gen_random({2 + rng.below(30), 2, rng.next(), 1, Family::Random});
      const Run r = cli({"color", "--in", s.put("g.json", write_document(g)), "--verify"});
      REQUIRE(r.code == 0);
      CHECK(is_equivalent(std::get<Automaton>(read_document(r.out)), g));
    }
  }
}
