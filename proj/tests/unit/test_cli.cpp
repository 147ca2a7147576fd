#include <doctest.h>

#include <fstream>
#include <sstream>

#include "qgraph/cli.hpp"

using namespace qgraph;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

std::string data(const std::string& name) { return std::string(QGRAPH_TEST_DATA) + "/" + name; }

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("single results print the bare polynomial") {
  auto r = run({"qchrom", "--graph", data("k2.g"), "--n", "2"});
  CHECK(r.code == cli::kExitOk);
  CHECK(r.out == "2*q\n");
  CHECK(run({"bichromate", "--graph", data("k2.g")}).out == "a*b + a^2\n");
  CHECK(run({"tutte", "--graph", data("tri.g")}).out == "y + x + x^2\n");
  CHECK(run({"qchrom", "--graph", data("tri.g"), "--n", "3", "--method", "subset"}).out ==
        run({"qchrom", "--graph", data("tri.g"), "--n", "3", "--method", "direct"}).out);
}

TEST_CASE("identity suites") {
  auto r = run({"identities", "--suite", "vdw", "--graph", data("tri.g"), "--couplings", data("hyp.c")});
  CHECK(r.code == cli::kExitOk);
  CHECK(r.out.find("FAIL") == std::string::npos);
  CHECK(r.out.find("digest: ") != std::string::npos);
  CHECK(run({"identities", "--suite", "bracket", "--pd", data("fig8.pd")}).code == cli::kExitOk);
  CHECK(run({"identities", "--suite", "colored-jones", "--arc", data("fig8.arc"), "--n", "2"}).code ==
        cli::kExitOk);
  CHECK(run({"identities", "--suite", "nope"}).code == cli::kExitInputError);
}

TEST_CASE("colored Jones routes agree on the command line") {
  for (const char* f : {"trefoil.arc", "fig8.arc"})
    for (const char* n : {"1", "2"}) {
      auto a = run({"colored-jones", "--arc", data(f), "--n", n, "--route", "ma2"});
      auto b = run({"colored-jones", "--arc", data(f), "--n", n, "--route", "main"});
      CHECK(a.code == cli::kExitOk);
      CHECK(a.out == b.out);
    }
}

TEST_CASE("input errors exit with 2 and a position") {
  const std::string bad = "/tmp/qgraph_cli_bad.g";
  {
    std::ofstream f(bad);
    f << "vertices 2\n1 7\n";
  }
  auto r = run({"qchrom", "--graph", bad, "--n", "2"});
  CHECK(r.code == cli::kExitInputError);
  CHECK(r.err.find(bad + ":2:") != std::string::npos);
  CHECK(run({"qchrom", "--graph", data("missing.g"), "--n", "2"}).code == cli::kExitInputError);
  CHECK(run({"qchrom", "--n", "2"}).code == cli::kExitInputError);
  CHECK(run({"frobnicate"}).code == cli::kExitInputError);
  CHECK(run({"--emit", "xml", "qchrom", "--graph", data("k2.g"), "--n", "2"}).code == cli::kExitInputError);
}

TEST_CASE("json report") {
  auto r = run({"--emit", "json", "qchrom", "--graph", data("k2.g"), "--n", "2"});
  CHECK(r.code == cli::kExitOk);
  CHECK(r.out.find("\"2*q\"") != std::string::npos);
  CHECK(r.out.find("\"digest\"") != std::string::npos);
}

TEST_CASE("determinism") {
  const std::vector<std::vector<std::string>> calls = {
      {"identities", "--suite", "chordal", "--tree", data("path2.tree"), "--z", "3"},
      {"identities", "--suite", "arc-random", "--seed", "3"},
      {"--emit", "json", "identities", "--suite", "potts", "--graph", data("tri.g"), "--k", "3"},
      {"median", "--pd", data("trefoil.pd"), "--outer-face", "0"},
  };
  for (const auto& c : calls) {
    auto a = run(c), b = run(c);
    CHECK(a.out == b.out);
    CHECK(a.code == b.code);
  }
}

TEST_CASE("fnv1a") {
  CHECK(cli::fnv1a("") == 14695981039346656037ULL);
  CHECK(cli::fnv1a("a") == 0xaf63dc4c8601ec8cULL);
}
