#include "qgraph/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <json.hpp>
#include <numeric>
#include <optional>
#include <random>
#include <sstream>

#include "qgraph/arcflow.hpp"
#include "qgraph/chordal.hpp"
#include "qgraph/errors.hpp"
#include "qgraph/graph.hpp"
#include "qgraph/knot.hpp"
#include "qgraph/polyq.hpp"
#include "qgraph/qchrom.hpp"
#include "qgraph/statmech.hpp"
#include "qgraph/textio.hpp"

namespace qgraph::cli {

std::uint64_t fnv1a(std::string_view data, std::uint64_t h) {
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

namespace {

using polyq::Poly;
using polyq::Var;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string graph, pd, arc, couplings, tree, suite, form, method;
  std::string route = "ma2";
  std::string emit = "text";
  std::string bichromate_route = "none";
  int n = 0, k = 0, z = 0, y = 0, outer_face = 0;
  std::uint64_t seed = 0;
  bool timing = false;
};

struct Verdict {
  std::string name;
  bool pass;
  std::string lhs, rhs;
};

struct Report {
  std::string command;
  std::uint64_t digest = 0;
  std::vector<std::pair<std::string, std::string>> results;  // empty key: raw block
  std::vector<Verdict> verdicts;
  bool identities = false;

  void result(std::string key, std::string value) { results.emplace_back(std::move(key), std::move(value)); }
  void check(std::string name, const Poly& lhs, const Poly& rhs) {
    bool ok = lhs == rhs;
    verdicts.push_back({std::move(name), ok, ok ? "" : lhs.str(), ok ? "" : rhs.str()});
  }
  void check(std::string name, bool ok, std::string detail = "") {
    verdicts.push_back({std::move(name), ok, std::move(detail), ""});
  }
  bool all_pass() const {
    return std::all_of(verdicts.begin(), verdicts.end(), [](const Verdict& v) { return v.pass; });
  }
};

// Inputs are hashed in a fixed order so the digest does not depend on flag order.
class Inputs {
 public:
  explicit Inputs(const Options& o) : o_(o) {}

  const std::string& file(const std::string& flag, const std::string& path) {
    if (path.empty()) throw UsageError("--" + flag + " is required");
    auto& slot = files_[flag];
    if (slot.empty()) slot = textio::read_file(path);
    return slot;
  }
  int need(const std::string& flag, int value, int min) {
    if (value < min) throw UsageError("--" + flag + " must be at least " + std::to_string(min));
    ints_[flag] = value;
    return value;
  }
  void note(const std::string& key, const std::string& value) { extra_[key] = value; }

  graph::Multigraph graph() { return parsed("graph", o_.graph, graph::parse_graph); }
  knot::KnotPD pd() { return parsed("pd", o_.pd, knot::parse_pd); }
  arcflow::ArcGraph arc() { return parsed("arc", o_.arc, arcflow::parse_arc); }
  statmech::Couplings couplings() { return parsed("couplings", o_.couplings, statmech::parse_couplings); }
  chordal::TreeSpec tree() { return parsed("tree", o_.tree, chordal::parse_tree); }

  std::uint64_t digest(const std::string& command) const {
    std::uint64_t h = fnv1a(command);
    for (const auto& [k, v] : files_) h = fnv1a(v, fnv1a(k + "\n", h));
    for (const auto& [k, v] : ints_) h = fnv1a(k + "=" + std::to_string(v) + "\n", h);
    for (const auto& [k, v] : extra_) h = fnv1a(k + "=" + v + "\n", h);
    return h;
  }

 private:
  template <class Parse>
  std::invoke_result_t<Parse, std::string_view> parsed(const std::string& flag, const std::string& path, Parse parse) {
    const auto& text = file(flag, path);
    try {
      return parse(text);
    } catch (const ParseError& e) {
      throw ParseError(path + ":" + std::to_string(e.line()) + ":" + std::to_string(e.col()) + ": " + e.what(),
                       e.line(), e.col());
    }
  }

  const Options& o_;
  std::map<std::string, std::string> files_;
  std::map<std::string, int> ints_;
  std::map<std::string, std::string> extra_;
};

std::string join(const std::vector<int>& xs) {
  std::string s;
  for (int x : xs) s += (s.empty() ? "" : " ") + std::to_string(x);
  return s;
}

// ---- compute commands ----

void cmd_qchrom(const Options& o, Inputs& in, Report& r) {
  const std::string method = o.method.empty() ? "direct" : o.method;
  in.note("method", method);
  if (method == "complete") {
    r.result("", qchrom::mq_complete(in.need("k", o.k, 0), in.need("n", o.n, 1)).str());
    return;
  }
  auto g = in.graph();
  int n = in.need("n", o.n, 1);
  if (method == "direct")
    r.result("", qchrom::mq_direct(g, n).str());
  else if (method == "subset")
    r.result("", qchrom::mq_subset(g, n).str());
  else
    throw UsageError("--method must be direct, subset or complete");
}

void cmd_tutte(const Options& o, Inputs& in, Report& r) {
  const std::string form = o.form.empty() ? "tutte" : o.form;
  in.note("form", form);
  if (form != "tutte" && form != "whitney-rank") throw UsageError("--form must be tutte or whitney-rank");
  r.result("", qchrom::tutte(in.graph(), form == "tutte" ? qchrom::TutteForm::tutte : qchrom::TutteForm::whitney_rank).str());
}

void cmd_potts(const Options& o, Inputs& in, Report& r) {
  const std::string method = o.method.empty() ? "fk" : o.method;
  in.note("method", method);
  auto g = in.graph();
  auto w = in.couplings();
  int k = in.need("k", o.k, 1);
  if (method == "fk")
    r.result("", polyq::rational_str(statmech::potts_fk(g, k, w)));
  else if (method == "direct")
    r.result("", polyq::rational_str(statmech::potts_direct(g, k, w)));
  else
    throw UsageError("--method must be fk or direct");
}

void pair_result(Report& r, const std::string& a, const std::string& b, const std::pair<Poly, Poly>& p) {
  r.result(a, p.first.str());
  r.result(b, p.second.str());
}

std::optional<knot::BichromateRoute> bich_route(const std::string& s) {
  if (s == "none") return std::nullopt;
  if (s == "kk") return knot::BichromateRoute::kk;
  if (s == "kkk") return knot::BichromateRoute::kkk;
  throw UsageError("--bichromate-route must be none, kk or kkk");
}

void cmd_jones(const Options& o, Inputs& in, Report& r) {
  const std::string form = o.form.empty() ? "jones" : o.form;
  in.note("form", form);
  in.note("bichromate-route", o.bichromate_route);
  if (form != "jones" && form != "bracket") throw UsageError("--form must be jones or bracket");
  auto k = in.pd();
  Poly f;
  if (auto route = bich_route(o.bichromate_route))
    f = knot::jones_via_bichromate(k, in.need("outer-face", o.outer_face, 0), *route);
  else
    f = knot::kauffman_f(k);
  r.result("", form == "jones" ? knot::bracket_to_jones(f).str() : f.str());
}

void cmd_median(const Options& o, Inputs& in, Report& r) {
  auto m = knot::median_graph(in.pd(), in.need("outer-face", o.outer_face, 0));
  std::string tait = "tait";
  for (int b : m.b) tait += b > 0 ? " +" : " -";
  r.result("", graph::to_text(m.graph) + tait + "\nblack-faces " + join(m.black_faces) + "\n");
}

void cmd_faces(const Options&, Inputs& in, Report& r) {
  std::string s;
  for (const auto& f : knot::faces(in.pd())) s += "face " + std::to_string(f.id) + ": " + join(f.labels) + "\n";
  r.result("", s);
}

arcflow::Route parse_route(const std::string& s) {
  if (s == "ma2") return arcflow::Route::ma2;
  if (s == "main") return arcflow::Route::main;
  if (s == "catmm") return arcflow::Route::catmm;
  throw UsageError("--route must be ma2, main or catmm");
}

void cmd_colored_jones(const Options& o, Inputs& in, Report& r) {
  auto route = parse_route(o.route);
  in.note("route", o.route);
  r.result("", arcflow::colored_jones(in.arc(), in.need("n", o.n, 1), route).str());
}

void cmd_chordal_check(const Options& o, Inputs& in, Report& r) {
  if (!o.graph.empty()) {
    auto p = chordal::peo(in.graph());
    r.result("chordal", p.chordal ? "yes" : "no");
    if (p.chordal) {
      r.result("order", join(p.order));
      r.result("m", join(p.m));
    } else {
      r.result("cycle", join(p.cycle));
    }
    return;
  }
  if (o.tree.empty()) throw UsageError("chordal-check needs --graph or --tree");
  auto spec = in.tree();
  auto list = chordal::tree_structures(spec);
  r.result("structures", std::to_string(list.structures.size()));
  r.result("formula", std::to_string(chordal::structure_count(spec)));
  if (list.warning) r.result("warning", *list.warning);
  int idx = 0;
  for (const auto& s : list.structures) {
    std::string line;
    for (int w = 1; w <= spec.nodes(); ++w)
      line += (w > 1 ? "; " : "") + std::string("B") + std::to_string(w) + " = {" + join(s.B[static_cast<std::size_t>(w)]) + "}";
    auto p = chordal::peo(chordal::graph_of_structure(s));
    r.result("S" + std::to_string(++idx), line + (p.chordal ? "" : " (G(S) not chordal)"));
  }
}

// ---- identity suites ----

void suite_qchrom(const Options& o, Inputs& in, Report& r) {
  auto g = in.graph();
  int n = in.need("n", o.n, 1);
  r.check("mq_direct = mq_subset (n=" + std::to_string(n) + ")", qchrom::mq_direct(g, n), qchrom::mq_subset(g, n));
  if (o.y > 0) {
    int y = in.need("y", o.y, 1);
    Poly lhs = polyq::substitute(qchrom::q_bichromate(g, y), Var::q, polyq::Rational(1));
    Poly rhs = polyq::compose(polyq::substitute(qchrom::bichromate(g), Var::a, polyq::Rational(y)), Var::b, polyq::var(Var::x));
    r.check("q_bichromate(q=1) = bichromate(a=y) (y=" + std::to_string(y) + ")", lhs, rhs);
  }
}

void suite_qbinom(const Options& o, Inputs& in, Report& r) {
  int n = in.need("n", o.n, 0);
  r.check("q-binomial theorem (n=" + std::to_string(n) + ")", polyq::qbinomial_theorem_check(n));
  const Poly q = polyq::var(Var::q);
  for (int k = 1; k < n; ++k)
    r.check("Pascal n=" + std::to_string(n) + " k=" + std::to_string(k), polyq::qbinom(n, k, q),
            polyq::qbinom(n - 1, k - 1, q) + polyq::pow(q, static_cast<unsigned>(k)) * polyq::qbinom(n - 1, k, q));
}

void suite_potts(const Options& o, Inputs& in, Report& r) {
  auto g = in.graph();
  auto w = in.couplings();
  int k = in.need("k", o.k, 1);
  auto [subset, spins] = statmech::qpotts_pair(g, k, w);
  r.check("q-Potts subset form = spin sum", subset, spins);
  Poly fk(statmech::potts_fk(g, k, w));
  r.check("q-Potts at q=1 = FK form", polyq::substitute(subset, Var::q, polyq::Rational(1)), fk);
  r.check("Potts direct = FK form", Poly(statmech::potts_direct(g, k, w)), fk);
}

void suite_ising(const Options&, Inputs& in, Report& r) {
  auto p = statmech::ising_pair(in.graph(), in.couplings());
  r.check("Ising spin sum = q-Potts rewrite", p.first, p.second);
}

void suite_vdw(const Options&, Inputs& in, Report& r) {
  auto g = in.graph();
  auto p = statmech::vdw_pair(g, in.couplings());
  r.check("Ising spin sum = van der Waerden expansion", p.first, p.second);
  auto l = statmech::lemma_w_eval(g);
  r.check("odd-degree lemma", l.first, l.second);
}

void suite_bracket(const Options& o, Inputs& in, Report& r) {
  auto k = in.pd();
  int outer = in.need("outer-face", o.outer_face, 0);
  r.check("loop count = 2c(A) + |A| - |V| on every state", knot::prop_mm_check(k, outer));
  Poly f = knot::kauffman_f(k);
  r.check("subset route = bracket", knot::jones_via_bichromate(k, outer, knot::BichromateRoute::kk), f);
  auto m = knot::median_graph(k, outer);
  if (std::adjacent_find(m.b.begin(), m.b.end(), std::not_equal_to<>()) == m.b.end())
    r.check("bichromate route = bracket", knot::jones_via_bichromate(k, outer, knot::BichromateRoute::kkk), f);
}

void arc_checks(const arcflow::ArcGraph& g, int n, Report& r, const std::string& tag) {
  auto flows = arcflow::enumerate_flows(g, n);
  int bad_cm = 0, bad_main = 0;
  for (const auto& f : flows) {
    Poly c = arcflow::catmm_flow_sum(g, f, n);
    if (!(c == arcflow::ma2_flow_sum(g, f, n))) ++bad_cm;
    if (!(arcflow::z_nf(g, f, n, false) * c == arcflow::main_flow_weight(g, f, n))) ++bad_main;
  }
  const std::string nf = std::to_string(flows.size()) + " flows";
  r.check(tag + "catmm = ma2 per flow (" + nf + ")", bad_cm == 0, std::to_string(bad_cm) + " mismatches");
  r.check(tag + "Z * catmm = main weight per flow (" + nf + ")", bad_main == 0, std::to_string(bad_main) + " mismatches");
}

void suite_colored_jones(const Options& o, Inputs& in, Report& r) {
  auto g = in.arc();
  int n = in.need("n", o.n, 1);
  arc_checks(g, n, r, "");
  Poly main = arcflow::route_sum(g, n, arcflow::Route::main, false);
  r.check("main total = catmm total", main, arcflow::route_sum(g, n, arcflow::Route::catmm, false));
  r.check("main total = ma2 total", main, arcflow::route_sum(g, n, arcflow::Route::ma2, false));
  if (n == 1) {
    int bad = 0;
    for (const auto& f : arcflow::enumerate_flows(g, 1)) {
      Poly b = arcflow::flow_weight_beta(g, f);
      if (!(arcflow::frst_fiber_sum(g, f, 1) == b) || !(arcflow::main_flow_weight(g, f, 1) == b)) ++bad;
    }
    r.check("cabled fiber = main weight = beta at n=1", bad == 0, std::to_string(bad) + " mismatches");
  }
  if (g.has_rot() && g.rot_knot()) {
    Poly j = arcflow::colored_jones(g, n, arcflow::Route::main);
    r.check("J_n main route = ma2 route", j, arcflow::colored_jones(g, n, arcflow::Route::ma2));
  }
}

arcflow::ArcGraph random_arc(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> rd(3, 5), coin(0, 1);
  const int r = rd(rng);
  std::uniform_int_distribution<int> target(1, r);
  std::vector<arcflow::CrossingData> xs;
  std::map<int, std::vector<int>> orders;
  for (int u = 1; u <= r; ++u) xs.push_back({coin(rng) ? 1 : -1, target(rng)});
  std::vector<int> us(static_cast<std::size_t>(r));
  std::iota(us.begin(), us.end(), 1);
  std::shuffle(us.begin(), us.end(), rng);
  for (int u : us) orders[xs[static_cast<std::size_t>(u) - 1].over].push_back(u);
  return arcflow::ArcGraph::build(xs, orders);
}

void suite_arc_random(const Options& o, Inputs& in, Report& r) {
  in.note("seed", std::to_string(o.seed));
  int n = in.need("n", o.n == 0 ? 2 : o.n, 1);
  std::mt19937_64 rng(o.seed);
  for (int i = 0; i < 20; ++i) {
    auto g = random_arc(rng);
    arc_checks(g, n, r, "graph " + std::to_string(i) + ": ");
  }
}

void suite_chordal(const Options& o, Inputs& in, Report& r) {
  auto spec = in.tree();
  int z = in.need("z", o.z, 1);
  auto list = chordal::tree_structures(spec);
  r.check("structure count = product formula", list.structures.size() == chordal::structure_count(spec),
          std::to_string(list.structures.size()) + " vs " + std::to_string(chordal::structure_count(spec)));
  std::optional<Poly> first;
  bool inv = true;
  int idx = 0;
  for (const auto& s : list.structures) {
    auto [lhs, rhs] = chordal::str2_pair(s, z);
    r.check("defected sum = prod (z - m(x))_q on S" + std::to_string(++idx), lhs, rhs);
    if (!first) first = lhs;
    inv = inv && lhs == *first;
  }
  r.check("defected sum independent of the structure", inv);
  auto [lhs, rhs] = chordal::str20_pair(spec, z);
  r.check("weighted structure sum = count * prod (z - m(x))_q", lhs, rhs);
}

// ---- output ----

void emit_text(const Report& r, std::ostream& out) {
  if (r.results.size() == 1 && r.results.front().first.empty()) {
    const auto& v = r.results.front().second;
    out << v << (v.empty() || v.back() != '\n' ? "\n" : "");
  } else {
    for (const auto& [k, v] : r.results) {
      if (k.empty())
        out << v << (v.empty() || v.back() != '\n' ? "\n" : "");
      else
        out << k << ": " << v << "\n";
    }
  }
  if (!r.identities) return;
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(r.digest));
  out << "digest: " << buf << "\n";
  int pass = 0;
  for (const auto& v : r.verdicts) {
    out << (v.pass ? "PASS " : "FAIL ") << v.name << "\n";
    if (v.pass) {
      ++pass;
    } else if (!v.rhs.empty() || !v.lhs.empty()) {
      if (v.rhs.empty()) {
        out << "  " << v.lhs << "\n";
      } else {
        out << "  lhs: " << v.lhs << "\n  rhs: " << v.rhs << "\n";
      }
    }
  }
  out << "identities: " << pass << " passed, " << (r.verdicts.size() - static_cast<std::size_t>(pass)) << " failed\n";
}

void emit_json(const Report& r, std::ostream& out) {
  nlohmann::ordered_json j;
  j["command"] = r.command;
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(r.digest));
  j["digest"] = buf;
  auto& res = j["results"] = nlohmann::ordered_json::array();
  for (const auto& [k, v] : r.results) res.push_back({{"key", k}, {"value", v}});
  if (r.identities) {
    auto& ver = j["verdicts"] = nlohmann::ordered_json::array();
    for (const auto& v : r.verdicts) {
      nlohmann::ordered_json e{{"name", v.name}, {"pass", v.pass}};
      if (!v.pass) {
        e["lhs"] = v.lhs;
        e["rhs"] = v.rhs;
      }
      ver.push_back(e);
    }
    j["all_pass"] = r.all_pass();
  }
  out << j.dump(2) << "\n";
}

using Handler = std::function<void(const Options&, Inputs&, Report&)>;

const std::map<std::string, Handler>& suites() {
  static const std::map<std::string, Handler> s{
      {"qchrom", suite_qchrom},   {"qbinom", suite_qbinom},       {"potts", suite_potts},
      {"ising", suite_ising},     {"vdw", suite_vdw},             {"bracket", suite_bracket},
      {"colored-jones", suite_colored_jones}, {"arc-random", suite_arc_random}, {"chordal", suite_chordal},
  };
  return s;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact q-chromatic, statistical-mechanics and colored-Jones computations", "qgraph"};
  app.require_subcommand(1, 1);
  app.add_option("--emit", o.emit, "Report format")->check(CLI::IsMember({"text", "json"}));
  app.add_flag("--timing", o.timing, "Print wall time to stderr");

  std::map<std::string, Handler> handlers;
  auto sub = [&](const std::string& name, const std::string& help, std::vector<std::string> flags, Handler h) {
    auto* s = app.add_subcommand(name, help);
    for (const auto& f : flags) {
      if (f == "graph") s->add_option("--graph", o.graph, "Graph file");
      if (f == "pd") s->add_option("--pd", o.pd, "PD code file");
      if (f == "arc") s->add_option("--arc", o.arc, "Arc-graph file");
      if (f == "couplings") s->add_option("--couplings", o.couplings, "Coupling file");
      if (f == "tree") s->add_option("--tree", o.tree, "Tree-structure file");
      if (f == "n") s->add_option("--n", o.n, "Number of colours / colour index");
      if (f == "k") s->add_option("--k", o.k, "Number of spin states / clique size");
      if (f == "z") s->add_option("--z", o.z, "Number of colours");
      if (f == "y") s->add_option("--y", o.y, "Component colour count");
      if (f == "outer-face") s->add_option("--outer-face", o.outer_face, "Face id of the outer face");
      if (f == "route") s->add_option("--route", o.route, "ma2, main or catmm");
      if (f == "suite") s->add_option("--suite", o.suite, "Identity suite")->required();
      if (f == "seed") s->add_option("--seed", o.seed, "Seed for randomized sweeps");
      if (f == "form") s->add_option("--form", o.form, "Output form");
      if (f == "method") s->add_option("--method", o.method, "Evaluation method");
      if (f == "bichromate-route") s->add_option("--bichromate-route", o.bichromate_route, "none, kk or kkk");
    }
    handlers[name] = std::move(h);
  };
  sub("qchrom", "q-chromatic function M_q(G,n)", {"graph", "n", "k", "method"}, cmd_qchrom);
  sub("bichromate", "Bichromate B(G;a,b)", {"graph"},
      [](const Options&, Inputs& in, Report& r) { r.result("", qchrom::bichromate(in.graph()).str()); });
  sub("tutte", "Tutte or Whitney rank polynomial", {"graph", "form"}, cmd_tutte);
  sub("qbichromate", "q-bichromate at component colour count y", {"graph", "y"},
      [](const Options& o, Inputs& in, Report& r) { r.result("", qchrom::q_bichromate(in.graph(), in.need("y", o.y, 1)).str()); });
  sub("potts", "Potts partition function", {"graph", "k", "couplings", "method"}, cmd_potts);
  sub("qpotts", "q-Potts function, both forms", {"graph", "k", "couplings"},
      [](const Options& o, Inputs& in, Report& r) {
        auto g = in.graph();
        pair_result(r, "subset", "spins", statmech::qpotts_pair(g, in.need("k", o.k, 1), in.couplings()));
      });
  sub("ising", "q-Ising function, both forms", {"graph", "couplings"},
      [](const Options&, Inputs& in, Report& r) {
        auto g = in.graph();
        pair_result(r, "spins", "potts", statmech::ising_pair(g, in.couplings()));
      });
  sub("vdw", "q-Ising function and its van der Waerden expansion", {"graph", "couplings"},
      [](const Options&, Inputs& in, Report& r) {
        auto g = in.graph();
        pair_result(r, "spins", "expansion", statmech::vdw_pair(g, in.couplings()));
      });
  sub("jones", "Jones polynomial or normalized bracket", {"pd", "form", "outer-face", "bichromate-route"}, cmd_jones);
  sub("median", "Median graph of a shaded diagram", {"pd", "outer-face"}, cmd_median);
  sub("faces", "Faces of a PD diagram with their ids", {"pd"}, cmd_faces);
  sub("colored-jones", "Colored Jones function from an arc graph", {"arc", "n", "route"}, cmd_colored_jones);
  sub("chordal-check", "Perfect elimination order or tree structures", {"graph", "tree"}, cmd_chordal_check);
  sub("identities", "Run an identity suite", {"suite", "graph", "pd", "arc", "couplings", "tree", "n", "k", "z", "y",
                                               "outer-face", "seed"},
      [](const Options& o, Inputs& in, Report& r) {
        auto it = suites().find(o.suite);
        if (it == suites().end()) {
          std::string names;
          for (const auto& [k, v] : suites()) names += (names.empty() ? "" : ", ") + k;
          throw UsageError("unknown suite '" + o.suite + "' (known: " + names + ")");
        }
        r.identities = true;
        in.note("suite", o.suite);
        it->second(o, in, r);
      });

  std::vector<const char*> argv{"qgraph"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  const auto t0 = std::chrono::steady_clock::now();
  Report report;
  report.command = command;
  Inputs in(o);
  try {
    handlers.at(command)(o, in, report);
  } catch (const ParseError& e) {
    err << "qgraph: " << e.what() << "\n";
    return kExitInputError;
  } catch (const UsageError& e) {
    err << "qgraph: " << e.what() << "\n";
    return kExitInputError;
  } catch (const DomainError& e) {
    err << "qgraph: " << e.what() << "\n";
    return kExitInputError;
  } catch (const ConfigError& e) {
    err << "qgraph: " << e.what() << "\n";
    return kExitInputError;
  }
  report.digest = in.digest(command);
  if (o.emit == "json")
    emit_json(report, out);
  else
    emit_text(report, out);
  if (o.timing) {
    std::chrono::duration<double> dt = std::chrono::steady_clock::now() - t0;
    err << "wall time: " << dt.count() << " s\n";
  }
  return report.identities && !report.all_pass() ? kExitIdentityFailure : kExitOk;
}

}  // namespace qgraph::cli
