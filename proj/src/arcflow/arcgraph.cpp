#include <algorithm>
#include <set>

#include "qgraph/arcflow.hpp"
#include "qgraph/errors.hpp"
#include "qgraph/textio.hpp"

namespace qgraph::arcflow {

ArcGraph ArcGraph::build(const std::vector<CrossingData>& crossings, const std::map<int, std::vector<int>>& red_orders,
                         std::optional<std::map<EdgeKey, int>> rot, std::optional<int> rot_knot) {
  const int r = static_cast<int>(crossings.size());
  if (r < 1) throw DomainError("arc graph needs at least one crossing");
  ArcGraph g;
  g.sign_.assign(static_cast<std::size_t>(r) + 1, 0);
  g.over_.assign(static_cast<std::size_t>(r) + 1, 0);
  g.order_.assign(static_cast<std::size_t>(r) + 1, {});
  for (int u = 1; u <= r; ++u) {
    const auto& c = crossings[static_cast<std::size_t>(u) - 1];
    if (c.sign != 1 && c.sign != -1) throw DomainError("sign of vertex " + std::to_string(u) + " must be +1 or -1");
    if (c.over < 1 || c.over > r)
      throw DomainError("over-arc " + std::to_string(c.over) + " of vertex " + std::to_string(u) + " outside 1.." +
                        std::to_string(r));
    g.sign_[static_cast<std::size_t>(u)] = c.sign;
    g.over_[static_cast<std::size_t>(u)] = c.over;
    g.order_[static_cast<std::size_t>(c.over)].push_back(u);
  }
  for (const auto& [v, list] : red_orders) {
    if (v < 1 || v > r) throw DomainError("entering order for unknown vertex " + std::to_string(v));
    auto expect = g.order_[static_cast<std::size_t>(v)];
    auto got = list;
    std::sort(got.begin(), got.end());
    if (got != expect)
      throw DomainError("entering order of vertex " + std::to_string(v) + " must list exactly its red in-edges");
    g.order_[static_cast<std::size_t>(v)] = list;
  }
  if (rot)
    for (const auto& [e, val] : *rot)
      if (e.index < 1 || e.index > r) throw DomainError("rot given for unknown edge " + e.str());
  g.rot_ = std::move(rot);
  g.rot_knot_ = rot_knot;
  return g;
}

int ArcGraph::writhe() const {
  int w = 0;
  for (int v = 1; v <= r(); ++v) w += sign(v);
  return w;
}

std::vector<int> ArcGraph::reduced_order(int v) const {
  std::vector<int> out;
  for (int u : order(v))
    if (reduced_has_red(u)) out.push_back(u);
  return out;
}

int ArcGraph::rot(EdgeKey e) const {
  if (!rot_) throw ConfigError("arc graph has no rot decorations");
  auto it = rot_->find(e);
  return it == rot_->end() ? 0 : it->second;
}

ArcGraph ArcGraph::with_rot(std::map<EdgeKey, int> rot, int rot_knot) const {
  ArcGraph g = *this;
  g.rot_ = std::move(rot);
  g.rot_knot_ = rot_knot;
  return g;
}

std::string ArcGraph::to_text() const {
  std::string s = "crossings " + std::to_string(r()) + "\nsigns";
  for (int v = 1; v <= r(); ++v) s += sign(v) > 0 ? " +" : " -";
  s += "\nover";
  for (int v = 1; v <= r(); ++v) s += " " + std::to_string(over(v));
  s += "\n";
  for (int v = 1; v <= r(); ++v) {
    if (order(v).empty()) continue;
    s += "order " + std::to_string(v);
    for (int u : order(v)) s += " r " + std::to_string(u);
    s += "\n";
  }
  if (rot_)
    for (const auto& [e, val] : *rot_) s += "rot " + e.str() + " " + std::to_string(val) + "\n";
  if (rot_knot_) s += "rotK " + std::to_string(*rot_knot_) + "\n";
  return s;
}

namespace {

int parse_sign(const textio::Line& ln, const textio::Token& t) {
  if (t.text == "+") return 1;
  if (t.text == "-" || t.text == "\xE2\x88\x92") return -1;
  textio::fail(ln, t, "expected sign + or -");
}

}  // namespace

ArcGraph parse_arc(std::string_view text) {
  auto lines = textio::tokenize(text);
  if (lines.empty()) throw ParseError("arc: empty input", 1, 1);
  const auto& head = lines.front();
  if (head.tokens.front().text != "crossings") textio::fail(head, head.tokens.front(), "expected 'crossings'");
  textio::expect_count(head, 2);
  long r = textio::parse_int(head, head.tokens[1]);
  if (r < 1 || r > 64) textio::fail(head, head.tokens[1], "crossing count out of range");
  std::vector<CrossingData> xs(static_cast<std::size_t>(r), CrossingData{0, 0});
  bool have_signs = false, have_over = false;
  std::map<int, std::vector<int>> orders;
  std::optional<std::map<EdgeKey, int>> rot;
  std::optional<int> rot_knot;
  std::set<EdgeKey> rot_seen;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& ln = lines[i];
    const auto& kw = ln.tokens.front();
    if (kw.text == "signs") {
      textio::expect_count(ln, static_cast<std::size_t>(r) + 1);
      for (long v = 0; v < r; ++v) xs[static_cast<std::size_t>(v)].sign = parse_sign(ln, ln.tokens[static_cast<std::size_t>(v) + 1]);
      have_signs = true;
    } else if (kw.text == "over") {
      textio::expect_count(ln, static_cast<std::size_t>(r) + 1);
      for (long v = 0; v < r; ++v) {
        const auto& t = ln.tokens[static_cast<std::size_t>(v) + 1];
        long o = textio::parse_int(ln, t);
        if (o < 1 || o > r) textio::fail(ln, t, "over-arc outside 1.." + std::to_string(r));
        xs[static_cast<std::size_t>(v)].over = static_cast<int>(o);
      }
      have_over = true;
    } else if (kw.text == "rot") {
      textio::expect_count(ln, 4);
      const auto& kind = ln.tokens[1];
      if (kind.text != "b" && kind.text != "r") textio::fail(ln, kind, "edge kind must be b or r");
      long idx = textio::parse_int(ln, ln.tokens[2]);
      if (idx < 1 || idx > r) textio::fail(ln, ln.tokens[2], "edge index out of range");
      EdgeKey e{kind.text == "r", static_cast<int>(idx)};
      if (!rot_seen.insert(e).second) textio::fail(ln, kind, "duplicate rot for edge " + e.str());
      if (!rot) rot.emplace();
      (*rot)[e] = static_cast<int>(textio::parse_int(ln, ln.tokens[3]));
    } else if (kw.text == "order") {
      textio::expect_at_least(ln, 2);
      long v = textio::parse_int(ln, ln.tokens[1]);
      if (v < 1 || v > r) textio::fail(ln, ln.tokens[1], "vertex out of range");
      if (orders.count(static_cast<int>(v))) textio::fail(ln, ln.tokens[1], "duplicate order line");
      if ((ln.tokens.size() - 2) % 2 != 0) textio::fail(ln, "order entries come in pairs '<b|r> <index>'");
      std::vector<int> reds;
      for (std::size_t j = 2; j < ln.tokens.size(); j += 2) {
        const auto& kind = ln.tokens[j];
        long idx = textio::parse_int(ln, ln.tokens[j + 1]);
        if (kind.text == "b") {
          if (j != 2) textio::fail(ln, kind, "the blue edge must precede every red edge in an entering order");
          long expect = v == 1 ? r : v - 1;
          if (idx != expect) textio::fail(ln, ln.tokens[j + 1], "blue edge entering vertex " + std::to_string(v) + " is b " + std::to_string(expect));
        } else if (kind.text == "r") {
          reds.push_back(static_cast<int>(idx));
        } else {
          textio::fail(ln, kind, "edge kind must be b or r");
        }
      }
      orders[static_cast<int>(v)] = reds;
    } else if (kw.text == "rotK") {
      textio::expect_count(ln, 2);
      if (rot_knot) textio::fail(ln, kw, "duplicate rotK");
      rot_knot = static_cast<int>(textio::parse_int(ln, ln.tokens[1]));
    } else {
      textio::fail(ln, kw, "unknown keyword");
    }
  }
  if (!have_signs) throw ParseError("arc: missing 'signs' line", head.number, 1);
  if (!have_over) throw ParseError("arc: missing 'over' line", head.number, 1);
  try {
    return ArcGraph::build(xs, orders, rot, rot_knot);
  } catch (const DomainError& e) {
    throw ParseError(std::string("arc: ") + e.what(), head.number, 1);
  }
}

ArcGraph load_arc(const std::string& path) { return parse_arc(textio::read_file(path)); }

ArcGraph arcgraph_from_pd(const knot::KnotPD& k) {
  const int r = k.size();
  // label -> (crossing, under?) for the end where the strand enters
  std::map<int, std::pair<int, bool>> in_at;
  for (int x = 0; x < r; ++x) {
    const auto& c = k.crossing(x);
    in_at[c.arm[0]] = {x, true};
    in_at[c.arm[static_cast<std::size_t>(c.over_in())]] = {x, false};
  }
  std::vector<std::pair<int, bool>> seq;
  int label = k.crossing(0).arm[2];
  for (int step = 0; step < 2 * r; ++step) {
    auto [x, under] = in_at.at(label);
    seq.emplace_back(x, under);
    const auto& c = k.crossing(x);
    label = under ? c.arm[2] : c.arm[static_cast<std::size_t>(c.over_out())];
  }
  std::vector<int> num(static_cast<std::size_t>(r), 0);
  int next = 0;
  for (auto [x, under] : seq)
    if (under) num[static_cast<std::size_t>(x)] = ++next;
  std::vector<CrossingData> xs(static_cast<std::size_t>(r), CrossingData{0, 0});
  for (int x = 0; x < r; ++x) xs[static_cast<std::size_t>(num[static_cast<std::size_t>(x)]) - 1].sign = k.crossing(x).sign;
  std::map<int, std::vector<int>> orders;
  int arc = 1;  // arc currently travelled ends at under-crossing number `arc`
  for (auto [x, under] : seq) {
    if (under) {
      ++arc;
    } else {
      int u = num[static_cast<std::size_t>(x)];
      xs[static_cast<std::size_t>(u) - 1].over = arc;
      orders[arc].push_back(u);
    }
  }
  return ArcGraph::build(xs, orders);
}

}  // namespace qgraph::arcflow
