#include <algorithm>
#include <map>

#include "qgraph/errors.hpp"
#include "qgraph/knot.hpp"
#include "qgraph/textio.hpp"

namespace qgraph::knot {

namespace {

void validate(const std::vector<Crossing>& xs) {
  const int r = static_cast<int>(xs.size());
  if (r == 0) throw DomainError("diagram has no crossings");
  if (r > kMaxStateCrossings) throw DomainError("too many crossings");
  std::vector<int> ins(static_cast<std::size_t>(2 * r) + 1, 0), outs(ins.size(), 0);
  for (const auto& x : xs) {
    if (x.sign != 1 && x.sign != -1) throw DomainError("crossing sign must be +1 or -1");
    for (int i = 0; i < 4; ++i) {
      int l = x.arm[static_cast<std::size_t>(i)];
      if (l < 1 || l > 2 * r) throw DomainError("arc label " + std::to_string(l) + " outside 1.." + std::to_string(2 * r));
      bool in = i == 0 || i == x.over_in();
      ++(in ? ins : outs)[static_cast<std::size_t>(l)];
    }
  }
  for (int l = 1; l <= 2 * r; ++l) {
    int total = ins[static_cast<std::size_t>(l)] + outs[static_cast<std::size_t>(l)];
    if (total != 2) throw DomainError("arc label " + std::to_string(l) + " occurs " + std::to_string(total) + " times");
    if (ins[static_cast<std::size_t>(l)] != 1)
      throw DomainError("arc label " + std::to_string(l) + " is not one incoming and one outgoing end");
  }
  // Follow the strand from label 1.
  std::map<int, std::pair<int, int>> in_at;  // label -> (crossing, exit arm)
  for (int i = 0; i < r; ++i) {
    const auto& x = xs[static_cast<std::size_t>(i)];
    in_at[x.arm[0]] = {i, 2};
    in_at[x.arm[static_cast<std::size_t>(x.over_in())]] = {i, x.over_out()};
  }
  int label = 1, steps = 0;
  do {
    auto [c, out] = in_at.at(label);
    label = xs[static_cast<std::size_t>(c)].arm[static_cast<std::size_t>(out)];
    ++steps;
  } while (label != 1 && steps <= 2 * r);
  if (steps != 2 * r) throw DomainError("diagram has more than one component");
}

}  // namespace

KnotPD KnotPD::from_crossings(std::vector<Crossing> xs) {
  validate(xs);
  KnotPD k;
  k.xs_ = std::move(xs);
  return k;
}

int KnotPD::writhe() const {
  int w = 0;
  for (const auto& x : xs_) w += x.sign;
  return w;
}

std::string KnotPD::to_text() const {
  std::string s;
  for (const auto& x : xs_) {
    s += x.sign > 0 ? "X+" : "X-";
    for (int l : x.arm) s += " " + std::to_string(l);
    s += "\n";
  }
  return s;
}

KnotPD parse_pd(std::string_view text) {
  std::vector<Crossing> xs;
  auto lines = textio::tokenize(text);
  for (const auto& ln : lines) {
    const auto& head = ln.tokens.front();
    int sign = 0;
    if (head.text == "X+")
      sign = 1;
    else if (head.text == "X-" || head.text == "X\xE2\x88\x92")
      sign = -1;
    else
      textio::fail(ln, head, "expected crossing token X+ or X-");
    textio::expect_count(ln, 5);
    Crossing x{sign, {}};
    for (std::size_t i = 0; i < 4; ++i) x.arm[i] = static_cast<int>(textio::parse_int(ln, ln.tokens[i + 1]));
    xs.push_back(x);
  }
  if (xs.empty()) throw ParseError("pd: no crossings", 1, 1);
  try {
    return KnotPD::from_crossings(std::move(xs));
  } catch (const DomainError& e) {
    throw ParseError(std::string("pd: ") + e.what(), lines.front().number, 1);
  }
}

KnotPD load_pd(const std::string& path) { return parse_pd(textio::read_file(path)); }

KnotPD mirror(const KnotPD& k) {
  std::vector<Crossing> xs;
  for (const auto& x : k.crossings()) {
    const auto& [a, b, c, d] = x.arm;
    // The old over-strand becomes the under-strand; rotate so it starts the list.
    if (x.sign > 0)
      xs.push_back({-1, {d, a, b, c}});
    else
      xs.push_back({1, {b, c, d, a}});
  }
  return KnotPD::from_crossings(std::move(xs));
}

KnotPD connected_sum(const KnotPD& k1, const KnotPD& k2) {
  const int shift = 2 * k1.size();
  std::vector<Crossing> xs = k1.crossings();
  for (auto x : k2.crossings()) {
    for (int& l : x.arm) l += shift;
    xs.push_back(x);
  }
  // Swap the incoming ends of arc 1 of each summand.
  auto incoming = [&](int label) -> int* {
    for (auto& x : xs) {
      if (x.arm[0] == label) return &x.arm[0];
      if (x.arm[static_cast<std::size_t>(x.over_in())] == label) return &x.arm[static_cast<std::size_t>(x.over_in())];
    }
    throw DomainError("connected_sum: label not found");
  };
  int* e1 = incoming(1);
  int* e2 = incoming(1 + shift);
  std::swap(*e1, *e2);
  return KnotPD::from_crossings(std::move(xs));
}

int loop_count(const KnotPD& k, BracketState s) {
  const int r = k.size();
  std::vector<int> parent(static_cast<std::size_t>(2 * r) + 1);
  for (int i = 0; i <= 2 * r; ++i) parent[static_cast<std::size_t>(i)] = i;
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    return x;
  };
  auto unite = [&](int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); };
  for (int i = 0; i < r; ++i) {
    const auto& [a, b, c, d] = k.crossing(i).arm;
    if ((s >> i) & 1U) {
      unite(a, d);
      unite(b, c);
    } else {
      unite(a, b);
      unite(c, d);
    }
  }
  int loops = 0;
  for (int l = 1; l <= 2 * r; ++l)
    if (find(l) == l) ++loops;
  return loops;
}

}  // namespace qgraph::knot
