#include <algorithm>
#include <set>

#include "qgraph/errors.hpp"
#include "qgraph/qchrom.hpp"

namespace qgraph::qchrom {

ChordDiagram ChordDiagram::from_positions(std::vector<std::pair<int, int>> chords) {
  struct End {
    int pos;
    std::size_t chord;
    bool start;
  };
  std::vector<End> ends;
  for (std::size_t i = 0; i < chords.size(); ++i) {
    ends.push_back({chords[i].first, i, true});
    ends.push_back({chords[i].second, i, false});
  }
  std::sort(ends.begin(), ends.end(), [](const End& a, const End& b) { return a.pos < b.pos; });
  std::vector<Chord> out(chords.size());
  int group = 1;
  bool last_terminal = false;
  for (const auto& e : ends) {
    if (e.start && last_terminal) ++group;
    last_terminal = !e.start;
    auto& c = out[e.chord];
    if (e.start) {
      c.start = e.pos;
      c.start_group = group;
    } else {
      c.end = e.pos;
      c.end_group = group;
    }
  }
  return from_chords(std::move(out));
}

ChordDiagram ChordDiagram::from_chords(std::vector<Chord> chords) {
  ChordDiagram d;
  std::sort(chords.begin(), chords.end());
  d.chords_ = std::move(chords);
  d.validate();
  return d;
}

void ChordDiagram::validate() const {
  std::set<int> seen;
  for (const auto& c : chords_) {
    if (c.start >= c.end) throw DomainError("chord must start before it ends");
    if (c.start_group > c.end_group) throw DomainError("chord terminal group precedes its start group");
    if (!seen.insert(c.start).second || !seen.insert(c.end).second)
      throw DomainError("chord endpoints must be distinct positions");
  }
}

bool ChordDiagram::adjacent(std::size_t i, std::size_t j) const {
  const auto& a = chords_[i];
  const auto& b = chords_[j];
  return !(a.end < b.start || b.end < a.start);
}

Multigraph ChordDiagram::intersection_graph() const {
  Multigraph g(static_cast<int>(chords_.size()));
  for (std::size_t i = 0; i < chords_.size(); ++i)
    for (std::size_t j = i + 1; j < chords_.size(); ++j)
      if (adjacent(i, j)) g.add_edge(static_cast<int>(i) + 1, static_cast<int>(j) + 1);
  return g;
}

std::string ChordDiagram::str() const {
  std::string s;
  for (const auto& c : chords_) {
    if (!s.empty()) s += ' ';
    s += "(" + std::to_string(c.start) + "," + std::to_string(c.end) + ")";
  }
  return s.empty() ? "()" : s;
}

namespace {

struct DefectTables {
  std::vector<std::vector<std::size_t>> back;  // adjacent chords with smaller index
  std::vector<std::vector<std::size_t>> penalty;  // P(D,c) followed by Q(D,c)
};

DefectTables defect_tables(const ChordDiagram& d) {
  const std::size_t m = d.size();
  DefectTables t{std::vector<std::vector<std::size_t>>(m), std::vector<std::vector<std::size_t>>(m)};
  const auto& ch = d.chords();
  for (std::size_t c = 0; c < m; ++c) {
    for (std::size_t x = 0; x < c; ++x)
      if (d.adjacent(c, x)) t.back[c].push_back(x);
    for (std::size_t x = 0; x < m; ++x) {
      if (x == c) continue;
      if (d.encircles(x, ch[c].start)) t.penalty[c].push_back(x);
      // Q: encircles the terminal of c and ends in a later vertex group.
      if (d.encircles(x, ch[c].end) && ch[x].end_group > ch[c].end_group) t.penalty[c].push_back(x);
    }
  }
  return t;
}

void mdef_rec(std::size_t c, int n, const DefectTables& t, std::vector<int>& val, polyq::ExpCounter& acc) {
  const std::size_t m = val.size();
  if (c == m) {
    int ex = 0;
    for (std::size_t i = 0; i < m; ++i) {
      ex += val[i];
      for (std::size_t x : t.penalty[i])
        if (val[x] < val[i]) --ex;
    }
    acc.add(ex);
    return;
  }
  for (int v = 0; v < n; ++v) {
    bool ok = true;
    for (std::size_t x : t.back[c])
      if (val[x] == v) {
        ok = false;
        break;
      }
    if (!ok) continue;
    val[c] = v;
    mdef_rec(c + 1, n, t, val, acc);
  }
}

}  // namespace

Poly mdef_chord(const ChordDiagram& d, int n) {
  if (n < 1) throw DomainError("mdef_chord: n must be positive");
  auto t = defect_tables(d);
  std::vector<int> val(d.size(), -1);
  polyq::ExpCounter acc;
  mdef_rec(0, n, t, val, acc);
  return acc.to_poly(polyq::Var::t);
}

}  // namespace qgraph::qchrom
