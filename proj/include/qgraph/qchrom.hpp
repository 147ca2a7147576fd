#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qgraph/graph.hpp"
#include "qgraph/polyq.hpp"

namespace qgraph::qchrom {

using graph::Multigraph;
using polyq::Poly;

// Sum of q^{v_1+...+v_k} over proper colourings by {0..n-1}.
Poly mq_direct(const Multigraph& g, int n);
// Subset expansion sum_A (-1)^{|A|} prod_W (n)_{q^{|W|}}.
Poly mq_subset(const Multigraph& g, int n);
// k! [n choose k]_q q^{k(k-1)/2}; zero when k > n.
Poly mq_complete(int k, int n);

// sum_A a^{c(A)} b^{|A|}
Poly bichromate(const Multigraph& g);

enum class TutteForm { tutte, whitney_rank };
// Tutte polynomial in x,y or Whitney rank polynomial in u,v.
Poly tutte(const Multigraph& g, TutteForm form);

// sum_A x^{|A|} prod_W (y)_{q^{|W|}}
Poly q_bichromate(const Multigraph& g, int y);

// A chord on a line of positions. Groups record which vertex block of the
// line (starts of block g, then terminals of block g) each endpoint lies in.
struct Chord {
  int start;
  int end;
  int start_group;
  int end_group;
  friend bool operator==(const Chord&, const Chord&) = default;
  friend auto operator<=>(const Chord&, const Chord&) = default;
};

class ChordDiagram {
 public:
  ChordDiagram() = default;
  // Position pairs only; groups assigned canonically (a maximal run of
  // starting endpoints followed by a maximal run of terminal endpoints).
  static ChordDiagram from_positions(std::vector<std::pair<int, int>> chords);
  static ChordDiagram from_chords(std::vector<Chord> chords);

  const std::vector<Chord>& chords() const { return chords_; }
  std::size_t size() const { return chords_.size(); }
  // Chord i strictly encircles position p.
  bool encircles(std::size_t i, int p) const { return chords_[i].start < p && p < chords_[i].end; }
  bool adjacent(std::size_t i, std::size_t j) const;
  Multigraph intersection_graph() const;
  std::string str() const;
  friend bool operator==(const ChordDiagram&, const ChordDiagram&) = default;
  friend auto operator<=>(const ChordDiagram& a, const ChordDiagram& b) { return a.chords_ <=> b.chords_; }

 private:
  void validate() const;
  std::vector<Chord> chords_;
};

// Defected q-chromatic operator on the intersection graph of d, in t.
Poly mdef_chord(const ChordDiagram& d, int n);

}  // namespace qgraph::qchrom
