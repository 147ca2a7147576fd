#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qgraph/graph.hpp"
#include "qgraph/polyq.hpp"

namespace qgraph::statmech {

using graph::Multigraph;
using polyq::Poly;
using polyq::Rational;

// (cosh J, sinh J) given exactly.
struct Hyperbolic {
  Rational c;
  Rational h;
};

// Per-edge couplings, either as v = e^J - 1 or as a hyperbolic pair.
class Couplings {
 public:
  static Couplings from_v(std::vector<Rational> v);
  static Couplings uniform_v(int edges, const Rational& v);
  static Couplings from_hyperbolic(std::vector<Hyperbolic> ch);

  int size() const { return static_cast<int>(v_.size()); }
  bool hyperbolic() const;
  Rational v(int e) const { return v_.at(static_cast<std::size_t>(e)); }
  const Hyperbolic& ch(int e) const;

 private:
  std::vector<Rational> v_;
  std::vector<std::optional<Hyperbolic>> ch_;
};

void validate(const Hyperbolic& p);

// One line per edge id: "v <rational>" or "ch <c> <h>".
Couplings parse_couplings(std::string_view text);
Couplings load_couplings(const std::string& path);

Rational potts_direct(const Multigraph& g, int k, const Couplings& w);
Rational potts_fk(const Multigraph& g, int k, const Couplings& w);

// (subset expansion, spin sum with q-weight over spins 0..k-1)
std::pair<Poly, Poly> qpotts_pair(const Multigraph& g, int k, const Couplings& w);
// (direct +-1 spin sum, rewriting through the k=2 q-Potts form at q^2)
std::pair<Poly, Poly> ising_pair(const Multigraph& g, const Couplings& w);
// (direct +-1 spin sum, high-temperature subset expansion)
std::pair<Poly, Poly> vdw_pair(const Multigraph& g, const Couplings& w);
// (sum_s q^{sum s} prod_E s_i s_j, (q-1/q)^{o(E)} (q+1/q)^{|V|-o(E)})
std::pair<Poly, Poly> lemma_w_eval(const Multigraph& g);

}  // namespace qgraph::statmech
