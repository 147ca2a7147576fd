#include <atomic>
#include <limits>
#include <mutex>
#include <thread>

#include "qgraph/chordal.hpp"

namespace qgraph::chordal {

namespace {

struct Shape {
  std::vector<int> parent;  // 1-based, parent[1] = 0
  std::vector<int> a, b;
};

// Parent lists with parent(w) < w; node 1 is the root.
void trees(int max_nodes, std::vector<std::vector<int>>& out) {
  for (int n = 1; n <= max_nodes; ++n) {
    std::vector<int> p(static_cast<std::size_t>(n) + 1, 0);
    auto rec = [&](auto&& self, int w) -> void {
      if (w > n) {
        out.push_back(p);
        return;
      }
      for (int q = 1; q < w; ++q) {
        p[static_cast<std::size_t>(w)] = q;
        self(self, w + 1);
      }
    };
    rec(rec, 2);
  }
}

void tuples(int len, int lo, int hi, std::vector<std::vector<int>>& out) {
  std::vector<int> t(static_cast<std::size_t>(len), lo);
  while (true) {
    out.push_back(t);
    int i = 0;
    while (i < len && ++t[static_cast<std::size_t>(i)] > hi) t[static_cast<std::size_t>(i++)] = lo;
    if (i == len) break;
  }
}

TreeSpec spec_of(const Shape& s) {
  TreeSpec t;
  t.parent = s.parent;
  const std::size_t n = s.parent.size();
  t.A.assign(n, {});
  t.b.assign(n, 0);
  int next = 1;
  for (std::size_t w = 1; w < n; ++w) {
    for (int j = 0; j < s.a[w - 1]; ++j) t.A[w].push_back(next++);
    t.b[w] = s.b[w - 1];
  }
  return t;
}

}  // namespace

GridReport run_grid(int max_nodes, int max_a, int max_b, int max_z, unsigned threads) {
  std::vector<Shape> shapes;
  std::vector<std::vector<int>> ps;
  trees(max_nodes, ps);
  for (const auto& p : ps) {
    const int n = static_cast<int>(p.size()) - 1;
    std::vector<std::vector<int>> as, bs;
    tuples(n, 1, max_a, as);
    tuples(n - 1, 0, max_b, bs);
    for (const auto& a : as)
      for (const auto& bt : bs) {
        std::vector<int> b{0};
        b.insert(b.end(), bt.begin(), bt.end());
        shapes.push_back({p, a, b});
      }
  }

  GridReport total;
  std::mutex mu;
  std::size_t first_fail = std::numeric_limits<std::size_t>::max();
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    GridReport local;
    std::size_t local_first = std::numeric_limits<std::size_t>::max();
    std::string local_desc;
    for (std::size_t i = next++; i < shapes.size(); i = next++) {
      const TreeSpec spec = spec_of(shapes[i]);
      const auto list = tree_structures(spec);
      const bool count_ok = list.structures.size() == structure_count(spec);
      local.structures += static_cast<long>(list.structures.size());
      for (const auto& st : list.structures)
        if (!peo(graph_of_structure(st)).chordal) ++local.graph_failures;
      for (int z = 1; z <= max_z; ++z) {
        ++local.instances;
        if (!count_ok) ++local.count_failures;
        const Poly rhs = m_product(spec, z);
        Poly plain_sum;
        bool str2_ok = true, inv_ok = true;
        std::optional<Poly> first;
        for (const auto& st : list.structures) {
          auto [d, p] = colouring_sums(st, z);
          str2_ok = str2_ok && d == rhs;
          if (!first) first = d;
          inv_ok = inv_ok && d == *first;
          plain_sum += p;
        }
        if (!str2_ok) ++local.str2_failures;
        if (!inv_ok) ++local.invariance_failures;
        const Poly lhs20 = structure_weight(spec) * plain_sum;
        const Poly rhs20 = rhs * Poly(static_cast<long>(structure_count(spec)));
        if (!(lhs20 == rhs20)) {
          ++local.str20_failures;
          const std::size_t key = i * static_cast<std::size_t>(max_z) + static_cast<std::size_t>(z);
          if (key < local_first) {
            local_first = key;
            local_desc = to_text(spec) + "z " + std::to_string(z) + "\nlhs " + lhs20.str() + "\nrhs " + rhs20.str();
          }
        }
      }
    }
    std::lock_guard<std::mutex> lock(mu);
    total.instances += local.instances;
    total.structures += local.structures;
    total.count_failures += local.count_failures;
    total.str2_failures += local.str2_failures;
    total.str20_failures += local.str20_failures;
    total.invariance_failures += local.invariance_failures;
    total.graph_failures += local.graph_failures;
    if (local_first < first_fail) {
      first_fail = local_first;
      total.first_str20_failure = local_desc;
    }
  };
  if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  return total;
}

}  // namespace qgraph::chordal
