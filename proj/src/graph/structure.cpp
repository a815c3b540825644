// Copyright 2026 The bpsim Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "bp/graph/structure.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <string>
#include <vector>

namespace bp {
namespace {

class BitSet {
 public:
  explicit BitSet(std::size_t n) : words_((n + 63) / 64, 0) {}

  void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  void reset(std::size_t i) { words_[i / 64] &= ~(std::uint64_t{1} << (i % 64)); }
  bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1; }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool none() const {
    return std::all_of(words_.begin(), words_.end(),
                       [](std::uint64_t w) { return w == 0; });
  }
  std::size_t count_and(const BitSet& o) const {
    std::size_t c = 0;
    for (std::size_t i = 0; i < words_.size(); ++i) {
      c += static_cast<std::size_t>(std::popcount(words_[i] & o.words_[i]));
    }
    return c;
  }
  void and_not(const BitSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
  }
  void and_with(const BitSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
  }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      std::uint64_t w = words_[i];
      while (w != 0) {
        f(i * 64 + static_cast<std::size_t>(std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }

 private:
  std::vector<std::uint64_t> words_;
};

class IndependenceSearch {
 public:
  IndependenceSearch(std::vector<BitSet> adj, std::uint64_t budget, VertexId owner)
      : adj_(std::move(adj)), budget_(budget), owner_(owner) {}

  std::size_t solve() {
    BitSet all(adj_.size());
    for (std::size_t i = 0; i < adj_.size(); ++i) all.set(i);
    expand(all, 0);
    return best_;
  }

 private:
  // Greedy clique partition; an independent set uses at most one vertex
  // per clique.
  std::size_t clique_cover_bound(const BitSet& cand) const {
    BitSet left = cand;
    std::size_t cliques = 0;
    while (!left.none()) {
      std::size_t first = 0;
      bool found = false;
      left.for_each([&](std::size_t i) {
        if (!found) {
          first = i;
          found = true;
        }
      });
      BitSet common = adj_[first];
      common.and_with(left);
      left.reset(first);
      while (!common.none()) {
        std::size_t pick = 0;
        bool got = false;
        common.for_each([&](std::size_t i) {
          if (!got) {
            pick = i;
            got = true;
          }
        });
        left.reset(pick);
        common.reset(pick);
        common.and_with(adj_[pick]);
      }
      ++cliques;
    }
    return cliques;
  }

  void expand(const BitSet& cand, std::size_t size) {
    if (++nodes_ > budget_) {
      throw BudgetExceeded(owner_, "independence search at vertex " +
                                       std::to_string(owner_) +
                                       " exceeded its node budget");
    }
    if (cand.none()) {
      best_ = std::max(best_, size);
      return;
    }
    if (size + cand.count() <= best_) return;
    if (size + clique_cover_bound(cand) <= best_) return;

    std::size_t min_v = 0, max_v = 0;
    std::size_t min_d = ~std::size_t{0}, max_d = 0;
    cand.for_each([&](std::size_t i) {
      const std::size_t d = adj_[i].count_and(cand);
      if (d < min_d) {
        min_d = d;
        min_v = i;
      }
      if (d > max_d) {
        max_d = d;
        max_v = i;
      }
    });
    // A vertex of degree <= 1 can always be swapped into a maximum set.
    if (min_d <= 1) {
      BitSet next = cand;
      next.and_not(adj_[min_v]);
      next.reset(min_v);
      expand(next, size + 1);
      return;
    }
    BitSet with = cand;
    with.and_not(adj_[max_v]);
    with.reset(max_v);
    expand(with, size + 1);
    BitSet without = cand;
    without.reset(max_v);
    expand(without, size);
  }

  std::vector<BitSet> adj_;
  std::uint64_t budget_;
  VertexId owner_;
  std::uint64_t nodes_ = 0;
  std::size_t best_ = 0;
};

}  // namespace

std::size_t local_independence(const Graph& g, VertexId v,
                               std::uint64_t node_budget) {
  const auto nbrs = g.neighbors(v);
  const std::size_t k = nbrs.size();
  if (k <= 1) return k;
  std::vector<BitSet> adj(k, BitSet(k));
  for (std::size_t i = 0; i < k; ++i) {
    const auto around = g.neighbors(nbrs[i]);
    // Both lists are sorted: merge to find the induced edges.
    std::size_t j = 0;
    for (VertexId w : around) {
      while (j < k && nbrs[j] < w) ++j;
      if (j < k && nbrs[j] == w) adj[i].set(j);
    }
  }
  return IndependenceSearch(std::move(adj), node_budget, v).solve();
}

std::size_t neighborhood_independence(const Graph& g,
                                      std::uint64_t node_budget) {
  std::size_t best = 0;
  for (VertexId v : g.vertices()) {
    best = std::max(best, local_independence(g, v, node_budget));
  }
  return best;
}

std::size_t degeneracy(const Graph& g) {
  const std::size_t n = g.num_vertices();
  if (n == 0) return 0;
  std::vector<std::size_t> deg(n);
  std::size_t max_deg = 0;
  for (std::size_t i = 0; i < n; ++i) {
    deg[i] = g.degree(g.vertices()[i]);
    max_deg = std::max(max_deg, deg[i]);
  }
  std::vector<std::vector<std::size_t>> buckets(max_deg + 1);
  for (std::size_t i = 0; i < n; ++i) buckets[deg[i]].push_back(i);
  std::vector<bool> removed(n, false);
  std::size_t result = 0;
  std::size_t cursor = 0;
  for (std::size_t done = 0; done < n;) {
    while (buckets[cursor].empty()) ++cursor;
    const std::size_t i = buckets[cursor].back();
    buckets[cursor].pop_back();
    // Lazy deletion: skip stale bucket entries.
    if (removed[i] || deg[i] != cursor) continue;
    removed[i] = true;
    ++done;
    result = std::max(result, cursor);
    for (VertexId w : g.neighbors(g.vertices()[i])) {
      const std::size_t j = g.index_of(w);
      if (removed[j]) continue;
      --deg[j];
      buckets[deg[j]].push_back(j);
      if (deg[j] < cursor) cursor = deg[j];
    }
  }
  return result;
}

bool is_forest(const Graph& g) {
  const std::size_t n = g.num_vertices();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const Edge& e : g.edges()) {
    const std::size_t a = find(g.index_of(e.u));
    const std::size_t b = find(g.index_of(e.v));
    if (a == b) return false;
    parent[a] = b;
  }
  return true;
}

std::size_t bdg_independence_bound(double rmin, double rmax) {
  return 11 * static_cast<std::size_t>(std::ceil(std::log2(rmax / rmin) + 1.0));
}

}  // namespace bp
