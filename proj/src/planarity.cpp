#include "ncg/planarity.hpp"

#include <algorithm>
#include <bit>
#include <climits>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace ncg {

namespace {

using Mask = std::uint32_t;
using Adj = std::vector<Mask>;

std::size_t edge_total(const Adj& adj) {
  std::size_t twice = 0;
  for (Mask m : adj) twice += static_cast<std::size_t>(std::popcount(m));
  return twice / 2;
}

// Drops isolated and pendant vertices and suppresses degree-2 vertices, then
// renumbers the survivors densely.
Adj reduce(Adj adj) {
  const auto n = adj.size();
  Mask alive = n == 32 ? ~Mask{0} : (Mask{1} << n) - 1;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t v = 0; v < n; ++v) {
      if (!(alive >> v & 1)) continue;
      const Mask nb = adj[v];
      const int d = std::popcount(nb);
      if (d > 2) continue;
      if (d == 2) {
        const auto u = static_cast<std::size_t>(std::countr_zero(nb));
        const auto w = static_cast<std::size_t>(std::countr_zero(nb & (nb - 1)));
        adj[u] |= Mask{1} << w;
        adj[w] |= Mask{1} << u;
      }
      for (Mask rest = nb; rest; rest &= rest - 1) adj[static_cast<std::size_t>(std::countr_zero(rest))] &= ~(Mask{1} << v);
      adj[v] = 0;
      alive &= ~(Mask{1} << v);
      changed = true;
    }
  }
  std::vector<int> index(n, -1);
  int next = 0;
  for (std::size_t v = 0; v < n; ++v) {
    if (alive >> v & 1) index[v] = next++;
  }
  Adj out(static_cast<std::size_t>(next), 0);
  for (std::size_t v = 0; v < n; ++v) {
    if (index[v] < 0) continue;
    for (Mask rest = adj[v]; rest; rest &= rest - 1) {
      out[static_cast<std::size_t>(index[v])] |= Mask{1} << index[static_cast<std::size_t>(std::countr_zero(rest))];
    }
  }
  return out;
}

bool triangle_free(const Adj& adj) {
  for (std::size_t u = 0; u < adj.size(); ++u) {
    for (Mask rest = adj[u]; rest; rest &= rest - 1) {
      if (adj[u] & adj[static_cast<std::size_t>(std::countr_zero(rest))]) return false;
    }
  }
  return true;
}

std::vector<Adj> components(const Adj& adj) {
  const auto n = adj.size();
  std::vector<Adj> out;
  Mask seen = 0;
  for (std::size_t s = 0; s < n; ++s) {
    if (seen >> s & 1) continue;
    Mask comp = Mask{1} << s;
    Mask frontier = comp;
    while (frontier) {
      Mask grow = 0;
      for (Mask rest = frontier; rest; rest &= rest - 1) grow |= adj[static_cast<std::size_t>(std::countr_zero(rest))];
      frontier = grow & ~comp;
      comp |= grow;
    }
    seen |= comp;
    Adj sub(n, 0);
    for (Mask rest = comp; rest; rest &= rest - 1) {
      const auto v = static_cast<std::size_t>(std::countr_zero(rest));
      sub[v] = adj[v];
    }
    out.push_back(sub);
  }
  return out;
}

bool has_k5_subgraph(const Adj& adj) {
  const auto n = adj.size();
  // Extends a clique whose common neighbourhood is `cand`.
  auto grow = [&](auto&& self, Mask cand, int need) -> bool {
    if (need == 0) return true;
    if (std::popcount(cand) < need) return false;
    for (Mask rest = cand; rest; rest &= rest - 1) {
      const auto v = static_cast<std::size_t>(std::countr_zero(rest));
      const Mask later = rest & (rest - 1);
      if (self(self, later & adj[v], need - 1)) return true;
    }
    return false;
  };
  for (std::size_t v = 0; v < n; ++v) {
    if (std::popcount(adj[v]) >= 4 && grow(grow, adj[v] & ~((Mask{2} << v) - 1), 4)) return true;
  }
  return false;
}

bool has_k33_subgraph(const Adj& adj) {
  const auto n = adj.size();
  for (std::size_t a = 0; a < n; ++a) {
    if (std::popcount(adj[a]) < 3) continue;
    for (std::size_t b = a + 1; b < n; ++b) {
      const Mask ab = adj[a] & adj[b];
      if (std::popcount(ab) < 3) continue;
      for (std::size_t c = b + 1; c < n; ++c) {
        if (std::popcount(ab & adj[c]) >= 3) return true;
      }
    }
  }
  return false;
}

// Merges v into u.
Adj contract_edge(Adj adj, std::size_t u, std::size_t v) {
  const Mask nb = adj[v] & ~(Mask{1} << u);
  for (Mask rest = adj[v]; rest; rest &= rest - 1) adj[static_cast<std::size_t>(std::countr_zero(rest))] &= ~(Mask{1} << v);
  adj[v] = 0;
  adj[u] |= nb;
  for (Mask rest = nb; rest; rest &= rest - 1) adj[static_cast<std::size_t>(std::countr_zero(rest))] |= Mask{1} << u;
  return adj;
}

// Every minor is a subgraph of a contraction, so the search contracts edges
// and looks for K5 or K3,3 as a subgraph at each step; deletions never need
// to be branched on.
class MinorSearch {
 public:
  bool planar(const Adj& raw) {
    const Adj adj = reduce(raw);
    const auto n = adj.size();
    if (n <= 4) return true;
    const auto e = edge_total(adj);
    if (e > 3 * n - 6) return false;
    if (e > 2 * n - 4 && triangle_free(adj)) return false;

    const std::string key(reinterpret_cast<const char*>(adj.data()), adj.size() * sizeof(Mask));
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    bool result = !has_k5_subgraph(adj) && !has_k33_subgraph(adj);
    const auto parts = components(adj);
    if (result && parts.size() > 1) {
      for (const auto& part : parts) {
        if (!planar(part)) {
          result = false;
          break;
        }
      }
    } else if (result) {
      for (std::size_t u = 0; u < n && result; ++u) {
        for (Mask rest = adj[u] & ~((Mask{2} << u) - 1); rest && result; rest &= rest - 1) {
          const auto v = static_cast<std::size_t>(std::countr_zero(rest));
          if (!planar(contract_edge(adj, u, v))) result = false;
        }
      }
    }
    memo_.emplace(key, result);
    return result;
  }

 private:
  std::unordered_map<std::string, bool> memo_;
};

// Blocks (biconnected components) as edge lists, by Tarjan's lowpoint method.
std::vector<std::vector<std::pair<int, int>>> blocks(const SimpleGraph& g) {
  const int n = static_cast<int>(g.vertex_count());
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<std::pair<int, int>> stack;
  std::vector<std::vector<std::pair<int, int>>> out;
  int time = 0;
  auto dfs = [&](auto&& self, int u, int parent) -> void {
    disc[u] = low[u] = time++;
    for (int v = 0; v < n; ++v) {
      if (!g.adjacent(u, v) || v == parent) continue;
      if (disc[v] < 0) {
        stack.emplace_back(u, v);
        self(self, v, u);
        low[u] = std::min(low[u], low[v]);
        if (low[v] >= disc[u]) {
          std::vector<std::pair<int, int>> block;
          std::pair<int, int> e;
          do {
            e = stack.back();
            stack.pop_back();
            block.push_back(e);
          } while (e != std::make_pair(u, v));
          out.push_back(std::move(block));
        }
      } else if (disc[v] < disc[u]) {
        stack.emplace_back(u, v);
        low[u] = std::min(low[u], disc[v]);
      }
    }
  };
  for (int v = 0; v < n; ++v) {
    if (disc[v] < 0) dfs(dfs, v, -1);
  }
  return out;
}

// Demoucron-Malgrange-Pertuiset path embedding for one biconnected block.
class BlockEmbedder {
 public:
  explicit BlockEmbedder(const std::vector<std::pair<int, int>>& edges) {
    std::map<int, int> index;
    for (auto [u, v] : edges) {
      index.emplace(u, static_cast<int>(index.size()));
      index.emplace(v, static_cast<int>(index.size()));
    }
    n_ = static_cast<int>(index.size());
    adj_.assign(n_, std::vector<char>(n_, 0));
    for (auto [u, v] : edges) adj_[index[u]][index[v]] = adj_[index[v]][index[u]] = 1;
  }

  bool planar() {
    if (n_ < 5) return true;
    inH_.assign(n_, 0);
    usedEdge_.assign(n_, std::vector<char>(n_, 0));
    const auto cycle = find_cycle();
    for (std::size_t i = 0; i < cycle.size(); ++i) embed_edge(cycle[i], cycle[(i + 1) % cycle.size()]);
    faces_ = {cycle, std::vector<int>(cycle.rbegin(), cycle.rend())};
    for (;;) {
      auto fragments = find_fragments();
      if (fragments.empty()) return true;
      std::size_t best = 0;
      std::size_t bestFace = 0;
      std::size_t bestCount = SIZE_MAX;
      for (std::size_t f = 0; f < fragments.size(); ++f) {
        std::size_t count = 0;
        std::size_t first = 0;
        for (std::size_t i = 0; i < faces_.size(); ++i) {
          if (admissible(fragments[f], faces_[i])) {
            if (count++ == 0) first = i;
          }
        }
        if (count == 0) return false;
        if (count < bestCount) {
          bestCount = count;
          best = f;
          bestFace = first;
        }
      }
      embed_path(fragment_path(fragments[best]), bestFace);
    }
  }

 private:
  struct Fragment {
    std::vector<int> inner;        // empty for a single chord
    std::vector<int> attachments;  // vertices of H
  };

  void embed_edge(int u, int v) {
    usedEdge_[u][v] = usedEdge_[v][u] = 1;
    inH_[u] = inH_[v] = 1;
  }

  std::vector<int> find_cycle() const {
    // Every block with three or more vertices has a cycle through vertex 0.
    std::vector<int> parent(n_, -1);
    std::vector<int> queue{0};
    parent[0] = 0;
    for (std::size_t h = 0; h < queue.size(); ++h) {
      const int u = queue[h];
      for (int v = 0; v < n_; ++v) {
        if (!adj_[u][v]) continue;
        if (parent[v] < 0) {
          parent[v] = u;
          queue.push_back(v);
        } else if (v != parent[u] && u != parent[v]) {
          // Non-tree edge u-v: join the two tree paths at their meeting point.
          std::vector<int> pu{u}, pv{v};
          while (pu.back() != 0) pu.push_back(parent[pu.back()]);
          while (pv.back() != 0) pv.push_back(parent[pv.back()]);
          while (pu.size() > 1 && pv.size() > 1 && pu[pu.size() - 2] == pv[pv.size() - 2]) {
            pu.pop_back();
            pv.pop_back();
          }
          std::vector<int> cycle(pu.begin(), pu.end());
          for (auto it = pv.rbegin() + 1; it != pv.rend(); ++it) cycle.push_back(*it);
          return cycle;
        }
      }
    }
    throw std::logic_error("block without a cycle");
  }

  std::vector<Fragment> find_fragments() const {
    std::vector<Fragment> out;
    for (int u = 0; u < n_; ++u) {
      if (!inH_[u]) continue;
      for (int v = u + 1; v < n_; ++v) {
        if (inH_[v] && adj_[u][v] && !usedEdge_[u][v]) out.push_back({{}, {u, v}});
      }
    }
    std::vector<char> seen(n_, 0);
    for (int s = 0; s < n_; ++s) {
      if (inH_[s] || seen[s]) continue;
      Fragment f;
      std::vector<char> attached(n_, 0);
      std::vector<int> queue{s};
      seen[s] = 1;
      for (std::size_t h = 0; h < queue.size(); ++h) {
        const int u = queue[h];
        f.inner.push_back(u);
        for (int v = 0; v < n_; ++v) {
          if (!adj_[u][v]) continue;
          if (inH_[v]) {
            attached[v] = 1;
          } else if (!seen[v]) {
            seen[v] = 1;
            queue.push_back(v);
          }
        }
      }
      for (int v = 0; v < n_; ++v) {
        if (attached[v]) f.attachments.push_back(v);
      }
      out.push_back(std::move(f));
    }
    return out;
  }

  static bool admissible(const Fragment& f, const std::vector<int>& face) {
    return std::all_of(f.attachments.begin(), f.attachments.end(),
                       [&](int a) { return std::find(face.begin(), face.end(), a) != face.end(); });
  }

  // A path through the fragment joining two distinct attachments.
  std::vector<int> fragment_path(const Fragment& f) const {
    if (f.inner.empty()) return f.attachments;
    const int a = f.attachments.front();
    std::vector<char> inner(n_, 0);
    for (int v : f.inner) inner[v] = 1;
    std::vector<int> parent(n_, -1);
    std::vector<int> queue;
    for (int v : f.inner) {
      if (adj_[a][v]) {
        parent[v] = a;
        queue.push_back(v);
      }
    }
    for (std::size_t h = 0; h < queue.size(); ++h) {
      const int u = queue[h];
      for (int b : f.attachments) {
        if (b != a && adj_[u][b]) {
          std::vector<int> path{b};
          for (int x = u; x != a; x = parent[x]) path.push_back(x);
          path.push_back(a);
          return path;
        }
      }
      for (int v : f.inner) {
        if (adj_[u][v] && parent[v] < 0) {
          parent[v] = u;
          queue.push_back(v);
        }
      }
    }
    throw std::logic_error("fragment with a single attachment in a biconnected block");
  }

  void embed_path(const std::vector<int>& path, std::size_t faceIndex) {
    for (std::size_t i = 0; i + 1 < path.size(); ++i) embed_edge(path[i], path[i + 1]);
    const auto face = faces_[faceIndex];
    const auto k = face.size();
    const auto i = static_cast<std::size_t>(std::find(face.begin(), face.end(), path.front()) - face.begin());
    const auto j = static_cast<std::size_t>(std::find(face.begin(), face.end(), path.back()) - face.begin());
    std::vector<int> one, two;
    for (std::size_t t = i;; t = (t + 1) % k) {
      one.push_back(face[t]);
      if (t == j) break;
    }
    for (std::size_t t = path.size() - 2; t >= 1; --t) one.push_back(path[t]);
    for (std::size_t t = j;; t = (t + 1) % k) {
      two.push_back(face[t]);
      if (t == i) break;
    }
    for (std::size_t t = 1; t + 1 < path.size(); ++t) two.push_back(path[t]);
    faces_[faceIndex] = std::move(one);
    faces_.push_back(std::move(two));
  }

  int n_ = 0;
  std::vector<std::vector<char>> adj_;
  std::vector<char> inH_;
  std::vector<std::vector<char>> usedEdge_;
  std::vector<std::vector<int>> faces_;
};

Adj mask_adjacency(const SimpleGraph& g) {
  const auto n = g.vertex_count();
  Adj adj(n, 0);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v) {
      if (g.adjacent(u, v)) adj[u] |= Mask{1} << v;
    }
  }
  return adj;
}

}  // namespace

bool is_planar(const SimpleGraph& g) {
  const auto n = g.vertex_count();
  if (n > kMaxPlanarityVertices) {
    throw std::invalid_argument("planarity test limited to " + std::to_string(kMaxPlanarityVertices) + " vertices");
  }
  const auto e = g.edge_count();
  if (n >= 3 && e > 3 * n - 6) return false;
  if (n >= 3 && e > 2 * n - 4 && triangle_free(mask_adjacency(g))) return false;
  for (const auto& block : blocks(g)) {
    if (!BlockEmbedder(block).planar()) return false;
  }
  return true;
}

bool has_kuratowski_minor(const SimpleGraph& g) {
  if (g.vertex_count() > kMaxMinorSearchVertices) {
    throw std::invalid_argument("minor search limited to " + std::to_string(kMaxMinorSearchVertices) + " vertices");
  }
  MinorSearch search;
  return !search.planar(mask_adjacency(g));
}

}  // namespace ncg
