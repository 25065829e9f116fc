#include "ncg/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace ncg {

SimpleGraph::SimpleGraph(std::vector<std::string> labels)
    : n_(labels.size()), adj_(n_ * n_, 0), degree_(n_, 0), labels_(std::move(labels)) {}

std::vector<std::size_t> SimpleGraph::neighbours(std::size_t v) const {
  std::vector<std::size_t> out;
  out.reserve(degree_[v]);
  for (std::size_t u = 0; u < n_; ++u) {
    if (adj_[v * n_ + u]) out.push_back(u);
  }
  return out;
}

void SimpleGraph::add_edge(std::size_t u, std::size_t v) {
  if (u >= n_ || v >= n_) throw std::invalid_argument("vertex out of range");
  if (u == v) throw std::invalid_argument("self-loops are not allowed");
  if (adj_[u * n_ + v]) return;
  adj_[u * n_ + v] = adj_[v * n_ + u] = 1;
  ++degree_[u];
  ++degree_[v];
  ++edges_;
}

void SimpleGraph::remove_edge(std::size_t u, std::size_t v) {
  if (u >= n_ || v >= n_) throw std::invalid_argument("vertex out of range");
  if (!adj_[u * n_ + v]) return;
  adj_[u * n_ + v] = adj_[v * n_ + u] = 0;
  --degree_[u];
  --degree_[v];
  --edges_;
}

SimpleGraph SimpleGraph::permuted(const std::vector<std::size_t>& perm) const {
  if (perm.size() != n_) throw std::invalid_argument("permutation size mismatch");
  std::vector<std::string> labels(n_);
  for (std::size_t v = 0; v < n_; ++v) labels.at(perm[v]) = labels_[v];
  SimpleGraph out(std::move(labels));
  for (std::size_t u = 0; u < n_; ++u) {
    for (std::size_t v = u + 1; v < n_; ++v) {
      if (adjacent(u, v)) out.add_edge(perm[u], perm[v]);
    }
  }
  return out;
}

SimpleGraph complete_graph(std::size_t n) {
  std::vector<std::string> labels;
  for (std::size_t v = 0; v < n; ++v) labels.push_back(std::to_string(v));
  SimpleGraph g(std::move(labels));
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) g.add_edge(u, v);
  }
  return g;
}

SimpleGraph non_commuting_graph(const GroupTable& g) {
  const auto z = center(g);
  if (z.size() == g.order()) throw std::invalid_argument("non-commuting graph of an abelian group is empty");
  std::vector<Elem> verts;
  std::vector<std::string> labels;
  for (Elem x = 0; x < g.order(); ++x) {
    if (std::binary_search(z.begin(), z.end(), x)) continue;
    verts.push_back(x);
    labels.push_back(g.label(x));
  }
  SimpleGraph out(std::move(labels));
  for (std::size_t i = 0; i < verts.size(); ++i) {
    for (std::size_t j = i + 1; j < verts.size(); ++j) {
      if (!g.commute(verts[i], verts[j])) out.add_edge(i, j);
    }
  }
  return out;
}

SimpleGraph complement(const SimpleGraph& g) {
  SimpleGraph out(g.labels());
  for (std::size_t u = 0; u < g.vertex_count(); ++u) {
    for (std::size_t v = u + 1; v < g.vertex_count(); ++v) {
      if (!g.adjacent(u, v)) out.add_edge(u, v);
    }
  }
  return out;
}

std::vector<std::vector<std::size_t>> connected_components(const SimpleGraph& g) {
  const auto n = g.vertex_count();
  std::vector<bool> seen(n, false);
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<std::size_t> comp{s};
    seen[s] = true;
    for (std::size_t head = 0; head < comp.size(); ++head) {
      for (std::size_t u = 0; u < n; ++u) {
        if (!seen[u] && g.adjacent(comp[head], u)) {
          seen[u] = true;
          comp.push_back(u);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

std::size_t CliqueDecomposition::vertex_count() const {
  std::size_t total = 0;
  for (auto s : cliqueSizes) total += s;
  return total;
}

std::string CliqueDecomposition::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < cliqueSizes.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(cliqueSizes[i]);
  }
  return out + "}";
}

std::optional<CliqueDecomposition> clique_decomposition(const SimpleGraph& g) {
  CliqueDecomposition d;
  for (const auto& comp : connected_components(g)) {
    for (auto v : comp) {
      if (g.degree(v) != comp.size() - 1) return std::nullopt;
    }
    d.cliqueSizes.push_back(comp.size());
  }
  std::sort(d.cliqueSizes.begin(), d.cliqueSizes.end(), std::greater<>());
  return d;
}

}  // namespace ncg
