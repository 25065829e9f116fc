#pragma once

#include "ncg/group.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ncg {

/// Undirected simple graph on vertices 0..n-1 with a dense adjacency matrix.
class SimpleGraph {
 public:
  SimpleGraph() = default;
  explicit SimpleGraph(std::vector<std::string> labels);

  [[nodiscard]] std::size_t vertex_count() const { return n_; }
  [[nodiscard]] std::size_t edge_count() const { return edges_; }
  [[nodiscard]] bool adjacent(std::size_t u, std::size_t v) const { return adj_[u * n_ + v] != 0; }
  [[nodiscard]] std::size_t degree(std::size_t v) const { return degree_[v]; }
  [[nodiscard]] const std::string& label(std::size_t v) const { return labels_[v]; }
  [[nodiscard]] const std::vector<std::string>& labels() const { return labels_; }
  [[nodiscard]] std::vector<std::size_t> neighbours(std::size_t v) const;

  /// Throws std::invalid_argument for loops or out-of-range vertices.
  void add_edge(std::size_t u, std::size_t v);
  void remove_edge(std::size_t u, std::size_t v);

  /// Graph with vertices renumbered: vertex v of this graph becomes perm[v].
  [[nodiscard]] SimpleGraph permuted(const std::vector<std::size_t>& perm) const;

  bool operator==(const SimpleGraph& other) const { return n_ == other.n_ && adj_ == other.adj_; }

 private:
  std::size_t n_ = 0;
  std::size_t edges_ = 0;
  std::vector<std::uint8_t> adj_;
  std::vector<std::size_t> degree_;
  std::vector<std::string> labels_;
};

SimpleGraph complete_graph(std::size_t n);

/// Vertices are the non-central elements in table order, labelled by element
/// label; x ~ y iff xy != yx. Throws std::invalid_argument for abelian groups.
SimpleGraph non_commuting_graph(const GroupTable& g);

/// Same vertex set and labels, complemented edge set.
SimpleGraph complement(const SimpleGraph& g);

/// Connected components, each as a sorted vertex list, ordered by first vertex.
std::vector<std::vector<std::size_t>> connected_components(const SimpleGraph& g);

struct CliqueDecomposition {
  std::vector<std::size_t> cliqueSizes;  // descending

  [[nodiscard]] std::size_t vertex_count() const;
  /// e.g. "{4,3,3,3,3,3}".
  [[nodiscard]] std::string to_string() const;
  bool operator==(const CliqueDecomposition&) const = default;
};

/// Component sizes when every component is complete, else nullopt.
std::optional<CliqueDecomposition> clique_decomposition(const SimpleGraph& g);

}  // namespace ncg
