#pragma once

#include <cstddef>
#include <vector>

#include "lorentzvol/gram.hpp"

namespace lorentzvol {

/// Coxeter diagram with 0-based nodes. An edge {i, j} with label m means a
/// dihedral angle pi/m between facets i and j; absent edges mean m = 2.
class CoxeterDiagram {
 public:
  struct Edge {
    std::size_t i = 0;  // i < j
    std::size_t j = 0;
    long label = 3;
    friend bool operator==(const Edge&, const Edge&) = default;
  };

  explicit CoxeterDiagram(std::size_t node_count);

  /// Adds {i, j}; throws DomainError on self-loops, out-of-range nodes,
  /// duplicate edges or labels < 3.
  void add_edge(std::size_t i, std::size_t j, long label = 3);

  std::size_t node_count() const { return node_count_; }
  const std::vector<Edge>& edges() const { return edges_; }

  std::vector<std::size_t> degrees() const;
  /// Degrees sorted ascending.
  std::vector<std::size_t> degree_sequence() const;

  /// Node perm[k] of this diagram becomes node k of the result.
  CoxeterDiagram relabeled(const std::vector<std::size_t>& perm) const;

 private:
  std::size_t node_count_;
  std::vector<Edge> edges_;
};

/// Gram matrix of unit facet normals: 1 on the diagonal, -1/2 for label 3,
/// 0 for non-adjacent nodes. Other labels need irrational cosines and are rejected.
GramMatrix coxeter_gram(const CoxeterDiagram& diagram);

/// The 19-node diagram of the reflective subgroup of PO(II_{17,1}): a chain
/// of 17 nodes (0..16) with node 17 attached to chain node 2 and node 18
/// attached to chain node 14.
CoxeterDiagram diagram_II17();

}  // namespace lorentzvol
