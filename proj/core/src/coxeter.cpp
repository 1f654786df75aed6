#include "lorentzvol/coxeter.hpp"

#include <algorithm>
#include <utility>

#include "lorentzvol/errors.hpp"

namespace lorentzvol {

CoxeterDiagram::CoxeterDiagram(std::size_t node_count) : node_count_(node_count) {
  if (node_count == 0) throw DomainError("CoxeterDiagram: need at least one node");
}

void CoxeterDiagram::add_edge(std::size_t i, std::size_t j, long label) {
  if (i == j) throw DomainError("CoxeterDiagram: self-loop");
  if (i >= node_count_ || j >= node_count_) throw DomainError("CoxeterDiagram: node out of range");
  if (label < 3) throw DomainError("CoxeterDiagram: edge labels must be >= 3");
  if (i > j) std::swap(i, j);
  for (const Edge& e : edges_) {
    if (e.i == i && e.j == j) throw DomainError("CoxeterDiagram: duplicate edge");
  }
  edges_.push_back({i, j, label});
}

std::vector<std::size_t> CoxeterDiagram::degrees() const {
  std::vector<std::size_t> deg(node_count_, 0);
  for (const Edge& e : edges_) {
    ++deg[e.i];
    ++deg[e.j];
  }
  return deg;
}

std::vector<std::size_t> CoxeterDiagram::degree_sequence() const {
  std::vector<std::size_t> deg = degrees();
  std::sort(deg.begin(), deg.end());
  return deg;
}

CoxeterDiagram CoxeterDiagram::relabeled(const std::vector<std::size_t>& perm) const {
  if (perm.size() != node_count_) throw DomainError("CoxeterDiagram: permutation has wrong length");
  std::vector<std::size_t> inverse(node_count_, node_count_);
  for (std::size_t k = 0; k < perm.size(); ++k) {
    if (perm[k] >= node_count_ || inverse[perm[k]] != node_count_) {
      throw DomainError("CoxeterDiagram: not a permutation");
    }
    inverse[perm[k]] = k;
  }
  CoxeterDiagram out(node_count_);
  for (const Edge& e : edges_) out.add_edge(inverse[e.i], inverse[e.j], e.label);
  return out;
}

GramMatrix coxeter_gram(const CoxeterDiagram& diagram) {
  GramMatrix g(diagram.node_count());
  for (std::size_t i = 0; i < diagram.node_count(); ++i) g.set(i, i, ExactRational(1));
  for (const auto& e : diagram.edges()) {
    if (e.label != 3) {
      throw DomainError("coxeter_gram: only labels 3 (and absent edges) have rational cosines");
    }
    g.set(e.i, e.j, ExactRational(BigInt(-1), BigInt(2)));
  }
  return g;
}

CoxeterDiagram diagram_II17() {
  CoxeterDiagram d(19);
  for (std::size_t i = 0; i + 1 < 17; ++i) d.add_edge(i, i + 1);
  d.add_edge(2, 17);
  d.add_edge(14, 18);
  return d;
}

}  // namespace lorentzvol
