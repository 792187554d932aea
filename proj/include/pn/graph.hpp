#pragma once

#include <Eigen/Dense>
#include <vector>

#include "pn/address.hpp"

namespace pn {

/// Real-valued function on the vertices of one approximating graph, indexed
/// by vertex index.
using FunctionOnGraph = std::vector<double>;

/// The level-m approximating graph: vertices are V_m in canonical order,
/// and two vertices share an edge iff they are distinct corners of a common
/// m-cell.
struct ApproxGraph {
  int n = 0;
  int level = 0;
  std::vector<VertexAddress> vertices;            // lexicographically sorted
  std::vector<Word> cells;                        // n^level words, sorted
  std::vector<std::vector<int>> cell_corner_index;  // [cell][k] -> vertex index
  std::vector<std::vector<int>> adjacency;        // sorted neighbor lists
  std::vector<std::pair<int, int>> edges;         // i < j, sorted
  std::vector<char> boundary_mask;

  std::size_t vertex_countv() const { return vertices.size(); }
  int interior_count() const;
  /// Index of a canonical address; throws std::invalid_argument if absent.
  int index_of(const VertexAddress& v) const;
  int degree(int i) const { return static_cast<int>(adjacency[i].size()); }
};

ApproxGraph build_graph(int n, int m, std::size_t cap = kDefaultVertexCap);

/// Pointwise graph Laplacian with fixed boundary: deg(x) u(x) - sum of
/// neighbor values at interior x, and 0 at boundary slots.
FunctionOnGraph laplacian_apply(const ApproxGraph& g, const FunctionOnGraph& u);

/// Dense symmetric Laplacian restricted to interior vertices (boundary rows
/// and columns dropped).
struct DirichletMatrix {
  Eigen::MatrixXd mat;
  std::vector<int> interior_to_graph;
  std::vector<int> graph_to_interior;  // -1 at boundary slots
};

DirichletMatrix dirichlet_matrix(const ApproxGraph& g);

double energy_product(const ApproxGraph& g, const FunctionOnGraph& u,
                      const FunctionOnGraph& v);
double energy(const ApproxGraph& g, const FunctionOnGraph& u);

/// ((n+2)/n)^m * e — the level-m energy renormalization.
double renormalized_energy(int n, int m, double e);

/// Combinatorics of the new vertices inside one parent cell of level m-1:
/// for every corner pair {r,s}, the sets of new vertices adjacent (F) and
/// non-adjacent (G) to x_{r,s}, with measured degree counts.
struct CornerPairStructure {
  int r = 0, s = 0;
  std::vector<int> f_vertices;       // graph indices
  std::vector<int> g_vertices;
  std::vector<int> f_subgraph_degrees;  // degree of each F vertex within F
  std::vector<int> g_to_f_counts;       // F-neighbors of each G vertex
  std::vector<int> f_to_g_counts;       // G-neighbors of each F vertex
};

struct StructureReport {
  int n = 0;
  Word parent_cell;
  std::vector<int> new_vertices;          // the n(n-1)/2 new vertices of the cell
  std::vector<int> new_subgraph_degrees;  // degree within the new-vertex subgraph
  std::vector<CornerPairStructure> pairs;
};

StructureReport structure_report(const ApproxGraph& g, const Word& parent_cell);

}  // namespace pn
