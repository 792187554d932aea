#include "pn/graph.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "pn/errors.hpp"

namespace pn {

int ApproxGraph::interior_count() const {
  int c = 0;
  for (char b : boundary_mask) c += !b;
  return c;
}

int ApproxGraph::index_of(const VertexAddress& v) const {
  auto it = std::lower_bound(vertices.begin(), vertices.end(), v);
  if (it == vertices.end() || *it != v)
    throw std::invalid_argument("address not in V_m: level or canonicity mismatch");
  return static_cast<int>(it - vertices.begin());
}

ApproxGraph build_graph(int n, int m, std::size_t cap) {
  if (n < 2 || m < 0) throw std::invalid_argument("build_graph: need n >= 2, m >= 0");
  ApproxGraph g;
  g.n = n;
  g.level = m;
  g.vertices = enumerate_vertices(n, m, cap);
  g.cells = enumerate_cells(n, m);

  g.boundary_mask.resize(g.vertices.size());
  for (std::size_t i = 0; i < g.vertices.size(); ++i)
    g.boundary_mask[i] = is_boundary(g.vertices[i]);

  g.cell_corner_index.reserve(g.cells.size());
  std::vector<std::pair<int, int>> edges;
  edges.reserve(g.cells.size() * static_cast<std::size_t>(n) * (n - 1) / 2);
  for (const Word& w : g.cells) {
    std::vector<int> corners(n);
    for (int k = 0; k < n; ++k)
      corners[k] = g.index_of(canonicalize(w, k, n));
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b) {
        int i = corners[a], j = corners[b];
        if (i == j) throw std::logic_error("cell with coincident corners");
        edges.emplace_back(std::min(i, j), std::max(i, j));
      }
    g.cell_corner_index.push_back(std::move(corners));
  }
  std::sort(edges.begin(), edges.end());
  // Adjacent cells share single vertices, never edges.
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
    throw std::logic_error("two cells share an edge");
  g.edges = std::move(edges);

  g.adjacency.resize(g.vertices.size());
  for (auto [i, j] : g.edges) {
    g.adjacency[i].push_back(j);
    g.adjacency[j].push_back(i);
  }
  for (auto& nb : g.adjacency) std::sort(nb.begin(), nb.end());
  return g;
}

FunctionOnGraph laplacian_apply(const ApproxGraph& g, const FunctionOnGraph& u) {
  if (u.size() != g.vertices.size())
    throw std::invalid_argument("laplacian_apply: function/graph size mismatch");
  FunctionOnGraph out(u.size(), 0.0);
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (g.boundary_mask[i]) continue;
    double acc = static_cast<double>(g.adjacency[i].size()) * u[i];
    for (int j : g.adjacency[i]) acc -= u[j];
    out[i] = acc;
  }
  return out;
}

DirichletMatrix dirichlet_matrix(const ApproxGraph& g) {
  DirichletMatrix d;
  d.graph_to_interior.assign(g.vertices.size(), -1);
  for (std::size_t i = 0; i < g.vertices.size(); ++i) {
    if (!g.boundary_mask[i]) {
      d.graph_to_interior[i] = static_cast<int>(d.interior_to_graph.size());
      d.interior_to_graph.push_back(static_cast<int>(i));
    }
  }
  const int k = static_cast<int>(d.interior_to_graph.size());
  if (k == 0) throw std::invalid_argument("dirichlet_matrix: no interior vertices at m = 0");
  d.mat = Eigen::MatrixXd::Zero(k, k);
  for (int a = 0; a < k; ++a) {
    int i = d.interior_to_graph[a];
    d.mat(a, a) = static_cast<double>(g.adjacency[i].size());
    for (int j : g.adjacency[i]) {
      int b = d.graph_to_interior[j];
      if (b >= 0) d.mat(a, b) = -1.0;
    }
  }
  return d;
}

double energy_product(const ApproxGraph& g, const FunctionOnGraph& u,
                      const FunctionOnGraph& v) {
  if (u.size() != g.vertices.size() || v.size() != g.vertices.size())
    throw std::invalid_argument("energy_product: function/graph size mismatch");
  double acc = 0.0;
  for (auto [i, j] : g.edges) acc += (u[i] - u[j]) * (v[i] - v[j]);
  return acc;
}

double energy(const ApproxGraph& g, const FunctionOnGraph& u) {
  return energy_product(g, u, u);
}

double renormalized_energy(int n, int m, double e) {
  return std::pow(static_cast<double>(n + 2) / n, m) * e;
}

StructureReport structure_report(const ApproxGraph& g, const Word& parent_cell) {
  const int n = g.n;
  if (static_cast<int>(parent_cell.size()) != g.level - 1)
    throw std::invalid_argument("structure_report: cell must be one level above the graph");
  check_word(parent_cell, n);

  StructureReport rep;
  rep.n = n;
  rep.parent_cell = parent_cell;

  // New vertices of the cell are the x_{b,c} with b != c.
  std::vector<std::vector<int>> pair_index(n, std::vector<int>(n, -1));
  for (int b = 0; b < n; ++b)
    for (int c = b + 1; c < n; ++c) {
      Word w = parent_cell;
      w.push_back(b);
      int idx = g.index_of(canonicalize(w, c, n));
      pair_index[b][c] = pair_index[c][b] = idx;
      rep.new_vertices.push_back(idx);
    }

  std::vector<int> sorted_new = rep.new_vertices;
  std::sort(sorted_new.begin(), sorted_new.end());
  auto is_new = [&](int idx) {
    return std::binary_search(sorted_new.begin(), sorted_new.end(), idx);
  };
  auto adjacent = [&](int i, int j) {
    return std::binary_search(g.adjacency[i].begin(), g.adjacency[i].end(), j);
  };

  for (int idx : rep.new_vertices) {
    int d = 0;
    for (int nb : g.adjacency[idx]) d += is_new(nb);
    rep.new_subgraph_degrees.push_back(d);
  }

  for (int r = 0; r < n; ++r)
    for (int s = r + 1; s < n; ++s) {
      CornerPairStructure ps;
      ps.r = r;
      ps.s = s;
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          if (i == r && j == s) continue;
          bool touches = (i == r || i == s || j == r || j == s);
          (touches ? ps.f_vertices : ps.g_vertices).push_back(pair_index[i][j]);
        }
      for (int f : ps.f_vertices) {
        int df = 0, dg = 0;
        for (int f2 : ps.f_vertices) df += (f2 != f && adjacent(f, f2));
        for (int gv : ps.g_vertices) dg += adjacent(f, gv);
        ps.f_subgraph_degrees.push_back(df);
        ps.f_to_g_counts.push_back(dg);
      }
      for (int gv : ps.g_vertices) {
        int c = 0;
        for (int f : ps.f_vertices) c += adjacent(gv, f);
        ps.g_to_f_counts.push_back(c);
      }
      rep.pairs.push_back(std::move(ps));
    }
  return rep;
}

}  // namespace pn
