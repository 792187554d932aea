#pragma once

#include <Eigen/Dense>
#include <iosfwd>
#include <vector>

#include "pn/graph.hpp"

namespace pn {

/// Euclidean anchors x_0..x_{n-1} in R^{n-1}. The contraction for symbol i is
/// x -> (x + x_i)/2; anchors must be in general position (affine rank n-1).
struct EmbeddingConfig {
  int n = 0;
  std::vector<Eigen::VectorXd> anchors;
};

/// Anchors at the vertices of the regular unit simplex centered at the origin.
EmbeddingConfig regular_simplex(int n);

/// Throws std::invalid_argument when the anchors lie in a common
/// (n-2)-dimensional hyperplane.
void validate_embedding(const EmbeddingConfig& cfg);

/// Coordinates of a V_m point: the contraction composition named by the
/// prefix, applied right-to-left to the fixed point of the tail symbol.
Eigen::VectorXd embed_vertex(const VertexAddress& v, const EmbeddingConfig& cfg);

/// log n / log 2.
double hausdorff_dimension(int n);

enum class CloudFormat { Columns, Csv };

/// One row per vertex (address, n-1 coordinates, optional function value),
/// plus an edge list of address pairs. Deterministic order.
void export_point_cloud(std::ostream& points, std::ostream& edges, const ApproxGraph& g,
                        const EmbeddingConfig& cfg, const FunctionOnGraph* values,
                        CloudFormat fmt);

}  // namespace pn
