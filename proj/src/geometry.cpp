#include "pn/geometry.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace pn {

EmbeddingConfig regular_simplex(int n) {
  if (n < 2) throw std::invalid_argument("regular_simplex: need n >= 2");
  // Scaled standard-basis simplex in R^n (pairwise distance 1, centroid at
  // the origin), rotated onto the hyperplane orthogonal to (1,...,1) and
  // expressed in an orthonormal basis of that hyperplane.
  const double s = 1.0 / std::sqrt(2.0);
  Eigen::MatrixXd pts = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) pts(i, i) = s;
  Eigen::VectorXd centroid = pts.colwise().mean();
  pts.rowwise() -= centroid.transpose();

  Eigen::MatrixXd ones = Eigen::VectorXd::Ones(n);
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(ones);
  Eigen::MatrixXd q = qr.householderQ();
  Eigen::MatrixXd basis = q.rightCols(n - 1);  // orthonormal, orthogonal to ones

  EmbeddingConfig cfg;
  cfg.n = n;
  for (int i = 0; i < n; ++i) cfg.anchors.push_back(basis.transpose() * pts.row(i).transpose());
  return cfg;
}

void validate_embedding(const EmbeddingConfig& cfg) {
  const int n = cfg.n;
  if (n < 2 || static_cast<int>(cfg.anchors.size()) != n)
    throw std::invalid_argument("embedding: need n >= 2 anchors");
  for (const auto& a : cfg.anchors)
    if (a.size() != n - 1)
      throw std::invalid_argument("embedding: anchors must live in R^(n-1)");
  if (n == 2) {
    if (cfg.anchors[0](0) == cfg.anchors[1](0))
      throw std::invalid_argument("embedding: coincident anchors");
    return;
  }
  Eigen::MatrixXd diff(n - 1, n - 1);
  for (int i = 1; i < n; ++i) diff.col(i - 1) = cfg.anchors[i] - cfg.anchors[0];
  Eigen::FullPivLU<Eigen::MatrixXd> lu(diff);
  if (lu.rank() < n - 1)
    throw std::invalid_argument("embedding: anchors lie in a common hyperplane");
}

Eigen::VectorXd embed_vertex(const VertexAddress& v, const EmbeddingConfig& cfg) {
  if (v.tail < 0 || v.tail >= cfg.n)
    throw std::invalid_argument("embed_vertex: tail symbol out of range");
  Eigen::VectorXd p = cfg.anchors[v.tail];  // fixed point of the tail contraction
  for (auto it = v.prefix.rbegin(); it != v.prefix.rend(); ++it) {
    if (*it < 0 || *it >= cfg.n)
      throw std::invalid_argument("embed_vertex: prefix symbol out of range");
    p = 0.5 * (p + cfg.anchors[*it]);
  }
  return p;
}

double hausdorff_dimension(int n) {
  if (n < 2) throw std::invalid_argument("hausdorff_dimension: need n >= 2");
  return std::log(static_cast<double>(n)) / std::log(2.0);
}

void export_point_cloud(std::ostream& points, std::ostream& edges, const ApproxGraph& g,
                        const EmbeddingConfig& cfg, const FunctionOnGraph* values,
                        CloudFormat fmt) {
  if (cfg.n != g.n) throw std::invalid_argument("export_point_cloud: n mismatch");
  if (values && values->size() != g.vertices.size())
    throw std::invalid_argument("export_point_cloud: function/graph size mismatch");
  validate_embedding(cfg);

  const char sep = fmt == CloudFormat::Csv ? ',' : ' ';
  char buf[64];
  auto num = [&](double x) {
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return std::string(buf);
  };

  if (fmt == CloudFormat::Columns) {
    points << "# address";
    for (int d = 0; d < g.n - 1; ++d) points << " c" << d + 1;
    if (values) points << " value";
    points << '\n';
  } else {
    points << "address";
    for (int d = 0; d < g.n - 1; ++d) points << ",c" << d + 1;
    if (values) points << ",value";
    points << '\n';
  }
  for (std::size_t i = 0; i < g.vertices.size(); ++i) {
    points << format_address(g.vertices[i], g.n);
    Eigen::VectorXd p = embed_vertex(g.vertices[i], cfg);
    for (int d = 0; d < g.n - 1; ++d) points << sep << num(p(d));
    if (values) points << sep << num((*values)[i]);
    points << '\n';
  }
  for (auto [i, j] : g.edges)
    edges << format_address(g.vertices[i], g.n) << sep
          << format_address(g.vertices[j], g.n) << '\n';
}

}  // namespace pn
