#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "pn/geometry.hpp"

using namespace pn;

TEST_CASE("regular simplex anchors") {
  for (int n = 2; n <= 6; ++n) {
    auto cfg = regular_simplex(n);
    REQUIRE(static_cast<int>(cfg.anchors.size()) == n);
    validate_embedding(cfg);
    Eigen::VectorXd centroid = Eigen::VectorXd::Zero(n - 1);
    for (const auto& a : cfg.anchors) centroid += a;
    CHECK(centroid.norm() <= 1e-13);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        CHECK(std::abs((cfg.anchors[i] - cfg.anchors[j]).norm() - 1.0) <= 1e-14);
  }
  auto line = regular_simplex(2);
  CHECK(std::abs(std::abs(line.anchors[0](0)) - 0.5) <= 1e-15);
}

TEST_CASE("degenerate anchors rejected") {
  EmbeddingConfig cfg;
  cfg.n = 3;
  cfg.anchors = {Eigen::Vector2d(0, 0), Eigen::Vector2d(1, 0), Eigen::Vector2d(2, 0)};
  CHECK_THROWS_AS(validate_embedding(cfg), std::invalid_argument);
}

TEST_CASE("embed_vertex") {
  auto cfg = regular_simplex(3);
  SUBCASE("boundary points sit at the anchors") {
    for (int k = 0; k < 3; ++k)
      CHECK((embed_vertex(VertexAddress{{}, k}, cfg) - cfg.anchors[k]).norm() == 0.0);
  }
  SUBCASE("n=2 midpoint") {
    EmbeddingConfig line;
    line.n = 2;
    line.anchors = {Eigen::VectorXd::Zero(1), Eigen::VectorXd::Ones(1)};
    CHECK(embed_vertex(VertexAddress{{0}, 1}, line)(0) == doctest::Approx(0.5));
  }
  SUBCASE("both compositions of a shared point agree") {
    Eigen::VectorXd a = embed_vertex(canonicalize({0, 1}, 2, 3), cfg);
    Eigen::VectorXd direct = 0.5 * (cfg.anchors[0] + 0.5 * (cfg.anchors[1] + cfg.anchors[2]));
    CHECK((a - direct).norm() <= 1e-15);
  }
}

TEST_CASE("well-definedness across representations") {
  for (int n = 2; n <= 5; ++n) {
    auto cfg = regular_simplex(n);
    for (int m = 1; m <= 4; ++m)
      for (const VertexAddress& v : enumerate_vertices(n, m)) {
        auto reps = representations(v);
        if (reps.size() < 2) continue;
        Eigen::VectorXd p0 = embed_vertex(VertexAddress{reps[0].first, reps[0].second}, cfg);
        Eigen::VectorXd p1 = embed_vertex(VertexAddress{reps[1].first, reps[1].second}, cfg);
        CHECK((p0 - p1).norm() <= 1e-12);
      }
  }
}

TEST_CASE("contraction ratio is exactly one half") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> dist(-2.0, 2.0);
  for (int n : {3, 4, 5}) {
    auto cfg = regular_simplex(n);
    for (int trial = 0; trial < 20; ++trial) {
      Eigen::VectorXd p(n - 1), q(n - 1);
      for (int d = 0; d < n - 1; ++d) {
        p(d) = dist(rng);
        q(d) = dist(rng);
      }
      for (int i = 0; i < n; ++i) {
        Eigen::VectorXd fp = 0.5 * (p + cfg.anchors[i]);
        Eigen::VectorXd fq = 0.5 * (q + cfg.anchors[i]);
        CHECK(std::abs((fp - fq).norm() - 0.5 * (p - q).norm()) <= 1e-14);
      }
    }
  }
}

TEST_CASE("adjacent cells meet at the expected single point") {
  for (int n : {3, 4, 5}) {
    auto cfg = regular_simplex(n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (i == j) continue;
        Eigen::VectorXd a = 0.5 * (cfg.anchors[j] + cfg.anchors[i]);  // f_i(x_j)
        Eigen::VectorXd b = 0.5 * (cfg.anchors[i] + cfg.anchors[j]);  // f_j(x_i)
        CHECK((a - b).norm() == 0.0);
      }
  }
}

TEST_CASE("embedded points stay inside the anchor hull") {
  for (int n : {3, 4}) {
    auto cfg = regular_simplex(n);
    // barycentric solve: [anchors; 1] w = [p; 1]
    Eigen::MatrixXd sys(n, n);
    for (int i = 0; i < n; ++i) {
      sys.col(i).head(n - 1) = cfg.anchors[i];
      sys(n - 1, i) = 1.0;
    }
    Eigen::PartialPivLU<Eigen::MatrixXd> lu(sys);
    for (const VertexAddress& v : enumerate_vertices(n, 3)) {
      Eigen::VectorXd rhs(n);
      rhs.head(n - 1) = embed_vertex(v, cfg);
      rhs(n - 1) = 1.0;
      Eigen::VectorXd w = lu.solve(rhs);
      CHECK(w.minCoeff() >= -1e-12);
    }
  }
}

TEST_CASE("hausdorff dimension") {
  CHECK(hausdorff_dimension(2) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(hausdorff_dimension(3) ==
        doctest::Approx(std::log(3.0) / std::log(2.0)).epsilon(1e-15));
  CHECK(hausdorff_dimension(4) == doctest::Approx(2.0).epsilon(1e-15));
}

TEST_CASE("point cloud export") {
  SUBCASE("n=3 m=0: three corners, three edges") {
    auto g = build_graph(3, 0);
    std::ostringstream pts, eds;
    export_point_cloud(pts, eds, g, regular_simplex(3), nullptr, CloudFormat::Columns);
    std::string p = pts.str();
    std::string e = eds.str();
    CHECK(std::count(p.begin(), p.end(), '\n') == 4);  // header + 3 rows
    CHECK(p.rfind("# address c1 c2\n", 0) == 0);
    CHECK(std::count(e.begin(), e.end(), '\n') == 3);
  }
  SUBCASE("n=4 m=1: 10 rows, 24 edges") {
    auto g = build_graph(4, 1);
    std::ostringstream pts, eds;
    export_point_cloud(pts, eds, g, regular_simplex(4), nullptr, CloudFormat::Csv);
    std::string p = pts.str();
    std::string e = eds.str();
    CHECK(std::count(p.begin(), p.end(), '\n') == 11);
    CHECK(std::count(e.begin(), e.end(), '\n') == 24);
  }
  SUBCASE("value column length check") {
    auto g = build_graph(3, 1);
    FunctionOnGraph bad(3);
    std::ostringstream pts, eds;
    CHECK_THROWS_AS(export_point_cloud(pts, eds, g, regular_simplex(3), &bad,
                                       CloudFormat::Columns),
                    std::invalid_argument);
  }
  SUBCASE("deterministic output") {
    auto g = build_graph(3, 2);
    std::ostringstream a1, a2, b1, b2;
    export_point_cloud(a1, b1, g, regular_simplex(3), nullptr, CloudFormat::Columns);
    export_point_cloud(a2, b2, g, regular_simplex(3), nullptr, CloudFormat::Columns);
    CHECK(a1.str() == a2.str());
    CHECK(b1.str() == b2.str());
  }
}
