#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "pn/errors.hpp"
#include "pn/spectrum.hpp"

using namespace pn;

namespace {

// independent determinant by Gaussian elimination with partial pivoting
double det_by_elimination(Eigen::MatrixXd a) {
  const int n = static_cast<int>(a.rows());
  double det = 1.0;
  for (int col = 0; col < n; ++col) {
    int piv = col;
    for (int r = col + 1; r < n; ++r)
      if (std::abs(a(r, col)) > std::abs(a(piv, col))) piv = r;
    if (a(piv, col) == 0.0) return 0.0;
    if (piv != col) {
      a.row(piv).swap(a.row(col));
      det = -det;
    }
    det *= a(col, col);
    for (int r = col + 1; r < n; ++r) {
      double f = a(r, col) / a(col, col);
      a.row(r).tail(n - col) -= f * a.row(col).tail(n - col);
    }
  }
  return det;
}

}  // namespace

TEST_CASE("oracle spectra at known sizes") {
  SUBCASE("n=3 m=1: {2, 5, 5}") {
    auto s = full_spectrum(3, 1);
    REQUIRE(s.size() == 3);
    CHECK(std::abs(s[0].lambda - 2.0) <= 1e-10);
    CHECK(std::abs(s[1].lambda - 5.0) <= 1e-10);
    CHECK(std::abs(s[2].lambda - 5.0) <= 1e-10);
  }
  SUBCASE("n=2 m=1: {2}") {
    auto s = full_spectrum(2, 1);
    REQUIRE(s.size() == 1);
    CHECK(s[0].lambda == doctest::Approx(2.0).epsilon(1e-14));
  }
  SUBCASE("n=2 m=3 matches the path closed form") {
    auto s = full_spectrum(2, 3);
    REQUIRE(s.size() == 7);
    for (int k = 1; k <= 7; ++k)
      CHECK(std::abs(s[k - 1].lambda - 4.0 * std::pow(std::sin(k * M_PI / 16.0), 2)) <=
            1e-12);
  }
}

TEST_CASE("oracle self-tests") {
  for (int n : {2, 3, 4, 5})
    for (int m = 1; m <= 2; ++m) {
      auto g = build_graph(n, m);
      auto s = full_spectrum(g);
      double sum = 0.0, prod = 1.0;
      for (const auto& p : s) {
        sum += p.lambda;
        prod *= p.lambda;
        CHECK(p.lambda > 0.0);
        CHECK(p.lambda <= 4.0 * (n - 1));
        CHECK(p.residual <= 1e-9 * (1.0 + p.lambda));
      }
      double trace = 2.0 * (n - 1) * (static_cast<double>(g.vertices.size()) - n);
      CHECK(std::abs(sum - trace) <= 1e-9 * trace);
      double det = det_by_elimination(dirichlet_matrix(g).mat);
      CHECK(std::abs(prod - det) <= 1e-6 * std::abs(det));

      // interior-orthonormal eigenvectors
      for (std::size_t a = 0; a + 1 < s.size() && a < 6; ++a) {
        double norm = 0.0, dot = 0.0;
        for (std::size_t i = 0; i < s[a].vector.size(); ++i) {
          norm += s[a].vector[i] * s[a].vector[i];
          dot += s[a].vector[i] * s[a + 1].vector[i];
        }
        CHECK(norm == doctest::Approx(1.0).epsilon(1e-10));
        CHECK(std::abs(dot) <= 1e-10);
      }
    }
}

TEST_CASE("oracle cap") {
  CHECK_THROWS_AS(full_spectrum(3, 4, 50), CapExceeded);
}

TEST_CASE("spectrum classification") {
  SUBCASE("n=3 m=1: births and a forbidden line") {
    auto rep = classify_spectrum(3, 1);
    REQUIRE(rep.clusters.size() == 2);
    CHECK(rep.clusters[0].lambda == doctest::Approx(2.0));
    // 2 sits in the forbidden set, which takes precedence over the
    // no-level-0-parent situation
    CHECK(rep.clusters[0].tag == SpectrumTag::Forbidden2);
    CHECK(rep.clusters[1].lambda == doctest::Approx(5.0));
    CHECK(rep.clusters[1].multiplicity == 2);
    CHECK(rep.clusters[1].tag == SpectrumTag::ForbiddenNPlus2);
  }
  SUBCASE("n=3 m=2 contains both children of lambda_1 = 2") {
    auto rep = classify_spectrum(3, 2);
    double minus = (5.0 - std::sqrt(17.0)) / 2.0;
    double plus = (5.0 + std::sqrt(17.0)) / 2.0;
    bool saw_minus = false, saw_plus = false;
    for (const auto& cl : rep.clusters) {
      if (std::abs(cl.lambda - minus) < 1e-9) {
        saw_minus = true;
        CHECK(cl.tag == SpectrumTag::DecimatedMinus);
        REQUIRE(cl.parent_lambda.has_value());
        CHECK(*cl.parent_lambda == doctest::Approx(2.0));
      }
      if (std::abs(cl.lambda - plus) < 1e-9) {
        saw_plus = true;
        CHECK(cl.tag == SpectrumTag::DecimatedPlus);
      }
    }
    CHECK(saw_minus);
    CHECK(saw_plus);
  }
  SUBCASE("n=2 m=2: the three-point path spectrum") {
    auto rep = classify_spectrum(2, 2);
    REQUIRE(rep.clusters.size() == 3);
    CHECK(rep.clusters[0].tag == SpectrumTag::DecimatedMinus);
    CHECK(rep.clusters[0].lambda == doctest::Approx(2.0 - std::sqrt(2.0)));
    CHECK(rep.clusters[1].tag == SpectrumTag::Forbidden2);
    CHECK(rep.clusters[2].tag == SpectrumTag::DecimatedPlus);
    CHECK(rep.clusters[2].lambda == doctest::Approx(2.0 + std::sqrt(2.0)));
  }
  SUBCASE("multiplicities account for the whole interior") {
    for (int n : {2, 3, 4})
      for (int m = 1; m <= 3; ++m) {
        auto rep = classify_spectrum(n, m);
        int total = 0;
        for (const auto& cl : rep.clusters) total += cl.multiplicity;
        CHECK(total == static_cast<int>(vertex_count(n, m)) - n);
      }
  }
  SUBCASE("beyond level 1, every non-forbidden eigenvalue has a parent") {
    for (int n : {2, 3, 4, 5})
      for (int m = 2; m <= 3; ++m) {
        auto rep = classify_spectrum(n, m);
        CHECK(rep.unmatched_count() == 0);
      }
  }
}

TEST_CASE("spectrum CSV is deterministic and well-formed") {
  auto rep = classify_spectrum(3, 2);
  auto csv1 = spectrum_csv(rep);
  auto csv2 = spectrum_csv(classify_spectrum(3, 2));
  CHECK(csv1 == csv2);
  CHECK(csv1.rfind("level,index,lambda,multiplicity,tag,parent_lambda,sign,residual\n", 0) ==
        0);
  CHECK(std::count(csv1.begin(), csv1.end(), '\n') ==
        static_cast<long>(rep.clusters.size()) + 1);
}

TEST_CASE("verify_decimation passes on small grids") {
  for (int n : {2, 3}) {
    auto rep = verify_decimation(n, 3, 1e-8);
    CHECK(rep.pass);
    CHECK(rep.forward_checks > 0);
    CHECK(rep.converse_checks > 0);
    CHECK(rep.lambda_near_n_failed == 0);
    if (!rep.pass)
      for (const auto& f : rep.failures) MESSAGE(f);
  }
}
