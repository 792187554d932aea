#include "pn/spectrum.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "pn/errors.hpp"

namespace pn {

namespace {

constexpr double kClusterTol = 1e-8;   // absolute gap for multiplicity counting
constexpr double kParentTol = 1e-7;    // match tolerance into the parent spectrum

double inf_norm(const FunctionOnGraph& u) {
  double r = 0.0;
  for (double x : u) r = std::max(r, std::abs(x));
  return r;
}

double eigen_residual(const ApproxGraph& g, const FunctionOnGraph& u, double lambda) {
  FunctionOnGraph lap = laplacian_apply(g, u);
  double r = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i)
    if (!g.boundary_mask[i]) r = std::max(r, std::abs(lap[i] - lambda * u[i]));
  return r;
}

}  // namespace

std::vector<EigenPair> full_spectrum(const ApproxGraph& g, std::size_t interior_cap) {
  const int k = g.interior_count();
  if (k == 0) return {};
  if (static_cast<std::size_t>(k) > interior_cap)
    throw CapExceeded("full_spectrum: interior size " + std::to_string(k) +
                      " exceeds cap " + std::to_string(interior_cap));
  DirichletMatrix d = dirichlet_matrix(g);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(d.mat);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("full_spectrum: eigensolver did not converge");

  std::vector<EigenPair> out(k);
  for (int a = 0; a < k; ++a) {
    EigenPair& p = out[a];
    p.lambda = solver.eigenvalues()(a);
    p.vector.assign(g.vertices.size(), 0.0);
    for (int b = 0; b < k; ++b)
      p.vector[d.interior_to_graph[b]] = solver.eigenvectors()(b, a);
    // residual via the matrix-free operator, as a cross-check on the solve
    p.residual = eigen_residual(g, p.vector, p.lambda);
    if (p.residual > 1e-9 * (1.0 + std::abs(p.lambda)))
      throw std::runtime_error("full_spectrum: residual above oracle tolerance");
  }
  return out;
}

std::vector<EigenPair> full_spectrum(int n, int m, std::size_t interior_cap) {
  return full_spectrum(build_graph(n, m), interior_cap);
}

std::string tag_name(SpectrumTag t) {
  switch (t) {
    case SpectrumTag::DecimatedMinus: return "DecimatedMinus";
    case SpectrumTag::DecimatedPlus: return "DecimatedPlus";
    case SpectrumTag::Forbidden2: return "Forbidden(2)";
    case SpectrumTag::ForbiddenNPlus2: return "Forbidden(n+2)";
    case SpectrumTag::Forbidden2N: return "Forbidden(2n)";
    case SpectrumTag::Unmatched: return "Unmatched";
  }
  return "?";
}

int SpectrumReport::unmatched_count() const {
  int c = 0;
  for (const auto& cl : clusters)
    if (cl.tag == SpectrumTag::Unmatched) c += cl.multiplicity;
  return c;
}

SpectrumReport classify_spectrum(int n, int m, std::size_t interior_cap) {
  if (m < 1) throw std::invalid_argument("classify_spectrum: need m >= 1");
  std::vector<EigenPair> pairs = full_spectrum(n, m, interior_cap);
  std::vector<double> parents;
  if (m >= 2)
    for (const EigenPair& p : full_spectrum(n, m - 1, interior_cap))
      parents.push_back(p.lambda);

  SpectrumReport rep;
  rep.n = n;
  rep.level = m;
  std::size_t i = 0;
  while (i < pairs.size()) {
    std::size_t j = i + 1;
    while (j < pairs.size() && pairs[j].lambda - pairs[j - 1].lambda < kClusterTol) ++j;
    SpectrumCluster cl;
    double sum = 0.0;
    for (std::size_t k = i; k < j; ++k) {
      sum += pairs[k].lambda;
      cl.residual = std::max(cl.residual, pairs[k].residual);
    }
    cl.multiplicity = static_cast<int>(j - i);
    cl.lambda = sum / cl.multiplicity;

    const double guard = 1e-9;
    if (std::abs(cl.lambda - 2.0) < guard * 2.0) {
      cl.tag = SpectrumTag::Forbidden2;
    } else if (std::abs(cl.lambda - (n + 2.0)) < guard * (n + 2.0)) {
      cl.tag = SpectrumTag::ForbiddenNPlus2;
    } else if (std::abs(cl.lambda - 2.0 * n) < guard * 2.0 * n) {
      cl.tag = SpectrumTag::Forbidden2N;
    } else {
      const double parent = eigenvalue_down(n, cl.lambda);
      bool matched = false;
      for (double p : parents)
        if (std::abs(p - parent) < kParentTol) {
          matched = true;
          break;
        }
      if (matched) {
        cl.parent_lambda = parent;
        cl.tag = cl.lambda > (n + 2.0) / 2.0 ? SpectrumTag::DecimatedPlus
                                             : SpectrumTag::DecimatedMinus;
      }
    }
    rep.clusters.push_back(cl);
    i = j;
  }
  return rep;
}

std::string spectrum_csv(const SpectrumReport& rep) {
  std::ostringstream os;
  os << "level,index,lambda,multiplicity,tag,parent_lambda,sign,residual\n";
  char buf[64];
  auto fmt = [&](double x) {
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return std::string(buf);
  };
  for (std::size_t i = 0; i < rep.clusters.size(); ++i) {
    const SpectrumCluster& cl = rep.clusters[i];
    std::string sign;
    if (cl.tag == SpectrumTag::DecimatedMinus) sign = "-";
    if (cl.tag == SpectrumTag::DecimatedPlus) sign = "+";
    os << rep.level << ',' << i << ',' << fmt(cl.lambda) << ',' << cl.multiplicity << ','
       << tag_name(cl.tag) << ','
       << (cl.parent_lambda ? fmt(*cl.parent_lambda) : std::string()) << ',' << sign << ','
       << fmt(cl.residual) << '\n';
  }
  return os.str();
}

VerifyReport verify_decimation(int n, int max_m, double tol, std::size_t interior_cap) {
  VerifyReport rep;
  rep.pass = true;
  auto fail = [&](std::string msg) {
    rep.pass = false;
    rep.failures.push_back(std::move(msg));
  };

  ApproxGraph g_prev = build_graph(n, std::min(1, max_m));
  std::vector<EigenPair> spec_prev;
  try {
    spec_prev = full_spectrum(g_prev, interior_cap);
  } catch (const CapExceeded&) {
    return rep;
  }

  for (int m = 2; m <= max_m; ++m) {
    ApproxGraph g;
    std::vector<EigenPair> spec;
    try {
      g = build_graph(n, m);
      spec = full_spectrum(g, interior_cap);
    } catch (const CapExceeded&) {
      break;  // deeper levels only get bigger
    }

    // forward: extend every level-(m-1) eigenpair through both roots
    for (const EigenPair& p : spec_prev) {
      for (Sign s : {Sign::Minus, Sign::Plus}) {
        double lam = eigenvalue_up(n, p.lambda, s);
        if (is_forbidden(n, lam)) continue;
        FunctionOnGraph ext = extend_eigenfunction(g_prev, g, p.vector, lam);
        double res = eigen_residual(g, ext, lam);
        double bound = tol * (1.0 + std::abs(lam)) * inf_norm(ext);
        ++rep.forward_checks;
        double norm_res = res / ((1.0 + std::abs(lam)) * std::max(inf_norm(ext), 1e-300));
        rep.worst_forward = std::max(rep.worst_forward, norm_res);
        bool near_n = std::abs(lam - n) < 1e-9 * n;
        if (near_n) ++rep.lambda_near_n_seen;
        if (res > bound) {
          if (near_n) ++rep.lambda_near_n_failed;
          fail("forward n=" + std::to_string(n) + " m=" + std::to_string(m) +
               " lambda=" + std::to_string(lam) + " residual=" + std::to_string(res));
        }
      }
    }

    // converse: restrict every level-m eigenpair with a non-forbidden eigenvalue
    for (const EigenPair& p : spec) {
      if (is_forbidden(n, p.lambda)) continue;
      double parent = eigenvalue_down(n, p.lambda);
      bool matched = false;
      for (const EigenPair& q : spec_prev)
        if (std::abs(q.lambda - parent) < kParentTol) {
          matched = true;
          break;
        }
      ++rep.converse_checks;
      bool near_n = std::abs(p.lambda - n) < 1e-9 * n;
      if (near_n) ++rep.lambda_near_n_seen;
      if (!matched) {
        if (near_n) ++rep.lambda_near_n_failed;
        fail("converse n=" + std::to_string(n) + " m=" + std::to_string(m) + " lambda=" +
             std::to_string(p.lambda) + " has no parent in the level below");
        continue;
      }
      FunctionOnGraph r = restrict_to_previous(g, g_prev, p.vector);
      double rn = inf_norm(r);
      if (rn <= 1e-6 * inf_norm(p.vector)) {
        if (near_n) ++rep.lambda_near_n_failed;
        fail("converse n=" + std::to_string(n) + " m=" + std::to_string(m) +
             " restriction vanished for lambda=" + std::to_string(p.lambda));
        continue;
      }
      double res = eigen_residual(g_prev, r, parent);
      double bound = tol * (1.0 + std::abs(parent)) * rn;
      rep.worst_converse = std::max(rep.worst_converse, res / ((1.0 + std::abs(parent)) * rn));
      if (res > bound) {
        if (near_n) ++rep.lambda_near_n_failed;
        fail("converse n=" + std::to_string(n) + " m=" + std::to_string(m) +
             " restricted residual=" + std::to_string(res) + " for lambda=" +
             std::to_string(p.lambda));
      }
    }

    g_prev = std::move(g);
    spec_prev = std::move(spec);
  }
  return rep;
}

}  // namespace pn
