#include "pn/decimation.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "pn/errors.hpp"

namespace pn {

std::string signs_to_string(const std::vector<Sign>& signs) {
  std::string s;
  s.reserve(signs.size());
  for (Sign x : signs) s.push_back(x == Sign::Plus ? '+' : '-');
  return s;
}

std::vector<Sign> parse_signs(const std::string& s) {
  std::vector<Sign> out;
  out.reserve(s.size());
  for (char c : s) {
    if (c == '+')
      out.push_back(Sign::Plus);
    else if (c == '-')
      out.push_back(Sign::Minus);
    else
      throw std::invalid_argument(std::string("bad sign character '") + c + "'");
  }
  return out;
}

std::vector<double> forbidden_values(int n) {
  std::vector<double> v{2.0, static_cast<double>(n + 2), static_cast<double>(2 * n)};
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

bool is_forbidden(int n, double lambda, double guard) {
  for (double f : forbidden_values(n))
    if (std::abs(lambda - f) < guard * std::max(1.0, f)) return true;
  return false;
}

namespace {

template <class Real>
Real up_step(int n, Real lambda_prev, Sign sign) {
  const Real b = Real(n) + 2;
  const Real disc = b * b - 4 * lambda_prev;
  if (disc < 0)
    throw std::domain_error("eigenvalue_up: negative discriminant");
  const Real root = std::sqrt(disc);
  if (sign == Sign::Plus) return (b + root) / 2;
  // stable Minus root
  return 2 * lambda_prev / (b + root);
}

void check_extendable(int n, double lambda, int level) {
  if (is_forbidden(n, lambda))
    throw ForbiddenEigenvalue(lambda, level,
                              "eigenvalue " + std::to_string(lambda) +
                                  " is within guard of the forbidden set at level " +
                                  std::to_string(level));
}

}  // namespace

double eigenvalue_up(int n, double lambda_prev, Sign sign) {
  return up_step<double>(n, lambda_prev, sign);
}

double eigenvalue_down(int n, double lambda_m) {
  return (n + 2) * lambda_m - lambda_m * lambda_m;
}

FunctionOnGraph extend_eigenfunction(const ApproxGraph& g_prev, const ApproxGraph& g,
                                     const FunctionOnGraph& u, double lambda_m) {
  const int n = g.n;
  if (g_prev.n != n || g.level != g_prev.level + 1)
    throw std::invalid_argument("extend_eigenfunction: graphs must be consecutive levels");
  if (u.size() != g_prev.vertices.size())
    throw std::invalid_argument("extend_eigenfunction: function/graph size mismatch");
  check_extendable(n, lambda_m, g.level);

  FunctionOnGraph out(g.vertices.size(), 0.0);
  for (std::size_t i = 0; i < u.size(); ++i)
    out[g.index_of(lift(g_prev.vertices[i]))] = u[i];

  const double denom = (2.0 - lambda_m) * ((n + 2.0) - lambda_m);
  for (std::size_t c = 0; c < g_prev.cells.size(); ++c) {
    const Word& w = g_prev.cells[c];
    const auto& corners = g_prev.cell_corner_index[c];
    double total = 0.0;
    for (int k = 0; k < n; ++k) total += u[corners[k]];
    for (int r = 0; r < n; ++r)
      for (int s = r + 1; s < n; ++s) {
        Word wr = w;
        wr.push_back(r);
        const double ur = u[corners[r]], us = u[corners[s]];
        const double rest = total - ur - us;
        out[g.index_of(canonicalize(wr, s, n))] =
            ((4.0 - lambda_m) * (ur + us) + 2.0 * rest) / denom;
      }
  }
  return out;
}

FunctionOnGraph harmonic_extend(const ApproxGraph& g_prev, const ApproxGraph& g,
                                const FunctionOnGraph& u) {
  const int n = g.n;
  if (g_prev.n != n || g.level != g_prev.level + 1)
    throw std::invalid_argument("harmonic_extend: graphs must be consecutive levels");
  if (u.size() != g_prev.vertices.size())
    throw std::invalid_argument("harmonic_extend: function/graph size mismatch");

  FunctionOnGraph out(g.vertices.size(), 0.0);
  for (std::size_t i = 0; i < u.size(); ++i)
    out[g.index_of(lift(g_prev.vertices[i]))] = u[i];

  const double w2 = 2.0 / (n + 2.0), w1 = 1.0 / (n + 2.0);
  for (std::size_t c = 0; c < g_prev.cells.size(); ++c) {
    const Word& w = g_prev.cells[c];
    const auto& corners = g_prev.cell_corner_index[c];
    double total = 0.0;
    for (int k = 0; k < n; ++k) total += u[corners[k]];
    for (int r = 0; r < n; ++r)
      for (int s = r + 1; s < n; ++s) {
        Word wr = w;
        wr.push_back(r);
        const double ur = u[corners[r]], us = u[corners[s]];
        out[g.index_of(canonicalize(wr, s, n))] =
            w2 * (ur + us) + w1 * (total - ur - us);
      }
  }
  return out;
}

FunctionOnGraph restrict_to_previous(const ApproxGraph& g, const ApproxGraph& g_prev,
                                     const FunctionOnGraph& u) {
  if (g_prev.n != g.n || g.level != g_prev.level + 1)
    throw std::invalid_argument("restrict: graphs must be consecutive levels");
  if (u.size() != g.vertices.size())
    throw std::invalid_argument("restrict: function/graph size mismatch");
  FunctionOnGraph out(g_prev.vertices.size());
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = u[g.index_of(lift(g_prev.vertices[i]))];
  return out;
}

namespace {

Sign sign_at(const TraceSpec& spec, int level) {
  // sign for the step from level-1 to level
  int idx = level - spec.seed_level - 1;
  if (idx < static_cast<int>(spec.signs.size())) return spec.signs[idx];
  return Sign::Minus;
}

double renorm(int n, int level, double lambda) {
  return 0.5 * n * std::pow(static_cast<double>(n + 2), level) * lambda;
}

}  // namespace

DecimationTrace decimate(const TraceSpec& spec) {
  if (spec.n < 2 || spec.seed_level < 0 || spec.target_level < spec.seed_level)
    throw std::invalid_argument("decimate: bad trace spec");
  DecimationTrace t;
  t.n = spec.n;
  t.seed_level = spec.seed_level;
  t.seed_lambda = spec.seed_lambda;
  t.signs = spec.signs;
  double lam = spec.seed_lambda;
  t.lambdas.push_back(lam);
  t.renormalized.push_back(renorm(spec.n, spec.seed_level, lam));
  for (int m = spec.seed_level + 1; m <= spec.target_level; ++m) {
    lam = eigenvalue_up(spec.n, lam, sign_at(spec, m));
    t.lambdas.push_back(lam);
    t.renormalized.push_back(renorm(spec.n, m, lam));
    if (t.valid && is_forbidden(spec.n, lam)) {
      t.valid = false;
      t.forbidden_hit = m;
    }
  }
  return t;
}

DecimationResult decimate_with_function(const TraceSpec& spec, const FunctionOnGraph& seed,
                                        std::size_t cap) {
  DecimationResult res;
  res.trace = decimate(spec);
  if (!res.trace.valid)
    throw ForbiddenEigenvalue(res.trace.lambdas[*res.trace.forbidden_hit - spec.seed_level],
                              *res.trace.forbidden_hit,
                              "decimation trace hits a forbidden eigenvalue at level " +
                                  std::to_string(*res.trace.forbidden_hit));

  ApproxGraph g = build_graph(spec.n, spec.seed_level, cap);
  if (seed.size() != g.vertices.size())
    throw std::invalid_argument("decimate: seed function does not fit the seed level");
  FunctionOnGraph u = seed;

  auto residual = [](const ApproxGraph& gr, const FunctionOnGraph& f, double lam) {
    FunctionOnGraph lap = laplacian_apply(gr, f);
    double r = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i)
      if (!gr.boundary_mask[i]) r = std::max(r, std::abs(lap[i] - lam * f[i]));
    return r;
  };
  if (spec.seed_level >= 1)
    res.residuals.push_back(residual(g, u, spec.seed_lambda));
  else
    res.residuals.push_back(0.0);

  for (int m = spec.seed_level + 1; m <= spec.target_level; ++m) {
    ApproxGraph g_next = build_graph(spec.n, m, cap);
    const double lam = res.trace.lambdas[m - spec.seed_level];
    u = extend_eigenfunction(g, g_next, u, lam);
    res.residuals.push_back(residual(g_next, u, lam));
    g = std::move(g_next);
  }
  res.extended = std::move(u);
  return res;
}

namespace {

template <class Real>
LimitResult limit_impl(const TraceSpec& spec, const LimitOptions& opt) {
  LimitResult out;
  const int n = spec.n;
  Real lam = static_cast<Real>(spec.seed_lambda);
  Real r = Real(n) / 2 * std::pow(Real(n) + 2, spec.seed_level) * lam;
  out.renormalized.push_back(static_cast<double>(r));
  const int tail_start = spec.seed_level + static_cast<int>(spec.signs.size());
  for (int m = spec.seed_level + 1; m <= opt.max_level; ++m) {
    const Sign s = sign_at(spec, m);
    const Real lam_next = up_step<Real>(n, lam, s);
    if (m > spec.seed_level && is_forbidden(n, static_cast<double>(lam_next)))
      throw ForbiddenEigenvalue(static_cast<double>(lam_next), m,
                                "fractal_eigenvalue: forbidden value at level " +
                                    std::to_string(m));
    // r_{m} = r_{m-1} * (n+2) * lam_m / lam_{m-1}, without large powers
    const Real r_next = (lam == Real(0)) ? Real(0) : r * (Real(n) + 2) * lam_next / lam;
    out.renormalized.push_back(static_cast<double>(r_next));
    const Real step = std::abs(r_next - r);
    out.levels = m;
    lam = lam_next;
    if (m > tail_start) {
      out.achieved_tol =
          static_cast<double>(r_next == Real(0) ? step : step / std::abs(r_next));
      r = r_next;
      if (step <= static_cast<Real>(opt.tol) * std::abs(r_next)) {
        out.converged = true;
        out.limit = static_cast<double>(r_next);
        return out;
      }
    } else {
      r = r_next;
    }
  }
  out.limit = static_cast<double>(r);
  if (!out.converged)
    throw std::runtime_error("fractal_eigenvalue: not converged by level " +
                             std::to_string(opt.max_level));
  return out;
}

}  // namespace

LimitResult fractal_eigenvalue(const TraceSpec& spec, const LimitOptions& opt) {
  if (spec.n < 2 || spec.seed_level < 0)
    throw std::invalid_argument("fractal_eigenvalue: bad trace spec");
  if (opt.extended_precision) return limit_impl<long double>(spec, opt);
  return limit_impl<double>(spec, opt);
}

}  // namespace pn
