#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pn/graph.hpp"

namespace pn {

enum class Sign { Minus, Plus };

std::string signs_to_string(const std::vector<Sign>& signs);
std::vector<Sign> parse_signs(const std::string& s);

/// The eigenvalues {2, n+2, 2n} where the extension formula breaks down.
/// For n = 2 this collapses to {2, 4}.
std::vector<double> forbidden_values(int n);
bool is_forbidden(int n, double lambda, double guard = 1e-9);

/// One step up the eigenvalue recursion:
/// lambda_m = ((n+2) +- sqrt((n+2)^2 - 4 lambda_{m-1})) / 2.
/// The Minus root is evaluated as 2 lambda_{m-1} / ((n+2) + sqrt(disc)) to
/// avoid cancellation.
double eigenvalue_up(int n, double lambda_prev, Sign sign);

/// One step down: lambda_{m-1} = (n+2) lambda_m - lambda_m^2.
double eigenvalue_down(int n, double lambda_m);

/// Extend an eigenfunction from V_{m-1} to V_m for the target eigenvalue
/// lambda_m. Old values are copied; each new vertex x_{r,s} of a parent cell
/// gets
///   [(4 - l)(u_r + u_s) + 2 * sum_{j != r,s} u_j] / [(2 - l)((n+2) - l)]
/// from that cell's corner values. Throws ForbiddenEigenvalue when lambda_m
/// is within guard of {2, n+2, 2n}.
FunctionOnGraph extend_eigenfunction(const ApproxGraph& g_prev, const ApproxGraph& g,
                                     const FunctionOnGraph& u, double lambda_m);

/// The lambda = 0 extension: every new vertex gets
/// 2/(n+2) (u_r + u_s) + 1/(n+2) sum_{j != r,s} u_j, which zeroes the
/// Laplacian at all new vertices and scales energy by n/(n+2).
FunctionOnGraph harmonic_extend(const ApproxGraph& g_prev, const ApproxGraph& g,
                                const FunctionOnGraph& u);

/// Copy the values at the V_{m-1} positions of a function on V_m.
FunctionOnGraph restrict_to_previous(const ApproxGraph& g, const ApproxGraph& g_prev,
                                     const FunctionOnGraph& u);

struct TraceSpec {
  int n = 2;
  int seed_level = 1;
  double seed_lambda = 0.0;
  std::vector<Sign> signs;  // explicit list; Minus forever afterwards
  int target_level = 1;
};

struct DecimationTrace {
  int n = 0;
  int seed_level = 0;
  double seed_lambda = 0.0;
  std::vector<Sign> signs;
  std::vector<double> lambdas;       // levels seed_level ... target
  std::vector<double> renormalized;  // (n/2) (n+2)^m lambda_m
  bool valid = true;
  std::optional<int> forbidden_hit;  // first level whose lambda is forbidden
};

/// Run the eigenvalue recursion from the seed up to target_level. A forbidden
/// value at a level past the seed marks the trace invalid there (the seed
/// itself is exempt: it is never fed to the extension formula).
DecimationTrace decimate(const TraceSpec& spec);

struct DecimationResult {
  DecimationTrace trace;
  FunctionOnGraph extended;       // on V_target
  std::vector<double> residuals;  // sup-norm eigen-residual per level
};

/// As decimate, but also composes the eigenfunction extension level by level,
/// reporting the residual ||D_m u - lambda_m u||_inf at each level. The seed
/// function must live on V_{seed_level}. Throws on a forbidden value.
DecimationResult decimate_with_function(const TraceSpec& spec, const FunctionOnGraph& seed,
                                        std::size_t cap = kDefaultVertexCap);

struct LimitOptions {
  double tol = 1e-10;            // relative step tolerance on r_m
  int max_level = 64;
  bool extended_precision = false;  // iterate in long double
};

struct LimitResult {
  double limit = 0.0;
  double achieved_tol = 0.0;  // last relative step
  int levels = 0;             // deepest level reached
  bool converged = false;
  std::vector<double> renormalized;  // r_m sequence, seed level first
};

/// Fractal eigenvalue lambda = (n/2) lim (n+2)^m lambda_m along the sign
/// schedule. Convergence is only tested once the explicit sign list is
/// exhausted (the Minus tail). Throws on non-convergence or a forbidden value.
LimitResult fractal_eigenvalue(const TraceSpec& spec, const LimitOptions& opt = {});

}  // namespace pn
