#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pn/decimation.hpp"
#include "pn/graph.hpp"

namespace pn {

inline constexpr std::size_t kDefaultInteriorCap = 2000;

/// One Dirichlet eigenpair of a level-m graph. The vector is indexed over the
/// whole graph with zeros at boundary slots, unit-normalized over interior.
struct EigenPair {
  double lambda = 0.0;
  FunctionOnGraph vector;
  double residual = 0.0;  // ||D_m v - lambda v||_inf
};

/// Complete Dirichlet eigendecomposition by a dense symmetric solve,
/// eigenvalues ascending. This is the ground-truth oracle; it shares no
/// formula evaluation with the decimation engine.
std::vector<EigenPair> full_spectrum(const ApproxGraph& g,
                                     std::size_t interior_cap = kDefaultInteriorCap);
std::vector<EigenPair> full_spectrum(int n, int m,
                                     std::size_t interior_cap = kDefaultInteriorCap);

enum class SpectrumTag {
  DecimatedMinus,
  DecimatedPlus,
  Forbidden2,
  ForbiddenNPlus2,
  Forbidden2N,
  Unmatched,
};

std::string tag_name(SpectrumTag t);

struct SpectrumCluster {
  double lambda = 0.0;  // cluster mean
  int multiplicity = 0;
  SpectrumTag tag = SpectrumTag::Unmatched;
  std::optional<double> parent_lambda;  // for decimated entries
  double residual = 0.0;                // worst oracle residual in the cluster
};

struct SpectrumReport {
  int n = 0;
  int level = 0;
  std::vector<SpectrumCluster> clusters;
  int unmatched_count() const;
};

/// Cluster the oracle spectrum of level m (gap tolerance 1e-8 absolute) and
/// tag each cluster: Forbidden when within guard of {2, n+2, 2n}; otherwise
/// Decimated(+/-) when (n+2)l - l^2 lands in the level-(m-1) oracle spectrum
/// within 1e-7; otherwise Unmatched. At m = 1 the parent spectrum is empty.
SpectrumReport classify_spectrum(int n, int m,
                                 std::size_t interior_cap = kDefaultInteriorCap);

/// CSV with columns level,index,lambda,multiplicity,tag,parent_lambda,sign,residual.
std::string spectrum_csv(const SpectrumReport& rep);

struct VerifyReport {
  bool pass = false;
  int forward_checks = 0;
  int converse_checks = 0;
  double worst_forward = 0.0;
  double worst_converse = 0.0;
  int lambda_near_n_seen = 0;    // eigenvalues within guard of lambda = n
  int lambda_near_n_failed = 0;  // of those, how many failed a residual check
  std::vector<std::string> failures;
};

/// Run the forward (extend) and converse (restrict) eigenpair checks over all
/// oracle eigenpairs for levels 1..max_m, at the given residual tolerance.
/// Failures are collected, not thrown.
VerifyReport verify_decimation(int n, int max_m, double tol,
                               std::size_t interior_cap = kDefaultInteriorCap);

}  // namespace pn
