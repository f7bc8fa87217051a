#include "qmono/monogamy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "qmono/measures.hpp"
#include "qmono/rng.hpp"

namespace qmono {

MonogamyReport monogamy_residual(const PureTripartiteState& state, int pivot,
                                 const RoofConfig& roof_config) {
  if (pivot < 1 || pivot > 3)
    throw std::invalid_argument("monogamy_residual: pivot must be 1, 2 or 3");
  const int d = state.dim();
  std::vector<int> others;
  for (int p = 1; p <= 3; ++p)
    if (p != pivot) others.push_back(p);

  const GValue lhs = g_concurrence_marginal(partial_trace(state, {pivot}), d);

  const auto pair_bound = [&](int other, std::uint64_t stream) {
    std::vector<int> keep{pivot, other};
    std::sort(keep.begin(), keep.end());
    RoofConfig cfg = roof_config;
    cfg.seed = derive_seed(roof_config.seed, stream);
    return roof_upper_bound(partial_trace(state, keep), {d, d}, cfg);
  };
  const RoofResult roof12 = pair_bound(others[0], 2 * pivot);
  const RoofResult roof13 = pair_bound(others[1], 2 * pivot + 1);

  MonogamyReport report;
  report.pivot = pivot;
  report.dim = d;
  report.seed = roof_config.seed;
  report.lhs_pow_d = lhs.g_pow_d;
  report.rhs12_pow_d = roof12.upper_bound.g_pow_d;
  report.rhs13_pow_d = roof13.upper_bound.g_pow_d;
  report.residual = report.lhs_pow_d - report.rhs12_pow_d - report.rhs13_pow_d;
  report.lhs_g = lhs.g;
  report.rhs12_g = roof12.upper_bound.g;
  report.rhs13_g = roof13.upper_bound.g;
  report.converged12 = roof12.converged;
  report.converged13 = roof13.converged;
  return report;
}

CampaignSummary verify_campaign(int dim, int samples, std::uint64_t seed,
                                const RoofConfig& roof_config, double violation_tol,
                                const std::function<void(const CampaignRow&)>& on_row) {
  if (dim < 2)
    throw std::invalid_argument("verify_campaign: dimension must be >= 2");
  if (samples < 1)
    throw std::invalid_argument("verify_campaign: need at least one sample");

  CampaignSummary summary;
  summary.dim = dim;
  summary.samples = samples;
  summary.seed = seed;
  summary.violation_tol = violation_tol;
  summary.min_residual = std::numeric_limits<double>::infinity();
  summary.rows.reserve(static_cast<size_t>(samples) * 3);

  double residual_sum = 0.0;
  for (int s = 0; s < samples; ++s) {
    const std::uint64_t sample_seed = derive_seed(seed, static_cast<std::uint64_t>(s));
    const PureTripartiteState state = haar_random_tripartite(dim, sample_seed);
    bool sample_converged = true;
    for (int pivot = 1; pivot <= 3; ++pivot) {
      RoofConfig cfg = roof_config;
      cfg.seed = derive_seed(sample_seed, static_cast<std::uint64_t>(pivot));
      const MonogamyReport report = monogamy_residual(state, pivot, cfg);

      CampaignRow row;
      row.sample_index = s;
      row.dim = dim;
      row.pivot = pivot;
      row.lhs_pow_d = report.lhs_pow_d;
      row.rhs12_pow_d = report.rhs12_pow_d;
      row.rhs13_pow_d = report.rhs13_pow_d;
      row.residual = report.residual;
      row.converged12 = report.converged12;
      row.converged13 = report.converged13;

      summary.min_residual = std::min(summary.min_residual, row.residual);
      residual_sum += row.residual;
      if (row.residual < -violation_tol) ++summary.below_tol_count;
      sample_converged = sample_converged && row.converged12 && row.converged13;

      if (on_row) on_row(row);
      summary.rows.push_back(row);
    }
    if (!sample_converged) ++summary.nonconverged_sample_count;
  }
  summary.mean_residual = residual_sum / static_cast<double>(summary.rows.size());
  return summary;
}

double ckw_concurrence_residual(const PureTripartiteState& state,
                                const RoofConfig& roof_config) {
  if (state.dim() != 3)
    throw std::invalid_argument("ckw_concurrence_residual: defined for d = 3 only");

  // Squared C_2 across the 1|23 cut is e_2 of the pivot marginal's spectrum.
  const Eigen::VectorXd eigs = hermitian_eigenvalues(partial_trace(state, {1}));
  double lhs = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      lhs += std::max(eigs[i], 0.0) * std::max(eigs[j], 0.0);

  const auto pair_bound = [&](const std::vector<int>& keep, std::uint64_t stream) {
    RoofConfig cfg = roof_config;
    cfg.seed = derive_seed(roof_config.seed, stream);
    return c2_roof_upper_bound(partial_trace(state, keep), {3, 3}, cfg);
  };
  const double c12 = pair_bound({1, 2}, 101);
  const double c13 = pair_bound({1, 3}, 102);
  return lhs - c12 * c12 - c13 * c13;
}

}  // namespace qmono
