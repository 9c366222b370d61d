#ifndef LRD_RECONSTRUCTION_HPP
#define LRD_RECONSTRUCTION_HPP

#include <cstdint>
#include <vector>

#include "lrd/sampling.hpp"
#include "lrd/series.hpp"
#include "lrd/trace.hpp"

namespace lrd {

struct TrafficMoments {
  double mean = 0.0;      // mu_Y
  double variance = 0.0;  // sigma_Y^2
  // variance estimate came out negative and was clipped to zero
  bool variance_clipped = false;
  // derived under a non-Bernoulli sampling spec
  bool approximate = false;
};

// c_W(tau) = (c_A(tau) + mu_A^2) c_Y(tau) + c_A(tau) mu_Y^2
CovarianceSeries forward_cov(const CovarianceSeries& c_y, const InterSampleSpec& spec,
                             double mu_y);

struct ReconstructedCov {
  CovarianceSeries series;  // admissible lags only, source = reconstructed
  std::vector<std::int64_t> dropped_lags;  // inadmissible or degenerate denominator
};

// Inverts the forward relation per lag. Periodic admits only multiples
// of delta; uniform only lags <= b; lags where |c_A + mu_A^2| vanishes
// are dropped and reported.
ReconstructedCov reconstruct_cov(const CovarianceSeries& c_w, const InterSampleSpec& spec,
                                 const TrafficMoments& moments);

// mu_Y = mu_W / mu_A, sigma_Y^2 = (sigma_W^2 - sigma_A^2 mu_Y^2) / mu_A.
// Exact for geometric sampling; flagged approximate otherwise.
TrafficMoments estimate_moments(const Trace& w, const InterSampleSpec& spec);

// Var(X^(M)) = c_X(0)/M + (2/M^2) sum_{tau=1}^{M-1} (M - tau) c_X(tau).
double aggvar_from_cov(double var0, const std::vector<double>& cov_tail, std::int64_t M);

// Var(W^(M)) from Var(Y^(M)) and the model quantities; c_y must supply
// lags 0..max(M)-1 (lag 0 is sigma_Y^2).
AggVarSeries forward_aggvar(const AggVarSeries& var_y, const InterSampleSpec& spec,
                            double mu_y, const CovarianceSeries& c_y);

// Var(Y^(M)) = Var(W^(M))/mu_A^2 - (mu_Y^2 Var(A^(M)) + sigma_Y^2 sigma_A^2 / M)/mu_A^2
// with Var(A^(M)) = sigma_A^2 / M. Geometric sampling only.
AggVarSeries reconstruct_aggvar(const AggVarSeries& var_w, const InterSampleSpec& spec,
                                const TrafficMoments& moments);

struct ReconstructedPsd {
  SpectrumSeries series;
  int floored_negative = 0;  // densities clipped up to zero
};

// Psi_Y = (Psi_W - sigma_A^2 (sigma_Y^2 + mu_Y^2)) / mu_A^2 for
// memoryless (geometric) sampling. Periodic sampling aliases
// irreversibly; gamma/uniform have no closed-form inversion.
ReconstructedPsd reconstruct_psd(const SpectrumSeries& psd_w, const InterSampleSpec& spec,
                                 const TrafficMoments& moments);

}  // namespace lrd

#endif
