#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "sidonkit/family.hpp"
#include "sidonkit/types.hpp"

namespace sidonkit {

// One cell of the random-system model S(n, k, p): every k-subset of [n] is
// included independently with probability p.
struct SampleSpec {
  Elem n = 0;
  int k = 2;
  double p = 0.0;
  int h = 2;  // fold count of the property under test; 2 = Sidon
  std::uint64_t seed = 0;
  std::uint64_t samples = 1;
};

struct SweepPoint {
  SampleSpec spec;
  double p_hat = 0.0;           // estimated Pr(property holds)
  double ci_half_width = 0.0;   // 95% normal-approximation half width
  double mean_collisions = 0.0;  // average canonical violation count (h = 2)
};

// Draws one random system. Streaming: candidate ranks are skip-sampled with
// geometric gaps, so only the included sets are ever materialized.
// Deterministic in (spec, sample_index).
Family sample_system(const SampleSpec& spec, std::uint64_t sample_index = 0);

// Fraction of `samples` independent systems that are Sidon, plus the mean
// canonical collision count.
SweepPoint estimate_sidon_probability(const SampleSpec& spec, int threads = 1);

// Same, testing the B_h[1] property for spec.h >= 2. For h = 2 the per-sample
// outcomes coincide with estimate_sidon_probability at equal seeds.
SweepPoint estimate_bh_probability(const SampleSpec& spec, int threads = 1);

struct PGrid {
  double p_min = 0.0;
  double p_max = 0.0;
  int points = 12;
};

struct CrossingEstimate {
  Elem n = 0;
  std::optional<double> p_half;  // empty when the grid does not bracket 1/2
};

struct ThresholdFit {
  std::vector<SweepPoint> points;        // all grid cells, in (n, p) order
  std::vector<CrossingEstimate> per_n;
  std::optional<double> slope;           // d log p_half / d log n
  std::optional<double> intercept;
  std::uint64_t seed = 0;
};

// Sweeps a geometric p grid for each n, estimates the half-probability point
// by monotone (pool-adjacent-violators) logistic interpolation on the logit
// scale, and regresses log p_half against log n. When grid.p_min/p_max are
// zero the grid is centered on the reference scale n^(-(2k+1)/4) for h = 2
// and n^(-(hk+1)/(h+2)) for h > 2.
ThresholdFit threshold_sweep(std::span<const Elem> n_list, int k, int h,
                             PGrid grid, std::uint64_t samples,
                             std::uint64_t seed, int threads = 1);

struct CollisionDiagnostics {
  double mc_mean = 0.0;           // Monte Carlo estimate of E[X]
  double mc_sigma = 0.0;          // standard error of mc_mean
  double pr_not_sidon = 0.0;      // empirical Pr(X >= 1)
  std::optional<double> exact;    // sum over ell of |C(ell)| p^ell, when
                                  // the oracle cap allows computing it
};

// First-moment diagnostics: the Monte Carlo mean collision count against the
// exact first moment, plus the Markov-side empirical check.
CollisionDiagnostics expected_collision_diagnostics(Elem n, int k, double p,
                                                    std::uint64_t samples,
                                                    std::uint64_t seed,
                                                    int threads = 1);

// Worker-pool default: SIDONKIT_THREADS, else 1.
int default_threads();

}  // namespace sidonkit
