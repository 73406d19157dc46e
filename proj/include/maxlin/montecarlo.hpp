#pragma once

#include <cstdint>

#include "maxlin/limits.hpp"

namespace maxlin {

// n x |V| matrix of positive samples, reproducible per (model, n, seed).
struct SampleBatch {
  std::size_t n = 0;
  std::vector<NodeId> labels;
  std::vector<double> data;  // row-major
  std::uint64_t seed = 0;

  double at(std::size_t row, std::size_t col) const {
    return data[row * labels.size() + col];
  }
};

// Draws X_v = max_i b_vi Z_i with independent unit-Frechet factors.
// The OpenMP kernel and the serial reference derive one RNG stream per
// replicate, so both produce bit-identical batches for a given seed.
SampleBatch sample(const MaxLinearModel& model, std::size_t n,
                   std::uint64_t seed);
SampleBatch sample_serial(const MaxLinearModel& model, std::size_t n,
                          std::uint64_t seed);

inline constexpr std::size_t kMinExceedances = 200;
inline constexpr double kClusterRadius = 0.1;

struct EmpiricalConditional {
  DiscreteLaw law;      // exact atoms of the reference law, empirical masses
  double stray_mass = 0.0;
  std::size_t exceedances = 0;
  double threshold = 0.0;
};

// Ratio vectors (X_v / X_u) on {X_u > t} with t the exact unit-Frechet
// q-quantile, clustered to the nearest atom of the exact limit law.
EmpiricalConditional empirical_conditional(const SampleBatch& batch,
                                           const LimitLaw& exact, double q);

struct AngularCloud {
  std::vector<NodeId> labels;
  std::vector<std::vector<double>> points;  // on the unit simplex
  std::vector<double> weights;              // each t_hat / n
  double threshold = 0.0;                   // empirical radius quantile
  double total_mass() const;
};

// L1-norm exceedances normalized onto the simplex; the weights are scaled
// so that the total mass estimates l(1,...,1).
AngularCloud empirical_angular(const SampleBatch& batch, double radius_quantile);

// TV distance after assigning each empirical atom to its nearest exact atom
// in max-norm (within the cluster radius; farther atoms keep their mass).
double tv_to_law(const DiscreteLaw& empirical, const DiscreteLaw& exact,
                 double cluster_radius = kClusterRadius);

}  // namespace maxlin
