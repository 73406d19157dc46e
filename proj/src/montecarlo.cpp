#include "maxlin/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "maxlin/rng.hpp"

namespace maxlin {

namespace {

// One replicate: draws Z per node from its own stream and folds the maxima.
// Uniforms are clamped away from {0,1} to keep -1/log(U) finite.
void fill_row(const MaxLinearModel& model, std::size_t n_nodes,
              std::uint64_t seed, std::size_t replicate, double* row) {
  SplitMix64 rng(mix_seed(seed, replicate));
  for (std::size_t v = 0; v < n_nodes; ++v) row[v] = 0.0;
  const auto& nodes = model.graph().nodes();
  for (std::size_t i = 0; i < n_nodes; ++i) {
    double u = rng.next_unit();
    u = std::max(u, std::nextafter(0.0, 1.0));
    u = std::min(u, std::nextafter(1.0, 0.0));
    double z = -1.0 / std::log(u);
    for (std::size_t v = 0; v < n_nodes; ++v) {
      double bz = model.row(nodes[v])[i] * z;
      if (bz > row[v]) row[v] = bz;
    }
  }
}

SampleBatch make_batch(const MaxLinearModel& model, std::size_t n,
                       std::uint64_t seed) {
  if (n < 1) fail(errc::invalid_argument, "sample size must be at least 1");
  SampleBatch batch;
  batch.n = n;
  batch.labels = model.graph().nodes();
  batch.seed = seed;
  batch.data.resize(n * batch.labels.size());
  return batch;
}

}  // namespace

SampleBatch sample(const MaxLinearModel& model, std::size_t n,
                   std::uint64_t seed) {
  SampleBatch batch = make_batch(model, n, seed);
  const std::size_t k = batch.labels.size();
#ifdef MAXLIN_HAVE_OPENMP
#pragma omp parallel for schedule(static)
#endif
  for (long long r = 0; r < static_cast<long long>(n); ++r)
    fill_row(model, k, seed, static_cast<std::size_t>(r),
             batch.data.data() + static_cast<std::size_t>(r) * k);
  return batch;
}

SampleBatch sample_serial(const MaxLinearModel& model, std::size_t n,
                          std::uint64_t seed) {
  SampleBatch batch = make_batch(model, n, seed);
  const std::size_t k = batch.labels.size();
  for (std::size_t r = 0; r < n; ++r)
    fill_row(model, k, seed, r, batch.data.data() + r * k);
  return batch;
}

EmpiricalConditional empirical_conditional(const SampleBatch& batch,
                                           const LimitLaw& exact, double q) {
  if (batch.n == 0) fail(errc::invalid_argument, "empty batch");
  if (!(q > 0.0) || !(q < 1.0))
    fail(errc::invalid_argument, "quantile must lie in (0,1)");
  auto cu = std::find(batch.labels.begin(), batch.labels.end(), exact.cond_node);
  if (cu == batch.labels.end())
    fail(errc::unknown_node, "conditioning node is not in the batch");
  const std::size_t iu = static_cast<std::size_t>(cu - batch.labels.begin());

  EmpiricalConditional out;
  out.threshold = -1.0 / std::log(q);
  out.law.labels = exact.law.labels;
  out.law.atoms = exact.law.atoms;
  out.law.masses.assign(exact.law.atoms.size(), 0.0);

  std::vector<std::size_t> ratio_cols;
  for (NodeId v : exact.law.labels) {
    auto it = std::find(batch.labels.begin(), batch.labels.end(), v);
    if (it == batch.labels.end())
      fail(errc::dimension_mismatch, "exact law mentions a node missing from the batch");
    ratio_cols.push_back(static_cast<std::size_t>(it - batch.labels.begin()));
  }

  std::size_t stray = 0;
  std::vector<std::size_t> counts(exact.law.atoms.size(), 0);
  std::vector<double> ratio(ratio_cols.size());
  for (std::size_t r = 0; r < batch.n; ++r) {
    double xu = batch.at(r, iu);
    if (!(xu > out.threshold)) continue;
    ++out.exceedances;
    for (std::size_t c = 0; c < ratio_cols.size(); ++c)
      ratio[c] = batch.at(r, ratio_cols[c]) / xu;
    std::size_t best = 0;
    double best_dist = std::numeric_limits<double>::infinity();
    for (std::size_t a = 0; a < exact.law.atoms.size(); ++a) {
      double d = 0.0;
      for (std::size_t c = 0; c < ratio.size(); ++c)
        d = std::max(d, std::fabs(ratio[c] - exact.law.atoms[a][c]));
      if (d < best_dist) {
        best_dist = d;
        best = a;
      }
    }
    if (best_dist <= kClusterRadius)
      ++counts[best];
    else
      ++stray;
  }
  if (out.exceedances < kMinExceedances)
    fail(errc::too_few_exceedances,
         std::to_string(out.exceedances) + " exceedances above the threshold; need " +
             std::to_string(kMinExceedances));
  for (std::size_t a = 0; a < counts.size(); ++a)
    out.law.masses[a] =
        static_cast<double>(counts[a]) / static_cast<double>(out.exceedances);
  out.stray_mass =
      static_cast<double>(stray) / static_cast<double>(out.exceedances);
  return out;
}

double AngularCloud::total_mass() const {
  return std::accumulate(weights.begin(), weights.end(), 0.0);
}

AngularCloud empirical_angular(const SampleBatch& batch, double radius_quantile) {
  if (batch.n == 0) fail(errc::invalid_argument, "empty batch");
  if (!(radius_quantile > 0.0) || !(radius_quantile < 1.0))
    fail(errc::invalid_argument, "radius quantile must lie in (0,1)");
  const std::size_t k = batch.labels.size();

  std::vector<double> radius(batch.n);
  for (std::size_t r = 0; r < batch.n; ++r) {
    double s = 0.0;
    for (std::size_t c = 0; c < k; ++c) s += batch.at(r, c);
    radius[r] = s;
  }
  std::vector<double> sorted = radius;
  std::size_t pos = static_cast<std::size_t>(radius_quantile *
                                             static_cast<double>(batch.n));
  pos = std::min(pos, batch.n - 1);
  std::nth_element(sorted.begin(), sorted.begin() + pos, sorted.end());
  const double threshold = sorted[pos];

  AngularCloud cloud;
  cloud.labels = batch.labels;
  cloud.threshold = threshold;
  const double weight = threshold / static_cast<double>(batch.n);
  for (std::size_t r = 0; r < batch.n; ++r) {
    if (!(radius[r] > threshold)) continue;
    std::vector<double> point(k);
    for (std::size_t c = 0; c < k; ++c) point[c] = batch.at(r, c) / radius[r];
    cloud.points.push_back(std::move(point));
    cloud.weights.push_back(weight);
  }
  if (cloud.points.size() < kMinExceedances)
    fail(errc::too_few_exceedances,
         std::to_string(cloud.points.size()) + " radius exceedances; need " +
             std::to_string(kMinExceedances));
  return cloud;
}

double tv_to_law(const DiscreteLaw& empirical, const DiscreteLaw& exact,
                 double cluster_radius) {
  if (empirical.labels != exact.labels)
    fail(errc::dimension_mismatch, "laws have different coordinate labels");

  DiscreteLaw assigned;
  assigned.labels = exact.labels;
  assigned.atoms = exact.atoms;
  assigned.masses.assign(exact.atoms.size(), 0.0);
  for (std::size_t r = 0; r < empirical.atoms.size(); ++r) {
    std::size_t best = 0;
    double best_dist = std::numeric_limits<double>::infinity();
    for (std::size_t a = 0; a < exact.atoms.size(); ++a) {
      double d = 0.0;
      for (std::size_t c = 0; c < exact.labels.size(); ++c)
        d = std::max(d, std::fabs(empirical.atoms[r][c] - exact.atoms[a][c]));
      if (d < best_dist || (d == best_dist && exact.atoms[a] < exact.atoms[best])) {
        best_dist = d;
        best = a;
      }
    }
    if (best_dist <= cluster_radius)
      assigned.masses[best] += empirical.masses[r];
    else
      assigned.push(empirical.atoms[r], empirical.masses[r]);
  }
  return total_variation(assigned, exact, kLimitMergeDecimals);
}

}  // namespace maxlin
