#pragma once

#include <map>
#include <span>

#include "maxlin/discrete_law.hpp"
#include "maxlin/model.hpp"

namespace maxlin {

// Discrete angular measure on the unit simplex over an index set U.
// node_of_atom maps atom index -> generating node, when known.
struct AngularMeasure {
  DiscreteLaw law;
  std::map<std::size_t, NodeId> node_of_atom;
};

inline constexpr double kSupportZeroTol = 1e-10;
inline constexpr double kMassDropTol = 1e-12;

// H_theta: |V| atoms a_i = (b_vi / m_i)_v with masses m_i = sum_v b_vi.
// All atoms are distinct and matched to their node.
AngularMeasure angular_measure(const MaxLinearModel& model);

// H_{theta,U}: zero-mass indices dropped, coinciding atoms merged.
// Atom-node resolution is the identification layer's job.
AngularMeasure subvector_measure(const MaxLinearModel& model,
                                 const std::vector<NodeId>& U);

// Labels of the strictly positive coordinates (tolerance-thresholded).
std::vector<NodeId> support_pattern(std::span<const double> atom,
                                    const std::vector<NodeId>& labels,
                                    double tol = kSupportZeroTol);

// Bijection atom index -> node via the descendant support patterns.
// Valid for measures on U = V.
std::map<std::size_t, NodeId> match_atoms_full(const AngularMeasure& H,
                                               const TttGraph& g);

// l(x) = sum_r mu_r max_v omega_{r,v} x_v; x indexed like H.law.labels.
double stdf_from_measure(const AngularMeasure& H, std::span<const double> x);

}  // namespace maxlin
