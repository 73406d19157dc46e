#pragma once

#include <map>
#include <optional>
#include <string>

#include "maxlin/spectral.hpp"

namespace maxlin {

// Observed/latent node split.
struct LatentSpec {
  std::vector<NodeId> U;     // observed
  std::vector<NodeId> Ubar;  // latent

  static LatentSpec from_latent(const TttGraph& g, std::vector<NodeId> Ubar);
};

struct IdentifiabilityViolation {
  NodeId node = 0;
  bool fails_two_children = false;      // (I1)
  bool fails_tournament_source = false; // (I2)
};

struct IdentifiabilityReport {
  bool ok = false;
  std::vector<IdentifiabilityViolation> violations;
};

// Criterion: every latent node has at least two children and is the source
// of some tournament. Requires a unique source.
IdentifiabilityReport identifiability_check(const TttGraph& g,
                                            const std::vector<NodeId>& Ubar);

// Unique directed path from a latent node to the first observed node such
// that every node after the start has exactly one parent and all interior
// nodes are latent. Returned as the node sequence.
std::vector<NodeId> exit_path(const TttGraph& g, NodeId ubar,
                              const std::vector<NodeId>& Ubar);

// One ratio-test disambiguation of two atoms with equal support.
struct DisambiguationEvent {
  NodeId parent = 0;  // i
  NodeId child = 0;   // j, with pa(j) = {i}
  NodeId probe_u = 0; // u' coordinate used in the ratio
  NodeId probe_j = 0; // j' coordinate used in the ratio
  double margin = 0.0;
};

// Sub-matrix b_{U x V} with the atom-to-node assignment that produced it.
struct CoefficientTable {
  std::vector<NodeId> rows;  // U, sorted
  std::vector<NodeId> cols;  // V, sorted
  std::vector<std::vector<double>> b;  // b[row][col]
  std::map<std::size_t, NodeId> atom_of_node_inverse;  // atom index -> node
  std::vector<DisambiguationEvent> events;

  double at(NodeId v, NodeId i) const;
};

inline constexpr double kRatioMargin = 1e-10;

// Step 1: assign every mass-scaled atom of H to its generating node,
// resolving equal support patterns by the criticality ratio test.
CoefficientTable match_subatoms(const AngularMeasure& H, const TttGraph& g,
                                const std::vector<NodeId>& Ubar);

struct ReconstructionReport {
  EdgeWeights theta_hat;
  std::map<std::size_t, NodeId> atom_assignment;
  std::vector<DisambiguationEvent> diagnostics;
};

// Step 2: recover every edge weight from the coefficient table, cascading
// through latent chains; the result is validated into the parameter space.
ReconstructionReport recover_theta(const CoefficientTable& table,
                                   const TttGraph& g,
                                   const std::vector<NodeId>& Ubar);

struct WitnessResult {
  std::optional<EdgeWeights> theta_prime;
  double lambda = 1.0;
  double max_substdf_deviation = 0.0;
  std::size_t grid_points = 0;
  std::string diagnostic;
};

// For a node failing the identifiability criterion, produce an alternative
// parameter with the same sub-vector law (when one is constructible) plus a
// grid certificate; the single-tournament interior case is nonconstructive.
WitnessResult non_identifiability_witness(const MaxLinearModel& model, NodeId u,
                                          double lambda0 = 1.05,
                                          std::size_t grid_points = 100,
                                          std::uint64_t grid_seed = 20240501);

}  // namespace maxlin
