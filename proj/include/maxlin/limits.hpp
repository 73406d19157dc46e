#pragma once

#include "maxlin/discrete_law.hpp"
#include "maxlin/model.hpp"

namespace maxlin {

// Law of the conditional tail limit (X_v / X_u)_{v != u} given X_u large.
struct LimitLaw {
  NodeId cond_node = 0;
  DiscreteLaw law;  // coordinates V \ {u}, sorted by label
};

// Joint law of the multiplicative increments attached to one tournament:
// (M_{w,j})_j for the edges (w, j) of E_u inside the tournament, where w is
// the node of the tournament closest to u.
struct IncrementBlock {
  std::size_t tournament_index = 0;
  NodeId anchor = 0;
  DiscreteLaw law;  // coordinates: the affected tournament nodes j
};

inline constexpr std::size_t kDefaultEnumerationBudget = 10'000'000;
inline constexpr int kLimitMergeDecimals = 9;

// Exact limit law from the max-linear representation:
// sum_{j in An(u)} b_uj * delta((b_vj / b_uj)_{v != u}).
LimitLaw direct_limit(const MaxLinearModel& model, NodeId u);

IncrementBlock increment_block(const MaxLinearModel& model, NodeId u,
                               const Tournament& tau);

// Law of (prod_{e in t_u(u,v)} M_e)_{v != u} with mutually independent
// blocks, built by exact enumeration of block atom combinations.
LimitLaw factorized_limit(const MaxLinearModel& model, NodeId u,
                          std::size_t budget = kDefaultEnumerationBudget);

struct LawComparison {
  bool equal = false;
  double tv_distance = 0.0;
};

LawComparison laws_equal(const DiscreteLaw& a, const DiscreteLaw& b, double tol);

// Closed-form scalar law of the limit of X_v / X_u given X_u large,
// selected by the shape of the trail between u and v.
DiscreteLaw marginal_limit(const MaxLinearModel& model, NodeId u, NodeId v);

// Theorem-level predicate: the model satisfies the global Markov property
// with respect to the skeleton iff the ttt has a unique source.
bool is_global_markov(const TttGraph& g);

}  // namespace maxlin
