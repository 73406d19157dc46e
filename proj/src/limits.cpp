#include "maxlin/limits.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace maxlin {

namespace {

std::vector<NodeId> labels_without(const std::vector<NodeId>& nodes, NodeId u) {
  std::vector<NodeId> out;
  for (NodeId v : nodes)
    if (v != u) out.push_back(v);
  return out;
}

}  // namespace

LimitLaw direct_limit(const MaxLinearModel& model, NodeId u) {
  const TttGraph& g = model.graph();
  LimitLaw out;
  out.cond_node = u;
  out.law.labels = labels_without(g.nodes(), u);

  DiscreteLaw raw;
  raw.labels = out.law.labels;
  for (NodeId j : g.relatives(u).An) {
    double buj = model.coefficient(u, j);
    std::vector<double> atom;
    atom.reserve(raw.labels.size());
    for (NodeId v : raw.labels) atom.push_back(model.coefficient(v, j) / buj);
    raw.push(std::move(atom), buj);
  }
  out.law = canonicalized(raw, kLimitMergeDecimals);
  return out;
}

IncrementBlock increment_block(const MaxLinearModel& model, NodeId u,
                               const Tournament& tau) {
  const TttGraph& g = model.graph();
  IncrementBlock block;
  block.anchor = g.closest_tournament_node(u, tau);
  const auto& ts = g.tournaments();
  for (std::size_t t = 0; t < ts.size(); ++t)
    if (ts[t].nodes == tau.nodes) block.tournament_index = t;

  std::vector<NodeId> targets;
  for (NodeId j : tau.nodes)
    if (j != block.anchor) targets.push_back(j);
  std::sort(targets.begin(), targets.end());

  DiscreteLaw raw;
  raw.labels = targets;
  for (NodeId k : g.relatives(block.anchor).An) {
    double bwk = model.coefficient(block.anchor, k);
    std::vector<double> atom;
    atom.reserve(targets.size());
    for (NodeId j : targets) atom.push_back(model.coefficient(j, k) / bwk);
    raw.push(std::move(atom), bwk);
  }
  block.law = canonicalized(raw, kLimitMergeDecimals);
  return block;
}

LimitLaw factorized_limit(const MaxLinearModel& model, NodeId u,
                          std::size_t budget) {
  const TttGraph& g = model.graph();
  LimitLaw out;
  out.cond_node = u;
  out.law.labels = labels_without(g.nodes(), u);

  const std::size_t m = out.law.labels.size();
  if (m == 0) {
    out.law.push({}, 1.0);
    return out;
  }

  // E_u as a predecessor map: trail edges oriented away from u.
  std::map<NodeId, NodeId> pred;
  for (auto [w, j] : g.edges_away_from(u)) pred[j] = w;

  // One block per tournament, anchored at its closest node to u. Record,
  // for every non-anchor coordinate, where its increment lives.
  std::vector<IncrementBlock> blocks;
  std::map<NodeId, std::pair<std::size_t, std::size_t>> slot;  // j -> (block, coord)
  for (const auto& tau : g.tournaments()) {
    IncrementBlock block = increment_block(model, u, tau);
    for (std::size_t k = 0; k < block.law.labels.size(); ++k)
      slot[block.law.labels[k]] = {blocks.size(), k};
    blocks.push_back(std::move(block));
  }

  std::size_t combinations = 1;
  for (const auto& block : blocks) {
    if (block.law.support_size() == 0 ||
        combinations > budget / block.law.support_size())
      fail(errc::enumeration_budget_exceeded,
           "factorized enumeration exceeds " + std::to_string(budget) + " atoms");
    combinations *= block.law.support_size();
  }

  // Process coordinates so that pred[v] comes before v.
  std::vector<NodeId> order = out.law.labels;
  std::sort(order.begin(), order.end(), [&](NodeId a, NodeId b) {
    return g.shortest_trail(u, a).length() < g.shortest_trail(u, b).length();
  });

  DiscreteLaw raw;
  raw.labels = out.law.labels;
  std::vector<std::size_t> pick(blocks.size(), 0);
  std::map<NodeId, std::size_t> coord;
  for (std::size_t k = 0; k < out.law.labels.size(); ++k)
    coord[out.law.labels[k]] = k;

  for (std::size_t combo = 0; combo < combinations; ++combo) {
    std::size_t rest = combo;
    double mass = 1.0;
    for (std::size_t t = 0; t < blocks.size(); ++t) {
      pick[t] = rest % blocks[t].law.support_size();
      rest /= blocks[t].law.support_size();
      mass *= blocks[t].law.masses[pick[t]];
    }
    std::map<NodeId, double> value;
    value[u] = 1.0;
    for (NodeId v : order) {
      auto [bt, bc] = slot.at(v);
      double inc = blocks[bt].law.atoms[pick[bt]][bc];
      value[v] = value.at(pred.at(v)) * inc;
    }
    std::vector<double> atom(m);
    for (NodeId v : raw.labels) atom[coord[v]] = value[v];
    raw.push(std::move(atom), mass);
  }
  out.law = canonicalized(raw, kLimitMergeDecimals);
  return out;
}

LawComparison laws_equal(const DiscreteLaw& a, const DiscreteLaw& b, double tol) {
  double tv = total_variation(a, b, kLimitMergeDecimals);
  return {tv <= tol, tv};
}

namespace {

// c_{p(a,b)} with the conventions c_{p(a,a)} = 1 and 0 when unreachable.
double cpath(const MaxLinearModel& model, NodeId a, NodeId b) {
  return shortest_path_weight(model.graph(), model.theta(), a, b);
}

DiscreteLaw scalar_law(NodeId v, std::map<double, double> mass_at) {
  DiscreteLaw law;
  law.labels = {v};
  for (const auto& [value, mass] : mass_at)
    if (mass != 0.0) law.push({value}, mass);
  return law;
}

}  // namespace

DiscreteLaw marginal_limit(const MaxLinearModel& model, NodeId u, NodeId v) {
  if (u == v) fail(errc::invalid_argument, "marginal_limit requires u != v");
  const TttGraph& g = model.graph();
  Trail trail = g.shortest_trail(u, v);
  std::map<double, double> mass_at;

  switch (trail.shape) {
    case TrailShape::forward: {
      // Directed path u -> v; r is the second node.
      NodeId r = trail.nodes[1];
      const Tournament& tau = g.tournament_of_edge(u, r);
      if (tau.source() == u) {
        mass_at[cpath(model, u, v)] += 1.0;
      } else {
        double crv = cpath(model, r, v);
        for (NodeId j : g.relatives(u).An)
          mass_at[cpath(model, j, r) / cpath(model, j, u) * crv] +=
              model.coefficient(u, j);
      }
      break;
    }
    case TrailShape::backward: {
      // Directed path v -> u; r is the node after v on it.
      NodeId r = trail.nodes[trail.nodes.size() - 2];
      const Tournament& tau = g.tournament_of_edge(v, r);
      if (tau.source() == v) {
        double cvu = cpath(model, v, u);
        mass_at[1.0 / cvu] += cvu;
        mass_at[0.0] += 1.0 - cvu;
      } else {
        double cru = cpath(model, r, u);
        auto An_v = g.relatives(v).An;
        for (NodeId j : An_v)
          mass_at[cpath(model, j, v) / (cpath(model, j, r) * cru)] +=
              cru * model.coefficient(r, j);
        for (NodeId j : g.relatives(u).An)
          if (!std::binary_search(An_v.begin(), An_v.end(), j))
            mass_at[0.0] += model.coefficient(u, j);
      }
      break;
    }
    case TrailShape::apex: {
      // Trail composed of p(r, u) and p(r, v) with apex r.
      NodeId r = *trail.apex;
      std::size_t pos = 0;
      while (trail.nodes[pos] != r) ++pos;
      NodeId mnode = trail.nodes[pos - 1];  // towards u
      NodeId nnode = trail.nodes[pos + 1];  // towards v
      bool source_m = g.tournament_of_edge(r, mnode).source() == r;
      bool source_n = g.tournament_of_edge(r, nnode).source() == r;
      if (source_m && source_n) {
        double cru = cpath(model, r, u);
        mass_at[cpath(model, r, v) / cru] += cru;
        mass_at[0.0] += 1.0 - cru;
      } else if (source_m || source_n) {
        auto An_r = g.relatives(r).An;
        if (source_m) {
          double cru = cpath(model, r, u);
          double cnv = cpath(model, nnode, v);
          for (NodeId j : An_r)
            mass_at[cpath(model, j, nnode) * cnv / (cpath(model, j, r) * cru)] +=
                cru * model.coefficient(r, j);
        } else {
          double cmu = cpath(model, mnode, u);
          double crv = cpath(model, r, v);
          for (NodeId j : An_r)
            mass_at[cpath(model, j, r) * crv / (cpath(model, j, mnode) * cmu)] +=
                cmu * model.coefficient(mnode, j);
        }
        for (NodeId j : g.relatives(u).An)
          if (!std::binary_search(An_r.begin(), An_r.end(), j))
            mass_at[0.0] += model.coefficient(u, j);
      } else {
        fail(errc::no_applicable_case,
             "apex " + std::to_string(r) +
                 " is the source of neither adjacent tournament; the closed forms "
                 "require a unique source");
      }
      break;
    }
    case TrailShape::mixed:
      fail(errc::no_applicable_case,
           "trail between " + std::to_string(u) + " and " + std::to_string(v) +
               " matches no closed-form case; the graph has multiple sources");
  }
  return canonicalized(scalar_law(v, std::move(mass_at)), kLimitMergeDecimals);
}

bool is_global_markov(const TttGraph& g) { return g.has_unique_source(); }

}  // namespace maxlin
