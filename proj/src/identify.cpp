#include "maxlin/identify.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>

#include "maxlin/rng.hpp"

namespace maxlin {

namespace {

std::string node_str(NodeId v) { return std::to_string(v); }

bool is_in(const std::vector<NodeId>& sorted, NodeId v) {
  return std::binary_search(sorted.begin(), sorted.end(), v);
}

}  // namespace

LatentSpec LatentSpec::from_latent(const TttGraph& g, std::vector<NodeId> Ubar) {
  std::sort(Ubar.begin(), Ubar.end());
  Ubar.erase(std::unique(Ubar.begin(), Ubar.end()), Ubar.end());
  for (NodeId v : Ubar)
    if (!g.has_node(v)) fail(errc::unknown_node, "unknown node " + node_str(v));
  LatentSpec spec;
  spec.Ubar = std::move(Ubar);
  for (NodeId v : g.nodes())
    if (!is_in(spec.Ubar, v)) spec.U.push_back(v);
  if (spec.U.empty())
    fail(errc::empty_u, "every node is latent; nothing is observed");
  return spec;
}

IdentifiabilityReport identifiability_check(const TttGraph& g,
                                            const std::vector<NodeId>& Ubar) {
  if (!g.has_unique_source())
    fail(errc::not_unique_source, "the identifiability criterion requires a unique source");
  LatentSpec spec = LatentSpec::from_latent(g, Ubar);

  IdentifiabilityReport report;
  report.ok = true;
  for (NodeId u : spec.Ubar) {
    IdentifiabilityViolation v;
    v.node = u;
    v.fails_two_children = g.children(u).size() < 2;
    v.fails_tournament_source = !g.is_tournament_source(u);
    if (v.fails_two_children || v.fails_tournament_source) {
      report.ok = false;
      report.violations.push_back(v);
    }
  }
  return report;
}

std::vector<NodeId> exit_path(const TttGraph& g, NodeId ubar,
                              const std::vector<NodeId>& Ubar) {
  LatentSpec spec = LatentSpec::from_latent(g, Ubar);
  if (!is_in(spec.Ubar, ubar))
    fail(errc::invalid_argument, "exit_path starts at a latent node");

  std::vector<NodeId> path{ubar};
  NodeId current = ubar;
  for (std::size_t guard = 0; guard <= g.size(); ++guard) {
    // Children whose only parent is the current node; these exist in every
    // tournament the current node is the source of.
    std::vector<NodeId> observed, latent;
    for (NodeId c : g.children(current)) {
      auto pa = g.parents(c);
      if (pa.size() == 1 && pa.front() == current) {
        (is_in(spec.U, c) ? observed : latent).push_back(c);
      }
    }
    if (!observed.empty()) {
      path.push_back(observed.front());
      return path;
    }
    if (latent.empty())
      fail(errc::no_exit_path,
           "node " + node_str(current) + " has no single-parent child; "
           "the identifiability criterion is violated");
    path.push_back(latent.front());
    current = latent.front();
  }
  fail(errc::no_exit_path, "exit path search did not terminate");
}

double CoefficientTable::at(NodeId v, NodeId i) const {
  auto rv = std::lower_bound(rows.begin(), rows.end(), v);
  auto ci = std::lower_bound(cols.begin(), cols.end(), i);
  if (rv == rows.end() || *rv != v)
    fail(errc::unknown_node, "node " + node_str(v) + " is not observed");
  if (ci == cols.end() || *ci != i)
    fail(errc::unknown_node, "unknown node " + node_str(i));
  return b[static_cast<std::size_t>(rv - rows.begin())]
          [static_cast<std::size_t>(ci - cols.begin())];
}

CoefficientTable match_subatoms(const AngularMeasure& H, const TttGraph& g,
                                const std::vector<NodeId>& Ubar) {
  LatentSpec spec = LatentSpec::from_latent(g, Ubar);
  if (H.law.labels != spec.U)
    fail(errc::dimension_mismatch, "measure coordinates do not match the observed set");
  const std::size_t n = g.size();
  if (H.law.support_size() != n)
    fail(errc::atom_count_mismatch,
         "expected " + std::to_string(n) + " atoms, got " +
             std::to_string(H.law.support_size()));

  // Group nodes and atoms by support pattern Desc(i) ∩ U.
  std::map<std::vector<NodeId>, std::vector<NodeId>> nodes_by_pattern;
  for (NodeId i : g.nodes()) {
    std::vector<NodeId> pattern;
    for (NodeId v : g.relatives(i).Desc)
      if (is_in(spec.U, v)) pattern.push_back(v);
    nodes_by_pattern[pattern].push_back(i);
  }
  std::map<std::vector<NodeId>, std::vector<std::size_t>> atoms_by_pattern;
  for (std::size_t r = 0; r < n; ++r)
    atoms_by_pattern[support_pattern(H.law.atoms[r], H.law.labels)].push_back(r);

  CoefficientTable table;
  table.rows = spec.U;
  table.cols = g.nodes();

  // beta_r = mu_r * omega_r, the mass-scaled coefficient vectors.
  auto beta = [&](std::size_t r, NodeId v) {
    auto pos = std::lower_bound(spec.U.begin(), spec.U.end(), v);
    return H.law.masses[r] *
           H.law.atoms[r][static_cast<std::size_t>(pos - spec.U.begin())];
  };

  std::map<NodeId, std::size_t> atom_of_node;
  for (const auto& [pattern, group] : nodes_by_pattern) {
    auto it = atoms_by_pattern.find(pattern);
    if (it == atoms_by_pattern.end() || it->second.size() != group.size())
      fail(errc::atom_count_mismatch,
           "support patterns of the measure do not match the graph");
    const auto& atom_group = it->second;
    if (group.size() == 1) {
      atom_of_node[group.front()] = atom_group.front();
      continue;
    }
    if (group.size() != 2)
      fail(errc::atom_count_mismatch,
           std::to_string(group.size()) +
               " nodes share one support pattern; at most two are possible "
               "under the identifiability criterion");

    // Exactly the situation of the descendant-pattern lemma: i is the unique
    // parent of j, both share a child, and the pattern has two entries.
    NodeId i = group[0], j = group[1];
    if (g.reaches(j, i)) std::swap(i, j);
    auto pa_j = g.parents(j);
    if (!is_in(spec.Ubar, i) || pa_j.size() != 1 || pa_j.front() != i ||
        pattern.size() < 2)
      fail(errc::atom_count_mismatch,
           "nodes " + node_str(i) + "," + node_str(j) +
               " share a support pattern without the parent-child structure "
               "the criterion guarantees");
    std::vector<NodeId> common;
    auto ch_i = g.children(i);
    for (NodeId c : g.children(j))
      if (std::find(ch_i.begin(), ch_i.end(), c) != ch_i.end()) common.push_back(c);
    if (common.empty())
      fail(errc::atom_count_mismatch,
           "nodes " + node_str(i) + "," + node_str(j) + " have no common child");
    NodeId u = common.front();

    NodeId probe_j = is_in(spec.U, j) ? j : exit_path(g, j, spec.Ubar).back();
    NodeId probe_u = is_in(spec.U, u) ? u : exit_path(g, u, spec.Ubar).back();

    std::size_t r0 = atom_group[0], r1 = atom_group[1];
    double ratio0 = beta(r0, probe_u) / beta(r0, probe_j);
    double ratio1 = beta(r1, probe_u) / beta(r1, probe_j);
    double margin = std::fabs(ratio0 - ratio1);
    if (margin <= kRatioMargin)
      fail(errc::unresolvable_tie,
           "ratio test margin " + std::to_string(margin) + " for nodes " +
               node_str(i) + "," + node_str(j) + " is inconclusive");
    // The parent's ratio is strictly larger (criticality).
    if (ratio0 > ratio1) {
      atom_of_node[i] = r0;
      atom_of_node[j] = r1;
    } else {
      atom_of_node[i] = r1;
      atom_of_node[j] = r0;
    }
    table.events.push_back({i, j, probe_u, probe_j, margin});
  }

  table.b.assign(spec.U.size(), std::vector<double>(g.size(), 0.0));
  for (const auto& [node, r] : atom_of_node) {
    auto col = static_cast<std::size_t>(
        std::lower_bound(g.nodes().begin(), g.nodes().end(), node) -
        g.nodes().begin());
    for (std::size_t row = 0; row < spec.U.size(); ++row)
      table.b[row][col] = beta(r, spec.U[row]);
    table.atom_of_node_inverse[r] = node;
  }
  return table;
}

namespace {

constexpr double kCrossRouteTol = 1e-7;

class WeightAccumulator {
 public:
  void put(NodeId from, NodeId to, double value) {
    if (!(value > 0.0) || !(value < 1.0))
      fail(errc::inconsistent_table,
           "recovered weight " + std::to_string(value) + " for edge (" +
               node_str(from) + "," + node_str(to) + ") lies outside (0,1)");
    auto [it, inserted] = values_.insert({{from, to}, value});
    if (!inserted && std::fabs(it->second - value) > kCrossRouteTol)
      fail(errc::inconsistent_table,
           "edge (" + node_str(from) + "," + node_str(to) +
               ") recovered twice with conflicting values");
  }

  EdgeWeights weights() const {
    EdgeWeights w;
    for (const auto& [edge, value] : values_) w.set(edge.first, edge.second, value);
    return w;
  }

 private:
  std::map<std::pair<NodeId, NodeId>, double> values_;
};

// Recovers the consecutive edge weights along an exit path [v1..vn] (vn
// observed, every node after v1 single-parent) from the row of vn:
//   b_{vn,v_t} = (prod_{s>t} e_s) (1 - e_t).
std::vector<double> cascade(const CoefficientTable& table,
                            const std::vector<NodeId>& path) {
  const std::size_t n = path.size();
  std::vector<double> e(n, 0.0);  // e[t] = c_{path[t-1], path[t]}
  if (n < 2) return e;
  NodeId vn = path.back();
  e[n - 1] = 1.0 - table.at(vn, vn);
  double suffix = e[n - 1];
  for (std::size_t t = n - 2; t >= 1; --t) {
    e[t] = 1.0 - table.at(vn, path[t]) / suffix;
    suffix *= e[t];
  }
  return e;
}

}  // namespace

ReconstructionReport recover_theta(const CoefficientTable& table,
                                   const TttGraph& g,
                                   const std::vector<NodeId>& Ubar) {
  LatentSpec spec = LatentSpec::from_latent(g, Ubar);
  if (table.rows != spec.U)
    fail(errc::dimension_mismatch, "table rows do not match the observed set");

  WeightAccumulator acc;

  // Adjacent observed pairs: c_iv = b_vi / b_ii.
  for (const auto& edge : g.edges()) {
    if (is_in(spec.U, edge.from) && is_in(spec.U, edge.to))
      acc.put(edge.from, edge.to,
              table.at(edge.to, edge.from) / table.at(edge.from, edge.from));
  }

  // Observed parent with a latent child: cascade down the child's exit path.
  for (NodeId i : spec.U) {
    for (NodeId v : g.children(i)) {
      if (!is_in(spec.Ubar, v)) continue;
      auto path = exit_path(g, v, spec.Ubar);
      auto e = cascade(table, path);
      double prod = 1.0;
      for (std::size_t t = 1; t < path.size(); ++t) {
        acc.put(path[t - 1], path[t], e[t]);
        prod *= e[t];
      }
      NodeId vn = path.back();
      acc.put(i, v, table.at(vn, i) / (table.at(i, i) * prod));
    }
  }

  // Latent nodes, in topological order: first the single-parent chain fixes
  // the primary child weight and b_ii, then the remaining children follow.
  for (NodeId i : g.topological_order()) {
    if (!is_in(spec.Ubar, i)) continue;
    auto path = exit_path(g, i, spec.Ubar);  // [i, v1, ..., vn]
    std::vector<NodeId> sub(path.begin() + 1, path.end());
    auto e = cascade(table, sub);
    double prod = 1.0;
    for (std::size_t t = 1; t < sub.size(); ++t) {
      acc.put(sub[t - 1], sub[t], e[t]);
      prod *= e[t];
    }
    NodeId vn = sub.back();
    NodeId v1 = sub.front();
    double c_iv1 = sub.size() == 1 ? 1.0 - table.at(vn, vn)
                                   : 1.0 - table.at(vn, v1) / prod;
    acc.put(i, v1, c_iv1);
    double b_ii = table.at(vn, i) / (c_iv1 * prod);
    if (!(b_ii > 0.0) || !(b_ii <= 1.0))
      fail(errc::inconsistent_table,
           "recovered diagonal " + std::to_string(b_ii) + " at latent node " +
               node_str(i));

    for (NodeId vbar : g.children(i)) {
      if (vbar == v1) continue;
      if (is_in(spec.U, vbar)) {
        acc.put(i, vbar, table.at(vbar, i) / b_ii);
      } else {
        auto pbar = exit_path(g, vbar, spec.Ubar);
        auto ebar = cascade(table, pbar);
        double prodbar = 1.0;
        for (std::size_t t = 1; t < pbar.size(); ++t) {
          acc.put(pbar[t - 1], pbar[t], ebar[t]);
          prodbar *= ebar[t];
        }
        acc.put(i, vbar, table.at(pbar.back(), i) / (b_ii * prodbar));
      }
    }
  }

  EdgeWeights theta_hat = acc.weights();
  if (theta_hat.size() != g.edges().size())
    fail(errc::inconsistent_table,
         "reconstruction covered " + std::to_string(theta_hat.size()) + " of " +
             std::to_string(g.edges().size()) + " edges");
  try {
    validate_theta(g, theta_hat);
  } catch (const Error& e) {
    fail(errc::inconsistent_table,
         std::string("recovered weights fail validation: ") + e.what());
  }

  ReconstructionReport report;
  report.theta_hat = std::move(theta_hat);
  report.atom_assignment = table.atom_of_node_inverse;
  report.diagnostics = table.events;
  return report;
}

WitnessResult non_identifiability_witness(const MaxLinearModel& model, NodeId u,
                                          double lambda0,
                                          std::size_t grid_points,
                                          std::uint64_t grid_seed) {
  const TttGraph& g = model.graph();
  auto report = identifiability_check(g, {u});
  if (report.ok)
    fail(errc::criterion_satisfied,
         "node " + node_str(u) + " satisfies both identifiability conditions");

  WitnessResult result;
  if (!g.is_tournament_source(u)) {
    // Interior of a tournament. The non-identifiability argument is an
    // invariance-of-domain one and produces no explicit alternative.
    result.diagnostic =
        "node " + node_str(u) +
        " is interior to a tournament; an alternative parameter exists but "
        "the argument is nonconstructive";
    return result;
  }

  // u is the source of a 2-node tournament with single child w: rescale the
  // weights around u, shrinking lambda toward 1 until the result validates.
  double lambda = lambda0;
  EdgeWeights scaled;
  for (int attempt = 0;; ++attempt) {
    try {
      scaled = scale_witness(model, u, lambda);
      break;
    } catch (const Error& e) {
      if (e.code() != errc::leaves_parameter_space || attempt > 80) throw;
      lambda = 1.0 + (lambda - 1.0) / 2.0;
      if (lambda == 1.0)
        fail(errc::leaves_parameter_space,
             "no lambda != 1 keeps the scaled weights in the parameter space");
    }
  }

  // Grid certificate: the stdf restricted to V \ {u} must be unchanged.
  MaxLinearModel other(g, validate_theta(g, scaled));
  const std::size_t n = g.nodes().size();
  std::size_t iu = static_cast<std::size_t>(
      std::lower_bound(g.nodes().begin(), g.nodes().end(), u) - g.nodes().begin());
  SplitMix64 rng(grid_seed);
  double worst = 0.0;
  for (std::size_t p = 0; p < grid_points; ++p) {
    std::vector<double> x(n);
    for (std::size_t k = 0; k < n; ++k) x[k] = 2.0 * rng.next_unit();
    x[iu] = 0.0;
    worst = std::max(worst, std::fabs(model.stdf(x) - other.stdf(x)));
  }

  result.theta_prime = std::move(scaled);
  result.lambda = lambda;
  result.max_substdf_deviation = worst;
  result.grid_points = grid_points;
  return result;
}

}  // namespace maxlin
