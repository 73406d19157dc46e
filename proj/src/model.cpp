#include "maxlin/model.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace maxlin {

namespace {

std::string edge_str(NodeId a, NodeId b) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

double product(const EdgeWeights& theta, const std::vector<DirectedEdge>& path) {
  double p = 1.0;
  for (const auto& e : path) p *= theta.at(e.from, e.to);
  return p;
}

}  // namespace

double EdgeWeights::at(NodeId from, NodeId to) const {
  auto it = weights_.find({from, to});
  if (it == weights_.end())
    fail(errc::unknown_node, "no weight for edge " + edge_str(from, to));
  return it->second;
}

double shortest_path_weight(const TttGraph& g, const EdgeWeights& theta,
                            NodeId i, NodeId v) {
  auto p = g.shortest_path(i, v);
  if (!p) return 0.0;
  double c = 1.0;
  for (const auto& e : p->edges) c *= theta.at(e.from, e.to);
  return c;
}

ValidatedTheta validate_theta(const TttGraph& g, const EdgeWeights& theta,
                              double eps_crit, std::size_t path_budget) {
  if (theta.size() != g.edges().size())
    fail(errc::invalid_argument,
         "weight count " + std::to_string(theta.size()) + " does not match edge count " +
             std::to_string(g.edges().size()));
  for (const auto& e : g.edges()) {
    if (!theta.contains(e.from, e.to))
      fail(errc::unknown_node, "missing weight for edge " + edge_str(e.from, e.to));
    double c = theta.at(e.from, e.to);
    if (!(c > 0.0) || !(c < 1.0))
      fail(errc::weight_out_of_range,
           "weight " + std::to_string(c) + " for edge " + edge_str(e.from, e.to) +
               " lies outside (0,1)");
  }

  // Criticality: the unique shortest path strictly dominates every
  // competing path, for every ancestor pair.
  for (NodeId v : g.nodes()) {
    for (NodeId i : g.relatives(v).an) {
      auto shortest = g.shortest_path(i, v);
      double c_short = product(theta, shortest->edges);
      for (const auto& path : g.all_paths(i, v, path_budget)) {
        if (path == shortest->edges) continue;
        double c_p = product(theta, path);
        if (std::fabs(c_p - c_short) <= eps_crit) {
          fail(errc::criticality_tie,
               "path products tie at " + std::to_string(c_short) + " for pair " +
                   edge_str(i, v));
        }
        if (c_p > c_short) {
          std::string competing;
          for (const auto& e : path) competing += edge_str(e.from, e.to);
          fail(errc::criticality_violated,
               "pair " + edge_str(i, v) + ": competing path " + competing +
                   " has product " + std::to_string(c_p) +
                   " >= " + std::to_string(c_short));
        }
      }
    }
  }

  // Positive diagonals via the recursion in topological order.
  std::map<NodeId, double> diag;
  for (NodeId v : g.topological_order()) {
    double s = 0.0;
    for (NodeId i : g.relatives(v).an)
      s += diag.at(i) * shortest_path_weight(g, theta, i, v);
    double cvv = 1.0 - s;
    if (!(cvv > 0.0))
      fail(errc::non_positive_diagonal,
           "c_vv = " + std::to_string(cvv) + " at node " + std::to_string(v));
    diag[v] = cvv;
  }

  return ValidatedTheta{theta};
}

MaxLinearModel::MaxLinearModel(TttGraph g, ValidatedTheta theta)
    : graph_(std::move(g)), theta_(std::move(theta)) {
  const auto& nodes = graph_.nodes();
  const std::size_t n = nodes.size();
  b_.assign(n * n, 0.0);
  auto idx = [&](NodeId v) {
    return static_cast<std::size_t>(
        std::lower_bound(nodes.begin(), nodes.end(), v) - nodes.begin());
  };
  for (NodeId v : graph_.topological_order()) {
    double s = 0.0;
    for (NodeId i : graph_.relatives(v).an) {
      double bvi = b_[idx(i) * n + idx(i)] *
                   shortest_path_weight(graph_, theta_.weights, i, v);
      b_[idx(v) * n + idx(i)] = bvi;
      s += bvi;
    }
    double cvv = 1.0 - s;
    if (!(cvv > 0.0))
      fail(errc::non_positive_diagonal,
           "c_vv = " + std::to_string(cvv) + " at node " + std::to_string(v));
    b_[idx(v) * n + idx(v)] = cvv;
  }
}

double MaxLinearModel::coefficient(NodeId v, NodeId i) const {
  const auto& nodes = graph_.nodes();
  auto iv = std::lower_bound(nodes.begin(), nodes.end(), v);
  auto ii = std::lower_bound(nodes.begin(), nodes.end(), i);
  if (iv == nodes.end() || *iv != v)
    fail(errc::unknown_node, "unknown node " + std::to_string(v));
  if (ii == nodes.end() || *ii != i)
    fail(errc::unknown_node, "unknown node " + std::to_string(i));
  const std::size_t n = nodes.size();
  return b_[static_cast<std::size_t>(iv - nodes.begin()) * n +
            static_cast<std::size_t>(ii - nodes.begin())];
}

std::span<const double> MaxLinearModel::row(NodeId v) const {
  const auto& nodes = graph_.nodes();
  auto iv = std::lower_bound(nodes.begin(), nodes.end(), v);
  if (iv == nodes.end() || *iv != v)
    fail(errc::unknown_node, "unknown node " + std::to_string(v));
  const std::size_t n = nodes.size();
  return {b_.data() + static_cast<std::size_t>(iv - nodes.begin()) * n, n};
}

double MaxLinearModel::stdf(std::span<const double> x) const {
  const std::size_t n = graph_.nodes().size();
  if (x.size() != n)
    fail(errc::dimension_mismatch, "stdf input must have one coordinate per node");
  for (double xv : x)
    if (xv < 0.0) fail(errc::negative_input, "stdf requires nonnegative input");
  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double m = 0.0;
    for (std::size_t v = 0; v < n; ++v) m = std::max(m, b_[v * n + i] * x[v]);
    total += m;
  }
  return total;
}

double MaxLinearModel::joint_cdf(std::span<const double> z) const {
  const std::size_t n = graph_.nodes().size();
  if (z.size() != n)
    fail(errc::dimension_mismatch, "joint_cdf input must have one coordinate per node");
  std::vector<double> inv(n);
  for (std::size_t v = 0; v < n; ++v) {
    if (!(z[v] > 0.0))
      fail(errc::non_positive_threshold, "joint_cdf requires strictly positive thresholds");
    inv[v] = std::isinf(z[v]) ? 0.0 : 1.0 / z[v];
  }
  return std::exp(-stdf(inv));
}

double bvv_via_tournament(const TttGraph& g, const ValidatedTheta& theta,
                          NodeId v) {
  if (!g.has_unique_source())
    fail(errc::not_unique_source, "bvv_via_tournament requires a unique source");
  auto pa = g.parents(v);
  if (pa.empty()) return 1.0;

  // With a unique source all parents of v share one tournament with v.
  const Tournament& tau = g.tournament_of_edge(pa.front(), v);
  const auto& order = tau.nodes;  // Harari order, source first
  const std::size_t d = order.size();

  // Forward substitution of (I + C) b = 1 with the source entry pinned to 1.
  std::vector<double> b(d, 1.0);
  for (std::size_t k = 1; k < d; ++k) {
    double s = 0.0;
    for (std::size_t j = 0; j < k; ++j)
      s += theta.weights.at(order[j], order[k]) * b[j];
    b[k] = 1.0 - s;
  }
  auto pos = std::find(order.begin(), order.end(), v);
  return b[static_cast<std::size_t>(pos - order.begin())];
}

EdgeWeights scale_witness(const MaxLinearModel& model, NodeId u, double lambda) {
  const TttGraph& g = model.graph();
  auto children = g.children(u);
  if (children.size() != 1)
    fail(errc::not_single_child,
         "node " + std::to_string(u) + " has " + std::to_string(children.size()) +
             " children, need exactly one");
  if (!(lambda > 0.0))
    fail(errc::invalid_argument, "lambda must be positive");
  NodeId w = children.front();

  EdgeWeights scaled = model.theta();
  for (NodeId j : g.parents(u)) scaled.set(j, u, lambda * model.theta().at(j, u));
  scaled.set(u, w, model.theta().at(u, w) / lambda);

  try {
    validate_theta(g, scaled);
  } catch (const Error& e) {
    fail(errc::leaves_parameter_space,
         std::string("scaled weights leave the parameter space: ") + e.what());
  }
  return scaled;
}

}  // namespace maxlin
