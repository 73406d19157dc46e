#include "maxlin/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace maxlin {

AngularMeasure angular_measure(const MaxLinearModel& model) {
  const auto& nodes = model.graph().nodes();
  const std::size_t n = nodes.size();
  AngularMeasure H;
  H.law.labels = nodes;
  for (std::size_t i = 0; i < n; ++i) {
    double m = 0.0;
    for (std::size_t v = 0; v < n; ++v) m += model.row(nodes[v])[i];
    std::vector<double> atom(n);
    for (std::size_t v = 0; v < n; ++v) atom[v] = model.row(nodes[v])[i] / m;
    H.node_of_atom[H.law.atoms.size()] = nodes[i];
    H.law.push(std::move(atom), m);
  }
  return H;
}

AngularMeasure subvector_measure(const MaxLinearModel& model,
                                 const std::vector<NodeId>& U) {
  if (U.empty()) fail(errc::empty_u, "subvector_measure requires a nonempty node set");
  const auto& nodes = model.graph().nodes();
  std::vector<NodeId> labels = U;
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  for (NodeId v : labels)
    if (!model.graph().has_node(v))
      fail(errc::unknown_node, "unknown node " + std::to_string(v));

  DiscreteLaw raw;
  raw.labels = labels;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    double m = 0.0;
    for (NodeId v : labels) m += model.row(v)[i];
    if (m <= kMassDropTol) continue;
    std::vector<double> atom;
    atom.reserve(labels.size());
    for (NodeId v : labels) atom.push_back(model.row(v)[i] / m);
    raw.push(std::move(atom), m);
  }
  return AngularMeasure{canonicalized(raw, 12), {}};
}

std::vector<NodeId> support_pattern(std::span<const double> atom,
                                    const std::vector<NodeId>& labels,
                                    double tol) {
  if (atom.size() != labels.size())
    fail(errc::dimension_mismatch, "atom dimension does not match labels");
  std::vector<NodeId> out;
  for (std::size_t k = 0; k < atom.size(); ++k)
    if (atom[k] > tol) out.push_back(labels[k]);
  return out;
}

std::map<std::size_t, NodeId> match_atoms_full(const AngularMeasure& H,
                                               const TttGraph& g) {
  if (H.law.labels != g.nodes())
    fail(errc::dimension_mismatch, "measure labels do not cover the node set");
  std::map<std::vector<NodeId>, NodeId> by_pattern;
  for (NodeId i : g.nodes()) by_pattern[g.relatives(i).Desc] = i;

  std::map<std::size_t, NodeId> out;
  std::vector<bool> used(g.nodes().size(), false);
  for (std::size_t r = 0; r < H.law.atoms.size(); ++r) {
    auto pattern = support_pattern(H.law.atoms[r], H.law.labels);
    auto it = by_pattern.find(pattern);
    if (it == by_pattern.end())
      fail(errc::ambiguous_support,
           "atom " + std::to_string(r) + " matches no descendant pattern");
    std::size_t idx = static_cast<std::size_t>(
        std::lower_bound(g.nodes().begin(), g.nodes().end(), it->second) -
        g.nodes().begin());
    if (used[idx])
      fail(errc::ambiguous_support,
           "two atoms share the descendant pattern of node " + std::to_string(it->second));
    used[idx] = true;
    out[r] = it->second;
  }
  if (out.size() != g.nodes().size())
    fail(errc::ambiguous_support, "measure does not provide one atom per node");
  return out;
}

double stdf_from_measure(const AngularMeasure& H, std::span<const double> x) {
  if (x.size() != H.law.dimension())
    fail(errc::dimension_mismatch, "input dimension does not match the measure");
  double total = 0.0;
  for (std::size_t r = 0; r < H.law.atoms.size(); ++r) {
    double m = 0.0;
    for (std::size_t v = 0; v < x.size(); ++v)
      m = std::max(m, H.law.atoms[r][v] * x[v]);
    total += H.law.masses[r] * m;
  }
  return total;
}

}  // namespace maxlin
