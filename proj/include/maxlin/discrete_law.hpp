#pragma once

#include <span>
#include <vector>

#include "maxlin/graph.hpp"

namespace maxlin {

// Finitely supported measure on real vectors with labeled coordinates.
// Used for angular measures, conditional tail limits and increment laws.
struct DiscreteLaw {
  std::vector<NodeId> labels;
  std::vector<std::vector<double>> atoms;
  std::vector<double> masses;

  std::size_t dimension() const { return labels.size(); }
  std::size_t support_size() const { return atoms.size(); }
  double total_mass() const;

  void push(std::vector<double> atom, double mass);
};

// Rounds atom coordinates to `decimals` places, sorts lexicographically and
// merges the masses of equal keys. Zero-mass atoms are dropped.
DiscreteLaw canonicalized(const DiscreteLaw& law, int decimals = 12);

// Total variation distance over the union of (canonicalized) supports.
// Both laws must share coordinate labels.
double total_variation(const DiscreteLaw& a, const DiscreteLaw& b,
                       int decimals = 9);

}  // namespace maxlin
