#include "maxlin/discrete_law.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

namespace maxlin {

double DiscreteLaw::total_mass() const {
  return std::accumulate(masses.begin(), masses.end(), 0.0);
}

void DiscreteLaw::push(std::vector<double> atom, double mass) {
  atoms.push_back(std::move(atom));
  masses.push_back(mass);
}

namespace {

std::vector<double> rounded(const std::vector<double>& atom, double scale) {
  std::vector<double> out(atom.size());
  for (std::size_t k = 0; k < atom.size(); ++k)
    out[k] = std::round(atom[k] * scale) / scale;
  return out;
}

}  // namespace

DiscreteLaw canonicalized(const DiscreteLaw& law, int decimals) {
  const double scale = std::pow(10.0, decimals);
  std::map<std::vector<double>, double> merged;
  for (std::size_t r = 0; r < law.atoms.size(); ++r)
    merged[rounded(law.atoms[r], scale)] += law.masses[r];
  DiscreteLaw out;
  out.labels = law.labels;
  for (const auto& [atom, mass] : merged)
    if (mass != 0.0) out.push(atom, mass);
  return out;
}

double total_variation(const DiscreteLaw& a, const DiscreteLaw& b, int decimals) {
  if (a.labels != b.labels)
    fail(errc::dimension_mismatch, "laws have different coordinate labels");
  const double scale = std::pow(10.0, decimals);
  std::map<std::vector<double>, double> diff;
  for (std::size_t r = 0; r < a.atoms.size(); ++r)
    diff[rounded(a.atoms[r], scale)] += a.masses[r];
  for (std::size_t r = 0; r < b.atoms.size(); ++r)
    diff[rounded(b.atoms[r], scale)] -= b.masses[r];
  double tv = 0.0;
  for (const auto& [atom, delta] : diff) tv += std::fabs(delta);
  return tv / 2.0;
}

}  // namespace maxlin
