#pragma once

#include <iosfwd>
#include <string>

#include "maxlin/discrete_law.hpp"
#include "maxlin/model.hpp"

namespace maxlin {

// Graph JSON: {"nodes":[1,2,...],"edges":[{"from":1,"to":2},...]}
TttGraph read_graph_json(const std::string& path);
TttGraph parse_graph_json(const std::string& text);

// Weights JSON: {"weights":[{"from":1,"to":2,"c":0.5},...]}
EdgeWeights read_weights_json(const std::string& path);
EdgeWeights parse_weights_json(const std::string& text);

std::string weights_to_json(const EdgeWeights& theta);

// Comma-separated node list, e.g. "1,3,7".
std::vector<NodeId> parse_node_list(const std::string& text);

// Law CSV: header = node labels + "mass", one row per atom, 17 significant
// digits so values round-trip.
void write_law_csv(std::ostream& os, const DiscreteLaw& law);
DiscreteLaw read_law_csv(std::istream& is);

std::string format_double(double x);

}  // namespace maxlin
