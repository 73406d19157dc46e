#include "maxlin/io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace maxlin {

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(errc::invalid_argument, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

nlohmann::json parse(const std::string& text) {
  auto j = nlohmann::json::parse(text, nullptr, false);
  if (j.is_discarded()) fail(errc::invalid_argument, "malformed JSON");
  return j;
}

}  // namespace

TttGraph parse_graph_json(const std::string& text) {
  auto j = parse(text);
  if (!j.contains("nodes") || !j.contains("edges"))
    fail(errc::invalid_argument, "graph JSON needs \"nodes\" and \"edges\"");
  std::vector<NodeId> nodes;
  for (const auto& n : j["nodes"]) nodes.push_back(n.get<NodeId>());
  std::vector<DirectedEdge> edges;
  for (const auto& e : j["edges"])
    edges.push_back({e.at("from").get<NodeId>(), e.at("to").get<NodeId>()});
  return TttGraph::build(std::move(nodes), std::move(edges));
}

TttGraph read_graph_json(const std::string& path) {
  return parse_graph_json(slurp(path));
}

EdgeWeights parse_weights_json(const std::string& text) {
  auto j = parse(text);
  if (!j.contains("weights"))
    fail(errc::invalid_argument, "weights JSON needs \"weights\"");
  EdgeWeights theta;
  for (const auto& w : j["weights"])
    theta.set(w.at("from").get<NodeId>(), w.at("to").get<NodeId>(),
              w.at("c").get<double>());
  return theta;
}

EdgeWeights read_weights_json(const std::string& path) {
  return parse_weights_json(slurp(path));
}

std::string weights_to_json(const EdgeWeights& theta) {
  nlohmann::json j;
  j["weights"] = nlohmann::json::array();
  for (const auto& [edge, c] : theta.entries())
    j["weights"].push_back({{"from", edge.first}, {"to", edge.second}, {"c", c}});
  return j.dump(2);
}

std::vector<NodeId> parse_node_list(const std::string& text) {
  std::vector<NodeId> out;
  std::string token;
  std::istringstream ss(text);
  while (std::getline(ss, token, ',')) {
    if (token.empty()) continue;
    try {
      out.push_back(std::stoi(token));
    } catch (const std::exception&) {
      fail(errc::invalid_argument, "bad node label '" + token + "'");
    }
  }
  return out;
}

std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void write_law_csv(std::ostream& os, const DiscreteLaw& law) {
  for (NodeId v : law.labels) os << v << ',';
  os << "mass\n";
  for (std::size_t r = 0; r < law.atoms.size(); ++r) {
    for (double c : law.atoms[r]) os << format_double(c) << ',';
    os << format_double(law.masses[r]) << '\n';
  }
}

DiscreteLaw read_law_csv(std::istream& is) {
  DiscreteLaw law;
  std::string line;
  if (!std::getline(is, line))
    fail(errc::invalid_argument, "empty law CSV");
  {
    std::istringstream header(line);
    std::string cell;
    std::vector<std::string> cells;
    while (std::getline(header, cell, ',')) cells.push_back(cell);
    if (cells.empty() || cells.back() != "mass")
      fail(errc::invalid_argument, "law CSV header must end with 'mass'");
    for (std::size_t k = 0; k + 1 < cells.size(); ++k)
      law.labels.push_back(std::stoi(cells[k]));
  }
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::istringstream row(line);
    std::string cell;
    std::vector<double> values;
    while (std::getline(row, cell, ',')) values.push_back(std::stod(cell));
    if (values.size() != law.labels.size() + 1)
      fail(errc::invalid_argument, "law CSV row has wrong arity");
    double mass = values.back();
    values.pop_back();
    law.push(std::move(values), mass);
  }
  return law;
}

}  // namespace maxlin
