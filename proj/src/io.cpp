#include "pebblekit/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace pebblekit {

namespace {

using json = nlohmann::ordered_json;

json parse(const std::string& text, const char* what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string(what) + ": " + e.what());
  }
}

int require_int(const json& j, const std::string& where) {
  if (!j.is_number_integer()) {
    throw std::invalid_argument(where + ": expected an integer");
  }
  return j.get<int>();
}

const json& require_array(const json& j, const char* key, const char* what) {
  if (!j.is_object() || !j.contains(key)) {
    throw std::invalid_argument(std::string(what) + ": missing \"" + key +
                                "\"");
  }
  if (!j[key].is_array()) {
    throw std::invalid_argument(std::string(what) + ": \"" + key +
                                "\" must be an array");
  }
  return j[key];
}

}  // namespace

std::string save_graph(const Graph& g) {
  json j;
  j["vertex_count"] = g.vertex_count();
  json edges = json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
  j["edges"] = std::move(edges);
  if (g.has_names()) {
    json names = json::array();
    for (int v = 0; v < g.vertex_count(); ++v) names.push_back(g.vertex_name(v));
    j["names"] = std::move(names);
  }
  return j.dump(2) + "\n";
}

Graph load_graph(const std::string& text) {
  json j = parse(text, "graph");
  if (!j.is_object() || !j.contains("vertex_count")) {
    throw std::invalid_argument("graph: missing \"vertex_count\"");
  }
  int vc = require_int(j["vertex_count"], "graph: vertex_count");
  const json& edges = require_array(j, "edges", "graph");
  std::vector<Edge> es;
  es.reserve(edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const json& pair = edges[i];
    std::string where = "graph: edges[" + std::to_string(i) + "]";
    if (!pair.is_array() || pair.size() != 2) {
      throw std::invalid_argument(where + ": expected [u, v]");
    }
    es.push_back({require_int(pair[0], where), require_int(pair[1], where)});
  }
  std::vector<std::string> names;
  if (j.contains("names")) {
    const json& jn = require_array(j, "names", "graph");
    for (std::size_t i = 0; i < jn.size(); ++i) {
      if (!jn[i].is_string()) {
        throw std::invalid_argument("graph: names[" + std::to_string(i) +
                                    "]: expected a string");
      }
      names.push_back(jn[i].get<std::string>());
    }
  }
  try {
    return Graph(vc, std::move(es), std::move(names));
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument(std::string("graph: ") + e.what());
  }
}

std::string save_assignment(const VertexAssignment& a) {
  json j;
  j["assignment"] = a.values;
  return j.dump(2) + "\n";
}

VertexAssignment load_assignment(const std::string& text) {
  json j = parse(text, "labeling");
  const json& values = require_array(j, "assignment", "labeling");
  VertexAssignment a;
  a.values.reserve(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    a.values.push_back(
        require_int(values[i], "labeling: assignment[" + std::to_string(i) +
                                   "]"));
  }
  return a;
}

std::string save_distribution(const Distribution& d) {
  json j;
  j["counts"] = d.counts;
  return j.dump(2) + "\n";
}

Distribution load_distribution(const std::string& text) {
  json j = parse(text, "distribution");
  const json& counts = require_array(j, "counts", "distribution");
  Distribution d;
  d.counts.reserve(counts.size());
  for (std::size_t i = 0; i < counts.size(); ++i) {
    int c = require_int(counts[i], "distribution: counts[" +
                                       std::to_string(i) + "]");
    if (c < 0) {
      throw std::invalid_argument("distribution: counts[" +
                                  std::to_string(i) + "]: negative count");
    }
    d.counts.push_back(c);
  }
  return d;
}

std::string save_certificate(const std::vector<Move>& moves) {
  json j = json::array();
  for (const Move& m : moves) j.push_back({m.from, m.to});
  return j.dump(2) + "\n";
}

std::vector<Move> load_certificate(const std::string& text) {
  json j = parse(text, "certificate");
  if (!j.is_array()) {
    throw std::invalid_argument("certificate: expected an array of pairs");
  }
  std::vector<Move> moves;
  moves.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) {
    const json& pair = j[i];
    std::string where = "certificate: [" + std::to_string(i) + "]";
    if (!pair.is_array() || pair.size() != 2) {
      throw std::invalid_argument(where + ": expected [from, to]");
    }
    moves.push_back({require_int(pair[0], where), require_int(pair[1], where)});
  }
  return moves;
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::invalid_argument("cannot read " + path.string());
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text_file(const std::filesystem::path& path,
                     const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::invalid_argument("cannot write " + path.string());
  }
  out << content;
  if (!out) {
    throw std::invalid_argument("short write to " + path.string());
  }
}

}  // namespace pebblekit
