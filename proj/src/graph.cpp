#include "pebblekit/graph.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <string>

namespace pebblekit {

namespace {

std::string pair_str(int u, int v) {
  return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

}  // namespace

Graph::Graph(int vertex_count, std::vector<Edge> edges,
             std::vector<std::string> names)
    : vertex_count_(vertex_count),
      edges_(std::move(edges)),
      names_(std::move(names)) {
  if (vertex_count_ < 1) {
    throw std::invalid_argument("graph needs at least one vertex");
  }
  if (!names_.empty() && static_cast<int>(names_.size()) != vertex_count_) {
    throw std::invalid_argument(
        "names must be empty or give one name per vertex");
  }
  for (Edge& e : edges_) {
    if (e.u == e.v) {
      throw std::invalid_argument("loop edge " + pair_str(e.u, e.v));
    }
    if (e.u < 0 || e.v < 0 || e.u >= vertex_count_ || e.v >= vertex_count_) {
      throw std::invalid_argument("edge " + pair_str(e.u, e.v) +
                                  " has an endpoint outside 0.." +
                                  std::to_string(vertex_count_ - 1));
    }
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges_.begin(), edges_.end(),
            [](const Edge& a, const Edge& b) {
              return a.u != b.u ? a.u < b.u : a.v < b.v;
            });
  for (std::size_t i = 1; i < edges_.size(); ++i) {
    if (edges_[i] == edges_[i - 1]) {
      throw std::invalid_argument("duplicate edge " +
                                  pair_str(edges_[i].u, edges_[i].v));
    }
  }

  // incidence lists, then line-graph adjacency
  std::vector<std::vector<EdgeId>> at_vertex(vertex_count_);
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    at_vertex[edges_[i].u].push_back(static_cast<EdgeId>(i));
    at_vertex[edges_[i].v].push_back(static_cast<EdgeId>(i));
  }
  line_neighbors_.resize(edges_.size());
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    auto& nb = line_neighbors_[i];
    for (int endpoint : {edges_[i].u, edges_[i].v}) {
      for (EdgeId other : at_vertex[endpoint]) {
        if (other != static_cast<EdgeId>(i)) nb.push_back(other);
      }
    }
    std::sort(nb.begin(), nb.end());
    nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
  }

  // connectivity over vertices
  std::vector<char> seen(vertex_count_, 0);
  std::queue<int> frontier;
  frontier.push(0);
  seen[0] = 1;
  int reached = 1;
  while (!frontier.empty()) {
    int v = frontier.front();
    frontier.pop();
    for (EdgeId e : at_vertex[v]) {
      int w = edges_[e].u == v ? edges_[e].v : edges_[e].u;
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        frontier.push(w);
      }
    }
  }
  if (reached != vertex_count_) {
    throw std::invalid_argument("graph is not connected");
  }
}

EdgeId Graph::edge_id(int u, int v) const {
  if (u > v) std::swap(u, v);
  Edge probe{u, v};
  auto it = std::lower_bound(edges_.begin(), edges_.end(), probe,
                             [](const Edge& a, const Edge& b) {
                               return a.u != b.u ? a.u < b.u : a.v < b.v;
                             });
  if (it != edges_.end() && *it == probe) {
    return static_cast<EdgeId>(it - edges_.begin());
  }
  return -1;
}

const std::vector<EdgeId>& Graph::line_neighbors(EdgeId e) const {
  return line_neighbors_.at(e);
}

int Graph::edge_distance(EdgeId e, EdgeId f) const {
  if (e < 0 || f < 0 || e >= edge_count() || f >= edge_count()) {
    throw std::invalid_argument("edge id out of range");
  }
  if (e == f) return 0;
  std::vector<int> dist(edges_.size(), -1);
  std::queue<EdgeId> frontier;
  dist[e] = 0;
  frontier.push(e);
  while (!frontier.empty()) {
    EdgeId cur = frontier.front();
    frontier.pop();
    for (EdgeId nb : line_neighbors_[cur]) {
      if (dist[nb] < 0) {
        dist[nb] = dist[cur] + 1;
        if (nb == f) return dist[nb];
        frontier.push(nb);
      }
    }
  }
  return -1;
}

const std::string& Graph::vertex_name(int v) const {
  static const std::string empty;
  if (v < 0 || v >= vertex_count_) {
    throw std::invalid_argument("vertex " + std::to_string(v) +
                                " out of range");
  }
  return names_.empty() ? empty : names_[v];
}

std::string Graph::edge_name(EdgeId e) const {
  const Edge& ed = edges_.at(e);
  if (names_.empty()) {
    return std::to_string(ed.u) + "-" + std::to_string(ed.v);
  }
  return names_[ed.u] + "-" + names_[ed.v];
}

}  // namespace pebblekit
