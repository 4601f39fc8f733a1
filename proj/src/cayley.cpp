#include "coxeter/cayley.hpp"

#include <algorithm>
#include <sstream>

namespace cox {

namespace {

Ball bfs(Engine& eng, Elem center, int max_radius, std::size_t budget,
         bool until_closed) {
  std::unordered_map<Elem, int> dist;
  std::vector<Elem> order{center};
  dist.emplace(center, 0);
  std::vector<Elem> frontier{center};
  int depth = 0;
  while (!frontier.empty() && (until_closed || depth < max_radius)) {
    std::vector<Elem> next;
    for (Elem w : frontier) {
      for (int s = 0; s < eng.rank(); ++s) {
        Elem v = eng.mul_gen(s, w);
        if (dist.emplace(v, depth + 1).second) {
          if (order.size() >= budget) throw BudgetExceeded(order.size(), budget);
          order.push_back(v);
          next.push_back(v);
        }
      }
    }
    frontier = std::move(next);
    if (!frontier.empty()) ++depth;
  }

  Ball ball;
  ball.center = center;
  ball.radius = until_closed ? depth : max_radius;
  ball.whole_group = until_closed;
  ball.vertices = std::move(order);
  std::sort(ball.vertices.begin(), ball.vertices.end(),
            [&](Elem a, Elem b) { return eng.shortlex(a, b); });
  ball.local.reserve(ball.vertices.size());
  for (int i = 0; i < static_cast<int>(ball.vertices.size()); ++i)
    ball.local.emplace(ball.vertices[i], i);
  ball.adj.assign(ball.vertices.size(), {});
  for (int i = 0; i < static_cast<int>(ball.vertices.size()); ++i) {
    for (int s = 0; s < eng.rank(); ++s) {
      int j = ball.index_of(eng.mul_gen(s, ball.vertices[i]));
      if (j >= 0) ball.adj[i].push_back(j);
    }
    std::sort(ball.adj[i].begin(), ball.adj[i].end());
    ball.adj[i].erase(std::unique(ball.adj[i].begin(), ball.adj[i].end()),
                      ball.adj[i].end());
  }
  return ball;
}

std::string quoted(const std::string& s) { return "\"" + s + "\""; }

}  // namespace

Ball generate_ball(Engine& eng, Elem center, int radius, std::size_t budget) {
  if (radius < 0) throw std::invalid_argument("generate_ball: radius < 0");
  if (budget < 1) throw std::invalid_argument("generate_ball: budget < 1");
  return bfs(eng, center, radius, budget, false);
}

Ball full_group(Engine& eng, std::size_t budget) {
  if (budget < 1) throw std::invalid_argument("full_group: budget < 1");
  return bfs(eng, eng.identity(), 0, budget, true);
}

bool HalfGraph::adjacent(int a, int b) const {
  return std::binary_search(adj[a].begin(), adj[a].end(), b);
}

std::pair<HalfGraph, HalfGraph> parity_split(Engine& eng, const Ball& ball) {
  std::pair<HalfGraph, HalfGraph> out;
  out.first.parity = 1;
  out.second.parity = 2;
  for (Elem v : ball.vertices) {
    HalfGraph& hg = eng.parity(v) == 1 ? out.first : out.second;
    hg.local.emplace(v, static_cast<int>(hg.vertices.size()));
    hg.vertices.push_back(v);
  }
  for (HalfGraph* hg : {&out.first, &out.second}) {
    hg->adj.assign(hg->vertices.size(), {});
    for (int i = 0; i < static_cast<int>(hg->vertices.size()); ++i) {
      for (Elem v : eng.two_neighbors(hg->vertices[i])) {
        int j = hg->index_of(v);
        if (j >= 0 && j != i) hg->adj[i].push_back(j);
      }
      std::sort(hg->adj[i].begin(), hg->adj[i].end());
    }
  }
  return out;
}

std::string ball_to_dot(const Engine& eng, const Ball& ball) {
  std::ostringstream os;
  os << "graph cayley {\n";
  for (Elem v : ball.vertices)
    os << "  " << quoted(eng.to_string(v)) << ";\n";
  for (int i = 0; i < static_cast<int>(ball.vertices.size()); ++i)
    for (int j : ball.adj[i])
      if (i < j)
        os << "  " << quoted(eng.to_string(ball.vertices[i])) << " -- "
           << quoted(eng.to_string(ball.vertices[j])) << ";\n";
  os << "}\n";
  return os.str();
}

std::string halfgraph_to_dot(const Engine& eng, const HalfGraph& hg) {
  std::ostringstream os;
  os << "graph halfgraph" << hg.parity << " {\n";
  for (Elem v : hg.vertices) os << "  " << quoted(eng.to_string(v)) << ";\n";
  for (int i = 0; i < static_cast<int>(hg.vertices.size()); ++i)
    for (int j : hg.adj[i])
      if (i < j)
        os << "  " << quoted(eng.to_string(hg.vertices[i])) << " -- "
           << quoted(eng.to_string(hg.vertices[j])) << ";\n";
  os << "}\n";
  return os.str();
}

nlohmann::json ball_to_json(const Engine& eng, const Ball& ball) {
  nlohmann::json j;
  j["center"] = eng.to_string(ball.center);
  j["radius"] = ball.radius;
  j["whole_group"] = ball.whole_group;
  j["vertices"] = nlohmann::json::array();
  for (Elem v : ball.vertices) j["vertices"].push_back(eng.to_string(v));
  j["edges"] = nlohmann::json::array();
  for (int i = 0; i < static_cast<int>(ball.vertices.size()); ++i)
    for (int k : ball.adj[i])
      if (i < k)
        j["edges"].push_back({eng.to_string(ball.vertices[i]),
                              eng.to_string(ball.vertices[k])});
  return j;
}

nlohmann::json halfgraph_to_json(const Engine& eng, const HalfGraph& hg) {
  nlohmann::json j;
  j["parity"] = hg.parity;
  j["vertices"] = nlohmann::json::array();
  for (Elem v : hg.vertices) j["vertices"].push_back(eng.to_string(v));
  j["edges"] = nlohmann::json::array();
  for (int i = 0; i < static_cast<int>(hg.vertices.size()); ++i)
    for (int k : hg.adj[i])
      if (i < k)
        j["edges"].push_back(
            {eng.to_string(hg.vertices[i]), eng.to_string(hg.vertices[k])});
  return j;
}

}  // namespace cox
