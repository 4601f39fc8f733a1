#pragma once

#include <cstddef>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "json.hpp"

#include "coxeter/engine.hpp"

namespace cox {

inline constexpr std::size_t kDefaultBudget = 1'000'000;

class BudgetExceeded : public std::runtime_error {
public:
  BudgetExceeded(std::size_t found, std::size_t budget)
      : std::runtime_error("budget exceeded: found " + std::to_string(found) +
                           " vertices, budget " + std::to_string(budget)),
        found(found),
        budget(budget) {}
  std::size_t found;
  std::size_t budget;
};

/// Ball { w : d(w, center) <= radius }, or the whole group when BFS closes.
/// Vertices are ShortLex sorted; adjacency uses local vertex indices.
struct Ball {
  Elem center = 0;
  int radius = 0;
  bool whole_group = false;
  std::vector<Elem> vertices;
  std::vector<std::vector<int>> adj;       // sorted local indices
  std::unordered_map<Elem, int> local;     // element -> local index

  bool contains(Elem e) const { return local.count(e) != 0; }
  int index_of(Elem e) const {
    auto it = local.find(e);
    return it == local.end() ? -1 : it->second;
  }
  std::size_t size() const { return vertices.size(); }
};

Ball generate_ball(Engine& eng, Elem center, int radius,
                   std::size_t budget = kDefaultBudget);

/// The whole finite group; radius is the group diameter.
/// Throws BudgetExceeded when |W| > budget (in particular for infinite W).
Ball full_group(Engine& eng, std::size_t budget = kDefaultBudget);

/// One parity class with distance-2 adjacency (edges within the ball).
struct HalfGraph {
  int parity = 1;  // 1 = odd lengths, 2 = even lengths
  std::vector<Elem> vertices;              // ShortLex sorted
  std::vector<std::vector<int>> adj;       // sorted local indices
  std::unordered_map<Elem, int> local;

  int index_of(Elem e) const {
    auto it = local.find(e);
    return it == local.end() ? -1 : it->second;
  }
  std::size_t size() const { return vertices.size(); }
  bool adjacent(int a, int b) const;
};

/// Splits a ball into (Gamma_1, Gamma_2).
std::pair<HalfGraph, HalfGraph> parity_split(Engine& eng, const Ball& ball);

std::string ball_to_dot(const Engine& eng, const Ball& ball);
std::string halfgraph_to_dot(const Engine& eng, const HalfGraph& hg);
nlohmann::json ball_to_json(const Engine& eng, const Ball& ball);
nlohmann::json halfgraph_to_json(const Engine& eng, const HalfGraph& hg);

}  // namespace cox
