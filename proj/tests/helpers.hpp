#pragma once

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "coxeter/cayley.hpp"
#include "coxeter/engine.hpp"
#include "oracle.hpp"

namespace testutil {

inline std::mt19937& rng() {
  static std::mt19937 gen(0x5eed);
  return gen;
}

inline int uniform(int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng());
}

/// Random word over the generators, not necessarily reduced.
inline cox::Word random_word(int rank, int max_len) {
  cox::Word w(uniform(0, max_len));
  for (int& x : w) x = uniform(0, rank - 1);
  return w;
}

/// A random reduced expression of w: peel a uniformly random left descent
/// at each step. The letters, in peel order, form a reduced word.
inline cox::Word random_reduced_expression(cox::Engine& eng, cox::Elem w) {
  cox::Word out;
  cox::Elem cur = w;
  while (eng.length(cur) > 0) {
    std::vector<int> descents;
    for (int s = 0; s < eng.rank(); ++s)
      if (eng.is_left_descent(s, cur)) descents.push_back(s);
    int s = descents[uniform(0, static_cast<int>(descents.size()) - 1)];
    out.push_back(s);
    cur = eng.mul_gen(s, cur);
  }
  return out;
}

/// Evaluates an engine word in an oracle model.
inline oracle::Elem eval_in_model(const oracle::Model& m, const cox::Word& w) {
  oracle::Elem e = m.identity;
  for (int s : w) e = m.mul(e, m.generators[s]);
  return e;
}

/// Engine clique member sets translated to oracle vertex-index sets.
inline std::set<std::vector<int>> to_oracle_sets(
    cox::Engine& eng, const oracle::Graph& g, const oracle::Model& m,
    const std::vector<std::vector<cox::Elem>>& cliques) {
  std::set<std::vector<int>> out;
  for (const auto& c : cliques) {
    std::vector<int> idx;
    for (cox::Elem e : c) idx.push_back(g.index.at(eval_in_model(m, eng.word(e))));
    std::sort(idx.begin(), idx.end());
    out.insert(std::move(idx));
  }
  return out;
}

}  // namespace testutil
