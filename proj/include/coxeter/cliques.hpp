#pragma once

#include <array>
#include <string>
#include <vector>

#include "json.hpp"

#include "coxeter/cayley.hpp"
#include "coxeter/engine.hpp"

namespace cox {

/// Pairwise distance-2 set of group elements, ShortLex sorted.
struct TwoClique {
  std::vector<Elem> members;
};

enum class CliqueType {
  SCoset,           // S w
  CommutingTriple,  // { s w, s' w, s'' w, s s' s'' w }, mutually commuting
  Braid,            // { s w, s' w, s s' s w } with m(s,s') = 3
};

std::string clique_type_tag(CliqueType t);

/// One matching template for a maximal 2-clique. A clique can carry several
/// (the template sizes |S|, 4, 3 may coincide at small rank).
struct CliqueClass {
  CliqueType tag;
  Elem w = 0;
  std::vector<int> generators;  // empty for SCoset, triple or pair otherwise
  bool degenerate = false;      // SCoset with non-unique w (only I2(2))

  bool operator==(const CliqueClass& o) const {
    return tag == o.tag && w == o.w && generators == o.generators;
  }
};

struct ClassifiedClique {
  TwoClique clique;
  std::vector<CliqueClass> types;
};

/// A maximal 2-clique matched none of the three templates. Never expected.
class TheoremViolation : public std::runtime_error {
public:
  TheoremViolation(std::string what, TwoClique clique)
      : std::runtime_error(std::move(what)), clique(std::move(clique)) {}
  TwoClique clique;
};

/// All maximal 2-cliques containing u. Maximality holds against the whole
/// group: any extension candidate is 2-adjacent to u, so it lies in
/// two_neighbors(u), and the search is over exactly that set.
std::vector<TwoClique> maximal_2cliques_at(Engine& eng, Elem u);

/// All matching templates for a maximal 2-clique, each re-verified by
/// expanding the template with engine multiplication. Throws
/// TheoremViolation when nothing matches.
std::vector<CliqueClass> classify_clique(Engine& eng, const TwoClique& c,
                                         bool maximal_evidence = true);

/// Maximal 2-cliques of the whole finite group, classified, ShortLex sorted.
std::vector<ClassifiedClique> enumerate_full_group(
    Engine& eng, std::size_t budget = kDefaultBudget);

/// Maximal 2-cliques whose ShortLex-least member has length <= radius,
/// for balls around the identity (works on infinite groups).
std::vector<ClassifiedClique> enumerate_ball(
    Engine& eng, int radius, std::size_t budget = kDefaultBudget);

struct TypeCounts {
  std::size_t s_coset = 0;
  std::size_t commuting_triple = 0;
  std::size_t braid = 0;
};

TypeCounts count_by_type(const std::vector<ClassifiedClique>& cliques);

nlohmann::json cliques_to_json(const Engine& eng,
                               const std::vector<ClassifiedClique>& cliques);

/// Re-checks a classified list from scratch: pairwise distances, maximality,
/// and every template expansion. Used by the CLI `verify` subcommand.
void verify_classified(Engine& eng, const std::vector<ClassifiedClique>& cliques);

}  // namespace cox
