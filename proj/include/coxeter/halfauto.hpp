#pragma once

#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "coxeter/cayley.hpp"
#include "coxeter/cliques.hpp"
#include "coxeter/engine.hpp"

namespace cox {

/// Finite bijection between the vertex sets of two half-graphs,
/// stored as an association list ShortLex-sorted by source.
struct VertexMap {
  int domain_parity = 1;
  int codomain_parity = 1;
  std::vector<std::pair<Elem, Elem>> pairs;

  Elem apply(Elem e) const;  // throws std::out_of_range if e not in domain
};

class NotExtendable : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Adjacency-preserving bijection on the whole (finite) group.
struct CayleyAutomorphism {
  enum class Provenance { RightMultiplication, Diagram, Extension, Composite };
  Provenance provenance = Provenance::Composite;
  std::vector<std::pair<Elem, Elem>> pairs;  // ShortLex-sorted by source

  Elem apply(Elem e) const;
  bool operator==(const CayleyAutomorphism& o) const {
    return pairs == o.pairs;
  }
};

/// R_w : v -> v w over the whole finite group.
CayleyAutomorphism right_multiplication(Engine& eng, const Ball& group,
                                        Elem w);

/// The automorphism induced by a label-preserving permutation of S
/// (perm[s] is the image generator index). Throws std::invalid_argument
/// when the permutation breaks a bond label.
CayleyAutomorphism diagram_automorphism(Engine& eng, const Ball& group,
                                        const std::vector<int>& perm);

/// outer(inner(v)).
CayleyAutomorphism compose(Engine& eng, const CayleyAutomorphism& outer,
                           const CayleyAutomorphism& inner);

VertexMap restrict_to_parity(Engine& eng, const CayleyAutomorphism& f,
                             int parity);

/// True iff the pairs form a bijection of the group preserving Cayley
/// adjacency in both directions.
bool is_cayley_automorphism(Engine& eng, const Ball& group,
                            const std::vector<std::pair<Elem, Elem>>& pairs);

/// True iff f is a bijection Gamma_i -> Gamma_j preserving distance-2
/// adjacency in both directions, with full parity classes as domain/codomain.
bool is_half_isomorphism(Engine& eng, const Ball& group, const VertexMap& f);

/// Extends a half-graph isomorphism to the unique Cayley-graph automorphism
/// restricting to it. For each w in the complementary parity class the image
/// of the type-I clique S w is located, its base w' recovered as the unique
/// common Cayley neighbor, and w mapped to w'. Requires |S| >= 5 (template
/// sizes |S|, 4, 3 are then distinct) unless allow_small_rank is set.
/// Throws NotExtendable when the image of some S w is not a type-I clique or
/// the assembled map fails adjacency verification.
CayleyAutomorphism extend_half_automorphism(Engine& eng, const Ball& group,
                                            const VertexMap& f,
                                            bool allow_small_rank = false);

struct Decomposition {
  CayleyAutomorphism f1;  // agrees with g on W1
  CayleyAutomorphism f2;  // agrees with g on W2
  bool swapped = false;   // g carries W1 to W2 and conversely
  bool is_automorphism = false;  // f1 == f2
};

/// Splits a distance-2-preserving bijection of W into the two Cayley
/// automorphisms matching it on W1 and W2. Verifies the distance-2
/// hypothesis and the parity behavior; throws std::invalid_argument when g
/// neither preserves nor swaps the parity classes.
Decomposition decompose_distance2_bijection(
    Engine& eng, const Ball& group,
    const std::vector<std::pair<Elem, Elem>>& g, bool allow_small_rank = false);

/// Deterministic witness for the rank-4 hypercube: the least automorphism of
/// the 8-vertex half-graph Gamma_1 (the cocktail-party graph K_{4x2})
/// carrying a type-I clique onto a type-II clique.
VertexMap halfcube4_witness(Engine& eng, const Ball& q4_group);

nlohmann::json vertexmap_to_json(const Engine& eng, const VertexMap& f);
nlohmann::json automorphism_to_json(const Engine& eng,
                                    const CayleyAutomorphism& f);

}  // namespace cox
