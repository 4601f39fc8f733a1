#include "coxeter/halfauto.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>

namespace cox {

namespace {

using Map = std::unordered_map<Elem, Elem>;

Map as_map(const std::vector<std::pair<Elem, Elem>>& pairs) {
  Map m;
  m.reserve(pairs.size());
  for (const auto& [a, b] : pairs) m.emplace(a, b);
  return m;
}

std::vector<std::pair<Elem, Elem>> sorted_pairs(
    Engine& eng, std::vector<std::pair<Elem, Elem>> pairs) {
  std::sort(pairs.begin(), pairs.end(), [&](const auto& a, const auto& b) {
    return eng.shortlex(a.first, b.first);
  });
  return pairs;
}

int other_parity(int p) { return p == 1 ? 2 : 1; }

}  // namespace

Elem VertexMap::apply(Elem e) const {
  for (const auto& [a, b] : pairs)
    if (a == e) return b;
  throw std::out_of_range("VertexMap::apply: element not in domain");
}

Elem CayleyAutomorphism::apply(Elem e) const {
  for (const auto& [a, b] : pairs)
    if (a == e) return b;
  throw std::out_of_range("CayleyAutomorphism::apply: element not in domain");
}

CayleyAutomorphism right_multiplication(Engine& eng, const Ball& group,
                                        Elem w) {
  CayleyAutomorphism f;
  f.provenance = CayleyAutomorphism::Provenance::RightMultiplication;
  for (Elem v : group.vertices) f.pairs.emplace_back(v, eng.mul(v, w));
  return f;
}

CayleyAutomorphism diagram_automorphism(Engine& eng, const Ball& group,
                                        const std::vector<int>& perm) {
  const int n = eng.rank();
  if (static_cast<int>(perm.size()) != n)
    throw std::invalid_argument("diagram_automorphism: wrong size");
  std::vector<bool> hit(n, false);
  for (int p : perm) {
    if (p < 0 || p >= n || hit[p])
      throw std::invalid_argument("diagram_automorphism: not a permutation");
    hit[p] = true;
  }
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t)
      if (eng.sys().bond(perm[s], perm[t]) != eng.sys().bond(s, t))
        throw std::invalid_argument(
            "diagram_automorphism: permutation breaks bond labels");
  CayleyAutomorphism f;
  f.provenance = CayleyAutomorphism::Provenance::Diagram;
  for (Elem v : group.vertices) {
    Word w = eng.word(v);
    for (int& letter : w) letter = perm[letter];
    f.pairs.emplace_back(v, eng.intern(w));
  }
  return f;
}

CayleyAutomorphism compose(Engine& eng, const CayleyAutomorphism& outer,
                           const CayleyAutomorphism& inner) {
  Map om = as_map(outer.pairs);
  CayleyAutomorphism f;
  f.provenance = CayleyAutomorphism::Provenance::Composite;
  for (const auto& [v, mid] : inner.pairs) f.pairs.emplace_back(v, om.at(mid));
  f.pairs = sorted_pairs(eng, std::move(f.pairs));
  return f;
}

VertexMap restrict_to_parity(Engine& eng, const CayleyAutomorphism& f,
                             int parity) {
  VertexMap v;
  v.domain_parity = parity;
  for (const auto& [a, b] : f.pairs)
    if (eng.parity(a) == parity) {
      v.codomain_parity = eng.parity(b);
      v.pairs.emplace_back(a, b);
    }
  return v;
}

bool is_cayley_automorphism(Engine& eng, const Ball& group,
                            const std::vector<std::pair<Elem, Elem>>& pairs) {
  if (pairs.size() != group.size()) return false;
  Map fm = as_map(pairs);
  if (fm.size() != group.size()) return false;
  std::set<Elem> image;
  for (const auto& [a, b] : pairs) {
    if (!group.contains(a) || !group.contains(b)) return false;
    image.insert(b);
  }
  if (image.size() != group.size()) return false;
  // Forward and backward edge preservation.
  Map inv;
  for (const auto& [a, b] : pairs) inv.emplace(b, a);
  for (const auto* m : {&fm, &inv}) {
    for (std::size_t i = 0; i < group.size(); ++i) {
      int fi = group.index_of(m->at(group.vertices[i]));
      for (int j : group.adj[i]) {
        int fj = group.index_of(m->at(group.vertices[j]));
        if (!std::binary_search(group.adj[fi].begin(), group.adj[fi].end(),
                                fj))
          return false;
      }
    }
  }
  return true;
}

bool is_half_isomorphism(Engine& eng, const Ball& group, const VertexMap& f) {
  auto halves = parity_split(eng, group);
  const HalfGraph& dom =
      f.domain_parity == 1 ? halves.first : halves.second;
  const HalfGraph& cod =
      f.codomain_parity == 1 ? halves.first : halves.second;
  if (f.pairs.size() != dom.size() || dom.size() != cod.size()) return false;
  Map fm = as_map(f.pairs);
  if (fm.size() != dom.size()) return false;
  std::set<Elem> image;
  for (const auto& [a, b] : f.pairs) {
    if (dom.index_of(a) < 0 || cod.index_of(b) < 0) return false;
    image.insert(b);
  }
  if (image.size() != cod.size()) return false;
  Map inv;
  for (const auto& [a, b] : f.pairs) inv.emplace(b, a);
  for (std::size_t i = 0; i < dom.size(); ++i) {
    int fi = cod.index_of(fm.at(dom.vertices[i]));
    for (int j : dom.adj[i])
      if (!cod.adjacent(fi, cod.index_of(fm.at(dom.vertices[j]))))
        return false;
  }
  for (std::size_t i = 0; i < cod.size(); ++i) {
    int fi = dom.index_of(inv.at(cod.vertices[i]));
    for (int j : cod.adj[i])
      if (!dom.adjacent(fi, dom.index_of(inv.at(cod.vertices[j]))))
        return false;
  }
  return true;
}

CayleyAutomorphism extend_half_automorphism(Engine& eng, const Ball& group,
                                            const VertexMap& f,
                                            bool allow_small_rank) {
  if (eng.rank() < 5 && !allow_small_rank)
    throw std::invalid_argument(
        "extend_half_automorphism: requires |S| >= 5 (clique-type sizes "
        "|S|, 4, 3 must be separated by cardinality)");
  if (!is_half_isomorphism(eng, group, f))
    throw std::invalid_argument(
        "extend_half_automorphism: input is not a half-graph isomorphism");
  Map fm = as_map(f.pairs);

  std::vector<std::pair<Elem, Elem>> pairs;
  const int comp_dom = other_parity(f.domain_parity);
  const int comp_cod = other_parity(f.codomain_parity);
  for (Elem w : group.vertices) {
    if (eng.parity(w) == f.domain_parity) {
      pairs.emplace_back(w, fm.at(w));
      continue;
    }
    // Image of the type-I clique S w; its base is the unique vertex
    // adjacent to every image member.
    std::vector<Elem> images;
    for (int s = 0; s < eng.rank(); ++s)
      images.push_back(fm.at(eng.mul_gen(s, w)));
    std::sort(images.begin(), images.end());
    images.erase(std::unique(images.begin(), images.end()), images.end());

    std::vector<int> common = group.adj[group.index_of(images.front())];
    for (std::size_t k = 1; k < images.size() && !common.empty(); ++k) {
      const auto& nb = group.adj[group.index_of(images[k])];
      std::vector<int> merged;
      std::set_intersection(common.begin(), common.end(), nb.begin(), nb.end(),
                            std::back_inserter(merged));
      common = std::move(merged);
    }
    if (common.size() != 1)
      throw NotExtendable(
          "image of S " + eng.to_string(w) +
          " has no unique common neighbor (not a type-I clique)");
    Elem w_prime = group.vertices[common.front()];
    std::vector<Elem> tmpl;
    for (int t = 0; t < eng.rank(); ++t)
      tmpl.push_back(eng.mul_gen(t, w_prime));
    std::sort(tmpl.begin(), tmpl.end());
    tmpl.erase(std::unique(tmpl.begin(), tmpl.end()), tmpl.end());
    if (tmpl != images)
      throw NotExtendable("image of S " + eng.to_string(w) +
                          " is not an S-coset");
    if (eng.parity(w_prime) != comp_cod)
      throw NotExtendable("extension image of " + eng.to_string(w) +
                          " has the wrong parity");
    pairs.emplace_back(w, w_prime);
  }
  (void)comp_dom;

  CayleyAutomorphism out;
  out.provenance = CayleyAutomorphism::Provenance::Extension;
  out.pairs = sorted_pairs(eng, std::move(pairs));
  if (!is_cayley_automorphism(eng, group, out.pairs))
    throw NotExtendable(
        "assembled extension does not preserve Cayley adjacency");
  return out;
}

Decomposition decompose_distance2_bijection(
    Engine& eng, const Ball& group,
    const std::vector<std::pair<Elem, Elem>>& g, bool allow_small_rank) {
  if (g.size() != group.size())
    throw std::invalid_argument("decompose: map does not cover the group");
  Map gm = as_map(g);
  if (gm.size() != group.size())
    throw std::invalid_argument("decompose: duplicate sources");
  std::set<Elem> image;
  for (const auto& [a, b] : g) {
    if (!group.contains(a) || !group.contains(b))
      throw std::invalid_argument("decompose: element outside the group");
    image.insert(b);
  }
  if (image.size() != group.size())
    throw std::invalid_argument("decompose: map is not a bijection");

  // Distance-2 preservation, both directions.
  for (std::size_t i = 0; i < group.size(); ++i)
    for (std::size_t j = i + 1; j < group.size(); ++j) {
      bool d2 = eng.distance(group.vertices[i], group.vertices[j]) == 2;
      bool fd2 = eng.distance(gm.at(group.vertices[i]),
                              gm.at(group.vertices[j])) == 2;
      if (d2 != fd2)
        throw std::invalid_argument(
            "decompose: map does not preserve distance 2 in both directions");
    }

  // Parity behavior: preserve both classes or swap them.
  bool all_preserve = true, all_swap = true;
  for (const auto& [a, b] : g) {
    if (eng.parity(a) == eng.parity(b))
      all_swap = false;
    else
      all_preserve = false;
  }
  if (!all_preserve && !all_swap)
    throw std::invalid_argument(
        "decompose: map neither preserves nor swaps the parity classes");

  auto restriction = [&](int parity) {
    VertexMap v;
    v.domain_parity = parity;
    v.codomain_parity = all_preserve ? parity : other_parity(parity);
    for (Elem w : group.vertices)
      if (eng.parity(w) == parity) v.pairs.emplace_back(w, gm.at(w));
    return v;
  };

  Decomposition d;
  d.swapped = all_swap;
  d.f1 = extend_half_automorphism(eng, group, restriction(1), allow_small_rank);
  d.f2 = extend_half_automorphism(eng, group, restriction(2), allow_small_rank);
  d.is_automorphism = d.f1 == d.f2;
  return d;
}

VertexMap halfcube4_witness(Engine& eng, const Ball& group) {
  auto halves = parity_split(eng, group);
  const HalfGraph& hg = halves.first;
  const int n = static_cast<int>(hg.size());
  if (n != 8)
    throw std::invalid_argument("halfcube4_witness: expected the rank-4 "
                                "hypercube (8 odd vertices)");

  // Maximal 2-cliques inside W1, as sorted local index sets, by type.
  std::set<std::vector<int>> type1, type2;
  for (const auto& cc : enumerate_full_group(eng)) {
    std::vector<int> idx;
    bool inside = true;
    for (Elem m : cc.clique.members) {
      int i = hg.index_of(m);
      if (i < 0) {
        inside = false;
        break;
      }
      idx.push_back(i);
    }
    if (!inside) continue;
    std::sort(idx.begin(), idx.end());
    for (const auto& t : cc.types) {
      if (t.tag == CliqueType::SCoset) type1.insert(idx);
      if (t.tag == CliqueType::CommutingTriple) type2.insert(idx);
    }
  }
  if (type1.empty() || type2.empty())
    throw std::logic_error("halfcube4_witness: clique inventory incomplete");

  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  do {
    bool automorphism = true;
    for (int i = 0; i < n && automorphism; ++i)
      for (int j : hg.adj[i])
        if (!hg.adjacent(perm[i], perm[j])) {
          automorphism = false;
          break;
        }
    if (!automorphism) continue;
    bool carries = false;
    for (const auto& c : type1) {
      std::vector<int> img;
      for (int i : c) img.push_back(perm[i]);
      std::sort(img.begin(), img.end());
      if (type2.count(img)) {
        carries = true;
        break;
      }
    }
    if (!carries) continue;
    VertexMap f;
    f.domain_parity = 1;
    f.codomain_parity = 1;
    for (int i = 0; i < n; ++i)
      f.pairs.emplace_back(hg.vertices[i], hg.vertices[perm[i]]);
    return f;
  } while (std::next_permutation(perm.begin(), perm.end()));
  throw std::logic_error("halfcube4_witness: no witness found");
}

nlohmann::json vertexmap_to_json(const Engine& eng, const VertexMap& f) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& [a, b] : f.pairs)
    j.push_back({eng.to_string(a), eng.to_string(b)});
  return j;
}

nlohmann::json automorphism_to_json(const Engine& eng,
                                    const CayleyAutomorphism& f) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& [a, b] : f.pairs)
    j.push_back({eng.to_string(a), eng.to_string(b)});
  return j;
}

}  // namespace cox
