#include "coxeter/cliques.hpp"

#include <algorithm>
#include <cstdint>
#include <set>

namespace cox {

namespace {

// Bron-Kerbosch with pivoting on a graph of at most 64 vertices.
void bk(std::uint64_t r, std::uint64_t p, std::uint64_t x,
        const std::vector<std::uint64_t>& adj,
        std::vector<std::uint64_t>& out) {
  if (p == 0 && x == 0) {
    out.push_back(r);
    return;
  }
  std::uint64_t px = p | x;
  int pivot = -1, best = -1;
  for (int v = 0; v < 64; ++v) {
    if (!(px >> v & 1)) continue;
    int deg = __builtin_popcountll(p & adj[v]);
    if (deg > best) {
      best = deg;
      pivot = v;
    }
  }
  std::uint64_t cand = p & ~adj[pivot];
  while (cand) {
    int v = __builtin_ctzll(cand);
    cand &= cand - 1;
    std::uint64_t bit = 1ull << v;
    bk(r | bit, p & adj[v], x & adj[v], adj, out);
    p &= ~bit;
    x |= bit;
  }
}

std::vector<Elem> sorted_members(Engine& eng, std::vector<Elem> m) {
  std::sort(m.begin(), m.end(),
            [&](Elem a, Elem b) { return eng.shortlex(a, b); });
  return m;
}

bool set_equals(const std::vector<Elem>& sorted_by_id_a,
                const std::vector<Elem>& sorted_by_id_b) {
  return sorted_by_id_a == sorted_by_id_b;
}

std::vector<Elem> id_sorted(std::vector<Elem> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

std::string clique_type_tag(CliqueType t) {
  switch (t) {
    case CliqueType::SCoset: return "S-coset";
    case CliqueType::CommutingTriple: return "commuting-triple";
    case CliqueType::Braid: return "braid";
  }
  return "?";
}

std::vector<TwoClique> maximal_2cliques_at(Engine& eng, Elem u) {
  std::vector<Elem> nbrs = eng.two_neighbors(u);
  const int n = static_cast<int>(nbrs.size());
  if (n == 0) return {};
  if (n > 64)
    throw std::logic_error("maximal_2cliques_at: rank too large");
  std::vector<std::uint64_t> adj(64, 0);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (eng.distance(nbrs[i], nbrs[j]) == 2) {
        adj[i] |= 1ull << j;
        adj[j] |= 1ull << i;
      }
  std::uint64_t all = n == 64 ? ~0ull : (1ull << n) - 1;
  std::vector<std::uint64_t> masks;
  bk(0, all, 0, adj, masks);
  std::vector<TwoClique> out;
  for (std::uint64_t m : masks) {
    TwoClique c;
    c.members.push_back(u);
    for (int i = 0; i < n; ++i)
      if (m >> i & 1) c.members.push_back(nbrs[i]);
    if (c.members.size() < 2) continue;  // isolated u: no 2-clique through it
    c.members = sorted_members(eng, std::move(c.members));
    out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end(), [](const TwoClique& a, const TwoClique& b) {
    return a.members < b.members;
  });
  return out;
}

std::vector<CliqueClass> classify_clique(Engine& eng, const TwoClique& c,
                                         bool /*maximal_evidence*/) {
  const int rank = eng.rank();
  const std::vector<Elem> target = id_sorted(c.members);
  std::vector<CliqueClass> found;
  std::vector<Elem> s_coset_ws;

  // Keep one parameterization per tag: the ShortLex-least w, then the
  // least generator tuple (several (w, generators) pairs can describe the
  // same member set).
  auto consider = [&](CliqueClass cls) {
    std::sort(cls.generators.begin(), cls.generators.end());
    for (auto& old : found) {
      if (old.tag != cls.tag) continue;
      if (eng.shortlex(cls.w, old.w) ||
          (cls.w == old.w && cls.generators < old.generators))
        old = std::move(cls);
      return;
    }
    found.push_back(std::move(cls));
  };

  for (Elem u : c.members) {
    for (int speel = 0; speel < rank; ++speel) {
      Elem w = eng.mul_gen(speel, u);
      // Generators whose translate lies in the clique.
      std::vector<int> hits;
      for (int t = 0; t < rank; ++t)
        if (std::binary_search(target.begin(), target.end(),
                               eng.mul_gen(t, w)))
          hits.push_back(t);

      // Type I: S w.
      if (static_cast<int>(hits.size()) == rank &&
          c.members.size() == static_cast<std::size_t>(rank)) {
        if (std::find(s_coset_ws.begin(), s_coset_ws.end(), w) ==
            s_coset_ws.end())
          s_coset_ws.push_back(w);
      }

      // Type II: { a w, b w, c w, a b c w } for a mutually commuting triple.
      if (c.members.size() == 4) {
        for (size_t i = 0; i < hits.size(); ++i)
          for (size_t j = i + 1; j < hits.size(); ++j)
            for (size_t k = j + 1; k < hits.size(); ++k) {
              int a = hits[i], b = hits[j], cg = hits[k];
              if (!eng.sys().commute(a, b) || !eng.sys().commute(a, cg) ||
                  !eng.sys().commute(b, cg))
                continue;
              Elem prod = eng.mul_gen(a, eng.mul_gen(b, eng.mul_gen(cg, w)));
              std::vector<Elem> tmpl = {eng.mul_gen(a, w), eng.mul_gen(b, w),
                                        eng.mul_gen(cg, w), prod};
              if (set_equals(id_sorted(tmpl), target))
                consider({CliqueType::CommutingTriple, w, {a, b, cg}, false});
            }
      }

      // Type III: { a w, b w, w(a,b) w } with m(a,b) = 3.
      if (c.members.size() == 3) {
        for (size_t i = 0; i < hits.size(); ++i)
          for (size_t j = i + 1; j < hits.size(); ++j) {
            int a = hits[i], b = hits[j];
            if (eng.sys().bond(a, b) != 3) continue;
            Elem braid = eng.mul_gen(a, eng.mul_gen(b, eng.mul_gen(a, w)));
            std::vector<Elem> tmpl = {eng.mul_gen(a, w), eng.mul_gen(b, w),
                                      braid};
            if (set_equals(id_sorted(tmpl), target))
              consider({CliqueType::Braid, w, {a, b}, false});
          }
      }
    }
  }

  if (!s_coset_ws.empty()) {
    // Verify each candidate w by expansion (hits == S already implies it,
    // but re-check the full template product set).
    std::sort(s_coset_ws.begin(), s_coset_ws.end(),
              [&](Elem a, Elem b) { return eng.shortlex(a, b); });
    std::vector<Elem> valid;
    for (Elem w : s_coset_ws) {
      std::vector<Elem> tmpl;
      for (int t = 0; t < rank; ++t) tmpl.push_back(eng.mul_gen(t, w));
      if (set_equals(id_sorted(std::move(tmpl)), target)) valid.push_back(w);
    }
    if (!valid.empty()) {
      CliqueClass cls{CliqueType::SCoset, valid.front(), {}, valid.size() > 1};
      found.insert(found.begin(), std::move(cls));
    }
  }

  // Template order: Type I, II, III.
  std::stable_sort(found.begin(), found.end(),
                   [](const CliqueClass& a, const CliqueClass& b) {
                     return static_cast<int>(a.tag) < static_cast<int>(b.tag);
                   });

  if (found.empty()) {
    std::string what = "theorem violation: unclassifiable maximal 2-clique {";
    for (size_t i = 0; i < c.members.size(); ++i)
      what += (i ? ", " : "") + eng.to_string(c.members[i]);
    what += "}";
    throw TheoremViolation(what, c);
  }
  return found;
}

namespace {

std::vector<ClassifiedClique> enumerate_impl(Engine& eng,
                                             const std::vector<Elem>& bases,
                                             int max_least_length) {
  std::set<std::vector<Elem>> seen;
  std::vector<ClassifiedClique> out;
  for (Elem u : bases) {
    for (TwoClique& c : maximal_2cliques_at(eng, u)) {
      if (max_least_length >= 0 &&
          eng.length(c.members.front()) > max_least_length)
        continue;
      if (!seen.insert(id_sorted(c.members)).second) continue;
      ClassifiedClique cc;
      cc.types = classify_clique(eng, c);
      cc.clique = std::move(c);
      out.push_back(std::move(cc));
    }
  }
  std::sort(out.begin(), out.end(),
            [&](const ClassifiedClique& a, const ClassifiedClique& b) {
              const auto& x = a.clique.members;
              const auto& y = b.clique.members;
              return std::lexicographical_compare(
                  x.begin(), x.end(), y.begin(), y.end(),
                  [&](Elem p, Elem q) { return eng.shortlex(p, q); });
            });
  return out;
}

}  // namespace

std::vector<ClassifiedClique> enumerate_full_group(Engine& eng,
                                                   std::size_t budget) {
  Ball group = full_group(eng, budget);
  return enumerate_impl(eng, group.vertices, -1);
}

std::vector<ClassifiedClique> enumerate_ball(Engine& eng, int radius,
                                             std::size_t budget) {
  Ball ball = generate_ball(eng, eng.identity(), radius, budget);
  return enumerate_impl(eng, ball.vertices, radius);
}

TypeCounts count_by_type(const std::vector<ClassifiedClique>& cliques) {
  TypeCounts n;
  for (const auto& cc : cliques) {
    bool i = false, ii = false, iii = false;
    for (const auto& t : cc.types) {
      i |= t.tag == CliqueType::SCoset;
      ii |= t.tag == CliqueType::CommutingTriple;
      iii |= t.tag == CliqueType::Braid;
    }
    n.s_coset += i;
    n.commuting_triple += ii;
    n.braid += iii;
  }
  return n;
}

nlohmann::json cliques_to_json(const Engine& eng,
                               const std::vector<ClassifiedClique>& cliques) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& cc : cliques) {
    nlohmann::json j;
    j["members"] = nlohmann::json::array();
    for (Elem m : cc.clique.members)
      j["members"].push_back(eng.to_string(m));
    j["types"] = nlohmann::json::array();
    for (const auto& t : cc.types) {
      nlohmann::json tj;
      tj["tag"] = clique_type_tag(t.tag);
      tj["w"] = eng.to_string(t.w);
      tj["generators"] = nlohmann::json::array();
      for (int g : t.generators) tj["generators"].push_back(eng.sys().name(g));
      if (t.degenerate) tj["degenerate"] = true;
      j["types"].push_back(std::move(tj));
    }
    arr.push_back(std::move(j));
  }
  return arr;
}

void verify_classified(Engine& eng,
                       const std::vector<ClassifiedClique>& cliques) {
  for (const auto& cc : cliques) {
    const auto& m = cc.clique.members;
    if (m.size() < 2)
      throw TheoremViolation("verify: clique with fewer than 2 members",
                             cc.clique);
    for (size_t i = 0; i < m.size(); ++i)
      for (size_t j = i + 1; j < m.size(); ++j)
        if (eng.distance(m[i], m[j]) != 2)
          throw TheoremViolation("verify: members not at distance 2",
                                 cc.clique);
    // Maximality: no element of two_neighbors(first member) extends it.
    std::vector<Elem> ids = m;
    std::sort(ids.begin(), ids.end());
    for (Elem cand : eng.two_neighbors(m.front())) {
      if (std::binary_search(ids.begin(), ids.end(), cand)) continue;
      bool extends = true;
      for (Elem x : m)
        if (eng.distance(cand, x) != 2) {
          extends = false;
          break;
        }
      if (extends)
        throw TheoremViolation("verify: clique is not maximal", cc.clique);
    }
    // Re-derive the classification and require identical templates.
    auto fresh = classify_clique(eng, cc.clique);
    if (fresh.size() != cc.types.size())
      throw TheoremViolation("verify: classification mismatch", cc.clique);
    for (size_t i = 0; i < fresh.size(); ++i)
      if (!(fresh[i] == cc.types[i]))
        throw TheoremViolation("verify: classification mismatch", cc.clique);
  }
}

}  // namespace cox
