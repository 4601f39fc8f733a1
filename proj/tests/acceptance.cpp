// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. argv[1] is the path to the coxtool binary (used by the
// determinism criterion).

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "coxeter/cayley.hpp"
#include "coxeter/cliques.hpp"
#include "coxeter/engine.hpp"
#include "coxeter/halfauto.hpp"
#include "coxeter/system.hpp"
#include "helpers.hpp"

using cox::Ball;
using cox::CoxeterSystem;
using cox::Elem;
using cox::Engine;

namespace {

int g_failures = 0;

void report(int number, const std::string& name, bool ok,
            const std::string& detail = "") {
  std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << number << ": "
            << name;
  if (!ok && !detail.empty()) std::cout << " -- " << detail;
  std::cout << std::endl;
  if (!ok) ++g_failures;
}

void run_criterion(int number, const std::string& name,
                   const std::function<void()>& body) {
  try {
    body();
    report(number, name, true);
  } catch (const std::exception& e) {
    report(number, name, false, e.what());
  }
}

void require(bool cond, const std::string& msg) {
  if (!cond) throw std::runtime_error(msg);
}

std::optional<oracle::Model> model_for(const std::string& preset) {
  if (preset == "A3") return oracle::a_model(3);
  if (preset == "A4") return oracle::a_model(4);
  if (preset == "A5") return oracle::a_model(5);
  if (preset == "B3") return oracle::b_model(3);
  if (preset == "B4") return oracle::b_model(4);
  if (preset == "B5") return oracle::b_model(5);
  if (preset == "D4") return oracle::d_model(4);
  if (preset == "D5") return oracle::d_model(5);
  if (preset == "Q3") return oracle::hypercube_model(3);
  if (preset == "Q4") return oracle::hypercube_model(4);
  if (preset == "Q5") return oracle::hypercube_model(5);
  if (preset.rfind("I2(", 0) == 0 && preset != "I2(inf)")
    return oracle::dihedral_model(std::stoi(preset.substr(3)));
  return std::nullopt;
}

std::vector<std::vector<Elem>> member_sets(
    const std::vector<cox::ClassifiedClique>& cliques) {
  std::vector<std::vector<Elem>> out;
  for (const auto& cc : cliques) out.push_back(cc.clique.members);
  return out;
}

std::set<std::vector<int>> oracle_clique_sets(const oracle::Graph& g,
                                              int max_least_dist) {
  auto d2 = oracle::distance2_adjacency(g);
  auto from_id = oracle::bfs_distances(g, 0);
  std::set<std::vector<int>> out;
  for (auto& c : oracle::maximal_cliques(d2)) {
    if (c.size() < 2) continue;
    if (max_least_dist >= 0) {
      int least = from_id[c.front()];
      for (int v : c) least = std::min(least, from_id[v]);
      if (least > max_least_dist) continue;
    }
    out.insert(c);
  }
  return out;
}

// ---------------------------------------------------------------------------

void criterion1_theorem1() {
  struct Entry {
    const char* preset;
    int ball_radius;  // -1: whole group
  };
  const Entry corpus[] = {
      {"I2(2)", -1}, {"I2(3)", -1}, {"I2(4)", -1}, {"I2(5)", -1},
      {"I2(6)", -1}, {"I2(inf)", 8}, {"A3", -1},   {"B3", -1},
      {"H3", -1},    {"A4", -1},    {"B4", -1},    {"D4", -1},
      {"F4", -1},    {"A5", -1},    {"D5", -1},    {"B5", -1},
      {"Q3", -1},    {"Q4", -1},    {"Q5", -1},    {"Atilde2", 6},
      {"U3", 6}};
  for (const auto& entry : corpus) {
    Engine eng(CoxeterSystem::preset(entry.preset));
    std::vector<cox::ClassifiedClique> cliques =
        entry.ball_radius < 0 ? cox::enumerate_full_group(eng)
                              : cox::enumerate_ball(eng, entry.ball_radius);
    // Re-verifies pairwise distances, maximality, and every template
    // expansion by multiplication; throws TheoremViolation on any failure.
    cox::verify_classified(eng, cliques);
    for (const auto& cc : cliques)
      require(!cc.types.empty(),
              std::string(entry.preset) + ": unclassified clique");

    auto model = model_for(entry.preset);
    if (std::string(entry.preset) == "I2(inf)") {
      // Oracle ball wide enough that maximality inside it is global for
      // cliques whose least member sits within the engine's scope.
      auto g = oracle::cayley_ball(oracle::dihedral_model(0),
                                   entry.ball_radius + 4);
      auto expect = oracle_clique_sets(g, entry.ball_radius);
      auto got = testutil::to_oracle_sets(eng, g, oracle::dihedral_model(0),
                                          member_sets(cliques));
      require(got == expect, "I2(inf): clique sets differ from oracle");
    } else if (model) {
      auto g = oracle::cayley_graph(*model);
      auto expect = oracle_clique_sets(g, -1);
      auto got = testutil::to_oracle_sets(eng, g, *model,
                                          member_sets(cliques));
      require(got == expect,
              std::string(entry.preset) + ": clique sets differ from oracle");
    }
  }
}

void criterion2_counts() {
  Engine q3(CoxeterSystem::preset("Q3"));
  auto q3c = cox::count_by_type(cox::enumerate_full_group(q3));
  require(q3c.commuting_triple == 2 && q3c.s_coset == 0 && q3c.braid == 0,
          "Q3: expected exactly 2 type-II cliques and no maximal type-I");

  Engine q4(CoxeterSystem::preset("Q4"));
  auto q4c = cox::count_by_type(cox::enumerate_full_group(q4));
  require(q4c.s_coset == 16 && q4c.commuting_triple == 16 && q4c.braid == 0,
          "Q4: expected 16 type-I + 16 type-II");

  Engine d4(CoxeterSystem::preset("D4"));
  require(cox::count_by_type(cox::enumerate_full_group(d4)).commuting_triple >
              0,
          "D4: expected type-II cliques");
  for (const char* name : {"A4", "B4", "F4"}) {
    Engine eng(CoxeterSystem::preset(name));
    require(cox::count_by_type(cox::enumerate_full_group(eng))
                    .commuting_triple == 0,
            std::string(name) + ": expected no type-II cliques");
  }

  Engine i23(CoxeterSystem::preset("I2(3)"));
  auto i23all = cox::enumerate_full_group(i23);
  require(i23all.size() == 2, "I2(3): expected exactly 2 maximal cliques");
  for (const auto& cc : i23all)
    require(cc.types.size() == 1 && cc.types[0].tag == cox::CliqueType::Braid,
            "I2(3): expected both cliques to be type III");
  // S = {s, t} is not maximal: the clique through s has 3 members.
  auto through_s = cox::maximal_2cliques_at(i23, i23.gen(0));
  for (const auto& c : through_s)
    require(c.members.size() == 3, "I2(3): S should not be maximal");
}

void criterion3_word_problem() {
  const char* presets[] = {"A3",    "A4",    "A5",    "B3",    "B4",
                           "D4",    "D5",    "I2(2)", "I2(3)", "I2(4)",
                           "I2(5)", "I2(6)"};
  for (const char* name : presets) {
    Engine eng(CoxeterSystem::preset(name));
    auto model = *model_for(name);
    Ball group = cox::full_group(eng);
    oracle::Graph g = oracle::cayley_graph(model);
    require(group.size() == g.vertices.size(),
            std::string(name) + ": group order mismatch");

    // The canonical-word evaluation is a bijection, and lengths match the
    // oracle's Cayley distance from the identity.
    auto from_id = oracle::bfs_distances(g, 0);
    std::vector<int> image_index(group.size());
    std::set<int> seen;
    for (std::size_t i = 0; i < group.size(); ++i) {
      int idx = g.index.at(
          testutil::eval_in_model(model, eng.word(group.vertices[i])));
      image_index[i] = idx;
      seen.insert(idx);
      require(eng.length(group.vertices[i]) == from_id[idx],
              std::string(name) + ": length mismatch");
    }
    require(seen.size() == group.size(),
            std::string(name) + ": not a bijection onto the oracle group");

    // All-pairs distances.
    for (std::size_t i = 0; i < group.size(); ++i) {
      auto dist = oracle::bfs_distances(g, image_index[i]);
      for (std::size_t j = 0; j < group.size(); ++j)
        require(eng.distance(group.vertices[i], group.vertices[j]) ==
                    dist[image_index[j]],
                std::string(name) + ": distance mismatch");
    }
  }
}

void criterion4_exchange() {
  const char* presets[] = {"A3", "A5", "B4",      "D4", "F4",
                           "H3", "H4", "I2(inf)", "Atilde2", "U3"};
  int cases = 0;
  for (const char* name : presets) {
    Engine eng(CoxeterSystem::preset(name));
    for (int done = 0; done < 1001;) {
      Elem w = eng.intern(testutil::random_word(eng.rank(), 12));
      if (w == eng.identity()) continue;
      ++done;
      cox::Word expr = testutil::random_reduced_expression(eng, w);
      require(eng.intern(expr) == w, "random reduced expression is wrong");
      std::vector<int> descents;
      for (int s = 0; s < eng.rank(); ++s)
        if (eng.is_left_descent(s, w)) descents.push_back(s);
      int s = descents[testutil::uniform(
          0, static_cast<int>(descents.size()) - 1)];
      int k = eng.exchange_index(expr, s);
      cox::Word deleted = expr;
      deleted.erase(deleted.begin() + k);
      // Deletion identity s w = (expr with letter k removed), by
      // multiplication.
      require(eng.intern(deleted) == eng.mul_gen(s, w),
              "exchange deletion identity failed");
      ++cases;
    }
  }
  require(cases >= 10000, "fewer than 10000 exchange cases exercised");
}

void criterion5_lemmas() {
  for (const char* name : {"A5", "D4"}) {
    Engine eng(CoxeterSystem::preset(name));
    Ball group = cox::full_group(eng);
    const int n = eng.rank();
    std::vector<Elem> gens;
    for (int s = 0; s < n; ++s) gens.push_back(eng.gen(s));

    for (Elem u : group.vertices) {
      if (std::find(gens.begin(), gens.end(), u) != gens.end()) continue;
      std::vector<int> adj;
      for (int s = 0; s < n; ++s)
        if (eng.distance(u, gens[s]) == 2) adj.push_back(s);

      // Lemma 1: u outside S 2-adjacent to three generators forces a
      // mutually commuting triple with u = s s' s''.
      for (std::size_t i = 0; i < adj.size(); ++i)
        for (std::size_t j = i + 1; j < adj.size(); ++j)
          for (std::size_t k = j + 1; k < adj.size(); ++k) {
            int s = adj[i], sp = adj[j], spp = adj[k];
            require(eng.sys().commute(s, sp) && eng.sys().commute(s, spp) &&
                        eng.sys().commute(sp, spp),
                    std::string(name) + ": Lemma 1 commuting part failed");
            require(u == eng.intern({s, sp, spp}),
                    std::string(name) + ": Lemma 1 product part failed");
          }

      // Lemma 2: for each 2-adjacent pair, braid form or commuting form.
      for (std::size_t i = 0; i < adj.size(); ++i)
        for (std::size_t j = i + 1; j < adj.size(); ++j) {
          int s = adj[i], sp = adj[j];
          bool braid_form = eng.sys().bond(s, sp) == 3 &&
                            u == eng.intern({s, sp, s});
          bool commuting_form = false;
          if (eng.sys().commute(s, sp))
            for (int spp = 0; spp < n && !commuting_form; ++spp)
              if (spp != s && spp != sp && u == eng.intern({spp, sp, s}))
                commuting_form = true;
          require(braid_form || commuting_form,
                  std::string(name) + ": Lemma 2 alternatives failed");
        }
    }

    // Commuting implications for all ordered triples of distinct generators.
    for (int s = 0; s < n; ++s)
      for (int sp = 0; sp < n; ++sp)
        for (int spp = 0; spp < n; ++spp) {
          if (s == sp || s == spp || sp == spp) continue;
          if (eng.intern({spp, sp, s}) == eng.intern({s, spp, sp}))
            require(eng.sys().commute(s, sp),
                    "s'' s' s = s s'' s' must force s, s' commuting");
          if (eng.intern({sp, spp, s}) == eng.intern({spp, s, sp}))
            require(eng.sys().commute(s, sp),
                    "s' s'' s = s'' s s' must force s, s' commuting");
          if (eng.intern({sp, spp, s}) == eng.intern({s, spp, sp}))
            require(eng.sys().commute(s, sp) && eng.sys().commute(s, spp) &&
                        eng.sys().commute(sp, spp),
                    "s' s'' s = s s'' s' must force mutual commuting");
        }
  }
}

void criterion6_corollary1() {
  auto start = std::chrono::steady_clock::now();

  Engine eng(CoxeterSystem::preset("A5"));
  Ball group = cox::full_group(eng);
  cox::CayleyAutomorphism reversal =
      cox::diagram_automorphism(eng, group, {4, 3, 2, 1, 0});

  std::vector<Elem> evens;
  for (Elem w : group.vertices)
    if (eng.parity(w) == 2) evens.push_back(w);

  for (int trial = 0; trial < 20; ++trial) {
    Elem w = evens[testutil::uniform(0, static_cast<int>(evens.size()) - 1)];
    cox::CayleyAutomorphism f = cox::compose(
        eng, cox::right_multiplication(eng, group, w), reversal);
    cox::VertexMap half = cox::restrict_to_parity(eng, f, 1);
    cox::CayleyAutomorphism back =
        cox::extend_half_automorphism(eng, group, half);
    require(back == f, "extension did not reproduce the automorphism");
  }

  auto elapsed = std::chrono::duration_cast<std::chrono::seconds>(
                     std::chrono::steady_clock::now() - start)
                     .count();
  require(elapsed < 60, "Corollary 1 runs exceeded one minute");

  // The rank-4 half-cube counterexample: the witness automorphism of
  // Gamma_1 does not extend.
  Engine q4(CoxeterSystem::preset("Q4"));
  Ball q4g = cox::full_group(q4);
  cox::VertexMap witness = cox::halfcube4_witness(q4, q4g);
  require(cox::is_half_isomorphism(q4, q4g, witness),
          "Q4 witness is not a half-graph automorphism");
  bool threw = false;
  try {
    cox::extend_half_automorphism(q4, q4g, witness, true);
  } catch (const cox::NotExtendable&) {
    threw = true;
  }
  require(threw, "Q4 witness unexpectedly extended");
}

void criterion7_corollary2() {
  Engine eng(CoxeterSystem::preset("A5"));
  Ball group = cox::full_group(eng);
  Elem w = eng.intern({0, 1});
  Elem wp = eng.intern({3, 4});
  require(w != wp && eng.parity(w) == 2 && eng.parity(wp) == 2,
          "bad translation choices");

  std::vector<std::pair<Elem, Elem>> patched;
  for (Elem v : group.vertices)
    patched.emplace_back(v, eng.mul(v, eng.parity(v) == 1 ? w : wp));

  // decompose validates the distance-2 hypothesis internally.
  cox::Decomposition d =
      cox::decompose_distance2_bijection(eng, group, patched);
  require(!d.swapped, "patched map should preserve the parity classes");
  require(d.f1 == cox::right_multiplication(eng, group, w),
          "f1 is not R_w");
  require(d.f2 == cox::right_multiplication(eng, group, wp),
          "f2 is not R_w'");
  require(!d.is_automorphism, "f1 != f2 must be reported");
  require(!cox::is_cayley_automorphism(eng, group, patched),
          "patched map must not be a Cayley automorphism");
}

void criterion8_parity() {
  const char* presets[] = {"I2(2)", "I2(3)", "I2(4)", "I2(5)", "I2(6)",
                           "A3",    "B3",    "H3",    "A4",    "B4",
                           "D4",    "F4",    "A5",    "D5",    "B5",
                           "Q3",    "Q4",    "Q5"};
  for (const char* name : presets) {
    Engine eng(CoxeterSystem::preset(name));
    Ball group = cox::full_group(eng);

    // Distance parity law: d(u, v) is odd iff u, v lie in different
    // parity classes.
    for (std::size_t i = 0; i < group.size(); ++i)
      for (std::size_t j = i + 1; j < group.size(); ++j) {
        Elem u = group.vertices[i], v = group.vertices[j];
        bool odd = eng.distance(u, v) % 2 == 1;
        require(odd == (eng.parity(u) != eng.parity(v)),
                std::string(name) + ": distance parity law failed");
      }

    // W2 is a subgroup: closed under products and inverses.
    std::vector<Elem> evens;
    for (Elem v : group.vertices)
      if (eng.parity(v) == 2) evens.push_back(v);
    for (Elem a : evens) {
      require(eng.parity(eng.inverse(a)) == 2,
              std::string(name) + ": W2 not closed under inverses");
      for (Elem b : evens)
        require(eng.parity(eng.mul(a, b)) == 2,
                std::string(name) + ": W2 not closed under products");
    }

    // The Cayley graph itself is triangle-free: maximal cliques are edges.
    for (auto& clique : oracle::maximal_cliques(group.adj))
      require(clique.size() == 2,
              std::string(name) + ": Cayley clique that is not an edge");
  }
}

std::string run_command(const std::string& cmd, int& status) {
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) throw std::runtime_error("popen failed: " + cmd);
  std::string out;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  status = pclose(pipe);
  return out;
}

void criterion9_determinism(const std::string& coxtool) {
  const std::string commands[] = {
      coxtool + " presets",
      coxtool + " ball --group A3 --radius 3 --format json",
      coxtool + " ball --group 'I2(inf)' --radius 5 --format dot",
      coxtool + " halfgraph --group Q4 --parity 1 --format dot",
      coxtool + " halfgraph --group B3 --parity 2 --format json",
      coxtool + " cliques --group D4 --format json",
      coxtool + " cliques --group Atilde2 --radius 5 --format text",
      coxtool + " verify --group B4",
      coxtool + " distance --group B4 --from 's1 s2 s3' --to 's4'",
  };
  for (const std::string& cmd : commands) {
    int status1 = 0, status2 = 0;
    std::string first = run_command(cmd + " 2>&1", status1);
    std::string second = run_command(cmd + " 2>&1", status2);
    require(status1 == 0, "command failed: " + cmd + "\n" + first);
    require(status1 == status2 && first == second,
            "non-deterministic output: " + cmd);
    require(!first.empty(), "empty output: " + cmd);
  }
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: acceptance <path-to-coxtool>" << std::endl;
    return 2;
  }
  const std::string coxtool = std::string("'") + argv[1] + "'";

  run_criterion(1, "Theorem 1 exhaustive check over the corpus",
                criterion1_theorem1);
  run_criterion(2, "clique counting checks", criterion2_counts);
  run_criterion(3, "word-problem equivalence with permutation oracles",
                criterion3_word_problem);
  run_criterion(4, "exchange-condition property suite (>= 10000 cases)",
                criterion4_exchange);
  run_criterion(5, "Lemma 1 / Lemma 2 and commuting implications",
                criterion5_lemmas);
  run_criterion(6, "half-automorphism extension (Corollary 1)",
                criterion6_corollary1);
  run_criterion(7, "distance-2 bijection decomposition (Corollary 2)",
                criterion7_corollary2);
  run_criterion(8, "parity suite on all finite corpus presets",
                criterion8_parity);
  run_criterion(9, "CLI determinism",
                [&] { criterion9_determinism(coxtool); });

  if (g_failures == 0) {
    std::cout << "all criteria passed" << std::endl;
    return 0;
  }
  std::cout << g_failures << " criteria failed" << std::endl;
  return 1;
}
