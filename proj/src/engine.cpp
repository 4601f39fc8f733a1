#include "coxeter/engine.hpp"

#include <algorithm>
#include <sstream>

namespace cox {

bool shortlex_less(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

std::size_t Engine::WordHash::operator()(const Word& w) const {
  std::size_t h = 1469598103934665603ull;
  for (int x : w) {
    h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull;
    h *= 1099511628211ull;
  }
  return h;
}

Engine::Engine(CoxeterSystem sys) : sys_(std::move(sys)) {
  words_.push_back({});
  index_.emplace(Word{}, 0);
  gen_mul_.push_back(std::vector<Elem>(sys_.rank(), -1));
  inv_.push_back(0);
}

void Engine::reflect(int t, RootVector& v) const {
  // sigma_t(v) = v - 2 B(alpha_t, v) alpha_t: only the t coordinate moves.
  FieldElement dot;
  for (int u = 0; u < rank(); ++u) {
    if (v[u].is_zero()) continue;
    dot += sys_.bilinear(t, u) * v[u];
  }
  v[t] -= (dot + dot);
}

RootVector Engine::root_through(const Word& w, int s) const {
  RootVector v(rank());
  v[s] = FieldElement(1);
  for (int t : w) reflect(t, v);
  return v;
}

int Engine::try_exchange(const Word& reduced, int s) const {
  RootVector v(rank());
  v[s] = FieldElement(1);
  for (int i = 0; i < static_cast<int>(reduced.size()); ++i) {
    const int t = reduced[i];
    // v == alpha_t here means the prefix conjugates s onto t, i.e. letter i
    // is the one the exchange condition deletes.
    bool is_alpha_t = true;
    for (int u = 0; u < rank() && is_alpha_t; ++u) {
      if (u == t)
        is_alpha_t = v[u] == FieldElement(1);
      else
        is_alpha_t = v[u].is_zero();
    }
    if (is_alpha_t) return i;
    reflect(t, v);
  }
  return -1;
}

int Engine::exchange_index(const Word& reduced, int s) const {
  int k = try_exchange(reduced, s);
  if (k < 0)
    throw std::invalid_argument(
        "exchange_index: generator is not a left descent");
  return k;
}

Word Engine::canonicalize_reduced(Word w) const {
  Word out;
  out.reserve(w.size());
  while (!w.empty()) {
    Word letters = w;
    std::sort(letters.begin(), letters.end());
    letters.erase(std::unique(letters.begin(), letters.end()), letters.end());
    bool found = false;
    for (int s : letters) {
      int k = try_exchange(w, s);
      if (k >= 0) {
        out.push_back(s);
        w.erase(w.begin() + k);
        found = true;
        break;
      }
    }
    if (!found)
      throw std::logic_error("canonicalize_reduced: no left descent found");
  }
  return out;
}

Elem Engine::intern_canonical(Word w) {
  auto it = index_.find(w);
  if (it != index_.end()) return it->second;
  Elem id = static_cast<Elem>(words_.size());
  index_.emplace(w, id);
  words_.push_back(std::move(w));
  gen_mul_.push_back(std::vector<Elem>(rank(), -1));
  inv_.push_back(-1);
  return id;
}

Elem Engine::mul_gen(int s, Elem w) {
  Elem cached = gen_mul_[w][s];
  if (cached >= 0) return cached;
  const Word& cur = words_[w];
  Word res;
  int k = try_exchange(cur, s);
  if (k >= 0) {
    res = cur;
    res.erase(res.begin() + k);
    // Deleting the first letter of a canonical word leaves a canonical word.
    if (!(k == 0 && cur[0] == s)) res = canonicalize_reduced(std::move(res));
  } else {
    res.reserve(cur.size() + 1);
    res.push_back(s);
    res.insert(res.end(), cur.begin(), cur.end());
    // Canonical iff s is the smallest left descent of the product.
    for (int t = 0; t < s; ++t) {
      if (try_exchange(res, t) >= 0) {
        res = canonicalize_reduced(std::move(res));
        break;
      }
    }
  }
  Elem id = intern_canonical(std::move(res));
  gen_mul_[w][s] = id;
  gen_mul_[id][s] = w;
  return id;
}

Elem Engine::intern(const Word& letters) {
  Elem e = 0;
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
    if (*it < 0 || *it >= rank())
      throw std::invalid_argument("intern: generator index out of range");
    e = mul_gen(*it, e);
  }
  return e;
}

Elem Engine::mul(Elem w, Elem v) {
  const Word lhs = words_[w];
  Elem cur = v;
  for (auto it = lhs.rbegin(); it != lhs.rend(); ++it) cur = mul_gen(*it, cur);
  return cur;
}

Elem Engine::inverse(Elem w) {
  Elem cached = inv_[w];
  if (cached >= 0) return cached;
  Word rev = words_[w];
  std::reverse(rev.begin(), rev.end());
  Elem id = intern_canonical(canonicalize_reduced(std::move(rev)));
  inv_[w] = id;
  inv_[id] = w;
  return id;
}

int Engine::distance(Elem w, Elem v) { return length(mul(w, inverse(v))); }

std::vector<int> Engine::support(Elem w) const {
  std::vector<int> s = words_[w];
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

Elem Engine::braid_element(int s, int t) {
  if (sys_.bond(s, t) != 3)
    throw std::invalid_argument("braid_element: requires m(s,t) = 3");
  return intern({s, t, s});
}

std::vector<Elem> Engine::two_neighbors(Elem u) {
  std::vector<Elem> out;
  for (int t = 0; t < rank(); ++t) {
    Elem tu = mul_gen(t, u);
    for (int s = 0; s < rank(); ++s) {
      if (s == t) continue;
      out.push_back(mul_gen(s, tu));
    }
  }
  std::sort(out.begin(), out.end(),
            [&](Elem a, Elem b) { return shortlex(a, b); });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::string Engine::to_string(Elem e) const {
  const Word& w = words_[e];
  if (w.empty()) return "e";
  std::ostringstream os;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) os << ' ';
    os << sys_.name(w[i]);
  }
  return os.str();
}

Word Engine::parse_word(const std::string& text) const {
  std::vector<std::string> toks;
  std::istringstream is(text);
  std::string tok;
  while (is >> tok) toks.push_back(tok);
  if (toks.size() == 1 && toks[0] == "e") return {};
  Word w;
  for (const auto& t : toks) {
    int s = sys_.index_of(t);
    if (s < 0) throw ParseError("unknown generator '" + t + "'");
    w.push_back(s);
  }
  return w;
}

}  // namespace cox
