#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "coxeter/system.hpp"

namespace cox {

/// Generator indices of an expression, leftmost letter first.
using Word = std::vector<int>;

/// Interned element handle. 0 is always the identity. Handles are only
/// meaningful for the Engine that produced them.
using Elem = std::int32_t;

/// ShortLex: shorter words first, then lexicographic on generator indices.
bool shortlex_less(const Word& a, const Word& b);

/// Word problem engine for one Coxeter system.
///
/// Elements are interned by their canonical reduced word: the
/// lexicographically least reduced expression, computed greedily by
/// repeatedly peeling the smallest left descent. Two handles are equal iff
/// the group elements are equal. Descent tests go through the geometric
/// representation (s is a left descent of w iff w^{-1}(alpha_s) is a
/// negative root); generator products are memoized.
class Engine {
public:
  explicit Engine(CoxeterSystem sys);

  const CoxeterSystem& sys() const { return sys_; }
  int rank() const { return sys_.rank(); }

  Elem identity() const { return 0; }
  Elem gen(int s) { return mul_gen(s, 0); }

  /// Canonicalizes an arbitrary word (need not be reduced).
  Elem intern(const Word& letters);

  const Word& word(Elem e) const { return words_[e]; }
  int length(Elem e) const { return static_cast<int>(words_[e].size()); }

  /// s * w (left Cayley neighbor).
  Elem mul_gen(int s, Elem w);

  /// Group product w * v.
  Elem mul(Elem w, Elem v);

  Elem inverse(Elem w);

  /// d(w, v) = l(w v^{-1}).
  int distance(Elem w, Elem v);

  /// True iff l(sw) = l(w) - 1.
  bool is_left_descent(int s, Elem w) const {
    return try_exchange(words_[w], s) >= 0;
  }

  /// Exchange condition: for a reduced word and a left descent s, the
  /// smallest index k (0-based) with s*w = word minus letter k.
  /// Throws std::invalid_argument if s is not a left descent.
  int exchange_index(const Word& reduced, int s) const;

  /// Letter set of the canonical word, sorted.
  std::vector<int> support(Elem w) const;

  /// w(s,t) = sts = tst for m(s,t) = 3. Throws std::invalid_argument else.
  Elem braid_element(int s, int t);

  /// { v : d(v, u) = 2 } = { s t u : s != t }, ShortLex sorted.
  std::vector<Elem> two_neighbors(Elem u);

  /// w^{-1}(alpha_s) over the simple-root basis.
  RootVector root_through(const Word& w, int s) const;

  bool shortlex(Elem a, Elem b) const {
    return shortlex_less(words_[a], words_[b]);
  }

  /// Parity class: 1 if l(w) odd, 2 if even.
  int parity(Elem w) const { return length(w) % 2 == 1 ? 1 : 2; }

  /// Number of distinct elements seen so far.
  std::size_t interned() const { return words_.size(); }

  std::string to_string(Elem e) const;        // space-separated names, "e"
  Word parse_word(const std::string& text) const;  // inverse of to_string

private:
  struct WordHash {
    std::size_t operator()(const Word& w) const;
  };

  // Returns the exchange index if s is a left descent of the reduced word,
  // -1 otherwise.
  int try_exchange(const Word& reduced, int s) const;

  void reflect(int t, RootVector& v) const;   // v <- sigma_t(v)
  Word canonicalize_reduced(Word w) const;
  Elem intern_canonical(Word w);

  CoxeterSystem sys_;
  std::vector<Word> words_;
  std::unordered_map<Word, Elem, WordHash> index_;
  std::vector<std::vector<Elem>> gen_mul_;  // [elem][s], -1 when unknown
  std::vector<Elem> inv_;                   // -1 when unknown
};

}  // namespace cox
