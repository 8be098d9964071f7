#pragma once

// The symmetric group S_m as a Coxeter system.
//
// Permutations act on the right: the one-line form lists 1w, 2w, ..., mw, and
// a product ab applies a first, then b.  So (ab)[i] = b[a[i]], left
// multiplication by s_k swaps positions k and k+1 of the one-line form, and
// right multiplication by s_k swaps the values k and k+1.

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "klspecht/composition.hpp"

namespace klspecht {

/// Largest rank accepted without an explicit override.
inline constexpr int kDefaultRankBound = 8;

class Permutation {
 public:
  Permutation() = default;
  /// One-line form with values 1..m.  Throws std::invalid_argument if it is not a permutation.
  explicit Permutation(std::vector<int> one_line);

  static Permutation identity(int m);
  /// s_i = (i, i+1), 1 <= i < m.
  static Permutation generator(int m, int i);
  static Permutation longest(int m);
  /// s_{w[0]} s_{w[1]} ... in S_m.
  static Permutation from_word(int m, const std::vector<int>& word);
  /// Parses "2,3,1"; "e" is the identity of the given rank.
  static Permutation parse(std::string_view text, int m = -1);

  int rank() const { return static_cast<int>(images_.size()); }
  /// Image of i (1-based).
  int operator()(int i) const { return images_[i - 1]; }
  const std::vector<int>& one_line() const { return images_; }

  Permutation inverse() const;
  int length() const;
  /// Lexicographically first reduced word (greedy on the leftmost descent).
  std::vector<int> reduced_word() const;
  /// s_k with l(s_k w) < l(w): positions k, k+1 form a descent.
  bool is_left_descent(int k) const { return images_[k - 1] > images_[k]; }
  /// s_k with l(w s_k) < l(w): value k+1 occurs before value k.
  bool is_right_descent(int k) const;
  /// Extends by fixed points to rank m.
  Permutation embedded(int m) const;
  /// True if w fixes every point above k.
  bool fixes_above(int k) const;
  /// Restriction to 1..k; requires fixes_above(k).
  Permutation restricted(int k) const;

  std::string to_string() const;
  std::string word_string() const;

  friend Permutation operator*(const Permutation& a, const Permutation& b);
  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

/// compose(a, b) = ab: apply a, then b.  Throws on rank mismatch.
Permutation compose(const Permutation& a, const Permutation& b);

/// Strong Bruhat order via the tableau criterion.
bool bruhat_leq(const Permutation& x, const Permutation& y);

/// Every element of S_m with lexicographic index tables for fast products.
class SymmetricGroup {
 public:
  /// Shared, lazily built instance; safe for concurrent callers.
  static const SymmetricGroup& get(int m);

  int rank() const { return m_; }
  std::size_t size() const { return elements_.size(); }
  const Permutation& element(std::size_t idx) const { return elements_[idx]; }
  const std::vector<Permutation>& elements() const { return elements_; }
  std::size_t index_of(const Permutation& w) const;

  int length(std::size_t idx) const { return lengths_[idx]; }
  std::size_t inverse(std::size_t idx) const { return inverses_[idx]; }
  /// Index of w s_k, k in 1..m-1.
  std::size_t right_gen(std::size_t idx, int k) const { return right_[idx * gens() + (k - 1)]; }
  /// Index of s_k w.
  std::size_t left_gen(std::size_t idx, int k) const { return left_[idx * gens() + (k - 1)]; }
  std::size_t multiply(std::size_t a, std::size_t b) const;
  std::size_t identity() const { return 0; }
  std::size_t longest() const { return elements_.size() - 1; }
  int gens() const { return m_ > 0 ? m_ - 1 : 0; }
  /// Element indices sorted by length (ties by index).
  const std::vector<std::size_t>& by_length() const { return by_length_; }
  /// Bruhat comparison by index, memoized as bit rows.
  bool bruhat_leq(std::size_t x, std::size_t y) const;

 private:
  explicit SymmetricGroup(int m);
  int m_;
  std::vector<Permutation> elements_;
  std::vector<int> lengths_;
  std::vector<std::size_t> inverses_, right_, left_, by_length_;
  std::vector<std::uint64_t> bruhat_bits_;
  std::size_t words_per_row_ = 0;
};

/// Lexicographic rank of a permutation among all of S_m.
std::size_t lex_rank(const Permutation& w);

/// Generator index sets are subsets of {1, ..., m-1}.
using GeneratorSet = std::vector<int>;

struct ParabolicData {
  int m = 0;
  GeneratorSet J;
  Permutation longest;               // w_J
  std::vector<Permutation> subgroup; // W_J, lexicographic
  std::vector<Permutation> reps;     // distinguished right coset representatives, lexicographic
};

/// Cached per (m, J).  Throws std::invalid_argument if J is not inside 1..m-1.
const ParabolicData& parabolic(int m, const GeneratorSet& J);

/// Every w = u x with u in W_J, x in reps; returns (u, x).
std::pair<Permutation, Permutation> parabolic_factor(const ParabolicData& pd, const Permutation& w);

/// J(mu): all generators except the partial sums of mu.
GeneratorSet j_of_composition(const Composition& mu);

/// All d with e = d u and l(e) = l(d) + l(u), sorted lexicographically.
std::vector<Permutation> prefixes(const Permutation& e);

/// x_1, ..., x_{n+1} in S_{n+1}, x_i = s_n s_{n-1} ... s_i (x_{n+1} = 1).
std::vector<Permutation> coset_reps_x_prime(int n);
/// Inverses of coset_reps_x_prime(n): the distinguished left representatives.
std::vector<Permutation> coset_reps_x_star(int n);

/// Throws std::out_of_range when m exceeds the bound and force is off.
void check_rank(int m, bool force = false);

}  // namespace klspecht
