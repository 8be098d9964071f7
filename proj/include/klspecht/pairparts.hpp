#pragma once

// Sequences of type mu, their quality and sharp partitions, c-semistandard
// tableaux, and the unions of left cells L(mu; lambda) and L(lambda, mu).

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "klspecht/report.hpp"
#include "klspecht/tableaux.hpp"

namespace klspecht {

using Sequence = std::vector<int>;

/// The decreasing run mu_1+...+mu_i, ..., mu_1+...+mu_{i-1}+1.  Throws std::out_of_range unless 1 <= i <= r.
std::vector<int> d_mu(const Composition& mu, int i);
/// Every sequence of type mu, in lexicographic order.
std::vector<Sequence> sequences_of_type(const Composition& mu);
/// True if symbol i occurs mu_i times for every i, and nothing else occurs.
bool has_type(const Sequence& t, const Composition& mu);
/// Replaces the i's of t, left to right, by the members of d_mu(i).  Throws unless t has type mu.
Permutation w_of_sequence(const Sequence& t, const Composition& mu);
/// Inverse of w_of_sequence on L(mu): position p gets the i with w(p) in d_mu(i).
/// Throws std::invalid_argument if the runs d_mu(i) do not occur in decreasing order.
Sequence sequence_of_w(const Permutation& w, const Composition& mu);

struct Quality {
  std::vector<bool> good;  // per position
  Partition sharp;         // number of good i's, trailing zeros dropped
};
/// All 1's are good; an i+1 is good iff the previous good i's outnumber the previous good (i+1)'s.
Quality quality_and_sharp(const Sequence& t);

/// a_i <= b_i for every i, the shorter padded with zeros.
bool preceq(const std::vector<int>& a, const std::vector<int>& b);
/// lambda_{i+1} <= lambda_i <= mu_i for every i (lambda may be empty).
bool is_pair_of_partitions(const Partition& lambda, const Composition& mu);
/// Every lambda forming a pair of partitions with mu, in lexicographic order of parts.
std::vector<Partition> pair_partners(const Composition& mu);

/// Rows strictly increasing, columns weakly increasing.
bool is_c_semistandard(const Tableau& T);
/// All c-semistandard tableaux of the given shape and type, sorted.
std::vector<Tableau> c_semistandard_tableaux(const Partition& shape, const Composition& mu);
/// c-semistandard tableaux of type mu over every shape of |mu|.
std::vector<Tableau> c_semistandard_tableaux(const Composition& mu);

struct WordAndP {
  Sequence word;     // columns left to right, each read bottom to top
  Permutation w;     // w(word)
  Tableau P;         // insertion tableau of w
  Tableau shortcut;  // T with the i's, bottom row first, replaced by d_mu(i)
};
/// Throws std::invalid_argument unless T is c-semistandard of type mu.
WordAndP word_and_ptableau(const Tableau& T, const Composition& mu);

/// L(mu) = {w : w <=_L w_J(mu)}, ascending group indices.
std::vector<std::size_t> l_mu(const Composition& mu);
/// {w(t) : sharp(t) = lambda}, ascending.
std::vector<std::size_t> l_mu_lambda(const Composition& mu, const Partition& lambda);
/// {w(t) : at least lambda_i good i's for every i}, ascending.
std::vector<std::size_t> l_lambda_mu(const Composition& mu, const Partition& lambda);
/// Left cells of S_m meeting the given set, as indices into CellStructure::left_cells().
std::vector<std::size_t> left_cells_meeting(int m, const std::vector<std::size_t>& set);

struct PairsReport {
  Composition mu;
  std::optional<Partition> lambda;  // absent when the claim concerns mu alone
  bool experimental = false;
  Report report;
};
nlohmann::json to_json(const PairsReport& r);

/// |R(mu)| = m!/prod mu_i! = |L(mu)| = |X_J(mu)| and w_of_sequence is a bijection onto L(mu).
PairsReport verify_sequence_bijection(const Composition& mu);
/// Left cells of shape lambda in L(mu) are as many as c-semistandard lambda-tableaux of
/// type mu; the P_T exhaust the insertion tableaux of L(mu), injectively; the shortcut
/// for P_T agrees with insertion.
PairsReport verify_kostka_cell_count(const Composition& mu, const Partition& lambda);
/// sharp(t) = lambda iff column i of P(w(t)) holds exactly lambda_i members of d_mu(i),
/// and then they are the smallest ones, in the top lambda_i rows.
PairsReport verify_sharp_columns(const Composition& mu);
/// L(mu; lambda) and L(lambda, mu) are unions of left cells, and L(lambda, mu) is the
/// union of L(mu; nu) over lambda <= nu <= mu.
PairsReport verify_cell_unions(const Composition& mu, const Partition& lambda);
/// sharp(t) <= sharp(t') for each prefix d of e in X_J(mu), and
/// {e : e^-1 w_J in L(lambda, mu)} is prefix-closed for every partner lambda.
PairsReport verify_prefix_monotonicity(const Composition& mu);
/// For a partition mu: L(mu, mu) is the left cell of w_J(mu).
PairsReport verify_full_pair(const Partition& mu);
/// For a partition mu ending in a part 1 with at least two parts: L(lambda, mu) = X* C,
/// lambda = mu without its last part, C the left cell of w_J(lambda) in S_{m-1}.
PairsReport verify_last_part_one(const Partition& mu);
/// Whether T1 = L(mu) minus L(lambda, mu) is closed downwards under <=_L.  Never asserted.
PairsReport explore_downward_closure(const Composition& mu, const Partition& lambda);

/// Every proven claim for every composition of m (and every partner lambda); one report per check.
std::vector<PairsReport> verify_all_pairs(int m);

}  // namespace klspecht
