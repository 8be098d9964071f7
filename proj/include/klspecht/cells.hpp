#pragma once

// Right cells of S_n under induction to S_{n+1} and restriction to S_n, and
// the cell-module filtrations built from them.

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "klspecht/hecke.hpp"
#include "klspecht/report.hpp"
#include "klspecht/tableaux.hpp"

namespace klspecht {

/// The right cell containing w: all elements with the same recording tableau, ascending.
std::vector<Permutation> right_cell_of(const Permutation& w);
/// Ascending group indices of a set of permutations of one rank.
std::vector<std::size_t> indices_of(const std::vector<Permutation>& elements);

struct CellFactor {
  Node corner;
  Tableau recording;                  // A_k
  std::vector<Permutation> cell;      // the right cell with recording tableau A_k, ascending
  Partition shape;
  std::optional<Permutation> d;       // d_k, restriction only
};

struct CellDecomposition {
  int source_rank = 0;
  Tableau source_recording;           // A
  std::vector<CellFactor> factors;    // one per corner, ascending node order
  Report checks;                      // union, disjointness and ordering claims
};

/// Outer corners k of the shape of the cell: C_k is the right cell of S_{n+1}
/// whose recording tableau is A with n+1 added at k.  Checks that C X' is the
/// disjoint union of the C_k and that k < k' implies shape(C_k') < shape(C_k).
CellDecomposition induce_cell(const std::vector<Permutation>& cell);

/// Inner corners k: reverse-insert from k out of A, ejecting i(k) from the
/// first row; d_k = x_{i(k)}^-1 and A_k = A' d_k.  Checks that the cell is the
/// disjoint union of the d_k C_k and that k < k' implies shape(C_k) < shape(C_k')
/// and d_k <= d_k'.
CellDecomposition restrict_cell(const std::vector<Permutation>& cell);

/// Matrix of right multiplication by T_s on the cell module S_C, in the basis
/// {C_u + M^_C : u in C}: entry [u][u'] is the coefficient of C_{u'} in C_u T_s.
using Matrix = std::vector<std::vector<LaurentPoly>>;
struct CellModule {
  int rank = 0;
  std::vector<std::size_t> cell;          // ascending indices
  std::vector<std::size_t> down_set;      // {z : z <=_R C}
  std::vector<std::size_t> strict_down_set;
  std::vector<Matrix> generators;         // index k-1 for s_k
  Report checks;                          // M_C and M^_C closed under every T_s
};
CellModule cell_module(int m, const std::vector<std::size_t>& cell);

/// Entry [i][j] is the coefficient of C_{image[j]} in C_{image[i]} T_s, s = s_k in S_m.
Matrix action_matrix(int m, int k, const std::vector<std::size_t>& image);

struct FactorLayer {
  Node corner;
  Partition shape;
  std::vector<Permutation> cell;          // C_k (a cell of the rank the factor lives in)
  std::optional<Permutation> d;           // d_k for restrictions
  std::vector<std::size_t> span;          // spanning set of L_j (ambient indices), ascending
  bool closed = false;                    // L_j closed under the acting generators
  bool isomorphic = false;                // factor matrices equal those of S_{C_k}
  std::vector<Matrix> matrices;           // factor matrices, one per acting generator
};

struct FiltrationReport {
  std::string kind;                       // induce-cell, restrict-cell, induce-specht, restrict-specht
  int ambient_rank = 0;
  Partition source_shape;
  std::string lambda, mu;                 // Specht filtrations only
  std::size_t basis_size = 0;             // size of the module basis being filtered
  std::vector<FactorLayer> factors;       // in filtration order
  Report checks;
  bool verified() const { return checks.passed(); }
};

/// The chain L_0 <= L_1 <= ... <= L_p of the induced cell module, with
/// L_j = <C_w : w in D u C_1 u ... u C_j>; the C_j are the factors of
/// induce_cell taken in decreasing node order.
FiltrationReport induced_cell_filtration(const std::vector<Permutation>& cell);
/// The restricted chain with L_j = <C_w : w in D u d_1 C_1 u ... u d_j C_j>,
/// D = {z : z <_R C}, factors in increasing node order, acted on by S_n only.
FiltrationReport restricted_cell_filtration(const std::vector<Permutation>& cell);

nlohmann::json to_json(const CellDecomposition& d);
nlohmann::json to_json(const FiltrationReport& r);

}  // namespace klspecht
