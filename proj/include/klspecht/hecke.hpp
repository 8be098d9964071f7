#pragma once

// The Hecke algebra of S_m over A = Z[v, v^-1], v = q^(1/2).
//
// Elements are dense coordinate vectors indexed by the lexicographic index of
// SymmetricGroup::get(m), tagged with the basis they are written in.

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "klspecht/report.hpp"
#include "klspecht/ring.hpp"
#include "klspecht/symgroup.hpp"
#include "klspecht/tableaux.hpp"

namespace klspecht {

enum class Basis { T, Ttilde, C, Cprime };
std::string basis_name(Basis b);

class HeckeElement {
 public:
  HeckeElement() = default;
  /// The zero element of H(S_m), written in the given basis.
  HeckeElement(int m, Basis basis);
  static HeckeElement basis_element(int m, Basis basis, std::size_t w, LaurentPoly c = LaurentPoly(1));
  static HeckeElement basis_element(Basis basis, const Permutation& w, LaurentPoly c = LaurentPoly(1));

  int rank() const { return m_; }
  Basis basis() const { return basis_; }
  std::size_t dimension() const { return coeffs_.size(); }
  const LaurentPoly& operator[](std::size_t w) const { return coeffs_[w]; }
  LaurentPoly& operator[](std::size_t w) { return coeffs_[w]; }
  const LaurentPoly& coefficient(const Permutation& w) const;
  const std::vector<LaurentPoly>& coords() const { return coeffs_; }
  /// Indices with nonzero coefficient, ascending.
  std::vector<std::size_t> support() const;
  bool is_zero() const;

  HeckeElement& operator+=(const HeckeElement& o);
  HeckeElement& operator-=(const HeckeElement& o);
  /// this += c * o
  void add_scaled(const LaurentPoly& c, const HeckeElement& o);
  HeckeElement scaled(const LaurentPoly& c) const;
  friend HeckeElement operator+(HeckeElement a, const HeckeElement& b) { return a += b; }
  friend HeckeElement operator-(HeckeElement a, const HeckeElement& b) { return a -= b; }
  friend bool operator==(const HeckeElement&, const HeckeElement&) = default;

  /// "(coeff)*T[2,1,3] + ..." in index order; "0" for zero.
  std::string to_string() const;

 private:
  void require_compatible(const HeckeElement& o) const;
  int m_ = 0;
  Basis basis_ = Basis::T;
  std::vector<LaurentPoly> coeffs_;
};

/// h T_s for s = s_k, h in the T-basis.
HeckeElement right_multiply_generator(const HeckeElement& h, int k);
/// T_s h for s = s_k, h in the T-basis.
HeckeElement left_multiply_generator(const HeckeElement& h, int k);
/// g T_x for every x, indexed like the group.  g in the T-basis.
std::vector<HeckeElement> right_translates(const HeckeElement& g);
/// Product of two T-basis elements.  Throws on rank or basis mismatch.
HeckeElement t_multiply(const HeckeElement& a, const HeckeElement& b);

/// Kazhdan-Lusztig polynomials P_{x,y} of S_m, stored in units of v (so q^k
/// has exponent 2k).  P_{x,y} = 0 unless x <= y in the Bruhat order.
class KLTable {
 public:
  static constexpr int kFormatVersion = 1;

  /// Computes every P_{x,y} by the standard recursion on a right descent.
  static KLTable compute(int m);
  /// Reads a table written by to_json.  Throws std::invalid_argument on any inconsistency.
  static KLTable from_json(const nlohmann::json& j);

  int rank() const { return m_; }
  const LaurentPoly& P(std::size_t x, std::size_t y) const { return pool_[index_[x * n_ + y]]; }
  LaurentPoly P(const Permutation& x, const Permutation& y) const;
  /// Coefficient of q^((l(y)-l(x)-1)/2) in P_{x,y}; zero when the length difference is even.
  Integer mu(std::size_t x, std::size_t y) const;
  /// Every z < y with mu(z, y) != 0, ascending.
  const std::vector<std::pair<std::size_t, Integer>>& mu_list(std::size_t y) const { return mu_lists_[y]; }
  /// Number of distinct polynomials occurring in the table.
  std::size_t distinct_polynomials() const { return pool_.size(); }

  /// {"format_version", "m", "polys": [{"x", "y", "p"}]} with x <= y, lexicographic in (y, x).
  nlohmann::json to_json() const;

 private:
  friend class KLTableBuilder;
  KLTable() = default;
  void compute_mu_lists();
  int m_ = 0;
  std::size_t n_ = 0;
  std::vector<LaurentPoly> pool_;      // pool_[0] = 0, pool_[1] = 1
  std::vector<std::uint32_t> index_;   // x * n_ + y
  std::vector<std::vector<std::pair<std::size_t, Integer>>> mu_lists_;
};

/// In-memory table for rank m, computed on first use.
const KLTable& kl_table(int m);
/// As kl_table(m), but read from and written to cache_dir (created if
/// missing).  An unreadable or inconsistent cache file is recomputed.
const KLTable& kl_table(int m, const std::string& cache_dir);

/// C_y = sum_x (-1)^(l(y)-l(x)) q^(l(y)/2 - l(x)) P_{x,y}(q^-1) T_x.
HeckeElement c_basis_element(const Permutation& y, const KLTable& kl);
HeckeElement c_basis_element(std::size_t y, const KLTable& kl);
/// C'_y = q^(-l(y)/2) sum_x P_{x,y}(q) T_x.
HeckeElement cprime_basis_element(const Permutation& y, const KLTable& kl);
HeckeElement cprime_basis_element(std::size_t y, const KLTable& kl);

/// Rewrites h in the T-basis.
HeckeElement to_t_basis(const HeckeElement& h, const KLTable& kl);
/// Rewrites h in the target basis.
HeckeElement change_basis(const HeckeElement& h, Basis target, const KLTable& kl);

/// sum a_y T_y  ->  sum bar(a_y) (-q^-1)^l(y) T_y.  T-basis input.
HeckeElement j_involution(const HeckeElement& h);
/// sum a_y T_y  ->  sum bar(a_y) T_{y^-1}^-1.  T-basis input.
HeckeElement bar_involution(const HeckeElement& h);

/// One term c * B_x of an expansion.
struct ExpansionTerm {
  std::size_t index;
  LaurentPoly coeff;
  friend bool operator==(const ExpansionTerm&, const ExpansionTerm&) = default;
};
using Expansion = std::vector<ExpansionTerm>;

/// The coefficients alpha_{y,T_s,x} of C'_y T_s = sum_x alpha C'_x.
Expansion structure_constants_right(std::size_t y, int k, const KLTable& kl);
/// The same coefficients obtained by multiplying in the T-basis and converting back.
Expansion structure_constants_right_generic(std::size_t y, int k, const KLTable& kl);
/// lambda_{y,T_s,x} of C_y T_s = sum_x lambda C_x, from
/// lambda_{y,h,x} = (-1)^(l(x)-l(y)) bar(alpha_{y, j(h), x}).
Expansion c_structure_constants_right(std::size_t y, int k, const KLTable& kl);
Expansion c_structure_constants_right_generic(std::size_t y, int k, const KLTable& kl);

/// Memoized expansions of C'_y T_s and C_y T_s for every y and s of S_m.
class StructureConstants {
 public:
  static const StructureConstants& get(int m);
  int rank() const { return m_; }
  const Expansion& cprime(std::size_t y, int k) const { return cprime_[y * gens_ + (k - 1)]; }
  const Expansion& c(std::size_t y, int k) const { return c_[y * gens_ + (k - 1)]; }

 private:
  explicit StructureConstants(int m);
  int m_;
  std::size_t gens_;
  std::vector<Expansion> cprime_, c_;
};

/// Preorders and cells of S_m obtained from the relation y ->_s x
/// (alpha_{y,T_s,x} != 0).  Cells are lists of group indices, ascending, and
/// listed in order of their smallest element.
class CellStructure {
 public:
  static const CellStructure& get(int m);

  int rank() const { return m_; }
  bool leq_R(std::size_t x, std::size_t y) const { return bit(leqR_, x, y); }
  bool leq_L(std::size_t x, std::size_t y) const;
  bool leq_LR(std::size_t x, std::size_t y) const { return bit(leqLR_, x, y); }
  bool less_R(std::size_t x, std::size_t y) const { return leq_R(x, y) && !leq_R(y, x); }

  const std::vector<std::vector<std::size_t>>& right_cells() const { return right_; }
  const std::vector<std::vector<std::size_t>>& left_cells() const { return left_; }
  const std::vector<std::vector<std::size_t>>& two_sided_cells() const { return two_sided_; }
  std::size_t right_cell_of(std::size_t w) const { return right_id_[w]; }
  std::size_t left_cell_of(std::size_t w) const { return left_id_[w]; }
  std::size_t two_sided_cell_of(std::size_t w) const { return two_sided_id_[w]; }
  /// RS shape of the elements of a two-sided cell.
  Partition two_sided_shape(std::size_t id) const;

  /// {z : z <=_R w} and {z : z <_R w}, ascending.
  std::vector<std::size_t> down_set(std::size_t w) const;
  std::vector<std::size_t> strict_down_set(std::size_t w) const;

  nlohmann::json to_json() const;

 private:
  explicit CellStructure(int m);
  bool bit(const std::vector<std::uint64_t>& rows, std::size_t x, std::size_t y) const {
    return (rows[y * words_ + x / 64] >> (x % 64)) & 1U;
  }
  int m_;
  std::size_t n_, words_;
  std::vector<std::uint64_t> leqR_, leqLR_;  // row y holds {x : x <= y}
  std::vector<std::vector<std::size_t>> right_, left_, two_sided_;
  std::vector<std::size_t> right_id_, left_id_, two_sided_id_;
};

/// Cells read off the Robinson-Schensted correspondence: right cells are the
/// fibres of the recording tableau, left cells those of the insertion tableau,
/// two-sided cells those of the shape.  Same ordering conventions as CellStructure.
std::vector<std::vector<std::size_t>> rs_right_cells(int m);
std::vector<std::vector<std::size_t>> rs_left_cells(int m);
std::vector<std::vector<std::size_t>> rs_two_sided_cells(int m);

/// Constants of S_n agree with those of S_{n+1} on embedded elements; the
/// right preorder of S_n is the restriction of that of S_{n+1}; and x ~_LR y,
/// x <=_R y imply x ~_R y in S_{n+1}.
Report verify_parabolic_compatibility(int n);

/// For y in X*, v in S_n and each generator T_s of H(S_n): the expansion of
/// C'_{yv} T_s has leading block sum_u alpha_{v,s,u} C'_{yu} and a remainder
/// supported on xu with x < y, u <=_LR v in S_n, xu <=_R yv; the same holds for
/// C_{yv} T_s with lambda_{v,s,u} = (-1)^(l(u)-l(v)) bar(alpha_{v, j(T_s), u}).
Report verify_parabolic_expansion(int n);

}  // namespace klspecht
