#pragma once

// Specht modules S^lambda = x_lambda T_{w_E} C_{w_J(mu)} H with their C-basis,
// and the Specht filtrations of induced and restricted Specht modules.

#include <vector>

#include "klspecht/cells.hpp"
#include "klspecht/hecke.hpp"
#include "klspecht/report.hpp"
#include "klspecht/tableaux.hpp"

namespace klspecht {

/// x_lambda = sum_{w in W_J(lambda)} T_w in H(S_m), m = |lambda|.
HeckeElement x_element(const Composition& lambda);
/// y_lambda = sum_{w in W_J(lambda)} (-q)^(-l(w)) T_w.
HeckeElement y_element(const Composition& lambda);
/// x_lambda = q^(l(w_J)/2) C'_{w_J} and y_lambda = (-q^(-1/2))^l(w_J) C_{w_J}.
Report verify_young_normalizations(const Composition& lambda);

/// theta: h -> x_lambda T_{w_E} h on H(S_m), where x_lambda and w_E live in
/// S_{|lambda|} and are embedded when m is larger.
class SpechtMap {
 public:
  SpechtMap(const Composition& lambda, const Composition& mu, int m);
  int rank() const { return m_; }
  const Diagram& diagram() const { return E_; }
  const Permutation& w_E() const { return wE_; }
  /// The generator x_lambda T_{w_E}, T-basis.
  const HeckeElement& generator() const { return translates_.front(); }
  /// theta(C_w), T-basis.
  HeckeElement image_of_c(std::size_t w) const;

 private:
  int m_;
  Diagram E_;
  Permutation wE_;
  std::vector<HeckeElement> translates_;  // generator * T_x, by group index
};

struct SpechtModule {
  Composition lambda, mu;
  int rank = 0;
  Diagram E;
  Permutation w_E;
  Permutation w_J;                     // w_J(mu)
  std::vector<std::size_t> cell;       // {w : w ~_R w_J(mu)}, ascending indices
  std::vector<HeckeElement> basis;     // theta(C_w) for w in cell, T-basis
  Report checks;                       // size, independence, sampled kernel elements
};

/// Throws std::invalid_argument("lambda''=mu' required ...") unless lambda'' = mu'.
SpechtModule specht_basis(const Composition& lambda, const Composition& mu);

/// theta(C_z) = 0 for every z spanning the kernel: z <_R w_J(mu) in S_m, or
/// for induced = true, z = y x with y <_R w_J(mu) in S_m and x in X', in S_{m+1}.
Report verify_kernel(const Composition& lambda, const Composition& mu, bool induced);

/// Specht filtration of S^lambda H, lambda, mu compositions of n, in H(S_{n+1}).
FiltrationReport induced_specht_filtration(const Composition& lambda, const Composition& mu);
/// Specht filtration of S^lambda restricted to H(S_n), lambda, mu compositions of n+1.
FiltrationReport restricted_specht_filtration(const Composition& lambda, const Composition& mu);

/// Every pair (lambda, mu) of compositions of m with lambda'' = mu', lexicographic.
std::vector<std::pair<Composition, Composition>> admissible_pairs(int m);

}  // namespace klspecht
