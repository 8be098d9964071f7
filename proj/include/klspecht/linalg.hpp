#pragma once

// Exact linear algebra over A = Z[v, v^-1] for coordinate vectors in a free
// A-module (typically coordinates in the T- or C-basis).

#include <cstdint>
#include <optional>
#include <vector>

#include "klspecht/ring.hpp"

namespace klspecht {

using Vector = std::vector<LaurentPoly>;

/// Rank of the rows after substituting v = point and reducing modulo prime.
/// A lower bound for the rank over A; equal to it for all but finitely many points.
std::size_t rank_mod_prime(const std::vector<Vector>& rows, std::uint64_t point, std::uint64_t prime);

/// Rank over the fraction field of A by fraction-free (Bareiss) elimination.
std::size_t exact_rank(const std::vector<Vector>& rows);

/// Determinant of a square matrix over A (Bareiss).  Throws std::invalid_argument if not square.
LaurentPoly determinant(std::vector<Vector> matrix);

/// True iff the rows are A-linearly independent.  A full rank at a modular
/// evaluation point settles it; otherwise the exact rank decides.
bool linearly_independent(const std::vector<Vector>& rows);

/// Coefficients c with sum_i c_i rows[i] = target, all c_i in A, for
/// independent rows.  Returns nullopt if target is not in the A-span.
std::optional<std::vector<LaurentPoly>> solve_in_span(const std::vector<Vector>& rows, const Vector& target);

}  // namespace klspecht
