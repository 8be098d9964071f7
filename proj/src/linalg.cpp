#include "klspecht/linalg.hpp"

#include <stdexcept>

namespace klspecht {

namespace {

constexpr std::uint64_t kPrime = 2305843009213693951ULL;  // 2^61 - 1
constexpr std::uint64_t kPoints[] = {1000003ULL, 982451653ULL, 2147483647ULL, 68718952447ULL};

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t p) {
  std::uint64_t r = 1, e = p - 2;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

std::size_t width(const std::vector<Vector>& rows) {
  std::size_t c = rows.empty() ? 0 : rows.front().size();
  for (const auto& r : rows)
    if (r.size() != c) throw std::invalid_argument("rows of different length");
  return c;
}

// Row echelon form modulo p; returns the pivot columns.
std::vector<std::size_t> pivots_mod_prime(const std::vector<Vector>& rows, std::uint64_t point, std::uint64_t p) {
  const std::size_t c = width(rows);
  std::vector<std::vector<std::uint64_t>> a(rows.size(), std::vector<std::uint64_t>(c));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < c; ++j) a[i][j] = rows[i][j].evaluate_mod(point, p);
  std::vector<std::size_t> piv;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < c && rank < a.size(); ++col) {
    std::size_t sel = rank;
    while (sel < a.size() && a[sel][col] == 0) ++sel;
    if (sel == a.size()) continue;
    std::swap(a[sel], a[rank]);
    const std::uint64_t inv = inverse_mod(a[rank][col], p);
    for (std::size_t i = rank + 1; i < a.size(); ++i) {
      if (a[i][col] == 0) continue;
      const std::uint64_t f = mulmod(a[i][col], inv, p);
      for (std::size_t j = col; j < c; ++j) a[i][j] = (a[i][j] + p - mulmod(f, a[rank][j], p)) % p;
    }
    piv.push_back(col);
    ++rank;
  }
  return piv;
}

// Fraction-free elimination; returns the pivot columns.
std::vector<std::size_t> bareiss_pivots(std::vector<Vector> a) {
  const std::size_t c = width(a);
  LaurentPoly prev(1);
  std::vector<std::size_t> piv;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < c && rank < a.size(); ++col) {
    std::size_t sel = rank;
    while (sel < a.size() && a[sel][col].is_zero()) ++sel;
    if (sel == a.size()) continue;
    std::swap(a[sel], a[rank]);
    for (std::size_t i = rank + 1; i < a.size(); ++i) {
      for (std::size_t j = col + 1; j < c; ++j) {
        LaurentPoly num = a[rank][col] * a[i][j] - a[i][col] * a[rank][j];
        auto q = exact_divide(num, prev);
        if (!q) throw std::logic_error("inexact division in fraction-free elimination");
        a[i][j] = std::move(*q);
      }
      a[i][col] = LaurentPoly();
    }
    prev = a[rank][col];
    piv.push_back(col);
    ++rank;
  }
  return piv;
}

}  // namespace

std::size_t rank_mod_prime(const std::vector<Vector>& rows, std::uint64_t point, std::uint64_t prime) {
  return pivots_mod_prime(rows, point, prime).size();
}

std::size_t exact_rank(const std::vector<Vector>& rows) { return bareiss_pivots(rows).size(); }

LaurentPoly determinant(std::vector<Vector> a) {
  const std::size_t n = a.size();
  for (const auto& r : a)
    if (r.size() != n) throw std::invalid_argument("determinant of a non-square matrix");
  if (n == 0) return LaurentPoly(1);
  LaurentPoly prev(1);
  bool negate = false;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t sel = k;
    while (sel < n && a[sel][k].is_zero()) ++sel;
    if (sel == n) return LaurentPoly();
    if (sel != k) {
      std::swap(a[sel], a[k]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        LaurentPoly num = a[k][k] * a[i][j] - a[i][k] * a[k][j];
        auto q = exact_divide(num, prev);
        if (!q) throw std::logic_error("inexact division in fraction-free elimination");
        a[i][j] = std::move(*q);
      }
      a[i][k] = LaurentPoly();
    }
    prev = a[k][k];
  }
  return negate ? -a[n - 1][n - 1] : a[n - 1][n - 1];
}

bool linearly_independent(const std::vector<Vector>& rows) {
  for (std::uint64_t pt : kPoints)
    if (rank_mod_prime(rows, pt, kPrime) == rows.size()) return true;
  return exact_rank(rows) == rows.size();
}

std::optional<std::vector<LaurentPoly>> solve_in_span(const std::vector<Vector>& rows, const Vector& target) {
  const std::size_t r = rows.size();
  const std::size_t c = width(rows);
  if (target.size() != c) throw std::invalid_argument("target has the wrong length");
  std::vector<std::size_t> piv;
  for (std::uint64_t pt : kPoints) {
    piv = pivots_mod_prime(rows, pt, kPrime);
    if (piv.size() == r) break;
  }
  if (piv.size() != r) piv = bareiss_pivots(rows);
  if (piv.size() != r) throw std::invalid_argument("solve_in_span needs independent rows");

  // Cramer's rule on the square system restricted to the pivot columns.
  std::vector<Vector> m(r, Vector(r));
  for (std::size_t j = 0; j < r; ++j)
    for (std::size_t i = 0; i < r; ++i) m[j][i] = rows[i][piv[j]];
  const LaurentPoly det = determinant(m);
  std::vector<LaurentPoly> coeffs(r);
  for (std::size_t i = 0; i < r; ++i) {
    auto mi = m;
    for (std::size_t j = 0; j < r; ++j) mi[j][i] = target[piv[j]];
    auto q = exact_divide(determinant(std::move(mi)), det);
    if (!q) return std::nullopt;
    coeffs[i] = std::move(*q);
  }
  for (std::size_t col = 0; col < c; ++col) {
    LaurentPoly s;
    for (std::size_t i = 0; i < r; ++i) s.add_scaled(coeffs[i], rows[i][col]);
    if (s != target[col]) return std::nullopt;
  }
  return coeffs;
}

}  // namespace klspecht
