#pragma once

// Exact arithmetic in A = Z[q^{1/2}, q^{-1/2}].
//
// Elements are stored in the variable v = q^{1/2}, so q itself has exponent 2
// and every exponent is an integer.  Terms are kept sorted by exponent with no
// zero coefficients; the empty term list is the zero polynomial.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json_fwd.hpp>

namespace klspecht {

using Integer = boost::multiprecision::cpp_int;

class LaurentPoly {
 public:
  struct Term {
    int exp;  // power of v
    Integer coeff;

    friend bool operator==(const Term&, const Term&) = default;
  };

  LaurentPoly() = default;
  LaurentPoly(int c);  // NOLINT(google-explicit-constructor)
  LaurentPoly(Integer c);  // NOLINT(google-explicit-constructor)

  static LaurentPoly monomial(Integer c, int exp);
  /// v^k, i.e. q^{k/2}.
  static LaurentPoly v_pow(int k) { return monomial(1, k); }
  /// q^k.
  static LaurentPoly q_pow(int k) { return monomial(1, 2 * k); }
  /// Builds from arbitrary (exp, coeff) pairs; collects like terms.
  static LaurentPoly from_terms(std::vector<std::pair<int, Integer>> terms);

  std::span<const Term> terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  int min_exp() const;
  int max_exp() const;
  Integer coefficient(int exp) const;

  /// True for +-v^k, the units of A.
  bool is_unit() const;
  bool is_one() const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  LaurentPoly operator-() const;

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  /// this += c * o, without a temporary for the product.
  void add_scaled(const LaurentPoly& c, const LaurentPoly& o);
  /// Multiply by v^k.
  LaurentPoly shifted(int k) const;
  LaurentPoly scaled(const Integer& c) const;

  /// The involution q^{1/2} -> q^{-1/2}.
  LaurentPoly bar() const;
  /// The specialization q^{1/2} -> 1.
  Integer specialize_one() const;
  /// Value at v = point in Z/pZ (point must be invertible mod p).
  std::uint64_t evaluate_mod(std::uint64_t point, std::uint64_t prime) const;

  /// "a*v^k + ..." with ascending exponents; "0" for zero.
  std::string to_string() const;

 private:
  void normalize();
  std::vector<Term> terms_;
};

/// Returns a/b if it lies in A, nullopt otherwise. b must be nonzero.
std::optional<LaurentPoly> exact_divide(const LaurentPoly& a, const LaurentPoly& b);

/// [[exponent_in_halves, coefficient], ...]; coefficients outside int64 are strings.
nlohmann::json to_json(const LaurentPoly& p);
LaurentPoly laurent_from_json(const nlohmann::json& j);

}  // namespace klspecht
