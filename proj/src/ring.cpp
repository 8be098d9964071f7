#include "klspecht/ring.hpp"

#include <algorithm>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace klspecht {

LaurentPoly::LaurentPoly(int c) : LaurentPoly(Integer(c)) {}

LaurentPoly::LaurentPoly(Integer c) {
  if (c != 0) terms_.push_back({0, std::move(c)});
}

LaurentPoly LaurentPoly::monomial(Integer c, int exp) {
  LaurentPoly p;
  if (c != 0) p.terms_.push_back({exp, std::move(c)});
  return p;
}

LaurentPoly LaurentPoly::from_terms(std::vector<std::pair<int, Integer>> terms) {
  LaurentPoly p;
  p.terms_.reserve(terms.size());
  for (auto& [e, c] : terms) p.terms_.push_back({e, std::move(c)});
  p.normalize();
  return p;
}

void LaurentPoly::normalize() {
  std::sort(terms_.begin(), terms_.end(),
            [](const Term& a, const Term& b) { return a.exp < b.exp; });
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!out.empty() && out.back().exp == t.exp) {
      out.back().coeff += t.coeff;
    } else {
      if (!out.empty() && out.back().coeff == 0) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().coeff == 0) out.pop_back();
  terms_ = std::move(out);
}

int LaurentPoly::min_exp() const {
  if (terms_.empty()) throw std::domain_error("min_exp of zero polynomial");
  return terms_.front().exp;
}

int LaurentPoly::max_exp() const {
  if (terms_.empty()) throw std::domain_error("max_exp of zero polynomial");
  return terms_.back().exp;
}

Integer LaurentPoly::coefficient(int exp) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), exp,
                             [](const Term& t, int e) { return t.exp < e; });
  if (it != terms_.end() && it->exp == exp) return it->coeff;
  return 0;
}

bool LaurentPoly::is_unit() const {
  return terms_.size() == 1 && (terms_[0].coeff == 1 || terms_[0].coeff == -1);
}

bool LaurentPoly::is_one() const {
  return terms_.size() == 1 && terms_[0].exp == 0 && terms_[0].coeff == 1;
}

namespace {

// Merges b (scaled by sign) into a, both sorted.
void merge_into(std::vector<LaurentPoly::Term>& a, std::span<const LaurentPoly::Term> b,
                bool negate) {
  if (b.empty()) return;
  std::vector<LaurentPoly::Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].exp < b[j].exp)) {
      out.push_back(std::move(a[i++]));
    } else if (i == a.size() || b[j].exp < a[i].exp) {
      out.push_back({b[j].exp, negate ? Integer(-b[j].coeff) : b[j].coeff});
      ++j;
    } else {
      Integer c = std::move(a[i].coeff);
      if (negate) c -= b[j].coeff; else c += b[j].coeff;
      if (c != 0) out.push_back({a[i].exp, std::move(c)});
      ++i;
      ++j;
    }
  }
  a = std::move(out);
}

}  // namespace

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  merge_into(terms_, o.terms_, false);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  merge_into(terms_, o.terms_, true);
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r;
  if (a.is_zero() || b.is_zero()) return r;
  if (a.terms_.size() == 1 || b.terms_.size() == 1) {
    const auto& mono = a.terms_.size() == 1 ? a.terms_[0] : b.terms_[0];
    const auto& other = a.terms_.size() == 1 ? b : a;
    r.terms_.reserve(other.terms_.size());
    for (const auto& t : other.terms_) r.terms_.push_back({t.exp + mono.exp, t.coeff * mono.coeff});
    return r;
  }
  const int lo = a.terms_.front().exp + b.terms_.front().exp;
  const int hi = a.terms_.back().exp + b.terms_.back().exp;
  std::vector<Integer> dense(static_cast<std::size_t>(hi - lo + 1));
  for (const auto& s : a.terms_)
    for (const auto& t : b.terms_) dense[s.exp + t.exp - lo] += s.coeff * t.coeff;
  for (std::size_t k = 0; k < dense.size(); ++k)
    if (dense[k] != 0) r.terms_.push_back({lo + static_cast<int>(k), std::move(dense[k])});
  return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
  *this = *this * o;
  return *this;
}

void LaurentPoly::add_scaled(const LaurentPoly& c, const LaurentPoly& o) {
  if (c.is_zero() || o.is_zero()) return;
  if (c.terms_.size() == 1) {
    const auto& m = c.terms_[0];
    if (m.coeff == 1 || m.coeff == -1) {
      // Shift-and-merge without allocating a product.
      std::vector<Term> shifted;
      shifted.reserve(o.terms_.size());
      for (const auto& t : o.terms_) shifted.push_back({t.exp + m.exp, t.coeff});
      merge_into(terms_, shifted, m.coeff == -1);
      return;
    }
  }
  *this += c * o;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly r = *this;
  for (auto& t : r.terms_) t.exp += k;
  return r;
}

LaurentPoly LaurentPoly::scaled(const Integer& c) const {
  if (c == 0) return {};
  LaurentPoly r = *this;
  for (auto& t : r.terms_) t.coeff *= c;
  return r;
}

LaurentPoly LaurentPoly::bar() const {
  LaurentPoly r;
  r.terms_.reserve(terms_.size());
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) r.terms_.push_back({-it->exp, it->coeff});
  return r;
}

Integer LaurentPoly::specialize_one() const {
  Integer s = 0;
  for (const auto& t : terms_) s += t.coeff;
  return s;
}

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

}  // namespace

std::uint64_t LaurentPoly::evaluate_mod(std::uint64_t point, std::uint64_t prime) const {
  const std::uint64_t inv = powmod(point, prime - 2, prime);
  std::uint64_t acc = 0;
  for (const auto& t : terms_) {
    const std::uint64_t base = t.exp >= 0 ? point : inv;
    const std::uint64_t pw = powmod(base, static_cast<std::uint64_t>(t.exp >= 0 ? t.exp : -t.exp), prime);
    Integer c = t.coeff % Integer(prime);
    if (c < 0) c += prime;
    acc = (acc + mulmod(c.convert_to<std::uint64_t>(), pw, prime)) % prime;
  }
  return acc;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    Integer mag = abs(t.coeff);
    const bool neg = t.coeff < 0;
    if (first) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    first = false;
    if (t.exp == 0) {
      out += mag.str();
    } else {
      if (mag != 1) out += mag.str() + "*";
      out += "v^" + std::to_string(t.exp);
    }
  }
  return out;
}

std::optional<LaurentPoly> exact_divide(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw std::domain_error("division by zero polynomial");
  if (a.is_zero()) return LaurentPoly{};
  const auto bt = b.terms();
  if (bt.size() == 1) {
    LaurentPoly q;
    std::vector<std::pair<int, Integer>> out;
    for (const auto& t : a.terms()) {
      if (t.coeff % bt[0].coeff != 0) return std::nullopt;
      out.emplace_back(t.exp - bt[0].exp, t.coeff / bt[0].coeff);
    }
    return LaurentPoly::from_terms(std::move(out));
  }
  // Work with ordinary polynomials: a = v^ea * A(v), b = v^eb * B(v), B(0) != 0.
  const int ea = a.min_exp(), eb = b.min_exp();
  std::vector<Integer> rem(static_cast<std::size_t>(a.max_exp() - ea + 1));
  for (const auto& t : a.terms()) rem[t.exp - ea] = t.coeff;
  std::vector<Integer> div(static_cast<std::size_t>(b.max_exp() - eb + 1));
  for (const auto& t : bt) div[t.exp - eb] = t.coeff;
  const std::size_t db = div.size() - 1;
  if (rem.size() - 1 < db) return std::nullopt;
  const Integer& lead = div.back();
  std::vector<std::pair<int, Integer>> quot;
  for (std::size_t k = rem.size(); k-- > db;) {
    if (rem[k] == 0) continue;
    if (rem[k] % lead != 0) return std::nullopt;
    Integer c = rem[k] / lead;
    const std::size_t shift = k - db;
    for (std::size_t i = 0; i <= db; ++i) rem[shift + i] -= c * div[i];
    quot.emplace_back(static_cast<int>(shift) + ea - eb, std::move(c));
  }
  for (const auto& r : rem)
    if (r != 0) return std::nullopt;
  return LaurentPoly::from_terms(std::move(quot));
}

nlohmann::json to_json(const LaurentPoly& p) {
  auto arr = nlohmann::json::array();
  for (const auto& t : p.terms()) {
    nlohmann::json c;
    if (t.coeff >= std::numeric_limits<std::int64_t>::min() &&
        t.coeff <= std::numeric_limits<std::int64_t>::max())
      c = t.coeff.convert_to<std::int64_t>();
    else
      c = t.coeff.str();
    arr.push_back(nlohmann::json::array({t.exp, c}));
  }
  return arr;
}

LaurentPoly laurent_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw std::invalid_argument("polynomial JSON must be an array");
  std::vector<std::pair<int, Integer>> terms;
  int prev = 0;
  bool first = true;
  for (const auto& t : j) {
    if (!t.is_array() || t.size() != 2 || !t[0].is_number_integer())
      throw std::invalid_argument("polynomial term must be [exponent, coefficient]");
    const int e = t[0].get<int>();
    if (!first && e <= prev) throw std::invalid_argument("polynomial terms must be sorted by exponent");
    first = false;
    prev = e;
    Integer c;
    if (t[1].is_number_integer())
      c = t[1].get<std::int64_t>();
    else if (t[1].is_string())
      c = Integer(t[1].get<std::string>());
    else
      throw std::invalid_argument("polynomial coefficient must be an integer");
    if (c == 0) throw std::invalid_argument("zero coefficient in polynomial JSON");
    terms.emplace_back(e, std::move(c));
  }
  return LaurentPoly::from_terms(std::move(terms));
}

}  // namespace klspecht
