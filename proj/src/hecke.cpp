#include "klspecht/hecke.hpp"

#include <algorithm>
#include <cstdio>
#include <deque>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include <nlohmann/json.hpp>

namespace klspecht {

std::string basis_name(Basis b) {
  switch (b) {
    case Basis::T: return "T";
    case Basis::Ttilde: return "Ttilde";
    case Basis::C: return "C";
    case Basis::Cprime: return "Cprime";
  }
  return "?";
}

HeckeElement::HeckeElement(int m, Basis basis)
    : m_(m), basis_(basis), coeffs_(SymmetricGroup::get(m).size()) {}

HeckeElement HeckeElement::basis_element(int m, Basis basis, std::size_t w, LaurentPoly c) {
  HeckeElement h(m, basis);
  h.coeffs_.at(w) = std::move(c);
  return h;
}

HeckeElement HeckeElement::basis_element(Basis basis, const Permutation& w, LaurentPoly c) {
  return basis_element(w.rank(), basis, lex_rank(w), std::move(c));
}

const LaurentPoly& HeckeElement::coefficient(const Permutation& w) const {
  if (w.rank() != m_) throw std::invalid_argument("permutation rank does not match the element");
  return coeffs_[lex_rank(w)];
}

std::vector<std::size_t> HeckeElement::support() const {
  std::vector<std::size_t> s;
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (!coeffs_[i].is_zero()) s.push_back(i);
  return s;
}

bool HeckeElement::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const LaurentPoly& p) { return p.is_zero(); });
}

void HeckeElement::require_compatible(const HeckeElement& o) const {
  if (m_ != o.m_) throw std::invalid_argument("Hecke elements of different rank");
  if (basis_ != o.basis_) throw std::invalid_argument("Hecke elements written in different bases");
}

HeckeElement& HeckeElement::operator+=(const HeckeElement& o) {
  require_compatible(o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (!o.coeffs_[i].is_zero()) coeffs_[i] += o.coeffs_[i];
  return *this;
}

HeckeElement& HeckeElement::operator-=(const HeckeElement& o) {
  require_compatible(o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (!o.coeffs_[i].is_zero()) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

void HeckeElement::add_scaled(const LaurentPoly& c, const HeckeElement& o) {
  require_compatible(o);
  if (c.is_zero()) return;
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (!o.coeffs_[i].is_zero()) coeffs_[i].add_scaled(c, o.coeffs_[i]);
}

HeckeElement HeckeElement::scaled(const LaurentPoly& c) const {
  HeckeElement r(m_, basis_);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (!coeffs_[i].is_zero()) r.coeffs_[i] = c * coeffs_[i];
  return r;
}

std::string HeckeElement::to_string() const {
  static const char* symbols[] = {"T", "Tt", "C", "C'"};
  const auto& G = SymmetricGroup::get(m_);
  std::string s;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    if (!s.empty()) s += " + ";
    s += "(" + coeffs_[i].to_string() + ")*" + symbols[static_cast<int>(basis_)] + "[" +
         G.element(i).to_string() + "]";
  }
  return s.empty() ? "0" : s;
}

namespace {

void require_t_basis(const HeckeElement& h, const char* what) {
  if (h.basis() != Basis::T) throw std::invalid_argument(std::string(what) + " expects a T-basis element");
}

const LaurentPoly& q_minus_one() {
  static const LaurentPoly p = LaurentPoly::q_pow(1) - LaurentPoly(1);
  return p;
}

}  // namespace

HeckeElement right_multiply_generator(const HeckeElement& h, int k) {
  require_t_basis(h, "right_multiply_generator");
  const auto& G = SymmetricGroup::get(h.rank());
  if (k < 1 || k >= h.rank()) throw std::invalid_argument("generator index out of range");
  HeckeElement r(h.rank(), Basis::T);
  for (std::size_t w = 0; w < h.dimension(); ++w) {
    const auto& a = h[w];
    if (a.is_zero()) continue;
    const std::size_t ws = G.right_gen(w, k);
    if (G.length(ws) > G.length(w)) {
      r[ws] += a;
    } else {
      r[ws] += a.shifted(2);
      r[w].add_scaled(q_minus_one(), a);
    }
  }
  return r;
}

HeckeElement left_multiply_generator(const HeckeElement& h, int k) {
  require_t_basis(h, "left_multiply_generator");
  const auto& G = SymmetricGroup::get(h.rank());
  if (k < 1 || k >= h.rank()) throw std::invalid_argument("generator index out of range");
  HeckeElement r(h.rank(), Basis::T);
  for (std::size_t w = 0; w < h.dimension(); ++w) {
    const auto& a = h[w];
    if (a.is_zero()) continue;
    const std::size_t sw = G.left_gen(w, k);
    if (G.length(sw) > G.length(w)) {
      r[sw] += a;
    } else {
      r[sw] += a.shifted(2);
      r[w].add_scaled(q_minus_one(), a);
    }
  }
  return r;
}

namespace {

// Smallest k with l(w s_k) < l(w), or 0 for the identity.
int first_right_descent(const SymmetricGroup& G, std::size_t w) {
  for (int k = 1; k < G.rank(); ++k)
    if (G.length(G.right_gen(w, k)) < G.length(w)) return k;
  return 0;
}

}  // namespace

std::vector<HeckeElement> right_translates(const HeckeElement& g) {
  require_t_basis(g, "right_translates");
  const auto& G = SymmetricGroup::get(g.rank());
  std::vector<HeckeElement> out(G.size());
  for (std::size_t x : G.by_length()) {
    const int k = first_right_descent(G, x);
    out[x] = k == 0 ? g : right_multiply_generator(out[G.right_gen(x, k)], k);
  }
  return out;
}

HeckeElement t_multiply(const HeckeElement& a, const HeckeElement& b) {
  require_t_basis(a, "t_multiply");
  require_t_basis(b, "t_multiply");
  if (a.rank() != b.rank()) throw std::invalid_argument("t_multiply: rank mismatch");
  const auto& G = SymmetricGroup::get(a.rank());
  HeckeElement r(a.rank(), Basis::T);
  for (std::size_t y = 0; y < b.dimension(); ++y) {
    if (b[y].is_zero()) continue;
    HeckeElement cur = a;
    for (int k : G.element(y).reduced_word()) cur = right_multiply_generator(cur, k);
    r.add_scaled(b[y], cur);
  }
  return r;
}

// ---------------------------------------------------------------------------
// Kazhdan-Lusztig polynomials

namespace {

struct PolyHash {
  std::size_t operator()(const LaurentPoly& p) const {
    std::size_t h = 1469598103934665603ULL;
    for (const auto& t : p.terms()) {
      h = (h ^ static_cast<std::size_t>(t.exp)) * 1099511628211ULL;
      h = (h ^ static_cast<std::size_t>(t.coeff.convert_to<long long>())) * 1099511628211ULL;
    }
    return h;
  }
};

}  // namespace

class KLTableBuilder {
 public:
  explicit KLTableBuilder(int m) {
    t_.m_ = m;
    t_.n_ = SymmetricGroup::get(m).size();
    t_.index_.assign(t_.n_ * t_.n_, 0);
    intern(LaurentPoly());
    intern(LaurentPoly(1));
  }
  std::uint32_t intern(LaurentPoly p) {
    auto it = ids_.find(p);
    if (it != ids_.end()) return it->second;
    const auto id = static_cast<std::uint32_t>(t_.pool_.size());
    t_.pool_.push_back(p);
    ids_.emplace(std::move(p), id);
    return id;
  }
  KLTable& table() { return t_; }

 private:
  KLTable t_;
  std::unordered_map<LaurentPoly, std::uint32_t, PolyHash> ids_;
};

KLTable KLTable::compute(int m) {
  const auto& G = SymmetricGroup::get(m);
  KLTableBuilder b(m);
  KLTable& t = b.table();
  const std::size_t n = t.n_;
  t.mu_lists_.assign(n, {});
  for (std::size_t y = 0; y < n; ++y) t.index_[y * n + y] = 1;
  for (std::size_t y : G.by_length()) {
    const int k = first_right_descent(G, y);
    if (k == 0) continue;
    const std::size_t v = G.right_gen(y, k);
    const int ly = G.length(y);
    // z < v with mu(z, v) != 0 and z s < z.
    std::vector<std::pair<std::size_t, const Integer*>> zs;
    for (const auto& [z, mu] : t.mu_lists_[v])
      if (G.length(G.right_gen(z, k)) < G.length(z)) zs.emplace_back(z, &mu);
    for (std::size_t x = 0; x < n; ++x) {
      if (x == y || G.length(x) >= ly || !G.bruhat_leq(x, y)) continue;
      const std::size_t xs = G.right_gen(x, k);
      const bool c = G.length(xs) < G.length(x);
      LaurentPoly p = t.P(xs, v).shifted(c ? 0 : 2);
      p += t.P(x, v).shifted(c ? 2 : 0);
      for (const auto& [z, mu] : zs) {
        const auto& pxz = t.P(x, z);
        if (pxz.is_zero()) continue;
        p.add_scaled(LaurentPoly::monomial(-*mu, ly - G.length(z)), pxz);
      }
      t.index_[x * n + y] = b.intern(std::move(p));
    }
    for (std::size_t z = 0; z < n; ++z) {
      const int d = ly - G.length(z);
      if (d <= 0 || d % 2 == 0) continue;
      Integer c = t.P(z, y).coefficient(d - 1);
      if (c != 0) t.mu_lists_[y].emplace_back(z, std::move(c));
    }
  }
  return std::move(b.table());
}

void KLTable::compute_mu_lists() {
  const auto& G = SymmetricGroup::get(m_);
  mu_lists_.assign(n_, {});
  for (std::size_t y = 0; y < n_; ++y)
    for (std::size_t z = 0; z < n_; ++z) {
      const int d = G.length(y) - G.length(z);
      if (d <= 0 || d % 2 == 0) continue;
      Integer c = P(z, y).coefficient(d - 1);
      if (c != 0) mu_lists_[y].emplace_back(z, std::move(c));
    }
}

LaurentPoly KLTable::P(const Permutation& x, const Permutation& y) const {
  if (x.rank() != m_ || y.rank() != m_) throw std::invalid_argument("permutation rank does not match the table");
  return P(lex_rank(x), lex_rank(y));
}

Integer KLTable::mu(std::size_t x, std::size_t y) const {
  const auto& G = SymmetricGroup::get(m_);
  const int d = G.length(y) - G.length(x);
  if (d <= 0 || d % 2 == 0) return 0;
  return P(x, y).coefficient(d - 1);
}

namespace {

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) h = (h ^ c) * 1099511628211ULL;
  return h;
}

std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

}  // namespace

nlohmann::json KLTable::to_json() const {
  const auto& G = SymmetricGroup::get(m_);
  auto polys = nlohmann::json::array();
  for (std::size_t y = 0; y < n_; ++y)
    for (std::size_t x = 0; x < n_; ++x) {
      if (!G.bruhat_leq(x, y)) continue;
      polys.push_back({{"x", G.element(x).to_string()},
                       {"y", G.element(y).to_string()},
                       {"p", klspecht::to_json(P(x, y))}});
    }
  nlohmann::json j;
  j["format_version"] = kFormatVersion;
  j["m"] = m_;
  j["checksum"] = hex64(fnv1a(polys.dump()));
  j["polys"] = std::move(polys);
  return j;
}

KLTable KLTable::from_json(const nlohmann::json& j) {
  auto fail = [](const std::string& why) -> KLTable { throw std::invalid_argument("KL table JSON: " + why); };
  if (!j.is_object() || !j.contains("format_version") || !j.contains("m") || !j.contains("polys") ||
      !j.contains("checksum"))
    return fail("missing fields");
  if (j["format_version"] != kFormatVersion) return fail("unsupported format_version");
  const int m = j["m"].get<int>();
  if (m < 1) return fail("bad rank");
  const auto& polys = j["polys"];
  if (!polys.is_array()) return fail("polys must be an array");
  if (j["checksum"] != hex64(fnv1a(polys.dump()))) return fail("checksum mismatch");
  const auto& G = SymmetricGroup::get(m);
  KLTableBuilder b(m);
  KLTable& t = b.table();
  const std::size_t n = t.n_;
  std::vector<bool> seen(n * n, false);
  std::size_t expected = 0;
  for (std::size_t y = 0; y < n; ++y)
    for (std::size_t x = 0; x < n; ++x)
      if (G.bruhat_leq(x, y)) ++expected;
  if (polys.size() != expected) return fail("wrong number of entries");
  for (const auto& e : polys) {
    const auto x = lex_rank(Permutation::parse(e.at("x").get<std::string>(), m));
    const auto y = lex_rank(Permutation::parse(e.at("y").get<std::string>(), m));
    if (!G.bruhat_leq(x, y) || seen[x * n + y]) return fail("unexpected or repeated pair");
    seen[x * n + y] = true;
    LaurentPoly p = laurent_from_json(e.at("p"));
    const int d = G.length(y) - G.length(x);
    if (x == y ? !p.is_one() : (p.is_zero() || p.min_exp() < 0 || p.max_exp() > d - 1))
      return fail("polynomial violates the degree constraints");
    for (const auto& term : p.terms())
      if (term.exp % 2 != 0) return fail("odd power of v in a polynomial in q");
    t.index_[x * n + y] = b.intern(std::move(p));
  }
  t.compute_mu_lists();
  return std::move(b.table());
}

namespace {

std::mutex& kl_mutex() {
  static std::mutex mu;
  return mu;
}

std::map<int, std::unique_ptr<KLTable>>& kl_cache() {
  static std::map<int, std::unique_ptr<KLTable>> cache;
  return cache;
}

}  // namespace

const KLTable& kl_table(int m) {
  std::lock_guard lock(kl_mutex());
  auto& slot = kl_cache()[m];
  if (!slot) slot = std::make_unique<KLTable>(KLTable::compute(m));
  return *slot;
}

const KLTable& kl_table(int m, const std::string& cache_dir) {
  if (cache_dir.empty()) return kl_table(m);
  std::lock_guard lock(kl_mutex());
  auto& slot = kl_cache()[m];
  namespace fs = std::filesystem;
  const fs::path file = fs::path(cache_dir) / ("kl_S" + std::to_string(m) + ".json");
  if (!slot) {
    std::ifstream in(file);
    if (in) {
      try {
        slot = std::make_unique<KLTable>(KLTable::from_json(nlohmann::json::parse(in)));
        if (slot->rank() != m) slot.reset();
      } catch (const std::exception&) {
        slot.reset();
      }
    }
  }
  if (!slot) slot = std::make_unique<KLTable>(KLTable::compute(m));
  std::error_code ec;
  if (!fs::exists(file, ec)) {
    fs::create_directories(cache_dir, ec);
    const fs::path tmp = file.string() + ".tmp";
    {
      std::ofstream out(tmp);
      if (out) out << slot->to_json().dump() << '\n';
    }
    fs::rename(tmp, file, ec);
  } else {
    // Replace a file that does not parse back to a valid table.
    bool valid = false;
    try {
      std::ifstream in(file);
      valid = KLTable::from_json(nlohmann::json::parse(in)).rank() == m;
    } catch (const std::exception&) {
      valid = false;
    }
    if (!valid) {
      const fs::path tmp = file.string() + ".tmp";
      {
        std::ofstream out(tmp);
        if (out) out << slot->to_json().dump() << '\n';
      }
      fs::rename(tmp, file, ec);
    }
  }
  return *slot;
}

// ---------------------------------------------------------------------------
// Bases

HeckeElement c_basis_element(std::size_t y, const KLTable& kl) {
  const auto& G = SymmetricGroup::get(kl.rank());
  HeckeElement h(kl.rank(), Basis::T);
  const int ly = G.length(y);
  for (std::size_t x = 0; x < G.size(); ++x) {
    const auto& p = kl.P(x, y);
    if (p.is_zero()) continue;
    const int lx = G.length(x);
    h[x] = p.bar().shifted(ly - 2 * lx).scaled((ly - lx) % 2 ? -1 : 1);
  }
  return h;
}

HeckeElement c_basis_element(const Permutation& y, const KLTable& kl) {
  if (y.rank() != kl.rank()) throw std::invalid_argument("permutation rank does not match the table");
  return c_basis_element(lex_rank(y), kl);
}

HeckeElement cprime_basis_element(std::size_t y, const KLTable& kl) {
  const auto& G = SymmetricGroup::get(kl.rank());
  HeckeElement h(kl.rank(), Basis::T);
  const int ly = G.length(y);
  for (std::size_t x = 0; x < G.size(); ++x) {
    const auto& p = kl.P(x, y);
    if (!p.is_zero()) h[x] = p.shifted(-ly);
  }
  return h;
}

HeckeElement cprime_basis_element(const Permutation& y, const KLTable& kl) {
  if (y.rank() != kl.rank()) throw std::invalid_argument("permutation rank does not match the table");
  return cprime_basis_element(lex_rank(y), kl);
}

HeckeElement to_t_basis(const HeckeElement& h, const KLTable& kl) {
  if (h.rank() != kl.rank()) throw std::invalid_argument("element rank does not match the table");
  const auto& G = SymmetricGroup::get(h.rank());
  switch (h.basis()) {
    case Basis::T:
      return h;
    case Basis::Ttilde: {
      HeckeElement r(h.rank(), Basis::T);
      for (std::size_t y = 0; y < h.dimension(); ++y)
        if (!h[y].is_zero()) r[y] = h[y].shifted(-G.length(y));
      return r;
    }
    case Basis::C:
    case Basis::Cprime: {
      HeckeElement r(h.rank(), Basis::T);
      for (std::size_t y = 0; y < h.dimension(); ++y) {
        if (h[y].is_zero()) continue;
        r.add_scaled(h[y], h.basis() == Basis::C ? c_basis_element(y, kl) : cprime_basis_element(y, kl));
      }
      return r;
    }
  }
  return h;
}

HeckeElement change_basis(const HeckeElement& h, Basis target, const KLTable& kl) {
  if (h.basis() == target) return h;
  HeckeElement t = to_t_basis(h, kl);
  const auto& G = SymmetricGroup::get(h.rank());
  switch (target) {
    case Basis::T:
      return t;
    case Basis::Ttilde: {
      HeckeElement r(h.rank(), Basis::Ttilde);
      for (std::size_t y = 0; y < t.dimension(); ++y)
        if (!t[y].is_zero()) r[y] = t[y].shifted(G.length(y));
      return r;
    }
    case Basis::C:
    case Basis::Cprime: {
      // Both bases are unitriangular up to the leading coefficient v^-l(y)
      // of T_y; peel off the longest elements first.
      HeckeElement r(h.rank(), target);
      const auto& order = G.by_length();
      for (auto it = order.rbegin(); it != order.rend(); ++it) {
        const std::size_t y = *it;
        if (t[y].is_zero()) continue;
        LaurentPoly a = t[y].shifted(G.length(y));
        const HeckeElement b = target == Basis::C ? c_basis_element(y, kl) : cprime_basis_element(y, kl);
        t.add_scaled(-a, b);
        r[y] = std::move(a);
      }
      return r;
    }
  }
  return t;
}

HeckeElement j_involution(const HeckeElement& h) {
  require_t_basis(h, "j_involution");
  const auto& G = SymmetricGroup::get(h.rank());
  HeckeElement r(h.rank(), Basis::T);
  for (std::size_t y = 0; y < h.dimension(); ++y) {
    if (h[y].is_zero()) continue;
    const int l = G.length(y);
    r[y] = h[y].bar().shifted(-2 * l).scaled(l % 2 ? -1 : 1);
  }
  return r;
}

namespace {

// bar(T_y) = T_{y^-1}^-1 for every y, in the T-basis.
const std::vector<HeckeElement>& bar_images(int m) {
  static std::mutex mu;
  static std::map<int, std::vector<HeckeElement>> cache;
  std::lock_guard lock(mu);
  auto& out = cache[m];
  if (!out.empty()) return out;
  const auto& G = SymmetricGroup::get(m);
  out.resize(G.size());
  const LaurentPoly q_inv = LaurentPoly::q_pow(-1);
  const LaurentPoly q_inv_minus_one = q_inv - LaurentPoly(1);
  for (std::size_t x : G.by_length()) {
    const int k = first_right_descent(G, x);
    if (k == 0) {
      out[x] = HeckeElement::basis_element(m, Basis::T, x);
      continue;
    }
    // bar(T_x) = bar(T_{x s}) T_s^-1, T_s^-1 = q^-1 T_s + (q^-1 - 1).
    const auto& prev = out[G.right_gen(x, k)];
    HeckeElement next = right_multiply_generator(prev, k).scaled(q_inv);
    next.add_scaled(q_inv_minus_one, prev);
    out[x] = std::move(next);
  }
  return out;
}

}  // namespace

HeckeElement bar_involution(const HeckeElement& h) {
  require_t_basis(h, "bar_involution");
  const auto& images = bar_images(h.rank());
  HeckeElement r(h.rank(), Basis::T);
  for (std::size_t y = 0; y < h.dimension(); ++y)
    if (!h[y].is_zero()) r.add_scaled(h[y].bar(), images[y]);
  return r;
}

// ---------------------------------------------------------------------------
// Structure constants

namespace {

Expansion to_expansion(const HeckeElement& h) {
  Expansion e;
  for (std::size_t i = 0; i < h.dimension(); ++i)
    if (!h[i].is_zero()) e.push_back({i, h[i]});
  return e;
}

void check_generator(int m, int k) {
  if (k < 1 || k >= m) throw std::invalid_argument("generator index out of range");
}

}  // namespace

Expansion structure_constants_right(std::size_t y, int k, const KLTable& kl) {
  check_generator(kl.rank(), k);
  const auto& G = SymmetricGroup::get(kl.rank());
  const std::size_t ys = G.right_gen(y, k);
  if (G.length(ys) < G.length(y)) return {{y, LaurentPoly::q_pow(1)}};
  // C'_y T_s = v C'_{ys} + v sum_{z < y, zs < z} mu(z, y) C'_z - C'_y.
  Expansion e{{ys, LaurentPoly::v_pow(1)}, {y, LaurentPoly(-1)}};
  for (const auto& [z, mu] : kl.mu_list(y))
    if (G.length(G.right_gen(z, k)) < G.length(z)) e.push_back({z, LaurentPoly::monomial(mu, 1)});
  std::sort(e.begin(), e.end(), [](const ExpansionTerm& a, const ExpansionTerm& b) { return a.index < b.index; });
  return e;
}

Expansion structure_constants_right_generic(std::size_t y, int k, const KLTable& kl) {
  check_generator(kl.rank(), k);
  auto prod = right_multiply_generator(cprime_basis_element(y, kl), k);
  return to_expansion(change_basis(prod, Basis::Cprime, kl));
}

Expansion c_structure_constants_right(std::size_t y, int k, const KLTable& kl) {
  const auto& G = SymmetricGroup::get(kl.rank());
  Expansion e = structure_constants_right(y, k, kl);
  // alpha_{y, j(T_s), x} = -q^-1 alpha_{y, T_s, x}.
  for (auto& t : e) {
    const int sign = (G.length(t.index) - G.length(y)) % 2 ? 1 : -1;
    t.coeff = t.coeff.bar().shifted(2).scaled(sign);
  }
  return e;
}

Expansion c_structure_constants_right_generic(std::size_t y, int k, const KLTable& kl) {
  check_generator(kl.rank(), k);
  auto prod = right_multiply_generator(c_basis_element(y, kl), k);
  return to_expansion(change_basis(prod, Basis::C, kl));
}

StructureConstants::StructureConstants(int m) : m_(m), gens_(m > 1 ? m - 1 : 0) {
  const auto& kl = kl_table(m);
  const std::size_t n = SymmetricGroup::get(m).size();
  cprime_.resize(n * gens_);
  c_.resize(n * gens_);
  for (std::size_t y = 0; y < n; ++y)
    for (int k = 1; k < m; ++k) {
      cprime_[y * gens_ + (k - 1)] = structure_constants_right(y, k, kl);
      c_[y * gens_ + (k - 1)] = c_structure_constants_right(y, k, kl);
    }
}

const StructureConstants& StructureConstants::get(int m) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<StructureConstants>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[m];
  if (!slot) slot.reset(new StructureConstants(m));
  return *slot;
}

// ---------------------------------------------------------------------------
// Cells

namespace {

// rows[v] = set of u reachable from v (including v itself).
std::vector<std::uint64_t> reachability(const std::vector<std::vector<std::size_t>>& edges, std::size_t words) {
  const std::size_t n = edges.size();
  std::vector<std::uint64_t> rows(n * words, 0);
  std::vector<std::size_t> stack;
  for (std::size_t v = 0; v < n; ++v) {
    auto* row = &rows[v * words];
    row[v / 64] |= std::uint64_t{1} << (v % 64);
    stack.assign(1, v);
    while (!stack.empty()) {
      const std::size_t a = stack.back();
      stack.pop_back();
      for (std::size_t b : edges[a])
        if (!((row[b / 64] >> (b % 64)) & 1U)) {
          row[b / 64] |= std::uint64_t{1} << (b % 64);
          stack.push_back(b);
        }
    }
  }
  return rows;
}

template <class Same>
void classes(std::size_t n, Same same, std::vector<std::vector<std::size_t>>& cells, std::vector<std::size_t>& id) {
  id.assign(n, static_cast<std::size_t>(-1));
  cells.clear();
  for (std::size_t w = 0; w < n; ++w) {
    if (id[w] != static_cast<std::size_t>(-1)) continue;
    std::vector<std::size_t> cell;
    for (std::size_t x = w; x < n; ++x)
      if (id[x] == static_cast<std::size_t>(-1) && same(x, w)) {
        id[x] = cells.size();
        cell.push_back(x);
      }
    cells.push_back(std::move(cell));
  }
}

}  // namespace

CellStructure::CellStructure(int m) : m_(m) {
  const auto& G = SymmetricGroup::get(m);
  const auto& sc = StructureConstants::get(m);
  n_ = G.size();
  words_ = (n_ + 63) / 64;
  std::vector<std::vector<std::size_t>> right_edges(n_), all_edges(n_);
  for (std::size_t y = 0; y < n_; ++y)
    for (int k = 1; k < m; ++k)
      for (const auto& t : sc.cprime(y, k))
        if (t.index != y) right_edges[y].push_back(t.index);
  for (std::size_t y = 0; y < n_; ++y) {
    for (std::size_t x : right_edges[y]) {
      all_edges[y].push_back(x);
      all_edges[G.inverse(y)].push_back(G.inverse(x));
    }
  }
  leqR_ = reachability(right_edges, words_);
  leqLR_ = reachability(all_edges, words_);
  classes(n_, [&](std::size_t x, std::size_t w) { return leq_R(x, w) && leq_R(w, x); }, right_, right_id_);
  classes(n_, [&](std::size_t x, std::size_t w) { return leq_L(x, w) && leq_L(w, x); }, left_, left_id_);
  classes(n_, [&](std::size_t x, std::size_t w) { return leq_LR(x, w) && leq_LR(w, x); }, two_sided_,
          two_sided_id_);
}

const CellStructure& CellStructure::get(int m) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<CellStructure>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[m];
  if (!slot) slot.reset(new CellStructure(m));
  return *slot;
}

bool CellStructure::leq_L(std::size_t x, std::size_t y) const {
  const auto& G = SymmetricGroup::get(m_);
  return leq_R(G.inverse(x), G.inverse(y));
}

Partition CellStructure::two_sided_shape(std::size_t id) const {
  return rs_insert(SymmetricGroup::get(m_).element(two_sided_.at(id).front())).P.shape();
}

std::vector<std::size_t> CellStructure::down_set(std::size_t w) const {
  std::vector<std::size_t> out;
  for (std::size_t z = 0; z < n_; ++z)
    if (leq_R(z, w)) out.push_back(z);
  return out;
}

std::vector<std::size_t> CellStructure::strict_down_set(std::size_t w) const {
  std::vector<std::size_t> out;
  for (std::size_t z = 0; z < n_; ++z)
    if (less_R(z, w)) out.push_back(z);
  return out;
}

nlohmann::json CellStructure::to_json() const {
  const auto& G = SymmetricGroup::get(m_);
  auto dump = [&](const std::vector<std::vector<std::size_t>>& cells) {
    auto arr = nlohmann::json::array();
    for (const auto& c : cells) {
      auto elems = nlohmann::json::array();
      for (std::size_t w : c) elems.push_back(G.element(w).to_string());
      arr.push_back({{"shape", rs_insert(G.element(c.front())).P.shape().parts()}, {"elements", elems}});
    }
    return arr;
  };
  return {{"m", m_},
          {"right_cells", dump(right_)},
          {"left_cells", dump(left_)},
          {"two_sided_cells", dump(two_sided_)}};
}

namespace {

template <class Key>
std::vector<std::vector<std::size_t>> fibres(int m, Key key) {
  const auto& G = SymmetricGroup::get(m);
  std::map<decltype(key(G.element(0))), std::vector<std::size_t>> groups;
  for (std::size_t w = 0; w < G.size(); ++w) groups[key(G.element(w))].push_back(w);
  std::vector<std::vector<std::size_t>> out;
  for (auto& [k, v] : groups) out.push_back(std::move(v));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<std::vector<std::size_t>> rs_right_cells(int m) {
  return fibres(m, [](const Permutation& w) { return rs_insert(w).Q; });
}

std::vector<std::vector<std::size_t>> rs_left_cells(int m) {
  return fibres(m, [](const Permutation& w) { return rs_insert(w).P; });
}

std::vector<std::vector<std::size_t>> rs_two_sided_cells(int m) {
  return fibres(m, [](const Permutation& w) { return rs_insert(w).P.shape(); });
}

// ---------------------------------------------------------------------------
// Parabolic checks

namespace {

std::string perm_at(int m, std::size_t idx) { return SymmetricGroup::get(m).element(idx).to_string(); }

std::size_t embed_index(int n, std::size_t idx) {
  return lex_rank(SymmetricGroup::get(n).element(idx).embedded(n + 1));
}

}  // namespace

Report verify_parabolic_compatibility(int n) {
  Report r{"parabolic compatibility of structure constants and preorders, n=" + std::to_string(n), 0, {}};
  if (n < 1) throw std::invalid_argument("n must be at least 1");
  const auto& small = StructureConstants::get(n);
  const auto& big = StructureConstants::get(n + 1);
  const auto& Gs = SymmetricGroup::get(n);
  const auto& Gb = SymmetricGroup::get(n + 1);
  for (std::size_t y = 0; y < Gs.size(); ++y)
    for (int k = 1; k < n; ++k) {
      Expansion mapped = small.cprime(y, k);
      for (auto& t : mapped) t.index = embed_index(n, t.index);
      std::sort(mapped.begin(), mapped.end(),
                [](const ExpansionTerm& a, const ExpansionTerm& b) { return a.index < b.index; });
      r.expect(mapped == big.cprime(embed_index(n, y), k), [&] {
        return "alpha differs for y=" + perm_at(n, y) + ", s" + std::to_string(k);
      });
    }
  const auto& cs = CellStructure::get(n);
  const auto& cb = CellStructure::get(n + 1);
  for (std::size_t x = 0; x < Gs.size(); ++x)
    for (std::size_t y = 0; y < Gs.size(); ++y)
      r.expect(cs.leq_R(x, y) == cb.leq_R(embed_index(n, x), embed_index(n, y)), [&] {
        return "right preorder of S_n is not the restriction at x=" + perm_at(n, x) + ", y=" + perm_at(n, y);
      });
  for (std::size_t x = 0; x < Gb.size(); ++x)
    for (std::size_t y = 0; y < Gb.size(); ++y) {
      if (cb.two_sided_cell_of(x) != cb.two_sided_cell_of(y) || !cb.leq_R(x, y)) continue;
      r.expect(cb.right_cell_of(x) == cb.right_cell_of(y), [&] {
        return "x ~LR y and x <=R y but not x ~R y for x=" + perm_at(n + 1, x) + ", y=" + perm_at(n + 1, y);
      });
    }
  return r;
}

Report verify_parabolic_expansion(int n) {
  Report r{"expansion of C'_{yv} T_s and C_{yv} T_s over X* x S_n, n=" + std::to_string(n), 0, {}};
  if (n < 2) throw std::invalid_argument("n must be at least 2");
  const int m = n + 1;
  const auto& Gs = SymmetricGroup::get(n);
  const auto& Gb = SymmetricGroup::get(m);
  const auto& kls = kl_table(n);
  const auto& klb = kl_table(m);
  const auto& cs = CellStructure::get(n);
  const auto& cb = CellStructure::get(m);
  const auto xstar = coset_reps_x_star(n);

  // w = x u with x in X*, u in S_n.
  std::vector<std::pair<std::size_t, std::size_t>> factor(Gb.size());
  std::vector<std::size_t> xstar_idx;
  for (const auto& x : xstar) xstar_idx.push_back(lex_rank(x));
  for (std::size_t w = 0; w < Gb.size(); ++w) {
    bool found = false;
    for (std::size_t i = 0; i < xstar.size() && !found; ++i) {
      const Permutation u = xstar[i].inverse() * Gb.element(w);
      if (u.fixes_above(n)) {
        factor[w] = {i, lex_rank(u.restricted(n))};
        found = true;
      }
    }
    if (!found) throw std::logic_error("element without an X* x S_n factorisation");
  }

  for (std::size_t yi = 0; yi < xstar.size(); ++yi) {
    const Permutation& y = xstar[yi];
    for (std::size_t v = 0; v < Gs.size(); ++v) {
      const std::size_t yv = lex_rank(y * Gs.element(v).embedded(m));
      for (int k = 1; k < n; ++k) {
        const std::string where =
            "y=" + y.to_string() + ", v=" + perm_at(n, v) + ", s" + std::to_string(k);
        // alpha_{v,T_s,u} and alpha_{v,j(T_s),u} inside S_n, by direct multiplication.
        const auto cv = cprime_basis_element(v, kls);
        const auto alpha = change_basis(right_multiply_generator(cv, k), Basis::Cprime, kls);
        const auto js = j_involution(HeckeElement::basis_element(n, Basis::T, Gs.right_gen(0, k)));
        const auto alpha_j = change_basis(t_multiply(cv, js), Basis::Cprime, kls);

        const auto big_cprime =
            change_basis(right_multiply_generator(cprime_basis_element(yv, klb), k), Basis::Cprime, klb);
        const auto big_c = change_basis(right_multiply_generator(c_basis_element(yv, klb), k), Basis::C, klb);

        for (std::size_t w = 0; w < Gb.size(); ++w) {
          const auto [xi, u] = factor[w];
          if (xi == yi) {
            r.expect(big_cprime[w] == alpha[u], [&] {
              return "C' leading coefficient at u=" + perm_at(n, u) + " differs from alpha (" + where + ")";
            });
            const int sign = (Gs.length(u) - Gs.length(v)) % 2 ? -1 : 1;
            const LaurentPoly lambda = alpha_j[u].bar().scaled(sign);
            r.expect(big_c[w] == lambda, [&] {
              return "C leading coefficient at u=" + perm_at(n, u) + " is not (-1)^(l(u)-l(v)) bar(alpha_j) (" +
                     where + ")";
            });
            continue;
          }
          for (const auto* h : {&big_cprime, &big_c}) {
            if ((*h)[w].is_zero()) continue;
            const bool ok = Gb.bruhat_leq(xstar_idx[xi], lex_rank(y)) && cs.leq_LR(u, v) && cb.leq_R(w, yv);
            r.expect(ok, [&] {
              return std::string(h == &big_c ? "C" : "C'") + " remainder term " + perm_at(m, w) +
                     " outside x<y, u<=LR v, xu<=R yv (" + where + ")";
            });
          }
        }
      }
    }
  }
  return r;
}

}  // namespace klspecht
