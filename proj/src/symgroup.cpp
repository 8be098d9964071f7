#include "klspecht/symgroup.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <stdexcept>

namespace klspecht {

Permutation::Permutation(std::vector<int> one_line) : images_(std::move(one_line)) {
  std::vector<bool> seen(images_.size() + 1, false);
  for (int v : images_) {
    if (v < 1 || v > static_cast<int>(images_.size()) || seen[v])
      throw std::invalid_argument("not a permutation of 1..m");
    seen[v] = true;
  }
}

Permutation Permutation::identity(int m) {
  std::vector<int> v(static_cast<std::size_t>(m));
  std::iota(v.begin(), v.end(), 1);
  return Permutation(std::move(v));
}

Permutation Permutation::generator(int m, int i) {
  if (i < 1 || i >= m) throw std::invalid_argument("generator index out of range");
  auto w = identity(m);
  std::swap(w.images_[i - 1], w.images_[i]);
  return w;
}

Permutation Permutation::longest(int m) {
  std::vector<int> v(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) v[i] = m - i;
  return Permutation(std::move(v));
}

Permutation Permutation::from_word(int m, const std::vector<int>& word) {
  auto w = identity(m);
  // Right multiplication by s_k swaps the values k and k+1.
  for (int k : word) {
    if (k < 1 || k >= m) throw std::invalid_argument("generator index out of range");
    for (auto& x : w.images_) {
      if (x == k) x = k + 1;
      else if (x == k + 1) x = k;
    }
  }
  return w;
}

Permutation Permutation::parse(std::string_view text, int m) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  if (text == "e") {
    if (m < 0) throw std::invalid_argument("rank needed to parse the identity 'e'");
    return identity(m);
  }
  std::vector<int> v;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    auto tok = text.substr(pos, comma - pos);
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size())
      throw std::invalid_argument("malformed permutation: '" + std::string(text) + "'");
    v.push_back(value);
    pos = comma + 1;
  }
  if (m >= 0 && static_cast<int>(v.size()) != m)
    throw std::invalid_argument("permutation '" + std::string(text) + "' does not have rank " + std::to_string(m));
  return Permutation(std::move(v));
}

Permutation Permutation::inverse() const {
  std::vector<int> v(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) v[images_[i] - 1] = static_cast<int>(i) + 1;
  return Permutation(std::move(v));
}

int Permutation::length() const {
  int inv = 0;
  for (std::size_t i = 0; i < images_.size(); ++i)
    for (std::size_t j = i + 1; j < images_.size(); ++j)
      if (images_[i] > images_[j]) ++inv;
  return inv;
}

std::vector<int> Permutation::reduced_word() const {
  // Peel left descents: w = s_k (s_k w).
  std::vector<int> word;
  auto cur = images_;
  bool found = true;
  while (found) {
    found = false;
    for (std::size_t k = 0; k + 1 < cur.size(); ++k) {
      if (cur[k] > cur[k + 1]) {
        std::swap(cur[k], cur[k + 1]);
        word.push_back(static_cast<int>(k) + 1);
        found = true;
        break;
      }
    }
  }
  return word;
}

bool Permutation::is_right_descent(int k) const {
  int pk = 0, pk1 = 0;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] == k) pk = static_cast<int>(i);
    if (images_[i] == k + 1) pk1 = static_cast<int>(i);
  }
  return pk1 < pk;
}

Permutation Permutation::embedded(int m) const {
  if (m < rank()) throw std::invalid_argument("cannot embed into a smaller rank");
  auto v = images_;
  for (int i = rank() + 1; i <= m; ++i) v.push_back(i);
  return Permutation(std::move(v));
}

bool Permutation::fixes_above(int k) const {
  for (int i = k + 1; i <= rank(); ++i)
    if (images_[i - 1] != i) return false;
  return true;
}

Permutation Permutation::restricted(int k) const {
  if (!fixes_above(k)) throw std::invalid_argument("permutation does not lie in the parabolic S_k");
  return Permutation(std::vector<int>(images_.begin(), images_.begin() + k));
}

std::string Permutation::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(images_[i]);
  }
  return s;
}

std::string Permutation::word_string() const {
  auto w = reduced_word();
  if (w.empty()) return "e";
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += " ";
    s += "s" + std::to_string(w[i]);
  }
  return s;
}

Permutation operator*(const Permutation& a, const Permutation& b) { return compose(a, b); }

Permutation compose(const Permutation& a, const Permutation& b) {
  if (a.rank() != b.rank()) throw std::invalid_argument("rank mismatch in compose");
  std::vector<int> v(static_cast<std::size_t>(a.rank()));
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = b(a(static_cast<int>(i) + 1));
  return Permutation(std::move(v));
}

bool bruhat_leq(const Permutation& x, const Permutation& y) {
  if (x.rank() != y.rank()) throw std::invalid_argument("rank mismatch in bruhat_leq");
  const int m = x.rank();
  // x <= y iff #{j <= i : x(j) >= k} <= #{j <= i : y(j) >= k} for all i, k.
  std::vector<int> cx(static_cast<std::size_t>(m) + 2, 0), cy(static_cast<std::size_t>(m) + 2, 0);
  for (int i = 1; i <= m; ++i) {
    for (int k = 1; k <= x(i); ++k) ++cx[k];
    for (int k = 1; k <= y(i); ++k) ++cy[k];
    for (int k = 1; k <= m; ++k)
      if (cx[k] > cy[k]) return false;
  }
  return true;
}

std::size_t lex_rank(const Permutation& w) {
  const int m = w.rank();
  std::size_t r = 0;
  std::vector<bool> used(static_cast<std::size_t>(m) + 1, false);
  for (int i = 1; i <= m; ++i) {
    int smaller = 0;
    for (int v = 1; v < w(i); ++v)
      if (!used[v]) ++smaller;
    used[w(i)] = true;
    r = r * static_cast<std::size_t>(m - i + 1) + static_cast<std::size_t>(smaller);
  }
  return r;
}

SymmetricGroup::SymmetricGroup(int m) : m_(m) {
  auto cur = Permutation::identity(m).one_line();
  do {
    elements_.emplace_back(cur);
  } while (std::next_permutation(cur.begin(), cur.end()));
  const std::size_t n = elements_.size();
  lengths_.resize(n);
  inverses_.resize(n);
  right_.resize(n * static_cast<std::size_t>(gens()));
  left_.resize(n * static_cast<std::size_t>(gens()));
  for (std::size_t i = 0; i < n; ++i) {
    const auto& w = elements_[i];
    lengths_[i] = w.length();
    inverses_[i] = lex_rank(w.inverse());
    for (int k = 1; k < m; ++k) {
      right_[i * gens() + (k - 1)] = lex_rank(w * Permutation::generator(m, k));
      left_[i * gens() + (k - 1)] = lex_rank(Permutation::generator(m, k) * w);
    }
  }
  by_length_.resize(n);
  std::iota(by_length_.begin(), by_length_.end(), std::size_t{0});
  std::stable_sort(by_length_.begin(), by_length_.end(),
                   [this](std::size_t a, std::size_t b) { return lengths_[a] < lengths_[b]; });
  if (m <= 7) {
    words_per_row_ = (n + 63) / 64;
    bruhat_bits_.assign(n * words_per_row_, 0);
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t x = 0; x < n; ++x)
        if (lengths_[x] <= lengths_[y] && klspecht::bruhat_leq(elements_[x], elements_[y]))
          bruhat_bits_[y * words_per_row_ + x / 64] |= std::uint64_t{1} << (x % 64);
  }
}

const SymmetricGroup& SymmetricGroup::get(int m) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<SymmetricGroup>> cache;
  if (m < 1) throw std::invalid_argument("rank must be at least 1");
  std::lock_guard lock(mu);
  auto& slot = cache[m];
  if (!slot) slot.reset(new SymmetricGroup(m));
  return *slot;
}

std::size_t SymmetricGroup::index_of(const Permutation& w) const {
  if (w.rank() != m_) throw std::invalid_argument("permutation rank does not match the group");
  return lex_rank(w);
}

std::size_t SymmetricGroup::multiply(std::size_t a, std::size_t b) const {
  return lex_rank(elements_[a] * elements_[b]);
}

bool SymmetricGroup::bruhat_leq(std::size_t x, std::size_t y) const {
  if (words_per_row_ == 0) return klspecht::bruhat_leq(elements_[x], elements_[y]);
  return (bruhat_bits_[y * words_per_row_ + x / 64] >> (x % 64)) & 1U;
}

const ParabolicData& parabolic(int m, const GeneratorSet& J) {
  static std::mutex mu;
  static std::map<std::pair<int, GeneratorSet>, std::unique_ptr<ParabolicData>> cache;
  GeneratorSet key = J;
  std::sort(key.begin(), key.end());
  key.erase(std::unique(key.begin(), key.end()), key.end());
  for (int s : key)
    if (s < 1 || s >= m) throw std::invalid_argument("parabolic generator outside 1..m-1");
  std::lock_guard lock(mu);
  auto& slot = cache[{m, key}];
  if (slot) return *slot;

  auto pd = std::make_unique<ParabolicData>();
  pd->m = m;
  pd->J = key;
  // W_J by closure under right multiplication by generators in J.
  std::set<Permutation> sub{Permutation::identity(m)};
  std::vector<Permutation> frontier{Permutation::identity(m)};
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const auto& w : frontier)
      for (int s : key) {
        auto ws = w * Permutation::generator(m, s);
        if (sub.insert(ws).second) next.push_back(ws);
      }
    frontier = std::move(next);
  }
  pd->subgroup.assign(sub.begin(), sub.end());
  pd->longest = *std::max_element(pd->subgroup.begin(), pd->subgroup.end(),
                                  [](const Permutation& a, const Permutation& b) { return a.length() < b.length(); });
  // x is distinguished iff l(s x) > l(x) for all s in J.
  for (const auto& x : SymmetricGroup::get(m).elements()) {
    bool minimal = true;
    for (int s : key)
      if (x.is_left_descent(s)) {
        minimal = false;
        break;
      }
    if (minimal) pd->reps.push_back(x);
  }
  slot = std::move(pd);
  return *slot;
}

std::pair<Permutation, Permutation> parabolic_factor(const ParabolicData& pd, const Permutation& w) {
  // Strip left descents in J until none remain.
  Permutation x = w;
  std::vector<int> peeled;
  bool found = true;
  while (found) {
    found = false;
    for (int s : pd.J)
      if (x.is_left_descent(s)) {
        x = Permutation::generator(pd.m, s) * x;
        peeled.push_back(s);
        found = true;
        break;
      }
  }
  // w = s_{p1} s_{p2} ... x, so u = s_{p1} s_{p2} ...
  Permutation u = Permutation::from_word(pd.m, peeled);
  return {u, x};
}

GeneratorSet j_of_composition(const Composition& mu) {
  const int m = mu.total();
  std::set<int> excluded;
  int partial = 0;
  for (std::size_t i = 0; i + 1 < mu.size(); ++i) {
    partial += mu[i];
    excluded.insert(partial);
  }
  GeneratorSet J;
  for (int s = 1; s < m; ++s)
    if (!excluded.count(s)) J.push_back(s);
  return J;
}

std::vector<Permutation> prefixes(const Permutation& e) {
  // d is a prefix of e iff it is reached from e by stripping right descents.
  std::set<Permutation> seen{e};
  std::vector<Permutation> frontier{e};
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const auto& w : frontier)
      for (int k = 1; k < w.rank(); ++k)
        if (w.is_right_descent(k)) {
          auto d = w * Permutation::generator(w.rank(), k);
          if (seen.insert(d).second) next.push_back(d);
        }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

std::vector<Permutation> coset_reps_x_prime(int n) {
  if (n < 1) throw std::invalid_argument("coset representatives need n >= 1");
  std::vector<Permutation> out;
  for (int i = 1; i <= n + 1; ++i) {
    std::vector<int> word;
    for (int k = n; k >= i; --k) word.push_back(k);
    out.push_back(Permutation::from_word(n + 1, word));
  }
  return out;
}

std::vector<Permutation> coset_reps_x_star(int n) {
  auto xs = coset_reps_x_prime(n);
  for (auto& x : xs) x = x.inverse();
  return xs;
}

void check_rank(int m, bool force) {
  if (m < 1) throw std::invalid_argument("rank must be at least 1");
  if (m > kDefaultRankBound && !force)
    throw std::out_of_range("rank " + std::to_string(m) + " exceeds the safety bound " +
                            std::to_string(kDefaultRankBound) + "; pass the override to proceed");
}

}  // namespace klspecht
