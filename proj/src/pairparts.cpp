#include "klspecht/pairparts.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "klspecht/hecke.hpp"

namespace klspecht {

namespace {

std::vector<int> starts_of(const Composition& mu) {
  std::vector<int> s(mu.size() + 1, 0);
  for (std::size_t i = 0; i < mu.size(); ++i) s[i + 1] = s[i] + mu[i];
  return s;
}

Permutation w_J_of(const Composition& mu) { return parabolic(mu.total(), j_of_composition(mu)).longest; }

std::string seq_string(const Sequence& t) {
  std::string s = "(";
  for (std::size_t i = 0; i < t.size(); ++i) s += (i ? "," : "") + std::to_string(t[i]);
  return s + ")";
}

std::string parts_string(const std::vector<int>& p) { return seq_string(p); }

std::vector<std::size_t> sorted_unique(std::vector<std::size_t> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

PairsReport make_report(const Composition& mu, std::optional<Partition> lambda, std::string claim) {
  PairsReport r;
  r.mu = mu;
  r.lambda = std::move(lambda);
  r.report.claim = std::move(claim);
  return r;
}

Integer factorial(int n) {
  Integer f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

// Whether the set is a union of left cells.
bool is_union_of_left_cells(int m, const std::vector<std::size_t>& set) {
  const auto& cs = CellStructure::get(m);
  const std::set<std::size_t> s(set.begin(), set.end());
  for (std::size_t id : left_cells_meeting(m, set))
    for (std::size_t w : cs.left_cells()[id])
      if (!s.count(w)) return false;
  return true;
}

}  // namespace

std::vector<int> d_mu(const Composition& mu, int i) {
  if (i < 1 || i > static_cast<int>(mu.size())) throw std::out_of_range("d_mu index out of range");
  const int start = starts_of(mu)[static_cast<std::size_t>(i) - 1];
  std::vector<int> d;
  for (int v = start + mu[static_cast<std::size_t>(i) - 1]; v > start; --v) d.push_back(v);
  return d;
}

std::vector<Sequence> sequences_of_type(const Composition& mu) {
  Sequence t;
  for (std::size_t i = 0; i < mu.size(); ++i) t.insert(t.end(), static_cast<std::size_t>(mu[i]), static_cast<int>(i) + 1);
  std::vector<Sequence> out;
  do out.push_back(t);
  while (std::next_permutation(t.begin(), t.end()));
  return out;
}

bool has_type(const Sequence& t, const Composition& mu) {
  std::vector<int> count(mu.size() + 1, 0);
  for (int s : t) {
    if (s < 1 || s > static_cast<int>(mu.size())) return false;
    ++count[static_cast<std::size_t>(s)];
  }
  for (std::size_t i = 0; i < mu.size(); ++i)
    if (count[i + 1] != mu[i]) return false;
  return true;
}

Permutation w_of_sequence(const Sequence& t, const Composition& mu) {
  if (!has_type(t, mu)) throw std::invalid_argument("sequence " + seq_string(t) + " does not have type " + mu.to_string());
  const auto start = starts_of(mu);
  std::vector<int> used(mu.size(), 0), one_line;
  for (int s : t) {
    const auto i = static_cast<std::size_t>(s) - 1;
    one_line.push_back(start[i] + mu[i] - used[i]++);
  }
  return Permutation(std::move(one_line));
}

Sequence sequence_of_w(const Permutation& w, const Composition& mu) {
  if (w.rank() != mu.total()) throw std::invalid_argument("rank differs from |mu|");
  const auto start = starts_of(mu);
  Sequence t;
  for (int p = 1; p <= w.rank(); ++p) {
    const int v = w(p);
    const auto it = std::lower_bound(start.begin() + 1, start.end(), v);
    t.push_back(static_cast<int>(it - start.begin()));
  }
  if (w_of_sequence(t, mu) != w)
    throw std::invalid_argument(w.to_string() + " is not of the form w(t) for type " + mu.to_string());
  return t;
}

Quality quality_and_sharp(const Sequence& t) {
  const int r = t.empty() ? 0 : *std::max_element(t.begin(), t.end());
  std::vector<int> good_count(static_cast<std::size_t>(r) + 1, 0);
  Quality q;
  for (int s : t) {
    const auto i = static_cast<std::size_t>(s);
    const bool good = s == 1 || good_count[i - 1] > good_count[i];
    q.good.push_back(good);
    if (good) ++good_count[i];
  }
  std::vector<int> parts(good_count.begin() + 1, good_count.end());
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  q.sharp = Partition(std::move(parts));
  return q;
}

bool preceq(const std::vector<int>& a, const std::vector<int>& b) { return componentwise_leq(a, b); }

bool is_pair_of_partitions(const Partition& lambda, const Composition& mu) {
  if (lambda.size() > mu.size()) return false;
  for (std::size_t i = 0; i < lambda.size(); ++i)
    if (lambda[i] > mu[i]) return false;
  return true;
}

std::vector<Partition> pair_partners(const Composition& mu) {
  std::vector<Partition> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, std::size_t i, int bound) -> void {
    out.emplace_back(cur);
    if (i == mu.size()) return;
    for (int p = 1; p <= std::min(bound, mu[i]); ++p) {
      cur.push_back(p);
      self(self, i + 1, p);
      cur.pop_back();
    }
  };
  rec(rec, 0, mu.total());
  std::sort(out.begin(), out.end(), [](const Partition& a, const Partition& b) { return a.parts() < b.parts(); });
  return out;
}

bool is_c_semistandard(const Tableau& T) {
  const auto& rows = T.rows();
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) {
      if (j > 0 && rows[i][j - 1] >= rows[i][j]) return false;
      if (i > 0 && rows[i - 1][j] > rows[i][j]) return false;
    }
  return true;
}

std::vector<Tableau> c_semistandard_tableaux(const Partition& shape, const Composition& mu) {
  std::vector<Tableau> out;
  if (shape.total() != mu.total()) return out;
  std::vector<std::vector<int>> rows;
  for (int len : shape.parts()) rows.emplace_back(static_cast<std::size_t>(len), 0);
  std::vector<int> left(mu.parts());
  std::vector<Node> nodes;
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) nodes.emplace_back(static_cast<int>(i), static_cast<int>(j));
  auto rec = [&](auto&& self, std::size_t k) -> void {
    if (k == nodes.size()) {
      out.emplace_back(rows);
      return;
    }
    const auto [i, j] = nodes[k];
    const int lo = std::max(j > 0 ? rows[i][j - 1] + 1 : 1, i > 0 ? rows[i - 1][j] : 1);
    for (int s = lo; s <= static_cast<int>(mu.size()); ++s) {
      if (left[static_cast<std::size_t>(s) - 1] == 0) continue;
      --left[static_cast<std::size_t>(s) - 1];
      rows[i][j] = s;
      self(self, k + 1);
      ++left[static_cast<std::size_t>(s) - 1];
    }
    rows[i][j] = 0;
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Tableau> c_semistandard_tableaux(const Composition& mu) {
  std::vector<Tableau> out;
  for (const auto& shape : partitions_of(mu.total())) {
    auto part = c_semistandard_tableaux(shape, mu);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

WordAndP word_and_ptableau(const Tableau& T, const Composition& mu) {
  if (!is_c_semistandard(T)) throw std::invalid_argument("tableau is not c-semistandard");
  const auto& rows = T.rows();
  WordAndP out;
  const int cols = rows.empty() ? 0 : static_cast<int>(rows.front().size());
  for (int c = 0; c < cols; ++c)
    for (int i = static_cast<int>(rows.size()) - 1; i >= 0; --i)
      if (c < static_cast<int>(rows[static_cast<std::size_t>(i)].size()))
        out.word.push_back(rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)]);
  if (!has_type(out.word, mu)) throw std::invalid_argument("tableau does not have type " + mu.to_string());
  out.w = w_of_sequence(out.word, mu);
  out.P = rs_insert(out.w).P;
  auto shortcut = rows;
  std::vector<std::size_t> used(mu.size(), 0);
  for (auto it = shortcut.rbegin(); it != shortcut.rend(); ++it)
    for (int& e : *it) {
      const auto i = static_cast<std::size_t>(e) - 1;
      e = d_mu(mu, e)[used[i]++];
    }
  out.shortcut = Tableau(std::move(shortcut));
  return out;
}

std::vector<std::size_t> l_mu(const Composition& mu) {
  const int m = mu.total();
  const auto& cs = CellStructure::get(m);
  const std::size_t j = lex_rank(w_J_of(mu));
  std::vector<std::size_t> out;
  for (std::size_t w = 0; w < SymmetricGroup::get(m).size(); ++w)
    if (cs.leq_L(w, j)) out.push_back(w);
  return out;
}

std::vector<std::size_t> l_mu_lambda(const Composition& mu, const Partition& lambda) {
  std::vector<std::size_t> out;
  for (const auto& t : sequences_of_type(mu))
    if (quality_and_sharp(t).sharp == lambda) out.push_back(lex_rank(w_of_sequence(t, mu)));
  return sorted_unique(std::move(out));
}

std::vector<std::size_t> l_lambda_mu(const Composition& mu, const Partition& lambda) {
  std::vector<std::size_t> out;
  for (const auto& t : sequences_of_type(mu))
    if (preceq(lambda.parts(), quality_and_sharp(t).sharp.parts())) out.push_back(lex_rank(w_of_sequence(t, mu)));
  return sorted_unique(std::move(out));
}

std::vector<std::size_t> left_cells_meeting(int m, const std::vector<std::size_t>& set) {
  const auto& cs = CellStructure::get(m);
  std::vector<std::size_t> ids;
  for (std::size_t w : set) ids.push_back(cs.left_cell_of(w));
  return sorted_unique(std::move(ids));
}

nlohmann::json to_json(const PairsReport& r) {
  nlohmann::json j;
  j["mu"] = r.mu.parts();
  j["lambda"] = r.lambda ? nlohmann::json(r.lambda->parts()) : nlohmann::json(nullptr);
  j["claim"] = r.report.claim;
  j["experimental"] = r.experimental;
  j["checked"] = r.report.checked;
  j["passed"] = r.report.passed();
  j["counterexamples"] = r.report.violations;
  return j;
}

PairsReport verify_sequence_bijection(const Composition& mu) {
  const int m = mu.total();
  auto r = make_report(mu, std::nullopt, "sequences of type mu correspond bijectively to L(mu)");
  const auto seqs = sequences_of_type(mu);
  Integer multinomial = factorial(m);
  for (int p : mu.parts()) multinomial /= factorial(p);
  r.report.expect(Integer(seqs.size()) == multinomial, [&] {
    return "|R(mu)| = " + std::to_string(seqs.size()) + " differs from the multinomial coefficient";
  });
  const auto L = l_mu(mu);
  const auto& pd = parabolic(m, j_of_composition(mu));
  r.report.expect(L.size() == seqs.size(), [&] { return "|L(mu)| = " + std::to_string(L.size()) + " differs from |R(mu)|"; });
  r.report.expect(pd.reps.size() == seqs.size(), [&] { return "|X_J| = " + std::to_string(pd.reps.size()) + " differs from |R(mu)|"; });
  std::vector<std::size_t> images;
  for (const auto& t : seqs) {
    const Permutation w = w_of_sequence(t, mu);
    images.push_back(lex_rank(w));
    r.report.expect(sequence_of_w(w, mu) == t, [&] { return "w(t) does not recover t = " + seq_string(t); });
  }
  const auto distinct = sorted_unique(images);
  r.report.expect(distinct.size() == images.size(), [] { return std::string("w(t) is not injective"); });
  r.report.expect(distinct == L, [] { return std::string("the image of w(t) differs from L(mu)"); });
  std::vector<int> concat;
  for (int i = 1; i <= static_cast<int>(mu.size()); ++i) {
    const auto d = d_mu(mu, i);
    concat.insert(concat.end(), d.begin(), d.end());
  }
  r.report.expect(Permutation(concat) == pd.longest, [] { return std::string("the runs d(i) do not form w_J"); });
  r.report.expect(w_of_sequence(seqs.front(), mu) == pd.longest, [] { return std::string("w(1..1 2..2 ...) differs from w_J"); });
  std::vector<std::size_t> from_reps;
  for (const auto& e : pd.reps) from_reps.push_back(lex_rank(e.inverse() * pd.longest));
  r.report.expect(sorted_unique(from_reps) == L, [] { return std::string("X_J^-1 w_J differs from L(mu)"); });
  return r;
}

PairsReport verify_kostka_cell_count(const Composition& mu, const Partition& lambda) {
  const int m = mu.total();
  auto r = make_report(mu, lambda, "left cells of shape lambda in L(mu) match c-semistandard tableaux");
  const auto& G = SymmetricGroup::get(m);
  std::set<Tableau> insertion;
  for (std::size_t w : l_mu(mu)) {
    Tableau P = rs_insert(G.element(w)).P;
    if (P.shape() == lambda) insertion.insert(std::move(P));
  }
  const auto tableaux = c_semistandard_tableaux(lambda, mu);
  r.report.expect(insertion.size() == tableaux.size(), [&] {
    return std::to_string(insertion.size()) + " left cells but " + std::to_string(tableaux.size()) + " tableaux";
  });
  std::set<Tableau> from_T;
  for (const auto& T : tableaux) {
    const auto wp = word_and_ptableau(T, mu);
    r.report.expect(wp.shortcut == wp.P, [&] { return "shortcut differs from insertion for " + T.to_string(); });
    r.report.expect(from_T.insert(wp.P).second, [&] { return "P_T repeats for " + T.to_string(); });
  }
  r.report.expect(from_T == insertion, [] { return std::string("the P_T differ from the insertion tableaux of L(mu)"); });
  return r;
}

PairsReport verify_sharp_columns(const Composition& mu) {
  auto r = make_report(mu, std::nullopt, "sharp(t) is read off the columns of P(w(t))");
  const auto start = starts_of(mu);
  for (const auto& t : sequences_of_type(mu)) {
    const auto q = quality_and_sharp(t);
    const Tableau P = rs_insert(w_of_sequence(t, mu)).P;
    std::vector<int> counts(mu.size(), 0);
    bool placed = true;
    for (std::size_t i = 0; i < mu.size(); ++i) {
      std::vector<std::pair<int, int>> members;  // (value, row)
      for (std::size_t row = 0; row < P.rows().size(); ++row)
        if (i < P.rows()[row].size()) {
          const int v = P.rows()[row][i];
          if (v > start[i] && v <= start[i + 1]) members.emplace_back(v, static_cast<int>(row) + 1);
        }
      counts[i] = static_cast<int>(members.size());
      std::sort(members.begin(), members.end());
      for (std::size_t k = 0; k < members.size(); ++k)
        placed = placed && members[k].first == start[i] + static_cast<int>(k) + 1 && members[k].second <= counts[i];
    }
    while (!counts.empty() && counts.back() == 0) counts.pop_back();
    r.report.expect(counts == q.sharp.parts(), [&] {
      return "t = " + seq_string(t) + ": sharp " + parts_string(q.sharp.parts()) + ", columns " + parts_string(counts);
    });
    r.report.expect(placed, [&] { return "t = " + seq_string(t) + ": column members are not the smallest in the top rows"; });
    r.report.expect(preceq(q.sharp.parts(), mu.parts()), [&] { return "t = " + seq_string(t) + ": sharp exceeds mu"; });
  }
  return r;
}

PairsReport verify_cell_unions(const Composition& mu, const Partition& lambda) {
  if (!is_pair_of_partitions(lambda, mu)) throw std::invalid_argument("(lambda, mu) is not a pair of partitions");
  const int m = mu.total();
  auto r = make_report(mu, lambda, "L(mu;lambda) and L(lambda,mu) are unions of left cells");
  const auto A = l_mu_lambda(mu, lambda);
  const auto B = l_lambda_mu(mu, lambda);
  r.report.expect(is_union_of_left_cells(m, A), [] { return std::string("L(mu;lambda) is not a union of left cells"); });
  r.report.expect(is_union_of_left_cells(m, B), [] { return std::string("L(lambda,mu) is not a union of left cells"); });
  std::vector<std::size_t> uni;
  for (const auto& nu : pair_partners(mu))
    if (preceq(lambda.parts(), nu.parts())) {
      const auto part = l_mu_lambda(mu, nu);
      uni.insert(uni.end(), part.begin(), part.end());
    }
  r.report.expect(sorted_unique(uni) == B, [] { return std::string("L(lambda,mu) differs from the union of L(mu;nu)"); });
  const auto L = l_mu(mu);
  r.report.expect(std::includes(L.begin(), L.end(), B.begin(), B.end()), [] { return std::string("L(lambda,mu) leaves L(mu)"); });
  return r;
}

PairsReport verify_prefix_monotonicity(const Composition& mu) {
  const int m = mu.total();
  auto r = make_report(mu, std::nullopt, "sharp partitions grow along prefixes; prefix-closed sets");
  const auto& pd = parabolic(m, j_of_composition(mu));
  std::map<Permutation, Partition> sharp;
  for (const auto& e : pd.reps) sharp[e] = quality_and_sharp(sequence_of_w(e.inverse() * pd.longest, mu)).sharp;
  std::vector<std::pair<Partition, std::set<std::size_t>>> members;
  for (const auto& lambda : pair_partners(mu)) {
    const auto B = l_lambda_mu(mu, lambda);
    members.emplace_back(lambda, std::set<std::size_t>(B.begin(), B.end()));
  }
  for (const auto& e : pd.reps) {
    const std::size_t we = lex_rank(e.inverse() * pd.longest);
    for (const auto& d : prefixes(e)) {
      const auto it = sharp.find(d);
      r.report.expect(it != sharp.end(), [&] { return "prefix " + d.to_string() + " of " + e.to_string() + " leaves X_J"; });
      if (it == sharp.end()) continue;
      r.report.expect(preceq(sharp[e].parts(), it->second.parts()), [&] {
        return "e = " + e.to_string() + ", d = " + d.to_string() + ": sharp " + parts_string(sharp[e].parts()) +
               " not below " + parts_string(it->second.parts());
      });
      const std::size_t wd = lex_rank(d.inverse() * pd.longest);
      for (const auto& [lambda, set] : members)
        if (set.count(we))
          r.report.expect(set.count(wd) > 0, [&, lam = lambda] {
            return "lambda = " + parts_string(lam.parts()) + ": prefix " + d.to_string() + " of " + e.to_string() +
                   " leaves the set";
          });
    }
  }
  return r;
}

PairsReport verify_full_pair(const Partition& mu) {
  const Composition c = mu.as_composition();
  const int m = mu.total();
  auto r = make_report(c, mu, "L(mu,mu) is the left cell of w_J(mu)");
  const auto& cs = CellStructure::get(m);
  const auto cell = cs.left_cells()[cs.left_cell_of(lex_rank(w_J_of(c)))];
  r.report.expect(l_lambda_mu(c, mu) == cell, [] { return std::string("L(mu,mu) differs from the left cell of w_J"); });
  return r;
}

PairsReport verify_last_part_one(const Partition& mu) {
  const int m = mu.total();
  if (m < 2 || mu.size() < 2 || mu.parts().back() != 1)
    throw std::invalid_argument("needs a partition with at least two parts, the last equal to 1");
  std::vector<int> lp(mu.parts().begin(), mu.parts().end() - 1);
  const Partition lambda(lp);
  const Composition c = mu.as_composition();
  auto r = make_report(c, lambda, "L(lambda,mu) = X* C for C the left cell of w_J(lambda)");
  const auto& cs = CellStructure::get(m - 1);
  const auto& Gs = SymmetricGroup::get(m - 1);
  const auto cell = cs.left_cells()[cs.left_cell_of(lex_rank(w_J_of(lambda.as_composition())))];
  std::vector<std::size_t> product;
  for (const auto& x : coset_reps_x_star(m - 1))
    for (std::size_t u : cell) product.push_back(lex_rank(x * Gs.element(u).embedded(m)));
  r.report.expect(sorted_unique(product) == l_lambda_mu(c, lambda), [] { return std::string("L(lambda,mu) differs from X* C"); });
  return r;
}

PairsReport explore_downward_closure(const Composition& mu, const Partition& lambda) {
  if (!is_pair_of_partitions(lambda, mu)) throw std::invalid_argument("(lambda, mu) is not a pair of partitions");
  const int m = mu.total();
  auto r = make_report(mu, lambda, "open question: T1 = L(mu) minus L(lambda,mu) is closed downwards under <=_L");
  r.experimental = true;
  const auto& cs = CellStructure::get(m);
  const auto& G = SymmetricGroup::get(m);
  const auto L = l_mu(mu);
  const auto B = l_lambda_mu(mu, lambda);
  std::vector<std::size_t> T1;
  std::set_difference(L.begin(), L.end(), B.begin(), B.end(), std::back_inserter(T1));
  const std::set<std::size_t> in_T1(T1.begin(), T1.end());
  for (std::size_t y : T1)
    for (std::size_t x = 0; x < G.size(); ++x)
      if (cs.leq_L(x, y))
        r.report.expect(in_T1.count(x) > 0, [&] {
          return G.element(x).to_string() + " <=_L " + G.element(y).to_string() + " but only the latter lies in T1";
        });
  return r;
}

std::vector<PairsReport> verify_all_pairs(int m) {
  std::vector<PairsReport> out;
  const auto shapes = partitions_of(m);
  for (const auto& mu : compositions_of(m)) {
    out.push_back(verify_sequence_bijection(mu));
    out.push_back(verify_sharp_columns(mu));
    out.push_back(verify_prefix_monotonicity(mu));
    for (const auto& lambda : shapes) out.push_back(verify_kostka_cell_count(mu, lambda));
    for (const auto& lambda : pair_partners(mu)) out.push_back(verify_cell_unions(mu, lambda));
    if (mu.is_partition()) {
      const Partition p(mu.parts());
      out.push_back(verify_full_pair(p));
      if (p.size() >= 2 && p.parts().back() == 1 && m > 1) out.push_back(verify_last_part_one(p));
    }
  }
  return out;
}

}  // namespace klspecht
