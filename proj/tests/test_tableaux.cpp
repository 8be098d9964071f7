#include <doctest.h>

#include <map>
#include <set>

#include "klspecht/tableaux.hpp"
#include "oracles.hpp"

using klspecht::Composition;
using klspecht::Diagram;
using klspecht::Node;
using klspecht::Partition;
using klspecht::Permutation;
using klspecht::Tableau;

namespace {

using Rows = std::vector<std::vector<int>>;

// Textbook row insertion on plain vectors.
std::pair<Rows, Rows> naive_rs(const std::vector<int>& word) {
  Rows P, Q;
  for (std::size_t step = 0; step < word.size(); ++step) {
    int x = word[step];
    std::size_t r = 0;
    for (;; ++r) {
      if (r == P.size()) {
        P.push_back({x});
        Q.push_back({static_cast<int>(step) + 1});
        break;
      }
      auto it = std::upper_bound(P[r].begin(), P[r].end(), x);
      if (it == P[r].end()) {
        P[r].push_back(x);
        Q[r].push_back(static_cast<int>(step) + 1);
        break;
      }
      std::swap(x, *it);
    }
  }
  return {P, Q};
}

// Every 0-1 matrix with the given row and column sums.
std::vector<std::set<Node>> all_diagrams(const std::vector<int>& rows, const std::vector<int>& cols) {
  std::vector<std::set<Node>> out;
  std::vector<int> left = cols;
  std::set<Node> cur;
  std::function<void(std::size_t)> rec = [&](std::size_t r) {
    if (r == rows.size()) {
      if (std::all_of(left.begin(), left.end(), [](int x) { return x == 0; })) out.push_back(cur);
      return;
    }
    const int c = static_cast<int>(cols.size());
    for (unsigned mask = 0; mask < (1U << c); ++mask) {
      if (__builtin_popcount(mask) != rows[r]) continue;
      bool ok = true;
      for (int j = 0; j < c; ++j)
        if ((mask >> j & 1U) && left[static_cast<std::size_t>(j)] == 0) ok = false;
      if (!ok) continue;
      for (int j = 0; j < c; ++j)
        if (mask >> j & 1U) {
          --left[static_cast<std::size_t>(j)];
          cur.insert({static_cast<int>(r) + 1, j + 1});
        }
      rec(r + 1);
      for (int j = 0; j < c; ++j)
        if (mask >> j & 1U) {
          ++left[static_cast<std::size_t>(j)];
          cur.erase({static_cast<int>(r) + 1, j + 1});
        }
    }
  };
  rec(0);
  return out;
}

}  // namespace

TEST_CASE("conjugates and sorting") {
  CHECK(Composition({2, 1}).conjugate() == Partition({2, 1}));
  CHECK(Composition({3}).conjugate() == Partition({1, 1, 1}));
  CHECK(Composition({1, 2}).sorted() == Partition({2, 1}));
  CHECK(Composition({1, 2}).conjugate() == Partition({2, 1}));
  for (int m = 1; m <= 6; ++m)
    for (const auto& c : klspecht::compositions_of(m)) {
      CHECK(c.sorted().conjugate() == c.conjugate());
      CHECK(c.conjugate().conjugate() == c.sorted());
      auto a = c.parts(), b = c.sorted().parts();
      std::sort(a.begin(), a.end());
      std::sort(b.begin(), b.end());
      CHECK(a == b);
    }
}

TEST_CASE("dominance") {
  CHECK(klspecht::dominance_leq(Partition({1, 1, 1}), Partition({3})));
  CHECK(klspecht::dominance_leq(Partition({2, 2}), Partition({3, 1})));
  CHECK_FALSE(klspecht::dominance_leq(Partition({3, 1}), Partition({2, 2})));
  CHECK(klspecht::dominance_less(Partition({2, 2}), Partition({3, 1})));
  CHECK_FALSE(klspecht::dominance_less(Partition({2, 2}), Partition({2, 2})));
  CHECK_FALSE(klspecht::dominance_leq(Partition({3, 1, 1, 1}), Partition({2, 2, 2})));
  CHECK_FALSE(klspecht::dominance_leq(Partition({2, 2, 2}), Partition({3, 1, 1, 1})));
  CHECK_THROWS_AS(klspecht::dominance_leq(Partition({2}), Partition({2, 1})), std::invalid_argument);
  for (const auto& a : klspecht::partitions_of(6)) {
    CHECK(klspecht::dominance_leq(a, a));
    for (const auto& b : klspecht::partitions_of(6))
      CHECK(klspecht::dominance_leq(a, b) == klspecht::dominance_leq(b.conjugate(), a.conjugate()));
  }
}

TEST_CASE("partition and composition counts") {
  const std::vector<std::size_t> p{1, 1, 2, 3, 5, 7, 11, 15};
  for (int m = 1; m <= 7; ++m) {
    CHECK(klspecht::partitions_of(m).size() == p[static_cast<std::size_t>(m)]);
    CHECK(klspecht::compositions_of(m).size() == (std::size_t{1} << (m - 1)));
  }
  CHECK_THROWS_AS(Composition::parse("2,0,1"), std::invalid_argument);
  CHECK_THROWS_AS(Composition::parse("x"), std::invalid_argument);
  CHECK(Composition::parse(" 2, 1 ") == Composition({2, 1}));
}

TEST_CASE("special diagrams are the unique 0-1 matrices with the given margins") {
  CHECK(klspecht::special_diagram(Composition({2, 1}), Composition({2, 1})) == Diagram::young(Partition({2, 1})));
  const Diagram d = klspecht::special_diagram(Composition({1, 2}), Composition({2, 1}));
  CHECK(d.row_lengths() == std::vector<int>{1, 2});
  CHECK(d.column_lengths() == std::vector<int>{2, 1});
  CHECK(klspecht::special_diagram(Composition({3}), Composition({1, 1, 1})) == Diagram::young(Partition({3})));
  CHECK_THROWS_AS(klspecht::special_diagram(Composition({2, 1}), Composition({3})), std::invalid_argument);
  for (int m = 1; m <= 5; ++m)
    for (const auto& lambda : klspecht::compositions_of(m))
      for (const auto& mu : klspecht::compositions_of(m)) {
        const auto all = all_diagrams(lambda.parts(), mu.parts());
        if (lambda.sorted() != mu.conjugate()) {
          CHECK_THROWS_AS(klspecht::special_diagram(lambda, mu), std::invalid_argument);
          continue;
        }
        REQUIRE(all.size() == 1);
        const Diagram E = klspecht::special_diagram(lambda, mu);
        CHECK(std::set<Node>(E.nodes().begin(), E.nodes().end()) == all.front());
        CHECK(E.is_principal());
      }
}

TEST_CASE("w of a diagram carries the row filling to the column filling") {
  CHECK(klspecht::w_of_diagram(Diagram::young(Partition({3}))) == Permutation::identity(3));
  CHECK(klspecht::w_of_diagram(Diagram::young(Partition({1, 1, 1}))) == Permutation::identity(3));
  CHECK(klspecht::w_of_diagram(Diagram::young(Partition({2, 1}))).one_line() == std::vector<int>{1, 3, 2});
  for (const auto& lambda : klspecht::compositions_of(5))
    for (const auto& mu : klspecht::compositions_of(5)) {
      if (lambda.sorted() != mu.conjugate()) continue;
      const Diagram D = klspecht::special_diagram(lambda, mu);
      std::map<Node, int> row, col;
      int k = 0;
      for (const auto& n : D.nodes()) row[n] = ++k;  // node order is row-major
      std::vector<Node> by_col = D.nodes();
      std::sort(by_col.begin(), by_col.end(), [](Node a, Node b) { return std::tie(a.second, a.first) < std::tie(b.second, b.first); });
      k = 0;
      for (const auto& n : by_col) col[n] = ++k;
      const Permutation w = klspecht::w_of_diagram(D);
      for (const auto& n : D.nodes()) CHECK(w(row[n]) == col[n]);
    }
}

TEST_CASE("Robinson-Schensted agrees with textbook insertion") {
  CHECK(klspecht::rs_insert(Permutation::identity(4)).P == Tableau({{1, 2, 3, 4}}));
  CHECK(klspecht::rs_insert(Permutation::longest(4)).Q == Tableau({{1}, {2}, {3}, {4}}));
  for (int m = 1; m <= 6; ++m) {
    std::set<std::pair<Tableau, Tableau>> seen;
    long long sum_squares = 0;
    for (const auto& lambda : klspecht::partitions_of(m)) sum_squares += oracle::hook_count(lambda.parts()) * oracle::hook_count(lambda.parts());
    CHECK(sum_squares == oracle::factorial(m));
    for (const auto& p : oracle::all_perms(m)) {
      const Permutation w(p);
      const auto rs = klspecht::rs_insert(w);
      const auto [P, Q] = naive_rs(p);
      CHECK(rs.P.rows() == P);
      CHECK(rs.Q.rows() == Q);
      CHECK(rs.P.is_standard());
      CHECK(rs.Q.is_standard());
      CHECK(rs.P.shape() == rs.Q.shape());
      CHECK(klspecht::rs_reverse_insert(rs.P, rs.Q) == w);
      const auto inv = klspecht::rs_insert(w.inverse());
      CHECK(inv.P == rs.Q);
      CHECK(inv.Q == rs.P);
      seen.insert({rs.P, rs.Q});
    }
    CHECK(static_cast<long long>(seen.size()) == oracle::factorial(m));
  }
  CHECK_THROWS_AS(klspecht::rs_reverse_insert(Tableau({{1, 2}}), Tableau({{1}, {2}})), std::invalid_argument);
}

TEST_CASE("reverse bumping undoes row insertion") {
  for (const auto& p : oracle::all_perms(5)) {
    const Tableau P = klspecht::rs_insert(Permutation(p)).P;
    for (int x : {0, 6}) {
      // Insert a value below or above every entry and bump it back out.
      std::vector<int> f(7);
      for (int i = 1; i <= 5; ++i) f[static_cast<std::size_t>(i)] = i + (x == 0 ? 1 : 0);
      Tableau t = P.mapped(f);
      const int value = x == 0 ? 1 : 6;
      const Node k = klspecht::row_insert(t, value);
      const auto back = klspecht::reverse_bump(t, k);
      CHECK(back.ejected == value);
      CHECK(back.remaining == P.mapped(f));
    }
  }
}

TEST_CASE("standard tableaux are counted by the hook length formula") {
  for (int m = 1; m <= 7; ++m)
    for (const auto& lambda : klspecht::partitions_of(m)) {
      const auto all = klspecht::standard_tableaux(lambda);
      CHECK(static_cast<long long>(all.size()) == oracle::hook_count(lambda.parts()));
      CHECK(klspecht::standard_tableaux_count(lambda) == oracle::hook_count(lambda.parts()));
      CHECK(std::is_sorted(all.begin(), all.end()));
      for (const auto& t : all) CHECK(t.is_standard());
    }
}

TEST_CASE("corners") {
  const auto c = klspecht::corners(Partition({2, 1}));
  CHECK(c.outer == std::vector<Node>{{1, 3}, {2, 2}, {3, 1}});
  CHECK(c.inner == std::vector<Node>{{1, 2}, {2, 1}});
  const auto one = klspecht::corners(Partition({1}));
  CHECK(one.inner == std::vector<Node>{{1, 1}});
  CHECK(one.outer == std::vector<Node>{{1, 2}, {2, 1}});
  for (int m = 1; m <= 7; ++m)
    for (const auto& lambda : klspecht::partitions_of(m)) {
      const auto k = klspecht::corners(lambda);
      std::set<int> distinct(lambda.parts().begin(), lambda.parts().end());
      CHECK(k.inner.size() == distinct.size());
      CHECK(k.outer.size() == k.inner.size() + 1);
      auto added = oracle::add_box(lambda.parts());
      auto removed = oracle::remove_box(lambda.parts());
      std::vector<std::vector<int>> via_outer, via_inner;
      for (const auto& n : k.outer) {
        auto p = lambda.parts();
        if (n.first > static_cast<int>(p.size())) p.push_back(1);
        else ++p[static_cast<std::size_t>(n.first) - 1];
        CHECK(p[static_cast<std::size_t>(n.first) - 1] == n.second);
        via_outer.push_back(p);
      }
      for (const auto& n : k.inner) {
        auto p = lambda.parts();
        CHECK(p[static_cast<std::size_t>(n.first) - 1] == n.second);
        if (--p[static_cast<std::size_t>(n.first) - 1] == 0) p.pop_back();
        via_inner.push_back(p);
      }
      std::sort(via_outer.begin(), via_outer.end());
      std::sort(via_inner.begin(), via_inner.end());
      CHECK(via_outer == added);
      CHECK(via_inner == removed);
      CHECK(std::is_sorted(k.inner.begin(), k.inner.end()));
      CHECK(std::is_sorted(k.outer.begin(), k.outer.end()));
    }
}

TEST_CASE("tableau validation") {
  CHECK_THROWS_AS(Tableau({{1}, {2, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(Tableau({{1, 2}}).with_entry({2, 2}, 3), std::invalid_argument);
  CHECK(Tableau({{1, 2}}).with_entry({2, 1}, 3) == Tableau({{1, 2}, {3}}));
  CHECK_FALSE(Tableau({{2, 1}}).is_standard());
}
