#include <doctest.h>

#include <set>

#include <nlohmann/json.hpp>

#include "klspecht/cells.hpp"
#include "oracles.hpp"

using klspecht::Partition;
using klspecht::Permutation;

namespace {

Partition col(int n) { return Partition(std::vector<int>(static_cast<std::size_t>(n), 1)); }

std::vector<Partition> shapes(const klspecht::CellDecomposition& d) {
  std::vector<Partition> out;
  for (const auto& f : d.factors) out.push_back(f.shape);
  return out;
}

std::vector<std::vector<Permutation>> right_cells(int m) {
  const auto& G = klspecht::SymmetricGroup::get(m);
  std::vector<std::vector<Permutation>> out;
  for (const auto& cell : klspecht::CellStructure::get(m).right_cells()) {
    out.emplace_back();
    for (std::size_t w : cell) out.back().push_back(G.element(w));
  }
  return out;
}

}  // namespace

TEST_CASE("right cell lookup") {
  const auto c = klspecht::right_cell_of(Permutation::generator(3, 1));
  CHECK(c == std::vector<Permutation>{Permutation({2, 1, 3}), Permutation({3, 1, 2})});
  CHECK_THROWS_AS(klspecht::induce_cell({Permutation({2, 1, 3})}), std::invalid_argument);
  CHECK_THROWS_AS(klspecht::induce_cell({}), std::invalid_argument);
}

TEST_CASE("induction of the extreme cells") {
  for (int n = 1; n <= 4; ++n) {
    const auto top = klspecht::induce_cell({Permutation::identity(n)});
    CHECK(top.checks.passed());
    CHECK(shapes(top) == std::vector<Partition>{Partition({n + 1}), Partition({n, 1})});
    const auto bottom = klspecht::induce_cell({Permutation::longest(n)});
    CHECK(bottom.checks.passed());
    std::vector<int> hook(static_cast<std::size_t>(n), 1);
    hook[0] = 2;
    auto got = shapes(bottom);
    std::sort(got.begin(), got.end());
    CHECK(got == std::vector<Partition>{col(n + 1), Partition(hook)});
  }
}

TEST_CASE("induction decomposes C X' into the cells of the enlarged recording tableaux") {
  for (int n = 1; n <= 4; ++n)
    for (const auto& cell : right_cells(n)) {
      const auto dec = klspecht::induce_cell(cell);
      CHECK(dec.checks.passed());
      const auto corners = klspecht::corners(dec.source_recording.shape());
      CHECK(dec.factors.size() == corners.outer.size());
      // Oracle: C X' as a set against the union of the factors.
      std::set<Permutation> product, factors;
      for (const auto& u : cell)
        for (const auto& x : klspecht::coset_reps_x_prime(n)) product.insert(u.embedded(n + 1) * x);
      std::size_t total = 0;
      long long dims = 0;
      for (std::size_t i = 0; i < dec.factors.size(); ++i) {
        const auto& f = dec.factors[i];
        CHECK(f.corner == corners.outer[i]);
        total += f.cell.size();
        factors.insert(f.cell.begin(), f.cell.end());
        dims += oracle::hook_count(f.shape.parts());
        for (const auto& w : f.cell) CHECK(klspecht::rs_insert(w).Q == f.recording);
        CHECK(f.recording.at(f.corner) == n + 1);
        if (i > 0) CHECK(klspecht::dominance_less(f.shape, dec.factors[i - 1].shape));
      }
      CHECK(total == product.size());
      CHECK(factors == product);
      CHECK(dims == (n + 1) * oracle::hook_count(dec.source_recording.shape().parts()));
    }
}

TEST_CASE("restriction of the extreme cells") {
  for (int n = 1; n <= 4; ++n) {
    const auto top = klspecht::restrict_cell({Permutation::identity(n + 1)});
    CHECK(top.checks.passed());
    CHECK(shapes(top) == std::vector<Partition>{Partition({n})});
    const auto bottom = klspecht::restrict_cell({Permutation::longest(n + 1)});
    CHECK(bottom.checks.passed());
    CHECK(shapes(bottom) == std::vector<Partition>{col(n)});
  }
}

TEST_CASE("restriction decomposes a cell into translated cells of the smaller group") {
  for (int m = 2; m <= 5; ++m)
    for (const auto& cell : right_cells(m)) {
      const auto dec = klspecht::restrict_cell(cell);
      CHECK(dec.checks.passed());
      const auto corners = klspecht::corners(dec.source_recording.shape());
      CHECK(dec.factors.size() == corners.inner.size());
      std::set<Permutation> pieces;
      std::size_t total = 0;
      long long dims = 0;
      const auto xs = klspecht::coset_reps_x_star(m - 1);
      for (std::size_t i = 0; i < dec.factors.size(); ++i) {
        const auto& f = dec.factors[i];
        REQUIRE(f.d.has_value());
        CHECK(std::find(xs.begin(), xs.end(), *f.d) != xs.end());
        for (const auto& u : f.cell) pieces.insert(*f.d * u.embedded(m));
        total += f.cell.size();
        dims += oracle::hook_count(f.shape.parts());
        if (i > 0) {
          CHECK(klspecht::dominance_less(dec.factors[i - 1].shape, f.shape));
          CHECK(klspecht::bruhat_leq(*dec.factors[i - 1].d, *f.d));
        }
      }
      CHECK(total == cell.size());
      CHECK(pieces == std::set<Permutation>(cell.begin(), cell.end()));
      CHECK(dims == oracle::hook_count(dec.source_recording.shape().parts()));
    }
}

TEST_CASE("cell modules") {
  for (int m = 1; m <= 4; ++m) {
    const auto& cs = klspecht::CellStructure::get(m);
    for (const auto& cell : cs.right_cells()) {
      const auto mod = klspecht::cell_module(m, cell);
      CHECK(mod.checks.passed());
      CHECK(mod.generators.size() == static_cast<std::size_t>(m - 1));
      for (int k = 1; k < m; ++k) CHECK(mod.generators[static_cast<std::size_t>(k) - 1] == klspecht::action_matrix(m, k, cell));
      // Oracle: down sets from the preorder directly.
      std::vector<std::size_t> down;
      for (std::size_t z = 0; z < klspecht::SymmetricGroup::get(m).size(); ++z)
        if (cs.leq_R(z, cell.front())) down.push_back(z);
      CHECK(mod.down_set == down);
      CHECK(mod.down_set.size() == mod.strict_down_set.size() + cell.size());
    }
  }
}

TEST_CASE("cell filtrations") {
  const auto first = klspecht::induced_cell_filtration({Permutation::generator(2, 1)});
  CHECK(first.verified());
  REQUIRE(first.factors.size() == 2);
  CHECK(first.factors[0].shape == col(3));
  CHECK(first.factors[1].shape == Partition({2, 1}));

  const auto top = klspecht::restricted_cell_filtration({Permutation::longest(3)});
  CHECK(top.verified());
  REQUIRE(top.factors.size() == 1);
  CHECK(top.factors[0].shape == col(2));

  for (int n = 1; n <= 3; ++n)
    for (const auto& cell : right_cells(n)) {
      const auto r = klspecht::induced_cell_filtration(cell);
      CHECK(r.verified());
      CHECK(r.factors.size() == klspecht::corners(klspecht::rs_insert(cell.front()).Q.shape()).outer.size());
      for (const auto& f : r.factors) {
        CHECK(f.closed);
        CHECK(f.isomorphic);
      }
    }
  for (int m = 2; m <= 4; ++m)
    for (const auto& cell : right_cells(m)) {
      const auto r = klspecht::restricted_cell_filtration(cell);
      CHECK(r.verified());
      for (std::size_t i = 1; i < r.factors.size(); ++i)
        CHECK(klspecht::dominance_less(r.factors[i - 1].shape, r.factors[i].shape));
    }
}

TEST_CASE("decomposition JSON") {
  const auto dec = klspecht::induce_cell(klspecht::right_cell_of(Permutation::generator(3, 1)));
  const auto j = klspecht::to_json(dec);
  CHECK(j.at("verified") == true);
  CHECK(j.at("factors").size() == 3);
  CHECK(j.at("factors")[0].at("corner") == nlohmann::json::array({1, 3}));
  const auto f = klspecht::to_json(klspecht::induced_cell_filtration({Permutation::identity(2)}));
  CHECK(f.at("kind") == "induce-cell");
  CHECK(f.at("verified") == true);
  CHECK(f.at("source_cell_shape") == nlohmann::json::array({2}));
}
