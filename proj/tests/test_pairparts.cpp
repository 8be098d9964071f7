#include <doctest.h>

#include <set>

#include <nlohmann/json.hpp>

#include "klspecht/hecke.hpp"
#include "klspecht/pairparts.hpp"
#include "oracles.hpp"

using klspecht::Composition;
using klspecht::Partition;
using klspecht::Permutation;
using klspecht::Sequence;
using klspecht::Tableau;

namespace {

long long multinomial(const Composition& mu) {
  long long r = oracle::factorial(mu.total());
  for (int p : mu.parts()) r /= oracle::factorial(p);
  return r;
}

std::vector<Partition> partitions_up_to(int m) {
  std::vector<Partition> out;
  for (int k = 1; k <= m; ++k)
    for (const auto& p : klspecht::partitions_of(k)) out.push_back(p);
  return out;
}

}  // namespace

TEST_CASE("decreasing runs") {
  const Composition mu({2, 2});
  CHECK(klspecht::d_mu(mu, 1) == std::vector<int>{2, 1});
  CHECK(klspecht::d_mu(mu, 2) == std::vector<int>{4, 3});
  CHECK(klspecht::d_mu(Composition({4}), 1) == std::vector<int>{4, 3, 2, 1});
  CHECK_THROWS_AS(klspecht::d_mu(mu, 0), std::out_of_range);
  CHECK_THROWS_AS(klspecht::d_mu(mu, 3), std::out_of_range);
  for (int m = 1; m <= 5; ++m)
    for (const auto& c : klspecht::compositions_of(m)) {
      std::vector<int> row;
      for (std::size_t i = 1; i <= c.size(); ++i) {
        const auto d = klspecht::d_mu(c, static_cast<int>(i));
        row.insert(row.end(), d.begin(), d.end());
      }
      CHECK(row == klspecht::parabolic(m, klspecht::j_of_composition(c)).longest.one_line());
    }
}

TEST_CASE("sequences and permutations") {
  const Composition mu({2, 2});
  CHECK(klspecht::w_of_sequence({1, 2, 1, 2}, mu).one_line() == std::vector<int>{2, 4, 1, 3});
  CHECK(klspecht::w_of_sequence({1, 1, 2, 2}, mu) == klspecht::parabolic(4, {1, 3}).longest);
  CHECK_THROWS_AS(klspecht::w_of_sequence({1, 1, 1, 2}, mu), std::invalid_argument);
  CHECK(klspecht::has_type({2, 1, 2, 1}, mu));
  CHECK_FALSE(klspecht::has_type({2, 1, 3, 1}, mu));
  for (int m = 1; m <= 6; ++m)
    for (const auto& c : klspecht::compositions_of(m)) {
      const auto seqs = klspecht::sequences_of_type(c);
      CHECK(static_cast<long long>(seqs.size()) == multinomial(c));
      CHECK(std::is_sorted(seqs.begin(), seqs.end()));
      std::set<Permutation> images;
      for (const auto& t : seqs) {
        CHECK(klspecht::has_type(t, c));
        const auto w = klspecht::w_of_sequence(t, c);
        CHECK(klspecht::sequence_of_w(w, c) == t);
        images.insert(w);
      }
      CHECK(images.size() == seqs.size());
      const auto L = klspecht::l_mu(c);
      const auto& G = klspecht::SymmetricGroup::get(m);
      std::set<Permutation> lset;
      for (std::size_t w : L) lset.insert(G.element(w));
      CHECK(lset == images);
    }
}

TEST_CASE("quality and sharp partitions") {
  const auto a = klspecht::quality_and_sharp({1, 2, 1, 2});
  CHECK(a.good == std::vector<bool>{true, true, true, true});
  CHECK(a.sharp == Partition({2, 2}));
  const auto b = klspecht::quality_and_sharp({2, 1});
  CHECK(b.good == std::vector<bool>{false, true});
  CHECK(b.sharp == Partition({1}));
  CHECK(klspecht::quality_and_sharp({1, 1, 1}).sharp == Partition({3}));
  const auto c = klspecht::quality_and_sharp({1, 2, 2, 3, 1, 3});
  CHECK(c.good == std::vector<bool>{true, true, false, true, true, false});
  CHECK(c.sharp == Partition({2, 1, 1}));
  for (int m = 1; m <= 6; ++m)
    for (const auto& mu : klspecht::compositions_of(m))
      for (const auto& t : klspecht::sequences_of_type(mu)) {
        const auto sh = klspecht::quality_and_sharp(t).sharp;
        CHECK(std::is_sorted(sh.parts().rbegin(), sh.parts().rend()));
        CHECK(klspecht::preceq(sh.parts(), mu.parts()));
        CHECK(klspecht::is_pair_of_partitions(sh, mu));
      }
}

TEST_CASE("pairs of partitions") {
  CHECK(klspecht::preceq({1}, {1, 0}));
  CHECK(klspecht::preceq({}, {2, 1}));
  CHECK_FALSE(klspecht::preceq({2, 1}, {2}));
  CHECK(klspecht::is_pair_of_partitions(Partition({1, 1}), Composition({1, 2})));
  CHECK_FALSE(klspecht::is_pair_of_partitions(Partition({2}), Composition({1, 2})));
  const auto partners = klspecht::pair_partners(Composition({2, 1}));
  CHECK(partners == std::vector<Partition>{Partition(), Partition({1}), Partition({1, 1}), Partition({2}), Partition({2, 1})});
}

TEST_CASE("c-semistandard tableaux") {
  CHECK(klspecht::is_c_semistandard(Tableau({{2}, {2}, {2}})));
  CHECK_FALSE(klspecht::is_c_semistandard(Tableau({{1, 1}})));
  const auto one = klspecht::c_semistandard_tableaux(Partition({2, 1}), Composition({2, 1}));
  CHECK(one == std::vector<Tableau>{Tableau({{1, 2}, {1}})});
  for (int m = 1; m <= 6; ++m)
    for (const auto& mu : klspecht::compositions_of(m)) {
      std::size_t total = 0;
      for (const auto& lambda : klspecht::partitions_of(m)) {
        const auto ts = klspecht::c_semistandard_tableaux(lambda, mu);
        total += ts.size();
        CHECK(static_cast<long long>(ts.size()) == oracle::semistandard_count(lambda.conjugate().parts(), mu.parts()));
        if (mu.size() == static_cast<std::size_t>(m))
          CHECK(static_cast<long long>(ts.size()) == oracle::hook_count(lambda.parts()));
        for (const auto& t : ts) CHECK(klspecht::is_c_semistandard(t));
      }
      CHECK(klspecht::c_semistandard_tableaux(mu).size() == total);
    }
}

TEST_CASE("column words and insertion tableaux") {
  const auto row = klspecht::word_and_ptableau(Tableau({{1, 2, 3}}), Composition({1, 1, 1}));
  CHECK(row.word == Sequence{1, 2, 3});
  CHECK(row.P == Tableau({{1, 2, 3}}));
  const auto hook = klspecht::word_and_ptableau(Tableau({{1, 2}, {1}}), Composition({2, 1}));
  CHECK(hook.word == Sequence{1, 1, 2});
  CHECK(hook.P.shape() == Partition({2, 1}));
  CHECK(hook.shortcut == hook.P);
  CHECK_THROWS_AS(klspecht::word_and_ptableau(Tableau({{1, 1}}), Composition({2})), std::invalid_argument);
  for (int m = 1; m <= 5; ++m)
    for (const auto& mu : klspecht::compositions_of(m)) {
      std::set<Tableau> seen;
      for (const auto& T : klspecht::c_semistandard_tableaux(mu)) {
        const auto wp = klspecht::word_and_ptableau(T, mu);
        CHECK(wp.shortcut == wp.P);
        CHECK(wp.P == klspecht::rs_insert(wp.w).P);
        CHECK(wp.P.shape() == T.shape());
        seen.insert(wp.P);
      }
      CHECK(seen.size() == klspecht::c_semistandard_tableaux(mu).size());
    }
}

TEST_CASE("cell unions") {
  const Composition mu({2, 1});
  CHECK(klspecht::l_lambda_mu(mu, Partition()) == klspecht::l_mu(mu));
  for (int m = 1; m <= 4; ++m)
    for (const auto& c : klspecht::compositions_of(m)) {
      std::set<std::size_t> all;
      for (const auto& lambda : klspecht::pair_partners(c)) {
        const auto part = klspecht::l_mu_lambda(c, lambda);
        all.insert(part.begin(), part.end());
      }
      const auto L = klspecht::l_mu(c);
      CHECK(all == std::set<std::size_t>(L.begin(), L.end()));
      const auto meets = klspecht::left_cells_meeting(m, L);
      std::size_t covered = 0;
      for (std::size_t id : meets) covered += klspecht::CellStructure::get(m).left_cells()[id].size();
      CHECK(covered == L.size());
    }
}

TEST_CASE("proven claims hold through m = 5") {
  for (int m = 1; m <= 5; ++m)
    for (const auto& r : klspecht::verify_all_pairs(m)) {
      INFO(r.report.claim);
      CHECK_FALSE(r.experimental);
      CHECK(r.report.passed());
    }
  CHECK(klspecht::verify_full_pair(Partition({2, 1})).report.passed());
  CHECK(klspecht::verify_last_part_one(Partition({2, 1})).report.passed());
  CHECK_THROWS_AS(klspecht::verify_last_part_one(Partition({2, 2})), std::invalid_argument);
}

TEST_CASE("downward closure experiment") {
  const auto r = klspecht::explore_downward_closure(Composition({2, 1}), Partition());
  CHECK(r.experimental);
  CHECK(r.report.passed());
  const auto j = klspecht::to_json(r);
  CHECK(j.at("experimental") == true);
  CHECK(j.at("lambda").is_array());
  CHECK(j.at("counterexamples").is_array());
  for (const auto& mu : klspecht::partitions_of(4))
    CHECK(klspecht::explore_downward_closure(mu.as_composition(), mu).report.passed());
}
