#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>

#include <unistd.h>

#include <nlohmann/json.hpp>

#include "klspecht/hecke.hpp"
#include "oracles.hpp"

using klspecht::Basis;
using klspecht::HeckeElement;
using klspecht::LaurentPoly;
using klspecht::Permutation;

namespace {

const LaurentPoly v = LaurentPoly::v_pow(1);
const LaurentPoly q = LaurentPoly::q_pow(1);

HeckeElement T(const Permutation& w, LaurentPoly c = LaurentPoly(1)) {
  return HeckeElement::basis_element(Basis::T, w, std::move(c));
}
Permutation s(int m, int i) { return Permutation::generator(m, i); }

HeckeElement random_element(int m, std::mt19937_64& rng) {
  const auto& G = klspecht::SymmetricGroup::get(m);
  HeckeElement h(m, Basis::T);
  std::uniform_int_distribution<std::size_t> pick(0, G.size() - 1);
  for (int i = 0; i < 3; ++i) h[pick(rng)] += oracle::random_poly(rng, 2);
  return h;
}

// C'_w built by left multiplication: C'_s C'_{w'} = C'_{sw'} + sum_{z < w', sz < z} mu(z, w') C'_z.
// Returns P_{x,w} for all x, w, read off as v^{l(w)} times the coefficient of T_x.
std::vector<std::vector<LaurentPoly>> kl_by_left_multiplication(int m) {
  const auto& G = klspecht::SymmetricGroup::get(m);
  std::vector<HeckeElement> cp(G.size());
  std::vector<std::vector<LaurentPoly>> P(G.size(), std::vector<LaurentPoly>(G.size()));
  auto record = [&](std::size_t w) {
    for (std::size_t x = 0; x < G.size(); ++x) P[x][w] = cp[w][x].shifted(G.length(w));
  };
  cp[0] = HeckeElement::basis_element(m, Basis::T, 0);
  record(0);
  for (std::size_t w : G.by_length()) {
    if (w == 0) continue;
    int k = 1;
    while (!G.element(w).is_left_descent(k)) ++k;
    const std::size_t wp = G.left_gen(w, k);
    const HeckeElement cs = HeckeElement::basis_element(m, Basis::T, 0, LaurentPoly::v_pow(-1)) +
                            HeckeElement::basis_element(m, Basis::T, G.left_gen(0, k), LaurentPoly::v_pow(-1));
    HeckeElement c = klspecht::t_multiply(cs, cp[wp]);
    for (std::size_t z = 0; z < G.size(); ++z) {
      const int d = G.length(wp) - G.length(z);
      if (z == wp || d <= 0 || d % 2 == 0 || !G.bruhat_leq(z, wp) || !G.element(z).is_left_descent(k)) continue;
      const auto mu = P[z][wp].coefficient(d - 1);
      if (mu != 0) c.add_scaled(LaurentPoly(-mu), cp[z]);
    }
    cp[w] = c;
    record(w);
  }
  return P;
}

}  // namespace

TEST_CASE("T-basis multiplication rules") {
  const HeckeElement ts = T(s(3, 1));
  CHECK(klspecht::t_multiply(ts, ts) == T(s(3, 1), q - 1) + T(Permutation::identity(3), q));
  CHECK(klspecht::t_multiply(ts, T(Permutation::identity(3))) == ts);
  CHECK(klspecht::t_multiply(ts, T(s(3, 2))) == T(s(3, 1) * s(3, 2)));
  const HeckeElement t2 = T(s(3, 2));
  CHECK(klspecht::t_multiply(klspecht::t_multiply(ts, t2), ts) == klspecht::t_multiply(klspecht::t_multiply(t2, ts), t2));
  CHECK_THROWS_AS(klspecht::t_multiply(ts, T(s(4, 1))), std::invalid_argument);
  const auto& G = klspecht::SymmetricGroup::get(4);
  for (std::size_t a = 0; a < G.size(); ++a)
    for (std::size_t b = 0; b < G.size(); ++b)
      if (G.length(G.multiply(a, b)) == G.length(a) + G.length(b))
        CHECK(klspecht::t_multiply(T(G.element(a)), T(G.element(b))) == T(G.element(G.multiply(a, b))));
}

TEST_CASE("multiplication is associative and the involutions are multiplicative") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    const auto a = random_element(4, rng), b = random_element(4, rng), c = random_element(4, rng);
    CHECK(klspecht::t_multiply(klspecht::t_multiply(a, b), c) == klspecht::t_multiply(a, klspecht::t_multiply(b, c)));
    CHECK(klspecht::bar_involution(klspecht::t_multiply(a, b)) ==
          klspecht::t_multiply(klspecht::bar_involution(a), klspecht::bar_involution(b)));
    CHECK(klspecht::j_involution(klspecht::t_multiply(a, b)) ==
          klspecht::t_multiply(klspecht::j_involution(a), klspecht::j_involution(b)));
    CHECK(klspecht::j_involution(klspecht::j_involution(a)) == a);
    CHECK(klspecht::bar_involution(klspecht::bar_involution(a)) == a);
    CHECK(klspecht::left_multiply_generator(a, 2) == klspecht::t_multiply(T(s(4, 2)), a));
    CHECK(klspecht::right_multiply_generator(a, 3) == klspecht::t_multiply(a, T(s(4, 3))));
  }
  CHECK(klspecht::j_involution(T(Permutation::identity(3))) == T(Permutation::identity(3)));
  // bar(T_s) = T_s^{-1} = q^{-1} T_s + (q^{-1} - 1) T_e
  CHECK(klspecht::bar_involution(T(s(3, 1))) ==
        T(s(3, 1), LaurentPoly::q_pow(-1)) + T(Permutation::identity(3), LaurentPoly::q_pow(-1) - 1));
}

TEST_CASE("KL polynomials match an independent left-multiplication construction") {
  for (int m = 1; m <= 5; ++m) {
    const auto& kl = klspecht::kl_table(m);
    const auto P = kl_by_left_multiplication(m);
    const auto& G = klspecht::SymmetricGroup::get(m);
    for (std::size_t x = 0; x < G.size(); ++x)
      for (std::size_t y = 0; y < G.size(); ++y) CHECK(kl.P(x, y) == P[x][y]);
  }
}

TEST_CASE("KL polynomial values and degree bounds") {
  const auto& kl3 = klspecht::kl_table(3);
  const auto& G3 = klspecht::SymmetricGroup::get(3);
  for (std::size_t x = 0; x < 6; ++x)
    for (std::size_t y = 0; y < 6; ++y) CHECK(kl3.P(x, y) == (G3.bruhat_leq(x, y) ? LaurentPoly(1) : LaurentPoly()));
  const auto& kl4 = klspecht::kl_table(4);
  CHECK(kl4.P(Permutation::identity(4), Permutation({3, 4, 1, 2})) == LaurentPoly(1) + q);
  CHECK(kl4.P(Permutation::identity(4), Permutation({4, 2, 3, 1})) == LaurentPoly(1) + q);
  CHECK(kl4.P(Permutation({1, 3, 2, 4}), Permutation({3, 4, 1, 2})) == LaurentPoly(1) + q);
  CHECK(kl4.P(Permutation({2, 1, 4, 3}), Permutation({4, 2, 3, 1})) == LaurentPoly(1) + q);
  CHECK(kl4.distinct_polynomials() == 3);
  const auto& kl5 = klspecht::kl_table(5);
  const auto& G = klspecht::SymmetricGroup::get(5);
  for (std::size_t y = 0; y < G.size(); ++y) {
    CHECK(kl5.P(y, y).is_one());
    for (std::size_t x = 0; x < G.size(); ++x) {
      const auto& p = kl5.P(x, y);
      if (!G.bruhat_leq(x, y)) {
        CHECK(p.is_zero());
        continue;
      }
      CHECK(p.coefficient(0) == 1);
      for (const auto& t : p.terms()) {
        CHECK(t.exp % 2 == 0);
        CHECK(t.exp >= 0);
        if (x != y) CHECK(t.exp <= G.length(y) - G.length(x) - 1);
      }
    }
  }
}

TEST_CASE("C and C' basis elements") {
  const auto& kl = klspecht::kl_table(3);
  const auto e = Permutation::identity(3);
  CHECK(klspecht::c_basis_element(e, kl) == T(e));
  CHECK(klspecht::cprime_basis_element(e, kl) == T(e));
  CHECK(klspecht::c_basis_element(s(3, 1), kl) == T(s(3, 1), LaurentPoly::v_pow(-1)) - T(e, v));
  CHECK(klspecht::cprime_basis_element(s(3, 1), kl) == T(e, LaurentPoly::v_pow(-1)) + T(s(3, 1), LaurentPoly::v_pow(-1)));
  CHECK_THROWS_AS(klspecht::c_basis_element(Permutation::identity(4), kl), std::invalid_argument);
}

TEST_CASE("C and C' are bar-invariant and exchanged by j") {
  for (int m = 1; m <= 4; ++m) {
    const auto& kl = klspecht::kl_table(m);
    const auto& G = klspecht::SymmetricGroup::get(m);
    for (std::size_t w = 0; w < G.size(); ++w) {
      const auto c = klspecht::c_basis_element(w, kl);
      const auto cp = klspecht::cprime_basis_element(w, kl);
      CHECK(klspecht::bar_involution(c) == c);
      CHECK(klspecht::bar_involution(cp) == cp);
      CHECK(klspecht::j_involution(c) == cp.scaled(G.length(w) % 2 ? -1 : 1));
    }
  }
}

TEST_CASE("basis changes round-trip") {
  const auto& kl = klspecht::kl_table(4);
  const auto& G = klspecht::SymmetricGroup::get(4);
  for (Basis b : {Basis::T, Basis::Ttilde, Basis::C, Basis::Cprime})
    for (std::size_t w = 0; w < G.size(); ++w) {
      const auto h = HeckeElement::basis_element(4, b, w, v + 2);
      for (Basis via : {Basis::T, Basis::Ttilde, Basis::C, Basis::Cprime}) {
        const auto there = klspecht::change_basis(h, via, kl);
        CHECK(there.basis() == via);
        CHECK(klspecht::change_basis(there, b, kl) == h);
      }
    }
  const auto cs = klspecht::change_basis(HeckeElement::basis_element(3, Basis::C, 1), Basis::T, klspecht::kl_table(3));
  CHECK(cs == klspecht::c_basis_element(1, klspecht::kl_table(3)));
}

TEST_CASE("structure constants") {
  const auto& kl3 = klspecht::kl_table(3);
  const auto& G3 = klspecht::SymmetricGroup::get(3);
  const std::size_t s1 = G3.index_of(s(3, 1));
  CHECK(klspecht::structure_constants_right(0, 1, kl3) == klspecht::Expansion{{0, LaurentPoly(-1)}, {s1, v}});
  for (int m = 2; m <= 4; ++m) {
    const auto& kl = klspecht::kl_table(m);
    const auto& G = klspecht::SymmetricGroup::get(m);
    const auto& sc = klspecht::StructureConstants::get(m);
    for (std::size_t y = 0; y < G.size(); ++y)
      for (int k = 1; k < m; ++k) {
        const auto fast = klspecht::structure_constants_right(y, k, kl);
        CHECK(fast == klspecht::structure_constants_right_generic(y, k, kl));
        CHECK(klspecht::c_structure_constants_right(y, k, kl) == klspecht::c_structure_constants_right_generic(y, k, kl));
        CHECK(sc.cprime(y, k) == fast);
        const std::size_t ys = G.right_gen(y, k);
        if (G.length(ys) < G.length(y)) CHECK(fast == klspecht::Expansion{{y, q}});
        for (const auto& t : fast) CHECK((G.bruhat_leq(t.index, y) || t.index == ys));
        // Direct check of C'_y T_s against the expansion in the T-basis.
        HeckeElement rhs(m, Basis::T);
        for (const auto& t : fast) rhs.add_scaled(t.coeff, klspecht::cprime_basis_element(t.index, kl));
        CHECK(klspecht::right_multiply_generator(klspecht::cprime_basis_element(y, kl), k) == rhs);
      }
  }
}

TEST_CASE("cells agree with Robinson-Schensted fibres") {
  for (int m = 1; m <= 5; ++m) {
    const auto& cs = klspecht::CellStructure::get(m);
    CHECK(cs.right_cells() == klspecht::rs_right_cells(m));
    CHECK(cs.left_cells() == klspecht::rs_left_cells(m));
    CHECK(cs.two_sided_cells() == klspecht::rs_two_sided_cells(m));
    CHECK(cs.two_sided_cells().size() == klspecht::partitions_of(m).size());
    const auto& G = klspecht::SymmetricGroup::get(m);
    // Independent oracle: recording tableaux by textbook means.
    for (const auto& cell : cs.right_cells()) {
      const auto Q = klspecht::rs_insert(G.element(cell.front())).Q;
      std::size_t count = 0;
      for (const auto& w : G.elements()) count += klspecht::rs_insert(w).Q == Q;
      CHECK(count == cell.size());
      for (std::size_t w : cell) CHECK(klspecht::rs_insert(G.element(w)).Q == Q);
    }
    CHECK(cs.two_sided_cells()[cs.two_sided_cell_of(G.longest())].size() == 1);
    for (std::size_t x = 0; x < G.size(); ++x)
      for (std::size_t y = 0; y < G.size(); ++y) {
        CHECK(cs.leq_L(x, y) == cs.leq_R(G.inverse(x), G.inverse(y)));
        const auto sx = klspecht::rs_insert(G.element(x)).P.shape();
        const auto sy = klspecht::rs_insert(G.element(y)).P.shape();
        CHECK(cs.leq_LR(x, y) == klspecht::dominance_leq(sx, sy));
        if (cs.leq_R(x, y)) CHECK(cs.leq_LR(x, y));
      }
  }
  const auto& cs3 = klspecht::CellStructure::get(3);
  CHECK(cs3.right_cells().size() == 4);
  CHECK(klspecht::CellStructure::get(4).two_sided_cells().size() == 5);
}

TEST_CASE("parabolic compatibility and expansion identities") {
  for (int n = 2; n <= 3; ++n) {
    const auto compat = klspecht::verify_parabolic_compatibility(n);
    CHECK(compat.checked > 0);
    CHECK(compat.passed());
    const auto exp = klspecht::verify_parabolic_expansion(n);
    CHECK(exp.checked > 0);
    CHECK(exp.passed());
  }
}

TEST_CASE("KL table JSON round-trip and corrupt cache recovery") {
  const auto& kl = klspecht::kl_table(4);
  const auto j = kl.to_json();
  const auto back = klspecht::KLTable::from_json(j);
  const auto& G = klspecht::SymmetricGroup::get(4);
  for (std::size_t x = 0; x < G.size(); ++x)
    for (std::size_t y = 0; y < G.size(); ++y) CHECK(back.P(x, y) == kl.P(x, y));
  auto bad = j;
  bad["polys"][0]["p"] = nlohmann::json::array({nlohmann::json::array({0, 5})});
  CHECK_THROWS_AS(klspecht::KLTable::from_json(bad), std::invalid_argument);
  auto wrong_version = j;
  wrong_version["format_version"] = 99;
  CHECK_THROWS_AS(klspecht::KLTable::from_json(wrong_version), std::invalid_argument);

  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / ("klspecht-test-" + std::to_string(::getpid()));
  fs::create_directories(dir);
  {
    std::ofstream(dir / "kl_S3.json") << "{ not json";
  }
  const auto& kl3 = klspecht::kl_table(3, dir.string());
  CHECK(kl3.rank() == 3);
  std::ifstream in(dir / "kl_S3.json");
  const auto reread = klspecht::KLTable::from_json(nlohmann::json::parse(in));
  CHECK(reread.P(0, 5).is_one());
  fs::remove_all(dir);
}
