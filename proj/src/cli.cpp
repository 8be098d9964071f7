#include "klspecht/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "klspecht/cells.hpp"
#include "klspecht/hecke.hpp"
#include "klspecht/pairparts.hpp"
#include "klspecht/specht.hpp"

namespace klspecht {

namespace {

struct RunConfig {
  int m = 0, n = 0;
  std::string x, y, lambda, mu, basis = "C", mode;
  bool all = false, force = false;
  std::string format = "text", cache_dir;
  std::uint64_t seed = 1;
};

// Thrown for bad input that passed the parser: reported with exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

bool json_out(const RunConfig& c) { return c.format == "json"; }

void prepare(const RunConfig& c, int m) {
  check_rank(m, c.force);
  if (!c.cache_dir.empty()) kl_table(m, c.cache_dir);
}

// Polynomials whose exponents are all even print in q, others in v = q^(1/2).
std::string poly_string(const LaurentPoly& p) {
  if (p.is_zero()) return "0";
  bool even = true;
  for (const auto& t : p.terms()) even = even && t.exp % 2 == 0;
  if (!even) return p.to_string();
  std::string s;
  for (const auto& t : p.terms()) {
    const int e = t.exp / 2;
    Integer c = t.coeff;
    if (!s.empty()) {
      s += c < 0 ? " - " : " + ";
      if (c < 0) c = -c;
    } else if (c < 0) {
      s += "-";
      c = -c;
    }
    const bool unit = c == 1;
    if (!unit || e == 0) s += c.str();
    if (e != 0) {
      s += "q";
      if (e != 1) s += "^" + std::to_string(e);
    }
  }
  return s;
}

Permutation perm_arg(const std::string& text, int m, const char* name) {
  try {
    return Permutation::parse(text, m);
  } catch (const std::exception& e) {
    throw UsageError(std::string("bad --") + name + " '" + text + "': " + e.what());
  }
}

Composition comp_arg(const std::string& text, const char* name) {
  try {
    return Composition::parse(text);
  } catch (const std::exception& e) {
    throw UsageError(std::string("bad --") + name + " '" + text + "': " + e.what());
  }
}

int cmd_klpoly(const RunConfig& c, std::ostream& out) {
  prepare(c, c.m);
  const auto& kl = kl_table(c.m, c.cache_dir);
  const auto& G = SymmetricGroup::get(c.m);
  if (c.all || (c.x.empty() && c.y.empty())) {
    if (json_out(c)) {
      out << kl.to_json().dump(2) << '\n';
      return kExitOk;
    }
    for (std::size_t y = 0; y < G.size(); ++y)
      for (std::size_t x = 0; x < G.size(); ++x)
        if (G.bruhat_leq(x, y))
          out << "P(" << G.element(x).to_string() << "; " << G.element(y).to_string() << ") = " << poly_string(kl.P(x, y))
              << '\n';
    return kExitOk;
  }
  if (c.x.empty() || c.y.empty()) throw UsageError("klpoly needs both --x and --y, or --all");
  const Permutation x = perm_arg(c.x, c.m, "x"), y = perm_arg(c.y, c.m, "y");
  const LaurentPoly p = kl.P(x, y);
  if (json_out(c))
    out << nlohmann::json{{"m", c.m}, {"x", x.to_string()}, {"y", y.to_string()}, {"p", to_json(p)}}.dump(2) << '\n';
  else
    out << poly_string(p) << '\n';
  return kExitOk;
}

int cmd_cbasis(const RunConfig& c, std::ostream& out) {
  prepare(c, c.m);
  if (c.y.empty()) throw UsageError("cbasis needs --y");
  const auto& kl = kl_table(c.m, c.cache_dir);
  const Permutation y = perm_arg(c.y, c.m, "y");
  const HeckeElement h = c.basis == "Cprime" ? cprime_basis_element(y, kl) : c_basis_element(y, kl);
  const auto& G = SymmetricGroup::get(c.m);
  if (json_out(c)) {
    auto coeffs = nlohmann::json::array();
    for (std::size_t x : h.support()) coeffs.push_back({{"x", G.element(x).to_string()}, {"p", to_json(h[x])}});
    out << nlohmann::json{{"m", c.m}, {"y", y.to_string()}, {"basis", c.basis}, {"coefficients", coeffs}}.dump(2)
        << '\n';
  } else {
    for (std::size_t x : h.support()) out << G.element(x).to_string() << "  " << h[x].to_string() << '\n';
  }
  return kExitOk;
}

int cmd_cells(const RunConfig& c, std::ostream& out) {
  prepare(c, c.m);
  const auto& cs = CellStructure::get(c.m);
  const bool right = cs.right_cells() == rs_right_cells(c.m);
  const bool left = cs.left_cells() == rs_left_cells(c.m);
  const bool two = cs.two_sided_cells() == rs_two_sided_cells(c.m);
  const bool count = cs.two_sided_cells().size() == partitions_of(c.m).size();
  const bool ok = right && left && two && count;
  if (json_out(c)) {
    auto j = cs.to_json();
    j["rs_agreement"] = {{"right", right}, {"left", left}, {"two_sided", two}, {"two_sided_count_matches_partitions", count}};
    out << j.dump(2) << '\n';
  } else {
    const auto& G = SymmetricGroup::get(c.m);
    auto list = [&](const char* name, const std::vector<std::vector<std::size_t>>& cells, bool agree) {
      out << name << " cells: " << cells.size() << " (Robinson-Schensted agreement: " << (agree ? "yes" : "NO") << ")\n";
      for (const auto& cell : cells) {
        out << "  " << rs_insert(G.element(cell.front())).P.shape().to_string() << ":";
        for (std::size_t w : cell) out << ' ' << G.element(w).to_string();
        out << '\n';
      }
    };
    list("right", cs.right_cells(), right);
    list("left", cs.left_cells(), left);
    list("two-sided", cs.two_sided_cells(), two && count);
  }
  return ok ? kExitOk : kExitVerificationFailed;
}

void print_filtration(const FiltrationReport& r, std::ostream& out) {
  out << r.kind << ": source shape (" << r.source_shape.to_string() << "), ambient S_" << r.ambient_rank;
  if (!r.lambda.empty()) out << ", lambda " << r.lambda << ", mu " << r.mu;
  out << ", basis size " << r.basis_size << '\n';
  for (std::size_t i = 0; i < r.factors.size(); ++i) {
    const auto& f = r.factors[i];
    out << "  L_" << i + 1 << ": corner (" << f.corner.first << "," << f.corner.second << ") shape ("
        << f.shape.to_string() << ") size " << f.cell.size();
    if (f.d) out << " d " << f.d->to_string();
    out << " closed " << (f.closed ? "yes" : "NO") << " isomorphic " << (f.isomorphic ? "yes" : "NO") << '\n';
  }
  out << "  chain:";
  for (std::size_t i = 0; i < r.factors.size(); ++i) out << (i ? " < (" : " (") << r.factors[i].shape.to_string() << ")";
  out << "\n  verified: " << (r.verified() ? "yes" : "NO") << " (" << r.checks.checked << " checks)\n";
  for (const auto& v : r.checks.violations) out << "  violation: " << v << '\n';
}

int emit_filtrations(const RunConfig& c, const std::vector<FiltrationReport>& reports, std::ostream& out) {
  bool ok = true;
  for (const auto& r : reports) ok = ok && r.verified();
  if (json_out(c)) {
    if (reports.size() == 1) {
      out << to_json(reports.front()).dump(2) << '\n';
    } else {
      auto arr = nlohmann::json::array();
      for (const auto& r : reports) arr.push_back(to_json(r));
      out << arr.dump(2) << '\n';
    }
  } else {
    for (const auto& r : reports) print_filtration(r, out);
  }
  return ok ? kExitOk : kExitVerificationFailed;
}

int cmd_cell_filtration(const RunConfig& c, bool induce, std::ostream& out) {
  std::vector<std::vector<Permutation>> cells;
  if (!c.y.empty()) {
    const int rank = induce ? c.n : c.m;
    const Permutation w = perm_arg(c.y, rank > 0 ? rank : -1, "y");
    prepare(c, w.rank() + (induce ? 1 : 0));
    cells.push_back(right_cell_of(w));
  } else if (c.all) {
    const int rank = induce ? c.n : c.m;
    if (rank < 1) throw UsageError(induce ? "induce-cell --all needs --n" : "restrict-cell --all needs --m");
    prepare(c, induce ? rank + 1 : rank);
    const auto& G = SymmetricGroup::get(rank);
    for (const auto& cell : rs_right_cells(rank)) {
      std::vector<Permutation> perms;
      for (std::size_t w : cell) perms.push_back(G.element(w));
      cells.push_back(std::move(perms));
    }
  } else {
    throw UsageError("give --y (an element of the cell) or --all");
  }
  if (!induce && cells.front().front().rank() < 2) throw UsageError("restriction needs rank at least 2");
  std::vector<FiltrationReport> reports;
  for (const auto& cell : cells)
    reports.push_back(induce ? induced_cell_filtration(cell) : restricted_cell_filtration(cell));
  return emit_filtrations(c, reports, out);
}

int cmd_filtrate(const RunConfig& c, std::ostream& out) {
  const bool induce = c.mode == "induce";
  std::vector<std::pair<Composition, Composition>> pairs;
  if (!c.lambda.empty() || !c.mu.empty()) {
    if (c.lambda.empty() || c.mu.empty()) throw UsageError("filtrate needs both --lambda and --mu");
    const Composition lambda = comp_arg(c.lambda, "lambda"), mu = comp_arg(c.mu, "mu");
    if (lambda.total() != mu.total()) throw UsageError("lambda''=mu' required: lambda and mu have different sizes");
    if (induce && c.n > 0 && c.n != lambda.total()) throw UsageError("--n must equal |lambda| for induction");
    if (!induce && c.m > 0 && c.m != lambda.total()) throw UsageError("--m must equal |lambda| for restriction");
    if (!induce && lambda.total() < 2) throw UsageError("restriction needs |lambda| at least 2");
    (void)special_diagram(lambda, mu);
    pairs.emplace_back(lambda, mu);
  } else if (c.all) {
    const int rank = induce ? c.n : c.m;
    if (rank < (induce ? 1 : 2)) throw UsageError(induce ? "filtrate induce --all needs --n" : "filtrate restrict --all needs --m >= 2");
    pairs = admissible_pairs(rank);
  } else {
    throw UsageError("filtrate needs --lambda and --mu, or --all");
  }
  prepare(c, pairs.front().first.total() + (induce ? 1 : 0));
  std::vector<FiltrationReport> reports;
  for (const auto& [lambda, mu] : pairs)
    reports.push_back(induce ? induced_specht_filtration(lambda, mu) : restricted_specht_filtration(lambda, mu));
  return emit_filtrations(c, reports, out);
}

int cmd_pairs(const RunConfig& c, std::ostream& out) {
  const bool explore = c.mode == "explore";
  std::vector<PairsReport> reports;
  std::optional<Composition> mu;
  std::optional<Partition> lambda;
  if (!c.mu.empty()) mu = comp_arg(c.mu, "mu");
  if (!c.lambda.empty()) {
    try {
      lambda = Partition::parse(c.lambda);
    } catch (const std::exception& e) {
      throw UsageError(std::string("bad --lambda '") + c.lambda + "': " + e.what());
    }
  }
  if (lambda && !mu) throw UsageError("--lambda needs --mu");
  const int m = mu ? mu->total() : c.m;
  if (m < 1) throw UsageError("pairs needs --m or --mu");
  if (mu && c.m > 0 && c.m != m) throw UsageError("--m must equal |mu|");
  prepare(c, m);
  if (lambda && !is_pair_of_partitions(*lambda, *mu)) throw UsageError("(lambda, mu) is not a pair of partitions");

  const std::vector<Composition> mus = mu ? std::vector<Composition>{*mu} : compositions_of(m);
  for (const auto& nu : mus) {
    const auto lambdas = lambda ? std::vector<Partition>{*lambda} : pair_partners(nu);
    if (explore) {
      for (const auto& l : lambdas) reports.push_back(explore_downward_closure(nu, l));
      continue;
    }
    if (!mu) {
      for (auto& r : verify_all_pairs(m)) reports.push_back(std::move(r));
      break;
    }
    reports.push_back(verify_sequence_bijection(nu));
    reports.push_back(verify_sharp_columns(nu));
    reports.push_back(verify_prefix_monotonicity(nu));
    for (const auto& shape : partitions_of(m))
      if (!lambda || shape == *lambda) reports.push_back(verify_kostka_cell_count(nu, shape));
    for (const auto& l : lambdas) reports.push_back(verify_cell_unions(nu, l));
    if (nu.is_partition() && !lambda) {
      const Partition p(nu.parts());
      reports.push_back(verify_full_pair(p));
      if (p.size() >= 2 && p.parts().back() == 1 && m > 1) reports.push_back(verify_last_part_one(p));
    }
  }

  bool ok = true;
  for (const auto& r : reports) ok = ok && (r.experimental || r.report.passed());
  if (json_out(c)) {
    auto arr = nlohmann::json::array();
    for (const auto& r : reports) arr.push_back(to_json(r));
    out << arr.dump(2) << '\n';
  } else {
    for (const auto& r : reports) {
      const char* status = r.report.passed() ? "PASS" : (r.experimental ? "COUNTEREXAMPLE" : "FAIL");
      out << status << " mu=(" << r.mu.to_string() << ")";
      if (r.lambda) out << " lambda=(" << r.lambda->to_string() << ")";
      out << " " << r.report.claim << " [" << r.report.checked << " checks]\n";
      for (const auto& v : r.report.violations) out << "    " << v << '\n';
    }
  }
  return ok ? kExitOk : kExitVerificationFailed;
}

HeckeElement random_element(int m, std::mt19937_64& rng) {
  const auto& G = SymmetricGroup::get(m);
  HeckeElement h(m, Basis::T);
  std::uniform_int_distribution<int> coeff(-2, 2), exp(-3, 3), pick(0, static_cast<int>(G.size()) - 1);
  for (int i = 0; i < 4; ++i) h[static_cast<std::size_t>(pick(rng))] += LaurentPoly::monomial(coeff(rng), exp(rng));
  return h;
}

int cmd_selftest(const RunConfig& c, std::ostream& out) {
  const int m = c.m > 0 ? c.m : 4;
  if (m < 2) throw UsageError("selftest needs --m >= 2");
  prepare(c, m);
  bool ok = true;
  nlohmann::json results = nlohmann::json::array();
  auto line = [&](const std::string& name, const Report& r) {
    ok = ok && r.passed();
    if (json_out(c)) {
      results.push_back({{"check", name}, {"checked", r.checked}, {"passed", r.passed()}, {"violations", r.violations}});
      return;
    }
    out << (r.passed() ? "PASS " : "FAIL ") << name << " [" << r.checked << " checks]\n";
    for (const auto& v : r.violations) out << "    " << v << '\n';
  };

  const auto& kl = kl_table(m, c.cache_dir);
  const auto& G = SymmetricGroup::get(m);
  Report klr;
  for (std::size_t y = 0; y < G.size(); ++y) {
    klr.expect(kl.P(y, y).is_one(), [&] { return "P_{y,y} != 1 at " + G.element(y).to_string(); });
    const HeckeElement cy = c_basis_element(y, kl);
    klr.expect(bar_involution(cy) == cy, [&] { return "C_y not bar-invariant at " + G.element(y).to_string(); });
    for (std::size_t x = 0; x < G.size(); ++x) {
      const auto& p = kl.P(x, y);
      if (p.is_zero()) continue;
      const int bound = G.length(y) - G.length(x) - 1;
      klr.expect(x == y || (p.min_exp() >= 0 && p.max_exp() <= bound), [&] {
        return "degree bound fails at " + G.element(x).to_string() + ", " + G.element(y).to_string();
      });
    }
  }
  line("Kazhdan-Lusztig polynomials of S_" + std::to_string(m), klr);

  Report cellr;
  const auto& cs = CellStructure::get(m);
  cellr.expect(cs.right_cells() == rs_right_cells(m), [] { return std::string("right cells"); });
  cellr.expect(cs.left_cells() == rs_left_cells(m), [] { return std::string("left cells"); });
  cellr.expect(cs.two_sided_cells() == rs_two_sided_cells(m), [] { return std::string("two-sided cells"); });
  line("cells agree with Robinson-Schensted", cellr);

  line("parabolic compatibility", verify_parabolic_compatibility(m - 1));
  line("parabolic expansion identities", verify_parabolic_expansion(m - 1));

  Report filt;
  for (const auto& cell : rs_right_cells(m - 1)) {
    std::vector<Permutation> perms;
    for (std::size_t w : cell) perms.push_back(SymmetricGroup::get(m - 1).element(w));
    filt.absorb(induced_cell_filtration(perms).checks);
  }
  for (const auto& cell : rs_right_cells(m)) {
    std::vector<Permutation> perms;
    for (std::size_t w : cell) perms.push_back(G.element(w));
    filt.absorb(restricted_cell_filtration(perms).checks);
  }
  line("cell-module filtrations", filt);

  Report spec;
  for (const auto& [lambda, mu] : admissible_pairs(m - 1)) spec.absorb(induced_specht_filtration(lambda, mu).checks);
  for (const auto& [lambda, mu] : admissible_pairs(m)) spec.absorb(restricted_specht_filtration(lambda, mu).checks);
  line("Specht filtrations", spec);

  Report pairs;
  for (const auto& r : verify_all_pairs(m)) pairs.absorb(r.report);
  line("sequences and pairs of partitions", pairs);

  std::mt19937_64 rng(c.seed);
  Report alg;
  for (int i = 0; i < 5; ++i) {
    const auto a = random_element(m, rng), b = random_element(m, rng), d = random_element(m, rng);
    alg.expect(t_multiply(t_multiply(a, b), d) == t_multiply(a, t_multiply(b, d)), [] { return std::string("associativity"); });
    alg.expect(bar_involution(t_multiply(a, b)) == t_multiply(bar_involution(a), bar_involution(b)),
               [] { return std::string("bar is multiplicative"); });
    alg.expect(j_involution(t_multiply(a, b)) == t_multiply(j_involution(a), j_involution(b)),
               [] { return std::string("j is multiplicative"); });
  }
  line("random triples (seed " + std::to_string(c.seed) + ")", alg);
  if (json_out(c)) out << nlohmann::json{{"m", m}, {"seed", c.seed}, {"results", results}, {"passed", ok}}.dump(2) << '\n';
  return ok ? kExitOk : kExitVerificationFailed;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Kazhdan-Lusztig cells, cell modules and Specht filtrations for the symmetric group", "klspecht"};
  app.require_subcommand(1);
  RunConfig c;
  app.add_option("--format", c.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--cache-dir", c.cache_dir, "Directory for cached KL tables")->envname(kCacheDirEnv);
  app.add_flag("--force", c.force, "Allow ranks above the default bound");
  app.add_option("--seed", c.seed, "Seed for randomized checks");
  app.fallthrough();

  auto* klpoly = app.add_subcommand("klpoly", "KL polynomials P_{x,y}");
  klpoly->add_option("--m", c.m, "Rank")->required();
  klpoly->add_option("--x", c.x, "x as one-line form, or e");
  klpoly->add_option("--y", c.y, "y as one-line form, or e");
  klpoly->add_flag("--all", c.all, "Whole table");

  auto* cbasis = app.add_subcommand("cbasis", "T-basis expansion of C_y or C'_y");
  cbasis->add_option("--m", c.m, "Rank")->required();
  cbasis->add_option("--y", c.y, "y as one-line form, or e")->required();
  cbasis->add_option("--basis", c.basis, "C or Cprime")->check(CLI::IsMember({"C", "Cprime"}));

  auto* cells = app.add_subcommand("cells", "Left, right and two-sided cells");
  cells->add_option("--m", c.m, "Rank")->required();

  auto* induce = app.add_subcommand("induce-cell", "Induced cell-module filtration");
  induce->add_option("--n", c.n, "Rank of the cell");
  induce->add_option("--y", c.y, "An element of the cell");
  induce->add_flag("--all", c.all, "Every right cell of S_n");

  auto* restrict = app.add_subcommand("restrict-cell", "Restricted cell-module filtration");
  restrict->add_option("--m", c.m, "Rank of the cell");
  restrict->add_option("--y", c.y, "An element of the cell");
  restrict->add_flag("--all", c.all, "Every right cell of S_m");

  auto* filtrate = app.add_subcommand("filtrate", "Specht filtrations");
  filtrate->add_option("mode", c.mode, "induce or restrict")->required()->check(CLI::IsMember({"induce", "restrict"}));
  filtrate->add_option("--lambda", c.lambda, "Composition lambda");
  filtrate->add_option("--mu", c.mu, "Composition mu");
  filtrate->add_option("--n", c.n, "|lambda| for induction");
  filtrate->add_option("--m", c.m, "|lambda| for restriction");
  filtrate->add_flag("--all", c.all, "Every admissible pair at the given rank");

  auto* pairs = app.add_subcommand("pairs", "Sequences of type mu and pairs of partitions");
  pairs->add_option("mode", c.mode, "verify or explore")->required()->check(CLI::IsMember({"verify", "explore"}));
  pairs->add_option("--m", c.m, "Rank");
  pairs->add_option("--mu", c.mu, "Composition mu");
  pairs->add_option("--lambda", c.lambda, "Partition lambda");

  auto* selftest = app.add_subcommand("selftest", "Quick end-to-end verification");
  selftest->add_option("--m", c.m, "Rank (default 4)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (klpoly->parsed()) return cmd_klpoly(c, out);
    if (cbasis->parsed()) return cmd_cbasis(c, out);
    if (cells->parsed()) return cmd_cells(c, out);
    if (induce->parsed()) return cmd_cell_filtration(c, true, out);
    if (restrict->parsed()) return cmd_cell_filtration(c, false, out);
    if (filtrate->parsed()) return cmd_filtrate(c, out);
    if (pairs->parsed()) return cmd_pairs(c, out);
    if (selftest->parsed()) return cmd_selftest(c, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace klspecht
