#include "klspecht/cells.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace klspecht {

namespace {

std::vector<Permutation> fibre_of_recording(const Tableau& Q) {
  std::vector<Permutation> out;
  for (const auto& P : standard_tableaux(Q.shape())) out.push_back(rs_reverse_insert(P, Q));
  std::sort(out.begin(), out.end());
  return out;
}

Tableau common_recording(const std::vector<Permutation>& cell) {
  if (cell.empty()) throw std::invalid_argument("empty cell");
  const Tableau A = rs_insert(cell.front()).Q;
  for (const auto& w : cell)
    if (w.rank() != cell.front().rank() || rs_insert(w).Q != A)
      throw std::invalid_argument("the given elements do not form a right cell");
  if (fibre_of_recording(A).size() != cell.size())
    throw std::invalid_argument("the given elements do not form a whole right cell");
  return A;
}

std::string node_string(Node k) { return "(" + std::to_string(k.first) + "," + std::to_string(k.second) + ")"; }

}  // namespace

std::vector<Permutation> right_cell_of(const Permutation& w) { return fibre_of_recording(rs_insert(w).Q); }

std::vector<std::size_t> indices_of(const std::vector<Permutation>& elements) {
  std::vector<std::size_t> out;
  for (const auto& w : elements) out.push_back(lex_rank(w));
  std::sort(out.begin(), out.end());
  return out;
}

CellDecomposition induce_cell(const std::vector<Permutation>& cell) {
  const Tableau A = common_recording(cell);
  const int n = cell.front().rank();
  CellDecomposition dec;
  dec.source_rank = n;
  dec.source_recording = A;
  dec.checks.claim = "induction of the right cell with recording tableau " + A.to_string();
  for (const Node& k : corners(A.shape()).outer) {
    CellFactor f;
    f.corner = k;
    f.recording = A.with_entry(k, n + 1);
    f.cell = fibre_of_recording(f.recording);
    f.shape = f.recording.shape();
    dec.factors.push_back(std::move(f));
  }

  std::set<Permutation> translates;
  for (const auto& u : cell)
    for (const auto& x : coset_reps_x_prime(n)) translates.insert(u.embedded(n + 1) * x);
  std::set<Permutation> uni;
  std::size_t total = 0;
  for (const auto& f : dec.factors) {
    total += f.cell.size();
    uni.insert(f.cell.begin(), f.cell.end());
  }
  dec.checks.expect(uni == translates, [] { return std::string("union of the C_k differs from C X'"); });
  dec.checks.expect(total == uni.size(), [] { return std::string("the C_k are not disjoint"); });
  for (std::size_t i = 0; i < dec.factors.size(); ++i)
    for (std::size_t j = i + 1; j < dec.factors.size(); ++j)
      dec.checks.expect(dominance_less(dec.factors[j].shape, dec.factors[i].shape), [&] {
        return "shape at " + node_string(dec.factors[j].corner) + " is not strictly dominated by the shape at " +
               node_string(dec.factors[i].corner);
      });
  return dec;
}

CellDecomposition restrict_cell(const std::vector<Permutation>& cell) {
  const Tableau A = common_recording(cell);
  const int m = cell.front().rank();
  if (m < 2) throw std::invalid_argument("restriction needs rank at least 2");
  const int n = m - 1;
  const auto xs = coset_reps_x_prime(n);
  CellDecomposition dec;
  dec.source_rank = m;
  dec.source_recording = A;
  dec.checks.claim = "restriction of the right cell with recording tableau " + A.to_string();
  for (const Node& k : corners(A.shape()).inner) {
    const auto bump = reverse_bump(A, k);
    CellFactor f;
    f.corner = k;
    f.d = xs[bump.ejected - 1].inverse();
    f.recording = bump.remaining.relabeled(*f.d);
    f.cell = fibre_of_recording(f.recording);
    f.shape = f.recording.shape();
    dec.factors.push_back(std::move(f));
  }

  std::set<Permutation> uni;
  std::size_t total = 0;
  for (const auto& f : dec.factors)
    for (const auto& u : f.cell) {
      uni.insert(*f.d * u.embedded(m));
      ++total;
    }
  dec.checks.expect(uni == std::set<Permutation>(cell.begin(), cell.end()),
                    [] { return std::string("union of the d_k C_k differs from C"); });
  dec.checks.expect(total == uni.size(), [] { return std::string("the d_k C_k are not disjoint"); });
  for (std::size_t i = 0; i < dec.factors.size(); ++i)
    for (std::size_t j = i + 1; j < dec.factors.size(); ++j) {
      const auto& a = dec.factors[i];
      const auto& b = dec.factors[j];
      dec.checks.expect(dominance_less(a.shape, b.shape), [&] {
        return "shape at " + node_string(a.corner) + " is not strictly dominated by the shape at " +
               node_string(b.corner);
      });
      dec.checks.expect(bruhat_leq(*a.d, *b.d), [&] {
        return "d at " + node_string(a.corner) + " is not Bruhat-below d at " + node_string(b.corner);
      });
    }
  return dec;
}

CellModule cell_module(int m, const std::vector<std::size_t>& cell) {
  if (cell.empty()) throw std::invalid_argument("empty cell");
  const auto& cs = CellStructure::get(m);
  const auto& sc = StructureConstants::get(m);
  const auto& G = SymmetricGroup::get(m);
  CellModule mod;
  mod.rank = m;
  mod.cell = cell;
  std::sort(mod.cell.begin(), mod.cell.end());
  for (std::size_t w : mod.cell)
    if (cs.right_cell_of(w) != cs.right_cell_of(mod.cell.front()) ||
        cs.right_cells()[cs.right_cell_of(w)].size() != mod.cell.size())
      throw std::invalid_argument("the given elements do not form a right cell");
  const std::size_t rep = mod.cell.front();
  mod.down_set = cs.down_set(rep);
  mod.strict_down_set = cs.strict_down_set(rep);
  mod.checks.claim = "cell module of " + G.element(rep).to_string();

  std::vector<bool> in_down(G.size(), false), in_strict(G.size(), false);
  for (std::size_t z : mod.down_set) in_down[z] = true;
  for (std::size_t z : mod.strict_down_set) in_strict[z] = true;
  for (std::size_t w : mod.down_set)
    for (int k = 1; k < m; ++k) {
      const auto& ex = sc.c(w, k);
      const auto& member = in_strict[w] ? in_strict : in_down;
      const bool ok = std::all_of(ex.begin(), ex.end(), [&](const ExpansionTerm& t) { return member[t.index]; });
      mod.checks.expect(ok, [&] {
        return std::string(in_strict[w] ? "strict " : "") + "down set not closed at " +
               G.element(w).to_string() + " s" + std::to_string(k);
      });
    }

  const std::size_t d = mod.cell.size();
  for (int k = 1; k < m; ++k) {
    Matrix mat(d, std::vector<LaurentPoly>(d));
    for (std::size_t i = 0; i < d; ++i)
      for (const auto& t : sc.c(mod.cell[i], k)) {
        auto it = std::lower_bound(mod.cell.begin(), mod.cell.end(), t.index);
        if (it != mod.cell.end() && *it == t.index) mat[i][it - mod.cell.begin()] = t.coeff;
      }
    mod.generators.push_back(std::move(mat));
  }
  return mod;
}

Matrix action_matrix(int m, int k, const std::vector<std::size_t>& image) {
  const auto& sc = StructureConstants::get(m);
  const std::size_t d = image.size();
  Matrix mat(d, std::vector<LaurentPoly>(d));
  for (std::size_t i = 0; i < d; ++i)
    for (const auto& t : sc.c(image[i], k))
      for (std::size_t j = 0; j < d; ++j)
        if (image[j] == t.index) mat[i][j] = t.coeff;
  return mat;
}

namespace {

// Acting generators 1..gens; checks that the span is closed and returns whether it is.
bool closed_under(const std::vector<bool>& span, const std::vector<std::size_t>& elements, int m, int gens,
                  Report& checks, const std::string& what) {
  const auto& sc = StructureConstants::get(m);
  const auto& G = SymmetricGroup::get(m);
  bool all = true;
  for (std::size_t w : elements)
    for (int k = 1; k <= gens; ++k) {
      const auto& ex = sc.c(w, k);
      const bool ok = std::all_of(ex.begin(), ex.end(), [&](const ExpansionTerm& t) { return span[t.index]; });
      all = all && ok;
      checks.expect(ok, [&] {
        return what + " is not closed: C_" + G.element(w).to_string() + " T_s" + std::to_string(k);
      });
    }
  return all;
}

std::vector<std::size_t> sorted_indices(std::vector<bool> const& mask) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < mask.size(); ++i)
    if (mask[i]) out.push_back(i);
  return out;
}

}  // namespace

FiltrationReport induced_cell_filtration(const std::vector<Permutation>& cell) {
  auto dec = induce_cell(cell);
  const int n = dec.source_rank;
  const int m = n + 1;
  const auto& G = SymmetricGroup::get(m);
  const auto& Gs = SymmetricGroup::get(n);
  const auto& csn = CellStructure::get(n);
  const auto xs = coset_reps_x_prime(n);
  const std::size_t rep = lex_rank(cell.front());

  FiltrationReport rep_out;
  rep_out.kind = "induce-cell";
  rep_out.ambient_rank = m;
  rep_out.source_shape = dec.source_recording.shape();
  rep_out.checks.claim = "induced cell-module filtration";
  rep_out.checks.absorb(dec.checks);

  std::vector<bool> span(G.size(), false), full(G.size(), false);
  std::vector<std::size_t> base;
  for (std::size_t y = 0; y < Gs.size(); ++y) {
    if (!csn.leq_R(y, rep)) continue;
    for (const auto& x : xs) {
      const std::size_t w = lex_rank(Gs.element(y).embedded(m) * x);
      full[w] = true;
      if (csn.less_R(y, rep)) {
        span[w] = true;
        base.push_back(w);
      }
    }
  }
  rep_out.basis_size = static_cast<std::size_t>(std::count(full.begin(), full.end(), true)) - base.size();
  closed_under(span, base, m, m - 1, rep_out.checks, "L_0");

  for (auto it = dec.factors.rbegin(); it != dec.factors.rend(); ++it) {
    FactorLayer layer;
    layer.corner = it->corner;
    layer.shape = it->shape;
    layer.cell = it->cell;
    const auto idx = indices_of(it->cell);
    for (std::size_t w : idx) span[w] = true;
    layer.span = sorted_indices(span);
    layer.closed = closed_under(span, idx, m, m - 1, rep_out.checks, "L_" + std::to_string(rep_out.factors.size() + 1));
    const auto mod = cell_module(m, idx);
    rep_out.checks.absorb(mod.checks);
    layer.isomorphic = true;
    for (int k = 1; k < m; ++k) {
      layer.matrices.push_back(action_matrix(m, k, idx));
      layer.isomorphic = layer.isomorphic && layer.matrices.back() == mod.generators[k - 1];
    }
    rep_out.checks.expect(layer.isomorphic, [&] { return "factor at " + node_string(layer.corner) + " is not S_C"; });
    rep_out.factors.push_back(std::move(layer));
  }
  rep_out.checks.expect(span == full, [] { return std::string("L_p differs from M_C H"); });
  for (std::size_t i = 1; i < rep_out.factors.size(); ++i)
    rep_out.checks.expect(dominance_less(rep_out.factors[i - 1].shape, rep_out.factors[i].shape),
                          [] { return std::string("factor shapes are not strictly increasing"); });
  return rep_out;
}

FiltrationReport restricted_cell_filtration(const std::vector<Permutation>& cell) {
  auto dec = restrict_cell(cell);
  const int m = dec.source_rank;
  const int n = m - 1;
  const auto& G = SymmetricGroup::get(m);
  const auto& cs = CellStructure::get(m);
  const std::size_t rep = lex_rank(cell.front());

  FiltrationReport out;
  out.kind = "restrict-cell";
  out.ambient_rank = m;
  out.source_shape = dec.source_recording.shape();
  out.basis_size = cell.size();
  out.checks.claim = "restricted cell-module filtration";
  out.checks.absorb(dec.checks);

  std::vector<bool> span(G.size(), false), full(G.size(), false);
  const auto base = cs.strict_down_set(rep);
  for (std::size_t z : base) span[z] = true;
  for (std::size_t z : cs.down_set(rep)) full[z] = true;
  closed_under(span, base, m, n - 1, out.checks, "L_0");

  for (const auto& f : dec.factors) {
    FactorLayer layer;
    layer.corner = f.corner;
    layer.shape = f.shape;
    layer.cell = f.cell;
    layer.d = f.d;
    std::vector<std::size_t> image;  // d u for u in C_k, in the order of C_k
    for (const auto& u : f.cell) image.push_back(lex_rank(*f.d * u.embedded(m)));
    for (std::size_t w : image) span[w] = true;
    layer.span = sorted_indices(span);
    layer.closed = closed_under(span, image, m, n - 1, out.checks, "L_" + std::to_string(out.factors.size() + 1));
    const auto mod = cell_module(n, indices_of(f.cell));
    out.checks.absorb(mod.checks);
    layer.isomorphic = true;
    for (int k = 1; k < n; ++k) {
      layer.matrices.push_back(action_matrix(m, k, image));
      layer.isomorphic = layer.isomorphic && layer.matrices.back() == mod.generators[k - 1];
    }
    out.checks.expect(layer.isomorphic, [&] { return "factor at " + node_string(layer.corner) + " is not S_C"; });
    out.factors.push_back(std::move(layer));
  }
  out.checks.expect(span == full, [] { return std::string("L_p differs from M_C"); });
  for (std::size_t i = 1; i < out.factors.size(); ++i)
    out.checks.expect(dominance_less(out.factors[i - 1].shape, out.factors[i].shape),
                      [] { return std::string("factor shapes are not strictly increasing"); });
  return out;
}

namespace {

nlohmann::json cell_json(const std::vector<Permutation>& cell) {
  auto arr = nlohmann::json::array();
  for (const auto& w : cell) arr.push_back(w.to_string());
  return arr;
}

}  // namespace

nlohmann::json to_json(const CellDecomposition& d) {
  auto factors = nlohmann::json::array();
  for (const auto& f : d.factors) {
    nlohmann::json j = {{"corner", {f.corner.first, f.corner.second}},
                        {"recording", to_json(f.recording)},
                        {"shape", f.shape.parts()},
                        {"cell_size", f.cell.size()},
                        {"cell", cell_json(f.cell)}};
    j["d_k"] = f.d ? nlohmann::json(f.d->to_string()) : nlohmann::json(nullptr);
    factors.push_back(std::move(j));
  }
  return {{"source_rank", d.source_rank},
          {"source_recording", to_json(d.source_recording)},
          {"source_cell_shape", d.source_recording.shape().parts()},
          {"factors", factors},
          {"verified", d.checks.passed()},
          {"violations", d.checks.violations}};
}

nlohmann::json to_json(const FiltrationReport& r) {
  auto factors = nlohmann::json::array();
  for (const auto& f : r.factors) {
    nlohmann::json j = {{"corner", {f.corner.first, f.corner.second}},
                        {"shape", f.shape.parts()},
                        {"cell_size", f.cell.size()},
                        {"cell", cell_json(f.cell)}};
    j["d_k"] = f.d ? nlohmann::json(f.d->to_string()) : nlohmann::json(nullptr);
    j["closed"] = f.closed;
    j["isomorphic"] = f.isomorphic;
    factors.push_back(std::move(j));
  }
  nlohmann::json j = {{"kind", r.kind},
                      {"ambient_rank", r.ambient_rank},
                      {"source_cell_shape", r.source_shape.parts()}};
  if (!r.lambda.empty()) {
    j["lambda"] = r.lambda;
    j["mu"] = r.mu;
  }
  j["basis_size"] = r.basis_size;
  j["factors"] = std::move(factors);
  j["checked"] = r.checks.checked;
  j["verified"] = r.verified();
  j["violations"] = r.checks.violations;
  return j;
}

}  // namespace klspecht
