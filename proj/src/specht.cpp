#include "klspecht/specht.hpp"

#include <stdexcept>

#include "klspecht/linalg.hpp"

namespace klspecht {

namespace {

LaurentPoly signed_v_pow(int sign_exp, int v_exp) {
  return LaurentPoly::monomial(sign_exp % 2 == 0 ? 1 : -1, v_exp);
}

// Embeds a T-basis element of H(S_n) into H(S_m).
HeckeElement embed(const HeckeElement& h, int m) {
  if (h.rank() == m) return h;
  const auto& G = SymmetricGroup::get(h.rank());
  HeckeElement out(m, Basis::T);
  for (std::size_t i : h.support()) out[lex_rank(G.element(i).embedded(m))] = h[i];
  return out;
}

std::vector<Vector> coordinate_rows(const std::vector<const HeckeElement*>& elements) {
  std::vector<Vector> rows;
  for (const auto* e : elements) rows.push_back(e->coords());
  return rows;
}

Permutation w_J_of(const Composition& mu) { return parabolic(mu.total(), j_of_composition(mu)).longest; }

struct LayerSpec {
  Node corner;
  Partition shape;
  std::vector<Permutation> cell;        // C_j in the rank of the factor
  std::optional<Permutation> d;
  std::vector<std::size_t> image;       // ambient indices, aligned with cell
  int factor_rank;
};

// Certifies L_i = <theta(C_w) : w in the first i images> layer by layer:
// theta(C_w) T_s is computed directly and must equal the theta-image of the
// part of C_w T_s supported on the layers so far.
FiltrationReport specht_chain(const SpechtMap& theta, std::vector<LayerSpec> layers, int gens, FiltrationReport out) {
  const int m = theta.rank();
  const auto& G = SymmetricGroup::get(m);
  const auto& sc = StructureConstants::get(m);
  std::vector<bool> included(G.size(), false);
  std::vector<HeckeElement> images(G.size());
  std::vector<const HeckeElement*> all;

  for (auto& spec : layers) {
    for (std::size_t w : spec.image) {
      included[w] = true;
      images[w] = theta.image_of_c(w);
      all.push_back(&images[w]);
    }
    FactorLayer layer;
    layer.corner = spec.corner;
    layer.shape = spec.shape;
    layer.cell = spec.cell;
    layer.d = spec.d;
    for (std::size_t i = 0; i < included.size(); ++i)
      if (included[i]) layer.span.push_back(i);
    layer.closed = true;
    for (std::size_t w : spec.image)
      for (int k = 1; k <= gens; ++k) {
        const HeckeElement direct = right_multiply_generator(images[w], k);
        HeckeElement predicted(m, Basis::T);
        for (const auto& t : sc.c(w, k))
          if (included[t.index]) predicted.add_scaled(t.coeff, images[t.index]);
        const bool ok = direct == predicted;
        layer.closed = layer.closed && ok;
        out.checks.expect(ok, [&] {
          return "layer " + std::to_string(out.factors.size() + 1) + " not closed: theta(C_" +
                 G.element(w).to_string() + ") T_s" + std::to_string(k);
        });
      }
    const auto mod = cell_module(spec.factor_rank, indices_of(spec.cell));
    out.checks.absorb(mod.checks);
    layer.isomorphic = true;
    for (int k = 1; k <= gens; ++k) {
      layer.matrices.push_back(action_matrix(m, k, spec.image));
      layer.isomorphic = layer.isomorphic && layer.matrices.back() == mod.generators[k - 1];
    }
    out.checks.expect(layer.isomorphic, [&] {
      return "factor " + std::to_string(out.factors.size() + 1) + " differs from the cell module of shape " +
             spec.shape.to_string();
    });
    out.factors.push_back(std::move(layer));
  }

  out.checks.expect(all.size() == out.basis_size, [&] {
    return "basis has " + std::to_string(all.size()) + " elements, expected " + std::to_string(out.basis_size);
  });
  out.checks.expect(linearly_independent(coordinate_rows(all)),
                    [] { return std::string("Specht basis elements are linearly dependent"); });
  for (std::size_t i = 1; i < out.factors.size(); ++i)
    out.checks.expect(dominance_less(out.factors[i - 1].shape, out.factors[i].shape), [&] {
      return "factor shapes " + out.factors[i - 1].shape.to_string() + " and " + out.factors[i].shape.to_string() +
             " are not strictly increasing";
    });
  return out;
}

void require_admissible(const Composition& lambda, const Composition& mu) { (void)special_diagram(lambda, mu); }

}  // namespace

HeckeElement x_element(const Composition& lambda) {
  const int m = lambda.total();
  const auto& pd = parabolic(m, j_of_composition(lambda));
  HeckeElement x(m, Basis::T);
  for (const auto& w : pd.subgroup) x[lex_rank(w)] = LaurentPoly(1);
  return x;
}

HeckeElement y_element(const Composition& lambda) {
  const int m = lambda.total();
  const auto& pd = parabolic(m, j_of_composition(lambda));
  HeckeElement y(m, Basis::T);
  for (const auto& w : pd.subgroup) y[lex_rank(w)] = signed_v_pow(w.length(), -2 * w.length());
  return y;
}

Report verify_young_normalizations(const Composition& lambda) {
  const int m = lambda.total();
  const auto& kl = kl_table(m);
  const Permutation wJ = w_J_of(lambda);
  const int l = wJ.length();
  Report r;
  r.claim = "x and y of " + lambda.to_string() + " as multiples of C'_{w_J} and C_{w_J}";
  r.expect(x_element(lambda) == cprime_basis_element(wJ, kl).scaled(LaurentPoly::v_pow(l)),
           [] { return std::string("x differs from q^(l/2) C'_{w_J}"); });
  r.expect(y_element(lambda) == c_basis_element(wJ, kl).scaled(signed_v_pow(l, -l)),
           [] { return std::string("y differs from (-q^(-1/2))^l C_{w_J}"); });
  return r;
}

SpechtMap::SpechtMap(const Composition& lambda, const Composition& mu, int m)
    : m_(m), E_(special_diagram(lambda, mu)), wE_(w_of_diagram(E_)) {
  if (m < lambda.total()) throw std::invalid_argument("ambient rank below |lambda|");
  const HeckeElement g = t_multiply(x_element(lambda), HeckeElement::basis_element(Basis::T, wE_));
  translates_ = right_translates(embed(g, m));
}

HeckeElement SpechtMap::image_of_c(std::size_t w) const {
  const HeckeElement c = c_basis_element(w, kl_table(m_));
  HeckeElement out(m_, Basis::T);
  for (std::size_t x : c.support()) out.add_scaled(c[x], translates_[x]);
  return out;
}

SpechtModule specht_basis(const Composition& lambda, const Composition& mu) {
  require_admissible(lambda, mu);
  const int m = lambda.total();
  const SpechtMap theta(lambda, mu, m);
  const auto& cs = CellStructure::get(m);
  SpechtModule s;
  s.lambda = lambda;
  s.mu = mu;
  s.rank = m;
  s.E = theta.diagram();
  s.w_E = theta.w_E();
  s.w_J = w_J_of(mu);
  const std::size_t j = lex_rank(s.w_J);
  s.cell = cs.right_cells()[cs.right_cell_of(j)];
  s.checks.claim = "Specht basis of S^" + lambda.to_string() + " from mu = " + mu.to_string();
  std::vector<const HeckeElement*> ptrs;
  for (std::size_t w : s.cell) s.basis.push_back(theta.image_of_c(w));
  for (const auto& b : s.basis) ptrs.push_back(&b);
  const auto f = static_cast<std::size_t>(standard_tableaux_count(lambda.sorted()));
  s.checks.expect(s.basis.size() == f, [&] {
    return "basis size " + std::to_string(s.basis.size()) + " differs from f = " + std::to_string(f);
  });
  s.checks.expect(linearly_independent(coordinate_rows(ptrs)),
                  [] { return std::string("Specht basis elements are linearly dependent"); });
  const auto kernel = cs.strict_down_set(j);
  const std::size_t step = kernel.size() > 24 ? kernel.size() / 24 : 1;
  const auto& G = SymmetricGroup::get(m);
  for (std::size_t i = 0; i < kernel.size(); i += step)
    s.checks.expect(theta.image_of_c(kernel[i]).is_zero(),
                    [&] { return "theta(C_" + G.element(kernel[i]).to_string() + ") is not zero"; });
  return s;
}

Report verify_kernel(const Composition& lambda, const Composition& mu, bool induced) {
  require_admissible(lambda, mu);
  const int n = lambda.total();
  const int m = induced ? n + 1 : n;
  const SpechtMap theta(lambda, mu, m);
  const auto& cs = CellStructure::get(n);
  const auto& Gn = SymmetricGroup::get(n);
  const auto& G = SymmetricGroup::get(m);
  const std::size_t j = lex_rank(w_J_of(mu));
  Report r;
  r.claim = std::string(induced ? "induced " : "") + "kernel of theta for " + lambda.to_string() + ", " +
            mu.to_string();
  std::vector<Permutation> xs = induced ? coset_reps_x_prime(n) : std::vector<Permutation>{Permutation::identity(m)};
  for (std::size_t y : cs.strict_down_set(j))
    for (const auto& x : xs) {
      const std::size_t z = lex_rank(Gn.element(y).embedded(m) * x);
      r.expect(theta.image_of_c(z).is_zero(), [&] { return "theta(C_" + G.element(z).to_string() + ") is not zero"; });
    }
  return r;
}

FiltrationReport induced_specht_filtration(const Composition& lambda, const Composition& mu) {
  require_admissible(lambda, mu);
  const int n = lambda.total();
  const int m = n + 1;
  const auto dec = induce_cell(right_cell_of(w_J_of(mu)));
  FiltrationReport out;
  out.kind = "induce-specht";
  out.ambient_rank = m;
  out.source_shape = dec.source_recording.shape();
  out.lambda = lambda.to_string();
  out.mu = mu.to_string();
  out.basis_size = static_cast<std::size_t>(m * standard_tableaux_count(lambda.sorted()));
  out.checks.claim = "Specht filtration of S^" + out.lambda + " induced to S_" + std::to_string(m);
  out.checks.absorb(dec.checks);
  std::vector<LayerSpec> layers;
  for (auto it = dec.factors.rbegin(); it != dec.factors.rend(); ++it)
    layers.push_back({it->corner, it->shape, it->cell, std::nullopt, indices_of(it->cell), m});
  return specht_chain(SpechtMap(lambda, mu, m), std::move(layers), m - 1, std::move(out));
}

FiltrationReport restricted_specht_filtration(const Composition& lambda, const Composition& mu) {
  require_admissible(lambda, mu);
  const int m = lambda.total();
  if (m < 2) throw std::invalid_argument("restriction needs rank at least 2");
  const auto dec = restrict_cell(right_cell_of(w_J_of(mu)));
  FiltrationReport out;
  out.kind = "restrict-specht";
  out.ambient_rank = m;
  out.source_shape = dec.source_recording.shape();
  out.lambda = lambda.to_string();
  out.mu = mu.to_string();
  out.basis_size = static_cast<std::size_t>(standard_tableaux_count(lambda.sorted()));
  out.checks.claim = "Specht filtration of S^" + out.lambda + " restricted to S_" + std::to_string(m - 1);
  out.checks.absorb(dec.checks);
  std::vector<LayerSpec> layers;
  for (const auto& f : dec.factors) {
    std::vector<std::size_t> image;
    for (const auto& u : f.cell) image.push_back(lex_rank(*f.d * u.embedded(m)));
    layers.push_back({f.corner, f.shape, f.cell, f.d, std::move(image), m - 1});
  }
  return specht_chain(SpechtMap(lambda, mu, m), std::move(layers), m - 2, std::move(out));
}

std::vector<std::pair<Composition, Composition>> admissible_pairs(int m) {
  std::vector<std::pair<Composition, Composition>> out;
  const auto all = compositions_of(m);
  for (const auto& lambda : all)
    for (const auto& mu : all)
      if (lambda.sorted() == mu.conjugate()) out.emplace_back(lambda, mu);
  return out;
}

}  // namespace klspecht
