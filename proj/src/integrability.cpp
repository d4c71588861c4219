#include "g2t/integrability.hpp"

#include <map>
#include <stdexcept>

namespace g2t {

namespace {

void require_three_form(const Form& H) {
  if (!H.is_homogeneous(3))
    throw std::invalid_argument("twisted differential: H must be a 3-form");
}

}  // namespace

Form twisted_differential(const LieAlgebra& g, const Form& H,
                          const Form& sigma) {
  if (H.dim() != g.dim() || sigma.dim() != g.dim())
    throw std::invalid_argument("twisted differential: dimension mismatch");
  require_three_form(H);
  return g.ce_differential(sigma) + wedge(H, sigma);
}

std::optional<Rational> proportionality_factor(const Form& a, const Form& b) {
  if (a.dim() != b.dim()) return std::nullopt;
  if (b.is_zero()) return std::nullopt;
  if (a.is_zero()) return Rational(0);
  // Candidate ratio from b's first term; then verify a == lambda * b.
  const auto& [blade0, c0] = *b.terms().begin();
  Rational lambda = a.coefficient(blade0) / c0;
  if (a == lambda * b) return lambda;
  return std::nullopt;
}

IntegrabilityReport integrability_report(const LieAlgebra& g, const Form& H,
                                         const SpinorPair& pair) {
  IntegrabilityReport r;
  r.h_closed = g.ce_differential(H).is_zero();
  r.d_H_rho = twisted_differential(g, H, pair.rho);
  r.d_H_rho_hat = twisted_differential(g, H, pair.rho_hat);
  r.closed = r.d_H_rho_hat.is_zero();
  r.coclosed = r.d_H_rho.is_zero();
  r.strongly_integrable = r.closed && r.coclosed;
  if (!r.closed) {
    auto lo = proportionality_factor(r.d_H_rho_hat, pair.rho);
    if (lo && !lo->is_zero()) r.weak_odd = *lo;
  }
  if (!r.coclosed) {
    auto le = proportionality_factor(r.d_H_rho, pair.rho_hat);
    if (le && !le->is_zero()) r.weak_even = *le;
  }
  return r;
}

bool AffineSolutionSpace::contains(const Form& H) const {
  if (!feasible) return false;
  // Solve particular + sum x_i kernel_i = H for the x_i: stack the kernel
  // forms columnwise over the union of blades involved.
  Form diff = H - particular;
  std::map<Blade, int, BladeCanonicalLess> row_of;
  auto note = [&row_of](const Form& f) {
    for (const auto& [blade, coeff] : f.terms()) {
      (void)coeff;
      row_of.emplace(blade, 0);
    }
  };
  note(diff);
  for (const Form& k : kernel) note(k);
  int nrows = 0;
  for (auto& [blade, idx] : row_of) idx = nrows++;
  RationalMatrix A(nrows, static_cast<int>(kernel.size()));
  std::vector<Rational> b(static_cast<std::size_t>(nrows));
  for (const auto& [blade, idx] : row_of)
    b[static_cast<std::size_t>(idx)] = diff.coefficient(blade);
  for (int c = 0; c < static_cast<int>(kernel.size()); ++c)
    for (const auto& [blade, coeff] : kernel[static_cast<std::size_t>(c)].terms())
      A.at(row_of.at(blade), c) = coeff;
  return solve_affine(A, b).feasible;
}

AffineSolutionSpace solve_h_space(const LieAlgebra& g, const SpinorPair& pair,
                                  const HConstraints& constraints) {
  const int n = g.dim();
  const std::vector<Blade> unknowns = blades_of_grade(n, 3);
  const int ncols = static_cast<int>(unknowns.size());

  // Image of each unknown blade under the linear constraint maps, plus the
  // fixed right-hand sides; rows are indexed by the output blades that occur.
  struct Block {
    std::vector<Form> columns;
    Form rhs;
  };
  std::vector<Block> blocks;

  auto add_linear_block = [&](auto&& image_of, Form rhs) {
    Block blk{{}, std::move(rhs)};
    blk.columns.reserve(static_cast<std::size_t>(ncols));
    for (const Blade& u : unknowns)
      blk.columns.push_back(image_of(Form::monomial(n, u, Rational(1))));
    blocks.push_back(std::move(blk));
  };

  if (constraints.h_closed)
    add_linear_block([&](const Form& h) { return g.ce_differential(h); },
                     Form::zero(n));
  if (constraints.closed_structure)
    add_linear_block([&](const Form& h) { return wedge(h, pair.rho_hat); },
                     -g.ce_differential(pair.rho_hat));
  if (constraints.coclosed_structure)
    add_linear_block([&](const Form& h) { return wedge(h, pair.rho); },
                     -g.ce_differential(pair.rho));

  int nrows = 0;
  std::vector<std::map<Blade, int, BladeCanonicalLess>> row_of(blocks.size());
  for (std::size_t bi = 0; bi < blocks.size(); ++bi) {
    auto note = [&](const Form& f) {
      for (const auto& [blade, coeff] : f.terms()) {
        (void)coeff;
        row_of[bi].emplace(blade, 0);
      }
    };
    for (const Form& col : blocks[bi].columns) note(col);
    note(blocks[bi].rhs);
    for (auto& [blade, idx] : row_of[bi]) idx = nrows++;
  }
  // Admissibility pins individual coefficients to zero: one row per blade
  // with two or more legs in the fiber span.
  std::vector<int> pinned;
  if (constraints.admissible_fiber) {
    const SpanIdeal& a = *constraints.admissible_fiber;
    for (int c = 0; c < ncols; ++c) {
      int legs = 0;
      for (int x : a.indices)
        if (unknowns[static_cast<std::size_t>(c)].contains(x)) ++legs;
      if (legs >= 2) pinned.push_back(c);
    }
  }
  nrows += static_cast<int>(pinned.size());

  RationalMatrix A(nrows, ncols);
  std::vector<Rational> b(static_cast<std::size_t>(nrows));
  for (std::size_t bi = 0; bi < blocks.size(); ++bi) {
    for (int c = 0; c < ncols; ++c)
      for (const auto& [blade, coeff] :
           blocks[bi].columns[static_cast<std::size_t>(c)].terms())
        A.at(row_of[bi].at(blade), c) = coeff;
    for (const auto& [blade, coeff] : blocks[bi].rhs.terms())
      b[static_cast<std::size_t>(row_of[bi].at(blade))] = coeff;
  }
  int base = nrows - static_cast<int>(pinned.size());
  for (std::size_t p = 0; p < pinned.size(); ++p)
    A.at(base + static_cast<int>(p), pinned[p]) = Rational(1);

  AffineSolveResult sol = solve_affine(A, b);
  AffineSolutionSpace out;
  out.particular = Form::zero(n);
  if (!sol.feasible) {
    out.feasible = false;
    out.certificate = sol.certificate;
    return out;
  }
  out.feasible = true;
  auto vec_to_form = [&](const std::vector<Rational>& v) {
    Form f = Form::zero(n);
    for (int c = 0; c < ncols; ++c)
      if (!v[static_cast<std::size_t>(c)].is_zero())
        f.add_term(unknowns[static_cast<std::size_t>(c)],
                   v[static_cast<std::size_t>(c)]);
    return f;
  };
  out.particular = vec_to_form(sol.particular);
  for (const auto& k : sol.kernel) out.kernel.push_back(vec_to_form(k));
  out.dimension = static_cast<int>(out.kernel.size());
  return out;
}

std::vector<Form> closed_form_basis(const LieAlgebra& g, int grade) {
  const int n = g.dim();
  const std::vector<Blade> unknowns = blades_of_grade(n, grade);
  const int ncols = static_cast<int>(unknowns.size());
  std::vector<Form> images;
  images.reserve(static_cast<std::size_t>(ncols));
  std::map<Blade, int, BladeCanonicalLess> row_of;
  for (const Blade& u : unknowns) {
    Form img = g.ce_differential(Form::monomial(n, u, Rational(1)));
    for (const auto& [blade, coeff] : img.terms()) {
      (void)coeff;
      row_of.emplace(blade, 0);
    }
    images.push_back(std::move(img));
  }
  int nrows = 0;
  for (auto& [blade, idx] : row_of) idx = nrows++;
  RationalMatrix A(nrows, ncols);
  for (int c = 0; c < ncols; ++c)
    for (const auto& [blade, coeff] : images[static_cast<std::size_t>(c)].terms())
      A.at(row_of.at(blade), c) = coeff;
  std::vector<Form> basis;
  for (const auto& v : kernel_basis(A)) {
    Form f = Form::zero(n);
    for (int c = 0; c < ncols; ++c)
      if (!v[static_cast<std::size_t>(c)].is_zero())
        f.add_term(unknowns[static_cast<std::size_t>(c)],
                   v[static_cast<std::size_t>(c)]);
    basis.push_back(std::move(f));
  }
  return basis;
}

CubicObstructionReport cubic_obstruction(const LieAlgebra& g, int z) {
  if (z < 1 || z > g.dim())
    throw std::invalid_argument("cubic_obstruction: index out of range");
  CubicObstructionReport r;
  r.witness = Form::zero(g.dim());
  r.cube = Form::zero(g.dim());
  r.closed_basis = closed_form_basis(g, 3);
  r.closed_space_dimension = static_cast<int>(r.closed_basis.size());
  const int N = r.closed_space_dimension;
  std::vector<Form> contracted;
  contracted.reserve(static_cast<std::size_t>(N));
  for (const Form& bf : r.closed_basis)
    contracted.push_back(interior_product(z, bf));
  for (int i = 0; i < N; ++i)
    for (int j = i; j < N; ++j) {
      Form ij = wedge(contracted[static_cast<std::size_t>(i)],
                      contracted[static_cast<std::size_t>(j)]);
      if (ij.is_zero()) continue;
      for (int k = j; k < N; ++k) {
        Form t = wedge(ij, contracted[static_cast<std::size_t>(k)]);
        if (t.is_zero()) continue;
        r.vanishes = false;
        r.triple_i = i + 1;
        r.triple_j = j + 1;
        r.triple_k = k + 1;
        // Small-integer witness on the failing triple: the cube of
        // t1*B_i + t2*B_j + t3*B_k is a polynomial in (t1,t2,t3) of degree
        // at most 3 per variable, not identically zero because the triple
        // value is nonzero; a nonzero such polynomial cannot vanish on the
        // whole {0..3}^3 grid.
        for (int t1 = 0; t1 <= 3; ++t1)
          for (int t2 = 0; t2 <= 3; ++t2)
            for (int t3 = 0; t3 <= 3; ++t3) {
              Form sigma =
                  Rational(t1) * r.closed_basis[static_cast<std::size_t>(i)] +
                  Rational(t2) * r.closed_basis[static_cast<std::size_t>(j)] +
                  Rational(t3) * r.closed_basis[static_cast<std::size_t>(k)];
              Form c = interior_product(z, sigma);
              Form cube = wedge(wedge(c, c), c);
              if (!cube.is_zero()) {
                r.witness = sigma;
                r.cube = cube;
                return r;
              }
            }
        throw std::logic_error(
            "cubic_obstruction: witness grid exhausted on a nonzero triple");
      }
    }
  return r;
}

}  // namespace g2t
