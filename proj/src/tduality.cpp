#include "g2t/tduality.hpp"

#include <stdexcept>

namespace g2t {

AdmissibleTriple validate_admissible(const LieAlgebra& g,
                                     const SpanIdeal& fiber, const Form& H) {
  if (H.dim() != g.dim())
    throw std::invalid_argument("validate_admissible: dimension mismatch");
  if (!H.is_homogeneous(3))
    throw std::invalid_argument("validate_admissible: H must be a 3-form");
  for (int x : fiber.indices)
    if (x > g.dim())
      throw std::invalid_argument("validate_admissible: fiber index out of "
                                  "range");
  AdmissibleTriple t;
  t.algebra = g;
  t.fiber = fiber;
  t.H = H;
  t.checks.h_closed = g.ce_differential(H).is_zero();
  t.checks.fiber_central = is_central(g, fiber);
  // Central spans are automatically abelian ideals, but the flag is
  // evidence in its own right for non-central inputs.
  bool abelian = true;
  for (int x : fiber.indices)
    for (int y : fiber.indices) {
      auto v = g.bracket(x, y);
      for (const Rational& c : v) abelian = abelian && c.is_zero();
    }
  t.checks.fiber_abelian_ideal = abelian && is_ideal(g, fiber);
  if (fiber.dim() <= 1) {
    t.checks.h_fiber_degenerate = true;  // vacuous for a line
  } else {
    bool degenerate = true;
    for (const auto& [blade, coeff] : H.terms()) {
      (void)coeff;
      int legs = 0;
      for (int x : fiber.indices)
        if (blade.contains(x)) ++legs;
      if (legs >= 2) degenerate = false;
    }
    t.checks.h_fiber_degenerate = degenerate;
  }
  return t;
}

DualResult dualize(const AdmissibleTriple& t) {
  if (!t.checks.all())
    throw std::invalid_argument(
        "dualize: triple is not admissible with a central fiber");
  const LieAlgebra& g = t.algebra;
  const int n = g.dim();
  const int m = t.fiber.dim();

  BasicDecomposition dec = basic_decomposition(g, t.fiber, t.H);
  QuotientResult q = quotient(g, t.fiber);

  std::vector<Form> psis_n;
  psis_n.reserve(static_cast<std::size_t>(m));
  for (const Form& psi : dec.psis)
    psis_n.push_back(restrict_to_quotient(q, psi));
  LieAlgebra ext = central_extension(q.algebra, psis_n);

  // Put the k-th new generator back at the ambient slot x_k; retained base
  // vectors return to their original labels.
  std::vector<int> perm(static_cast<std::size_t>(n));
  for (int c = 1; c <= q.algebra.dim(); ++c)
    perm[static_cast<std::size_t>(c - 1)] =
        q.to_old[static_cast<std::size_t>(c - 1)];
  for (int k = 1; k <= m; ++k)
    perm[static_cast<std::size_t>(q.algebra.dim() + k - 1)] =
        t.fiber.indices[static_cast<std::size_t>(k - 1)];
  LieAlgebra dual_algebra = reindex(ext, perm);

  Form h_dual = dec.delta;
  for (int x : t.fiber.indices) {
    const Form& dx = g.covector_differential(x);
    if (!is_basic(g, t.fiber, dx))
      throw std::invalid_argument(
          "dualize: fiber covector differential is not basic");
    // Basic forms carry only base labels, which dualize verbatim.
    h_dual += wedge(Form::basis(n, {x}), dx);
  }

  DualResult out;
  out.psis = dec.psis;
  out.delta = dec.delta;
  out.fiber_map = t.fiber.indices;
  out.dual = validate_admissible(dual_algebra, t.fiber, h_dual);
  if (!out.dual.checks.all())
    throw std::logic_error("dualize: dual triple failed revalidation");
  return out;
}

Form CorrespondenceSpace::lift_from_base(const Form& on_g) const {
  std::vector<int> map(static_cast<std::size_t>(base_dim));
  for (int i = 1; i <= base_dim; ++i)
    map[static_cast<std::size_t>(i - 1)] = i;
  return relabel(on_g, map, c.dim());
}

Form CorrespondenceSpace::lift_from_dual(const Form& on_dual) const {
  std::vector<int> map(static_cast<std::size_t>(base_dim));
  for (int i = 1; i <= base_dim; ++i)
    map[static_cast<std::size_t>(i - 1)] = i;
  for (std::size_t k = 0; k < fiber.indices.size(); ++k)
    map[static_cast<std::size_t>(fiber.indices[k] - 1)] =
        dual_fiber[k];
  return relabel(on_dual, map, c.dim());
}

CorrespondenceSpace correspondence(const AdmissibleTriple& t,
                                   const DualResult& d) {
  if (!t.checks.all())
    throw std::invalid_argument("correspondence: invalid triple");
  if (d.fiber_map != t.fiber.indices)
    throw std::invalid_argument(
        "correspondence: dual result does not belong to this triple");
  const LieAlgebra& g = t.algebra;
  const int n = g.dim();
  const int m = t.fiber.dim();

  CorrespondenceSpace cs;
  cs.base_dim = n;
  cs.fiber = t.fiber;
  // c = central extension of g by the Psi_k; the new generators model the
  // dual fiber, so both projections are label maps.
  cs.c = central_extension(g, d.psis);
  for (int k = 1; k <= m; ++k) cs.dual_fiber.push_back(n + k);

  cs.F = Form::zero(cs.c.dim());
  for (int k = 1; k <= m; ++k)
    cs.F += wedge(
        Form::basis(cs.c.dim(), {cs.dual_fiber[static_cast<std::size_t>(k - 1)]}),
        Form::basis(cs.c.dim(),
                    {t.fiber.indices[static_cast<std::size_t>(k - 1)]}));

  // Internal consistency: the two projections agree with g and g-dual.
  for (int i = 1; i <= n; ++i)
    if (cs.lift_from_base(g.covector_differential(i)) !=
        cs.c.covector_differential(i))
      throw std::logic_error("correspondence: base projection mismatch");
  const LieAlgebra& gd = d.dual.algebra;
  for (int i = 1; i <= n; ++i) {
    bool is_fiber_slot = t.fiber.contains(i);
    int c_label = i;
    if (is_fiber_slot) {
      for (std::size_t k = 0; k < cs.fiber.indices.size(); ++k)
        if (cs.fiber.indices[k] == i)
          c_label = cs.dual_fiber[k];
    }
    if (cs.lift_from_dual(gd.covector_differential(i)) !=
        cs.c.covector_differential(c_label))
      throw std::logic_error("correspondence: dual projection mismatch");
  }
  return cs;
}

DualityCertificate verify_duality_certificate(const CorrespondenceSpace& cs,
                                              const Form& H,
                                              const Form& H_dual) {
  DualityCertificate cert;
  cert.lhs = cs.lift_from_base(H) - cs.lift_from_dual(H_dual);
  cert.rhs = cs.c.ce_differential(cs.F);
  cert.residual = cert.lhs - cert.rhs;
  cert.pass = cert.residual.is_zero();
  return cert;
}

Form transport_spinor(const CorrespondenceSpace& cs, const Form& sigma) {
  if (sigma.dim() != cs.base_dim)
    throw std::invalid_argument("transport: form does not live on the base");
  Form total = wedge(exp_two_form(cs.F), cs.lift_from_base(sigma));

  // Fiber volume as a trailing factor: for each blade containing every
  // x_k, split off gamma^{x_1} ^ ... ^ gamma^{x_m} on the right and keep
  // the cofactor.
  Blade fiber_blade = Blade::from_indices(cs.fiber.indices);
  Form cofactor = Form::zero(cs.c.dim());
  for (const auto& [blade, coeff] : total.terms()) {
    if ((blade.mask & fiber_blade.mask) != fiber_blade.mask) continue;
    Blade rest{blade.mask & ~fiber_blade.mask};
    int s = wedge_sign(rest, fiber_blade);
    cofactor.add_term(rest, coeff * Rational(s));
  }

  // Push to the dual labels: base stays, dual-fiber label base_dim+k
  // becomes slot x_k; a leftover first-factor fiber leg maps to 0, which
  // relabel rejects -- that is the fiber-freeness guard.
  std::vector<int> map(static_cast<std::size_t>(cs.c.dim()), 0);
  for (int i = 1; i <= cs.base_dim; ++i)
    if (!cs.fiber.contains(i)) map[static_cast<std::size_t>(i - 1)] = i;
  for (std::size_t k = 0; k < cs.dual_fiber.size(); ++k)
    map[static_cast<std::size_t>(cs.dual_fiber[k] - 1)] =
        cs.fiber.indices[k];
  try {
    return relabel(cofactor, map, cs.base_dim);
  } catch (const std::invalid_argument&) {
    throw std::logic_error(
        "transport: extracted cofactor still carries first-factor fiber "
        "legs");
  }
}

DoubleDualReport double_dual_check(const AdmissibleTriple& t) {
  DualResult first = dualize(t);
  DualResult second = dualize(first.dual);
  DoubleDualReport r;
  r.algebra_match = (second.dual.algebra == t.algebra);
  r.h_difference = second.dual.H - t.H;
  r.h_match = r.h_difference.is_zero();
  r.fiber_match = (second.dual.fiber.indices == t.fiber.indices);
  r.pass = r.algebra_match && r.h_match && r.fiber_match;
  return r;
}

}  // namespace g2t
