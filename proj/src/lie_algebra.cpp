#include "g2t/lie_algebra.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

namespace g2t {

namespace {

std::vector<Rational> zero_vec(int n) {
  return std::vector<Rational>(static_cast<std::size_t>(n));
}

bool is_zero_vec(const std::vector<Rational>& v) {
  return std::all_of(v.begin(), v.end(),
                     [](const Rational& r) { return r.is_zero(); });
}

void add_scaled(std::vector<Rational>& acc, const Rational& c,
                const std::vector<Rational>& v) {
  for (std::size_t i = 0; i < acc.size(); ++i) acc[i] = acc[i] + c * v[i];
}

}  // namespace

LieAlgebra LieAlgebra::abelian(int dim) {
  return from_brackets(dim, {});
}

LieAlgebra LieAlgebra::from_brackets(int dim, const BracketMap& brackets) {
  if (dim < 0 || dim > Blade::kMaxDim)
    throw std::invalid_argument("LieAlgebra: dim out of range");
  LieAlgebra g;
  g.dim_ = dim;
  for (const auto& [key, v] : brackets) {
    auto [i, j] = key;
    if (i < 1 || j < 1 || i > dim || j > dim)
      throw std::invalid_argument("LieAlgebra: bracket index out of range");
    if (i >= j)
      throw std::invalid_argument(
          "LieAlgebra: bracket keys must have i < j (antisymmetry fills the "
          "rest)");
    if (static_cast<int>(v.size()) != dim)
      throw std::invalid_argument(
          "LieAlgebra: bracket value has wrong length");
    if (!is_zero_vec(v)) g.brackets_[key] = v;
  }
  // d e^k = -sum_{i<j} c^k_ij e^i wedge e^j.
  g.dcov_.assign(static_cast<std::size_t>(dim), Form::zero(dim));
  for (const auto& [key, v] : g.brackets_) {
    auto [i, j] = key;
    for (int k = 1; k <= dim; ++k) {
      const Rational& c = v[static_cast<std::size_t>(k - 1)];
      if (!c.is_zero())
        g.dcov_[static_cast<std::size_t>(k - 1)]
            .add_term(Blade::from_indices({i, j}), -c);
    }
  }
  g.rebuild_jacobi_flag();
  return g;
}

LieAlgebra LieAlgebra::from_differentials(
    int dim, const std::vector<Form>& differentials) {
  if (dim < 0 || dim > Blade::kMaxDim)
    throw std::invalid_argument("LieAlgebra: dim out of range");
  if (static_cast<int>(differentials.size()) != dim)
    throw std::invalid_argument(
        "LieAlgebra: need exactly one differential per covector");
  LieAlgebra g;
  g.dim_ = dim;
  g.dcov_ = differentials;
  for (int k = 1; k <= dim; ++k) {
    const Form& dk = g.dcov_[static_cast<std::size_t>(k - 1)];
    if (dk.dim() != dim)
      throw std::invalid_argument("LieAlgebra: differential on wrong space");
    if (!dk.is_homogeneous(2))
      throw std::invalid_argument("LieAlgebra: d e^k must be a 2-form");
  }
  // c^k_ij = -coefficient of e^ij in d e^k.
  for (int i = 1; i <= dim; ++i)
    for (int j = i + 1; j <= dim; ++j) {
      auto v = zero_vec(dim);
      bool any = false;
      for (int k = 1; k <= dim; ++k) {
        Rational c = -g.dcov_[static_cast<std::size_t>(k - 1)].coefficient(
            Blade::from_indices({i, j}));
        if (!c.is_zero()) any = true;
        v[static_cast<std::size_t>(k - 1)] = c;
      }
      if (any) g.brackets_[{i, j}] = std::move(v);
    }
  g.rebuild_jacobi_flag();
  return g;
}

std::vector<Rational> LieAlgebra::bracket(int i, int j) const {
  if (i < 1 || j < 1 || i > dim_ || j > dim_)
    throw std::invalid_argument("bracket: index out of range");
  if (i == j) return zero_vec(dim_);
  const bool flip = i > j;
  auto it = brackets_.find({std::min(i, j), std::max(i, j)});
  if (it == brackets_.end()) return zero_vec(dim_);
  auto v = it->second;
  if (flip)
    for (auto& c : v) c = -c;
  return v;
}

std::vector<Rational> LieAlgebra::bracket(const std::vector<Rational>& v,
                                          int j) const {
  if (static_cast<int>(v.size()) != dim_)
    throw std::invalid_argument("bracket: vector has wrong length");
  auto acc = zero_vec(dim_);
  for (int i = 1; i <= dim_; ++i) {
    const Rational& c = v[static_cast<std::size_t>(i - 1)];
    if (!c.is_zero()) add_scaled(acc, c, bracket(i, j));
  }
  return acc;
}

const Form& LieAlgebra::covector_differential(int k) const {
  if (k < 1 || k > dim_)
    throw std::invalid_argument("covector_differential: index out of range");
  return dcov_[static_cast<std::size_t>(k - 1)];
}

Form LieAlgebra::ce_differential(const Form& a) const {
  if (a.dim() != dim_)
    throw std::invalid_argument("ce_differential: form on wrong space");
  Form out = Form::zero(dim_);
  for (const auto& [blade, coeff] : a.terms()) {
    // d(e^{i_1..i_p}) = sum_p (-1)^(p-1) d e^{i_p} wedge e^{rest}. Each
    // d e^i is even, so it can be pulled to the front at that cost.
    auto idx = blade.indices();
    for (std::size_t p = 0; p < idx.size(); ++p) {
      const Form& di = dcov_[static_cast<std::size_t>(idx[p] - 1)];
      if (di.is_zero()) continue;
      Rational sgn = (p % 2 == 0) ? Rational(1) : Rational(-1);
      Form rest = Form::monomial(dim_, blade.without(idx[p]), coeff * sgn);
      out += wedge(di, rest);
    }
  }
  return out;
}

std::vector<Rational> LieAlgebra::ad_traces() const {
  std::vector<Rational> tr(static_cast<std::size_t>(dim_));
  for (int i = 1; i <= dim_; ++i) {
    Rational t;
    for (int j = 1; j <= dim_; ++j)
      t = t + bracket(i, j)[static_cast<std::size_t>(j - 1)];
    tr[static_cast<std::size_t>(i - 1)] = t;
  }
  return tr;
}

void LieAlgebra::rebuild_jacobi_flag() {
  jacobi_ok_ = jacobi_check(*this).pass;
}

JacobiReport jacobi_check(const LieAlgebra& g) {
  const int n = g.dim();
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k) {
        // [[ei,ej],ek] + [[ej,ek],ei] + [[ek,ei],ej]
        auto r = g.bracket(g.bracket(i, j), k);
        add_scaled(r, Rational(1), g.bracket(g.bracket(j, k), i));
        auto ki = g.bracket(k, i);
        add_scaled(r, Rational(1), g.bracket(ki, j));
        if (!is_zero_vec(r)) return JacobiReport{false, i, j, k, r};
      }
  return JacobiReport{};
}

std::vector<std::vector<Rational>> center(const LieAlgebra& g) {
  const int n = g.dim();
  // Stack the maps x |-> [x, e_j] for all j; the center is the joint kernel.
  RationalMatrix A(n * n, n);
  for (int j = 1; j <= n; ++j)
    for (int i = 1; i <= n; ++i) {
      auto v = g.bracket(i, j);
      for (int k = 1; k <= n; ++k)
        A.at((j - 1) * n + (k - 1), i - 1) = v[static_cast<std::size_t>(k - 1)];
    }
  return kernel_basis(A);
}

SpanIdeal SpanIdeal::of(std::vector<int> idx) {
  std::sort(idx.begin(), idx.end());
  if (std::adjacent_find(idx.begin(), idx.end()) != idx.end())
    throw std::invalid_argument("SpanIdeal: repeated index");
  if (!idx.empty() && idx.front() < 1)
    throw std::invalid_argument("SpanIdeal: indices are 1-based");
  return SpanIdeal{std::move(idx)};
}

bool SpanIdeal::contains(int i) const {
  return std::binary_search(indices.begin(), indices.end(), i);
}

bool is_ideal(const LieAlgebra& g, const SpanIdeal& a) {
  for (int x : a.indices)
    for (int j = 1; j <= g.dim(); ++j) {
      auto v = g.bracket(x, j);
      for (int k = 1; k <= g.dim(); ++k)
        if (!v[static_cast<std::size_t>(k - 1)].is_zero() && !a.contains(k))
          return false;
    }
  return true;
}

bool is_central(const LieAlgebra& g, const SpanIdeal& a) {
  for (int x : a.indices)
    for (int j = 1; j <= g.dim(); ++j)
      if (!is_zero_vec(g.bracket(x, j))) return false;
  return true;
}

QuotientResult quotient(const LieAlgebra& g, const SpanIdeal& a) {
  if (!is_ideal(g, a))
    throw std::invalid_argument("quotient: span is not an ideal");
  for (int x : a.indices)
    if (x > g.dim())
      throw std::invalid_argument("quotient: index out of range");
  QuotientResult q;
  q.from_old.assign(static_cast<std::size_t>(g.dim()), 0);
  for (int i = 1; i <= g.dim(); ++i)
    if (!a.contains(i)) {
      q.to_old.push_back(i);
      q.from_old[static_cast<std::size_t>(i - 1)] =
          static_cast<int>(q.to_old.size());
    }
  const int m = static_cast<int>(q.to_old.size());
  LieAlgebra::BracketMap bm;
  for (int i = 1; i <= m; ++i)
    for (int j = i + 1; j <= m; ++j) {
      auto v = g.bracket(q.to_old[static_cast<std::size_t>(i - 1)],
                         q.to_old[static_cast<std::size_t>(j - 1)]);
      std::vector<Rational> w(static_cast<std::size_t>(m));
      for (int k = 1; k <= m; ++k)
        w[static_cast<std::size_t>(k - 1)] =
            v[static_cast<std::size_t>(q.to_old[static_cast<std::size_t>(k - 1)] - 1)];
      bm[{i, j}] = std::move(w);
    }
  q.algebra = LieAlgebra::from_brackets(m, bm);
  return q;
}

Form restrict_to_quotient(const QuotientResult& q, const Form& on_g) {
  std::vector<int> map(q.from_old);
  return relabel(on_g, map, q.algebra.dim());
}

Form lift_from_quotient(const QuotientResult& q, const Form& on_n,
                        int g_dim) {
  std::vector<int> map(q.to_old);
  return relabel(on_n, map, g_dim);
}

LieAlgebra central_extension(const LieAlgebra& n,
                             const std::vector<Form>& psis) {
  const int base = n.dim();
  const int m = static_cast<int>(psis.size());
  const int total = base + m;
  if (total > Blade::kMaxDim)
    throw std::invalid_argument("central_extension: dimension cap exceeded");
  std::vector<Form> dcov;
  dcov.reserve(static_cast<std::size_t>(total));
  std::vector<int> embed(static_cast<std::size_t>(base));
  for (int i = 1; i <= base; ++i) embed[static_cast<std::size_t>(i - 1)] = i;
  for (int k = 1; k <= base; ++k)
    dcov.push_back(relabel(n.covector_differential(k), embed, total));
  for (const Form& psi : psis) {
    if (psi.dim() != base)
      throw std::invalid_argument("central_extension: psi on wrong space");
    if (!psi.is_homogeneous(2))
      throw std::invalid_argument("central_extension: psi must be a 2-form");
    if (!n.ce_differential(psi).is_zero())
      throw std::invalid_argument("central_extension: psi must be closed");
    dcov.push_back(relabel(psi, embed, total));
  }
  return LieAlgebra::from_differentials(total, dcov);
}

LieAlgebra reindex(const LieAlgebra& g, const std::vector<int>& perm) {
  const int n = g.dim();
  if (static_cast<int>(perm.size()) != n)
    throw std::invalid_argument("reindex: permutation has wrong length");
  std::set<int> image(perm.begin(), perm.end());
  if (static_cast<int>(image.size()) != n || *image.begin() != 1 ||
      *image.rbegin() != n)
    throw std::invalid_argument("reindex: not a permutation of 1..n");
  // New covector at slot perm[k-1] is old e^k with indices relabeled.
  std::vector<Form> dcov(static_cast<std::size_t>(n), Form::zero(n));
  std::vector<int> map(perm);
  for (int k = 1; k <= n; ++k)
    dcov[static_cast<std::size_t>(perm[static_cast<std::size_t>(k - 1)] - 1)] =
        relabel(g.covector_differential(k), map, n);
  return LieAlgebra::from_differentials(n, dcov);
}

LieAlgebra change_basis(const LieAlgebra& g, const RationalMatrix& M) {
  const int n = g.dim();
  if (M.rows != n || M.cols != n)
    throw std::invalid_argument("change_basis: matrix has wrong shape");
  RationalMatrix Minv = inverse(M);  // throws if singular
  // ehat_j = sum_i M(i,j) e_i, so [ehat_a, ehat_b] expressed back in ehat
  // coordinates is Minv * [M e_a, M e_b].
  LieAlgebra::BracketMap bm;
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b) {
      auto acc = zero_vec(n);
      for (int i = 1; i <= n; ++i) {
        const Rational& ci = M.at(i - 1, a - 1);
        if (ci.is_zero()) continue;
        for (int j = 1; j <= n; ++j) {
          const Rational& cj = M.at(j - 1, b - 1);
          if (cj.is_zero()) continue;
          add_scaled(acc, ci * cj, g.bracket(i, j));
        }
      }
      bm[{a, b}] = multiply(Minv, acc);
    }
  return LieAlgebra::from_brackets(n, bm);
}

bool is_derivation(const LieAlgebra& h, const RationalMatrix& D) {
  const int n = h.dim();
  if (D.rows != n || D.cols != n)
    throw std::invalid_argument("is_derivation: matrix has wrong shape");
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      auto lhs = multiply(D, h.bracket(i, j));
      auto rhs = zero_vec(n);
      for (int k = 1; k <= n; ++k) {
        // [De_i, e_j] + [e_i, De_j]
        const Rational& dik = D.at(k - 1, i - 1);
        if (!dik.is_zero()) add_scaled(rhs, dik, h.bracket(k, j));
        const Rational& djk = D.at(k - 1, j - 1);
        if (!djk.is_zero()) add_scaled(rhs, djk, h.bracket(i, k));
      }
      for (int k = 0; k < n; ++k)
        if (lhs[static_cast<std::size_t>(k)] !=
            rhs[static_cast<std::size_t>(k)])
          return false;
    }
  return true;
}

LieAlgebra extension_by_derivation(const LieAlgebra& h,
                                   const RationalMatrix& D) {
  if (!is_derivation(h, D))
    throw std::invalid_argument(
        "extension_by_derivation: map is not a derivation");
  const int n = h.dim();
  LieAlgebra::BracketMap bm;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      auto v = h.bracket(i, j);
      v.emplace_back();
      if (!is_zero_vec(v)) bm[{i, j}] = std::move(v);
    }
  // [e_{n+1}, e_i] = D e_i, stored as [e_i, e_{n+1}] = -D e_i.
  for (int i = 1; i <= n; ++i) {
    std::vector<Rational> v(static_cast<std::size_t>(n + 1));
    for (int k = 1; k <= n; ++k)
      v[static_cast<std::size_t>(k - 1)] = -D.at(k - 1, i - 1);
    if (!is_zero_vec(v)) bm[{i, n + 1}] = std::move(v);
  }
  return LieAlgebra::from_brackets(n + 1, bm);
}

bool is_basic(const LieAlgebra& g, const SpanIdeal& a, const Form& beta) {
  Form db = g.ce_differential(beta);
  for (int x : a.indices)
    if (!interior_product(x, beta).is_zero() ||
        !interior_product(x, db).is_zero())
      return false;
  return true;
}

BasicDecomposition basic_decomposition(const LieAlgebra& g,
                                       const SpanIdeal& a, const Form& H) {
  if (H.dim() != g.dim())
    throw std::invalid_argument("basic_decomposition: form on wrong space");
  if (!is_central(g, a))
    throw std::invalid_argument("basic_decomposition: span is not central");
  for (const auto& [blade, coeff] : H.terms()) {
    int hits = 0;
    for (int x : a.indices)
      if (blade.contains(x)) ++hits;
    if (hits >= 2)
      throw std::invalid_argument(
          "basic_decomposition: form has a component with two fiber legs");
  }
  BasicDecomposition out;
  out.fiber_part = Form::zero(g.dim());
  for (int x : a.indices) {
    Form psi = interior_product(x, H);
    out.psis.push_back(psi);
    out.fiber_part += wedge(Form::basis(g.dim(), {x}), psi);
  }
  out.delta = H - out.fiber_part;
  if (!is_basic(g, a, out.delta))
    throw std::invalid_argument(
        "basic_decomposition: residual part is not basic");
  return out;
}

}  // namespace g2t
