#include "g2t/model.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <sstream>

#include "g2t/form.hpp"

namespace g2t {

namespace {

std::string strip(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream is(s);
  std::vector<std::string> out;
  std::string t;
  while (is >> t) out.push_back(t);
  return out;
}

bool parse_int(const std::string& s, int& out) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-') ? 1 : 0;
  if (i == s.size()) return false;
  long v = 0;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    v = v * 10 + (s[i] - '0');
    if (v > 1000000) return false;
  }
  out = static_cast<int>(s[0] == '-' ? -v : v);
  return true;
}

// "e<k>" with a plain integer index (used for covector and span tokens).
bool parse_basis_index(const std::string& s, int& out) {
  if (s.size() < 2 || s[0] != 'e') return false;
  return parse_int(s.substr(1), out) && out >= 1;
}

// A pending algebra block accumulating its defining lines.
struct PendingAlgebra {
  int line = 0;
  std::string name;
  int dim = 0;
  std::optional<ModelFile::AlgebraStyle> style;
  std::map<int, Form> diffs;  // k -> d e^k
  LieAlgebra::BracketMap brackets;
};

void finalize(PendingAlgebra& p, ModelFile& out) {
  ModelFile::AlgebraDecl decl;
  decl.name = p.name;
  decl.style = p.style.value_or(ModelFile::AlgebraStyle::kDifferentials);
  if (decl.style == ModelFile::AlgebraStyle::kDifferentials) {
    std::vector<Form> dcov(static_cast<std::size_t>(p.dim),
                           Form::zero(p.dim));
    for (const auto& [k, f] : p.diffs)
      dcov[static_cast<std::size_t>(k - 1)] = f;
    decl.algebra = LieAlgebra::from_differentials(p.dim, dcov);
  } else {
    decl.algebra = LieAlgebra::from_brackets(p.dim, p.brackets);
  }
  out.algebras.push_back(std::move(decl));
}

}  // namespace

const ModelFile::AlgebraDecl* ModelFile::find_algebra(
    const std::string& n) const {
  for (const auto& a : algebras)
    if (a.name == n) return &a;
  return nullptr;
}

const ModelFile::FormDecl* ModelFile::find_form(const std::string& n) const {
  for (const auto& f : forms)
    if (f.name == n) return &f;
  return nullptr;
}

const ModelFile::FiberDecl* ModelFile::find_fiber(
    const std::string& n) const {
  for (const auto& f : fibers)
    if (f.name == n) return &f;
  return nullptr;
}

ModelFile parse_model(const std::string& text) {
  ModelFile out;
  std::optional<PendingAlgebra> pending;

  auto close_block = [&] {
    if (pending) {
      finalize(*pending, out);
      pending.reset();
    }
  };
  auto known_algebra = [&](const std::string& name) -> const LieAlgebra* {
    const auto* d = out.find_algebra(name);
    return d ? &d->algebra : nullptr;
  };
  auto check_fresh_name = [&](int ln, const std::string& kind,
                              const std::string& name) {
    bool taken = out.find_form(name) || out.find_fiber(name) ||
                 out.find_algebra(name) || (pending && pending->name == name);
    if (taken)
      throw ParseError(ln, "duplicate " + kind + " name '" + name + "'");
  };

  std::istringstream is(text);
  std::string raw;
  int ln = 0;
  while (std::getline(is, raw)) {
    ++ln;
    std::size_t hash = raw.find('#');
    if (hash != std::string::npos) raw = raw.substr(0, hash);
    std::string line = strip(raw);
    if (line.empty()) continue;

    std::istringstream ls(line);
    std::string head;
    ls >> head;

    if (head == "algebra") {
      close_block();
      std::string name, dim_kw;
      int dim = 0;
      std::string dim_tok;
      if (!(ls >> name >> dim_kw >> dim_tok) || dim_kw != "dim" ||
          !parse_int(dim_tok, dim))
        throw ParseError(ln, "expected 'algebra NAME dim N'");
      if (dim < 1 || dim > Blade::kMaxDim)
        throw ParseError(ln, "dimension out of range");
      check_fresh_name(ln, "algebra", name);
      pending.emplace();
      pending->line = ln;
      pending->name = name;
      pending->dim = dim;
      continue;
    }

    if (head == "d") {
      if (!pending)
        throw ParseError(ln, "'d' line outside an algebra block");
      if (pending->style &&
          *pending->style != ModelFile::AlgebraStyle::kDifferentials)
        throw ParseError(
            ln, "cannot mix 'd' and 'bracket' lines in one algebra block");
      pending->style = ModelFile::AlgebraStyle::kDifferentials;
      std::string cov, eq;
      if (!(ls >> cov >> eq) || eq != "=")
        throw ParseError(ln, "expected 'd e<k> = <form>'");
      int k = 0;
      if (!parse_basis_index(cov, k) || k > pending->dim)
        throw ParseError(ln, "bad covector '" + cov + "'");
      if (pending->diffs.count(k))
        throw ParseError(ln, "duplicate differential for e" +
                                 std::to_string(k));
      std::string rest;
      std::getline(ls, rest);
      try {
        pending->diffs.emplace(k, parse_form(strip(rest), pending->dim));
      } catch (const std::invalid_argument& e) {
        throw ParseError(ln, e.what());
      }
      continue;
    }

    if (head == "bracket") {
      if (!pending)
        throw ParseError(ln, "'bracket' line outside an algebra block");
      if (pending->style &&
          *pending->style != ModelFile::AlgebraStyle::kBrackets)
        throw ParseError(
            ln, "cannot mix 'd' and 'bracket' lines in one algebra block");
      pending->style = ModelFile::AlgebraStyle::kBrackets;
      std::string pair_tok, eq;
      if (!(ls >> pair_tok >> eq) || eq != "=")
        throw ParseError(ln, "expected 'bracket [i,j] = <vector>'");
      if (pair_tok.size() < 5 || pair_tok.front() != '[' ||
          pair_tok.back() != ']')
        throw ParseError(ln, "expected '[i,j]' after 'bracket'");
      std::string inner = pair_tok.substr(1, pair_tok.size() - 2);
      std::size_t comma = inner.find(',');
      int i = 0, j = 0;
      if (comma == std::string::npos ||
          !parse_int(inner.substr(0, comma), i) ||
          !parse_int(inner.substr(comma + 1), j))
        throw ParseError(ln, "expected '[i,j]' after 'bracket'");
      if (i < 1 || j < 1 || i > pending->dim || j > pending->dim)
        throw ParseError(ln, "bracket index out of range");
      if (i >= j)
        throw ParseError(ln, "bracket keys must satisfy i < j");
      if (pending->brackets.count({i, j}))
        throw ParseError(ln, "duplicate bracket [" + std::to_string(i) +
                                 "," + std::to_string(j) + "]");
      std::string rest;
      std::getline(ls, rest);
      Form v = Form::zero(pending->dim);
      try {
        v = parse_form(strip(rest), pending->dim);
      } catch (const std::invalid_argument& e) {
        throw ParseError(ln, e.what());
      }
      if (!v.is_homogeneous(1))
        throw ParseError(ln,
                         "bracket value must be a combination of e<k> terms");
      std::vector<Rational> vec(static_cast<std::size_t>(pending->dim));
      for (const auto& [blade, coeff] : v.terms())
        vec[static_cast<std::size_t>(blade.indices()[0] - 1)] = coeff;
      pending->brackets[{i, j}] = std::move(vec);
      continue;
    }

    if (head == "form") {
      close_block();
      std::string name, on_kw, alg, eq;
      if (!(ls >> name >> on_kw >> alg >> eq) || on_kw != "on" || eq != "=")
        throw ParseError(ln, "expected 'form NAME on ALGEBRA = <form>'");
      const LieAlgebra* g = known_algebra(alg);
      if (!g) throw ParseError(ln, "unknown algebra '" + alg + "'");
      check_fresh_name(ln, "form", name);
      std::string rest;
      std::getline(ls, rest);
      ModelFile::FormDecl decl;
      decl.name = name;
      decl.algebra = alg;
      try {
        decl.value = parse_form(strip(rest), g->dim());
      } catch (const std::invalid_argument& e) {
        throw ParseError(ln, e.what());
      }
      out.forms.push_back(std::move(decl));
      continue;
    }

    if (head == "fiber") {
      close_block();
      std::string name, on_kw, alg, eq;
      if (!(ls >> name >> on_kw >> alg >> eq) || on_kw != "on" || eq != "=")
        throw ParseError(ln,
                         "expected 'fiber NAME on ALGEBRA = span(e<i>,...)'");
      const LieAlgebra* g = known_algebra(alg);
      if (!g) throw ParseError(ln, "unknown algebra '" + alg + "'");
      check_fresh_name(ln, "fiber", name);
      std::string rest;
      std::getline(ls, rest);
      rest = strip(rest);
      if (rest.size() < 6 || rest.substr(0, 5) != "span(" ||
          rest.back() != ')')
        throw ParseError(ln, "expected 'span(e<i>,...)'");
      std::string inner = rest.substr(5, rest.size() - 6);
      std::vector<int> idx;
      std::istringstream items(inner);
      std::string item;
      while (std::getline(items, item, ',')) {
        int k = 0;
        if (!parse_basis_index(strip(item), k) || k > g->dim())
          throw ParseError(ln, "bad span entry '" + strip(item) + "'");
        idx.push_back(k);
      }
      if (idx.empty()) throw ParseError(ln, "empty span");
      ModelFile::FiberDecl decl;
      decl.name = name;
      decl.algebra = alg;
      try {
        decl.fiber = SpanIdeal::of(idx);
      } catch (const std::invalid_argument& e) {
        throw ParseError(ln, e.what());
      }
      out.fibers.push_back(std::move(decl));
      continue;
    }

    if (head == "task") {
      close_block();
      ModelFile::Task t;
      t.line = ln;
      if (!(ls >> t.command))
        throw ParseError(ln, "expected 'task COMMAND ...'");
      std::string arg;
      while (ls >> arg) t.args.push_back(arg);
      out.tasks.push_back(std::move(t));
      continue;
    }

    throw ParseError(ln, "unrecognized declaration '" + head + "'");
  }
  close_block();
  return out;
}

std::string print_model(const ModelFile& m) {
  std::ostringstream os;
  bool first = true;
  for (const auto& a : m.algebras) {
    if (!first) os << "\n";
    first = false;
    const int n = a.algebra.dim();
    os << "algebra " << a.name << " dim " << n << "\n";
    if (a.style == ModelFile::AlgebraStyle::kDifferentials) {
      for (int k = 1; k <= n; ++k) {
        const Form& dk = a.algebra.covector_differential(k);
        if (!dk.is_zero())
          os << "  d e" << k << " = " << to_string(dk) << "\n";
      }
    } else {
      for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
          auto v = a.algebra.bracket(i, j);
          Form asform = Form::zero(n);
          for (int k = 1; k <= n; ++k)
            if (!v[static_cast<std::size_t>(k - 1)].is_zero())
              asform.add_term(Blade::from_indices({k}),
                              v[static_cast<std::size_t>(k - 1)]);
          if (!asform.is_zero())
            os << "  bracket [" << i << "," << j
               << "] = " << to_string(asform) << "\n";
        }
    }
  }
  for (const auto& f : m.forms)
    os << "form " << f.name << " on " << f.algebra << " = "
       << to_string(f.value) << "\n";
  for (const auto& f : m.fibers) {
    os << "fiber " << f.name << " on " << f.algebra << " = span(";
    for (std::size_t k = 0; k < f.fiber.indices.size(); ++k) {
      if (k) os << ",";
      os << "e" << f.fiber.indices[k];
    }
    os << ")\n";
  }
  for (const auto& t : m.tasks) {
    os << "task " << t.command;
    for (const auto& a : t.args) os << " " << a;
    os << "\n";
  }
  return os.str();
}

}  // namespace g2t
