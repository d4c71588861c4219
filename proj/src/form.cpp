#include "g2t/form.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace g2t {

std::vector<Blade> blades_of_grade(int dim, int grade) {
  std::vector<Blade> out;
  if (grade < 0 || grade > dim) return out;
  std::vector<int> idx(grade);
  for (int i = 0; i < grade; ++i) idx[i] = i + 1;
  while (true) {
    out.push_back(Blade::from_indices(idx));
    int p = grade - 1;
    while (p >= 0 && idx[p] == dim - (grade - 1 - p)) --p;
    if (p < 0) break;
    ++idx[p];
    for (int q = p + 1; q < grade; ++q) idx[q] = idx[q - 1] + 1;
  }
  return out;
}

Form::Form(int dim) : dim_(dim) {
  if (dim < 0 || dim > Blade::kMaxDim)
    throw std::invalid_argument("Form: dimension out of range");
}

Form Form::constant(int dim, const Rational& c) {
  Form f(dim);
  f.add_term(Blade(), c);
  return f;
}

Form Form::basis(int dim, std::initializer_list<int> idx) {
  return basis(dim, std::vector<int>(idx));
}

Form Form::basis(int dim, const std::vector<int>& idx) {
  return monomial(dim, Blade::from_indices(idx), Rational(1));
}

Form Form::monomial(int dim, Blade b, const Rational& c) {
  Form f(dim);
  f.add_term(b, c);
  return f;
}

Rational Form::coefficient(Blade b) const {
  auto it = terms_.find(b);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::vector<int> Form::grades() const {
  std::set<int> g;
  for (const auto& [b, c] : terms_) g.insert(b.grade());
  return {g.begin(), g.end()};
}

bool Form::is_homogeneous(int grade) const {
  for (const auto& [b, c] : terms_)
    if (b.grade() != grade) return false;
  return true;
}

bool Form::is_even() const {
  for (const auto& [b, c] : terms_)
    if (b.grade() % 2 != 0) return false;
  return true;
}

bool Form::is_odd() const {
  for (const auto& [b, c] : terms_)
    if (b.grade() % 2 != 1) return false;
  return true;
}

Form Form::graded_part(int grade) const {
  Form out(dim_);
  for (const auto& [b, c] : terms_)
    if (b.grade() == grade) out.add_term(b, c);
  return out;
}

void Form::add_term(Blade b, const Rational& c) {
  if (c.is_zero()) return;
  if (b.mask >> dim_)
    throw std::invalid_argument("Form: blade index exceeds dimension");
  auto [it, inserted] = terms_.emplace(b, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Form Form::operator-() const {
  Form out(dim_);
  for (const auto& [b, c] : terms_) out.terms_.emplace(b, -c);
  return out;
}

Form& Form::operator+=(const Form& o) {
  if (o.dim_ != dim_)
    throw std::invalid_argument("Form: dimension mismatch in +");
  for (const auto& [b, c] : o.terms_) add_term(b, c);
  return *this;
}

Form& Form::operator-=(const Form& o) {
  if (o.dim_ != dim_)
    throw std::invalid_argument("Form: dimension mismatch in -");
  for (const auto& [b, c] : o.terms_) add_term(b, -c);
  return *this;
}

Form operator*(const Rational& c, const Form& f) {
  Form out(f.dim_);
  if (c.is_zero()) return out;
  for (const auto& [b, k] : f.terms_) out.terms_.emplace(b, c * k);
  return out;
}

Form wedge(const Form& a, const Form& b) {
  if (a.dim() != b.dim())
    throw std::invalid_argument("wedge: dimension mismatch");
  Form out(a.dim());
  for (const auto& [ba, ca] : a.terms())
    for (const auto& [bb, cb] : b.terms()) {
      int s = wedge_sign(ba, bb);
      if (s == 0) continue;
      out.add_term(Blade(ba.mask | bb.mask), Rational(s) * ca * cb);
    }
  return out;
}

Form interior_product(int i, const Form& a) {
  if (i < 1 || i > a.dim())
    throw std::invalid_argument("interior_product: index out of range");
  Form out(a.dim());
  for (const auto& [b, c] : a.terms()) {
    if (!b.contains(i)) continue;
    out.add_term(b.without(i), Rational(interior_sign(i, b)) * c);
  }
  return out;
}

Form interior_product(const std::vector<Rational>& v, const Form& a) {
  if (static_cast<int>(v.size()) != a.dim())
    throw std::invalid_argument("interior_product: vector length mismatch");
  Form out(a.dim());
  for (int i = 1; i <= a.dim(); ++i) {
    if (v[i - 1].is_zero()) continue;
    out += v[i - 1] * interior_product(i, a);
  }
  return out;
}

Form hodge_star(const Form& a) {
  Form out(a.dim());
  for (const auto& [b, c] : a.terms()) {
    Blade comp = complement(b, a.dim());
    out.add_term(comp, Rational(wedge_sign(b, comp)) * c);
  }
  return out;
}

Form exp_two_form(const Form& f) {
  if (!f.is_homogeneous(2))
    throw std::invalid_argument("exp_two_form: not a 2-form");
  Form out = Form::constant(f.dim(), Rational(1));
  Form power = Form::constant(f.dim(), Rational(1));
  Rational factorial(1);
  for (long k = 1; !power.is_zero(); ++k) {
    power = wedge(power, f);
    factorial *= Rational(k);
    Rational inv = Rational(1) / factorial;
    out += inv * power;
  }
  return out;
}

Form relabel(const Form& a, const std::vector<int>& index_map, int new_dim) {
  if (static_cast<int>(index_map.size()) < a.dim())
    throw std::invalid_argument("relabel: map too short");
  Form out(new_dim);
  for (const auto& [b, c] : a.terms()) {
    std::vector<int> image;
    for (int i : b.indices()) {
      int t = index_map[i - 1];
      if (t == 0)
        throw std::invalid_argument("relabel: index has no image");
      image.push_back(t);
    }
    // The image sequence need not be ascending; sorting it back costs the
    // permutation sign.
    int inversions = 0;
    for (std::size_t p = 0; p < image.size(); ++p)
      for (std::size_t q = p + 1; q < image.size(); ++q)
        if (image[p] > image[q]) ++inversions;
    Rational sign((inversions & 1) ? -1 : 1);
    out.add_term(Blade::from_indices(image), sign * c);
  }
  return out;
}

namespace {

std::string blade_to_string(Blade b, int dim) {
  std::ostringstream os;
  os << 'e';
  auto idx = b.indices();
  if (dim <= 9) {
    for (int i : idx) os << i;
  } else {
    os << '{';
    for (std::size_t k = 0; k < idx.size(); ++k) {
      if (k) os << ',';
      os << idx[k];
    }
    os << '}';
  }
  return os.str();
}

}  // namespace

std::string to_string(const Form& f) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [b, c] : f.terms()) {
    Rational mag = c.sign() < 0 ? -c : c;
    if (first) {
      if (c.sign() < 0) os << '-';
      first = false;
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    bool unit = (mag == Rational(1));
    if (b.grade() == 0) {
      os << mag.str();
    } else if (unit) {
      os << blade_to_string(b, f.dim());
    } else {
      os << mag.str() << ' ' << blade_to_string(b, f.dim());
    }
  }
  return os.str();
}

namespace {

struct Scanner {
  const std::string& s;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
  }
  bool done() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() { return pos < s.size() ? s[pos] : '\0'; }

  [[noreturn]] void fail(const std::string& msg) {
    throw std::invalid_argument("form literal: " + msg);
  }

  std::string take_digits() {
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
      ++pos;
    if (pos == start) fail("expected digits");
    return s.substr(start, pos - start);
  }

  // "p" or "p/q", unsigned.
  Rational take_rational() {
    std::string num = take_digits();
    if (peek() == '/') {
      ++pos;
      num += "/" + take_digits();
    }
    return Rational::parse(num);
  }

  Blade take_blade(int dim) {
    ++pos;  // consume 'e'
    std::vector<int> idx;
    if (peek() == '{') {
      ++pos;
      while (true) {
        skip_ws();
        idx.push_back(static_cast<int>(std::stol(take_digits())));
        skip_ws();
        if (peek() == ',') {
          ++pos;
          continue;
        }
        if (peek() == '}') {
          ++pos;
          break;
        }
        fail("expected ',' or '}' in blade");
      }
    } else {
      if (dim >= 10)
        fail("compact blade digits are ambiguous for dim >= 10; use e{..}");
      if (!std::isdigit(static_cast<unsigned char>(peek())))
        fail("expected blade indices after 'e'");
      while (std::isdigit(static_cast<unsigned char>(peek()))) {
        idx.push_back(s[pos] - '0');
        ++pos;
      }
    }
    for (int i : idx)
      if (i < 1 || i > dim) fail("basis index out of range");
    for (std::size_t a = 0; a + 1 < idx.size(); ++a)
      if (idx[a] >= idx[a + 1]) fail("blade indices must be strictly increasing");
    return Blade::from_indices(idx);
  }
};

}  // namespace

Form parse_form(const std::string& text, int dim) {
  Scanner sc{text};
  Form out(dim);
  if (sc.done()) sc.fail("empty literal");
  // Special case: a lone "0" (optionally signed) is the zero form.
  bool first = true;
  while (!sc.done()) {
    int sign = 1;
    sc.skip_ws();
    if (sc.peek() == '+' || sc.peek() == '-') {
      if (sc.peek() == '-') sign = -1;
      ++sc.pos;
    } else if (!first) {
      sc.fail("expected '+' or '-' between terms");
    }
    sc.skip_ws();
    Rational coeff(sign);
    bool have_number = false;
    if (std::isdigit(static_cast<unsigned char>(sc.peek()))) {
      coeff *= sc.take_rational();
      have_number = true;
    }
    sc.skip_ws();
    if (sc.peek() == 'e') {
      Blade b = sc.take_blade(dim);
      out.add_term(b, coeff);
    } else if (have_number) {
      out.add_term(Blade(), coeff);  // scalar term; "0" contributes nothing
    } else {
      sc.fail("expected coefficient or blade");
    }
    first = false;
  }
  return out;
}

}  // namespace g2t
