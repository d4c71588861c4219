#pragma once

#include <initializer_list>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "g2t/blade.hpp"
#include "g2t/rational.hpp"

namespace g2t {

/// Differential form with exact rational coefficients on R^dim with the
/// declared orthonormal oriented basis e^1..e^dim. Mixed grade is allowed.
/// Terms are stored sparsely in canonical blade order (grade ascending, then
/// lexicographic); zero coefficients are never stored.
class Form {
 public:
  using TermMap = std::map<Blade, Rational, BladeCanonicalLess>;

  explicit Form(int dim);

  static Form zero(int dim) { return Form(dim); }
  /// The scalar constant c (grade-0 term).
  static Form constant(int dim, const Rational& c);
  /// Basis monomial e^{idx...} with coefficient 1.
  static Form basis(int dim, std::initializer_list<int> idx);
  static Form basis(int dim, const std::vector<int>& idx);
  static Form monomial(int dim, Blade b, const Rational& c);

  [[nodiscard]] int dim() const { return dim_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] std::size_t term_count() const { return terms_.size(); }
  [[nodiscard]] const TermMap& terms() const { return terms_; }
  [[nodiscard]] Rational coefficient(Blade b) const;

  /// Grades present, ascending.
  [[nodiscard]] std::vector<int> grades() const;
  [[nodiscard]] bool is_homogeneous(int grade) const;
  [[nodiscard]] bool is_even() const;
  [[nodiscard]] bool is_odd() const;
  [[nodiscard]] Form graded_part(int grade) const;

  void add_term(Blade b, const Rational& c);

  Form operator-() const;
  Form& operator+=(const Form& o);
  Form& operator-=(const Form& o);
  friend Form operator+(Form a, const Form& b) { return a += b; }
  friend Form operator-(Form a, const Form& b) { return a -= b; }
  friend Form operator*(const Rational& c, const Form& f);

  friend bool operator==(const Form& a, const Form& b) {
    return a.dim_ == b.dim_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const Form& a, const Form& b) { return !(a == b); }

 private:
  int dim_;
  TermMap terms_;
};

Form wedge(const Form& a, const Form& b);

/// Contraction with the basis vector e_i: iota_{e_i} e^I = (-1)^{p-1}
/// e^{I minus i} when i sits at position p of I, zero otherwise.
Form interior_product(int i, const Form& a);
/// Contraction with a general vector given by rational coordinates.
Form interior_product(const std::vector<Rational>& v, const Form& a);

/// Hodge star for the orthonormal basis with orientation e^{1..dim}:
/// star e^I = sgn(I, I^c) e^{I^c}.
Form hodge_star(const Form& a);

/// exp(F) = sum F^k / k! for a (necessarily nilpotent) 2-form F.
Form exp_two_form(const Form& f);

/// Re-expresses a form under the index substitution i -> index_map[i-1]
/// (1-based, injective on the indices actually used), resorting each image
/// blade with the permutation sign. Entries of 0 mean "index must not occur".
Form relabel(const Form& a, const std::vector<int>& index_map, int new_dim);

/// Canonical printer: grades ascending, blades lexicographic, coefficients in
/// lowest terms with explicit sign, compact blades (e127) for dim <= 9 and
/// braced blades (e{1,10,12}) otherwise. The zero form prints as "0".
std::string to_string(const Form& f);

/// Parses the literal syntax emitted by to_string. Compact digit blades are
/// rejected when dim >= 10 (ambiguous there); braced blades always work.
Form parse_form(const std::string& text, int dim);

}  // namespace g2t
