#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace coamoeba {

using Complex = std::complex<double>;

// An exponent vector m in M = Z^n.
using ExponentVector = std::vector<std::int64_t>;

// A weight vector w in the dual lattice N = Z^n.
using WeightVector = std::vector<std::int64_t>;

// A point of the torus (C*)^n; every coordinate must be nonzero.
using TorusElement = std::vector<Complex>;

struct ParseError : std::runtime_error {
  ParseError(std::size_t offset, const std::string& what)
      : std::runtime_error(what + " (at byte " + std::to_string(offset) + ")"),
        offset(offset) {}
  std::size_t offset;
};

struct LaurentTerm {
  Complex coefficient;  // nonzero
  ExponentVector exponent;
};

// A Laurent polynomial in canonical form: distinct exponent vectors of
// length rank(), sorted in descending lexicographic order.  The zero
// polynomial is the empty term list.
class LaurentPolynomial {
 public:
  // Combines like terms, drops zero coefficients, sorts.
  LaurentPolynomial(int rank, std::vector<LaurentTerm> terms);

  static LaurentPolynomial zero(int rank) { return LaurentPolynomial(rank, {}); }

  int rank() const { return rank_; }
  const std::vector<LaurentTerm>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }

  // Exact structural equality of canonical forms.
  bool operator==(const LaurentPolynomial& other) const;
  bool operator!=(const LaurentPolynomial& other) const { return !(*this == other); }

 private:
  int rank_;
  std::vector<LaurentTerm> terms_;
};

// Parses the expression grammar
//   expr   := term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := coeff | var ('^' int)?
//   coeff  := decimal | 'i' | '(' decimal (('+'|'-') decimal)? 'i'? ')'
// against the given ordered variable list.  Whitespace is insignificant.
LaurentPolynomial parse(const std::string& text, const std::vector<std::string>& variables);

// Inverse of parse on canonical forms: parse(print(f), vars) == f.
std::string print(const LaurentPolynomial& f, const std::vector<std::string>& variables);

// Default variable names x, y, z, x4, x5, ...
std::vector<std::string> default_variables(int rank);

// Sum of c_m * prod_i x_i^{m_i}.
Complex evaluate(const LaurentPolynomial& f, const TorusElement& x);

// w(f) = min over the support of <m, w>.  Requires f nonempty.
std::int64_t weight_value(const LaurentPolynomial& f, const WeightVector& w);

// in_w f: the sub-sum of terms attaining w(f).  Requires f nonempty.
LaurentPolynomial initial_form(const LaurentPolynomial& f, const WeightVector& w);

// f(t) = sum c_m t^{<m,w>} xi^m for t > 0.
LaurentPolynomial deform(const LaurentPolynomial& f, const WeightVector& w, double t);

// Multiplies every coefficient by s.
LaurentPolynomial scale(const LaurentPolynomial& f, Complex s);

std::int64_t dot(const ExponentVector& m, const WeightVector& w);

}  // namespace coamoeba
