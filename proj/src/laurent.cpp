#include "coamoeba/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <map>

namespace coamoeba {

namespace {

// Descending lexicographic order on exponent vectors.
bool exponent_greater(const ExponentVector& a, const ExponentVector& b) {
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace

LaurentPolynomial::LaurentPolynomial(int rank, std::vector<LaurentTerm> terms)
    : rank_(rank) {
  if (rank <= 0) throw std::invalid_argument("rank must be positive");
  std::map<ExponentVector, Complex> combined;
  for (auto& t : terms) {
    if (static_cast<int>(t.exponent.size()) != rank)
      throw std::invalid_argument("exponent length does not match rank");
    combined[t.exponent] += t.coefficient;
  }
  for (auto& [m, c] : combined)
    if (c != Complex(0.0, 0.0)) terms_.push_back({c, m});
  std::sort(terms_.begin(), terms_.end(),
            [](const LaurentTerm& a, const LaurentTerm& b) {
              return exponent_greater(a.exponent, b.exponent);
            });
}

bool LaurentPolynomial::operator==(const LaurentPolynomial& other) const {
  if (rank_ != other.rank_ || terms_.size() != other.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (terms_[i].exponent != other.terms_[i].exponent) return false;
    if (terms_[i].coefficient != other.terms_[i].coefficient) return false;
  }
  return true;
}

std::int64_t dot(const ExponentVector& m, const WeightVector& w) {
  if (m.size() != w.size()) throw std::invalid_argument("rank mismatch in pairing");
  std::int64_t s = 0;
  for (std::size_t i = 0; i < m.size(); ++i) s += m[i] * w[i];
  return s;
}

namespace {

class Parser {
 public:
  Parser(const std::string& text, const std::vector<std::string>& vars)
      : text_(text), vars_(vars) {}

  LaurentPolynomial run() {
    auto terms = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("trailing input");
    return LaurentPolynomial(static_cast<int>(vars_.size()), std::move(terms));
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(pos_, what); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  std::vector<LaurentTerm> expr() {
    std::vector<LaurentTerm> out;
    double sign = 1.0;
    if (eat('-')) sign = -1.0;
    else eat('+');
    out.push_back(term(sign));
    for (;;) {
      skip_ws();
      if (eat('+')) out.push_back(term(1.0));
      else if (eat('-')) out.push_back(term(-1.0));
      else break;
    }
    return out;
  }

  LaurentTerm term(double sign) {
    LaurentTerm t{Complex(sign, 0.0), ExponentVector(vars_.size(), 0)};
    factor(t);
    while (eat('*')) factor(t);
    return t;
  }

  void factor(LaurentTerm& t) {
    char c = peek();
    if (c == '\0') fail("expected factor");
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '(' || c == 'i') {
      // Possible variable named "i..." takes precedence over the unit.
      if (c != 'i' || !match_variable_ahead()) {
        t.coefficient *= coeff();
        return;
      }
    }
    // Variable with optional integer exponent.
    std::size_t start = pos_;
    int vi = variable();
    std::int64_t e = 1;
    if (eat('^')) e = integer();
    (void)start;
    t.exponent[vi] += e;
  }

  bool match_variable_ahead() {
    skip_ws();
    for (const auto& v : vars_) {
      if (text_.compare(pos_, v.size(), v) == 0) {
        // Longest-match over the unit 'i' only when the name is longer.
        if (v.size() > 1 || v == "i") return true;
      }
    }
    return false;
  }

  Complex coeff() {
    skip_ws();
    if (eat('(')) {
      double re = decimal();
      double im = 0.0;
      bool have_im = false;
      skip_ws();
      if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) {
        double s = text_[pos_] == '-' ? -1.0 : 1.0;
        ++pos_;
        im = s * decimal();
        have_im = true;
        if (!eat('i')) fail("expected 'i' after imaginary part");
      } else if (eat('i')) {
        im = re;
        re = 0.0;
        have_im = true;
      }
      if (!eat(')')) fail("expected ')'");
      return have_im ? Complex(re, im) : Complex(re, 0.0);
    }
    if (eat('i')) return Complex(0.0, 1.0);
    return Complex(decimal(), 0.0);
  }

  double decimal() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == start) fail("expected number");
    if (pos_ < text_.size() && text_[pos_] == '.') {
      ++pos_;
      std::size_t frac = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (pos_ == frac) fail("expected digits after '.'");
    }
    double value = 0.0;
    auto res = std::from_chars(text_.data() + start, text_.data() + pos_, value);
    if (res.ec != std::errc()) fail("malformed number");
    return value;
  }

  std::int64_t integer() {
    skip_ws();
    std::size_t start = pos_;
    if (pos_ < text_.size() && text_[pos_] == '-') ++pos_;
    std::size_t digits = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == digits) fail("expected integer");
    std::int64_t value = 0;
    auto res = std::from_chars(text_.data() + start, text_.data() + pos_, value);
    if (res.ec != std::errc()) fail("malformed integer");
    return value;
  }

  int variable() {
    skip_ws();
    // Longest match wins so that e.g. "x1" is not read as "x" followed by junk.
    int best = -1;
    std::size_t best_len = 0;
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      const auto& v = vars_[i];
      if (!v.empty() && text_.compare(pos_, v.size(), v) == 0 && v.size() > best_len) {
        best = static_cast<int>(i);
        best_len = v.size();
      }
    }
    if (best < 0) fail("unknown variable");
    pos_ += best_len;
    return best;
  }

  const std::string& text_;
  const std::vector<std::string>& vars_;
  std::size_t pos_ = 0;
};

std::string format_double(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  std::string s(buf, res.ptr);
  if (s.find('e') == std::string::npos && s.find('E') == std::string::npos) return s;
  // The grammar has no exponent notation; fall back to a fixed form.
  std::snprintf(buf, sizeof(buf), "%.17f", v);
  return buf;
}

// Prints |coefficient| (the sign is emitted by the caller as '+'/'-').
std::string print_coeff(Complex c, bool has_vars) {
  if (c.imag() == 0.0) {
    double a = std::abs(c.real());
    if (a == 1.0 && has_vars) return "";
    return format_double(a);
  }
  if (c.real() == 0.0) {
    // "(0+bi)" / "(0-bi)"; the grammar's first decimal must be unsigned.
    return "(0" + std::string(c.imag() < 0 ? "-" : "+") +
           format_double(std::abs(c.imag())) + "i)";
  }
  std::string out = "(" + format_double(c.real());
  out += c.imag() < 0 ? "-" : "+";
  double b = std::abs(c.imag());
  out += format_double(b);
  out += "i)";
  return out;
}

}  // namespace

LaurentPolynomial parse(const std::string& text, const std::vector<std::string>& variables) {
  if (variables.empty()) throw std::invalid_argument("variable list must be nonempty");
  return Parser(text, variables).run();
}

std::string print(const LaurentPolynomial& f, const std::vector<std::string>& variables) {
  if (static_cast<int>(variables.size()) != f.rank())
    throw std::invalid_argument("variable list does not match rank");
  if (f.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : f.terms()) {
    bool has_vars = std::any_of(t.exponent.begin(), t.exponent.end(),
                                [](std::int64_t e) { return e != 0; });
    // A genuinely complex leading sign stays inside the parenthesized coefficient.
    // The grammar cannot express a negative real part inside '(...)', so a
    // coefficient with negative real part is negated and the term gets '-'.
    bool negate = t.coefficient.real() < 0.0;
    if (first) {
      if (negate) out += "-";
    } else {
      out += negate ? "-" : "+";
    }
    first = false;
    std::string cs = print_coeff(negate ? -t.coefficient : t.coefficient, has_vars);
    std::string vs;
    for (std::size_t i = 0; i < variables.size(); ++i) {
      if (t.exponent[i] == 0) continue;
      if (!vs.empty()) vs += "*";
      vs += variables[i];
      if (t.exponent[i] != 1) vs += "^" + std::to_string(t.exponent[i]);
    }
    if (cs.empty()) out += vs.empty() ? "1" : vs;
    else if (vs.empty()) out += cs;
    else out += cs + "*" + vs;
  }
  return out;
}

std::vector<std::string> default_variables(int rank) {
  static const char* names[] = {"x", "y", "z"};
  std::vector<std::string> out;
  for (int i = 0; i < rank; ++i)
    out.push_back(i < 3 ? names[i] : "x" + std::to_string(i + 1));
  return out;
}

namespace {

Complex int_pow(Complex base, std::int64_t e) {
  if (e < 0) return 1.0 / int_pow(base, -e);
  Complex r(1.0, 0.0);
  while (e > 0) {
    if (e & 1) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

}  // namespace

Complex evaluate(const LaurentPolynomial& f, const TorusElement& x) {
  if (static_cast<int>(x.size()) != f.rank())
    throw std::invalid_argument("point rank does not match polynomial rank");
  Complex sum(0.0, 0.0);
  for (const auto& t : f.terms()) {
    Complex mono = t.coefficient;
    for (std::size_t i = 0; i < x.size(); ++i) mono *= int_pow(x[i], t.exponent[i]);
    sum += mono;
  }
  return sum;
}

std::int64_t weight_value(const LaurentPolynomial& f, const WeightVector& w) {
  if (f.empty()) throw std::invalid_argument("weight_value of the zero polynomial");
  std::int64_t best = dot(f.terms()[0].exponent, w);
  for (const auto& t : f.terms()) best = std::min(best, dot(t.exponent, w));
  return best;
}

LaurentPolynomial initial_form(const LaurentPolynomial& f, const WeightVector& w) {
  std::int64_t wf = weight_value(f, w);
  std::vector<LaurentTerm> kept;
  for (const auto& t : f.terms())
    if (dot(t.exponent, w) == wf) kept.push_back(t);
  return LaurentPolynomial(f.rank(), std::move(kept));
}

LaurentPolynomial deform(const LaurentPolynomial& f, const WeightVector& w, double t) {
  if (!(t > 0.0)) throw std::invalid_argument("deformation parameter must be positive");
  std::vector<LaurentTerm> out;
  for (const auto& term : f.terms()) {
    double s = std::pow(t, static_cast<double>(dot(term.exponent, w)));
    out.push_back({term.coefficient * s, term.exponent});
  }
  return LaurentPolynomial(f.rank(), std::move(out));
}

LaurentPolynomial scale(const LaurentPolynomial& f, Complex s) {
  std::vector<LaurentTerm> out;
  for (const auto& term : f.terms()) out.push_back({term.coefficient * s, term.exponent});
  return LaurentPolynomial(f.rank(), std::move(out));
}

}  // namespace coamoeba
