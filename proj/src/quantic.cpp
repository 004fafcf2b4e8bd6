#include "symtensor/quantic.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <vector>

#include "symtensor/errors.hpp"

namespace symtensor {

namespace {

Complex power_product(std::span<const Complex> x, const ExponentVector& p) {
  Complex out{1.0, 0.0};
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (unsigned e = 0; e < p[i]; ++e) out *= x[i];
  }
  return out;
}

std::string format_real(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

// One parsed term before the number of variables is known.
struct RawTerm {
  Complex coeff;
  std::map<std::size_t, unsigned> powers;  // 0-based variable -> exponent
};

class TermParser {
 public:
  explicit TermParser(std::string_view text) : text_(text) {}

  std::vector<RawTerm> parse() {
    std::vector<RawTerm> out;
    skip_ws();
    if (at_end()) fail("empty polynomial");
    bool first = true;
    while (!at_end()) {
      double sign = 1.0;
      if (peek() == '+' || peek() == '-') {
        sign = take() == '-' ? -1.0 : 1.0;
        skip_ws();
      } else if (!first) {
        fail("expected '+' or '-' between terms");
      }
      RawTerm t = parse_term();
      t.coeff *= sign;
      out.push_back(std::move(t));
      first = false;
      skip_ws();
    }
    return out;
  }

 private:
  RawTerm parse_term() {
    RawTerm t{Complex{1.0, 0.0}, {}};
    if (at_end()) fail("expected a term");
    if (peek() != 'x') {
      t.coeff = parse_coefficient();
      skip_ws();
      if (at_end() || peek() != '*') return t;
      take();
      skip_ws();
    }
    parse_factor(t);
    skip_ws();
    while (!at_end() && peek() == '*') {
      take();
      skip_ws();
      parse_factor(t);
      skip_ws();
    }
    return t;
  }

  void parse_factor(RawTerm& t) {
    if (at_end() || peek() != 'x') fail("expected variable 'x<i>'");
    take();
    const auto var = parse_unsigned("variable index");
    if (var == 0) fail("variables are numbered from 1");
    unsigned exponent = 1;
    skip_ws();
    if (!at_end() && peek() == '^') {
      take();
      skip_ws();
      exponent = static_cast<unsigned>(parse_unsigned("exponent"));
    }
    t.powers[var - 1] += exponent;
  }

  Complex parse_coefficient() {
    if (peek() == '(') {
      take();
      skip_ws();
      const double re = parse_number();
      skip_ws();
      if (at_end() || (peek() != '+' && peek() != '-')) fail("expected '+' or '-' in complex coefficient");
      const double sign = take() == '-' ? -1.0 : 1.0;
      skip_ws();
      const double im = parse_number();
      if (at_end() || take() != 'j') fail("expected 'j' after imaginary part");
      skip_ws();
      if (at_end() || take() != ')') fail("expected ')' closing complex coefficient");
      return {re, sign * im};
    }
    return {parse_number(), 0.0};
  }

  double parse_number() {
    const std::string rest(text_.substr(pos_));
    char* end = nullptr;
    const double v = std::strtod(rest.c_str(), &end);
    if (end == rest.c_str()) fail("expected a number");
    pos_ += static_cast<std::size_t>(end - rest.c_str());
    return v;
  }

  std::size_t parse_unsigned(const char* what) {
    std::size_t v = 0;
    const char* begin = text_.data() + pos_;
    const char* last = text_.data() + text_.size();
    auto [ptr, ec] = std::from_chars(begin, last, v);
    if (ec != std::errc{} || ptr == begin) fail(std::string("expected ") + what);
    pos_ += static_cast<std::size_t>(ptr - begin);
    return v;
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ValidationError("polynomial parse error at offset " + std::to_string(pos_) + ": " + msg);
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  [[nodiscard]] bool at_end() const { return pos_ >= text_.size(); }
  [[nodiscard]] char peek() const { return text_[pos_]; }
  char take() { return text_[pos_++]; }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Quantic::Quantic(unsigned degree, std::size_t nvars) : degree_(degree), nvars_(nvars) {
  if (nvars_ == 0) throw ValidationError("quantic: need at least one variable");
}

Quantic::Quantic(unsigned degree, std::size_t nvars, TermMap terms) : Quantic(degree, nvars) {
  for (auto& [p, v] : terms) {
    if (p.size() != nvars_ || p.degree() != degree_) {
      throw ValidationError("quantic: monomial does not match degree " + std::to_string(degree_) + " in " +
                            std::to_string(nvars_) + " variables");
    }
    if (v != Complex{}) terms_.emplace(p, v);
  }
}

Complex Quantic::coeff(const ExponentVector& p) const {
  auto it = terms_.find(p);
  return it == terms_.end() ? Complex{} : it->second;
}

Complex Quantic::monomial_coeff(const ExponentVector& p) const {
  return static_cast<double>(multinomial(p)) * coeff(p);
}

Quantic& Quantic::operator+=(const Quantic& other) {
  if (other.degree_ != degree_ || other.nvars_ != nvars_) throw ValidationError("quantic: shape mismatch");
  for (const auto& [p, v] : other.terms_) {
    auto [it, inserted] = terms_.try_emplace(p, v);
    if (!inserted) {
      it->second += v;
      if (it->second == Complex{}) terms_.erase(it);
    }
  }
  return *this;
}

Quantic& Quantic::operator*=(Complex scale) {
  if (scale == Complex{}) {
    terms_.clear();
    return *this;
  }
  for (auto& [p, v] : terms_) v *= scale;
  return *this;
}

Quantic tensor_to_quantic(const SymmetricTensor& a) {
  return {a.order(), a.dim(), Quantic::TermMap(a.coeffs().begin(), a.coeffs().end())};
}

SymmetricTensor quantic_to_tensor(const Quantic& f) {
  return {f.degree(), f.nvars(), SymmetricTensor::CoeffMap(f.terms().begin(), f.terms().end())};
}

Complex evaluate(const Quantic& f, std::span<const Complex> x) {
  if (x.size() != f.nvars()) throw ValidationError("evaluate: point has wrong dimension");
  Complex sum{};
  for (const auto& [p, a] : f.terms()) sum += static_cast<double>(multinomial(p)) * a * power_product(x, p);
  return sum;
}

Complex apolar_form(const Quantic& f, const Quantic& g) {
  if (f.degree() != g.degree() || f.nvars() != g.nvars()) {
    throw ValidationError("apolar_form: degree/variable count mismatch");
  }
  Complex sum{};
  for (const auto& [p, a] : f.terms()) {
    auto it = g.terms().find(p);
    if (it != g.terms().end()) sum += static_cast<double>(multinomial(p)) * a * it->second;
  }
  return sum;
}

Quantic veronese(const LinearForm& form, unsigned degree) {
  return tensor_to_quantic(outer_power(form.beta, degree));
}

Quantic scaled_monomial(const ExponentVector& p) {
  return {p.degree(), p.size(), {{p, Complex{1.0, 0.0}}}};
}

std::string to_string(const Quantic& f) {
  if (f.terms().empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [p, a] : f.terms()) {
    const Complex c = static_cast<double>(multinomial(p)) * a;
    std::string coeff;
    bool negative = false;
    if (c.imag() == 0.0) {
      negative = c.real() < 0.0;
      const double mag = std::abs(c.real());
      if (mag != 1.0 || p.degree() == 0) coeff = format_real(mag);
    } else {
      coeff = "(" + format_real(c.real()) + (c.imag() < 0 ? "-" : "+") + format_real(std::abs(c.imag())) + "j)";
    }
    if (first) {
      out += negative ? "-" : "";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;

    std::string factors;
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (p[i] == 0) continue;
      if (!factors.empty()) factors += '*';
      factors += "x" + std::to_string(i + 1);
      if (p[i] > 1) factors += "^" + std::to_string(p[i]);
    }
    out += coeff;
    if (!coeff.empty() && !factors.empty()) out += '*';
    out += factors;
  }
  return out;
}

Quantic parse_quantic(std::string_view text, std::size_t nvars, std::optional<unsigned> degree) {
  const auto raw = TermParser(text).parse();

  std::size_t max_var = 0;
  std::optional<unsigned> seen_degree;
  for (const auto& t : raw) {
    unsigned d = 0;
    for (const auto& [var, e] : t.powers) {
      max_var = std::max(max_var, var + 1);
      d += e;
    }
    if (t.coeff == Complex{}) continue;
    if (seen_degree && *seen_degree != d) throw ValidationError("polynomial is not homogeneous");
    seen_degree = d;
  }
  if (nvars == 0) nvars = std::max<std::size_t>(max_var, 1);
  if (max_var > nvars) {
    throw ValidationError("variable x" + std::to_string(max_var) + " exceeds " + std::to_string(nvars) +
                          " variables");
  }
  if (degree && seen_degree && *degree != *seen_degree) {
    throw ValidationError("polynomial has degree " + std::to_string(*seen_degree) + ", expected " +
                          std::to_string(*degree));
  }
  const unsigned k = seen_degree ? *seen_degree : degree.value_or(0);

  Quantic out(k, nvars);
  for (const auto& t : raw) {
    if (t.coeff == Complex{}) continue;
    std::vector<unsigned> e(nvars, 0);
    for (const auto& [var, pw] : t.powers) e[var] = pw;
    ExponentVector p(std::move(e));
    out += Quantic(k, nvars, {{p, t.coeff / static_cast<double>(multinomial(p))}});
  }
  return out;
}

}  // namespace symtensor
