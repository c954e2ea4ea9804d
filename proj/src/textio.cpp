#include "gbv/textio.hpp"

#include <cctype>
#include <sstream>

#include "gbv/vectorfield.hpp"

namespace gbv {

namespace {

void emit_term(std::ostream& os, bool first, const Rational& c, const Monomial& mono,
               OddMask s, const std::string& odd_name) {
  Rational a = c;
  if (sgn(a) < 0) {
    os << (first ? "-" : " - ");
    a = -a;
  } else if (!first) {
    os << " + ";
  }
  std::ostringstream factors;
  bool any = false;
  for (std::size_t i = 0; i < mono.e.size(); ++i) {
    if (mono.e[i] == 0) continue;
    if (any) factors << "*";
    factors << "x" << (i + 1);
    if (mono.e[i] > 1) factors << "^" << mono.e[i];
    any = true;
  }
  for (int j = 0; j < kMaxOddDim; ++j) {
    if (!(s & (OddMask(1) << j))) continue;
    if (any) factors << "*";
    factors << odd_name << (j + 1);
    any = true;
  }
  if (!any) {
    os << a.get_str();
  } else {
    if (a != 1) os << a.get_str() << "*";
    os << factors.str();
  }
}

}  // namespace

std::string to_string(const Poly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [mono, c] : p.terms()) {
    emit_term(os, first, c, mono, 0, "s");
    first = false;
  }
  return os.str();
}

std::string to_string(const SuperFn& f, const PrintOptions& opts) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [s, p] : f.terms()) {
    for (const auto& [mono, c] : p.terms()) {
      emit_term(os, first, c, mono, s, opts.odd_name);
      first = false;
    }
  }
  return os.str();
}

std::string to_string(const VectorField& d, const PrintOptions& opts) {
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < d.m(); ++i) {
    if (d.x_coeff(i).is_zero()) continue;
    if (!first) os << " + ";
    os << "(" << to_string(d.x_coeff(i), opts) << ")d/dx" << (i + 1);
    first = false;
  }
  for (int j = 0; j < d.n(); ++j) {
    if (d.s_coeff(j).is_zero()) continue;
    if (!first) os << " + ";
    os << "(" << to_string(d.s_coeff(j), opts) << ")d/d" << opts.odd_name << (j + 1);
    first = false;
  }
  return first ? "0" : os.str();
}

// ---------------------------------------------------------------------------
// Parser
// ---------------------------------------------------------------------------

namespace {

struct Cursor {
  const std::string& text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool done() {
    skip_ws();
    return pos >= text.size();
  }
  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }
  [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, pos); }

  unsigned long read_uint() {
    skip_ws();
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
      fail("expected a number");
    unsigned long v = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      v = v * 10 + unsigned(text[pos] - '0');
      if (v > 1000000) fail("number too large");
      ++pos;
    }
    return v;
  }
};

struct Factor {
  enum Kind { kRational, kEven, kOdd } kind;
  Rational value{0};
  int index = 0;      // 0-based coordinate index
  unsigned exp = 1;
};

// factor := <rational> | x<i>[^k] | (s|xi)<j>[^k]
Factor parse_factor(Cursor& c, int m, int n) {
  c.skip_ws();
  Factor f{Factor::kRational};
  if (c.pos >= c.text.size()) c.fail("expected a factor");
  char ch = c.text[c.pos];
  if (std::isdigit(static_cast<unsigned char>(ch))) {
    unsigned long num = c.read_uint();
    unsigned long den = 1;
    c.skip_ws();
    if (c.pos < c.text.size() && c.text[c.pos] == '/') {
      ++c.pos;
      den = c.read_uint();
      if (den == 0) c.fail("zero denominator");
    }
    f.kind = Factor::kRational;
    f.value = Rational(long(num), long(den));
    f.value.canonicalize();
    return f;
  }
  bool odd = false;
  std::size_t name_pos = c.pos;
  if (c.text.compare(c.pos, 2, "xi") == 0) {
    odd = true;
    c.pos += 2;
  } else if (ch == 's') {
    odd = true;
    c.pos += 1;
  } else if (ch == 'x') {
    c.pos += 1;
  } else {
    c.fail("expected a rational or a coordinate factor");
  }
  unsigned long idx = c.read_uint();
  if (idx == 0) throw ParseError("coordinate indices start at 1", name_pos);
  if (!odd && long(idx) > m) throw ParseError("even coordinate out of range", name_pos);
  if (odd && long(idx) > n) throw ParseError("odd coordinate out of range", name_pos);
  f.kind = odd ? Factor::kOdd : Factor::kEven;
  f.index = int(idx) - 1;
  c.skip_ws();
  if (c.pos < c.text.size() && c.text[c.pos] == '^') {
    ++c.pos;
    f.exp = unsigned(c.read_uint());
  }
  return f;
}

// term := factor ('*' factor)*
SuperFn parse_term(Cursor& c, int m, int n) {
  SuperFn acc = SuperFn::one(m, n);
  bool more = true;
  while (more) {
    Factor f = parse_factor(c, m, n);
    switch (f.kind) {
      case Factor::kRational:
        acc = acc * f.value;
        break;
      case Factor::kEven: {
        SuperFn x = SuperFn::coordinate_x(m, n, f.index);
        for (unsigned k = 0; k < f.exp; ++k) acc = acc * x;
        break;
      }
      case Factor::kOdd: {
        SuperFn s = SuperFn::coordinate_s(m, n, f.index);
        for (unsigned k = 0; k < f.exp; ++k) acc = acc * s;
        break;
      }
    }
    c.skip_ws();
    if (c.pos < c.text.size() && c.text[c.pos] == '*') {
      ++c.pos;
    } else {
      more = false;
    }
  }
  return acc;
}

}  // namespace

SuperFn parse_superfn(const std::string& text, int m, int n) {
  Cursor c{text};
  SuperFn acc(m, n);
  if (c.done()) c.fail("empty expression");
  bool first = true;
  while (!c.done()) {
    int sign = 1;
    char ch = c.peek();
    if (ch == '+' || ch == '-') {
      sign = (ch == '-') ? -1 : 1;
      ++c.pos;
    } else if (!first) {
      c.fail("expected '+' or '-' between terms");
    }
    SuperFn t = parse_term(c, m, n);
    acc = (sign < 0) ? acc - t : acc + t;
    first = false;
  }
  return acc;
}

Poly parse_poly(const std::string& text, int m) {
  SuperFn f = parse_superfn(text, m, 0);
  return f.coeff(0);
}

VectorField parse_vectorfield(const std::string& text, int m, int n) {
  Cursor c{text};
  std::vector<SuperFn> xc(std::size_t(m), SuperFn(m, n));
  std::vector<SuperFn> sc(std::size_t(n), SuperFn(m, n));
  bool first = true;
  if (c.done()) c.fail("empty derivation");
  while (!c.done()) {
    int sign = 1;
    char ch = c.peek();
    if (ch == '+' || ch == '-') {
      sign = (ch == '-') ? -1 : 1;
      ++c.pos;
      c.skip_ws();
    } else if (!first) {
      c.fail("expected '+' or '-' between derivation terms");
    }
    first = false;
    if (c.peek() != '(') c.fail("expected '(' starting a coefficient");
    ++c.pos;
    std::size_t start = c.pos;
    int depth = 1;
    while (c.pos < c.text.size() && depth > 0) {
      if (c.text[c.pos] == '(') ++depth;
      if (c.text[c.pos] == ')') --depth;
      ++c.pos;
    }
    if (depth != 0) c.fail("unbalanced parentheses");
    SuperFn coeff = parse_superfn(c.text.substr(start, c.pos - 1 - start), m, n);
    if (sign < 0) coeff = -coeff;
    c.skip_ws();
    if (c.text.compare(c.pos, 3, "d/d") != 0) c.fail("expected d/dx<i> or d/ds<j>");
    c.pos += 3;
    bool odd = false;
    if (c.text.compare(c.pos, 2, "xi") == 0) {
      odd = true;
      c.pos += 2;
    } else if (c.pos < c.text.size() && c.text[c.pos] == 's') {
      odd = true;
      c.pos += 1;
    } else if (c.pos < c.text.size() && c.text[c.pos] == 'x') {
      c.pos += 1;
    } else {
      c.fail("expected a coordinate direction");
    }
    unsigned long idx = c.read_uint();
    if (idx == 0 || (odd ? long(idx) > n : long(idx) > m)) c.fail("direction out of range");
    if (odd)
      sc[idx - 1] = sc[idx - 1] + coeff;
    else
      xc[idx - 1] = xc[idx - 1] + coeff;
  }
  // infer the declared parity from any nonzero coefficient
  for (int i = 0; i < m; ++i)
    if (auto p = xc[std::size_t(i)].parity(); !xc[std::size_t(i)].is_zero() && p)
      return VectorField::from_coeffs(*p, xc, sc);
  for (int j = 0; j < n; ++j)
    if (auto p = sc[std::size_t(j)].parity(); !sc[std::size_t(j)].is_zero() && p)
      return VectorField::from_coeffs(flip(*p), xc, sc);
  return VectorField::from_coeffs(Parity::Even, xc, sc);
}

}  // namespace gbv
