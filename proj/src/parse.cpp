#include "germlab/parse.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace germlab {

namespace {

struct Cursor {
  const std::string& text;
  size_t pos = 0;
  int line = 1;
  int col = 1;

  [[noreturn]] void error(const std::string& msg) const {
    std::ostringstream os;
    os << "line " << line << ", col " << col << ": " << msg;
    fail(Errc::invalid_input, os.str());
  }

  void advance() {
    if (text[pos] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
    ++pos;
  }

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) advance();
  }

  bool done() {
    skip_ws();
    return pos >= text.size();
  }

  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }

  bool eat(char c) {
    if (peek() == c) {
      advance();
      return true;
    }
    return false;
  }

  std::string read_integer() {
    skip_ws();
    std::string digits;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      digits += text[pos];
      advance();
    }
    if (digits.empty()) error("expected an integer");
    return digits;
  }

  std::string read_name() {
    skip_ws();
    std::string name;
    auto is_name_char = [](char c) {
      return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    };
    if (pos >= text.size() || !(std::isalpha(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
      error("expected a variable name");
    while (pos < text.size() && is_name_char(text[pos])) {
      name += text[pos];
      advance();
    }
    return name;
  }
};

// [coef][*]factor(*factor)* where factor = name[^k]. At least one of the
// coefficient or a factor must be present.
Term parse_term(Cursor& cur, const RingPtr& ring) {
  Term t{Monomial(ring->nvars()), Rational(1)};
  bool have_any = false;

  char c = cur.peek();
  if (std::isdigit(static_cast<unsigned char>(c))) {
    std::string num = cur.read_integer();
    std::string text = num;
    if (cur.eat('/')) text += "/" + cur.read_integer();
    t.coef = Rational::parse(text);
    have_any = true;
    cur.eat('*');
  }

  while (true) {
    char p = cur.peek();
    bool starts_name = std::isalpha(static_cast<unsigned char>(p)) || p == '_';
    if (!starts_name) break;
    int lin = cur.line, col = cur.col;
    std::string name = cur.read_name();
    auto idx = ring->index_of(name);
    if (!idx) {
      cur.line = lin;
      cur.col = col;
      cur.error("unknown variable '" + name + "'");
    }
    unsigned exp = 1;
    if (cur.eat('^')) {
      std::string e = cur.read_integer();
      if (e.size() > 4) cur.error("exponent too large");
      exp = static_cast<unsigned>(std::stoul(e));
    }
    t.mono.set(*idx, t.mono[*idx] + exp);
    have_any = true;
    if (!cur.eat('*')) break;
  }

  if (!have_any) cur.error("expected a term");
  return t;
}

}  // namespace

Poly parse_poly(const std::string& text, const RingPtr& ring) {
  Cursor cur{text};
  std::vector<Term> terms;
  bool first = true;
  while (!cur.done()) {
    int sign = 1;
    if (cur.eat('-')) {
      sign = -1;
    } else if (cur.eat('+')) {
      if (first) cur.error("unexpected leading '+'");
    } else if (!first) {
      cur.error("expected '+' or '-' between terms");
    }
    Term t = parse_term(cur, ring);
    if (sign < 0) t.coef = -t.coef;
    terms.push_back(std::move(t));
    first = false;
  }
  if (first) cur.error("empty polynomial");
  return Poly::from_terms(ring, std::move(terms));
}

std::string poly_to_string(const Poly& p) {
  if (p.is_zero()) return "0";

  std::vector<Term> terms(p.terms().begin(), p.terms().end());
  MonomialOrder order = MonomialOrder::DegRevLex();
  std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
    return mono_compare(order, a.mono, b.mono) > 0;
  });

  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms) {
    Rational c = t.coef;
    if (first) {
      if (c.sign() < 0) {
        os << "-";
        c = -c;
      }
      first = false;
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
      c = c.abs();
    }
    bool printed_coef = false;
    if (!c.is_one() || t.mono.is_one()) {
      os << c.str();
      printed_coef = true;
    }
    bool first_factor = !printed_coef;
    for (int v = 0; v < p.ring()->nvars(); ++v) {
      unsigned e = t.mono[v];
      if (!e) continue;
      if (!first_factor) os << "*";
      os << p.ring()->name(v);
      if (e > 1) os << "^" << e;
      first_factor = false;
    }
  }
  return os.str();
}

}  // namespace germlab
