#include "knotrep/poly_text.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace knotrep {

namespace {

struct PolyParser {
  std::string_view text;
  size_t pos = 0;
  const std::vector<std::string>& names;
  std::map<std::string, int, std::less<>> index;

  PolyParser(std::string_view t, const std::vector<std::string>& n)
      : text(t), names(n) {
    for (size_t i = 0; i < n.size(); ++i) index.emplace(n[i], static_cast<int>(i));
  }

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  }
  bool eat(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }

  mpz_class parse_uint() {
    skip_ws();
    size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
      ++pos;
    if (pos == start)
      fail(ErrorCode::InvalidInput, "expected number in polynomial at offset " +
                                        std::to_string(start));
    return mpz_class(std::string(text.substr(start, pos - start)));
  }

  std::string parse_name() {
    skip_ws();
    size_t start = pos;
    while (pos < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
      ++pos;
    if (pos == start)
      fail(ErrorCode::InvalidInput, "expected variable name at offset " +
                                        std::to_string(start));
    return std::string(text.substr(start, pos - start));
  }

  // coef [* powers] | powers
  Term parse_term(int nvars) {
    Term t{Monomial(nvars), Rational(1)};
    bool saw_factor = false;
    char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      mpz_class num = parse_uint();
      mpz_class den = 1;
      if (eat('/')) {
        den = parse_uint();
        if (den == 0) fail(ErrorCode::InvalidInput, "zero denominator");
      }
      t.coef = Rational(num, den);
      t.coef.canonicalize();
      saw_factor = true;
      if (!eat('*')) return t;
    }
    for (;;) {
      std::string name = parse_name();
      auto it = index.find(name);
      if (it == index.end())
        fail(ErrorCode::InvalidInput, "unknown variable '" + name + "'");
      int e = 1;
      if (eat('^')) {
        mpz_class p = parse_uint();
        if (!p.fits_sint_p()) fail(ErrorCode::InvalidInput, "exponent too large");
        e = p.get_si();
      }
      t.mono.bump(it->second, e);
      saw_factor = true;
      if (!eat('*')) break;
      if (std::isdigit(static_cast<unsigned char>(peek())))
        fail(ErrorCode::InvalidInput, "coefficient must lead its term");
    }
    if (!saw_factor) fail(ErrorCode::InvalidInput, "empty term");
    return t;
  }

  Polynomial parse(const MonomialOrder& order) {
    const int nvars = static_cast<int>(names.size());
    std::vector<Term> terms;
    skip_ws();
    bool neg = false;
    if (eat('-'))
      neg = true;
    else
      eat('+');
    for (;;) {
      Term t = parse_term(nvars);
      if (neg) t.coef = -t.coef;
      terms.push_back(std::move(t));
      char c = peek();
      if (c == '+') {
        neg = false;
        ++pos;
      } else if (c == '-') {
        neg = true;
        ++pos;
      } else {
        break;
      }
    }
    skip_ws();
    if (pos != text.size())
      fail(ErrorCode::InvalidInput, "trailing input in polynomial at offset " +
                                        std::to_string(pos));
    return Polynomial::from_terms(nvars, order, std::move(terms));
  }
};

std::string rational_to_text(const Rational& c) {
  std::ostringstream os;
  os << c;
  return os.str();
}

}  // namespace

Polynomial parse_polynomial(std::string_view text,
                            const std::vector<std::string>& names,
                            const MonomialOrder& order) {
  PolyParser p(text, names);
  return p.parse(order);
}

std::string polynomial_to_text(const Polynomial& p,
                               const std::vector<std::string>& names) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const Term& t : p.terms()) {
    Rational c = t.coef;
    if (first) {
      if (c < 0) {
        out += "-";
        c = -c;
      }
    } else {
      out += c < 0 ? " - " : " + ";
      if (c < 0) c = -c;
    }
    first = false;
    bool noisy_coef = (c != 1) || t.mono.is_unit();
    if (noisy_coef) out += rational_to_text(c);
    bool need_star = noisy_coef;
    for (int v = 0; v < t.mono.nvars(); ++v) {
      if (t.mono.exp[v] == 0) continue;
      if (need_star) out += '*';
      out += names[v];
      if (t.mono.exp[v] != 1) out += '^' + std::to_string(t.mono.exp[v]);
      need_star = true;
    }
  }
  return out;
}

Ideal parse_ideal_text(std::string_view text) {
  std::vector<std::string> names;
  MonomialOrder::Kind kind = MonomialOrder::Kind::GrevLex;
  std::vector<std::string> poly_lines;
  std::istringstream in{std::string(text)};
  std::string line;
  bool have_vars = false;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;
    if (first == "vars:") {
      if (have_vars) fail(ErrorCode::InvalidInput, "duplicate vars: header");
      std::string name;
      while (ls >> name) {
        if (std::find(names.begin(), names.end(), name) != names.end())
          fail(ErrorCode::InvalidInput, "duplicate variable '" + name + "'");
        names.push_back(name);
      }
      have_vars = true;
    } else if (first == "order:") {
      std::string o;
      ls >> o;
      if (o == "lex")
        kind = MonomialOrder::Kind::Lex;
      else if (o == "grevlex")
        kind = MonomialOrder::Kind::GrevLex;
      else
        fail(ErrorCode::InvalidInput, "unknown order '" + o + "'");
    } else {
      if (!have_vars) fail(ErrorCode::InvalidInput, "polynomial before vars: header");
      poly_lines.push_back(line);
    }
  }
  if (!have_vars) fail(ErrorCode::InvalidInput, "missing vars: header");
  const int n = static_cast<int>(names.size());
  MonomialOrder order = kind == MonomialOrder::Kind::Lex ? lex_order(n)
                                                         : grevlex_order(n);
  std::vector<Polynomial> gens;
  for (const std::string& pl : poly_lines)
    gens.push_back(parse_polynomial(pl, names, order));
  return Ideal::make(std::move(names), std::move(order), std::move(gens));
}

std::string ideal_to_text(const Ideal& I) {
  std::string out = "vars:";
  for (const std::string& n : I.var_names) out += ' ' + n;
  out += '\n';
  if (I.order.kind == MonomialOrder::Kind::Lex) out += "order: lex\n";
  for (const Polynomial& g : I.generators)
    out += polynomial_to_text(g, I.var_names) + '\n';
  return out;
}

Ideal ideal_of(const std::vector<std::string>& names,
               const std::vector<std::string>& polys) {
  const int n = static_cast<int>(names.size());
  MonomialOrder order = grevlex_order(n);
  std::vector<Polynomial> gens;
  for (const std::string& s : polys)
    gens.push_back(parse_polynomial(s, names, order));
  return Ideal::make(names, order, gens);
}

}  // namespace knotrep
