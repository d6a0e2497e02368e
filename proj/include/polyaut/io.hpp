#pragma once

#include <cctype>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "derivation.hpp"
#include "polymap.hpp"
#include "polynomial.hpp"
#include "scalar.hpp"
#include "tame.hpp"
#include "torus.hpp"

namespace polyaut {

/// Reading error; offset is the 0-based position in the original input.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t offset)
      : std::runtime_error("parse error at offset " + std::to_string(offset) + ": " + message),
        offset_(offset) {}

  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

/// Largest exponent a literal may carry.
inline constexpr int max_parse_exponent = 512;

/// Largest variable index in the surface syntax (x1 through x9).
inline constexpr int max_parse_vars = 9;

namespace detail {

struct Cursor {
  std::string_view src;
  std::size_t pos = 0;
  std::size_t base = 0;  // offset of src within the full input, for errors
  int nvars = -1;        // -1 leaves variable indices unchecked

  bool eof() const { return pos >= src.size(); }
  char peek() const { return eof() ? '\0' : src[pos]; }

  void skip_ws() {
    while (!eof() && std::isspace(static_cast<unsigned char>(src[pos]))) ++pos;
  }

  bool accept(char c) {
    if (peek() != c) return false;
    ++pos;
    return true;
  }

  void expect(char c, const char* what) {
    if (!accept(c)) fail(what);
  }

  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(message, base + pos);
  }

  void finish() {
    skip_ws();
    if (!eof()) fail("unexpected trailing input");
  }
};

inline long long parse_uint(Cursor& cur, const char* what) {
  if (!std::isdigit(static_cast<unsigned char>(cur.peek()))) cur.fail(what);
  long long value = 0;
  while (std::isdigit(static_cast<unsigned char>(cur.peek()))) {
    value = value * 10 + (cur.src[cur.pos] - '0');
    if (value > 1'000'000'000'000LL) cur.fail("integer literal too large");
    ++cur.pos;
  }
  return value;
}

inline long long parse_int(Cursor& cur, const char* what) {
  cur.skip_ws();
  bool neg = cur.accept('-');
  if (neg) cur.skip_ws();
  long long v = parse_uint(cur, what);
  return neg ? -v : v;
}

// number := digits ['/' digits]
inline Rational parse_rational_literal(Cursor& cur) {
  std::size_t start = cur.pos;
  while (std::isdigit(static_cast<unsigned char>(cur.peek()))) ++cur.pos;
  Integer num(std::string(cur.src.substr(start, cur.pos - start)));
  if (!cur.accept('/')) return Rational(num);
  if (!std::isdigit(static_cast<unsigned char>(cur.peek()))) cur.fail("expected a denominator");
  std::size_t dstart = cur.pos;
  while (std::isdigit(static_cast<unsigned char>(cur.peek()))) ++cur.pos;
  Integer den(std::string(cur.src.substr(dstart, cur.pos - dstart)));
  if (den == 0) cur.fail("zero denominator");
  return Rational(num) / Rational(den);
}

// Parsing works on the widest variable count and narrows afterwards, so a
// component list can be read before its length is known.
using WidePoly = Polynomial<GaussianRational>;

inline WidePoly parse_expr(Cursor& cur);

// atom := number | 'i' | var | '(' expr ')'
inline WidePoly parse_atom(Cursor& cur) {
  cur.skip_ws();
  char c = cur.peek();
  if (c == '(') {
    ++cur.pos;
    WidePoly inner = parse_expr(cur);
    cur.skip_ws();
    cur.expect(')', "expected ')'");
    return inner;
  }
  if (std::isdigit(static_cast<unsigned char>(c)))
    return WidePoly::constant(max_parse_vars, GaussianRational(parse_rational_literal(cur)));
  if (c == 'i' && cur.src.substr(cur.pos + 1, 1) != "d") {
    ++cur.pos;
    return WidePoly::constant(max_parse_vars, GaussianRational::i());
  }
  if (c == 'x') {
    std::size_t at = cur.pos;
    ++cur.pos;
    if (!std::isdigit(static_cast<unsigned char>(cur.peek())) || cur.peek() == '0')
      cur.fail("expected a variable index between 1 and 9");
    int idx = cur.peek() - '0';
    ++cur.pos;
    if (cur.nvars >= 0 && idx > cur.nvars)
      throw ParseError("variable index out of range", cur.base + at);
    return WidePoly::variable(max_parse_vars, idx - 1);
  }
  cur.fail("expected a term");
}

// factor := atom ['^' exponent]
inline WidePoly parse_factor(Cursor& cur) {
  WidePoly p = parse_atom(cur);
  cur.skip_ws();
  if (!cur.accept('^')) return p;
  cur.skip_ws();
  long long e = parse_uint(cur, "expected an exponent");
  if (e > max_parse_exponent) cur.fail("exponent too large");
  return p.pow(static_cast<int>(e));
}

// term := factor ('*' factor)*
inline WidePoly parse_term(Cursor& cur) {
  WidePoly p = parse_factor(cur);
  for (;;) {
    cur.skip_ws();
    if (!cur.accept('*')) return p;
    p = p * parse_factor(cur);
  }
}

// expr := ['-'] term (('+' | '-') term)*
inline WidePoly parse_expr(Cursor& cur) {
  cur.skip_ws();
  bool neg = cur.accept('-');
  WidePoly p = parse_term(cur);
  if (neg) p = -p;
  for (;;) {
    cur.skip_ws();
    if (cur.accept('+')) {
      p += parse_term(cur);
    } else if (cur.accept('-')) {
      p -= parse_term(cur);
    } else {
      return p;
    }
  }
}

inline int max_variable_index(const WidePoly& p) {
  int used = 0;
  for (const auto& [e, c] : p.terms())
    for (int j = 0; j < max_parse_vars; ++j)
      if (e[static_cast<std::size_t>(j)] != 0 && j + 1 > used) used = j + 1;
  return used;
}

inline Polynomial<GaussianRational> narrow_poly(const WidePoly& p, int nvars) {
  Polynomial<GaussianRational> out(nvars);
  for (const auto& [e, c] : p.terms()) {
    Exponents cut(e.begin(), e.begin() + nvars);
    out += Polynomial<GaussianRational>::monomial(nvars, std::move(cut), c);
  }
  return out;
}

/// Top-level ';'-separated segments of a bracketed list, tracking nesting so
/// factor syntax may itself contain brackets. Returns (start, length) pairs.
inline std::vector<std::pair<std::size_t, std::size_t>> split_list(Cursor& cur) {
  cur.skip_ws();
  cur.expect('[', "expected '['");
  std::vector<std::pair<std::size_t, std::size_t>> segments;
  std::size_t start = cur.pos;
  int depth = 0;
  for (;; ++cur.pos) {
    if (cur.eof()) cur.fail("unterminated list");
    char c = cur.peek();
    if (c == '[' || c == '{' || c == '(') ++depth;
    if (c == ']' || c == '}' || c == ')') {
      if (depth == 0) {
        if (c != ']') cur.fail("expected ']'");
        segments.emplace_back(start, cur.pos - start);
        ++cur.pos;
        return segments;
      }
      --depth;
    }
    if (c == ';' && depth == 0) {
      segments.emplace_back(start, cur.pos - start);
      start = cur.pos + 1;
    }
  }
}

inline Polynomial<GaussianRational> parse_component(std::string_view whole, std::size_t start,
                                                    std::size_t len, int nvars) {
  Cursor cur{whole.substr(start, len), 0, start, nvars};
  WidePoly p = parse_expr(cur);
  cur.finish();
  return narrow_poly(p, nvars);
}

/// '(' entry (',' entry)* ')' where each entry is a constant expression,
/// consumed from the live cursor so error offsets stay exact.
inline std::vector<GaussianRational> parse_tuple_entries(Cursor& cur) {
  cur.skip_ws();
  cur.expect('(', "expected '('");
  std::vector<GaussianRational> values;
  do {
    cur.skip_ws();
    std::size_t start = cur.pos;
    int depth = 0;
    while (!cur.eof()) {
      char c = cur.peek();
      if (c == '(') ++depth;
      if (c == ')') {
        if (depth == 0) break;
        --depth;
      }
      if (c == ',' && depth == 0) break;
      ++cur.pos;
    }
    Cursor entry{cur.src.substr(start, cur.pos - start), 0, cur.base + start, 0};
    WidePoly p = parse_expr(entry);
    entry.finish();
    values.push_back(p.constant_value());
  } while (cur.accept(','));
  cur.expect(')', "expected ')'");
  return values;
}

}  // namespace detail

inline Polynomial<GaussianRational> parse_polynomial(std::string_view text, int nvars) {
  if (nvars < 1 || nvars > max_parse_vars) throw std::invalid_argument("variable count out of range");
  detail::Cursor cur{text, 0, 0, nvars};
  detail::WidePoly p = detail::parse_expr(cur);
  cur.finish();
  return detail::narrow_poly(p, nvars);
}

/// Variable count inferred as the largest index that appears (at least 1).
inline Polynomial<GaussianRational> parse_polynomial(std::string_view text) {
  detail::Cursor cur{text, 0, 0, -1};
  detail::WidePoly p = detail::parse_expr(cur);
  cur.finish();
  return detail::narrow_poly(p, std::max(1, detail::max_variable_index(p)));
}

/// [p1; ...; pn] with n giving the variable count of every component.
inline PolyMap<GaussianRational> parse_map(std::string_view text) {
  detail::Cursor cur{text, 0, 0, -1};
  auto segments = detail::split_list(cur);
  cur.finish();
  int n = static_cast<int>(segments.size());
  if (n < 1 || n > max_parse_vars)
    throw ParseError("component count out of range", 0);
  std::vector<Polynomial<GaussianRational>> comps;
  comps.reserve(segments.size());
  for (const auto& [start, len] : segments)
    comps.push_back(detail::parse_component(text, start, len, n));
  return PolyMap<GaussianRational>(std::move(comps));
}

/// [p1; ...; pn] d/dx, the derivation sending x_j to p_j.
inline Derivation<GaussianRational> parse_derivation(std::string_view text) {
  detail::Cursor cur{text, 0, 0, -1};
  auto segments = detail::split_list(cur);
  cur.skip_ws();
  if (cur.src.substr(cur.pos, 4) != "d/dx") cur.fail("expected 'd/dx'");
  cur.pos += 4;
  cur.finish();
  int n = static_cast<int>(segments.size());
  if (n < 1 || n > max_parse_vars)
    throw ParseError("component count out of range", 0);
  std::vector<Polynomial<GaussianRational>> comps;
  comps.reserve(segments.size());
  for (const auto& [start, len] : segments)
    comps.push_back(detail::parse_component(text, start, len, n));
  return Derivation<GaussianRational>(std::move(comps));
}

/// (c1,...,cn), an integer tuple.
inline Character parse_character(std::string_view text) {
  detail::Cursor cur{text, 0, 0, -1};
  cur.skip_ws();
  cur.expect('(', "expected '('");
  std::vector<int> coords;
  do {
    long long v = detail::parse_int(cur, "expected an integer");
    if (v < -1'000'000 || v > 1'000'000) cur.fail("coordinate out of range");
    coords.push_back(static_cast<int>(v));
    cur.skip_ws();
  } while (cur.accept(','));
  cur.expect(')', "expected ')'");
  cur.finish();
  return Character{std::move(coords)};
}

/// A constant expression: rationals, i, +, -, *, ^, parentheses.
inline GaussianRational parse_scalar(std::string_view text) {
  detail::Cursor cur{text, 0, 0, 0};
  detail::WidePoly p = detail::parse_expr(cur);
  cur.finish();
  return p.constant_value();
}

/// (c1,...,cn) with constant-expression entries.
inline std::vector<GaussianRational> parse_scalar_tuple(std::string_view text) {
  detail::Cursor cur{text, 0, 0, 0};
  auto values = detail::parse_tuple_entries(cur);
  cur.finish();
  return values;
}

namespace detail {

// affine := 'A' '[' row (',' row)* ']' ['+' '(' entries ')']
// elem   := 'E' digit '{' poly '}'
struct RawFactor {
  bool affine = false;
  std::size_t offset = 0;
  // affine
  std::vector<std::vector<GaussianRational>> rows;
  std::vector<GaussianRational> shift;
  // elementary
  int axis = 0;
  std::size_t poly_start = 0, poly_len = 0;
};

inline RawFactor parse_raw_factor(std::string_view whole, std::size_t start, std::size_t len) {
  Cursor cur{whole.substr(start, len), 0, start, -1};
  cur.skip_ws();
  RawFactor out;
  out.offset = start + cur.pos;
  if (cur.accept('A')) {
    out.affine = true;
    cur.skip_ws();
    cur.expect('[', "expected '['");
    do {
      cur.skip_ws();
      cur.expect('[', "expected '['");
      std::vector<GaussianRational> row;
      do {
        cur.skip_ws();
        std::size_t at = cur.pos;
        int depth = 0;
        while (!cur.eof()) {
          char c = cur.peek();
          if (c == '(') ++depth;
          if (c == ')') --depth;
          if ((c == ',' || c == ']') && depth == 0) break;
          ++cur.pos;
        }
        Cursor entry{cur.src.substr(at, cur.pos - at), 0, start + at, 0};
        WidePoly p = parse_expr(entry);
        entry.finish();
        row.push_back(p.constant_value());
        cur.skip_ws();
      } while (cur.accept(','));
      cur.expect(']', "expected ']'");
      out.rows.push_back(std::move(row));
      cur.skip_ws();
    } while (cur.accept(','));
    cur.expect(']', "expected ']'");
    cur.skip_ws();
    if (cur.accept('+')) out.shift = parse_tuple_entries(cur);
    cur.finish();
    return out;
  }
  if (cur.accept('E')) {
    if (!std::isdigit(static_cast<unsigned char>(cur.peek())) || cur.peek() == '0')
      cur.fail("expected an axis between 1 and 9");
    out.axis = cur.peek() - '0' - 1;
    ++cur.pos;
    cur.skip_ws();
    cur.expect('{', "expected '{'");
    out.poly_start = start + cur.pos;
    int depth = 0;
    while (!cur.eof() && !(cur.peek() == '}' && depth == 0)) {
      if (cur.peek() == '(') ++depth;
      if (cur.peek() == ')') --depth;
      ++cur.pos;
    }
    out.poly_len = start + cur.pos - out.poly_start;
    cur.expect('}', "expected '}'");
    cur.finish();
    return out;
  }
  cur.fail("expected 'A' or 'E'");
}

}  // namespace detail

/// 'id' or [factor; ...; factor] with affine factors A[[..],..]+(..) and
/// elementary factors Ek{p}. nvars <= 0 infers the variable count from the
/// factors themselves.
inline TameWord parse_word(std::string_view text, int nvars = -1) {
  {
    detail::Cursor probe{text, 0, 0, -1};
    probe.skip_ws();
    if (probe.src.substr(probe.pos, 2) == "id") {
      probe.pos += 2;
      probe.finish();
      return TameWord(nvars > 0 ? nvars : 1);
    }
  }
  detail::Cursor cur{text, 0, 0, -1};
  auto segments = detail::split_list(cur);
  cur.finish();

  std::vector<detail::RawFactor> raw;
  raw.reserve(segments.size());
  for (const auto& [start, len] : segments)
    raw.push_back(detail::parse_raw_factor(text, start, len));

  // Affine factors pin the variable count exactly; elementary factors give a
  // lower bound through their axis and the variables they mention.
  int exact = nvars > 0 ? nvars : 0;
  int minimum = 1;
  std::size_t minimum_from = 0;
  for (const auto& f : raw) {
    if (f.affine) {
      int size = static_cast<int>(f.rows.size());
      if (exact > 0 && size != exact) throw ParseError("factor dimension mismatch", f.offset);
      exact = size;
    } else {
      detail::Cursor pc{text.substr(f.poly_start, f.poly_len), 0, f.poly_start, -1};
      detail::WidePoly p = detail::parse_expr(pc);
      pc.finish();
      int need = std::max(f.axis + 1, detail::max_variable_index(p));
      if (need > minimum) {
        minimum = need;
        minimum_from = f.offset;
      }
    }
  }
  int n = exact > 0 ? exact : minimum;
  if (n < minimum) throw ParseError("factor dimension mismatch", minimum_from);
  if (n > max_parse_vars) throw ParseError("component count out of range", 0);

  TameWord word(n);
  for (const auto& f : raw) {
    if (f.affine) {
      if (static_cast<int>(f.rows.size()) != n)
        throw ParseError("factor dimension mismatch", f.offset);
      Matrix<GaussianRational> m(f.rows.begin(), f.rows.end());
      for (const auto& row : m)
        if (static_cast<int>(row.size()) != n)
          throw ParseError("factor dimension mismatch", f.offset);
      std::vector<GaussianRational> shift = f.shift;
      if (shift.empty()) shift.assign(static_cast<std::size_t>(n), GaussianRational(0));
      if (static_cast<int>(shift.size()) != n)
        throw ParseError("factor dimension mismatch", f.offset);
      try {
        word.push_back(AffineGenerator(std::move(m), std::move(shift)));
      } catch (const std::invalid_argument& e) {
        throw ParseError(e.what(), f.offset);
      }
    } else {
      auto p = detail::parse_component(text, f.poly_start, f.poly_len, n);
      try {
        word.push_back(ElementaryGenerator(f.axis, std::move(p)));
      } catch (const std::invalid_argument& e) {
        throw ParseError(e.what(), f.offset);
      }
    }
  }
  return word;
}

// ---------------------------------------------------------------------------
// Canonical printing
// ---------------------------------------------------------------------------

namespace detail {

inline std::string rational_to_string(const Rational& r) {
  Integer num = boost::multiprecision::numerator(r);
  Integer den = boost::multiprecision::denominator(r);
  std::string s = num.str();
  if (den != 1) s += "/" + den.str();
  return s;
}

inline bool scalar_prints_negative(const GaussianRational& c) {
  if (!c.imag().is_zero() && !c.real().is_zero()) return false;  // mixed: parenthesized
  if (!c.real().is_zero()) return c.real() < 0;
  return c.imag() < 0;
}

}  // namespace detail

inline std::string to_string(const GaussianRational& c) {
  const Rational& re = c.real();
  const Rational& im = c.imag();
  if (im.is_zero()) return detail::rational_to_string(re);
  std::string imag_part;
  Rational mag = im < 0 ? Rational(-im) : im;
  imag_part = (mag == 1) ? "i" : detail::rational_to_string(mag) + "*i";
  if (re.is_zero()) return (im < 0 ? "-" : "") + imag_part;
  return detail::rational_to_string(re) + (im < 0 ? " - " : " + ") + imag_part;
}

inline std::string to_string(const Polynomial<GaussianRational>& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const Exponents& e = it->first;
    GaussianRational c = it->second;
    bool negative = detail::scalar_prints_negative(c);
    if (negative) c = -c;
    if (first) {
      if (negative) out += "-";
      first = false;
    } else {
      out += negative ? " - " : " + ";
    }

    std::string mono;
    for (int j = 0; j < p.nvars(); ++j) {
      int k = e[static_cast<std::size_t>(j)];
      if (k == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += "x" + std::to_string(j + 1);
      if (k != 1) mono += "^" + std::to_string(k);
    }

    bool mixed = !c.real().is_zero() && !c.imag().is_zero();
    if (mono.empty()) {
      out += mixed ? "(" + to_string(c) + ")" : to_string(c);
    } else if (c.is_one()) {
      out += mono;
    } else if (mixed) {
      out += "(" + to_string(c) + ")*" + mono;
    } else {
      out += to_string(c) + "*" + mono;
    }
  }
  return out;
}

inline std::string to_string(const PolyMap<GaussianRational>& f) {
  std::string out = "[";
  for (int j = 0; j < f.nvars(); ++j) {
    if (j) out += "; ";
    out += to_string(f.component(j));
  }
  return out + "]";
}

inline std::string to_string(const Derivation<GaussianRational>& d) {
  std::string out = "[";
  for (int j = 0; j < d.nvars(); ++j) {
    if (j) out += "; ";
    out += to_string(d.coefficient(j));
  }
  return out + "] d/dx";
}

inline std::string to_string(const Character& chi) {
  std::string out = "(";
  for (std::size_t j = 0; j < chi.coords.size(); ++j) {
    if (j) out += ",";
    out += std::to_string(chi.coords[j]);
  }
  return out + ")";
}

inline std::string to_string(const TameGenerator& g) {
  if (const auto* aff = std::get_if<AffineGenerator>(&g)) {
    std::string out = "A[";
    for (std::size_t r = 0; r < aff->matrix().size(); ++r) {
      if (r) out += ",";
      out += "[";
      for (std::size_t c = 0; c < aff->matrix()[r].size(); ++c) {
        if (c) out += ",";
        out += to_string(aff->matrix()[r][c]);
      }
      out += "]";
    }
    out += "]";
    bool any_shift = false;
    for (const auto& v : aff->shift())
      if (!v.is_zero()) any_shift = true;
    if (any_shift) {
      out += "+(";
      for (std::size_t j = 0; j < aff->shift().size(); ++j) {
        if (j) out += ",";
        out += to_string(aff->shift()[j]);
      }
      out += ")";
    }
    return out;
  }
  const auto& el = std::get<ElementaryGenerator>(g);
  return "E" + std::to_string(el.axis() + 1) + "{" + to_string(el.summand()) + "}";
}

inline std::string to_string(const TameWord& w) {
  if (w.empty()) return "id";
  std::string out = "[";
  for (std::size_t j = 0; j < w.size(); ++j) {
    if (j) out += "; ";
    out += to_string(w.factors()[j]);
  }
  return out + "]";
}

}  // namespace polyaut
