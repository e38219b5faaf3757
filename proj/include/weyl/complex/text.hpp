#pragma once

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "weyl/abelian_group.hpp"
#include "weyl/complex/cell.hpp"
#include "weyl/error.hpp"

// Grammar: cells are "[...]"; inside, runs of k bars separate level-k components
// and commas separate bar entries. An element is "1", an explicit vector "(1,0,2)",
// or a product of generator letters a, b, c, ... with optional "^n" exponents.

namespace weyl::complex {

inline std::string format_element(const AbGroup& g, const GroupElement& x) {
  const auto& c = x.coords;
  if (g.dimension() > 26) {
    std::string s = "(";
    for (std::size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + std::to_string(c[i]);
    return s + ")";
  }
  std::string s;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    s += static_cast<char>('a' + i);
    if (c[i] != 1) s += "^" + std::to_string(c[i]);
  }
  return s.empty() ? "1" : s;
}

inline std::string format_cell(const AbGroup& g, const Cell& c);

namespace detail {

inline std::string format_body(const AbGroup& g, const Cell& c) {
  std::string s;
  if (c.level() == 0) {
    for (std::size_t i = 0; i < c.elements().size(); ++i) s += (i ? "," : "") + format_element(g, c.elements()[i]);
    return s;
  }
  const std::string sep(static_cast<std::size_t>(c.level()), '|');
  for (std::size_t i = 0; i < c.parts().size(); ++i) s += (i ? sep : "") + format_body(g, c.parts()[i]);
  return s;
}

inline std::string strip_spaces(std::string_view s) {
  std::string out;
  for (char ch : s)
    if (!std::isspace(static_cast<unsigned char>(ch))) out += ch;
  return out;
}

inline i64 parse_int(std::string_view s, std::string_view context) {
  if (s.empty()) throw ParseError("expected an integer in '" + std::string(context) + "'");
  std::size_t pos = 0;
  bool neg = false;
  if (s[0] == '-' || s[0] == '+') {
    neg = s[0] == '-';
    pos = 1;
  }
  if (pos == s.size()) throw ParseError("expected digits in '" + std::string(context) + "'");
  i64 v = 0;
  for (; pos < s.size(); ++pos) {
    if (!std::isdigit(static_cast<unsigned char>(s[pos])))
      throw ParseError("unexpected character '" + std::string(1, s[pos]) + "' in '" + std::string(context) + "'");
    v = arith::add(arith::mul(v, 10), s[pos] - '0');
  }
  return neg ? -v : v;
}

/// Splits at top-level (outside parentheses) occurrences of `sep`.
inline std::vector<std::string> split_top(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char ch : s) {
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    if (ch == sep && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

}  // namespace detail

inline GroupElement parse_element(const AbGroup& g, std::string_view text) {
  const std::string s = detail::strip_spaces(text);
  if (s.empty()) throw ParseError("empty group element");
  if (s == "1") return g.identity();
  if (s.front() == '(') {
    if (s.back() != ')') throw ParseError("unterminated vector '" + s + "'");
    std::vector<i64> coords;
    for (const auto& part : detail::split_top(s.substr(1, s.size() - 2), ','))
      coords.push_back(detail::parse_int(part, s));
    if (coords.size() != g.dimension())
      throw ParseError("vector '" + s + "' does not have " + std::to_string(g.dimension()) + " coordinates");
    return g.element(std::move(coords));
  }
  std::vector<i64> coords(g.dimension(), 0);
  std::size_t pos = 0;
  while (pos < s.size()) {
    const char ch = s[pos];
    if (ch < 'a' || ch > 'z') throw ParseError("unexpected character '" + std::string(1, ch) + "' in '" + s + "'");
    const auto gen = static_cast<std::size_t>(ch - 'a');
    if (gen >= g.dimension())
      throw ParseError("symbol '" + std::string(1, ch) + "' exceeds the " + std::to_string(g.dimension()) +
                       " generators of " + g.describe());
    ++pos;
    i64 e = 1;
    if (pos < s.size() && s[pos] == '^') {
      std::size_t end = pos + 1;
      if (end < s.size() && (s[end] == '-' || s[end] == '+')) ++end;
      while (end < s.size() && std::isdigit(static_cast<unsigned char>(s[end]))) ++end;
      e = detail::parse_int(std::string_view(s).substr(pos + 1, end - pos - 1), s);
      pos = end;
    }
    coords[gen] = arith::add(coords[gen], e);
  }
  return g.element(std::move(coords));
}

namespace detail {

inline Cell parse_body(const AbGroup& g, const std::string& s) {
  if (s.empty()) return Cell::bar({});
  std::size_t maxrun = 0;
  int depth = 0;
  for (std::size_t i = 0; i < s.size();) {
    if (s[i] == '(') ++depth;
    if (s[i] == ')') --depth;
    if (s[i] == '|' && depth == 0) {
      std::size_t j = i;
      while (j < s.size() && s[j] == '|') ++j;
      maxrun = std::max(maxrun, j - i);
      i = j;
    } else {
      ++i;
    }
  }
  if (maxrun == 0) {
    std::vector<GroupElement> xs;
    for (const auto& tok : split_top(s, ',')) xs.push_back(parse_element(g, tok));
    return Cell::bar(std::move(xs));
  }
  std::vector<std::string> pieces;
  std::string cur;
  depth = 0;
  for (std::size_t i = 0; i < s.size();) {
    if (s[i] == '(') ++depth;
    if (s[i] == ')') --depth;
    if (s[i] == '|' && depth == 0) {
      std::size_t j = i;
      while (j < s.size() && s[j] == '|') ++j;
      if (j - i == maxrun) {
        pieces.push_back(cur);
        cur.clear();
      } else {
        cur.append(s, i, j - i);
      }
      i = j;
    } else {
      cur += s[i++];
    }
  }
  pieces.push_back(cur);
  std::vector<Cell> parts;
  for (const auto& piece : pieces) {
    if (piece.empty()) throw ParseError("empty component in '[" + s + "]'");
    parts.push_back(parse_body(g, piece));
  }
  return Cell::join(static_cast<int>(maxrun), std::move(parts));
}

}  // namespace detail

inline Cell parse_cell(const AbGroup& g, std::string_view text) {
  const std::string s = detail::strip_spaces(text);
  if (s.size() < 2 || s.front() != '[' || s.back() != ']') throw ParseError("cell must be written as [ ... ]");
  if (s.find('[', 1) != std::string::npos) throw ParseError("nested brackets are not part of the cell grammar");
  return detail::parse_body(g, s.substr(1, s.size() - 2));
}

/// "[a,b] - 2[b,a] + ...", or "0".
inline Chain parse_chain(const AbGroup& g, std::string_view text) {
  const std::string s = detail::strip_spaces(text);
  Chain out;
  if (s == "0") return out;
  std::size_t pos = 0;
  if (s.empty()) throw ParseError("empty chain");
  while (pos < s.size()) {
    i64 sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      sign = s[pos] == '-' ? -1 : 1;
      ++pos;
    }
    std::size_t digits = pos;
    while (digits < s.size() && std::isdigit(static_cast<unsigned char>(s[digits]))) ++digits;
    i64 coeff = digits > pos ? detail::parse_int(std::string_view(s).substr(pos, digits - pos), s) : 1;
    pos = digits;
    if (pos < s.size() && s[pos] == '*') ++pos;
    if (pos >= s.size() || s[pos] != '[') throw ParseError("expected '[' at offset " + std::to_string(pos) + " in '" + s + "'");
    const std::size_t close = s.find(']', pos);
    if (close == std::string::npos) throw ParseError("unterminated cell in '" + s + "'");
    out.add(parse_cell(g, std::string_view(s).substr(pos, close - pos + 1)), arith::mul(sign, coeff));
    pos = close + 1;
  }
  return out;
}

inline std::string format_cell(const AbGroup& g, const Cell& c) { return "[" + detail::format_body(g, c) + "]"; }

/// Terms ordered by their printed cell; "0" for the zero chain.
inline std::string format_chain(const AbGroup& g, const Chain& x) {
  if (x.is_zero()) return "0";
  std::vector<std::pair<std::string, i64>> terms;
  for (const auto& [c, v] : x.terms()) terms.emplace_back(format_cell(g, c), v);
  std::sort(terms.begin(), terms.end());
  std::string s;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const auto& [cell, v] = terms[i];
    const i64 a = v < 0 ? -v : v;
    if (i == 0) {
      if (v < 0) s += "-";
    } else {
      s += v < 0 ? " - " : " + ";
    }
    if (a != 1) s += std::to_string(a);
    s += cell;
  }
  return s;
}

}  // namespace weyl::complex
