#pragma once

#include <cctype>
#include <string>
#include <utility>
#include <vector>

#include "weylab/errors.hpp"
#include "weylab/orbits.hpp"
#include "weylab/poly.hpp"
#include "weylab/weyl.hpp"

namespace weylab {

struct NegativeExponent : Error { using Error::Error; };

namespace detail {

struct Token {
  enum Kind { Num, X, D, Plus, Minus, Star, Slash, Caret, LParen, RParen, End } kind;
  Int value;         // Num only
  std::size_t pos;
};

inline std::vector<Token> lex_op(const std::string& s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) { ++i; continue; }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      out.push_back({Token::Num, Int(s.substr(i, j - i)), i});
      i = j;
      continue;
    }
    switch (c) {
      case 'x': out.push_back({Token::X, 0, i}); ++i; continue;
      case 'D': out.push_back({Token::D, 0, i}); ++i; continue;
      case '+': out.push_back({Token::Plus, 0, i}); ++i; continue;
      case '-': out.push_back({Token::Minus, 0, i}); ++i; continue;
      case '*': out.push_back({Token::Star, 0, i}); ++i; continue;
      case '/': out.push_back({Token::Slash, 0, i}); ++i; continue;
      case '^': out.push_back({Token::Caret, 0, i}); ++i; continue;
      case '(': out.push_back({Token::LParen, 0, i}); ++i; continue;
      case ')': out.push_back({Token::RParen, 0, i}); ++i; continue;
      default: break;
    }
    // UTF-8 partial-derivative sign, accepted as an input alias for D
    if (s.compare(i, 3, "\xe2\x88\x82") == 0) {
      out.push_back({Token::D, 0, i});
      i += 3;
      continue;
    }
    throw SyntaxError(std::string("unexpected character '") + c + "'", i);
  }
  out.push_back({Token::End, 0, s.size()});
  return out;
}

class OpParser {
 public:
  explicit OpParser(const std::string& s) : toks_(lex_op(s)) {}

  WeylOp<Rat> parse() {
    WeylOp<Rat> e = expr();
    if (cur().kind != Token::End) throw SyntaxError("trailing input", cur().pos);
    return e;
  }

 private:
  const Token& cur() const { return toks_[i_]; }
  Token take() { return toks_[i_++]; }
  bool accept(Token::Kind k) {
    if (cur().kind != k) return false;
    ++i_;
    return true;
  }

  WeylOp<Rat> expr() {
    bool neg = accept(Token::Minus);
    WeylOp<Rat> e = term();
    if (neg) e = -e;
    while (true) {
      if (accept(Token::Plus)) e += term();
      else if (accept(Token::Minus)) e -= term();
      else return e;
    }
  }

  WeylOp<Rat> term() {
    WeylOp<Rat> e = factor();
    while (accept(Token::Star)) e *= factor();
    return e;
  }

  WeylOp<Rat> factor() {
    if (accept(Token::Minus)) return -factor();
    WeylOp<Rat> e = base();
    if (accept(Token::Caret)) {
      if (cur().kind == Token::Minus)
        throw NegativeExponent("negative exponent at position " + std::to_string(cur().pos));
      if (cur().kind != Token::Num) throw SyntaxError("expected integer exponent", cur().pos);
      const Int v = take().value;
      if (v > 64) throw SyntaxError("exponent too large", cur().pos);
      e = op_pow(e, v.convert_to<int>());
    }
    return e;
  }

  WeylOp<Rat> base() {
    const Token t = take();
    switch (t.kind) {
      case Token::Num: {
        Rat v(t.value);
        if (accept(Token::Slash)) {
          if (cur().kind != Token::Num) throw SyntaxError("expected denominator", cur().pos);
          const Int d = take().value;
          if (d == 0) throw SyntaxError("zero denominator", cur().pos);
          v /= d;
        }
        return WeylOp<Rat>::constant(Poly<Rat>::constant(v));
      }
      case Token::X: return WeylOp<Rat>::x();
      case Token::D: return WeylOp<Rat>::d();
      case Token::LParen: {
        WeylOp<Rat> e = expr();
        if (!accept(Token::RParen)) throw SyntaxError("expected ')'", cur().pos);
        return e;
      }
      default: throw SyntaxError("expected a value", t.pos);
    }
  }

  std::vector<Token> toks_;
  std::size_t i_ = 0;
};

}  // namespace detail

inline WeylOp<Rat> parse_op(const std::string& text) { return detail::OpParser(text).parse(); }

inline std::string print_op(const WeylOp<Rat>& a) { return op_to_string(a); }

namespace detail {

inline std::string strip(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

}  // namespace detail

// Word text: `phi1:a,b,c,d; phi2:<poly in D>; phi3:<poly in x>`, semicolon
// separated, applied left to right.
inline AutWord parse_aut_word(const std::string& text) {
  AutWord word;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t semi = text.find(';', pos);
    std::string item = detail::strip(
        semi == std::string::npos ? text.substr(pos) : text.substr(pos, semi - pos));
    pos = semi == std::string::npos ? text.size() + 1 : semi + 1;
    if (item.empty()) continue;
    const std::size_t colon = item.find(':');
    if (colon == std::string::npos) throw SyntaxError("generator needs ':'", 0);
    const std::string name = detail::strip(item.substr(0, colon));
    const std::string args = detail::strip(item.substr(colon + 1));
    if (name == "phi1") {
      std::vector<Rat> v;
      std::size_t p = 0;
      while (p <= args.size()) {
        std::size_t comma = args.find(',', p);
        const std::string tok = detail::strip(
            comma == std::string::npos ? args.substr(p) : args.substr(p, comma - p));
        v.push_back(parse_rational(tok));
        if (comma == std::string::npos) break;
        p = comma + 1;
      }
      if (v.size() != 4) throw SyntaxError("phi1 needs 4 scalars", 0);
      word.push_back(AutGen::g1(v[0], v[1], v[2], v[3]));
    } else if (name == "phi2" || name == "phi3") {
      const WeylOp<Rat> op = parse_op(args);
      if (name == "phi3") {
        if (op.order() > 0) throw SyntaxError("phi3 polynomial must be in x only", 0);
        word.push_back(AutGen::g3(op.coeff(0)));
      } else {
        Poly<Rat> p;
        for (int j = 0; j <= op.order(); ++j) {
          const Poly<Rat> c = op.coeff(j);
          if (!c.is_constant()) throw SyntaxError("phi2 polynomial must be in D only", 0);
          if (!c.is_zero()) p += Poly<Rat>::monomial(c.coeff(0), j);
        }
        word.push_back(AutGen::g2(p));
      }
    } else {
      throw SyntaxError("unknown generator '" + name + "'", 0);
    }
  }
  return word;
}

}  // namespace weylab
