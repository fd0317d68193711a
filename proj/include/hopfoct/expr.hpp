#pragma once
// Expression language over the hyperoctahedral ring and its charged
// extension: tokenizer, recursive-descent parser, typed evaluator, and
// canonical printers whose output parses back to the same value.
//
// Grammar (columns are 1-based, whitespace ignored between tokens):
//   expr    := term ('+' term)*
//   term    := factor ('o' factor)*
//   factor  := postfix ('.' postfix)*
//   postfix := primary ('^' (INT | '+' | '-'))*
//   primary := 'g' '(' INT ',' INT ')' | 'w' '(' INT ')'
//            | ('one'|'1') '(' INT ')' | 'one+' | 'one-'
//            | ('res'|'tr'|'iota'|'delta') '(' expr ')' | '(' expr ')'
// '^+' / '^-' charge annihilator-basis terms, '^0' maps a plain element to
// its charged image under res, '^k' (k >= 1) is a cup power.

#include <cctype>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "invariants.hpp"

namespace hopfoct {

// ---------------------------------------------------------------------------
// Errors carry the 1-based source column.

struct ExprError : std::runtime_error {
  long column;
  ExprError(const std::string& what, long col)
      : std::runtime_error(what + " at column " + std::to_string(col)),
        column(col) {}
};

// ---------------------------------------------------------------------------
// Tokens.

namespace detail {

enum class Tok {
  Int, LPar, RPar, Comma, Plus, Minus, Dot, Caret, OOp,
  Gamma, W, One, OnePlus, OneMinus, Res, Tr, Iota, Delta, End
};

struct Token {
  Tok kind;
  long value = 0;  // Int payload
  long col = 1;
};

inline std::vector<Token> lex(const std::string& text) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto col = [&] { return static_cast<long>(i) + 1; };
  while (i < text.size()) {
    char c = text[i];
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
      ++i;
      continue;
    }
    long at = col();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < text.size() &&
             std::isdigit(static_cast<unsigned char>(text[j])))
        ++j;
      std::string digits = text.substr(i, j - i);
      // "1(" is the unit spelled as a digit.
      if (digits == "1" && j < text.size() && text[j] == '(') {
        out.push_back({Tok::One, 0, at});
        i = j;
        continue;
      }
      if (digits.size() > 12) throw ExprError("integer too large", at);
      out.push_back({Tok::Int, std::stol(digits), at});
      i = j;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < text.size() &&
             std::isalpha(static_cast<unsigned char>(text[j])))
        ++j;
      std::string word = text.substr(i, j - i);
      i = j;
      if (word == "g") {
        out.push_back({Tok::Gamma, 0, at});
      } else if (word == "w") {
        out.push_back({Tok::W, 0, at});
      } else if (word == "o") {
        out.push_back({Tok::OOp, 0, at});
      } else if (word == "one") {
        // 'one+' / 'one-' are single tokens when the sign is adjacent.
        if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
          out.push_back(
              {text[i] == '+' ? Tok::OnePlus : Tok::OneMinus, 0, at});
          ++i;
        } else {
          out.push_back({Tok::One, 0, at});
        }
      } else if (word == "res") {
        out.push_back({Tok::Res, 0, at});
      } else if (word == "tr") {
        out.push_back({Tok::Tr, 0, at});
      } else if (word == "iota") {
        out.push_back({Tok::Iota, 0, at});
      } else if (word == "delta") {
        out.push_back({Tok::Delta, 0, at});
      } else {
        throw ExprError("unknown word '" + word + "'", at);
      }
      continue;
    }
    switch (c) {
      case '(': out.push_back({Tok::LPar, 0, at}); break;
      case ')': out.push_back({Tok::RPar, 0, at}); break;
      case ',': out.push_back({Tok::Comma, 0, at}); break;
      case '+': out.push_back({Tok::Plus, 0, at}); break;
      case '-': out.push_back({Tok::Minus, 0, at}); break;
      case '.': out.push_back({Tok::Dot, 0, at}); break;
      case '^': out.push_back({Tok::Caret, 0, at}); break;
      default:
        throw ExprError(std::string("unexpected character '") + c + "'", at);
    }
    ++i;
  }
  out.push_back({Tok::End, 0, static_cast<long>(text.size()) + 1});
  return out;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// AST.

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
  enum class Op {
    Gamma, W, One, OnePlus, OneMinus,        // atoms
    ChargePlus, ChargeMinus, ChargeZero, Pow, // postfix
    Cup, Odot, Sum,                           // binary
    Res, Tr, Iota, Delta                      // calls
  };
  Op op;
  long a = 0, b = 0;  // atom arguments / cup exponent
  ExprPtr lhs, rhs;
  long col = 1;
};

namespace detail {

inline ExprPtr mk(Expr e) { return std::make_shared<const Expr>(std::move(e)); }

class Parser {
public:
  explicit Parser(const std::string& text) : toks_(lex(text)) {}

  ExprPtr parse() {
    ExprPtr e = expr();
    if (peek().kind != Tok::End)
      throw ExprError("trailing input", peek().col);
    return e;
  }

private:
  std::vector<Token> toks_;
  std::size_t pos_ = 0;

  const Token& peek() const { return toks_[pos_]; }
  Token take() { return toks_[pos_++]; }
  Token expect(Tok k, const char* what) {
    if (peek().kind != k) throw ExprError(std::string("expected ") + what, peek().col);
    return take();
  }

  ExprPtr expr() {
    ExprPtr e = term();
    while (peek().kind == Tok::Plus) {
      long at = take().col;
      e = mk({Expr::Op::Sum, 0, 0, e, term(), at});
    }
    return e;
  }

  ExprPtr term() {
    ExprPtr e = factor();
    while (peek().kind == Tok::OOp) {
      long at = take().col;
      e = mk({Expr::Op::Odot, 0, 0, e, factor(), at});
    }
    return e;
  }

  ExprPtr factor() {
    ExprPtr e = postfix();
    while (peek().kind == Tok::Dot) {
      long at = take().col;
      e = mk({Expr::Op::Cup, 0, 0, e, postfix(), at});
    }
    return e;
  }

  ExprPtr postfix() {
    ExprPtr e = primary();
    while (peek().kind == Tok::Caret) {
      take();
      const Token& t = peek();
      if (t.kind == Tok::Plus) {
        take();
        e = mk({Expr::Op::ChargePlus, 0, 0, e, nullptr, t.col});
      } else if (t.kind == Tok::Minus) {
        take();
        e = mk({Expr::Op::ChargeMinus, 0, 0, e, nullptr, t.col});
      } else if (t.kind == Tok::Int) {
        take();
        if (t.value == 0)
          e = mk({Expr::Op::ChargeZero, 0, 0, e, nullptr, t.col});
        else
          e = mk({Expr::Op::Pow, 0, t.value, e, nullptr, t.col});
      } else {
        throw ExprError("expected charge or exponent after '^'", t.col);
      }
    }
    return e;
  }

  long intArg() {
    Token t = expect(Tok::Int, "an integer");
    return t.value;
  }

  ExprPtr primary() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Gamma: {
        take();
        expect(Tok::LPar, "'('");
        long k = intArg();
        expect(Tok::Comma, "','");
        long m = intArg();
        expect(Tok::RPar, "')'");
        return mk({Expr::Op::Gamma, k, m, nullptr, nullptr, t.col});
      }
      case Tok::W: {
        take();
        expect(Tok::LPar, "'('");
        long r = intArg();
        expect(Tok::RPar, "')'");
        return mk({Expr::Op::W, r, 0, nullptr, nullptr, t.col});
      }
      case Tok::One: {
        take();
        expect(Tok::LPar, "'('");
        long n = intArg();
        expect(Tok::RPar, "')'");
        return mk({Expr::Op::One, n, 0, nullptr, nullptr, t.col});
      }
      case Tok::OnePlus:
        take();
        return mk({Expr::Op::OnePlus, 0, 0, nullptr, nullptr, t.col});
      case Tok::OneMinus:
        take();
        return mk({Expr::Op::OneMinus, 0, 0, nullptr, nullptr, t.col});
      case Tok::Res:
      case Tok::Tr:
      case Tok::Iota:
      case Tok::Delta: {
        Tok k = take().kind;
        expect(Tok::LPar, "'('");
        ExprPtr inner = expr();
        expect(Tok::RPar, "')'");
        Expr::Op op = k == Tok::Res    ? Expr::Op::Res
                      : k == Tok::Tr   ? Expr::Op::Tr
                      : k == Tok::Iota ? Expr::Op::Iota
                                       : Expr::Op::Delta;
        return mk({op, 0, 0, inner, nullptr, t.col});
      }
      case Tok::LPar: {
        take();
        ExprPtr inner = expr();
        expect(Tok::RPar, "')'");
        return inner;
      }
      default:
        throw ExprError("expected an expression", t.col);
    }
  }
};

}  // namespace detail

inline ExprPtr parseExpr(const std::string& text) {
  return detail::Parser(text).parse();
}

// ---------------------------------------------------------------------------
// Typed evaluation.

using EvalValue = std::variant<Element, ChargedElement, TensorB, ChargedTensor>;

inline const char* kindName(const EvalValue& v) {
  switch (v.index()) {
    case 0: return "element";
    case 1: return "charged element";
    case 2: return "tensor";
    default: return "charged tensor";
  }
}

namespace detail {

inline ChargedElement chargeLift(const Element& e, Charge sign, long col) {
  ChargedElement out;
  for (const Monomial& m : e.terms()) {
    if (!isChargedBasis({m, sign}))
      throw ExprError("term " + monomialStr(m) + " does not admit a charge",
                      col);
    out += ChargedElement::monomial({m, sign});
  }
  return out;
}

}  // namespace detail

inline EvalValue evaluate(const ExprPtr& node) {
  HOPFOCT_REQUIRE(node != nullptr, "empty expression");
  const Expr& e = *node;
  auto fail = [&](const std::string& msg) -> EvalValue {
    throw ExprError(msg, e.col);
  };
  try {
    switch (e.op) {
      case Expr::Op::Gamma:
        return gammaGen(static_cast<int>(e.a), e.b);
      case Expr::Op::W:
        return wGen(e.a);
      case Expr::Op::One:
        return unitB(e.a);
      case Expr::Op::OnePlus:
        return chargedUnit(Charge::Plus);
      case Expr::Op::OneMinus:
        return chargedUnit(Charge::Minus);
      case Expr::Op::ChargePlus:
      case Expr::Op::ChargeMinus: {
        EvalValue v = evaluate(e.lhs);
        if (!std::holds_alternative<Element>(v))
          return fail(std::string("'^") +
                      (e.op == Expr::Op::ChargePlus ? "+" : "-") +
                      "' needs a plain element, got " + kindName(v));
        Charge sign =
            e.op == Expr::Op::ChargePlus ? Charge::Plus : Charge::Minus;
        return detail::chargeLift(std::get<Element>(v), sign, e.col);
      }
      case Expr::Op::ChargeZero: {
        EvalValue v = evaluate(e.lhs);
        if (!std::holds_alternative<Element>(v))
          return fail(std::string("'^0' needs a plain element, got ") +
                      kindName(v));
        return res(std::get<Element>(v));
      }
      case Expr::Op::Pow: {
        EvalValue v = evaluate(e.lhs);
        if (std::holds_alternative<Element>(v)) {
          const Element& x = std::get<Element>(v);
          Element out = x;
          for (long i = 1; i < e.b; ++i) out = cup(out, x);
          return out;
        }
        if (std::holds_alternative<ChargedElement>(v)) {
          const ChargedElement& x = std::get<ChargedElement>(v);
          ChargedElement out = x;
          for (long i = 1; i < e.b; ++i) out = cupCharged(out, x);
          return out;
        }
        return fail(std::string("cup power needs an element, got ") +
                    kindName(v));
      }
      case Expr::Op::Cup: {
        EvalValue l = evaluate(e.lhs), r = evaluate(e.rhs);
        if (std::holds_alternative<Element>(l) &&
            std::holds_alternative<Element>(r))
          return cup(std::get<Element>(l), std::get<Element>(r));
        if (std::holds_alternative<ChargedElement>(l) &&
            std::holds_alternative<ChargedElement>(r))
          return cupCharged(std::get<ChargedElement>(l),
                            std::get<ChargedElement>(r));
        return fail(std::string("'.' needs matching elements, got ") +
                    kindName(l) + " and " + kindName(r));
      }
      case Expr::Op::Odot: {
        EvalValue l = evaluate(e.lhs), r = evaluate(e.rhs);
        if (std::holds_alternative<Element>(l) &&
            std::holds_alternative<Element>(r))
          return transfer(std::get<Element>(l), std::get<Element>(r));
        if (std::holds_alternative<ChargedElement>(l) &&
            std::holds_alternative<ChargedElement>(r))
          return transferCharged(std::get<ChargedElement>(l),
                                 std::get<ChargedElement>(r));
        return fail(std::string("'o' needs matching elements, got ") +
                    kindName(l) + " and " + kindName(r));
      }
      case Expr::Op::Sum: {
        EvalValue l = evaluate(e.lhs), r = evaluate(e.rhs);
        if (l.index() != r.index())
          return fail(std::string("'+' needs matching kinds, got ") +
                      kindName(l) + " and " + kindName(r));
        if (std::holds_alternative<Element>(l))
          return std::get<Element>(l) + std::get<Element>(r);
        if (std::holds_alternative<ChargedElement>(l))
          return std::get<ChargedElement>(l) + std::get<ChargedElement>(r);
        if (std::holds_alternative<TensorB>(l))
          return std::get<TensorB>(l) + std::get<TensorB>(r);
        ChargedTensor t = std::get<ChargedTensor>(l);
        t += std::get<ChargedTensor>(r);
        return t;
      }
      case Expr::Op::Res: {
        EvalValue v = evaluate(e.lhs);
        if (!std::holds_alternative<Element>(v))
          return fail(std::string("res needs a plain element, got ") +
                      kindName(v));
        return res(std::get<Element>(v));
      }
      case Expr::Op::Tr: {
        EvalValue v = evaluate(e.lhs);
        if (!std::holds_alternative<ChargedElement>(v))
          return fail(std::string("tr needs a charged element, got ") +
                      kindName(v));
        return tr(std::get<ChargedElement>(v));
      }
      case Expr::Op::Iota: {
        EvalValue v = evaluate(e.lhs);
        if (!std::holds_alternative<ChargedElement>(v))
          return fail(std::string("iota needs a charged element, got ") +
                      kindName(v));
        return iota(std::get<ChargedElement>(v));
      }
      case Expr::Op::Delta: {
        EvalValue v = evaluate(e.lhs);
        if (std::holds_alternative<Element>(v))
          return coproduct(std::get<Element>(v));
        if (std::holds_alternative<ChargedElement>(v))
          return coproductCharged(std::get<ChargedElement>(v));
        return fail(std::string("delta needs an element, got ") + kindName(v));
      }
    }
  } catch (const std::logic_error& err) {
    throw ExprError(err.what(), e.col);
  }
  throw ExprError("unhandled expression", e.col);  // unreachable
}

inline EvalValue evaluate(const std::string& text) {
  return evaluate(parseExpr(text));
}

// ---------------------------------------------------------------------------
// Canonical printing. Blocks print highest first, units as one(n); every
// printed element parses back to itself.

inline std::string canonicalBlockStr(const GatheredBlock& b) {
  if (b.isUnit()) return "one(" + std::to_string(b.comp) + ")";
  std::string s;
  if (b.w > 0) {
    s += "w(" + std::to_string(b.comp) + ")";
    if (b.w > 1) s += "^" + std::to_string(b.w);
  }
  for (auto [k, a] : b.gamma) {
    if (!s.empty()) s += ".";
    s += "g(" + std::to_string(k) + "," + std::to_string(b.comp >> k) + ")";
    if (a > 1) s += "^" + std::to_string(a);
  }
  return s;
}

inline std::string canonicalMonomialStr(const Monomial& m) {
  if (m.empty()) return "one(0)";
  std::string s;
  for (auto it = m.rbegin(); it != m.rend(); ++it) {
    if (!s.empty()) s += " o ";
    s += canonicalBlockStr(*it);
  }
  return s;
}

inline std::string canonicalChargedStr(const ChargedMonomial& x) {
  if (x.mono.empty()) {
    HOPFOCT_REQUIRE(x.charge != Charge::Zero, "unit carries a sign");
    return x.charge == Charge::Plus ? "one+" : "one-";
  }
  std::string base = canonicalMonomialStr(x.mono);
  // '.' and ' o ' bind before '^', so composite bases need parentheses.
  bool wrap = base.find('.') != std::string::npos ||
              base.find(' ') != std::string::npos;
  if (wrap) base = "(" + base + ")";
  return base + "^" + chargeStr(x.charge);
}

inline std::vector<std::string> canonicalTerms(const Element& e) {
  std::vector<std::string> out;
  for (const Monomial& m : e.terms()) out.push_back(canonicalMonomialStr(m));
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<std::string> canonicalTerms(const ChargedElement& e) {
  std::vector<std::string> out;
  for (const ChargedMonomial& m : e.terms())
    out.push_back(canonicalChargedStr(m));
  std::sort(out.begin(), out.end());
  return out;
}

inline std::string canonicalStr(const Element& e) {
  if (e.isZero()) return "0";
  std::string s;
  for (const std::string& t : canonicalTerms(e)) {
    if (!s.empty()) s += " + ";
    s += t;
  }
  return s;
}

inline std::string canonicalStr(const ChargedElement& e) {
  if (e.isZero()) return "0";
  std::string s;
  for (const std::string& t : canonicalTerms(e)) {
    if (!s.empty()) s += " + ";
    s += t;
  }
  return s;
}

// Tensor terms as printable pairs (tensors are output-only, not expressions).
inline std::vector<std::pair<std::string, std::string>> canonicalTerms(
    const TensorB& t) {
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& [l, r] : t.terms)
    out.push_back({canonicalMonomialStr(l), canonicalMonomialStr(r)});
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<std::pair<std::string, std::string>> canonicalTerms(
    const ChargedTensor& t) {
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& [l, r] : t.terms)
    out.push_back({canonicalChargedStr(l), canonicalChargedStr(r)});
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// AST reprinting (round-trips through parseExpr).

inline std::string exprStr(const ExprPtr& node) {
  HOPFOCT_REQUIRE(node != nullptr, "empty expression");
  const Expr& e = *node;
  auto prec = [](const Expr& x) {
    switch (x.op) {
      case Expr::Op::Sum: return 1;
      case Expr::Op::Odot: return 2;
      case Expr::Op::Cup: return 3;
      case Expr::Op::ChargePlus:
      case Expr::Op::ChargeMinus:
      case Expr::Op::ChargeZero:
      case Expr::Op::Pow: return 4;
      default: return 5;
    }
  };
  auto sub = [&](const ExprPtr& child, int mine) {
    std::string s = exprStr(child);
    if (prec(*child) < mine) s = "(" + s + ")";
    return s;
  };
  switch (e.op) {
    case Expr::Op::Gamma:
      return "g(" + std::to_string(e.a) + "," + std::to_string(e.b) + ")";
    case Expr::Op::W:
      return "w(" + std::to_string(e.a) + ")";
    case Expr::Op::One:
      return "one(" + std::to_string(e.a) + ")";
    case Expr::Op::OnePlus: return "one+";
    case Expr::Op::OneMinus: return "one-";
    case Expr::Op::ChargePlus: return sub(e.lhs, 4) + "^+";
    case Expr::Op::ChargeMinus: return sub(e.lhs, 4) + "^-";
    case Expr::Op::ChargeZero: return sub(e.lhs, 4) + "^0";
    case Expr::Op::Pow: return sub(e.lhs, 4) + "^" + std::to_string(e.b);
    case Expr::Op::Cup: return sub(e.lhs, 3) + "." + sub(e.rhs, 3);
    case Expr::Op::Odot: return sub(e.lhs, 2) + " o " + sub(e.rhs, 2);
    case Expr::Op::Sum: return sub(e.lhs, 1) + " + " + sub(e.rhs, 1);
    case Expr::Op::Res: return "res(" + exprStr(e.lhs) + ")";
    case Expr::Op::Tr: return "tr(" + exprStr(e.lhs) + ")";
    case Expr::Op::Iota: return "iota(" + exprStr(e.lhs) + ")";
    case Expr::Op::Delta: return "delta(" + exprStr(e.lhs) + ")";
  }
  return {};  // unreachable
}

// ---------------------------------------------------------------------------
// Partition parsing and restriction-polynomial printing for the CLI.

inline Partition2 parsePartition(const std::string& text) {
  Partition2 pi;
  std::string body = text;
  if (!body.empty() && body.front() == '(') {
    HOPFOCT_REQUIRE(body.back() == ')', "unbalanced parentheses in partition");
    body = body.substr(1, body.size() - 2);
  }
  std::size_t i = 0;
  while (i < body.size()) {
    while (i < body.size() && (body[i] == ' ' || body[i] == ',')) ++i;
    if (i >= body.size()) break;
    long at = static_cast<long>(i) + 1;
    std::size_t j = i;
    while (j < body.size() && std::isdigit(static_cast<unsigned char>(body[j])))
      ++j;
    if (j == i) throw ExprError("expected a part", at);
    long part = std::stol(body.substr(i, j - i));
    if (part < 1 || (part & (part - 1)) != 0)
      throw ExprError("parts must be powers of two", at);
    int k = 0;
    while ((1L << k) < part) ++k;
    ++pi.mult[k];
    i = j;
  }
  HOPFOCT_REQUIRE(!pi.mult.empty(), "empty partition");
  return pi;
}

// x[i] / y[i,j] with 1-based part indices, terms highest-first, no spaces.
inline std::string restrictStr(const PartitionRing& R, const F2Poly& p) {
  auto name = [&](int id) -> std::string {
    for (std::size_t i = 0; i < R.parts(); ++i) {
      if (id == R.xVar(i)) return "x[" + std::to_string(i + 1) + "]";
      for (int j = 1; j <= R.level(i); ++j)
        if (id == R.yVar(i, j))
          return "y[" + std::to_string(i + 1) + "," + std::to_string(j) + "]";
    }
    HOPFOCT_REQUIRE(false, "variable id outside the partition ring");
    return {};
  };
  std::string s = p.str(name);
  std::erase(s, ' ');
  return s;
}

}  // namespace hopfoct
