#include "oclam/parse.hpp"

#include <cctype>
#include <set>

namespace oclam {

namespace {

enum class Tok {
  Ident, Int, LParen, RParen, LBracket, RBracket, Comma, Colon, Dot,
  Backslash, Slash, Minus, At, SumOp, SmulOp, Lolli, Star, Amp, PlusOp,
  BangOp, End
};

struct Token {
  Tok kind;
  std::string text;
  int line, col;
};

const std::set<std::string>& keywords() {
  static const std::set<std::string> kw = {
      "star", "let1", "tens", "lettens", "unit", "abort", "pair", "fst",
      "snd", "inl", "inr", "case", "bang", "letbang", "I", "Top", "Zero"};
  return kw;
}

std::vector<Token> lex(const std::string& text) {
  std::vector<Token> out;
  int line = 1, col = 1;
  size_t i = 0;
  auto push = [&](Tok k, std::string s) {
    out.push_back({k, std::move(s), line, col});
  };
  while (i < text.size()) {
    char c = text[i];
    if (c == '\n') {
      ++line;
      col = 1;
      ++i;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++col;
      ++i;
      continue;
    }
    if (c == '-' && i + 1 < text.size() && text[i + 1] == '-') {
      while (i < text.size() && text[i] != '\n') ++i;
      continue;
    }
    if (c == '<' && i + 2 < text.size() && text[i + 2] == '>') {
      if (text[i + 1] == '+') {
        push(Tok::SumOp, "<+>");
        i += 3;
        col += 3;
        continue;
      }
      if (text[i + 1] == '.') {
        push(Tok::SmulOp, "<.>");
        i += 3;
        col += 3;
        continue;
      }
    }
    if (c == '-' && i + 1 < text.size() && text[i + 1] == 'o') {
      push(Tok::Lolli, "-o");
      i += 2;
      col += 2;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t j = i;
      while (j < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[j])) ||
              text[j] == '_' || text[j] == '\''))
        ++j;
      push(Tok::Ident, text.substr(i, j - i));
      col += static_cast<int>(j - i);
      i = j;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j])))
        ++j;
      push(Tok::Int, text.substr(i, j - i));
      col += static_cast<int>(j - i);
      i = j;
      continue;
    }
    switch (c) {
      case '(': push(Tok::LParen, "("); break;
      case ')': push(Tok::RParen, ")"); break;
      case '[': push(Tok::LBracket, "["); break;
      case ']': push(Tok::RBracket, "]"); break;
      case ',': push(Tok::Comma, ","); break;
      case ':': push(Tok::Colon, ":"); break;
      case '.': push(Tok::Dot, "."); break;
      case '\\': push(Tok::Backslash, "\\"); break;
      case '/': push(Tok::Slash, "/"); break;
      case '-': push(Tok::Minus, "-"); break;
      case '@': push(Tok::At, "@"); break;
      case '*': push(Tok::Star, "*"); break;
      case '&': push(Tok::Amp, "&"); break;
      case '+': push(Tok::PlusOp, "+"); break;
      case '!': push(Tok::BangOp, "!"); break;
      default:
        throw ParseError(std::string("unexpected character '") + c + "'", line,
                         col);
    }
    ++i;
    ++col;
  }
  out.push_back({Tok::End, "", line, col});
  return out;
}

class Parser {
public:
  Parser(std::vector<Token> toks, const Semiring& ring)
      : toks_(std::move(toks)), ring_(ring) {}

  TermPtr term() {
    TermPtr t = parse_sum();
    expect(Tok::End, "end of input");
    return t;
  }

  TypePtr type() {
    TypePtr t = parse_lolli();
    expect(Tok::End, "end of input");
    return t;
  }

private:
  const Token& peek(int k = 0) const {
    size_t i = pos_ + k;
    return i < toks_.size() ? toks_[i] : toks_.back();
  }
  Token next() { return toks_[std::min(pos_++, toks_.size() - 1)]; }
  bool at(Tok k) const { return peek().kind == k; }
  bool accept(Tok k) {
    if (!at(k)) return false;
    ++pos_;
    return true;
  }
  Token expect(Tok k, const std::string& what) {
    if (!at(k))
      throw ParseError("expected " + what + ", got '" + peek().text + "'",
                       peek().line, peek().col, {what});
    return next();
  }
  [[noreturn]] void fail(const std::string& what) {
    throw ParseError("expected " + what + ", got '" +
                         (peek().kind == Tok::End ? "end of input" : peek().text) +
                         "'",
                     peek().line, peek().col, {what});
  }

  // ---- types -------------------------------------------------------------

  TypePtr parse_lolli() {
    TypePtr left = parse_plus_ty();
    if (accept(Tok::Lolli)) return ty_lolli(left, parse_lolli());
    return left;
  }

  bool at_plus_connective() const {
    return peek().kind == Tok::LParen && peek(1).kind == Tok::PlusOp &&
           peek(2).kind == Tok::RParen;
  }

  TypePtr parse_plus_ty() {
    TypePtr left = parse_with_ty();
    while (at_plus_connective()) {
      pos_ += 3;
      left = ty_plus(left, parse_with_ty());
    }
    return left;
  }

  TypePtr parse_with_ty() {
    TypePtr left = parse_tensor_ty();
    while (accept(Tok::Amp)) left = ty_with(left, parse_tensor_ty());
    return left;
  }

  TypePtr parse_tensor_ty() {
    TypePtr left = parse_bang_ty();
    while (accept(Tok::Star)) left = ty_tensor(left, parse_bang_ty());
    return left;
  }

  TypePtr parse_bang_ty() {
    if (accept(Tok::BangOp)) return ty_bang(parse_bang_ty());
    return parse_atom_ty();
  }

  TypePtr parse_atom_ty() {
    if (at(Tok::Ident)) {
      if (peek().text == "I") { next(); return ty_one(); }
      if (peek().text == "Top") { next(); return ty_top(); }
      if (peek().text == "Zero") { next(); return ty_zero(); }
      fail("a type");
    }
    if (accept(Tok::LParen)) {
      TypePtr t = parse_lolli();
      expect(Tok::RParen, "')'");
      return t;
    }
    fail("a type");
  }

  // ---- scalars -----------------------------------------------------------

  // Rational built from the token stream: [-] INT [/ INT].
  mpq_class parse_rat_tokens() {
    bool neg = accept(Tok::Minus);
    Token n = expect(Tok::Int, "a number");
    mpz_class num(n.text, 10), den(1);
    if (accept(Tok::Slash)) den = mpz_class(expect(Tok::Int, "a denominator").text, 10);
    if (den == 0) throw ParseError("zero denominator", n.line, n.col);
    mpq_class q(num, den);
    q.canonicalize();
    if (neg) q = -q;
    return q;
  }

  Scalar parse_scalar_tokens() {
    switch (ring_.id()) {
      case SemiringId::Trivial:
        expect(Tok::At, "'@'");
        return Scalar::trivial();
      case SemiringId::Nat: {
        if (at(Tok::Minus))
          throw ParseError("naturals have no negative literals", peek().line,
                           peek().col);
        Token n = expect(Tok::Int, "a natural number");
        return Scalar::nat(mpz_class(n.text, 10));
      }
      case SemiringId::Rat:
        return Scalar::rat(parse_rat_tokens());
      case SemiringId::CRat: {
        if (accept(Tok::LParen)) {
          mpq_class re = parse_rat_tokens();
          expect(Tok::Comma, "','");
          mpq_class im = parse_rat_tokens();
          expect(Tok::RParen, "')'");
          return Scalar::crat(re, im);
        }
        return Scalar::crat(parse_rat_tokens(), 0);
      }
    }
    fail("a scalar literal");
  }

  // True when the upcoming tokens could start a scalar literal.
  bool at_scalar_start() const {
    switch (ring_.id()) {
      case SemiringId::Trivial: return at(Tok::At);
      case SemiringId::Nat: return at(Tok::Int);
      case SemiringId::Rat: return at(Tok::Int) || at(Tok::Minus);
      case SemiringId::CRat:
        return at(Tok::Int) || at(Tok::Minus) || at(Tok::LParen);
    }
    return false;
  }

  // ---- terms -------------------------------------------------------------

  TermPtr parse_sum() {
    TermPtr left = parse_smul();
    if (accept(Tok::SumOp)) return mk_sum(left, parse_sum());
    return left;
  }

  TermPtr parse_smul() {
    if (at_scalar_start()) {
      // Backtrack on failure: '(' may open a parenthesized term instead of a
      // complex literal, and the literal must be followed by <.>.
      size_t save = pos_;
      try {
        Scalar a = parse_scalar_tokens();
        if (accept(Tok::SmulOp)) return mk_smul(a, parse_smul());
      } catch (const ParseError&) {
      }
      pos_ = save;
    }
    return parse_app();
  }

  TermPtr parse_app() {
    TermPtr t = parse_atom();
    while (at_atom_start()) t = mk_app(t, parse_atom());
    return t;
  }

  bool at_atom_start() const {
    switch (peek().kind) {
      case Tok::Ident:
      case Tok::LParen:
      case Tok::Backslash:
        return true;
      default:
        return false;
    }
  }

  std::pair<std::string, TypePtr> parse_binder() {
    Token x = expect(Tok::Ident, "a variable");
    if (keywords().count(x.text))
      throw ParseError("'" + x.text + "' is a reserved word", x.line, x.col);
    expect(Tok::Colon, "':'");
    return {x.text, parse_lolli()};
  }

  TermPtr parse_atom() {
    if (accept(Tok::LParen)) {
      TermPtr t = parse_sum();
      expect(Tok::RParen, "')'");
      return t;
    }
    if (accept(Tok::Backslash)) {
      auto [x, a] = parse_binder();
      expect(Tok::Dot, "'.'");
      return mk_lam(x, a, parse_sum());
    }
    Token id = expect(Tok::Ident, "a term");
    const std::string& w = id.text;
    if (!keywords().count(w)) return mk_var(w);

    if (w == "unit") return mk_top();
    if (w == "star") {
      expect(Tok::LParen, "'('");
      Scalar a = parse_scalar_tokens();
      expect(Tok::RParen, "')'");
      return mk_star(a);
    }
    if (w == "let1" || w == "tens" || w == "pair") {
      expect(Tok::LParen, "'('");
      TermPtr t = parse_sum();
      expect(Tok::Comma, "','");
      TermPtr u = parse_sum();
      expect(Tok::RParen, "')'");
      if (w == "let1") return mk_elim_one(t, u);
      if (w == "tens") return mk_tens(t, u);
      return mk_pair(t, u);
    }
    if (w == "abort" || w == "bang") {
      expect(Tok::LParen, "'('");
      TermPtr t = parse_sum();
      expect(Tok::RParen, "')'");
      return w == "abort" ? mk_elim_zero(t) : mk_bang(t);
    }
    if (w == "lettens") {
      expect(Tok::LParen, "'('");
      TermPtr t = parse_sum();
      expect(Tok::Comma, "','");
      auto [x, a] = parse_binder();
      expect(Tok::Comma, "','");
      auto [y, b] = parse_binder();
      if (x == y)
        throw ParseError("lettens binders must be distinct", id.line, id.col);
      expect(Tok::Dot, "'.'");
      TermPtr body = parse_sum();
      expect(Tok::RParen, "')'");
      return mk_elim_tens(t, x, a, y, b, body);
    }
    if (w == "fst" || w == "snd" || w == "letbang") {
      expect(Tok::LParen, "'('");
      TermPtr t = parse_sum();
      expect(Tok::Comma, "','");
      auto [x, a] = parse_binder();
      expect(Tok::Dot, "'.'");
      TermPtr body = parse_sum();
      expect(Tok::RParen, "')'");
      if (w == "fst") return mk_elim_with1(t, x, a, body);
      if (w == "snd") return mk_elim_with2(t, x, a, body);
      return mk_elim_bang(t, x, a, body);
    }
    if (w == "inl" || w == "inr") {
      expect(Tok::LBracket, "'['");
      TypePtr other = parse_lolli();
      expect(Tok::RBracket, "']'");
      expect(Tok::LParen, "'('");
      TermPtr t = parse_sum();
      expect(Tok::RParen, "')'");
      return w == "inl" ? mk_inl(t, other) : mk_inr(t, other);
    }
    if (w == "case") {
      expect(Tok::LParen, "'('");
      TermPtr t = parse_sum();
      expect(Tok::Comma, "','");
      auto [x, a] = parse_binder();
      expect(Tok::Dot, "'.'");
      TermPtr u = parse_sum();
      expect(Tok::Comma, "','");
      auto [y, b] = parse_binder();
      expect(Tok::Dot, "'.'");
      TermPtr v = parse_sum();
      expect(Tok::RParen, "')'");
      return mk_elim_plus(t, x, a, u, y, b, v);
    }
    fail("a term");
  }

  std::vector<Token> toks_;
  const Semiring& ring_;
  size_t pos_ = 0;
};

} // namespace

TermPtr parse_term(const std::string& text, const Semiring& ring) {
  return Parser(lex(text), ring).term();
}

TypePtr parse_type(const std::string& text) {
  return Parser(lex(text), Semiring::nat()).type();
}

TermFile parse_term_file(const std::string& text, const Semiring& ring) {
  TermFile out;
  // `-- type:` headers are comments to the lexer, so they are picked out of
  // the raw text first.
  size_t i = 0;
  while (i < text.size()) {
    size_t line_start = i;
    size_t line_end = text.find('\n', i);
    if (line_end == std::string::npos) line_end = text.size();
    std::string line = text.substr(line_start, line_end - line_start);
    size_t ws = line.find_first_not_of(" \t");
    if (ws == std::string::npos) {
      i = line_end + 1;
      continue;
    }
    if (line.compare(ws, 2, "--") == 0) {
      size_t k = line.find("type:", ws);
      if (k != std::string::npos && !out.pinned_type)
        out.pinned_type = parse_type(line.substr(k + 5));
      i = line_end + 1;
      continue;
    }
    break;
  }
  out.term = parse_term(text.substr(i), ring);
  return out;
}

} // namespace oclam
