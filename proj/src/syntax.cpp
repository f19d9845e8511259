#include "strdiag/syntax.hpp"

#include <cctype>
#include <optional>
#include <set>

#include "strdiag/error.hpp"

namespace strdiag {

namespace {

enum class Tok { Ident, Nat, Semi, Star, LParen, RParen, Colon, Arrow, Rewrite, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t line;
  std::size_t col;
};

const char* tok_name(Tok t) {
  switch (t) {
    case Tok::Ident: return "identifier";
    case Tok::Nat: return "number";
    case Tok::Semi: return "';'";
    case Tok::Star: return "'*'";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::Colon: return "':'";
    case Tok::Arrow: return "'->'";
    case Tok::Rewrite: return "'=>'";
    case Tok::End: return "end of input";
  }
  return "?";
}

[[noreturn]] void fail(std::size_t line, std::size_t col, const std::string& msg) {
  throw Error(Errc::Parse, "line " + std::to_string(line) + ", column " +
                               std::to_string(col) + ": " + msg);
}

bool ident_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}

bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

// Tokens of one line; comments stripped.
std::vector<Token> lex(std::string_view text, std::size_t line) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto col = [&](std::size_t p) { return p + 1; };
  while (i < text.size()) {
    char c = text[i];
    if (c == '#') break;
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    if (ident_start(c)) {
      while (i < text.size() && ident_char(text[i])) ++i;
      out.push_back({Tok::Ident, std::string(text.substr(start, i - start)),
                     line, col(start)});
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      out.push_back({Tok::Nat, std::string(text.substr(start, i - start)), line,
                     col(start)});
      continue;
    }
    Tok kind;
    std::size_t len = 1;
    switch (c) {
      case ';': kind = Tok::Semi; break;
      case '*': kind = Tok::Star; break;
      case '(': kind = Tok::LParen; break;
      case ')': kind = Tok::RParen; break;
      case ':': kind = Tok::Colon; break;
      case '-':
        if (i + 1 < text.size() && text[i + 1] == '>') {
          kind = Tok::Arrow;
          len = 2;
          break;
        }
        fail(line, col(start), "unexpected character '-'");
      case '=':
        if (i + 1 < text.size() && text[i + 1] == '>') {
          kind = Tok::Rewrite;
          len = 2;
          break;
        }
        fail(line, col(start), "unexpected character '='");
      default:
        fail(line, col(start), std::string("unexpected character '") + c + "'");
    }
    out.push_back({kind, std::string(text.substr(start, len)), line, col(start)});
    i += len;
  }
  out.push_back({Tok::End, "", line, col(text.size())});
  return out;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  const Token& peek() const { return toks_[pos_]; }
  bool at(Tok k) const { return peek().kind == k; }

  const Token& expect(Tok k) {
    if (!at(k)) {
      fail(peek().line, peek().col,
           std::string("expected ") + tok_name(k) + ", found " +
               (at(Tok::End) ? tok_name(Tok::End) : "'" + peek().text + "'"));
    }
    return toks_[pos_++];
  }

  std::size_t nat() {
    const Token& t = expect(Tok::Nat);
    try {
      return std::stoul(t.text);
    } catch (const std::exception&) {
      fail(t.line, t.col, "number out of range");
    }
  }

  std::string ident() { return expect(Tok::Ident).text; }

  Term term() {
    Term t = par();
    while (at(Tok::Semi)) {
      ++pos_;
      t = Term::seq(std::move(t), par());
    }
    return t;
  }

  void done() { expect(Tok::End); }

 private:
  Term par() {
    Term t = atom();
    while (at(Tok::Star)) {
      ++pos_;
      t = Term::par(std::move(t), atom());
    }
    return t;
  }

  Term atom() {
    if (at(Tok::LParen)) {
      ++pos_;
      Term t = term();
      expect(Tok::RParen);
      return t;
    }
    if (!at(Tok::Ident)) {
      fail(peek().line, peek().col,
           "expected a term, found " +
               (at(Tok::End) ? std::string(tok_name(Tok::End))
                             : "'" + peek().text + "'"));
    }
    const std::string word = toks_[pos_++].text;
    if (word == "id") return Term::id(nat());
    if (word == "sym") {
      std::size_t n = nat();
      return Term::sym(n, nat());
    }
    if (word == "cup") return Term::cup(nat());
    if (word == "cap") return Term::cap(nat());
    if (word == "fmul") return Term::fmul();
    if (word == "funit") return Term::funit();
    if (word == "fcomul") return Term::fcomul();
    if (word == "fcounit") return Term::fcounit();
    return Term::gen(word);
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

const std::set<std::string, std::less<>> kReserved = {
    "id", "sym", "cup", "cap", "fmul", "funit", "fcomul", "fcounit"};

}  // namespace

Term parse_term(std::string_view text) {
  // Multi-line input is joined; positions refer to the first line.
  std::string flat(text);
  for (char& c : flat) {
    if (c == '\n' || c == '\r') c = ' ';
  }
  Parser p(lex(flat, 1));
  Term t = p.term();
  p.done();
  return t;
}

const RuleDecl* Theory::find_rule(std::string_view name) const {
  for (const auto& r : rules) {
    if (r.name == name) return &r;
  }
  return nullptr;
}

Theory parse_theory(std::string_view text) {
  Theory th;
  std::set<std::string, std::less<>> ruleNames;
  bool sawMode = false;
  bool sawName = false;
  std::size_t line = 0;
  std::size_t begin = 0;
  while (begin <= text.size()) {
    std::size_t end = text.find('\n', begin);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(begin, end - begin);
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
    begin = end + 1;
    ++line;
    Parser p(lex(raw, line));
    if (p.at(Tok::End)) continue;
    const Token head = p.expect(Tok::Ident);
    if (head.text == "theory") {
      if (sawName) fail(head.line, head.col, "duplicate theory header");
      th.name = p.ident();
      sawName = true;
    } else if (head.text == "mode") {
      if (sawMode) fail(head.line, head.col, "duplicate mode pragma");
      const Token& m = p.expect(Tok::Ident);
      if (m.text == "smc") {
        th.mode = Mode::Smc;
      } else if (m.text == "frobenius") {
        th.mode = Mode::Frobenius;
      } else {
        fail(m.line, m.col, "unknown mode '" + m.text + "'");
      }
      sawMode = true;
    } else if (head.text == "gen") {
      const Token name = p.expect(Tok::Ident);
      if (kReserved.count(name.text)) {
        fail(name.line, name.col, "'" + name.text + "' is a reserved word");
      }
      if (th.signature.find(name.text)) {
        fail(name.line, name.col, "duplicate generator '" + name.text + "'");
      }
      p.expect(Tok::Colon);
      std::size_t arity = p.nat();
      p.expect(Tok::Arrow);
      std::size_t coarity = p.nat();
      th.signature.add({name.text, arity, coarity});
    } else if (head.text == "rule") {
      const Token name = p.expect(Tok::Ident);
      if (!ruleNames.insert(name.text).second) {
        fail(name.line, name.col, "duplicate rule '" + name.text + "'");
      }
      p.expect(Tok::Colon);
      Term lhs = p.term();
      p.expect(Tok::Rewrite);
      Term rhs = p.term();
      th.rules.push_back({name.text, std::move(lhs), std::move(rhs), line});
    } else {
      fail(head.line, head.col, "unknown declaration '" + head.text + "'");
    }
    p.done();
  }
  // Typecheck after the whole file is read so rules may precede gens.
  for (const auto& r : th.rules) {
    const std::string where =
        "line " + std::to_string(r.line) + ": rule '" + r.name + "': ";
    try {
      TermType a = typecheck(r.lhs, th.signature, th.mode);
      TermType b = typecheck(r.rhs, th.signature, th.mode);
      if (a != b) {
        throw Error(Errc::TypeMismatch,
                    "sides have types " + std::to_string(a.dom) + "->" +
                        std::to_string(a.cod) + " and " +
                        std::to_string(b.dom) + "->" + std::to_string(b.cod));
      }
    } catch (const Error& e) {
      throw Error(e.code(), where + e.what());
    }
  }
  return th;
}

std::string to_string(const Theory& theory) {
  std::string out;
  if (!theory.name.empty()) out += "theory " + theory.name + "\n";
  out += std::string("mode ") + mode_name(theory.mode) + "\n";
  for (const auto& g : theory.signature.generators()) {
    out += "gen " + g.name + " : " + std::to_string(g.arity) + " -> " +
           std::to_string(g.coarity) + "\n";
  }
  for (const auto& r : theory.rules) {
    out += "rule " + r.name + " : " + to_string(r.lhs) + " => " +
           to_string(r.rhs) + "\n";
  }
  return out;
}

}  // namespace strdiag
