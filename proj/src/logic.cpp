#include "eso/logic.hpp"

#include <cctype>
#include <map>
#include <set>
#include <sstream>

namespace eso {

const char* to_string(Mode m) {
  switch (m) {
    case Mode::Eq: return "eq";
    case Mode::Le: return "le";
    case Mode::Ge: return "ge";
  }
  return "?";
}

Mode parse_mode(const std::string& s) {
  if (s == "eq" || s == "=") return Mode::Eq;
  if (s == "le" || s == "<=") return Mode::Le;
  if (s == "ge" || s == ">=") return Mode::Ge;
  fail(ErrorKind::Parse, "unknown mode '" + s + "'");
}

namespace {

struct Token {
  enum Kind { Ident, Head, Forall, Exists, Dot, LParen, RParen, Comma, And, Or, Not, Implies, Iff, Eq, End };
  Kind kind;
  std::string text;
  size_t pos;
};

std::vector<Token> tokenize(const std::string& src) {
  std::vector<Token> out;
  size_t i = 0;
  auto starts = [&](const char* s) { return src.compare(i, std::char_traits<char>::length(s), s) == 0; };
  while (i < src.size()) {
    char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    size_t at = i;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t j = i;
      while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_'))
        ++j;
      std::string word = src.substr(i, j - i);
      i = j;
      if (word == "exists" && (starts(">=") || starts("<="))) {
        out.push_back({Token::Head, src.substr(i, 2), at});
        i += 2;
      } else if (word == "exists" && i < src.size() && src[i] == '=') {
        out.push_back({Token::Head, "=", at});
        i += 1;
      } else if (word == "exists") {
        out.push_back({Token::Exists, word, at});
      } else if (word == "forall") {
        out.push_back({Token::Forall, word, at});
      } else {
        out.push_back({Token::Ident, word, at});
      }
      continue;
    }
    if (starts("<->")) {
      out.push_back({Token::Iff, "<->", at});
      i += 3;
    } else if (starts("->")) {
      out.push_back({Token::Implies, "->", at});
      i += 2;
    } else {
      Token::Kind k;
      switch (c) {
        case '.': k = Token::Dot; break;
        case '(': k = Token::LParen; break;
        case ')': k = Token::RParen; break;
        case ',': k = Token::Comma; break;
        case '&': k = Token::And; break;
        case '|': k = Token::Or; break;
        case '!': k = Token::Not; break;
        case '=': k = Token::Eq; break;
        default: fail(ErrorKind::Parse, "unexpected character '" + std::string(1, c) + "' at offset " + std::to_string(at));
      }
      out.push_back({k, std::string(1, c), at});
      ++i;
    }
  }
  out.push_back({Token::End, "", src.size()});
  return out;
}

class Parser {
 public:
  explicit Parser(const std::string& src) : toks_(tokenize(src)) {}

  Formula run() {
    Formula f;
    const Token& h = expect(Token::Head, "weighted head 'exists=', 'exists<=' or 'exists>='");
    f.mode = parse_mode(h.text);
    f.set_var = expect(Token::Ident, "set variable").text;
    expect(Token::Dot, "'.'");
    while (peek().kind == Token::Forall || peek().kind == Token::Exists) {
      Quant q = next().kind == Token::Forall ? Quant::Forall : Quant::Exists;
      const Token& v = expect(Token::Ident, "variable name");
      if (vars_.count(v.text) || v.text == f.set_var) error(v, "variable '" + v.text + "' bound twice");
      vars_[v.text] = static_cast<int>(f.prefix.size());
      f.prefix.emplace_back(q, v.text);
      expect(Token::Dot, "'.'");
    }
    set_var_ = f.set_var;
    f.matrix = iff();
    if (peek().kind != Token::End) error(peek(), "trailing input");
    return f;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_++]; }
  [[noreturn]] void error(const Token& t, const std::string& msg) const {
    fail(ErrorKind::Parse, "offset " + std::to_string(t.pos) + ": " + msg);
  }
  const Token& expect(Token::Kind k, const char* what) {
    if (peek().kind != k) error(peek(), std::string("expected ") + what);
    return next();
  }

  Expr iff() {
    Expr l = implies();
    while (peek().kind == Token::Iff) {
      next();
      Expr r = implies();
      l = Expr{Expr::Iff, "", {}, {std::move(l), std::move(r)}};
    }
    return l;
  }
  Expr implies() {
    Expr l = disj();
    if (peek().kind == Token::Implies) {
      next();
      Expr r = implies();
      return Expr{Expr::Implies, "", {}, {std::move(l), std::move(r)}};
    }
    return l;
  }
  Expr disj() {
    Expr l = conj();
    if (peek().kind != Token::Or) return l;
    Expr out{Expr::Or, "", {}, {std::move(l)}};
    while (peek().kind == Token::Or) {
      next();
      out.kids.push_back(conj());
    }
    return out;
  }
  Expr conj() {
    Expr l = unary();
    if (peek().kind != Token::And) return l;
    Expr out{Expr::And, "", {}, {std::move(l)}};
    while (peek().kind == Token::And) {
      next();
      out.kids.push_back(unary());
    }
    return out;
  }
  Expr unary() {
    const Token& t = peek();
    if (t.kind == Token::Not) {
      next();
      return Expr{Expr::Not, "", {}, {unary()}};
    }
    if (t.kind == Token::LParen) {
      next();
      Expr e = iff();
      expect(Token::RParen, "')'");
      return e;
    }
    if (t.kind == Token::Forall || t.kind == Token::Exists || t.kind == Token::Head)
      error(t, "quantifier inside the matrix; input must be prenex");
    if (t.kind != Token::Ident) error(t, "expected an atom");
    next();
    if (t.text == "true" && peek().kind != Token::LParen) return Expr{Expr::True, "", {}, {}};
    if (t.text == "false" && peek().kind != Token::LParen) return Expr{Expr::False, "", {}, {}};
    if (peek().kind == Token::LParen) {
      next();
      std::vector<int> args;
      if (peek().kind != Token::RParen) {
        args.push_back(variable());
        while (peek().kind == Token::Comma) {
          next();
          args.push_back(variable());
        }
      }
      expect(Token::RParen, "')'");
      if (t.text == set_var_) {
        if (args.size() != 1) error(t, "set variable '" + t.text + "' used with arity " + std::to_string(args.size()));
        return Expr{Expr::Member, t.text, std::move(args), {}};
      }
      if (vars_.count(t.text)) error(t, "'" + t.text + "' is a first-order variable, not a relation");
      return Expr{Expr::Rel, t.text, std::move(args), {}};
    }
    --pos_;
    int a = variable();
    expect(Token::Eq, "'=' or '('");
    int b = variable();
    return Expr{Expr::Equal, "", {a, b}, {}};
  }
  int variable() {
    const Token& t = expect(Token::Ident, "variable");
    auto it = vars_.find(t.text);
    if (it == vars_.end()) {
      if (t.text == set_var_) error(t, "set variable '" + t.text + "' used as a term");
      error(t, "unbound variable '" + t.text + "'");
    }
    return it->second;
  }

  std::vector<Token> toks_;
  size_t pos_ = 0;
  std::map<std::string, int> vars_;
  std::string set_var_;
};

const char* head_text(Mode m) {
  switch (m) {
    case Mode::Eq: return "exists=";
    case Mode::Le: return "exists<=";
    case Mode::Ge: return "exists>=";
  }
  return "?";
}

void print_expr(const Expr& e, const Formula& f, std::ostream& out) {
  auto var = [&](int i) -> const std::string& { return f.prefix[i].second; };
  auto infix = [&](const char* op) {
    out << '(';
    for (size_t i = 0; i < e.kids.size(); ++i) {
      if (i) out << ' ' << op << ' ';
      print_expr(e.kids[i], f, out);
    }
    out << ')';
  };
  switch (e.kind) {
    case Expr::True: out << "true"; break;
    case Expr::False: out << "false"; break;
    case Expr::Rel:
    case Expr::Member:
      out << (e.kind == Expr::Member ? f.set_var : e.name) << '(';
      for (size_t i = 0; i < e.args.size(); ++i) out << (i ? "," : "") << var(e.args[i]);
      out << ')';
      break;
    case Expr::Equal: out << var(e.args[0]) << '=' << var(e.args[1]); break;
    case Expr::Not:
      out << '!';
      print_expr(e.kids[0], f, out);
      break;
    case Expr::And: infix("&"); break;
    case Expr::Or: infix("|"); break;
    case Expr::Implies: infix("->"); break;
    case Expr::Iff: infix("<->"); break;
  }
}

void collect_relations(const Expr& e, std::map<std::string, size_t>& out) {
  if (e.kind == Expr::Rel) {
    auto [it, fresh] = out.emplace(e.name, e.args.size());
    if (!fresh && it->second != e.args.size())
      fail(ErrorKind::Parse, "relation '" + e.name + "' used with inconsistent arities");
  }
  for (const auto& k : e.kids) collect_relations(k, out);
}

}  // namespace

Formula parse_formula(const std::string& text) {
  Formula f = Parser(text).run();
  std::map<std::string, size_t> rels;
  collect_relations(f.matrix, rels);
  return f;
}

std::string print_formula(const Formula& f) {
  std::ostringstream out;
  out << head_text(f.mode) << ' ' << f.set_var << " . ";
  for (const auto& [q, v] : f.prefix) out << (q == Quant::Forall ? "forall " : "exists ") << v << " . ";
  print_expr(f.matrix, f, out);
  return out.str();
}

Pattern extract_pattern(const Formula& f) {
  Pattern p{f.mode, ""};
  for (const auto& [q, v] : f.prefix) p.word += q == Quant::Forall ? 'a' : 'e';
  return p;
}

bool is_subsequence(const std::string& p, const std::string& q) {
  size_t i = 0;
  for (char c : q)
    if (i < p.size() && p[i] == c) ++i;
  return i == p.size();
}

bool in_e_star_a(const std::string& w) {
  size_t e = 0;
  while (e < w.size() && w[e] == 'e') ++e;
  return e == w.size() || (e + 1 == w.size() && w[e] == 'a');
}

bool in_e_star_a_star(const std::string& w) {
  size_t i = 0;
  while (i < w.size() && w[i] == 'e') ++i;
  while (i < w.size() && w[i] == 'a') ++i;
  return i == w.size();
}

bool below_ae(const std::string& w) { return w.empty() || w == "a" || w == "e" || w == "ae"; }

void check_signature(const Formula& f, const Structure& s) {
  std::map<std::string, size_t> rels;
  collect_relations(f.matrix, rels);
  for (const auto& [name, arity] : rels) {
    int have = s.arity_of(name);
    if (have < 0) fail(ErrorKind::Invalid, "signature mismatch: structure has no relation '" + name + "'");
    if (static_cast<size_t>(have) != arity)
      fail(ErrorKind::Invalid, "signature mismatch: relation '" + name + "' has arity " + std::to_string(have));
  }
}

bool eval_matrix(const Formula& f, const Structure& s, const std::vector<int>& assignment,
                 const std::vector<char>& set_value) {
  if (assignment.size() < f.prefix.size()) fail(ErrorKind::Invalid, "assignment misses prefix variables");
  check_signature(f, s);
  auto rel = [&](const std::string& name, const Tuple& t) { return s.holds(name, t); };
  auto mem = [&](int u) { return u < static_cast<int>(set_value.size()) && set_value[u] != 0; };
  return eval_expr(f.matrix, assignment, rel, mem);
}

}  // namespace eso
