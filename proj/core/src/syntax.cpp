#include "lpf/syntax.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <utility>

namespace lpf {

namespace {

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

bool is_keyword(const std::string& s) {
  return s == "forall" || s == "exists" || s == "F" || s == "T";
}

}  // namespace

ParseError::ParseError(const std::string& msg, std::size_t pos)
    : std::runtime_error("parse error at " + std::to_string(pos + 1) + ": " + msg), pos_(pos) {}

void Signature::check_name(const std::string& name, int arity) const {
  if (name.empty() || !is_ident_start(name[0]) ||
      !std::all_of(name.begin(), name.end(), is_ident_char)) {
    throw SignatureError("invalid symbol name '" + name + "'");
  }
  if (is_keyword(name)) throw SignatureError("'" + name + "' is reserved");
  if (name == "=") throw SignatureError("'=' is reserved");
  if (arity < 0) throw SignatureError("negative arity for '" + name + "'");
  if (declared(name)) throw SignatureError("duplicate symbol '" + name + "'");
}

void Signature::add_fun(const std::string& name, int arity) {
  check_name(name, arity);
  funs_[name] = arity;
}

void Signature::add_pred(const std::string& name, int arity) {
  check_name(name, arity);
  preds_[name] = arity;
}

std::optional<int> Signature::fun_arity(const std::string& name) const {
  auto it = funs_.find(name);
  if (it == funs_.end()) return std::nullopt;
  return it->second;
}

std::optional<int> Signature::pred_arity(const std::string& name) const {
  auto it = preds_.find(name);
  if (it == preds_.end()) return std::nullopt;
  return it->second;
}

bool Signature::declared(const std::string& name) const {
  return funs_.count(name) != 0 || preds_.count(name) != 0;
}

Signature parse_signature(std::istream& in) {
  Signature sig;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string kind, decl;
    if (!(ls >> kind)) continue;
    if (!(ls >> decl)) {
      throw SignatureError("line " + std::to_string(lineno) + ": missing declaration");
    }
    std::string extra;
    if (ls >> extra) {
      throw SignatureError("line " + std::to_string(lineno) + ": trailing input '" + extra + "'");
    }
    auto slash = decl.find('/');
    if (slash == std::string::npos) {
      throw SignatureError("line " + std::to_string(lineno) + ": expected name/arity");
    }
    std::string name = decl.substr(0, slash);
    int arity = 0;
    try {
      std::size_t used = 0;
      arity = std::stoi(decl.substr(slash + 1), &used);
      if (used != decl.size() - slash - 1) throw std::invalid_argument("");
    } catch (const std::exception&) {
      throw SignatureError("line " + std::to_string(lineno) + ": bad arity in '" + decl + "'");
    }
    try {
      if (kind == "fun") {
        sig.add_fun(name, arity);
      } else if (kind == "pred") {
        sig.add_pred(name, arity);
      } else {
        throw SignatureError("expected 'fun' or 'pred', got '" + kind + "'");
      }
    } catch (const SignatureError& e) {
      throw SignatureError("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return sig;
}

Signature parse_signature_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SignatureError("cannot open signature file '" + path + "'");
  return parse_signature(in);
}

std::string format_signature(const Signature& sig) {
  std::string out;
  for (const auto& [name, arity] : sig.funs()) {
    out += "fun " + name + "/" + std::to_string(arity) + "\n";
  }
  for (const auto& [name, arity] : sig.preds()) {
    out += "pred " + name + "/" + std::to_string(arity) + "\n";
  }
  return out;
}

TermPtr var(std::string name) {
  return std::make_shared<Term>(Term{Term::Kind::Var, std::move(name), {}});
}

TermPtr app(std::string fn, std::vector<TermPtr> args) {
  return std::make_shared<Term>(Term{Term::Kind::App, std::move(fn), std::move(args)});
}

namespace {

FormulaPtr make(Formula::Kind k, std::string name, std::vector<TermPtr> terms, FormulaPtr l,
                FormulaPtr r) {
  return std::make_shared<Formula>(
      Formula{k, std::move(name), std::move(terms), std::move(l), std::move(r)});
}

}  // namespace

FormulaPtr falsum() { return make(Formula::Kind::Falsum, "", {}, nullptr, nullptr); }
FormulaPtr verum() { return neg(falsum()); }
FormulaPtr pred(std::string name, std::vector<TermPtr> args) {
  return make(Formula::Kind::Pred, std::move(name), std::move(args), nullptr, nullptr);
}
FormulaPtr eq(TermPtr l, TermPtr r) {
  return make(Formula::Kind::Eq, "", {std::move(l), std::move(r)}, nullptr, nullptr);
}
FormulaPtr neg(FormulaPtr a) {
  return make(Formula::Kind::Not, "", {}, std::move(a), nullptr);
}
FormulaPtr conj(FormulaPtr l, FormulaPtr r) {
  return make(Formula::Kind::And, "", {}, std::move(l), std::move(r));
}
FormulaPtr disj(FormulaPtr l, FormulaPtr r) {
  return make(Formula::Kind::Or, "", {}, std::move(l), std::move(r));
}
FormulaPtr imp(FormulaPtr l, FormulaPtr r) {
  return make(Formula::Kind::Imp, "", {}, std::move(l), std::move(r));
}
FormulaPtr forall(std::string x, FormulaPtr body) {
  return make(Formula::Kind::Forall, std::move(x), {}, std::move(body), nullptr);
}
FormulaPtr exists(std::string x, FormulaPtr body) {
  return make(Formula::Kind::Exists, std::move(x), {}, std::move(body), nullptr);
}

bool term_equal(const Term& a, const Term& b) {
  if (a.kind != b.kind || a.name != b.name || a.args.size() != b.args.size()) return false;
  for (std::size_t i = 0; i < a.args.size(); ++i) {
    if (!term_equal(*a.args[i], *b.args[i])) return false;
  }
  return true;
}

namespace {

using BinderEnv = std::vector<std::pair<std::string, std::string>>;

// Innermost binder index for a name, scanning the given side of the pairs.
std::ptrdiff_t binder_index(const BinderEnv& env, const std::string& name, bool left) {
  for (std::ptrdiff_t i = static_cast<std::ptrdiff_t>(env.size()) - 1; i >= 0; --i) {
    const std::string& bound = left ? env[i].first : env[i].second;
    if (bound == name) return i;
  }
  return -1;
}

bool alpha_terms(const Term& a, const Term& b, const BinderEnv& env) {
  if (a.kind != b.kind) return false;
  if (a.kind == Term::Kind::Var) {
    std::ptrdiff_t ia = binder_index(env, a.name, true);
    std::ptrdiff_t ib = binder_index(env, b.name, false);
    if (ia != ib) return false;
    return ia >= 0 || a.name == b.name;
  }
  if (a.name != b.name || a.args.size() != b.args.size()) return false;
  for (std::size_t i = 0; i < a.args.size(); ++i) {
    if (!alpha_terms(*a.args[i], *b.args[i], env)) return false;
  }
  return true;
}

bool alpha_rec(const Formula& a, const Formula& b, BinderEnv& env) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case Formula::Kind::Falsum:
      return true;
    case Formula::Kind::Pred:
      if (a.name != b.name || a.terms.size() != b.terms.size()) return false;
      for (std::size_t i = 0; i < a.terms.size(); ++i) {
        if (!alpha_terms(*a.terms[i], *b.terms[i], env)) return false;
      }
      return true;
    case Formula::Kind::Eq:
      return alpha_terms(*a.terms[0], *b.terms[0], env) &&
             alpha_terms(*a.terms[1], *b.terms[1], env);
    case Formula::Kind::Not:
      return alpha_rec(*a.lhs, *b.lhs, env);
    case Formula::Kind::And:
    case Formula::Kind::Or:
    case Formula::Kind::Imp:
      return alpha_rec(*a.lhs, *b.lhs, env) && alpha_rec(*a.rhs, *b.rhs, env);
    case Formula::Kind::Forall:
    case Formula::Kind::Exists: {
      env.emplace_back(a.name, b.name);
      bool ok = alpha_rec(*a.lhs, *b.lhs, env);
      env.pop_back();
      return ok;
    }
  }
  return false;
}

}  // namespace

bool alpha_equal(const Formula& a, const Formula& b) {
  BinderEnv env;
  return alpha_rec(a, b, env);
}

namespace {

void collect_free(const Term& t, const std::set<std::string>& bound, std::set<std::string>& out) {
  if (t.kind == Term::Kind::Var) {
    if (!bound.count(t.name)) out.insert(t.name);
    return;
  }
  for (const auto& arg : t.args) collect_free(*arg, bound, out);
}

void collect_free(const Formula& f, std::set<std::string>& bound, std::set<std::string>& out) {
  switch (f.kind) {
    case Formula::Kind::Falsum:
      return;
    case Formula::Kind::Pred:
    case Formula::Kind::Eq:
      for (const auto& t : f.terms) collect_free(*t, bound, out);
      return;
    case Formula::Kind::Not:
      collect_free(*f.lhs, bound, out);
      return;
    case Formula::Kind::And:
    case Formula::Kind::Or:
    case Formula::Kind::Imp:
      collect_free(*f.lhs, bound, out);
      collect_free(*f.rhs, bound, out);
      return;
    case Formula::Kind::Forall:
    case Formula::Kind::Exists: {
      bool added = bound.insert(f.name).second;
      collect_free(*f.lhs, bound, out);
      if (added) bound.erase(f.name);
      return;
    }
  }
}

}  // namespace

std::set<std::string> free_vars(const Term& t) {
  std::set<std::string> bound, out;
  collect_free(t, bound, out);
  return out;
}

std::set<std::string> free_vars(const Formula& f) {
  std::set<std::string> bound, out;
  collect_free(f, bound, out);
  return out;
}

std::set<std::string> free_vars(const std::vector<FormulaPtr>& fs) {
  std::set<std::string> bound, out;
  for (const auto& f : fs) collect_free(*f, bound, out);
  return out;
}

namespace {

std::string fresh_variant(const std::string& base, const std::set<std::string>& avoid) {
  std::string candidate = base;
  do {
    candidate += '\'';
  } while (avoid.count(candidate));
  return candidate;
}

}  // namespace

TermPtr substitute(const std::string& x, const TermPtr& t, const TermPtr& e) {
  if (e->kind == Term::Kind::Var) return e->name == x ? t : e;
  std::vector<TermPtr> args;
  args.reserve(e->args.size());
  for (const auto& a : e->args) args.push_back(substitute(x, t, a));
  return app(e->name, std::move(args));
}

FormulaPtr substitute(const std::string& x, const TermPtr& t, const FormulaPtr& e) {
  switch (e->kind) {
    case Formula::Kind::Falsum:
      return e;
    case Formula::Kind::Pred:
    case Formula::Kind::Eq: {
      std::vector<TermPtr> terms;
      terms.reserve(e->terms.size());
      for (const auto& a : e->terms) terms.push_back(substitute(x, t, a));
      return e->kind == Formula::Kind::Pred ? pred(e->name, std::move(terms))
                                            : eq(terms[0], terms[1]);
    }
    case Formula::Kind::Not:
      return neg(substitute(x, t, e->lhs));
    case Formula::Kind::And:
      return conj(substitute(x, t, e->lhs), substitute(x, t, e->rhs));
    case Formula::Kind::Or:
      return disj(substitute(x, t, e->lhs), substitute(x, t, e->rhs));
    case Formula::Kind::Imp:
      return imp(substitute(x, t, e->lhs), substitute(x, t, e->rhs));
    case Formula::Kind::Forall:
    case Formula::Kind::Exists: {
      if (e->name == x) return e;
      std::set<std::string> body_free = free_vars(*e->lhs);
      if (!body_free.count(x)) return e;
      std::string bound = e->name;
      FormulaPtr body = e->lhs;
      std::set<std::string> t_free = free_vars(*t);
      if (t_free.count(bound)) {
        std::set<std::string> avoid = body_free;
        avoid.insert(t_free.begin(), t_free.end());
        avoid.insert(x);
        std::string renamed = fresh_variant(bound, avoid);
        body = substitute(bound, var(renamed), body);
        bound = renamed;
      }
      FormulaPtr sub = substitute(x, t, body);
      return e->kind == Formula::Kind::Forall ? forall(bound, sub) : exists(bound, sub);
    }
  }
  return e;
}

bool is_propositional(const Formula& f) {
  switch (f.kind) {
    case Formula::Kind::Falsum:
      return true;
    case Formula::Kind::Pred:
      return f.terms.empty();
    case Formula::Kind::Not:
      return is_propositional(*f.lhs);
    case Formula::Kind::And:
    case Formula::Kind::Or:
    case Formula::Kind::Imp:
      return is_propositional(*f.lhs) && is_propositional(*f.rhs);
    default:
      return false;
  }
}

namespace {

void collect_symbols(const Term& t, SymbolUse& out) {
  if (t.kind == Term::Kind::App) {
    out.funs[t.name] = static_cast<int>(t.args.size());
    for (const auto& a : t.args) collect_symbols(*a, out);
  }
}

void collect_symbols(const Formula& f, SymbolUse& out) {
  switch (f.kind) {
    case Formula::Kind::Falsum:
      return;
    case Formula::Kind::Pred:
      out.preds[f.name] = static_cast<int>(f.terms.size());
      for (const auto& t : f.terms) collect_symbols(*t, out);
      return;
    case Formula::Kind::Eq:
      out.uses_eq = true;
      collect_symbols(*f.terms[0], out);
      collect_symbols(*f.terms[1], out);
      return;
    case Formula::Kind::Not:
      collect_symbols(*f.lhs, out);
      return;
    case Formula::Kind::And:
    case Formula::Kind::Or:
    case Formula::Kind::Imp:
      collect_symbols(*f.lhs, out);
      collect_symbols(*f.rhs, out);
      return;
    case Formula::Kind::Forall:
    case Formula::Kind::Exists:
      collect_symbols(*f.lhs, out);
      return;
  }
}

}  // namespace

SymbolUse occurring_symbols(const std::vector<FormulaPtr>& fs) {
  SymbolUse out;
  for (const auto& f : fs) collect_symbols(*f, out);
  return out;
}

// ---------------------------------------------------------------------------
// Lexer and parser
// ---------------------------------------------------------------------------

namespace {

struct Token {
  enum class K { Ident, LPar, RPar, Comma, Dot, Tilde, And, Or, Imp, Iff, Eq, Neq, End };
  K kind;
  std::string text;
  std::size_t pos;
};

std::vector<Token> lex(std::string_view text) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto push = [&](Token::K k, std::size_t pos, std::string t = "") {
    out.push_back(Token{k, std::move(t), pos});
  };
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    std::size_t pos = i;
    if (is_ident_start(c)) {
      std::size_t j = i + 1;
      while (j < text.size() && is_ident_char(text[j])) ++j;
      push(Token::K::Ident, pos, std::string(text.substr(i, j - i)));
      i = j;
      continue;
    }
    switch (c) {
      case '(': push(Token::K::LPar, pos); ++i; continue;
      case ')': push(Token::K::RPar, pos); ++i; continue;
      case ',': push(Token::K::Comma, pos); ++i; continue;
      case '.': push(Token::K::Dot, pos); ++i; continue;
      case '~': push(Token::K::Tilde, pos); ++i; continue;
      case '=': push(Token::K::Eq, pos); ++i; continue;
      case '/':
        if (i + 1 < text.size() && text[i + 1] == '\\') {
          push(Token::K::And, pos);
          i += 2;
          continue;
        }
        throw ParseError("unexpected '/'", pos);
      case '\\':
        if (i + 1 < text.size() && text[i + 1] == '/') {
          push(Token::K::Or, pos);
          i += 2;
          continue;
        }
        throw ParseError("unexpected '\\'", pos);
      case '-':
        if (i + 1 < text.size() && text[i + 1] == '>') {
          push(Token::K::Imp, pos);
          i += 2;
          continue;
        }
        throw ParseError("unexpected '-'", pos);
      case '<':
        if (i + 2 < text.size() && text[i + 1] == '-' && text[i + 2] == '>') {
          push(Token::K::Iff, pos);
          i += 3;
          continue;
        }
        throw ParseError("unexpected '<'", pos);
      case '!':
        if (i + 1 < text.size() && text[i + 1] == '=') {
          push(Token::K::Neq, pos);
          i += 2;
          continue;
        }
        throw ParseError("unexpected '!'", pos);
      default:
        throw ParseError(std::string("unexpected character '") + c + "'", pos);
    }
  }
  push(Token::K::End, text.size());
  return out;
}

class Parser {
 public:
  Parser(std::string_view text, const Signature& sig) : sig_(sig), toks_(lex(text)) {}

  FormulaPtr formula() {
    FormulaPtr f = parse_iff();
    expect_end();
    return f;
  }

  TermPtr term() {
    TermPtr t = parse_term();
    expect_end();
    return t;
  }

 private:
  const Token& cur() const { return toks_[i_]; }
  void advance() { ++i_; }
  bool at(Token::K k) const { return cur().kind == k; }

  void expect(Token::K k, const char* what) {
    if (!at(k)) throw ParseError(std::string("expected ") + what, cur().pos);
    advance();
  }

  void expect_end() {
    if (!at(Token::K::End)) throw ParseError("unexpected trailing input", cur().pos);
  }

  FormulaPtr parse_iff() {
    FormulaPtr l = parse_imp();
    if (!at(Token::K::Iff)) return l;
    advance();
    FormulaPtr r = parse_imp();
    if (at(Token::K::Iff)) throw ParseError("'<->' does not associate; parenthesize", cur().pos);
    // A <-> B stands for (A -> B) /\ (B -> A)
    return conj(imp(l, r), imp(r, l));
  }

  FormulaPtr parse_imp() {
    FormulaPtr l = parse_or();
    if (!at(Token::K::Imp)) return l;
    advance();
    return imp(std::move(l), parse_imp());
  }

  FormulaPtr parse_or() {
    FormulaPtr l = parse_and();
    while (at(Token::K::Or)) {
      advance();
      l = disj(std::move(l), parse_and());
    }
    return l;
  }

  FormulaPtr parse_and() {
    FormulaPtr l = parse_unary();
    while (at(Token::K::And)) {
      advance();
      l = conj(std::move(l), parse_unary());
    }
    return l;
  }

  FormulaPtr parse_unary() {
    if (at(Token::K::Tilde)) {
      advance();
      return neg(parse_unary());
    }
    if (at(Token::K::Ident) && (cur().text == "forall" || cur().text == "exists")) {
      return parse_quantifier();
    }
    return parse_primary();
  }

  FormulaPtr parse_quantifier() {
    bool universal = cur().text == "forall";
    advance();
    std::vector<std::string> binders;
    for (;;) {
      if (!at(Token::K::Ident)) throw ParseError("expected bound variable", cur().pos);
      const std::string& name = cur().text;
      if (is_keyword(name)) throw ParseError("cannot bind '" + name + "'", cur().pos);
      if (sig_.declared(name)) {
        throw ParseError("cannot bind declared symbol '" + name + "'", cur().pos);
      }
      binders.push_back(name);
      advance();
      if (at(Token::K::Comma)) {
        advance();
        continue;
      }
      break;
    }
    expect(Token::K::Dot, "'.'");
    // The body extends as far as possible to the right.
    FormulaPtr body = parse_iff();
    for (auto it = binders.rbegin(); it != binders.rend(); ++it) {
      body = universal ? forall(*it, std::move(body)) : exists(*it, std::move(body));
    }
    return body;
  }

  FormulaPtr parse_primary() {
    if (at(Token::K::LPar)) {
      advance();
      FormulaPtr f = parse_iff();
      expect(Token::K::RPar, "')'");
      return f;
    }
    if (!at(Token::K::Ident)) throw ParseError("expected a formula", cur().pos);
    const std::string name = cur().text;
    std::size_t pos = cur().pos;
    if (name == "F") {
      advance();
      return falsum();
    }
    if (name == "T") {
      advance();
      return verum();
    }
    if (name == "forall" || name == "exists") {
      throw ParseError("quantifier not allowed here", pos);
    }
    if (auto arity = sig_.pred_arity(name)) {
      advance();
      std::vector<TermPtr> args = parse_args(name, *arity, pos);
      return pred(name, std::move(args));
    }
    // Otherwise the atom must be an equality between terms.
    TermPtr l = parse_term();
    if (at(Token::K::Eq)) {
      advance();
      return eq(std::move(l), parse_term());
    }
    if (at(Token::K::Neq)) {
      advance();
      // t1 != t2 stands for ~(t1 = t2)
      return neg(eq(std::move(l), parse_term()));
    }
    throw ParseError("term must be part of an equality; expected '=' or '!='", cur().pos);
  }

  std::vector<TermPtr> parse_args(const std::string& name, int arity, std::size_t pos) {
    std::vector<TermPtr> args;
    if (arity == 0) {
      if (at(Token::K::LPar)) {
        throw ParseError("'" + name + "' takes no arguments", cur().pos);
      }
      return args;
    }
    expect(Token::K::LPar, "'('");
    for (;;) {
      args.push_back(parse_term());
      if (at(Token::K::Comma)) {
        advance();
        continue;
      }
      break;
    }
    expect(Token::K::RPar, "')'");
    if (static_cast<int>(args.size()) != arity) {
      throw ParseError("'" + name + "' expects " + std::to_string(arity) + " argument(s), got " +
                           std::to_string(args.size()),
                       pos);
    }
    return args;
  }

  TermPtr parse_term() {
    if (!at(Token::K::Ident)) throw ParseError("expected a term", cur().pos);
    const std::string name = cur().text;
    std::size_t pos = cur().pos;
    if (is_keyword(name)) throw ParseError("'" + name + "' is not a term", pos);
    if (sig_.pred_arity(name)) {
      throw ParseError("predicate symbol '" + name + "' used as a term", pos);
    }
    if (auto arity = sig_.fun_arity(name)) {
      advance();
      std::vector<TermPtr> args = parse_args(name, *arity, pos);
      return app(name, std::move(args));
    }
    advance();
    return var(name);
  }

  const Signature& sig_;
  std::vector<Token> toks_;
  std::size_t i_ = 0;
};

}  // namespace

TermPtr parse_term(std::string_view text, const Signature& sig) {
  return Parser(text, sig).term();
}

FormulaPtr parse_formula(std::string_view text, const Signature& sig) {
  return Parser(text, sig).formula();
}

// ---------------------------------------------------------------------------
// Printing
// ---------------------------------------------------------------------------

namespace {

void print_term(const Term& t, std::string& out) {
  out += t.name;
  if (t.kind == Term::Kind::App && !t.args.empty()) {
    out += '(';
    for (std::size_t i = 0; i < t.args.size(); ++i) {
      if (i) out += ", ";
      print_term(*t.args[i], out);
    }
    out += ')';
  }
}

// Binding strength: -> is 0, \/ is 1, /\ is 2, everything else is atomic.
int level_of(const Formula& f) {
  switch (f.kind) {
    case Formula::Kind::Imp: return 0;
    case Formula::Kind::Or: return 1;
    case Formula::Kind::And: return 2;
    default: return 3;
  }
}

// `rightmost` is true when the formula extends to the end of its enclosing
// group; only there may an unparenthesized quantifier appear, since its
// scope runs as far right as possible.
void print(const Formula& f, int min_level, bool rightmost, std::string& out) {
  bool quant = f.kind == Formula::Kind::Forall || f.kind == Formula::Kind::Exists;
  bool parens = level_of(f) < min_level || (quant && !rightmost);
  if (parens) {
    out += '(';
    min_level = 0;
    rightmost = true;
  }
  switch (f.kind) {
    case Formula::Kind::Falsum:
      out += 'F';
      break;
    case Formula::Kind::Pred:
      out += f.name;
      if (!f.terms.empty()) {
        out += '(';
        for (std::size_t i = 0; i < f.terms.size(); ++i) {
          if (i) out += ", ";
          print_term(*f.terms[i], out);
        }
        out += ')';
      }
      break;
    case Formula::Kind::Eq:
      print_term(*f.terms[0], out);
      out += " = ";
      print_term(*f.terms[1], out);
      break;
    case Formula::Kind::Not:
      out += '~';
      print(*f.lhs, 3, rightmost, out);
      break;
    case Formula::Kind::And:
      print(*f.lhs, 2, false, out);
      out += " /\\ ";
      print(*f.rhs, 3, rightmost, out);
      break;
    case Formula::Kind::Or:
      print(*f.lhs, 1, false, out);
      out += " \\/ ";
      print(*f.rhs, 2, rightmost, out);
      break;
    case Formula::Kind::Imp:
      print(*f.lhs, 1, false, out);
      out += " -> ";
      print(*f.rhs, 0, rightmost, out);
      break;
    case Formula::Kind::Forall:
    case Formula::Kind::Exists: {
      out += f.kind == Formula::Kind::Forall ? "forall " : "exists ";
      out += f.name;
      const Formula* body = f.lhs.get();
      while (body->kind == f.kind) {
        out += ", ";
        out += body->name;
        body = body->lhs.get();
      }
      out += ". ";
      print(*body, 0, true, out);
      break;
    }
  }
  if (parens) out += ')';
}

}  // namespace

std::string format_term(const Term& t) {
  std::string out;
  print_term(t, out);
  return out;
}

std::string format_formula(const Formula& f) {
  std::string out;
  print(f, 0, true, out);
  return out;
}

}  // namespace lpf
