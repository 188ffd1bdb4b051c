#pragma once

#include <iosfwd>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace lpf {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, std::size_t pos);
  std::size_t position() const { return pos_; }

 private:
  std::size_t pos_;
};

class SignatureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Function and predicate symbols with their arities. Names are unique across
// the whole signature and distinct from the reserved equality symbol "=".
class Signature {
 public:
  void add_fun(const std::string& name, int arity);
  void add_pred(const std::string& name, int arity);

  std::optional<int> fun_arity(const std::string& name) const;
  std::optional<int> pred_arity(const std::string& name) const;
  bool declared(const std::string& name) const;

  const std::map<std::string, int>& funs() const { return funs_; }
  const std::map<std::string, int>& preds() const { return preds_; }

 private:
  void check_name(const std::string& name, int arity) const;

  std::map<std::string, int> funs_;
  std::map<std::string, int> preds_;
};

// Signature files: one declaration per line, `fun name/arity` or
// `pred name/arity`; blank lines and `#` comments are ignored.
Signature parse_signature(std::istream& in);
Signature parse_signature_file(const std::string& path);
std::string format_signature(const Signature& sig);

struct Term;
using TermPtr = std::shared_ptr<const Term>;

// Immutable term: a variable or a function application (constants are
// arity-0 applications).
struct Term {
  enum class Kind { Var, App };
  Kind kind;
  std::string name;
  std::vector<TermPtr> args;
};

TermPtr var(std::string name);
TermPtr app(std::string fn, std::vector<TermPtr> args = {});

struct Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

// Immutable formula. `name` is the predicate symbol for Pred and the bound
// variable for Forall/Exists; `terms` holds predicate arguments (two for Eq);
// Not and the quantifiers use `lhs` only.
struct Formula {
  enum class Kind { Falsum, Pred, Eq, Not, And, Or, Imp, Forall, Exists };
  Kind kind;
  std::string name;
  std::vector<TermPtr> terms;
  FormulaPtr lhs, rhs;
};

FormulaPtr falsum();
FormulaPtr verum();  // ~F
FormulaPtr pred(std::string name, std::vector<TermPtr> args = {});
FormulaPtr eq(TermPtr l, TermPtr r);
FormulaPtr neg(FormulaPtr a);
FormulaPtr conj(FormulaPtr l, FormulaPtr r);
FormulaPtr disj(FormulaPtr l, FormulaPtr r);
FormulaPtr imp(FormulaPtr l, FormulaPtr r);
FormulaPtr forall(std::string x, FormulaPtr body);
FormulaPtr exists(std::string x, FormulaPtr body);

bool term_equal(const Term& a, const Term& b);

// Equality up to renaming of bound variables; free variables are compared
// by name. This is the formula equality used throughout the toolkit.
bool alpha_equal(const Formula& a, const Formula& b);

std::set<std::string> free_vars(const Term& t);
std::set<std::string> free_vars(const Formula& f);
std::set<std::string> free_vars(const std::vector<FormulaPtr>& fs);

// Capture-avoiding substitution of t for the free occurrences of x. Binders
// that would capture a free variable of t are renamed to the smallest primed
// variant that avoids the relevant scope, so results are deterministic.
TermPtr substitute(const std::string& x, const TermPtr& t, const TermPtr& e);
FormulaPtr substitute(const std::string& x, const TermPtr& t, const FormulaPtr& e);

// Built only from falsum, arity-0 predicates, ~, /\, \/ and ->.
bool is_propositional(const Formula& f);

// Function/predicate symbols (with arities) and equality occurrences of a
// query; bounded model search enumerates interpretations for exactly these.
struct SymbolUse {
  std::map<std::string, int> funs;
  std::map<std::string, int> preds;
  bool uses_eq = false;
};
SymbolUse occurring_symbols(const std::vector<FormulaPtr>& fs);

// Concrete syntax. Precedence ~ > /\ > \/ > ->, with /\ and \/ associating
// to the left and -> to the right; quantifier scope extends as far as
// possible to the right. `T`, `!=` and `<->` are parsed as abbreviations;
// printing does not reintroduce them. parse(format(f)) is alpha-equal to f.
TermPtr parse_term(std::string_view text, const Signature& sig);
FormulaPtr parse_formula(std::string_view text, const Signature& sig);
std::string format_term(const Term& t);
std::string format_formula(const Formula& f);

}  // namespace lpf
