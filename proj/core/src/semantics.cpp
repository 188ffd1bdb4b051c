#include "lpf/semantics.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <sstream>

namespace lpf {

std::optional<int> Assignment::get(const std::string& x) const {
  for (const auto& [name, d] : entries_) {
    if (name == x) return d;
  }
  return std::nullopt;
}

void Assignment::set(const std::string& x, int d) {
  for (auto& [name, val] : entries_) {
    if (name == x) {
      val = d;
      return;
    }
  }
  entries_.emplace_back(x, d);
}

void Assignment::unset(const std::string& x) {
  std::erase_if(entries_, [&](const auto& e) { return e.first == x; });
}

std::optional<int> Structure::element(const std::string& name) const {
  for (std::size_t i = 0; i < domain.size(); ++i) {
    if (domain[i] == name) return static_cast<int>(i);
  }
  return std::nullopt;
}

namespace {

std::size_t tuple_index(std::span<const int> args, int base) {
  std::size_t idx = 0;
  for (int a : args) idx = idx * static_cast<std::size_t>(base) + static_cast<std::size_t>(a);
  return idx;
}

std::size_t pow_size(int base, int exp) {
  std::size_t r = 1;
  for (int i = 0; i < exp; ++i) r *= static_cast<std::size_t>(base);
  return r;
}

bool next_tuple(std::vector<int>& t, int base) {
  for (auto it = t.rbegin(); it != t.rend(); ++it) {
    if (++*it < base) return true;
    *it = 0;
  }
  return false;
}

}  // namespace

int Structure::fun_at(const std::string& name, std::span<const int> args) const {
  auto it = funs.find(name);
  if (it == funs.end()) throw EvalError("uninterpreted function symbol '" + name + "'");
  return it->second.table[tuple_index(args, size())];
}

Tv Structure::pred_at(const std::string& name, std::span<const int> args) const {
  auto it = preds.find(name);
  if (it == preds.end()) throw EvalError("uninterpreted predicate symbol '" + name + "'");
  return it->second.table[tuple_index(args, size())];
}

void Structure::validate() const {
  if (domain.empty()) throw StructureError("domain must be non-empty");
  for (std::size_t i = 0; i < domain.size(); ++i) {
    for (std::size_t j = i + 1; j < domain.size(); ++j) {
      if (domain[i] == domain[j]) throw StructureError("duplicate element '" + domain[i] + "'");
    }
  }
  int n = size();
  for (const auto& [name, f] : funs) {
    if (f.table.size() != pow_size(n, f.arity)) {
      throw StructureError("function table for '" + name + "' is not total");
    }
    for (int v : f.table) {
      if (v < 0 || v >= n) throw StructureError("function value out of domain in '" + name + "'");
    }
  }
  for (const auto& [name, p] : preds) {
    if (p.table.size() != pow_size(n, p.arity)) {
      throw StructureError("predicate table for '" + name + "' is not total");
    }
  }
  if (eq.size() != pow_size(n, 2)) throw StructureError("equality table is not total");
  for (int d = 0; d < n; ++d) {
    if (!designated(eq_at(d, d))) {
      throw StructureError("equality must be designated on the diagonal at '" + domain[d] + "'");
    }
  }
}

std::vector<Tv> identity_eq_table(int n) {
  std::vector<Tv> t(pow_size(n, 2), Tv::F);
  for (int d = 0; d < n; ++d) t[static_cast<std::size_t>(d) * n + d] = Tv::T;
  return t;
}

// ---------------------------------------------------------------------------
// Structure file format
// ---------------------------------------------------------------------------

namespace {

struct RowParser {
  const Structure& s;
  std::string line;
  int lineno;

  [[noreturn]] void fail(const std::string& msg) const {
    throw StructureError("line " + std::to_string(lineno) + ": " + msg);
  }

  int element(const std::string& name) const {
    auto d = s.element(name);
    if (!d) fail("unknown domain element '" + name + "'");
    return *d;
  }
};

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

// Parses "(d1,d2) -> v" into the tuple names and the value text.
std::pair<std::vector<std::string>, std::string> parse_row(const RowParser& rp,
                                                           const std::string& text) {
  auto open = text.find('(');
  auto close = text.find(')');
  auto arrow = text.find("->");
  if (open == std::string::npos || close == std::string::npos || arrow == std::string::npos ||
      close < open || arrow < close) {
    rp.fail("expected '(args) -> value'");
  }
  std::vector<std::string> names;
  std::string inner = text.substr(open + 1, close - open - 1);
  std::stringstream ss(inner);
  std::string part;
  while (std::getline(ss, part, ',')) {
    part = trim(part);
    if (!part.empty()) names.push_back(part);
  }
  if (!trim(inner).empty() && names.empty()) rp.fail("bad argument tuple");
  std::string value = trim(text.substr(arrow + 2));
  if (value.empty()) rp.fail("missing value");
  return {names, value};
}

}  // namespace

Structure parse_structure(std::istream& in, const Signature& sig) {
  Structure s;
  std::map<std::string, std::vector<bool>> seen_fun, seen_pred;
  std::vector<bool> seen_eq;
  bool have_domain = false, have_eq_rows = false;

  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    auto hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    std::string line = trim(raw);
    if (line.empty()) continue;
    RowParser rp{s, line, lineno};

    std::istringstream ls(line);
    std::string head;
    ls >> head;
    if (head == "domain") {
      if (have_domain) rp.fail("duplicate domain line");
      std::string el;
      while (ls >> el) s.domain.push_back(el);
      if (s.domain.empty()) rp.fail("domain must be non-empty");
      have_domain = true;
      int n = s.size();
      for (const auto& [name, arity] : sig.funs()) {
        s.funs[name] = FunTable{arity, std::vector<int>(pow_size(n, arity), -1)};
        seen_fun[name].assign(pow_size(n, arity), false);
      }
      for (const auto& [name, arity] : sig.preds()) {
        s.preds[name] = PredTable{arity, std::vector<Tv>(pow_size(n, arity), Tv::F)};
        seen_pred[name].assign(pow_size(n, arity), false);
      }
      s.eq.assign(pow_size(n, 2), Tv::F);
      seen_eq.assign(pow_size(n, 2), false);
      continue;
    }
    if (!have_domain) rp.fail("the domain line must come first");

    if (head == "fun" || head == "pred") {
      std::string rest;
      std::getline(ls, rest);
      auto colon = rest.find(':');
      if (colon == std::string::npos) rp.fail("expected 'name: (args) -> value'");
      std::string name = trim(rest.substr(0, colon));
      auto [names, value] = parse_row(rp, rest.substr(colon + 1));
      std::vector<int> tuple;
      for (const auto& el : names) tuple.push_back(rp.element(el));
      if (head == "fun") {
        auto it = s.funs.find(name);
        if (it == s.funs.end()) rp.fail("'" + name + "' is not a declared function symbol");
        if (static_cast<int>(tuple.size()) != it->second.arity) {
          rp.fail("'" + name + "' has arity " + std::to_string(it->second.arity));
        }
        std::size_t idx = tuple_index(tuple, s.size());
        if (seen_fun[name][idx]) rp.fail("duplicate cell for '" + name + "'");
        seen_fun[name][idx] = true;
        it->second.table[idx] = rp.element(value);
      } else {
        auto it = s.preds.find(name);
        if (it == s.preds.end()) rp.fail("'" + name + "' is not a declared predicate symbol");
        if (static_cast<int>(tuple.size()) != it->second.arity) {
          rp.fail("'" + name + "' has arity " + std::to_string(it->second.arity));
        }
        auto v = value.size() == 1 ? tv_from_char(value[0]) : std::nullopt;
        if (!v) rp.fail("truth value must be t, f or b");
        std::size_t idx = tuple_index(tuple, s.size());
        if (seen_pred[name][idx]) rp.fail("duplicate cell for '" + name + "'");
        seen_pred[name][idx] = true;
        it->second.table[idx] = *v;
      }
      continue;
    }
    if (head == "eq:" || head == "eq") {
      std::string rest;
      std::getline(ls, rest);
      if (head == "eq") {
        rest = trim(rest);
        if (rest.empty() || rest[0] != ':') rp.fail("expected 'eq: (d_i,d_j) -> value'");
        rest.erase(0, 1);
      }
      auto [names, value] = parse_row(rp, rest);
      if (names.size() != 2) rp.fail("eq takes two arguments");
      auto v = value.size() == 1 ? tv_from_char(value[0]) : std::nullopt;
      if (!v) rp.fail("truth value must be t, f or b");
      std::size_t idx =
          static_cast<std::size_t>(rp.element(names[0])) * s.size() + rp.element(names[1]);
      if (seen_eq[idx]) rp.fail("duplicate eq cell");
      seen_eq[idx] = true;
      s.eq[idx] = *v;
      have_eq_rows = true;
      continue;
    }
    rp.fail("expected 'domain', 'fun', 'pred' or 'eq'");
  }

  if (!have_domain) throw StructureError("missing domain line");
  for (const auto& [name, seen] : seen_fun) {
    if (!std::all_of(seen.begin(), seen.end(), [](bool b) { return b; })) {
      throw StructureError("function table for '" + name + "' is not total");
    }
  }
  for (const auto& [name, seen] : seen_pred) {
    if (!std::all_of(seen.begin(), seen.end(), [](bool b) { return b; })) {
      throw StructureError("predicate table for '" + name + "' is not total");
    }
  }
  if (have_eq_rows) {
    if (!std::all_of(seen_eq.begin(), seen_eq.end(), [](bool b) { return b; })) {
      throw StructureError("equality table is not total");
    }
  } else {
    s.eq = identity_eq_table(s.size());
  }
  s.validate();
  return s;
}

Structure parse_structure_file(const std::string& path, const Signature& sig) {
  std::ifstream in(path);
  if (!in) throw StructureError("cannot open structure file '" + path + "'");
  return parse_structure(in, sig);
}

std::string format_structure(const Structure& s) {
  std::string out = "domain";
  for (const auto& el : s.domain) out += " " + el;
  out += "\n";
  int n = s.size();
  auto print_tuple = [&](const std::vector<int>& tuple) {
    out += "(";
    for (std::size_t i = 0; i < tuple.size(); ++i) {
      if (i) out += ",";
      out += s.domain[tuple[i]];
    }
    out += ")";
  };
  for (const auto& [name, f] : s.funs) {
    std::vector<int> tuple(f.arity, 0);
    std::size_t idx = 0;
    do {
      out += "fun " + name + ": ";
      print_tuple(tuple);
      out += " -> " + s.domain[f.table[idx++]] + "\n";
    } while (next_tuple(tuple, n));
  }
  for (const auto& [name, p] : s.preds) {
    std::vector<int> tuple(p.arity, 0);
    std::size_t idx = 0;
    do {
      out += "pred " + name + ": ";
      print_tuple(tuple);
      out += " -> ";
      out += tv_char(p.table[idx++]);
      out += "\n";
    } while (next_tuple(tuple, n));
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      out += "eq: (" + s.domain[i] + "," + s.domain[j] + ") -> ";
      out += tv_char(s.eq_at(i, j));
      out += "\n";
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Evaluation
// ---------------------------------------------------------------------------

int eval_term(const Term& t, const Structure& s, Assignment& a) {
  if (t.kind == Term::Kind::Var) {
    auto d = a.get(t.name);
    if (!d) throw EvalError("unassigned variable '" + t.name + "'");
    return *d;
  }
  std::vector<int> args;
  args.reserve(t.args.size());
  for (const auto& arg : t.args) args.push_back(eval_term(*arg, s, a));
  return s.fun_at(t.name, args);
}

Tv eval_formula(const Formula& f, const Structure& s, Assignment& a) {
  switch (f.kind) {
    case Formula::Kind::Falsum:
      return Tv::F;
    case Formula::Kind::Pred: {
      std::vector<int> args;
      args.reserve(f.terms.size());
      for (const auto& t : f.terms) args.push_back(eval_term(*t, s, a));
      return s.pred_at(f.name, args);
    }
    case Formula::Kind::Eq:
      return s.eq_at(eval_term(*f.terms[0], s, a), eval_term(*f.terms[1], s, a));
    case Formula::Kind::Not:
      return tv_not(eval_formula(*f.lhs, s, a));
    case Formula::Kind::And:
      return tv_min(eval_formula(*f.lhs, s, a), eval_formula(*f.rhs, s, a));
    case Formula::Kind::Or:
      return tv_max(eval_formula(*f.lhs, s, a), eval_formula(*f.rhs, s, a));
    case Formula::Kind::Imp:
      return tv_imp(eval_formula(*f.lhs, s, a), eval_formula(*f.rhs, s, a));
    case Formula::Kind::Forall:
    case Formula::Kind::Exists: {
      bool universal = f.kind == Formula::Kind::Forall;
      auto old = a.get(f.name);
      Tv acc = universal ? Tv::T : Tv::F;
      for (int d = 0; d < s.size(); ++d) {
        a.set(f.name, d);
        Tv v = eval_formula(*f.lhs, s, a);
        acc = universal ? tv_min(acc, v) : tv_max(acc, v);
      }
      if (old) {
        a.set(f.name, *old);
      } else {
        a.unset(f.name);
      }
      return acc;
    }
  }
  throw EvalError("malformed formula");
}

bool holds(const Formula& f, const Structure& s, Assignment& a) {
  return designated(eval_formula(f, s, a));
}

bool is_classical(const Structure& s) {
  for (const auto& [name, p] : s.preds) {
    for (Tv v : p.table) {
      if (v == Tv::B) return false;
    }
  }
  for (Tv v : s.eq) {
    if (v == Tv::B) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Enumeration and bounded search
// ---------------------------------------------------------------------------

StructureEnumerator::StructureEnumerator(const std::map<std::string, int>& funs,
                                         const std::map<std::string, int>& preds, bool with_eq,
                                         int domain_size, bool classical_only,
                                         bool eq_off_diagonal_free)
    : classical_(classical_only) {
  for (int i = 0; i < domain_size; ++i) s_.domain.push_back("d" + std::to_string(i + 1));
  int n = domain_size;
  for (const auto& [name, arity] : funs) {
    s_.funs[name] = FunTable{arity, std::vector<int>(pow_size(n, arity), 0)};
    for (std::size_t i = 0; i < pow_size(n, arity); ++i) {
      cells_.push_back(Cell{true, name, i, n});
    }
  }
  for (const auto& [name, arity] : preds) {
    s_.preds[name] = PredTable{arity, std::vector<Tv>(pow_size(n, arity), Tv::F)};
    for (std::size_t i = 0; i < pow_size(n, arity); ++i) {
      cells_.push_back(Cell{false, name, i, classical_ ? 2 : 3});
    }
  }
  s_.eq = identity_eq_table(n);
  if (with_eq) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        std::size_t idx = static_cast<std::size_t>(i) * n + j;
        // Diagonal cells range over designated values only.
        int base;
        if (i == j) {
          base = classical_ ? 1 : 2;
        } else {
          base = eq_off_diagonal_free ? (classical_ ? 2 : 3) : 1;
        }
        cells_.push_back(Cell{false, "=", idx, base});
        s_.eq[idx] = i == j ? (classical_ ? Tv::T : Tv::B) : Tv::F;
      }
    }
  }
}

int StructureEnumerator::value_of(const Cell& c) const {
  if (c.is_fun) return s_.funs.at(c.name).table[c.index];
  Tv v = c.name == "=" ? s_.eq[c.index] : s_.preds.at(c.name).table[c.index];
  bool diag = c.name == "=" && c.index % s_.domain.size() == c.index / s_.domain.size();
  if (diag) return v == (classical_ ? Tv::T : Tv::B) ? 0 : 1;
  if (classical_) return v == Tv::F ? 0 : 1;
  return static_cast<int>(v);
}

void StructureEnumerator::assign(const Cell& c, int v) {
  if (c.is_fun) {
    s_.funs.at(c.name).table[c.index] = v;
    return;
  }
  bool diag = c.name == "=" && c.index % s_.domain.size() == c.index / s_.domain.size();
  Tv tv;
  if (diag) {
    tv = classical_ ? Tv::T : (v == 0 ? Tv::B : Tv::T);
  } else if (classical_) {
    tv = v == 0 ? Tv::F : Tv::T;
  } else {
    tv = static_cast<Tv>(v);
  }
  if (c.name == "=") {
    s_.eq[c.index] = tv;
  } else {
    s_.preds.at(c.name).table[c.index] = tv;
  }
}

bool StructureEnumerator::advance() {
  for (auto it = cells_.rbegin(); it != cells_.rend(); ++it) {
    int v = value_of(*it) + 1;
    if (v < it->base) {
      assign(*it, v);
      return true;
    }
    assign(*it, 0);
  }
  return false;
}

AssignmentEnumerator::AssignmentEnumerator(const std::set<std::string>& vars, int domain_size)
    : vars_(vars.begin(), vars.end()), idx_(vars.size(), 0), size_(domain_size) {
  for (const auto& v : vars_) a_.set(v, 0);
}

bool AssignmentEnumerator::advance() {
  for (std::size_t i = vars_.size(); i-- > 0;) {
    if (++idx_[i] < size_) {
      a_.set(vars_[i], idx_[i]);
      return true;
    }
    idx_[i] = 0;
    a_.set(vars_[i], 0);
  }
  return false;
}

namespace {

SearchVerdict bounded_search(const std::vector<FormulaPtr>& formulas,
                             const std::function<bool(const Structure&, Assignment&)>& is_witness,
                             const SearchOptions& opts) {
  if (opts.max_domain < 1) throw std::invalid_argument("max_domain must be at least 1");
  SymbolUse use = occurring_symbols(formulas);
  std::set<std::string> vars = free_vars(formulas);

  bool propositional = true;
  for (const auto& f : formulas) propositional = propositional && is_propositional(*f);
  int max_domain = propositional ? 1 : opts.max_domain;

  SearchVerdict out;
  for (int k = 1; k <= max_domain; ++k) {
    StructureEnumerator se(use.funs, use.preds, use.uses_eq, k);
    bool more = true;
    while (more) {
      AssignmentEnumerator ae(vars, k);
      bool more_a = true;
      while (more_a) {
        if (out.visited >= opts.budget) {
          out.status = SearchStatus::Inconclusive;
          out.bound = k - 1;
          return out;
        }
        ++out.visited;
        Assignment a = ae.current();
        if (is_witness(se.current(), a)) {
          out.status = SearchStatus::WitnessFound;
          out.bound = k;
          out.witness = se.current();
          out.assignment = ae.current();
          return out;
        }
        more_a = ae.advance();
      }
      more = se.advance();
    }
    out.bound = k;
  }
  out.status = SearchStatus::NoWitnessUpTo;
  return out;
}

}  // namespace

SearchVerdict check_consequence(const std::vector<FormulaPtr>& gamma, const FormulaPtr& a,
                                const SearchOptions& opts) {
  std::vector<FormulaPtr> all = gamma;
  all.push_back(a);
  // A counter-model has no premise evaluating to f (all premises designated)
  // while the conclusion evaluates to f.
  return bounded_search(
      all,
      [&](const Structure& s, Assignment& asg) {
        for (const auto& g : gamma) {
          if (!designated(eval_formula(*g, s, asg))) return false;
        }
        return eval_formula(*a, s, asg) == Tv::F;
      },
      opts);
}

SearchVerdict check_equivalence(const FormulaPtr& a1, const FormulaPtr& a2,
                                const SearchOptions& opts) {
  return bounded_search(
      {a1, a2},
      [&](const Structure& s, Assignment& asg) {
        return eval_formula(*a1, s, asg) != eval_formula(*a2, s, asg);
      },
      opts);
}

SearchVerdict check_consistency(const FormulaPtr& a, const SearchOptions& opts) {
  return bounded_search(
      {a},
      [&](const Structure& s, Assignment& asg) { return eval_formula(*a, s, asg) == Tv::B; },
      opts);
}

}  // namespace lpf
