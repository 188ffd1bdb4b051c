#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lpf/syntax.hpp"
#include "lpf/truth.hpp"

namespace lpf {

class EvalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class StructureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Variable assignment into a structure's domain, by element index.
class Assignment {
 public:
  std::optional<int> get(const std::string& x) const;
  void set(const std::string& x, int d);
  void unset(const std::string& x);
  const std::vector<std::pair<std::string, int>>& entries() const { return entries_; }

 private:
  std::vector<std::pair<std::string, int>> entries_;
};

struct FunTable {
  int arity = 0;
  std::vector<int> table;  // domain indices, row-major over argument tuples
};

struct PredTable {
  int arity = 0;
  std::vector<Tv> table;
};

// Finite three-valued interpretation: a non-empty domain of named elements,
// total tables for every interpreted symbol, and an equality table whose
// diagonal is designated.
struct Structure {
  std::vector<std::string> domain;
  std::map<std::string, FunTable> funs;
  std::map<std::string, PredTable> preds;
  std::vector<Tv> eq;  // |domain|^2, row-major

  int size() const { return static_cast<int>(domain.size()); }
  std::optional<int> element(const std::string& name) const;
  int fun_at(const std::string& name, std::span<const int> args) const;
  Tv pred_at(const std::string& name, std::span<const int> args) const;
  Tv eq_at(int i, int j) const { return eq[static_cast<std::size_t>(i) * domain.size() + j]; }

  void validate() const;  // throws StructureError
};

// Classical identity: t on the diagonal, f elsewhere.
std::vector<Tv> identity_eq_table(int domain_size);

// Structure files: `domain d1 d2 ...` first, then one table cell per line,
// `fun f: (d1,d2) -> d3`, `pred P: (d1) -> t` and `eq: (d1,d2) -> b` rows.
// Tables must be total over the declared signature; eq rows may be omitted
// entirely, in which case equality is the classical identity.
Structure parse_structure(std::istream& in, const Signature& sig);
Structure parse_structure_file(const std::string& path, const Signature& sig);
std::string format_structure(const Structure& s);

int eval_term(const Term& t, const Structure& s, Assignment& a);
Tv eval_formula(const Formula& f, const Structure& s, Assignment& a);

// A formula holds iff it evaluates to a designated value.
bool holds(const Formula& f, const Structure& s, Assignment& a);

// True iff no predicate or equality cell is b. On classical structures the
// evaluator never returns b and agrees with two-valued semantics, so the one
// evaluator serves both the three-valued logic and classical logic.
bool is_classical(const Structure& s);

// Deterministic enumeration of all structures of a fixed domain size over
// the given symbols. Domains are canonicalized as d1..dk and tables advance
// odometer-style, later cells fastest, values in the order f, b, t (elements
// in index order for function cells). Equality tables are enumerated only
// when requested; diagonal cells range over b, t. With `classical_only`,
// truth-valued cells range over f, t and diagonals are pinned to t.
//
// Off-diagonal equality cells are pinned to f by default: equality may be a
// glut on the diagonal but never designated between distinct elements.
// Validity searches use this class of structures; a designated off-diagonal
// cell would break the replacement rule of the proof system. Pass
// `eq_off_diagonal_free` to range off-diagonal cells over all truth values
// (structure files may still describe such tables).
class StructureEnumerator {
 public:
  StructureEnumerator(const std::map<std::string, int>& funs,
                      const std::map<std::string, int>& preds, bool with_eq, int domain_size,
                      bool classical_only = false, bool eq_off_diagonal_free = false);

  const Structure& current() const { return s_; }
  bool advance();  // false once all structures have been visited

 private:
  struct Cell {
    bool is_fun;
    std::string name;
    std::size_t index;
    int base;  // number of values the cell ranges over
  };
  int value_of(const Cell& c) const;
  void assign(const Cell& c, int v);

  Structure s_;
  std::vector<Cell> cells_;
  bool classical_ = false;
};

// All assignments of the given variables into d1..dk, odometer order.
class AssignmentEnumerator {
 public:
  AssignmentEnumerator(const std::set<std::string>& vars, int domain_size);
  const Assignment& current() const { return a_; }
  bool advance();

 private:
  Assignment a_;
  std::vector<std::string> vars_;
  std::vector<int> idx_;
  int size_;
};

struct SearchOptions {
  int max_domain = 3;
  long long budget = 2'000'000;  // structure/assignment pairs to evaluate
};

enum class SearchStatus { WitnessFound, NoWitnessUpTo, Inconclusive };

struct SearchVerdict {
  SearchStatus status = SearchStatus::NoWitnessUpTo;
  int bound = 0;          // largest domain size fully searched
  long long visited = 0;  // structure/assignment pairs evaluated
  std::optional<Structure> witness;
  std::optional<Assignment> assignment;

  bool found() const { return status == SearchStatus::WitnessFound; }
};

// Bounded refutation search over all structures with domain sizes
// 1..max_domain for the symbols occurring in the query, and all assignments
// of the free variables. Purely propositional queries are decided by the
// valuations of their atoms (domain size 1 suffices). The first witness in
// enumeration order is returned, so counter-examples are reproducible.
//
// check_consequence: witness has every member of gamma designated and the
// conclusion f. check_equivalence: witness gives the two formulas different
// values. check_consistency: witness gives the formula the value b.
SearchVerdict check_consequence(const std::vector<FormulaPtr>& gamma, const FormulaPtr& a,
                                const SearchOptions& opts = {});
SearchVerdict check_equivalence(const FormulaPtr& a1, const FormulaPtr& a2,
                                const SearchOptions& opts = {});
SearchVerdict check_consistency(const FormulaPtr& a, const SearchOptions& opts = {});

}  // namespace lpf
