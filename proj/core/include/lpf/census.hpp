#pragma once

#include <array>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "lpf/syntax.hpp"
#include "lpf/truth.hpp"

namespace lpf {

// One choice of three-valued truth tables for ~, /\, \/ and ->. Tables are
// indexed by Tv. Candidates produced by enumerate_candidates satisfy, by
// construction: classical agreement on {t,f}; the designation pattern of a
// conjunction (designated iff both arguments are), a disjunction (iff some
// argument is) and an implication (iff the antecedent is not designated or
// the consequent is); and a designated value for ~b.
struct ConnectiveTables {
  std::array<Tv, 3> neg;
  std::array<std::array<Tv, 3>, 3> conj;
  std::array<std::array<Tv, 3>, 3> disj;
  std::array<std::array<Tv, 3>, 3> impl;

  friend bool operator==(const ConnectiveTables&, const ConnectiveTables&) = default;
};

// The tables of the shipped evaluator: min/max for /\ and \/, t-or-
// consequent for ->, swap-and-fix for ~.
ConnectiveTables lp_tables();

// All 8192 candidate tables. The 13 free cells are, in order: /\ at (t,b),
// (b,t), (b,b); \/ at (t,b), (b,t), (b,b), (f,b), (b,f); -> at (f,b), (t,b),
// (b,t), (b,b); ~ at b. Candidates come in lexicographic order of that cell
// word with t before b, so index 0 is the all-t filling.
std::vector<ConnectiveTables> enumerate_candidates();

// Laws of logical equivalence:
//  (1) A and F = F      (2) A or T = T     (3) A and T = A   (4) A or F = A
//  (5) A and A = A      (6) A or A = A     (7) commutativity of conjunction
//  (8) commutativity of disjunction
//  (9) forall x. A = A   and (10) exists x. A = A, for x not free in A;
//      quantifiers are the folds of /\ resp. \/ over the instance values,
//      so these demand that the fold of n copies of a value returns it
//  (11) ~~A = A          (12) F -> A = T    (13) (A \/ ~A) -> A2 = A2
// T inside a law is evaluated through the candidate's own tables as ~F.
bool satisfies_law(const ConnectiveTables& c, int law);

// Left fold over the values sorted in the order f, b, t.
Tv fold_forall(const ConnectiveTables& c, std::vector<Tv> values);
Tv fold_exists(const ConnectiveTables& c, std::vector<Tv> values);

struct CensusResult {
  long long count = 0;
  // Surviving tables in enumeration order; kept only when count <= 32.
  std::vector<ConnectiveTables> survivors;
};

CensusResult count_candidates(const std::set<int>& laws);

// Propositional evaluation under candidate tables; atoms are the arity-0
// predicate names, falsum is f.
Tv eval_prop(const Formula& f, const ConnectiveTables& c,
             const std::map<std::string, Tv>& valuation);

std::set<std::string> atoms_of(const Formula& f);

// Fixed tabular rendering, rows and columns in the order t, f, b.
std::string format_tables(const ConnectiveTables& c);

struct InternalizationReport {
  bool semantic_side = false;      // the meta-level property
  bool internalized_side = false;  // validity of the internalizing formula
  bool agree() const { return semantic_side == internalized_side; }
};

// Property: A is consistent iff (A -> F) \/ (~A -> F) is valid. Both sides
// are brute-forced over all valuations of A's atoms; A must be
// propositional.
InternalizationReport check_internalization_consistency(const FormulaPtr& a);

// Property: A1 and A2 are logically equivalent iff
// (A1 <-> A2) /\ (~A1 <-> ~A2) is valid.
InternalizationReport check_internalization_equivalence(const FormulaPtr& a1,
                                                        const FormulaPtr& a2);

}  // namespace lpf
