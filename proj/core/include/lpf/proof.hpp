#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "lpf/syntax.hpp"

namespace lpf {

// Hypotheses are a set: order and duplication are irrelevant, and membership
// is up to alpha-equivalence.
struct Sequent {
  std::vector<FormulaPtr> hyps;
  FormulaPtr concl;
};

bool hyps_contain(const std::vector<FormulaPtr>& hyps, const Formula& f);
bool hyps_equal(const std::vector<FormulaPtr>& a, const std::vector<FormulaPtr>& b);
std::vector<FormulaPtr> hyps_plus(const std::vector<FormulaPtr>& hyps, const FormulaPtr& f);
bool sequent_equal(const Sequent& a, const Sequent& b);
std::string format_sequent(const Sequent& s);

enum class Mode { LP, Classical };

// Rule identifiers as written in proof scripts. The two projections of the
// conjunction-elimination rule and the two injections of the disjunction-
// introduction rule get separate identifiers; the de Morgan style M-rules
// are two-way and carry a direction.
enum class RuleId {
  I, EM, TrueI, FalsumE,
  AndI, AndE1, AndE2,
  OrI1, OrI2, OrE,
  ImpI, ImpE,
  ForallI, ForallE, ExistsI, ExistsE,
  EqI, EqE,
  NotM, AndM, OrM, ImpM, ForallM, ExistsM,
  C,
};

enum class MDir { Down, Up };

const char* rule_name(RuleId r);
std::optional<RuleId> rule_from_name(const std::string& name);
bool is_two_way(RuleId r);

struct RuleApplication {
  RuleId rule;
  std::vector<int> premises;    // 1-based indices of earlier lines
  std::optional<MDir> dir;      // for two-way rules; inferred when omitted
  std::optional<std::string> var;  // witness x for eq-e
  TermPtr term;                 // witness t for forall-e, exists-i, eq-e
  FormulaPtr templ;             // template A for eq-e
};

struct Justification {
  bool is_hypothesis = false;
  RuleApplication app;
};

struct ProofLine {
  Sequent seq;
  Justification just;
};

struct CheckOutcome {
  bool ok = true;
  std::string message;
};

// Verifies that `line` is the conclusion of an instance of the rule whose
// premises are the referenced earlier sequents. Hypothesis contexts must
// match the rule schema exactly (no implicit weakening); the side conditions
// of the quantifier rules are checked via free variables; rule C is only
// accepted in classical mode.
CheckOutcome check_step(const Sequent& line, const RuleApplication& app,
                        const std::vector<Sequent>& earlier, Mode mode);

struct DerivationReport {
  std::vector<CheckOutcome> lines;
  bool ok = false;
  int first_violation = 0;  // 1-based line number, 0 when ok
  std::string message;
};

// A derivation of `target` from the hypothesis sequents: every line must be
// a member of `hypotheses` (up to alpha) or a valid rule application on
// earlier lines, and the last line must equal `target`. A proof is the case
// hypotheses = {}.
DerivationReport check_derivation(const std::vector<ProofLine>& lines,
                                  const std::vector<Sequent>& hypotheses, const Sequent& target,
                                  Mode mode);

struct RuleInfo {
  std::string id;
  int premises = 0;
  bool two_way = false;
  std::string params;          // witness data the rule requires
  std::string side_condition;  // "" when none
  std::string schema;
};

// The rule catalog: 22 schemas, plus C in classical mode.
std::vector<RuleInfo> rule_catalog(Mode mode);

// Line-oriented proof scripts:
//   n. <hyps ;-separated> |- <formula> ; rule=<id> [dir=up|down]
//      [from=n1,n2,...] [x=<var>] [t=<term>] [A=<formula>]
// with rule=hyp for hypothesis lines. Lines are numbered 1..n in order;
// blank lines and '#' comments are skipped.
std::vector<ProofLine> parse_proof_script(std::istream& in, const Signature& sig);
std::vector<ProofLine> parse_proof_script_file(const std::string& path, const Signature& sig);

}  // namespace lpf
