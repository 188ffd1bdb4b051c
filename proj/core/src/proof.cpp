#include "lpf/proof.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace lpf {

bool hyps_contain(const std::vector<FormulaPtr>& hyps, const Formula& f) {
  return std::any_of(hyps.begin(), hyps.end(),
                     [&](const FormulaPtr& h) { return alpha_equal(*h, f); });
}

bool hyps_equal(const std::vector<FormulaPtr>& a, const std::vector<FormulaPtr>& b) {
  for (const auto& f : a) {
    if (!hyps_contain(b, *f)) return false;
  }
  for (const auto& f : b) {
    if (!hyps_contain(a, *f)) return false;
  }
  return true;
}

std::vector<FormulaPtr> hyps_plus(const std::vector<FormulaPtr>& hyps, const FormulaPtr& f) {
  std::vector<FormulaPtr> out = hyps;
  if (!hyps_contain(out, *f)) out.push_back(f);
  return out;
}

bool sequent_equal(const Sequent& a, const Sequent& b) {
  return alpha_equal(*a.concl, *b.concl) && hyps_equal(a.hyps, b.hyps);
}

std::string format_sequent(const Sequent& s) {
  std::string out;
  for (std::size_t i = 0; i < s.hyps.size(); ++i) {
    if (i) out += " ; ";
    out += format_formula(*s.hyps[i]);
  }
  if (!s.hyps.empty()) out += " ";
  out += "|- " + format_formula(*s.concl);
  return out;
}

namespace {

struct RuleNameEntry {
  RuleId id;
  const char* name;
};

constexpr RuleNameEntry kRuleNames[] = {
    {RuleId::I, "i"},
    {RuleId::EM, "em"},
    {RuleId::TrueI, "true-i"},
    {RuleId::FalsumE, "falsum-e"},
    {RuleId::AndI, "and-i"},
    {RuleId::AndE1, "and-e-1"},
    {RuleId::AndE2, "and-e-2"},
    {RuleId::OrI1, "or-i-1"},
    {RuleId::OrI2, "or-i-2"},
    {RuleId::OrE, "or-e"},
    {RuleId::ImpI, "imp-i"},
    {RuleId::ImpE, "imp-e"},
    {RuleId::ForallI, "forall-i"},
    {RuleId::ForallE, "forall-e"},
    {RuleId::ExistsI, "exists-i"},
    {RuleId::ExistsE, "exists-e"},
    {RuleId::EqI, "eq-i"},
    {RuleId::EqE, "eq-e"},
    {RuleId::NotM, "not-m"},
    {RuleId::AndM, "and-m"},
    {RuleId::OrM, "or-m"},
    {RuleId::ImpM, "imp-m"},
    {RuleId::ForallM, "forall-m"},
    {RuleId::ExistsM, "exists-m"},
    {RuleId::C, "c"},
};

}  // namespace

const char* rule_name(RuleId r) {
  for (const auto& e : kRuleNames) {
    if (e.id == r) return e.name;
  }
  return "?";
}

std::optional<RuleId> rule_from_name(const std::string& name) {
  for (const auto& e : kRuleNames) {
    if (name == e.name) return e.id;
  }
  return std::nullopt;
}

bool is_two_way(RuleId r) {
  switch (r) {
    case RuleId::NotM:
    case RuleId::AndM:
    case RuleId::OrM:
    case RuleId::ImpM:
    case RuleId::ForallM:
    case RuleId::ExistsM:
      return true;
    default:
      return false;
  }
}

namespace {

int premise_count(RuleId r) {
  switch (r) {
    case RuleId::I:
    case RuleId::EM:
    case RuleId::TrueI:
    case RuleId::EqI:
      return 0;
    case RuleId::AndI:
    case RuleId::ImpE:
    case RuleId::ExistsE:
    case RuleId::EqE:
    case RuleId::C:
      return 2;
    case RuleId::OrE:
      return 3;
    default:
      return 1;
  }
}

struct StepChecker {
  const Sequent& line;
  const RuleApplication& app;
  std::vector<const Sequent*> prem;
  std::string rule;

  CheckOutcome fail(const std::string& msg) const { return {false, rule + ": " + msg}; }
  static CheckOutcome ok() { return {}; }

  CheckOutcome context_equals(int which) const {
    if (!hyps_equal(prem[which - 1]->hyps, line.hyps)) {
      return fail("hypotheses of premise " + std::to_string(which) +
                  " must equal the conclusion's");
    }
    return ok();
  }

  CheckOutcome contexts_equal() const {
    for (std::size_t i = 0; i < prem.size(); ++i) {
      if (auto r = context_equals(static_cast<int>(i) + 1); !r.ok) return r;
    }
    return ok();
  }

  // --- the rule schemas -----------------------------------------------

  CheckOutcome check_i() const {
    if (!hyps_contain(line.hyps, *line.concl)) {
      return fail("the conclusion must be among the hypotheses");
    }
    return ok();
  }

  CheckOutcome check_em() const {
    const Formula& f = *line.concl;
    if (f.kind != Formula::Kind::Or || f.rhs->kind != Formula::Kind::Not ||
        !alpha_equal(*f.lhs, *f.rhs->lhs)) {
      return fail("the conclusion must have the form A \\/ ~A");
    }
    return ok();
  }

  CheckOutcome check_true_i() const {
    const Formula& f = *line.concl;
    if (f.kind != Formula::Kind::Not || f.lhs->kind != Formula::Kind::Falsum) {
      return fail("the conclusion must be ~F");
    }
    return ok();
  }

  CheckOutcome check_falsum_e() const {
    if (prem[0]->concl->kind != Formula::Kind::Falsum) {
      return fail("the premise must conclude F");
    }
    return contexts_equal();
  }

  CheckOutcome check_and_i() const {
    const Formula& f = *line.concl;
    if (f.kind != Formula::Kind::And) return fail("the conclusion must be a conjunction");
    if (!alpha_equal(*prem[0]->concl, *f.lhs)) {
      return fail("premise 1 must conclude the left conjunct");
    }
    if (!alpha_equal(*prem[1]->concl, *f.rhs)) {
      return fail("premise 2 must conclude the right conjunct");
    }
    return contexts_equal();
  }

  CheckOutcome check_and_e(bool left) const {
    const Formula& f = *prem[0]->concl;
    if (f.kind != Formula::Kind::And) return fail("the premise must conclude a conjunction");
    if (!alpha_equal(*line.concl, left ? *f.lhs : *f.rhs)) {
      return fail(std::string("the conclusion must be the ") + (left ? "left" : "right") +
                  " conjunct of the premise");
    }
    return contexts_equal();
  }

  CheckOutcome check_or_i(bool left) const {
    const Formula& f = *line.concl;
    if (f.kind != Formula::Kind::Or) return fail("the conclusion must be a disjunction");
    if (!alpha_equal(*prem[0]->concl, left ? *f.lhs : *f.rhs)) {
      return fail(std::string("the premise must conclude the ") + (left ? "left" : "right") +
                  " disjunct of the conclusion");
    }
    return contexts_equal();
  }

  CheckOutcome check_or_e() const {
    const Formula& f = *prem[0]->concl;
    if (f.kind != Formula::Kind::Or) return fail("premise 1 must conclude a disjunction");
    if (auto r = context_equals(1); !r.ok) return r;
    if (!hyps_equal(prem[1]->hyps, hyps_plus(line.hyps, f.lhs))) {
      return fail("hypotheses of premise 2 must be the conclusion's plus the left disjunct");
    }
    if (!hyps_equal(prem[2]->hyps, hyps_plus(line.hyps, f.rhs))) {
      return fail("hypotheses of premise 3 must be the conclusion's plus the right disjunct");
    }
    if (!alpha_equal(*prem[1]->concl, *line.concl) ||
        !alpha_equal(*prem[2]->concl, *line.concl)) {
      return fail("premises 2 and 3 must conclude the conclusion formula");
    }
    return ok();
  }

  CheckOutcome check_imp_i() const {
    const Formula& f = *line.concl;
    if (f.kind != Formula::Kind::Imp) return fail("the conclusion must be an implication");
    if (!alpha_equal(*prem[0]->concl, *f.rhs)) {
      return fail("the premise must conclude the consequent");
    }
    if (!hyps_equal(prem[0]->hyps, hyps_plus(line.hyps, f.lhs))) {
      return fail("premise hypotheses must be the conclusion's plus the antecedent");
    }
    return ok();
  }

  CheckOutcome check_imp_e() const {
    const Formula& f = *prem[0]->concl;
    if (f.kind != Formula::Kind::Imp) return fail("premise 1 must conclude an implication");
    if (!alpha_equal(*prem[1]->concl, *f.lhs)) {
      return fail("premise 2 must conclude the antecedent of premise 1");
    }
    if (!alpha_equal(*line.concl, *f.rhs)) {
      return fail("the conclusion must be the consequent of premise 1");
    }
    return contexts_equal();
  }

  CheckOutcome check_forall_i() const {
    const Formula& f = *line.concl;
    if (f.kind != Formula::Kind::Forall) {
      return fail("the conclusion must be universally quantified");
    }
    // Accept any instance variable that makes the conclusion an alpha-variant
    // of (forall z. premise); the side condition applies to that variable.
    std::set<std::string> candidates = free_vars(*prem[0]->concl);
    candidates.insert(f.name);
    std::optional<std::string> shape_match;
    for (const auto& z : candidates) {
      if (!alpha_equal(f, *forall(z, prem[0]->concl))) continue;
      shape_match = z;
      bool side_ok = true;
      for (const auto& h : line.hyps) {
        if (free_vars(*h).count(z)) {
          side_ok = false;
          break;
        }
      }
      if (side_ok) {
        if (auto r = contexts_equal(); !r.ok) return r;
        return ok();
      }
    }
    if (shape_match) {
      return fail("side condition violated: '" + *shape_match +
                  "' occurs free in the hypotheses");
    }
    return fail("the conclusion must quantify the premise formula");
  }

  CheckOutcome check_forall_e() const {
    const Formula& f = *prem[0]->concl;
    if (f.kind != Formula::Kind::Forall) {
      return fail("the premise must conclude a universally quantified formula");
    }
    if (!app.term) return fail("requires the witness term t=<term>");
    FormulaPtr expected = substitute(f.name, app.term, f.lhs);
    if (!alpha_equal(*line.concl, *expected)) {
      return fail("the conclusion must be the premise body with '" + f.name +
                  "' replaced by the witness term");
    }
    return contexts_equal();
  }

  CheckOutcome check_exists_i() const {
    const Formula& f = *line.concl;
    if (f.kind != Formula::Kind::Exists) {
      return fail("the conclusion must be existentially quantified");
    }
    if (!app.term) return fail("requires the witness term t=<term>");
    FormulaPtr expected = substitute(f.name, app.term, f.lhs);
    if (!alpha_equal(*prem[0]->concl, *expected)) {
      return fail("the premise must conclude the body with '" + f.name +
                  "' replaced by the witness term");
    }
    return contexts_equal();
  }

  CheckOutcome check_exists_e() const {
    const Formula& ex = *prem[0]->concl;
    if (ex.kind != Formula::Kind::Exists) {
      return fail("premise 1 must conclude an existentially quantified formula");
    }
    if (auto r = context_equals(1); !r.ok) return r;
    if (!alpha_equal(*prem[1]->concl, *line.concl)) {
      return fail("premise 2 must conclude the conclusion formula");
    }
    // The discharged hypothesis: a formula of premise 2 beyond the context,
    // or any context member when nothing is discharged.
    std::vector<FormulaPtr> candidates;
    for (const auto& h : prem[1]->hyps) {
      if (!hyps_contain(line.hyps, *h)) candidates.push_back(h);
    }
    if (candidates.empty()) candidates = prem[1]->hyps;
    std::optional<std::string> shape_var;
    for (const auto& h : candidates) {
      if (!hyps_equal(prem[1]->hyps, hyps_plus(line.hyps, h))) continue;
      std::set<std::string> zs = free_vars(*h);
      zs.insert(ex.name);
      for (const auto& z : zs) {
        if (!alpha_equal(ex, *exists(z, h))) continue;
        shape_var = z;
        bool side_ok = !free_vars(*line.concl).count(z);
        for (const auto& g : line.hyps) {
          side_ok = side_ok && !free_vars(*g).count(z);
        }
        if (side_ok) return ok();
      }
    }
    if (shape_var) {
      return fail("side condition violated: '" + *shape_var +
                  "' occurs free in the hypotheses or the conclusion");
    }
    return fail("premise 2 must discharge the body of premise 1");
  }

  CheckOutcome check_eq_i() const {
    const Formula& f = *line.concl;
    if (f.kind != Formula::Kind::Eq || !term_equal(*f.terms[0], *f.terms[1])) {
      return fail("the conclusion must equate a term with itself");
    }
    return ok();
  }

  CheckOutcome check_eq_e() const {
    const Formula& e = *prem[0]->concl;
    if (e.kind != Formula::Kind::Eq) return fail("premise 1 must conclude an equality");
    if (!app.var || !app.templ) {
      return fail("requires the template x=<var> A=<formula>");
    }
    FormulaPtr left = substitute(*app.var, e.terms[0], app.templ);
    if (!alpha_equal(*prem[1]->concl, *left)) {
      return fail("premise 2 must conclude the template at the left-hand term");
    }
    FormulaPtr right = substitute(*app.var, e.terms[1], app.templ);
    if (!alpha_equal(*line.concl, *right)) {
      return fail("the conclusion must be the template at the right-hand term");
    }
    return contexts_equal();
  }

  // Builds the formula across the double line from the given side, or null
  // when the side does not match the rule pattern.
  FormulaPtr m_other_side(RuleId r, const FormulaPtr& upper_or_lower, bool from_upper) const {
    const Formula& f = *upper_or_lower;
    switch (r) {
      case RuleId::NotM:
        if (from_upper) {
          if (f.kind == Formula::Kind::Not && f.lhs->kind == Formula::Kind::Not) {
            return f.lhs->lhs;
          }
          return nullptr;
        }
        return neg(neg(upper_or_lower));
      case RuleId::AndM:
        if (from_upper) {
          if (f.kind == Formula::Kind::Not && f.lhs->kind == Formula::Kind::And) {
            return disj(neg(f.lhs->lhs), neg(f.lhs->rhs));
          }
          return nullptr;
        }
        if (f.kind == Formula::Kind::Or && f.lhs->kind == Formula::Kind::Not &&
            f.rhs->kind == Formula::Kind::Not) {
          return neg(conj(f.lhs->lhs, f.rhs->lhs));
        }
        return nullptr;
      case RuleId::OrM:
        if (from_upper) {
          if (f.kind == Formula::Kind::Not && f.lhs->kind == Formula::Kind::Or) {
            return conj(neg(f.lhs->lhs), neg(f.lhs->rhs));
          }
          return nullptr;
        }
        if (f.kind == Formula::Kind::And && f.lhs->kind == Formula::Kind::Not &&
            f.rhs->kind == Formula::Kind::Not) {
          return neg(disj(f.lhs->lhs, f.rhs->lhs));
        }
        return nullptr;
      case RuleId::ImpM:
        if (from_upper) {
          if (f.kind == Formula::Kind::Not && f.lhs->kind == Formula::Kind::Imp) {
            return conj(f.lhs->lhs, neg(f.lhs->rhs));
          }
          return nullptr;
        }
        if (f.kind == Formula::Kind::And && f.rhs->kind == Formula::Kind::Not) {
          return neg(imp(f.lhs, f.rhs->lhs));
        }
        return nullptr;
      case RuleId::ForallM:
        if (from_upper) {
          if (f.kind == Formula::Kind::Not && f.lhs->kind == Formula::Kind::Forall) {
            return exists(f.lhs->name, neg(f.lhs->lhs));
          }
          return nullptr;
        }
        if (f.kind == Formula::Kind::Exists && f.lhs->kind == Formula::Kind::Not) {
          return neg(forall(f.name, f.lhs->lhs));
        }
        return nullptr;
      case RuleId::ExistsM:
        if (from_upper) {
          if (f.kind == Formula::Kind::Not && f.lhs->kind == Formula::Kind::Exists) {
            return forall(f.lhs->name, neg(f.lhs->lhs));
          }
          return nullptr;
        }
        if (f.kind == Formula::Kind::Forall && f.lhs->kind == Formula::Kind::Not) {
          return neg(exists(f.name, f.lhs->lhs));
        }
        return nullptr;
      default:
        return nullptr;
    }
  }

  CheckOutcome check_m(RuleId r) const {
    auto try_dir = [&](MDir d) {
      // Down reads the rule top to bottom: the premise matches the pattern
      // above the double line.
      bool from_upper = d == MDir::Down;
      FormulaPtr expected = m_other_side(r, prem[0]->concl, from_upper);
      return expected && alpha_equal(*line.concl, *expected);
    };
    bool matched = app.dir ? try_dir(*app.dir) : (try_dir(MDir::Down) || try_dir(MDir::Up));
    if (!matched) {
      return fail(app.dir ? "premise and conclusion do not match this direction of the rule"
                          : "premise and conclusion do not match either direction of the rule");
    }
    return contexts_equal();
  }

  CheckOutcome check_c(Mode mode) const {
    if (mode != Mode::Classical) return fail("rule c requires classical mode");
    const Formula& n = *prem[1]->concl;
    if (n.kind != Formula::Kind::Not || !alpha_equal(*n.lhs, *prem[0]->concl)) {
      return fail("premise 2 must conclude the negation of premise 1");
    }
    return contexts_equal();
  }
};

}  // namespace

CheckOutcome check_step(const Sequent& line, const RuleApplication& app,
                        const std::vector<Sequent>& earlier, Mode mode) {
  StepChecker c{line, app, {}, rule_name(app.rule)};
  int want = premise_count(app.rule);
  if (static_cast<int>(app.premises.size()) != want) {
    return c.fail("expects " + std::to_string(want) + " premise(s), got " +
                  std::to_string(app.premises.size()));
  }
  for (int idx : app.premises) {
    if (idx < 1 || idx > static_cast<int>(earlier.size())) {
      return c.fail("premise reference " + std::to_string(idx) + " is not an earlier line");
    }
    c.prem.push_back(&earlier[idx - 1]);
  }
  if (app.dir && !is_two_way(app.rule)) return c.fail("dir= is only valid for the M-rules");

  switch (app.rule) {
    case RuleId::I: return c.check_i();
    case RuleId::EM: return c.check_em();
    case RuleId::TrueI: return c.check_true_i();
    case RuleId::FalsumE: return c.check_falsum_e();
    case RuleId::AndI: return c.check_and_i();
    case RuleId::AndE1: return c.check_and_e(true);
    case RuleId::AndE2: return c.check_and_e(false);
    case RuleId::OrI1: return c.check_or_i(true);
    case RuleId::OrI2: return c.check_or_i(false);
    case RuleId::OrE: return c.check_or_e();
    case RuleId::ImpI: return c.check_imp_i();
    case RuleId::ImpE: return c.check_imp_e();
    case RuleId::ForallI: return c.check_forall_i();
    case RuleId::ForallE: return c.check_forall_e();
    case RuleId::ExistsI: return c.check_exists_i();
    case RuleId::ExistsE: return c.check_exists_e();
    case RuleId::EqI: return c.check_eq_i();
    case RuleId::EqE: return c.check_eq_e();
    case RuleId::NotM:
    case RuleId::AndM:
    case RuleId::OrM:
    case RuleId::ImpM:
    case RuleId::ForallM:
    case RuleId::ExistsM:
      return c.check_m(app.rule);
    case RuleId::C: return c.check_c(mode);
  }
  return c.fail("unknown rule");
}

DerivationReport check_derivation(const std::vector<ProofLine>& lines,
                                  const std::vector<Sequent>& hypotheses, const Sequent& target,
                                  Mode mode) {
  DerivationReport report;
  std::vector<Sequent> earlier;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const ProofLine& line = lines[i];
    CheckOutcome outcome;
    if (line.just.is_hypothesis) {
      bool member = std::any_of(hypotheses.begin(), hypotheses.end(),
                                [&](const Sequent& h) { return sequent_equal(h, line.seq); });
      if (!member) outcome = {false, "hyp: not among the hypothesis sequents"};
    } else {
      outcome = check_step(line.seq, line.just.app, earlier, mode);
    }
    if (!outcome.ok && report.first_violation == 0) {
      report.first_violation = static_cast<int>(i) + 1;
      report.message = outcome.message;
    }
    report.lines.push_back(std::move(outcome));
    earlier.push_back(line.seq);
  }
  if (report.first_violation == 0) {
    if (lines.empty()) {
      report.first_violation = 0;
      report.message = "empty derivation";
    } else if (!sequent_equal(lines.back().seq, target)) {
      report.first_violation = static_cast<int>(lines.size());
      report.message = "the last line must be the target sequent";
    }
  }
  report.ok = report.first_violation == 0 && !lines.empty();
  return report;
}

std::vector<RuleInfo> rule_catalog(Mode mode) {
  std::vector<RuleInfo> out = {
      {"i", 0, false, "", "", "G, A |- A"},
      {"em", 0, false, "", "", "G |- A \\/ ~A"},
      {"true-i", 0, false, "", "", "G |- ~F"},
      {"falsum-e", 1, false, "", "", "G |- F  ==>  G |- A"},
      {"and-i", 2, false, "", "", "G |- A1,  G |- A2  ==>  G |- A1 /\\ A2"},
      {"and-e", 1, false, "", "", "G |- A1 /\\ A2  ==>  G |- Ai   (and-e-1, and-e-2)"},
      {"or-i", 1, false, "", "", "G |- Ai  ==>  G |- A1 \\/ A2   (or-i-1, or-i-2)"},
      {"or-e", 3, false, "", "",
       "G |- A1 \\/ A2,  G, A1 |- A3,  G, A2 |- A3  ==>  G |- A3"},
      {"imp-i", 1, false, "", "", "G, A1 |- A2  ==>  G |- A1 -> A2"},
      {"imp-e", 2, false, "", "", "G |- A1 -> A2,  G |- A1  ==>  G |- A2"},
      {"forall-i", 1, false, "", "x not free in G", "G |- A  ==>  G |- forall x. A"},
      {"forall-e", 1, false, "t", "", "G |- forall x. A  ==>  G |- A[x:=t]"},
      {"exists-i", 1, false, "t", "", "G |- A[x:=t]  ==>  G |- exists x. A"},
      {"exists-e", 2, false, "", "x not free in G or A2",
       "G |- exists x. A1,  G, A1 |- A2  ==>  G |- A2"},
      {"eq-i", 0, false, "", "", "G |- t = t"},
      {"eq-e", 2, false, "x, A",
       "", "G |- t1 = t2,  G |- A[x:=t1]  ==>  G |- A[x:=t2]"},
      {"not-m", 1, true, "", "", "G |- ~~A  <==>  G |- A"},
      {"and-m", 1, true, "", "", "G |- ~(A1 /\\ A2)  <==>  G |- ~A1 \\/ ~A2"},
      {"or-m", 1, true, "", "", "G |- ~(A1 \\/ A2)  <==>  G |- ~A1 /\\ ~A2"},
      {"imp-m", 1, true, "", "", "G |- ~(A1 -> A2)  <==>  G |- A1 /\\ ~A2"},
      {"forall-m", 1, true, "", "", "G |- ~forall x. A  <==>  G |- exists x. ~A"},
      {"exists-m", 1, true, "", "", "G |- ~exists x. A  <==>  G |- forall x. ~A"},
  };
  if (mode == Mode::Classical) {
    out.push_back({"c", 2, false, "", "", "G |- A1,  G |- ~A1  ==>  G |- A2"});
  }
  return out;
}

// ---------------------------------------------------------------------------
// Proof scripts
// ---------------------------------------------------------------------------

namespace {

[[noreturn]] void script_fail(int lineno, const std::string& msg) {
  throw ParseError("script line " + std::to_string(lineno) + ": " + msg, 0);
}

std::string trimmed(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

// Splits "rule=imp-i from=1 A=P(x) /\ q" into key/value pairs; a value runs
// until the next recognized key so formulas and terms may contain spaces.
std::map<std::string, std::string> parse_keyvals(const std::string& text, int lineno) {
  static const std::vector<std::string> keys = {"rule", "dir", "from", "x", "t", "A"};
  std::vector<std::pair<std::size_t, std::string>> hits;
  for (const auto& key : keys) {
    std::size_t at = 0;
    while ((at = text.find(key + "=", at)) != std::string::npos) {
      bool boundary = at == 0 || std::isspace(static_cast<unsigned char>(text[at - 1]));
      if (boundary) hits.emplace_back(at, key);
      at += key.size() + 1;
    }
  }
  std::sort(hits.begin(), hits.end());
  // A=<formula> extends to the end of the line, so key-like text inside the
  // template (say "x=c") is not mistaken for a parameter.
  for (std::size_t i = 0; i < hits.size(); ++i) {
    if (hits[i].second == "A") {
      hits.resize(i + 1);
      break;
    }
  }
  if (hits.empty() || hits[0].first != text.find_first_not_of(" \t")) {
    script_fail(lineno, "justification must start with rule=<id>");
  }
  std::map<std::string, std::string> out;
  for (std::size_t i = 0; i < hits.size(); ++i) {
    std::size_t vbegin = hits[i].first + hits[i].second.size() + 1;
    std::size_t vend = i + 1 < hits.size() ? hits[i + 1].first : text.size();
    if (!out.emplace(hits[i].second, trimmed(text.substr(vbegin, vend - vbegin))).second) {
      script_fail(lineno, "duplicate key '" + hits[i].second + "'");
    }
  }
  return out;
}

}  // namespace

std::vector<ProofLine> parse_proof_script(std::istream& in, const Signature& sig) {
  std::vector<ProofLine> out;
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    auto hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    std::string line = trimmed(raw);
    if (line.empty()) continue;

    std::size_t i = 0;
    while (i < line.size() && std::isdigit(static_cast<unsigned char>(line[i]))) ++i;
    if (i == 0 || i >= line.size() || line[i] != '.') {
      script_fail(lineno, "expected a line number followed by '.'");
    }
    int number = std::stoi(line.substr(0, i));
    if (number != static_cast<int>(out.size()) + 1) {
      script_fail(lineno, "lines must be numbered consecutively from 1; expected " +
                              std::to_string(out.size() + 1));
    }
    std::string rest = line.substr(i + 1);

    auto turnstile = rest.find("|-");
    if (turnstile == std::string::npos) script_fail(lineno, "missing '|-'");
    std::string hyps_text = rest.substr(0, turnstile);
    std::string after = rest.substr(turnstile + 2);
    auto semi = after.find(';');
    if (semi == std::string::npos) script_fail(lineno, "missing '; rule=...' justification");
    std::string formula_text = trimmed(after.substr(0, semi));
    std::string just_text = after.substr(semi + 1);

    ProofLine pl;
    try {
      std::stringstream hs(hyps_text);
      std::string part;
      while (std::getline(hs, part, ';')) {
        part = trimmed(part);
        if (!part.empty()) pl.seq.hyps.push_back(parse_formula(part, sig));
      }
      if (formula_text.empty()) script_fail(lineno, "missing conclusion formula");
      pl.seq.concl = parse_formula(formula_text, sig);

      auto kv = parse_keyvals(just_text, lineno);
      const std::string& rid = kv.at("rule");
      if (rid == "hyp") {
        if (kv.size() != 1) script_fail(lineno, "rule=hyp takes no other keys");
        pl.just.is_hypothesis = true;
      } else {
        auto rule = rule_from_name(rid);
        if (!rule) script_fail(lineno, "unknown rule '" + rid + "'");
        pl.just.app.rule = *rule;
        if (auto it = kv.find("from"); it != kv.end()) {
          std::stringstream fs(it->second);
          std::string n;
          while (std::getline(fs, n, ',')) {
            n = trimmed(n);
            if (n.empty()) script_fail(lineno, "bad from= list");
            try {
              pl.just.app.premises.push_back(std::stoi(n));
            } catch (const std::exception&) {
              script_fail(lineno, "bad premise number '" + n + "'");
            }
          }
        }
        if (auto it = kv.find("dir"); it != kv.end()) {
          if (it->second == "down") {
            pl.just.app.dir = MDir::Down;
          } else if (it->second == "up") {
            pl.just.app.dir = MDir::Up;
          } else {
            script_fail(lineno, "dir must be up or down");
          }
        }
        if (auto it = kv.find("x"); it != kv.end()) pl.just.app.var = it->second;
        if (auto it = kv.find("t"); it != kv.end()) {
          pl.just.app.term = parse_term(it->second, sig);
        }
        if (auto it = kv.find("A"); it != kv.end()) {
          pl.just.app.templ = parse_formula(it->second, sig);
        }
      }
    } catch (const ParseError& e) {
      std::string what = e.what();
      if (what.rfind("script line", 0) == 0) throw;
      script_fail(lineno, what);
    }
    out.push_back(std::move(pl));
  }
  return out;
}

std::vector<ProofLine> parse_proof_script_file(const std::string& path, const Signature& sig) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open proof script '" + path + "'", 0);
  return parse_proof_script(in, sig);
}

}  // namespace lpf
