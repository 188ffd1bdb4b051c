// Acceptance suite: one pass/fail line per criterion, nonzero exit when any
// criterion fails. Each criterion pins its exact expectations and its wall
// clock budget.

#include <array>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "lpf/census.hpp"
#include "lpf/embedding.hpp"
#include "lpf/proof.hpp"
#include "lpf/semantics.hpp"
#include "lpf/soundness.hpp"
#include "lpf/syntax.hpp"
#include "../support/table_oracle.hpp"

using namespace lpf;

namespace {

const std::string kCorpus = LPF_CORPUS_DIR;

struct Check {
  int failures = 0;
  std::string first;

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ++failures;
      if (first.empty()) first = what;
    }
  }
};

Signature prop_sig() {
  Signature sig;
  sig.add_pred("p", 0);
  sig.add_pred("q", 0);
  return sig;
}

Signature mono_sig() {
  Signature sig;
  sig.add_fun("c", 0);
  sig.add_pred("P", 1);
  return sig;
}

Structure valuation_structure(const std::vector<std::pair<std::string, Tv>>& atoms) {
  Structure s;
  s.domain = {"d1"};
  for (const auto& [name, v] : atoms) s.preds[name] = PredTable{0, {v}};
  s.eq = identity_eq_table(1);
  return s;
}

// ---------------------------------------------------------------------------
// Criterion 1: the evaluator matches every interpretation clause, on all
// connective cells and on all quantifier value sets over domains <= 3.
// ---------------------------------------------------------------------------

void criterion_table_fidelity(Check& c) {
  Signature sig = prop_sig();
  // Expected cells, transcribed clause by clause; indexed by Tv (f, b, t).
  constexpr Tv N[3] = {Tv::T, Tv::B, Tv::F};
  constexpr Tv A[3][3] = {{Tv::F, Tv::F, Tv::F}, {Tv::F, Tv::B, Tv::B}, {Tv::F, Tv::B, Tv::T}};
  constexpr Tv O[3][3] = {{Tv::F, Tv::B, Tv::T}, {Tv::B, Tv::B, Tv::T}, {Tv::T, Tv::T, Tv::T}};
  constexpr Tv I[3][3] = {{Tv::T, Tv::T, Tv::T}, {Tv::F, Tv::B, Tv::T}, {Tv::F, Tv::B, Tv::T}};

  FormulaPtr np = parse_formula("~p", sig);
  FormulaPtr pq_and = parse_formula("p /\\ q", sig);
  FormulaPtr pq_or = parse_formula("p \\/ q", sig);
  FormulaPtr pq_imp = parse_formula("p -> q", sig);
  FormulaPtr bot = parse_formula("F", sig);
  FormulaPtr atom = parse_formula("p", sig);

  Assignment a;
  for (Tv p : kAllTv) {
    Structure s = valuation_structure({{"p", p}, {"q", Tv::F}});
    c.expect(eval_formula(*np, s, a) == N[static_cast<int>(p)], "negation cell");
    c.expect(eval_formula(*bot, s, a) == Tv::F, "falsum clause");
    c.expect(eval_formula(*atom, s, a) == p, "atom clause");
    for (Tv q : kAllTv) {
      Structure sq = valuation_structure({{"p", p}, {"q", q}});
      int i = static_cast<int>(p), j = static_cast<int>(q);
      c.expect(eval_formula(*pq_and, sq, a) == A[i][j], "conjunction cell");
      c.expect(eval_formula(*pq_or, sq, a) == O[i][j], "disjunction cell");
      c.expect(eval_formula(*pq_imp, sq, a) == I[i][j], "implication cell");
    }
  }

  // equality clause: the table lookup, with a designated diagonal
  Signature msig = mono_sig();
  Structure ms;
  ms.domain = {"d1", "d2"};
  ms.funs["c"] = FunTable{0, {1}};
  ms.preds["P"] = PredTable{1, {Tv::T, Tv::F}};
  ms.eq = {Tv::B, Tv::F, Tv::T, Tv::T};
  Assignment ma;
  ma.set("x", 0);
  c.expect(eval_formula(*parse_formula("x = x", msig), ms, ma) == Tv::B, "equality clause");
  c.expect(eval_formula(*parse_formula("x = c", msig), ms, ma) == Tv::F, "equality clause");

  // quantifiers: every value multiset over domains 1..3, against the clauses
  FormulaPtr all = parse_formula("forall x. P(x)", msig);
  FormulaPtr some = parse_formula("exists x. P(x)", msig);
  for (int k = 1; k <= 3; ++k) {
    std::vector<int> idx(k, 0);
    for (;;) {
      Structure s;
      for (int i = 0; i < k; ++i) s.domain.push_back("d" + std::to_string(i + 1));
      s.funs["c"] = FunTable{0, {0}};
      std::vector<Tv> tab;
      for (int i = 0; i < k; ++i) tab.push_back(kAllTv[idx[i]]);
      s.preds["P"] = PredTable{1, tab};
      s.eq = identity_eq_table(k);

      bool all_true = true, some_false = false, some_true = false, all_false = true;
      for (Tv v : tab) {
        all_true = all_true && v == Tv::T;
        some_false = some_false || v == Tv::F;
        some_true = some_true || v == Tv::T;
        all_false = all_false && v == Tv::F;
      }
      Tv expect_all = all_true ? Tv::T : some_false ? Tv::F : Tv::B;
      Tv expect_some = some_true ? Tv::T : all_false ? Tv::F : Tv::B;
      Assignment qa;
      c.expect(eval_formula(*all, s, qa) == expect_all, "universal clause");
      c.expect(eval_formula(*some, s, qa) == expect_some, "existential clause");

      int i = k;
      while (i-- > 0) {
        if (++idx[i] < 3) break;
        idx[i] = 0;
      }
      if (i == -1) break;
    }
  }
}

// ---------------------------------------------------------------------------
// Criterion 2: the paraconsistency counter-model, against the nine-valuation
// brute-force oracle.
// ---------------------------------------------------------------------------

void criterion_paraconsistency(Check& c) {
  Signature sig = prop_sig();
  std::vector<FormulaPtr> gamma = {parse_formula("p", sig), parse_formula("~p", sig)};
  FormulaPtr concl = parse_formula("q", sig);

  std::set<std::pair<Tv, Tv>> counter_valuations;
  for (Tv p : kAllTv) {
    for (Tv q : kAllTv) {
      Structure s = valuation_structure({{"p", p}, {"q", q}});
      Assignment a;
      bool premises_hold = true;
      for (const auto& g : gamma) {
        premises_hold = premises_hold && designated(lpf_test::clause_eval(*g, s, a));
      }
      if (premises_hold && lpf_test::clause_eval(*concl, s, a) == Tv::F) {
        counter_valuations.insert({p, q});
      }
    }
  }
  c.expect(counter_valuations == std::set<std::pair<Tv, Tv>>{{Tv::B, Tv::F}},
           "oracle: unique counter-valuation p=b q=f");

  SearchVerdict v = check_consequence(gamma, concl, {1, 100000});
  c.expect(v.found(), "counter-model found");
  c.expect(v.bound == 1, "found at domain search depth 1");
  if (v.found()) {
    c.expect(v.witness->preds.at("p").table[0] == Tv::B, "witness has p=b");
    c.expect(v.witness->preds.at("q").table[0] == Tv::F, "witness has q=f");
  }
}

// ---------------------------------------------------------------------------
// Criterion 3: census counts 8192 / 32 / 16 / 1, and the unique survivor is
// the evaluator's own table set.
// ---------------------------------------------------------------------------

void criterion_census(Check& c) {
  auto upto = [](int n) {
    std::set<int> s;
    for (int i = 1; i <= n; ++i) s.insert(i);
    return s;
  };
  c.expect(count_candidates({}).count == 8192, "no laws: 8192");
  c.expect(count_candidates(upto(10)).count == 32, "laws 1-10: 32");
  c.expect(count_candidates(upto(11)).count == 16, "laws 1-11: 16");
  CensusResult one = count_candidates(upto(13));
  c.expect(one.count == 1, "laws 1-13: 1");
  c.expect(one.survivors.size() == 1 && one.survivors[0] == lp_tables(),
           "survivor equals the evaluator tables cell for cell");
}

// ---------------------------------------------------------------------------
// Criterion 4: the shipped evaluator satisfies all thirteen laws, verified
// exhaustively by the bounded equivalence checker.
// ---------------------------------------------------------------------------

void criterion_laws(Check& c) {
  Signature sig = prop_sig();
  auto eqv = [&](const char* a, const char* b, const char* what) {
    SearchVerdict v =
        check_equivalence(parse_formula(a, sig), parse_formula(b, sig), {3, 1'000'000});
    c.expect(v.status == SearchStatus::NoWitnessUpTo, what);
  };
  eqv("p /\\ F", "F", "law 1");
  eqv("p \\/ T", "T", "law 2");
  eqv("p /\\ T", "p", "law 3");
  eqv("p \\/ F", "p", "law 4");
  eqv("p /\\ p", "p", "law 5");
  eqv("p \\/ p", "p", "law 6");
  eqv("p /\\ q", "q /\\ p", "law 7");
  eqv("p \\/ q", "q \\/ p", "law 8");
  eqv("~~p", "p", "law 11");
  eqv("F -> p", "T", "law 12");
  eqv("(p \\/ ~p) -> q", "q", "law 13");

  // laws 9 and 10 over every structure with one unary predicate, domain <= 3
  Signature msig;
  msig.add_pred("P", 1);
  msig.add_pred("p", 0);
  auto qeqv = [&](const char* a, const char* b, const char* what) {
    SearchVerdict v =
        check_equivalence(parse_formula(a, msig), parse_formula(b, msig), {3, 10'000'000});
    c.expect(v.status == SearchStatus::NoWitnessUpTo, what);
  };
  qeqv("forall x. P(y)", "P(y)", "law 9");
  qeqv("forall x. p", "p", "law 9, closed body");
  qeqv("exists x. P(y)", "P(y)", "law 10");
  qeqv("exists x. p", "p", "law 10, closed body");
}

// ---------------------------------------------------------------------------
// Criterion 5: rule soundness sweep. All Table rules pass under the three-
// valued semantics; rule c fails with the p=b q=f witness and passes under
// the classical restriction.
// ---------------------------------------------------------------------------

void criterion_soundness_sweep(Check& c) {
  std::vector<SweepRow> rows = rule_soundness_sweep({});
  int rule_rows = 0;
  for (const auto& r : rows) {
    if (r.rule == "c") {
      c.expect(!r.pass, "rule c fails under the three-valued semantics");
      c.expect(r.witness.find("p=b") != std::string::npos, "witness valuation p=b");
      c.expect(r.witness.find("q=f") != std::string::npos, "witness valuation q=f");
    } else {
      ++rule_rows;
      c.expect(r.pass, "rule " + r.rule + " sound at sweep scale");
    }
  }
  c.expect(rule_rows == 30, "30 directional schemas cover the 22 rules");

  SweepOptions classical;
  classical.semantics = SweepSemantics::Classical;
  for (const auto& r : rule_soundness_sweep(classical)) {
    c.expect(r.pass, "classical sweep: " + r.rule);
  }
}

// ---------------------------------------------------------------------------
// Criterion 6: embedding correspondence, exhaustively for one constant and
// one unary predicate, domains of size 1-2, all formulas to depth 3.
//
// The family has ~92k formulas evaluated at ~1.3k structure/assignment
// points, so evaluation runs over the shared-subformula graph: each node is
// visited once per structure and x-column, with the same value combinators
// the evaluator uses, and the graph values are spot-checked against
// eval_formula on random samples.
// ---------------------------------------------------------------------------

struct Dag {
  enum class Op : std::uint8_t { Atom, Falsum, Not, And, Or, Imp, ForallX, ExistsX };
  struct Node {
    Op op;
    int a = -1, b = -1;
  };
  std::vector<Node> nodes;
  std::vector<const Formula*> atoms;
  std::map<const Formula*, int> index;

  int add(const FormulaPtr& f) {
    auto it = index.find(f.get());
    if (it != index.end()) return it->second;
    Node n{};
    switch (f->kind) {
      case Formula::Kind::Falsum:
        n.op = Op::Falsum;
        break;
      case Formula::Kind::Pred:
      case Formula::Kind::Eq:
        n.op = Op::Atom;
        n.a = static_cast<int>(atoms.size());
        atoms.push_back(f.get());
        break;
      case Formula::Kind::Not:
        n.op = Op::Not;
        n.a = add(f->lhs);
        break;
      case Formula::Kind::And:
      case Formula::Kind::Or:
      case Formula::Kind::Imp:
        n.op = f->kind == Formula::Kind::And  ? Op::And
               : f->kind == Formula::Kind::Or ? Op::Or
                                              : Op::Imp;
        n.a = add(f->lhs);
        n.b = add(f->rhs);
        break;
      case Formula::Kind::Forall:
      case Formula::Kind::Exists:
        if (f->name != "x") throw std::logic_error("the family quantifies over x only");
        n.op = f->kind == Formula::Kind::Forall ? Op::ForallX : Op::ExistsX;
        n.a = add(f->lhs);
        break;
    }
    nodes.push_back(n);
    index.emplace(f.get(), static_cast<int>(nodes.size()) - 1);
    return static_cast<int>(nodes.size()) - 1;
  }
};

// val[node][d]: value under the assignment x := element d.
using Columns = std::array<Tv, 8>;

void dag_evaluate(const Dag& dag, const Structure& s, std::vector<Columns>& val) {
  int m = s.size();
  val.resize(dag.nodes.size());
  std::vector<Columns> atom_val(dag.atoms.size());
  for (std::size_t i = 0; i < dag.atoms.size(); ++i) {
    for (int d = 0; d < m; ++d) {
      Assignment a;
      a.set("x", d);
      atom_val[i][d] = eval_formula(*dag.atoms[i], s, a);
    }
  }
  for (std::size_t id = 0; id < dag.nodes.size(); ++id) {
    const Dag::Node& n = dag.nodes[id];
    Columns& out = val[id];
    switch (n.op) {
      case Dag::Op::Atom:
        out = atom_val[n.a];
        break;
      case Dag::Op::Falsum:
        out.fill(Tv::F);
        break;
      case Dag::Op::Not:
        for (int d = 0; d < m; ++d) out[d] = tv_not(val[n.a][d]);
        break;
      case Dag::Op::And:
        for (int d = 0; d < m; ++d) out[d] = tv_min(val[n.a][d], val[n.b][d]);
        break;
      case Dag::Op::Or:
        for (int d = 0; d < m; ++d) out[d] = tv_max(val[n.a][d], val[n.b][d]);
        break;
      case Dag::Op::Imp:
        for (int d = 0; d < m; ++d) out[d] = tv_imp(val[n.a][d], val[n.b][d]);
        break;
      case Dag::Op::ForallX:
      case Dag::Op::ExistsX: {
        Tv acc = n.op == Dag::Op::ForallX ? Tv::T : Tv::F;
        for (int d = 0; d < m; ++d) {
          acc = n.op == Dag::Op::ForallX ? tv_min(acc, val[n.a][d])
                                         : tv_max(acc, val[n.a][d]);
        }
        out.fill(acc);
        break;
      }
    }
  }
}

void criterion_embedding(Check& c) {
  Signature sig = mono_sig();

  // All formulas to depth 3 over the atoms of the signature, built by exact
  // height so the family has no duplicate members.
  std::vector<FormulaPtr> h1 = {
      falsum(),
      pred("P", {var("x")}),
      pred("P", {app("c")}),
      eq(var("x"), var("x")),
      eq(var("x"), app("c")),
      eq(app("c"), var("x")),
      eq(app("c"), app("c")),
  };
  auto extend = [](const std::vector<FormulaPtr>& lower,
                   const std::vector<FormulaPtr>& exact) {
    std::vector<FormulaPtr> next;
    for (const auto& a : exact) next.push_back(neg(a));
    auto bin = [&](const FormulaPtr& a, const FormulaPtr& b) {
      next.push_back(conj(a, b));
      next.push_back(disj(a, b));
      next.push_back(imp(a, b));
    };
    for (const auto& a : lower) {
      for (const auto& b : exact) bin(a, b);
    }
    for (const auto& a : exact) {
      for (const auto& b : lower) bin(a, b);
      for (const auto& b : exact) bin(a, b);
    }
    for (const auto& a : exact) {
      next.push_back(forall("x", a));
      next.push_back(exists("x", a));
    }
    return next;
  };
  std::vector<FormulaPtr> h2 = extend({}, h1);
  std::vector<FormulaPtr> h3 = extend(h1, h2);
  std::vector<FormulaPtr> family = h1;
  family.insert(family.end(), h2.begin(), h2.end());
  family.insert(family.end(), h3.begin(), h3.end());
  c.expect(family.size() == 92407, "family size: all formulas to depth 3");

  Translator tr;
  Dag src, star_dag;
  std::vector<int> src_id, t_id, f_id, b_id;
  src_id.reserve(family.size());
  for (const auto& f : family) {
    src_id.push_back(src.add(f));
    t_id.push_back(star_dag.add(tr.formula(f, TruthAspect::True)));
    f_id.push_back(star_dag.add(tr.formula(f, TruthAspect::False)));
    b_id.push_back(star_dag.add(tr.formula(f, TruthAspect::Both)));
  }

  std::vector<FormulaPtr> ax = ax_set(sig, {pred("P", {var("x")})});

  std::mt19937 rng(7031);
  auto pick = [&](int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng); };
  long long spot_checks = 0;

  std::vector<Columns> src_val, star_val;
  for (int k = 1; k <= 2; ++k) {
    StructureEnumerator se({{"c", 0}}, {{"P", 1}}, true, k, false,
                           /*eq_off_diagonal_free=*/true);
    bool more = true;
    while (more) {
      const Structure& s = se.current();
      Structure star = star_structure(s);
      dag_evaluate(src, s, src_val);
      dag_evaluate(star_dag, star, star_val);

      for (int d = 0; d < k; ++d) {
        for (const auto& f : ax) {
          Assignment aa;
          aa.set("x", d);
          if (!holds(*f, star, aa)) {
            c.expect(false, "axiom fails in a star structure: " + format_formula(*f));
          }
        }
      }

      for (std::size_t i = 0; i < family.size(); ++i) {
        for (int d = 0; d < k; ++d) {
          Tv v = src_val[src_id[i]][d];
          bool ht = star_val[t_id[i]][d] == Tv::T;
          bool hf = star_val[f_id[i]][d] == Tv::T;
          bool hb = star_val[b_id[i]][d] == Tv::T;
          if (((v == Tv::T) != ht) || ((v == Tv::F) != hf) || ((v == Tv::B) != hb)) {
            c.expect(false, "correspondence fails for " + format_formula(*family[i]));
          }
          if (ht + hf + hb != 1) {
            c.expect(false, "exactly-one-of fails for " + format_formula(*family[i]));
          }
        }
      }

      // spot-check the graph evaluation against the evaluator itself
      for (int t = 0; t < 3; ++t) {
        int i = pick(static_cast<int>(family.size()));
        int d = pick(k);
        Assignment a2;
        a2.set("x", d);
        c.expect(eval_formula(*family[i], s, a2) == src_val[src_id[i]][d],
                 "graph evaluation mismatch on the source side");
        Assignment a3;
        a3.set("x", d);
        c.expect((eval_formula(*tr.formula(family[i], TruthAspect::True), star, a3) == Tv::T) ==
                     (star_val[t_id[i]][d] == Tv::T),
                 "graph evaluation mismatch on the star side");
        ++spot_checks;
      }
      more = se.advance();
    }
  }
  c.expect(spot_checks >= 1900, "spot-check volume");
}

// ---------------------------------------------------------------------------
// Criterion 7: the shipped proof corpus checks with the expected verdicts.
// ---------------------------------------------------------------------------

void criterion_proof_corpus(Check& c) {
  auto run = [&](const char* file, const char* signame, Mode mode) {
    Signature sig = parse_signature_file(kCorpus + "/sigs/" + signame + ".sig");
    auto lines = parse_proof_script_file(kCorpus + "/proofs/" + file, sig);
    std::vector<Sequent> hyps;
    for (const auto& l : lines) {
      if (l.just.is_hypothesis) hyps.push_back(l.seq);
    }
    return check_derivation(lines, hyps, lines.back().seq, mode);
  };

  c.expect(run("imp_refl.lpf", "prop", Mode::LP).ok, "proof of |- p -> p");
  c.expect(run("dne.lpf", "prop", Mode::LP).ok, "proof of |- ~~p -> p");
  c.expect(run("demorgan_and.lpf", "prop", Mode::LP).ok,
           "proof of |- ~(p /\\ q) -> ~p \\/ ~q");
  c.expect(run("forall_intro_ok.lpf", "mono", Mode::LP).ok,
           "universal introduction with the side condition met");
  c.expect(run("exists_elim.lpf", "mono", Mode::LP).ok,
           "existential elimination with the side condition met");

  DerivationReport bad = run("forall_intro_bad.lpf", "mono", Mode::LP);
  c.expect(!bad.ok, "universal introduction with x free in the hypotheses is rejected");
  c.expect(bad.first_violation == 2, "rejection points at the offending line");
  c.expect(bad.message.find("side condition") != std::string::npos,
           "rejection names the side condition");
}

// ---------------------------------------------------------------------------
// Criterion 8: internalization of consistency and logical equivalence agree
// with the semantic notions over an exhaustive propositional family.
// ---------------------------------------------------------------------------

void criterion_internalization(Check& c) {
  std::vector<FormulaPtr> h1 = {pred("p"), pred("q"), falsum()};
  auto extend = [](const std::vector<FormulaPtr>& lower,
                   const std::vector<FormulaPtr>& exact) {
    std::vector<FormulaPtr> next;
    for (const auto& a : exact) next.push_back(neg(a));
    auto bin = [&](const FormulaPtr& a, const FormulaPtr& b) {
      next.push_back(conj(a, b));
      next.push_back(disj(a, b));
      next.push_back(imp(a, b));
    };
    for (const auto& a : lower) {
      for (const auto& b : exact) bin(a, b);
    }
    for (const auto& a : exact) {
      for (const auto& b : lower) bin(a, b);
      for (const auto& b : exact) bin(a, b);
    }
    return next;
  };
  std::vector<FormulaPtr> h2 = extend({}, h1);
  std::vector<FormulaPtr> h3 = extend(h1, h2);
  std::vector<FormulaPtr> family = h1;
  family.insert(family.end(), h2.begin(), h2.end());
  family.insert(family.end(), h3.begin(), h3.end());
  c.expect(family.size() == 3303, "family size: propositional formulas to depth 3");

  long long disagreements_e = 0;
  for (const auto& a : family) {
    if (!check_internalization_consistency(a).agree()) ++disagreements_e;
  }
  c.expect(disagreements_e == 0, "internalized consistency agrees on the whole family");

  // agreement is symmetric in the pair, so unordered pairs suffice
  long long disagreements_f = 0;
  for (std::size_t i = 0; i < family.size(); ++i) {
    for (std::size_t j = i; j < family.size(); ++j) {
      if (!check_internalization_equivalence(family[i], family[j]).agree()) {
        ++disagreements_f;
      }
    }
  }
  c.expect(disagreements_f == 0, "internalized equivalence agrees on all pairs");
}

struct Criterion {
  int id;
  const char* name;
  double budget_seconds;
  std::function<void(Check&)> run;
};

}  // namespace

int main() {
  std::vector<Criterion> criteria = {
      {1, "truth-table fidelity", 1.0, criterion_table_fidelity},
      {2, "paraconsistent counter-model", 1.0, criterion_paraconsistency},
      {3, "census counts 8192/32/16/1", 10.0, criterion_census},
      {4, "thirteen-law suite", 30.0, criterion_laws},
      {5, "rule soundness sweep", 300.0, criterion_soundness_sweep},
      {6, "embedding correspondence", 300.0, criterion_embedding},
      {7, "proof corpus verdicts", 60.0, criterion_proof_corpus},
      {8, "internalization properties", 60.0, criterion_internalization},
  };

  int failed = 0;
  for (const auto& crit : criteria) {
    Check check;
    auto start = std::chrono::steady_clock::now();
    try {
      crit.run(check);
    } catch (const std::exception& e) {
      check.expect(false, std::string("exception: ") + e.what());
    }
    double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    check.expect(elapsed < crit.budget_seconds, "over time budget");

    bool ok = check.failures == 0;
    failed += ok ? 0 : 1;
    std::printf("[%d] %-32s %s (%.2fs, budget %.0fs)%s%s\n", crit.id, crit.name,
                ok ? "PASS" : "FAIL", elapsed, crit.budget_seconds, ok ? "" : " -- ",
                ok ? "" : check.first.c_str());
  }
  return failed;
}
