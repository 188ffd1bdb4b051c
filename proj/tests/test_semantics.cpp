#include <functional>
#include <random>
#include <sstream>

#include "doctest.h"
#include "lpf/semantics.hpp"
#include "support/table_oracle.hpp"

using namespace lpf;
using lpf_test::clause_eval;

namespace {

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

Structure prop_structure(Tv p, Tv q) {
  Structure s;
  s.domain = {"d1"};
  s.preds["p"] = PredTable{0, {p}};
  s.preds["q"] = PredTable{0, {q}};
  s.eq = identity_eq_table(1);
  return s;
}

// One constant, one unary predicate over two elements.
Structure mono_structure(int c, Tv p1, Tv p2) {
  Structure s;
  s.domain = {"d1", "d2"};
  s.funs["c"] = FunTable{0, {c}};
  s.preds["P"] = PredTable{1, {p1, p2}};
  s.eq = identity_eq_table(2);
  return s;
}

}  // namespace

TEST_SUITE("semantics") {

TEST_CASE("truth value helpers") {
  CHECK(designated(Tv::T));
  CHECK(designated(Tv::B));
  CHECK_FALSE(designated(Tv::F));
  CHECK(tv_not(Tv::B) == Tv::B);
  CHECK(tv_min(Tv::B, Tv::T) == Tv::B);
  CHECK(tv_max(Tv::F, Tv::B) == Tv::B);
  CHECK(tv_imp(Tv::F, Tv::F) == Tv::T);
  CHECK(tv_imp(Tv::B, Tv::F) == Tv::F);
}

TEST_CASE("term evaluation") {
  Signature sig = mono_sig();
  Structure s = mono_structure(1, Tv::T, Tv::F);
  Assignment a;
  a.set("x", 0);
  CHECK(eval_term(*parse_term("x", sig), s, a) == 0);
  CHECK(eval_term(*parse_term("c", sig), s, a) == 1);

  Signature sig2 = sig;
  sig2.add_fun("f", 1);
  Structure s2 = s;
  s2.funs["f"] = FunTable{1, {1, 0}};
  CHECK(eval_term(*parse_term("f(c)", sig2), s2, a) == 0);

  Assignment empty;
  CHECK_THROWS_AS(eval_term(*parse_term("x", sig), s, empty), EvalError);
  CHECK_THROWS_AS(eval_term(*parse_term("f(c)", sig2), s, a), EvalError);
}

TEST_CASE("formula evaluation matches the interpretation table") {
  Signature sig = prop_sig();
  Assignment a;
  for (Tv p : kAllTv) {
    for (Tv q : kAllTv) {
      Structure s = prop_structure(p, q);
      for (const char* text : {"F", "~p", "p /\\ q", "p \\/ q", "p -> q", "~F"}) {
        FormulaPtr f = parse_formula(text, sig);
        CHECK(eval_formula(*f, s, a) == clause_eval(*f, s, a));
      }
    }
  }
  Structure s = prop_structure(Tv::B, Tv::F);
  CHECK(eval_formula(*parse_formula("F", sig), s, a) == Tv::F);
  CHECK(eval_formula(*parse_formula("~p", sig), s, a) == Tv::B);
  CHECK(eval_formula(*parse_formula("p -> q", sig), s, a) == Tv::F);
}

TEST_CASE("quantifier evaluation over all value sets up to domain 3") {
  Signature sig = mono_sig();
  FormulaPtr all = parse_formula("forall x. P(x)", sig);
  FormulaPtr some = parse_formula("exists x. P(x)", sig);
  for (int k = 1; k <= 3; ++k) {
    std::vector<int> idx(k, 0);
    for (;;) {
      Structure s;
      for (int i = 0; i < k; ++i) s.domain.push_back("d" + std::to_string(i + 1));
      s.funs["c"] = FunTable{0, {0}};
      std::vector<Tv> table;
      for (int i = 0; i < k; ++i) table.push_back(kAllTv[idx[i]]);
      s.preds["P"] = PredTable{1, table};
      s.eq = identity_eq_table(k);
      Assignment a;
      CHECK(eval_formula(*all, s, a) == clause_eval(*all, s, a));
      CHECK(eval_formula(*some, s, a) == clause_eval(*some, s, a));
      int i = k;
      while (i-- > 0) {
        if (++idx[i] < 3) break;
        idx[i] = 0;
      }
      if (i == -1) break;
    }
  }
  // the table's "otherwise" clause: values {t,b} make the universal b
  Structure s = mono_structure(0, Tv::T, Tv::B);
  Assignment a;
  CHECK(eval_formula(*all, s, a) == Tv::B);
}

TEST_CASE("closed forms agree with the clauses on random sentences") {
  Signature sig;
  sig.add_fun("c", 0);
  sig.add_fun("f", 1);
  sig.add_pred("p", 0);
  sig.add_pred("P", 1);

  std::mt19937 rng(424242);
  auto pick = [&](int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng); };
  std::function<FormulaPtr(int)> gen = [&](int depth) -> FormulaPtr {
    if (depth == 0) {
      switch (pick(4)) {
        case 0: return falsum();
        case 1: return pred("p");
        case 2: return pred("P", {pick(2) ? var("x") : app("c")});
        default: return eq(var("x"), app("f", {app("c")}));
      }
    }
    switch (pick(6)) {
      case 0: return neg(gen(depth - 1));
      case 1: return conj(gen(depth - 1), gen(depth - 1));
      case 2: return disj(gen(depth - 1), gen(depth - 1));
      case 3: return imp(gen(depth - 1), gen(depth - 1));
      case 4: return forall("x", gen(depth - 1));
      default: return exists("x", gen(depth - 1));
    }
  };

  for (int k = 1; k <= 3; ++k) {
    for (int trial = 0; trial < 200; ++trial) {
      StructureEnumerator se({{"c", 0}, {"f", 1}}, {{"p", 0}, {"P", 1}}, true, k, false, true);
      int skip = pick(200);
      for (int i = 0; i < skip; ++i) {
        if (!se.advance()) break;
      }
      Structure s = se.current();
      Assignment a;
      a.set("x", pick(k));
      FormulaPtr f = gen(3);
      CHECK(eval_formula(*f, s, a) == clause_eval(*f, s, a));
    }
  }
}

TEST_CASE("evaluation is invariant under alpha renaming") {
  Signature sig = mono_sig();
  Structure s = mono_structure(1, Tv::B, Tv::F);
  Assignment a;
  FormulaPtr f = parse_formula("forall x. P(x) -> exists x. P(x)", sig);
  FormulaPtr g = parse_formula("forall y. P(y) -> exists z. P(z)", sig);
  REQUIRE(alpha_equal(*f, *g));
  CHECK(eval_formula(*f, s, a) == eval_formula(*g, s, a));
}

TEST_CASE("holds is designation") {
  Signature sig = prop_sig();
  Assignment a;
  Structure s = prop_structure(Tv::B, Tv::F);
  CHECK(holds(*parse_formula("p", sig), s, a));  // b holds
  CHECK_FALSE(holds(*parse_formula("F", sig), s, a));
  CHECK(holds(*parse_formula("~F", sig), s, a));
}

TEST_CASE("paraconsistency: {p, ~p} does not spread to q") {
  Signature sig = prop_sig();
  std::vector<FormulaPtr> gamma = {parse_formula("p", sig), parse_formula("~p", sig)};
  FormulaPtr q = parse_formula("q", sig);

  // Oracle: sweep the nine valuations with the clause evaluator and record
  // every counter-valuation.
  std::vector<std::pair<Tv, Tv>> expected;
  for (Tv p : kAllTv) {
    for (Tv qv : kAllTv) {
      Structure s = prop_structure(p, qv);
      Assignment a;
      bool premises = designated(clause_eval(*gamma[0], s, a)) &&
                      designated(clause_eval(*gamma[1], s, a));
      if (premises && clause_eval(*q, s, a) == Tv::F) expected.emplace_back(p, qv);
    }
  }
  REQUIRE(expected == std::vector<std::pair<Tv, Tv>>{{Tv::B, Tv::F}});

  SearchVerdict v = check_consequence(gamma, q, {1, 1000});
  REQUIRE(v.found());
  CHECK(v.bound == 1);
  CHECK(v.witness->preds.at("p").table[0] == Tv::B);
  CHECK(v.witness->preds.at("q").table[0] == Tv::F);

  // the witness is re-checkable with the evaluator
  Assignment a = *v.assignment;
  for (const auto& g : gamma) CHECK(holds(*g, *v.witness, a));
  CHECK(eval_formula(*q, *v.witness, a) == Tv::F);
}

TEST_CASE("excluded middle and falsum premises have no counter-models") {
  Signature sig = prop_sig();
  CHECK(check_consequence({}, parse_formula("p \\/ ~p", sig), {3, 100000}).status ==
        SearchStatus::NoWitnessUpTo);
  CHECK(check_consequence({parse_formula("F", sig)}, parse_formula("q", sig), {3, 100000})
            .status == SearchStatus::NoWitnessUpTo);
}

TEST_CASE("equivalence checks") {
  Signature sig = prop_sig();
  CHECK(check_equivalence(parse_formula("p /\\ p", sig), parse_formula("p", sig), {3, 100000})
            .status == SearchStatus::NoWitnessUpTo);
  CHECK(check_equivalence(parse_formula("p", sig), parse_formula("~~p", sig), {3, 100000})
            .status == SearchStatus::NoWitnessUpTo);

  SearchVerdict v =
      check_equivalence(parse_formula("p", sig), parse_formula("p \\/ q", sig), {3, 100000});
  REQUIRE(v.found());
  Assignment a = *v.assignment;
  CHECK(eval_formula(*parse_formula("p", sig), *v.witness, a) !=
        eval_formula(*parse_formula("p \\/ q", sig), *v.witness, a));
}

TEST_CASE("consistency checks") {
  Signature sig = prop_sig();
  SearchVerdict v = check_consistency(parse_formula("p", sig), {3, 100000});
  REQUIRE(v.found());  // p can be b, so p is not consistent
  Assignment a = *v.assignment;
  CHECK(eval_formula(*parse_formula("p", sig), *v.witness, a) == Tv::B);

  CHECK(check_consistency(parse_formula("F", sig), {3, 100000}).status ==
        SearchStatus::NoWitnessUpTo);

  // oracle: p -> F never takes the value b on the three valuations of p
  FormulaPtr guard = parse_formula("p -> F", sig);
  for (Tv p : kAllTv) {
    Structure s = prop_structure(p, Tv::F);
    Assignment b;
    CHECK(clause_eval(*guard, s, b) != Tv::B);
  }
  CHECK(check_consistency(guard, {3, 100000}).status == SearchStatus::NoWitnessUpTo);
}

TEST_CASE("quantified counter-model search uses free variable assignments") {
  Signature sig = mono_sig();
  // P(x) |- forall x. P(x) fails; the first witness appears at domain size 2
  SearchVerdict v = check_consequence({parse_formula("P(x)", sig)},
                                      parse_formula("forall x. P(x)", sig), {3, 1000000});
  REQUIRE(v.found());
  CHECK(v.bound == 2);
  CHECK(v.witness->size() == 2);
}

TEST_CASE("budget exhaustion is inconclusive, not a pass") {
  Signature sig = mono_sig();
  sig.add_pred("Q", 2);
  SearchVerdict v = check_consequence(
      {}, parse_formula("forall x, y. Q(x, y) -> Q(x, y)", sig), {3, 10});
  CHECK(v.status == SearchStatus::Inconclusive);
  CHECK(v.visited == 10);
  CHECK(v.bound < 3);
}

TEST_CASE("classical structures never produce b") {
  CHECK(is_classical(mono_structure(0, Tv::T, Tv::F)));
  CHECK_FALSE(is_classical(mono_structure(0, Tv::B, Tv::F)));

  Signature sig = mono_sig();
  std::vector<FormulaPtr> pool = {
      parse_formula("forall x. P(x) -> P(c)", sig),
      parse_formula("exists x. ~P(x) /\\ x = c", sig),
      parse_formula("P(c) <-> ~P(c)", sig),
      parse_formula("forall x. exists y. x = y -> P(x)", sig),
  };
  for (int k = 1; k <= 2; ++k) {
    StructureEnumerator se({{"c", 0}}, {{"P", 1}}, true, k, /*classical_only=*/true,
                           /*eq_off_diagonal_free=*/true);
    bool more = true;
    while (more) {
      REQUIRE(is_classical(se.current()));
      Assignment a;
      for (const auto& f : pool) {
        Structure s = se.current();
        CHECK(eval_formula(*f, s, a) != Tv::B);
      }
      more = se.advance();
    }
  }

  // material implication on a classical structure
  Signature psig = prop_sig();
  Structure s = prop_structure(Tv::T, Tv::F);
  Assignment a;
  CHECK(eval_formula(*parse_formula("p -> q", psig), s, a) == Tv::F);
}

namespace {

// Textbook two-valued semantics, for the classical-agreement contract.
bool classical_eval(const Formula& f, const Structure& s, Assignment& a) {
  switch (f.kind) {
    case Formula::Kind::Falsum: return false;
    case Formula::Kind::Pred: {
      std::vector<int> args;
      for (const auto& t : f.terms) args.push_back(eval_term(*t, s, a));
      return s.pred_at(f.name, args) == Tv::T;
    }
    case Formula::Kind::Eq:
      return s.eq_at(eval_term(*f.terms[0], s, a), eval_term(*f.terms[1], s, a)) == Tv::T;
    case Formula::Kind::Not: return !classical_eval(*f.lhs, s, a);
    case Formula::Kind::And: {
      bool l = classical_eval(*f.lhs, s, a);
      return classical_eval(*f.rhs, s, a) && l;
    }
    case Formula::Kind::Or: {
      bool l = classical_eval(*f.lhs, s, a);
      return classical_eval(*f.rhs, s, a) || l;
    }
    case Formula::Kind::Imp: {
      bool l = classical_eval(*f.lhs, s, a);
      return classical_eval(*f.rhs, s, a) || !l;
    }
    case Formula::Kind::Forall:
    case Formula::Kind::Exists: {
      bool universal = f.kind == Formula::Kind::Forall;
      auto old = a.get(f.name);
      bool acc = universal;
      for (int d = 0; d < s.size(); ++d) {
        a.set(f.name, d);
        bool v = classical_eval(*f.lhs, s, a);
        acc = universal ? (acc && v) : (acc || v);
      }
      if (old) a.set(f.name, *old); else a.unset(f.name);
      return acc;
    }
  }
  return false;
}

}  // namespace

TEST_CASE("on classical structures the evaluator is two-valued first-order logic") {
  Signature sig = mono_sig();
  std::vector<FormulaPtr> pool = {
      parse_formula("forall x. P(x) -> P(c)", sig),
      parse_formula("exists x. ~P(x) /\\ x = c", sig),
      parse_formula("~(P(c) /\\ ~P(c))", sig),
      parse_formula("forall x. exists y. x = y", sig),
      parse_formula("P(x) -> forall y. P(y) \\/ ~(y = x)", sig),
  };
  for (int k = 1; k <= 2; ++k) {
    StructureEnumerator se({{"c", 0}}, {{"P", 1}}, true, k, /*classical_only=*/true, true);
    bool more = true;
    while (more) {
      Structure s = se.current();
      for (int d = 0; d < k; ++d) {
        Assignment a;
        a.set("x", d);
        for (const auto& f : pool) {
          Tv v = eval_formula(*f, s, a);
          CHECK(v == (classical_eval(*f, s, a) ? Tv::T : Tv::F));
        }
      }
      more = se.advance();
    }
  }
}

TEST_CASE("designation laws at the valuation level") {
  for (Tv a : kAllTv) {
    for (Tv b : kAllTv) {
      CHECK(designated(tv_min(a, b)) == (designated(a) && designated(b)));
      CHECK(designated(tv_max(a, b)) == (designated(a) || designated(b)));
      CHECK(designated(tv_imp(a, b)) == (!designated(a) || designated(b)));
    }
  }
}

TEST_CASE("structure enumeration is deterministic and complete") {
  // nine valuations of two propositional atoms
  StructureEnumerator se({}, {{"p", 0}, {"q", 0}}, false, 1);
  int count = 0;
  std::set<std::pair<Tv, Tv>> seen;
  bool more = true;
  while (more) {
    seen.insert({se.current().preds.at("p").table[0], se.current().preds.at("q").table[0]});
    ++count;
    more = se.advance();
  }
  CHECK(count == 9);
  CHECK(seen.size() == 9);

  // equality enumeration keeps the diagonal designated and off-diagonal f
  StructureEnumerator eqe({}, {}, true, 2);
  int n = 0;
  bool more2 = true;
  while (more2) {
    const Structure& s = eqe.current();
    CHECK(designated(s.eq_at(0, 0)));
    CHECK(designated(s.eq_at(1, 1)));
    CHECK(s.eq_at(0, 1) == Tv::F);
    CHECK(s.eq_at(1, 0) == Tv::F);
    ++n;
    more2 = eqe.advance();
  }
  CHECK(n == 4);  // two designated choices per diagonal cell

  // with free off-diagonal cells the space grows by 3^2
  StructureEnumerator eqf({}, {}, true, 2, false, true);
  int nf = 0;
  bool more3 = true;
  while (more3) {
    ++nf;
    more3 = eqf.advance();
  }
  CHECK(nf == 36);
}

TEST_CASE("structure files round-trip and validate") {
  Signature sig = mono_sig();
  std::string text =
      "domain d1 d2\n"
      "fun c: () -> d1\n"
      "pred P: (d1) -> t\n"
      "pred P: (d2) -> b\n"
      "eq: (d1,d1) -> t\n"
      "eq: (d1,d2) -> f\n"
      "eq: (d2,d1) -> f\n"
      "eq: (d2,d2) -> b\n";
  std::istringstream in(text);
  Structure s = parse_structure(in, sig);
  CHECK(s.size() == 2);
  CHECK(s.preds.at("P").table[1] == Tv::B);
  CHECK(s.eq_at(1, 1) == Tv::B);

  std::istringstream again(format_structure(s));
  Structure back = parse_structure(again, sig);
  CHECK(back.eq == s.eq);
  CHECK(back.preds.at("P").table == s.preds.at("P").table);
  CHECK(back.funs.at("c").table == s.funs.at("c").table);

  // omitted eq rows default to the identity
  std::istringstream noeq(
      "domain d1 d2\nfun c: () -> d2\npred P: (d1) -> t\npred P: (d2) -> f\n");
  Structure d = parse_structure(noeq, sig);
  CHECK(d.eq == identity_eq_table(2));

  // missing cells are rejected
  std::istringstream partial("domain d1 d2\nfun c: () -> d1\npred P: (d1) -> t\n");
  CHECK_THROWS_AS(parse_structure(partial, sig), StructureError);

  // the equality diagonal must be designated
  std::istringstream bad("domain d1\nfun c: () -> d1\npred P: (d1) -> t\neq: (d1,d1) -> f\n");
  CHECK_THROWS_AS(parse_structure(bad, sig), StructureError);

  // undeclared symbols are rejected
  std::istringstream undecl(
      "domain d1\nfun c: () -> d1\npred P: (d1) -> t\npred R: (d1) -> t\n");
  CHECK_THROWS_AS(parse_structure(undecl, sig), StructureError);
}

}  // TEST_SUITE
