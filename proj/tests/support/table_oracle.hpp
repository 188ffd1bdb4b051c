#pragma once

// Independent oracle: a literal transliteration of the three-valued
// interpretation clauses, one conditional per clause. The library evaluator
// uses min/max/guard closed forms instead; the two must agree everywhere.

#include "lpf/semantics.hpp"

namespace lpf_test {

inline lpf::Tv clause_eval(const lpf::Formula& f, const lpf::Structure& s, lpf::Assignment& a) {
  using lpf::Formula;
  using lpf::Tv;
  switch (f.kind) {
    case Formula::Kind::Falsum:
      return Tv::F;
    case Formula::Kind::Pred: {
      std::vector<int> args;
      for (const auto& t : f.terms) args.push_back(lpf::eval_term(*t, s, a));
      return s.pred_at(f.name, args);
    }
    case Formula::Kind::Eq:
      return s.eq_at(lpf::eval_term(*f.terms[0], s, a), lpf::eval_term(*f.terms[1], s, a));
    case Formula::Kind::Not: {
      Tv v = clause_eval(*f.lhs, s, a);
      if (v == Tv::F) return Tv::T;
      if (v == Tv::T) return Tv::F;
      return Tv::B;
    }
    case Formula::Kind::And: {
      Tv l = clause_eval(*f.lhs, s, a), r = clause_eval(*f.rhs, s, a);
      if (l == Tv::T && r == Tv::T) return Tv::T;
      if (l == Tv::F || r == Tv::F) return Tv::F;
      return Tv::B;
    }
    case Formula::Kind::Or: {
      Tv l = clause_eval(*f.lhs, s, a), r = clause_eval(*f.rhs, s, a);
      if (l == Tv::T || r == Tv::T) return Tv::T;
      if (l == Tv::F && r == Tv::F) return Tv::F;
      return Tv::B;
    }
    case Formula::Kind::Imp: {
      Tv l = clause_eval(*f.lhs, s, a), r = clause_eval(*f.rhs, s, a);
      if (l == Tv::F || r == Tv::T) return Tv::T;
      if (l != Tv::F && r == Tv::F) return Tv::F;
      return Tv::B;
    }
    case Formula::Kind::Forall: {
      bool all_true = true, some_false = false;
      auto old = a.get(f.name);
      for (int d = 0; d < s.size(); ++d) {
        a.set(f.name, d);
        Tv v = clause_eval(*f.lhs, s, a);
        all_true = all_true && v == Tv::T;
        some_false = some_false || v == Tv::F;
      }
      if (old) a.set(f.name, *old); else a.unset(f.name);
      if (all_true) return Tv::T;
      if (some_false) return Tv::F;
      return Tv::B;
    }
    case Formula::Kind::Exists: {
      bool some_true = false, all_false = true;
      auto old = a.get(f.name);
      for (int d = 0; d < s.size(); ++d) {
        a.set(f.name, d);
        Tv v = clause_eval(*f.lhs, s, a);
        some_true = some_true || v == Tv::T;
        all_false = all_false && v == Tv::F;
      }
      if (old) a.set(f.name, *old); else a.unset(f.name);
      if (some_true) return Tv::T;
      if (all_false) return Tv::F;
      return Tv::B;
    }
  }
  return Tv::F;
}

}  // namespace lpf_test
