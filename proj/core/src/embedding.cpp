#include "lpf/embedding.hpp"

#include <algorithm>

namespace lpf {

std::string hat_name(const std::string& pred_name) { return pred_name + "__hat"; }

namespace {

void check_reserved(const std::string& name) {
  if (name.rfind("__", 0) == 0) {
    throw SignatureError("symbol '" + name + "' collides with the reserved '__' namespace");
  }
  if (name.size() >= 5 && name.compare(name.size() - 5, 5, "__hat") == 0) {
    throw SignatureError("symbol '" + name + "' collides with the reserved '__hat' suffix");
  }
}

TermPtr token(const char* name) { return app(name); }

}  // namespace

Signature hat_signature(const Signature& sig) {
  Signature out;
  for (const auto& [name, arity] : sig.funs()) {
    check_reserved(name);
    out.add_fun(name, arity);
  }
  for (const auto& [name, arity] : sig.preds()) {
    check_reserved(name);
    out.add_fun(hat_name(name), arity);
  }
  out.add_fun(kTrueToken, 0);
  out.add_fun(kFalseToken, 0);
  out.add_fun(kBothToken, 0);
  out.add_fun(kEqFun, 2);
  out.add_pred(kBoolPred, 1);
  out.add_pred(kUnivPred, 1);
  return out;
}

TermPtr Translator::term(const TermPtr& t) {
  if (t->kind == Term::Kind::Var) return t;
  auto it = term_cache_.find(t.get());
  if (it != term_cache_.end()) return it->second;
  std::vector<TermPtr> args;
  args.reserve(t->args.size());
  for (const auto& a : t->args) args.push_back(term(a));
  // Function symbols are fixed points of the symbol mapping.
  TermPtr out = app(t->name, std::move(args));
  term_cache_.emplace(t.get(), out);
  return out;
}

FormulaPtr Translator::univ_of(const std::string& v) {
  auto it = univ_.find(v);
  if (it != univ_.end()) return it->second;
  FormulaPtr out = pred(kUnivPred, {var(v)});
  univ_.emplace(v, out);
  return out;
}

FormulaPtr Translator::formula(const FormulaPtr& f, TruthAspect aspect) {
  auto key = std::make_pair(f.get(), static_cast<int>(aspect));
  auto it = cache_.find(key);
  if (it != cache_.end()) return it->second;

  FormulaPtr out;
  if (aspect == TruthAspect::Both) {
    // The both-true-and-false translation is the defined abbreviation
    // ~(true-translation \/ false-translation).
    out = neg(disj(formula(f, TruthAspect::True), formula(f, TruthAspect::False)));
  } else {
    bool truth = aspect == TruthAspect::True;
    switch (f->kind) {
      case Formula::Kind::Falsum:
        out = truth ? falsum() : verum();
        break;
      case Formula::Kind::Pred: {
        std::vector<TermPtr> args;
        args.reserve(f->terms.size());
        for (const auto& t : f->terms) args.push_back(term(t));
        out = eq(app(hat_name(f->name), std::move(args)), token(truth ? kTrueToken : kFalseToken));
        break;
      }
      case Formula::Kind::Eq:
        out = eq(app(kEqFun, {term(f->terms[0]), term(f->terms[1])}),
                 token(truth ? kTrueToken : kFalseToken));
        break;
      case Formula::Kind::Not:
        out = formula(f->lhs, truth ? TruthAspect::False : TruthAspect::True);
        break;
      case Formula::Kind::And:
        out = truth ? conj(formula(f->lhs, TruthAspect::True), formula(f->rhs, TruthAspect::True))
                    : disj(formula(f->lhs, TruthAspect::False),
                           formula(f->rhs, TruthAspect::False));
        break;
      case Formula::Kind::Or:
        out = truth ? disj(formula(f->lhs, TruthAspect::True), formula(f->rhs, TruthAspect::True))
                    : conj(formula(f->lhs, TruthAspect::False),
                           formula(f->rhs, TruthAspect::False));
        break;
      case Formula::Kind::Imp:
        out = truth ? disj(formula(f->lhs, TruthAspect::False), formula(f->rhs, TruthAspect::True))
                    : conj(neg(formula(f->lhs, TruthAspect::False)),
                           formula(f->rhs, TruthAspect::False));
        break;
      case Formula::Kind::Forall:
        out = truth ? forall(f->name, imp(univ_of(f->name), formula(f->lhs, TruthAspect::True)))
                    : exists(f->name, conj(univ_of(f->name), formula(f->lhs, TruthAspect::False)));
        break;
      case Formula::Kind::Exists:
        out = truth ? exists(f->name, conj(univ_of(f->name), formula(f->lhs, TruthAspect::True)))
                    : forall(f->name, imp(univ_of(f->name), formula(f->lhs, TruthAspect::False)));
        break;
    }
  }
  cache_.emplace(key, out);
  return out;
}

TermPtr translate_term(const TermPtr& t) { return Translator().term(t); }

FormulaPtr translate_formula(const FormulaPtr& f, TruthAspect aspect) {
  return Translator().formula(f, aspect);
}

namespace {

FormulaPtr iff(const FormulaPtr& a, const FormulaPtr& b) {
  return conj(imp(a, b), imp(b, a));
}

// Univ(v1) /\ ... /\ Univ(vn) -> body, closed under forall v1..vn.
FormulaPtr univ_guarded(const std::vector<std::string>& vars, FormulaPtr body) {
  FormulaPtr guard;
  for (const auto& v : vars) {
    FormulaPtr u = pred(kUnivPred, {var(v)});
    guard = guard ? conj(guard, u) : u;
  }
  FormulaPtr out = imp(guard, std::move(body));
  for (auto it = vars.rbegin(); it != vars.rend(); ++it) out = forall(*it, out);
  return out;
}

std::vector<std::string> fresh_vars(int n) {
  std::vector<std::string> out;
  for (int i = 1; i <= n; ++i) out.push_back("__v" + std::to_string(i));
  return out;
}

}  // namespace

std::vector<FormulaPtr> ax_set(const Signature& sig, const std::vector<FormulaPtr>& formulas) {
  std::vector<FormulaPtr> out;
  TermPtr tt = token(kTrueToken), ff = token(kFalseToken), bb = token(kBothToken);
  const std::string v1 = "__v1", v2 = "__v2";

  // The truth-value domain has exactly three elements.
  out.push_back(conj(conj(neg(eq(tt, ff)), neg(eq(tt, bb))), neg(eq(ff, bb))));
  // Bool holds exactly on the truth values.
  out.push_back(forall(
      v1, iff(pred(kBoolPred, {var(v1)}),
              disj(disj(eq(var(v1), tt), eq(var(v1), ff)), eq(var(v1), bb)))));
  // The domain of individuals is non-empty and disjoint from the truth values.
  out.push_back(exists(v1, pred(kUnivPred, {var(v1)})));
  out.push_back(forall(v1, neg(iff(pred(kUnivPred, {var(v1)}), pred(kBoolPred, {var(v1)})))));
  // Function application stays within the individuals.
  for (const auto& [name, arity] : sig.funs()) {
    if (arity == 0) {
      out.push_back(pred(kUnivPred, {app(name)}));
    } else {
      std::vector<std::string> vars = fresh_vars(arity);
      std::vector<TermPtr> args;
      for (const auto& v : vars) args.push_back(var(v));
      out.push_back(univ_guarded(vars, pred(kUnivPred, {app(name, std::move(args))})));
    }
  }
  // Predicate application yields a truth value.
  for (const auto& [name, arity] : sig.preds()) {
    if (arity == 0) {
      out.push_back(pred(kBoolPred, {app(hat_name(name))}));
    } else {
      std::vector<std::string> vars = fresh_vars(arity);
      std::vector<TermPtr> args;
      for (const auto& v : vars) args.push_back(var(v));
      out.push_back(univ_guarded(vars, pred(kBoolPred, {app(hat_name(name), std::move(args))})));
    }
  }
  // So does the equality table, and it is designated on the diagonal.
  out.push_back(univ_guarded({v1, v2}, pred(kBoolPred, {app(kEqFun, {var(v1), var(v2)})})));
  out.push_back(forall(v1, disj(eq(app(kEqFun, {var(v1), var(v1)}), tt),
                                eq(app(kEqFun, {var(v1), var(v1)}), bb))));
  // Free variables range over the individuals.
  for (const auto& x : free_vars(formulas)) {
    out.push_back(pred(kUnivPred, {var(x)}));
  }
  return out;
}

Sequent translate_sequent(const Sequent& seq) {
  std::vector<FormulaPtr> all = seq.hyps;
  all.push_back(seq.concl);
  SymbolUse use = occurring_symbols(all);
  Signature occurring;
  for (const auto& [name, arity] : use.funs) occurring.add_fun(name, arity);
  for (const auto& [name, arity] : use.preds) occurring.add_pred(name, arity);

  Translator tr;
  Sequent out;
  out.hyps = ax_set(occurring, all);
  for (const auto& h : seq.hyps) {
    out.hyps.push_back(disj(tr.formula(h, TruthAspect::True), tr.formula(h, TruthAspect::Both)));
  }
  out.concl =
      disj(tr.formula(seq.concl, TruthAspect::True), tr.formula(seq.concl, TruthAspect::Both));
  return out;
}

Structure star_structure(const Structure& s, const std::string& filler) {
  const int n = s.size();
  const int m = n + 3;
  Structure out;
  out.domain = s.domain;
  for (const char* t : {kTrueToken, kFalseToken, kBothToken}) {
    if (s.element(t)) throw StructureError("domain element collides with token '" + std::string(t) + "'");
    out.domain.push_back(t);
  }
  const int tok[3] = {/*F*/ n + 1, /*B*/ n + 2, /*T*/ n};  // indexed by Tv
  auto token_of = [&](Tv v) { return tok[static_cast<int>(v)]; };
  int fill = *out.element(filler);

  auto in_old_domain = [&](const std::vector<int>& tuple) {
    return std::all_of(tuple.begin(), tuple.end(), [&](int d) { return d < n; });
  };
  auto old_index = [&](const std::vector<int>& tuple) {
    std::size_t idx = 0;
    for (int d : tuple) idx = idx * n + d;
    return idx;
  };

  // Every function symbol keeps its values on the original domain; cells
  // touching a token get the filler.
  for (const auto& [name, f] : s.funs) {
    FunTable nf{f.arity, {}};
    std::size_t cells = 1;
    for (int i = 0; i < f.arity; ++i) cells *= m;
    nf.table.resize(cells);
    std::vector<int> tuple(f.arity, 0);
    std::size_t idx = 0;
    do {
      nf.table[idx++] = in_old_domain(tuple) ? f.table[old_index(tuple)] : fill;
    } while ([&] {
      for (auto it = tuple.rbegin(); it != tuple.rend(); ++it) {
        if (++*it < m) return true;
        *it = 0;
      }
      return false;
    }());
    out.funs[name] = std::move(nf);
  }

  // P__hat returns the token of P's truth value.
  for (const auto& [name, p] : s.preds) {
    FunTable nf{p.arity, {}};
    std::size_t cells = 1;
    for (int i = 0; i < p.arity; ++i) cells *= m;
    nf.table.resize(cells);
    std::vector<int> tuple(p.arity, 0);
    std::size_t idx = 0;
    do {
      nf.table[idx++] =
          in_old_domain(tuple) ? token_of(p.table[old_index(tuple)]) : fill;
    } while ([&] {
      for (auto it = tuple.rbegin(); it != tuple.rend(); ++it) {
        if (++*it < m) return true;
        *it = 0;
      }
      return false;
    }());
    out.funs[hat_name(name)] = std::move(nf);
  }

  // __eqF tabulates the original equality table.
  {
    FunTable nf{2, std::vector<int>(static_cast<std::size_t>(m) * m, fill)};
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        nf.table[static_cast<std::size_t>(i) * m + j] = token_of(s.eq_at(i, j));
      }
    }
    out.funs[kEqFun] = std::move(nf);
  }

  out.funs[kTrueToken] = FunTable{0, {token_of(Tv::T)}};
  out.funs[kFalseToken] = FunTable{0, {token_of(Tv::F)}};
  out.funs[kBothToken] = FunTable{0, {token_of(Tv::B)}};

  // __Univ holds exactly on the individuals, __Bool exactly on the tokens.
  {
    PredTable univ{1, std::vector<Tv>(m, Tv::F)};
    PredTable boolp{1, std::vector<Tv>(m, Tv::F)};
    for (int d = 0; d < n; ++d) univ.table[d] = Tv::T;
    for (int d = n; d < m; ++d) boolp.table[d] = Tv::T;
    out.preds[kUnivPred] = std::move(univ);
    out.preds[kBoolPred] = std::move(boolp);
  }

  // Equality on the classical side is the identity.
  out.eq = identity_eq_table(m);
  out.validate();
  return out;
}

}  // namespace lpf
