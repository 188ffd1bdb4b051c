#pragma once

#include <map>
#include <string>
#include <vector>

#include "lpf/proof.hpp"
#include "lpf/semantics.hpp"
#include "lpf/syntax.hpp"

namespace lpf {

// Reserved symbols of the translated signature. User signatures may not use
// the "__" prefix or the "__hat" suffix, which keeps the symbol mapping
// injective and collision-free.
inline constexpr const char* kTrueToken = "__tt";
inline constexpr const char* kFalseToken = "__ff";
inline constexpr const char* kBothToken = "__bb";
inline constexpr const char* kBoolPred = "__Bool";
inline constexpr const char* kUnivPred = "__Univ";
inline constexpr const char* kEqFun = "__eqF";

// P__hat, the function symbol a predicate P is mapped to.
std::string hat_name(const std::string& pred_name);

// The translated signature: function symbols kept verbatim, every predicate
// P of arity n mapped to a fresh function symbol P__hat of arity n, plus the
// truth-value constants, the equality table function __eqF, and the sort
// predicates __Bool and __Univ.
Signature hat_signature(const Signature& sig);

// Which truth condition a formula translation asserts.
enum class TruthAspect { True, False, Both };

TermPtr translate_term(const TermPtr& t);
FormulaPtr translate_formula(const FormulaPtr& f, TruthAspect aspect);

// Memoizing translator: translations of shared subformulas are shared in
// the output, which keeps translated families of formulas compact.
class Translator {
 public:
  TermPtr term(const TermPtr& t);
  FormulaPtr formula(const FormulaPtr& f, TruthAspect aspect);

 private:
  FormulaPtr univ_of(const std::string& var);

  std::map<std::pair<const Formula*, int>, FormulaPtr> cache_;
  std::map<const Term*, TermPtr> term_cache_;
  std::map<std::string, FormulaPtr> univ_;
};

// The classical axioms describing the translated vocabulary: the three-
// element truth-value domain, the Bool characterization, non-emptiness of
// Univ, Univ/Bool disjointness, Univ-closure of the function symbols,
// Bool-valuedness of the translated predicates and of __eqF, reflexive
// designation of __eqF, and Univ(x) for every free variable of `formulas`.
std::vector<FormulaPtr> ax_set(const Signature& sig, const std::vector<FormulaPtr>& formulas);

// Axioms for the symbols occurring in the sequent, then one translated
// premise per member of the hypotheses, with conclusion
// translate(A, True) \/ translate(A, Both).
Sequent translate_sequent(const Sequent& seq);

// The classical structure a three-valued structure is transformed into: the
// domain grows by the three truth tokens, each P__hat returns the token of
// P's truth value, __eqF tabulates the equality table, __Univ holds exactly
// on the original domain and __Bool exactly on the tokens, and equality is
// the classical identity. Cells with token arguments are filled with
// `filler`; translated formulas guard every quantifier with __Univ, so the
// choice cannot affect them.
Structure star_structure(const Structure& s, const std::string& filler = kTrueToken);

}  // namespace lpf
