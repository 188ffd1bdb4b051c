#pragma once

#include <string>
#include <vector>

#include "lpf/proof.hpp"
#include "lpf/semantics.hpp"

namespace lpf {

enum class SweepSemantics { LP, Classical };

// Instance space of the rule soundness sweep. Propositional rules are
// instantiated with all formulas over `prop_atoms` atoms up to height
// `prop_depth` and hypothesis sets of up to `max_context` pool formulas;
// validity is decided over all valuations. The quantifier rules run over a
// one-unary-predicate signature with variables x and y and all structures
// with domain sizes up to `quant_max_domain`; the equality rules add the
// equality atoms over x, y and enumerate equality tables, up to
// `eq_max_domain`.
struct SweepOptions {
  int prop_atoms = 2;        // 1..3
  int prop_depth = 2;        // 1..2
  int max_context = 2;       // 0..2
  int quant_max_domain = 2;  // 1..3
  int eq_max_domain = 2;     // 1..2
  SweepSemantics semantics = SweepSemantics::LP;
  bool include_classical_rule = true;  // sweep rule C as well
};

struct SweepRow {
  std::string rule;  // rule id, with the direction for the two-way rules
  long long instances = 0;  // side-condition-satisfying instances
  long long fired = 0;      // instances whose premises were all valid
  bool pass = true;
  std::string witness;  // first violating instance, "" when pass
};

// For every inference rule, confirms over the bounded instance space that
// whenever all premises of an instance have no counter-model, neither does
// its conclusion. Under LP semantics rule C fails this sweep (the report
// carries the witnessing instance and valuation); restricted to classical
// structures it passes.
std::vector<SweepRow> rule_soundness_sweep(const SweepOptions& opts = {});

}  // namespace lpf
