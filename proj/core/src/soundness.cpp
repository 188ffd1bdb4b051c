#include "lpf/soundness.hpp"

#include <bitset>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

#include "lpf/truth.hpp"

namespace lpf {

namespace {

// ---------------------------------------------------------------------------
// Shared bookkeeping
// ---------------------------------------------------------------------------

struct RowBuilder {
  SweepRow row;

  explicit RowBuilder(std::string name) { row.rule = std::move(name); }

  bool failed() const { return !row.pass; }
  void violation(std::string witness) {
    if (row.pass) {
      row.pass = false;
      row.witness = std::move(witness);
    }
  }
};

std::string join_names(const std::vector<FormulaPtr>& pool, const std::vector<int>& members) {
  std::string out = "{";
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (i) out += ", ";
    out += format_formula(*pool[members[i]]);
  }
  return out + "}";
}

// Hypothesis sets drawn from the pool: the empty set, singletons, then pairs,
// in pool order.
std::vector<std::vector<int>> context_index_sets(int pool_size, int max_context) {
  std::vector<std::vector<int>> out;
  out.push_back({});
  if (max_context >= 1) {
    for (int i = 0; i < pool_size; ++i) out.push_back({i});
  }
  if (max_context >= 2) {
    for (int i = 0; i < pool_size; ++i) {
      for (int j = i + 1; j < pool_size; ++j) out.push_back({i, j});
    }
  }
  if (max_context > 2) throw std::invalid_argument("max_context is limited to 2");
  return out;
}

// ---------------------------------------------------------------------------
// Propositional rules: validity over the valuations of the atoms, encoded as
// bit masks (bit set = every hypothesis designated / formula not f there).
// ---------------------------------------------------------------------------

struct PropEngine {
  std::vector<FormulaPtr> pool;
  std::vector<std::vector<Tv>> val;  // [formula][valuation]
  std::vector<std::uint32_t> des;    // designated mask per formula
  std::vector<std::string> atoms;
  std::vector<std::vector<Tv>> valuations;  // [valuation][atom]
  int nvals = 0;
  std::uint32_t full = 0;

  struct Ctx {
    std::vector<int> members;
    std::uint32_t mask;
  };
  std::vector<Ctx> contexts;

  static bool valid(std::uint32_t s, std::uint32_t m) { return (s & ~m) == 0; }

  std::uint32_t mask_of(const std::vector<Tv>& v) const {
    std::uint32_t m = 0;
    for (int i = 0; i < nvals; ++i) {
      if (designated(v[i])) m |= 1u << i;
    }
    return m;
  }

  std::string describe_valuation(int v) const {
    std::string out;
    for (std::size_t i = 0; i < atoms.size(); ++i) {
      if (i) out += ' ';
      out += atoms[i];
      out += '=';
      out += tv_char(valuations[v][i]);
    }
    return out;
  }

  // First valuation in s where the formula vector is f.
  std::string first_counter(std::uint32_t s, const std::vector<Tv>& concl) const {
    for (int v = 0; v < nvals; ++v) {
      if ((s >> v) & 1 && concl[v] == Tv::F) return describe_valuation(v);
    }
    return "";
  }
};

PropEngine build_prop_engine(const SweepOptions& opts) {
  if (opts.prop_atoms < 1 || opts.prop_atoms > 3) {
    throw std::invalid_argument("prop_atoms must be in 1..3");
  }
  if (opts.prop_depth < 1 || opts.prop_depth > 2) {
    throw std::invalid_argument("prop_depth must be 1 or 2");
  }
  PropEngine e;
  const char* names[3] = {"p", "q", "r"};
  for (int i = 0; i < opts.prop_atoms; ++i) e.atoms.push_back(names[i]);

  for (const auto& a : e.atoms) e.pool.push_back(pred(a));
  e.pool.push_back(falsum());
  if (opts.prop_depth >= 2) {
    std::size_t h1 = e.pool.size();
    for (std::size_t i = 0; i < h1; ++i) e.pool.push_back(neg(e.pool[i]));
    using Build = FormulaPtr (*)(FormulaPtr, FormulaPtr);
    for (Build op : {static_cast<Build>(conj), static_cast<Build>(disj),
                     static_cast<Build>(imp)}) {
      for (std::size_t i = 0; i < h1; ++i) {
        for (std::size_t j = 0; j < h1; ++j) e.pool.push_back(op(e.pool[i], e.pool[j]));
      }
    }
  }

  bool classical = opts.semantics == SweepSemantics::Classical;
  std::vector<Tv> values = classical ? std::vector<Tv>{Tv::F, Tv::T}
                                     : std::vector<Tv>{Tv::F, Tv::B, Tv::T};
  std::vector<int> idx(e.atoms.size(), 0);
  for (;;) {
    std::vector<Tv> valuation;
    for (std::size_t i = 0; i < e.atoms.size(); ++i) valuation.push_back(values[idx[i]]);
    e.valuations.push_back(valuation);
    std::size_t i = e.atoms.size();
    while (i-- > 0) {
      if (++idx[i] < static_cast<int>(values.size())) break;
      idx[i] = 0;
    }
    if (i == static_cast<std::size_t>(-1)) break;
  }
  e.nvals = static_cast<int>(e.valuations.size());
  e.full = e.nvals == 32 ? ~0u : (1u << e.nvals) - 1;

  // Evaluate the pool with the real evaluator over one-point structures.
  for (int v = 0; v < e.nvals; ++v) {
    Structure s;
    s.domain = {"d1"};
    for (std::size_t i = 0; i < e.atoms.size(); ++i) {
      s.preds[e.atoms[i]] = PredTable{0, {e.valuations[v][i]}};
    }
    s.eq = identity_eq_table(1);
    Assignment a;
    for (std::size_t f = 0; f < e.pool.size(); ++f) {
      if (v == 0) e.val.emplace_back();
      e.val[f].push_back(eval_formula(*e.pool[f], s, a));
    }
  }
  for (const auto& v : e.val) e.des.push_back(e.mask_of(v));

  for (const auto& members : context_index_sets(static_cast<int>(e.pool.size()),
                                                opts.max_context)) {
    std::uint32_t m = e.full;
    for (int i : members) m &= e.des[i];
    e.contexts.push_back({members, m});
  }
  return e;
}

std::vector<Tv> combine(const std::vector<Tv>& a, const std::vector<Tv>& b, Tv (*op)(Tv, Tv)) {
  std::vector<Tv> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = op(a[i], b[i]);
  return out;
}

std::vector<Tv> negate(const std::vector<Tv>& a) {
  std::vector<Tv> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = tv_not(a[i]);
  return out;
}

void sweep_prop(const SweepOptions& opts, std::vector<SweepRow>& out, bool just_c) {
  PropEngine e = build_prop_engine(opts);
  const int n = static_cast<int>(e.pool.size());

  auto name_of = [&](int i) { return format_formula(*e.pool[i]); };

  auto run = [&](const std::string& rule, auto&& body) {
    RowBuilder b(rule);
    body(b);
    out.push_back(std::move(b.row));
  };

  // No-premise rules: every instance fires.
  auto run_axiom = [&](const std::string& rule, int metavars, auto&& concl_mask,
                       auto&& describe) {
    run(rule, [&](RowBuilder& b) {
      for (const auto& ctx : e.contexts) {
        if (metavars == 0) {
          ++b.row.instances;
          ++b.row.fired;
          auto [m, vec] = concl_mask(0);
          if (!PropEngine::valid(ctx.mask, m)) {
            b.violation("G=" + join_names(e.pool, ctx.members) + "; counter at " +
                        e.first_counter(ctx.mask & ~m, vec));
            return;
          }
          continue;
        }
        for (int a = 0; a < n; ++a) {
          ++b.row.instances;
          ++b.row.fired;
          auto [m, vec] = concl_mask(a);
          std::uint32_t s = ctx.mask;
          if (rule == "i") s &= e.des[a];  // rule I extends the hypotheses by A
          if (!PropEngine::valid(s, m)) {
            b.violation("G=" + join_names(e.pool, ctx.members) + "; " + describe(a) +
                        "; counter at " + e.first_counter(s & ~m, vec));
            return;
          }
        }
      }
    });
  };

  if (just_c) {
    // Rule C: premises G |- A1 and G |- ~A1, conclusion G |- A2. Contexts are
    // scanned outermost so the first reported violation is the canonical one.
    run("c", [&](RowBuilder& b) {
      for (const auto& ctx : e.contexts) {
        for (int a1 = 0; a1 < n; ++a1) {
          std::uint32_t notm = e.mask_of(negate(e.val[a1]));
          bool fires = PropEngine::valid(ctx.mask, e.des[a1]) &&
                       PropEngine::valid(ctx.mask, notm);
          for (int a2 = 0; a2 < n; ++a2) {
            ++b.row.instances;
            if (!fires) continue;
            ++b.row.fired;
            if (!PropEngine::valid(ctx.mask, e.des[a2])) {
              b.violation("G=" + join_names(e.pool, ctx.members) + "; A1=" + name_of(a1) +
                          "; A2=" + name_of(a2) + "; counter at " +
                          e.first_counter(ctx.mask & ~e.des[a2], e.val[a2]));
              return;
            }
          }
        }
      }
    });
    return;
  }

  run_axiom("i", 1,
            [&](int a) { return std::make_pair(e.des[a], e.val[a]); },
            [&](int a) { return "A=" + name_of(a); });
  run_axiom("em", 1,
            [&](int a) {
              auto vec = combine(e.val[a], negate(e.val[a]), tv_max);
              return std::make_pair(e.mask_of(vec), vec);
            },
            [&](int a) { return "A=" + name_of(a); });
  run_axiom("true-i", 0,
            [&](int) {
              std::vector<Tv> vec(e.nvals, Tv::T);
              return std::make_pair(e.full, vec);
            },
            [&](int) { return std::string(); });

  run("falsum-e", [&](RowBuilder& b) {
    for (const auto& ctx : e.contexts) {
      bool fires = ctx.mask == 0;  // G |- F is valid only vacuously
      for (int a = 0; a < n; ++a) {
        ++b.row.instances;
        if (!fires) continue;
        ++b.row.fired;
        if (!PropEngine::valid(ctx.mask, e.des[a])) {
          b.violation("G=" + join_names(e.pool, ctx.members) + "; A=" + name_of(a));
          return;
        }
      }
    }
  });

  run("and-i", [&](RowBuilder& b) {
    for (int a1 = 0; a1 < n && !b.failed(); ++a1) {
      for (int a2 = 0; a2 < n && !b.failed(); ++a2) {
        auto vec = combine(e.val[a1], e.val[a2], tv_min);
        std::uint32_t m = e.mask_of(vec);
        for (const auto& ctx : e.contexts) {
          ++b.row.instances;
          if (!PropEngine::valid(ctx.mask, e.des[a1]) ||
              !PropEngine::valid(ctx.mask, e.des[a2])) {
            continue;
          }
          ++b.row.fired;
          if (!PropEngine::valid(ctx.mask, m)) {
            b.violation("G=" + join_names(e.pool, ctx.members) + "; A1=" + name_of(a1) +
                        "; A2=" + name_of(a2) + "; counter at " +
                        e.first_counter(ctx.mask & ~m, vec));
            break;
          }
        }
      }
    }
  });

  auto run_and_e = [&](const std::string& rule, bool left) {
    run(rule, [&](RowBuilder& b) {
      for (int a1 = 0; a1 < n && !b.failed(); ++a1) {
        for (int a2 = 0; a2 < n && !b.failed(); ++a2) {
          auto vec = combine(e.val[a1], e.val[a2], tv_min);
          std::uint32_t m = e.mask_of(vec);
          int proj = left ? a1 : a2;
          for (const auto& ctx : e.contexts) {
            ++b.row.instances;
            if (!PropEngine::valid(ctx.mask, m)) continue;
            ++b.row.fired;
            if (!PropEngine::valid(ctx.mask, e.des[proj])) {
              b.violation("G=" + join_names(e.pool, ctx.members) + "; A1=" + name_of(a1) +
                          "; A2=" + name_of(a2) + "; counter at " +
                          e.first_counter(ctx.mask & ~e.des[proj], e.val[proj]));
              break;
            }
          }
        }
      }
    });
  };
  run_and_e("and-e-1", true);
  run_and_e("and-e-2", false);

  auto run_or_i = [&](const std::string& rule, bool left) {
    run(rule, [&](RowBuilder& b) {
      for (int a1 = 0; a1 < n && !b.failed(); ++a1) {
        for (int a2 = 0; a2 < n && !b.failed(); ++a2) {
          auto vec = combine(e.val[a1], e.val[a2], tv_max);
          std::uint32_t m = e.mask_of(vec);
          int prem = left ? a1 : a2;
          for (const auto& ctx : e.contexts) {
            ++b.row.instances;
            if (!PropEngine::valid(ctx.mask, e.des[prem])) continue;
            ++b.row.fired;
            if (!PropEngine::valid(ctx.mask, m)) {
              b.violation("G=" + join_names(e.pool, ctx.members) + "; A1=" + name_of(a1) +
                          "; A2=" + name_of(a2) + "; counter at " +
                          e.first_counter(ctx.mask & ~m, vec));
              break;
            }
          }
        }
      }
    });
  };
  run_or_i("or-i-1", true);
  run_or_i("or-i-2", false);

  run("or-e", [&](RowBuilder& b) {
    for (int a1 = 0; a1 < n && !b.failed(); ++a1) {
      for (int a2 = 0; a2 < n && !b.failed(); ++a2) {
        std::uint32_t m_or = e.mask_of(combine(e.val[a1], e.val[a2], tv_max));
        for (int a3 = 0; a3 < n && !b.failed(); ++a3) {
          for (const auto& ctx : e.contexts) {
            ++b.row.instances;
            if (!PropEngine::valid(ctx.mask, m_or) ||
                !PropEngine::valid(ctx.mask & e.des[a1], e.des[a3]) ||
                !PropEngine::valid(ctx.mask & e.des[a2], e.des[a3])) {
              continue;
            }
            ++b.row.fired;
            if (!PropEngine::valid(ctx.mask, e.des[a3])) {
              b.violation("G=" + join_names(e.pool, ctx.members) + "; A1=" + name_of(a1) +
                          "; A2=" + name_of(a2) + "; A3=" + name_of(a3) + "; counter at " +
                          e.first_counter(ctx.mask & ~e.des[a3], e.val[a3]));
              break;
            }
          }
        }
      }
    }
  });

  run("imp-i", [&](RowBuilder& b) {
    for (int a1 = 0; a1 < n && !b.failed(); ++a1) {
      for (int a2 = 0; a2 < n && !b.failed(); ++a2) {
        auto vec = combine(e.val[a1], e.val[a2], tv_imp);
        std::uint32_t m = e.mask_of(vec);
        for (const auto& ctx : e.contexts) {
          ++b.row.instances;
          if (!PropEngine::valid(ctx.mask & e.des[a1], e.des[a2])) continue;
          ++b.row.fired;
          if (!PropEngine::valid(ctx.mask, m)) {
            b.violation("G=" + join_names(e.pool, ctx.members) + "; A1=" + name_of(a1) +
                        "; A2=" + name_of(a2) + "; counter at " +
                        e.first_counter(ctx.mask & ~m, vec));
            break;
          }
        }
      }
    }
  });

  run("imp-e", [&](RowBuilder& b) {
    for (int a1 = 0; a1 < n && !b.failed(); ++a1) {
      for (int a2 = 0; a2 < n && !b.failed(); ++a2) {
        std::uint32_t m = e.mask_of(combine(e.val[a1], e.val[a2], tv_imp));
        for (const auto& ctx : e.contexts) {
          ++b.row.instances;
          if (!PropEngine::valid(ctx.mask, m) || !PropEngine::valid(ctx.mask, e.des[a1])) {
            continue;
          }
          ++b.row.fired;
          if (!PropEngine::valid(ctx.mask, e.des[a2])) {
            b.violation("G=" + join_names(e.pool, ctx.members) + "; A1=" + name_of(a1) +
                        "; A2=" + name_of(a2) + "; counter at " +
                        e.first_counter(ctx.mask & ~e.des[a2], e.val[a2]));
            break;
          }
        }
      }
    }
  });

  // Two-way rules: check each direction as its own schema. `upper` and
  // `lower` build the value vectors of the two sides from the metavariable
  // vectors.
  auto run_m = [&](const std::string& rule, int metavars, auto&& upper, auto&& lower) {
    for (bool down : {true, false}) {
      run(rule + (down ? " (down)" : " (up)"), [&](RowBuilder& b) {
        for (int a1 = 0; a1 < n && !b.failed(); ++a1) {
          int a2_end = metavars == 2 ? n : 1;
          for (int a2 = 0; a2 < a2_end && !b.failed(); ++a2) {
            std::vector<Tv> u = upper(a1, a2), l = lower(a1, a2);
            const std::vector<Tv>& prem_vec = down ? u : l;
            const std::vector<Tv>& concl_vec = down ? l : u;
            std::uint32_t mp = e.mask_of(prem_vec), mc = e.mask_of(concl_vec);
            for (const auto& ctx : e.contexts) {
              ++b.row.instances;
              if (!PropEngine::valid(ctx.mask, mp)) continue;
              ++b.row.fired;
              if (!PropEngine::valid(ctx.mask, mc)) {
                std::string vars = "A1=" + name_of(a1);
                if (metavars == 2) vars += "; A2=" + name_of(a2);
                b.violation("G=" + join_names(e.pool, ctx.members) + "; " + vars +
                            "; counter at " + e.first_counter(ctx.mask & ~mc, concl_vec));
                break;
              }
            }
          }
        }
      });
    }
  };

  run_m("not-m", 1,
        [&](int a, int) { return negate(negate(e.val[a])); },
        [&](int a, int) { return e.val[a]; });
  run_m("and-m", 2,
        [&](int a1, int a2) { return negate(combine(e.val[a1], e.val[a2], tv_min)); },
        [&](int a1, int a2) {
          return combine(negate(e.val[a1]), negate(e.val[a2]), tv_max);
        });
  run_m("or-m", 2,
        [&](int a1, int a2) { return negate(combine(e.val[a1], e.val[a2], tv_max)); },
        [&](int a1, int a2) {
          return combine(negate(e.val[a1]), negate(e.val[a2]), tv_min);
        });
  run_m("imp-m", 2,
        [&](int a1, int a2) { return negate(combine(e.val[a1], e.val[a2], tv_imp)); },
        [&](int a1, int a2) { return combine(e.val[a1], negate(e.val[a2]), tv_min); });
}

// ---------------------------------------------------------------------------
// Quantifier and equality rules: validity over all structures of a
// one-unary-predicate signature and assignments of x, y.
// ---------------------------------------------------------------------------

using Mask = std::bitset<1408>;

struct PointEngine {
  std::vector<Structure> structures;
  std::vector<std::pair<int, Assignment>> points;
  std::vector<FormulaPtr> pool;
  std::vector<Mask> des;
  std::vector<std::set<std::string>> pool_free;

  struct Ctx {
    std::vector<int> members;
    Mask mask;
    std::set<std::string> free;
  };
  std::vector<Ctx> contexts;

  std::map<std::string, Mask> cache;

  static bool valid(const Mask& s, const Mask& m) { return (s & ~m).none(); }

  Mask eval_mask(const FormulaPtr& f) {
    Mask m;
    for (std::size_t i = 0; i < points.size(); ++i) {
      Assignment a = points[i].second;
      if (eval_formula(*f, structures[points[i].first], a) != Tv::F) m.set(i);
    }
    return m;
  }

  const Mask& mask_of(const FormulaPtr& f) {
    std::string key = format_formula(*f);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    return cache.emplace(key, eval_mask(f)).first->second;
  }

  std::string describe_point(std::size_t i) const {
    const Structure& s = structures[points[i].first];
    std::string out = "domain";
    for (const auto& d : s.domain) out += " " + d;
    for (const auto& [name, p] : s.preds) {
      out += "; " + name + ":";
      for (std::size_t c = 0; c < p.table.size(); ++c) {
        out += ' ';
        out += tv_char(p.table[c]);
      }
    }
    bool identity = s.eq == identity_eq_table(s.size());
    if (!identity) {
      out += "; eq:";
      for (Tv v : s.eq) {
        out += ' ';
        out += tv_char(v);
      }
    }
    for (const auto& [v, d] : points[i].second.entries()) {
      out += "; " + v + "=" + s.domain[d];
    }
    return out;
  }

  std::string first_counter(const Mask& s, const Mask& m) const {
    Mask bad = s & ~m;
    for (std::size_t i = 0; i < points.size(); ++i) {
      if (bad.test(i)) return describe_point(i);
    }
    return "";
  }
};

PointEngine build_point_engine(const SweepOptions& opts, bool with_eq) {
  int max_domain = with_eq ? opts.eq_max_domain : opts.quant_max_domain;
  if (max_domain < 1 || max_domain > (with_eq ? 2 : 3)) {
    throw std::invalid_argument("sweep domain bound out of range");
  }
  PointEngine e;
  bool classical = opts.semantics == SweepSemantics::Classical;
  std::map<std::string, int> preds{{"P", 1}};
  for (int k = 1; k <= max_domain; ++k) {
    StructureEnumerator se({}, preds, with_eq, k, classical);
    bool more = true;
    while (more) {
      int sidx = static_cast<int>(e.structures.size());
      e.structures.push_back(se.current());
      AssignmentEnumerator ae({"x", "y"}, k);
      bool more_a = true;
      while (more_a) {
        e.points.emplace_back(sidx, ae.current());
        more_a = ae.advance();
      }
      more = se.advance();
    }
  }
  if (e.points.size() > 1408) throw std::logic_error("sweep point space exceeds mask width");

  // Pool: atoms, their negations, binaries, and single quantifications.
  std::vector<FormulaPtr> atoms = {pred("P", {var("x")}), pred("P", {var("y")}), falsum()};
  if (with_eq) {
    for (const char* l : {"x", "y"}) {
      for (const char* r : {"x", "y"}) atoms.push_back(eq(var(l), var(r)));
    }
  }
  e.pool = atoms;
  for (const auto& a : atoms) e.pool.push_back(neg(a));
  using Build = FormulaPtr (*)(FormulaPtr, FormulaPtr);
  for (Build op : {static_cast<Build>(conj), static_cast<Build>(disj), static_cast<Build>(imp)}) {
    for (const auto& a : atoms) {
      for (const auto& b : atoms) e.pool.push_back(op(a, b));
    }
  }
  for (const char* z : {"x", "y"}) {
    for (const auto& a : atoms) e.pool.push_back(forall(z, a));
  }
  for (const char* z : {"x", "y"}) {
    for (const auto& a : atoms) e.pool.push_back(exists(z, a));
  }

  for (const auto& f : e.pool) {
    e.des.push_back(e.eval_mask(f));
    e.pool_free.push_back(free_vars(*f));
  }
  for (const auto& members : context_index_sets(static_cast<int>(e.pool.size()),
                                                opts.max_context)) {
    PointEngine::Ctx ctx;
    ctx.members = members;
    ctx.mask.set();
    for (std::size_t i = e.points.size(); i < 1408; ++i) ctx.mask.reset(i);
    for (int i : members) {
      ctx.mask &= e.des[i];
      ctx.free.insert(e.pool_free[i].begin(), e.pool_free[i].end());
    }
    e.contexts.push_back(std::move(ctx));
  }
  return e;
}

void sweep_quant(const SweepOptions& opts, std::vector<SweepRow>& out) {
  PointEngine e = build_point_engine(opts, /*with_eq=*/false);
  const int n = static_cast<int>(e.pool.size());
  const char* vars[2] = {"x", "y"};

  auto run = [&](const std::string& rule, auto&& body) {
    RowBuilder b(rule);
    body(b);
    out.push_back(std::move(b.row));
  };

  run("forall-i", [&](RowBuilder& b) {
    for (const char* z : vars) {
      for (int a = 0; a < n && !b.failed(); ++a) {
        const Mask& mq = e.mask_of(forall(z, e.pool[a]));
        for (const auto& ctx : e.contexts) {
          if (ctx.free.count(z)) continue;  // side condition
          ++b.row.instances;
          if (!PointEngine::valid(ctx.mask, e.des[a])) continue;
          ++b.row.fired;
          if (!PointEngine::valid(ctx.mask, mq)) {
            b.violation("G=" + join_names(e.pool, ctx.members) + "; x=" + z +
                        "; A=" + format_formula(*e.pool[a]) + "; counter at " +
                        e.first_counter(ctx.mask, mq));
            break;
          }
        }
      }
      if (b.failed()) break;
    }
  });

  run("forall-e", [&](RowBuilder& b) {
    for (const char* z : vars) {
      for (int a = 0; a < n && !b.failed(); ++a) {
        const Mask& mq = e.mask_of(forall(z, e.pool[a]));
        for (const char* t : vars) {
          const Mask& ms = e.mask_of(substitute(z, var(t), e.pool[a]));
          for (const auto& ctx : e.contexts) {
            ++b.row.instances;
            if (!PointEngine::valid(ctx.mask, mq)) continue;
            ++b.row.fired;
            if (!PointEngine::valid(ctx.mask, ms)) {
              b.violation("G=" + join_names(e.pool, ctx.members) + "; x=" + z + "; t=" + t +
                          "; A=" + format_formula(*e.pool[a]) + "; counter at " +
                          e.first_counter(ctx.mask, ms));
              break;
            }
          }
          if (b.failed()) break;
        }
      }
      if (b.failed()) break;
    }
  });

  run("exists-i", [&](RowBuilder& b) {
    for (const char* z : vars) {
      for (int a = 0; a < n && !b.failed(); ++a) {
        const Mask& mq = e.mask_of(exists(z, e.pool[a]));
        for (const char* t : vars) {
          const Mask& ms = e.mask_of(substitute(z, var(t), e.pool[a]));
          for (const auto& ctx : e.contexts) {
            ++b.row.instances;
            if (!PointEngine::valid(ctx.mask, ms)) continue;
            ++b.row.fired;
            if (!PointEngine::valid(ctx.mask, mq)) {
              b.violation("G=" + join_names(e.pool, ctx.members) + "; x=" + z + "; t=" + t +
                          "; A=" + format_formula(*e.pool[a]) + "; counter at " +
                          e.first_counter(ctx.mask, mq));
              break;
            }
          }
          if (b.failed()) break;
        }
      }
      if (b.failed()) break;
    }
  });

  run("exists-e", [&](RowBuilder& b) {
    for (const char* z : vars) {
      for (int a1 = 0; a1 < n && !b.failed(); ++a1) {
        const Mask& mex = e.mask_of(exists(z, e.pool[a1]));
        for (int a2 = 0; a2 < n && !b.failed(); ++a2) {
          if (e.pool_free[a2].count(z)) continue;  // side condition, conclusion part
          for (const auto& ctx : e.contexts) {
            if (ctx.free.count(z)) continue;  // side condition, context part
            ++b.row.instances;
            if (!PointEngine::valid(ctx.mask, mex) ||
                !PointEngine::valid(ctx.mask & e.des[a1], e.des[a2])) {
              continue;
            }
            ++b.row.fired;
            if (!PointEngine::valid(ctx.mask, e.des[a2])) {
              b.violation("G=" + join_names(e.pool, ctx.members) + "; x=" + z +
                          "; A1=" + format_formula(*e.pool[a1]) +
                          "; A2=" + format_formula(*e.pool[a2]) + "; counter at " +
                          e.first_counter(ctx.mask, e.des[a2]));
              break;
            }
          }
        }
      }
      if (b.failed()) break;
    }
  });

  auto run_m = [&](const std::string& rule, bool universal) {
    for (bool down : {true, false}) {
      run(rule + (down ? " (down)" : " (up)"), [&](RowBuilder& b) {
        for (const char* z : vars) {
          for (int a = 0; a < n && !b.failed(); ++a) {
            FormulaPtr upper = universal ? neg(forall(z, e.pool[a]))
                                         : neg(exists(z, e.pool[a]));
            FormulaPtr lower = universal ? exists(z, neg(e.pool[a]))
                                         : forall(z, neg(e.pool[a]));
            const Mask& mp = e.mask_of(down ? upper : lower);
            const Mask& mc = e.mask_of(down ? lower : upper);
            for (const auto& ctx : e.contexts) {
              ++b.row.instances;
              if (!PointEngine::valid(ctx.mask, mp)) continue;
              ++b.row.fired;
              if (!PointEngine::valid(ctx.mask, mc)) {
                b.violation("G=" + join_names(e.pool, ctx.members) + "; x=" + z +
                            "; A=" + format_formula(*e.pool[a]) + "; counter at " +
                            e.first_counter(ctx.mask, mc));
                break;
              }
            }
          }
          if (b.failed()) break;
        }
      });
    }
  };
  run_m("forall-m", true);
  run_m("exists-m", false);
}

void sweep_eq(const SweepOptions& opts, std::vector<SweepRow>& out) {
  PointEngine e = build_point_engine(opts, /*with_eq=*/true);
  const int n = static_cast<int>(e.pool.size());
  const char* vars[2] = {"x", "y"};

  {
    RowBuilder b("eq-i");
    for (const char* t : vars) {
      const Mask& m = e.mask_of(eq(var(t), var(t)));
      for (const auto& ctx : e.contexts) {
        ++b.row.instances;
        ++b.row.fired;
        if (!PointEngine::valid(ctx.mask, m)) {
          b.violation("G=" + join_names(e.pool, ctx.members) + "; t=" + t + "; counter at " +
                      e.first_counter(ctx.mask, m));
          break;
        }
      }
      if (b.failed()) break;
    }
    out.push_back(std::move(b.row));
  }

  {
    RowBuilder b("eq-e");
    for (const char* t1 : vars) {
      for (const char* t2 : vars) {
        const Mask& meq = e.mask_of(eq(var(t1), var(t2)));
        for (const char* z : vars) {
          for (int a = 0; a < n && !b.failed(); ++a) {
            const Mask& ml = e.mask_of(substitute(z, var(t1), e.pool[a]));
            const Mask& mr = e.mask_of(substitute(z, var(t2), e.pool[a]));
            for (const auto& ctx : e.contexts) {
              ++b.row.instances;
              if (!PointEngine::valid(ctx.mask, meq) || !PointEngine::valid(ctx.mask, ml)) {
                continue;
              }
              ++b.row.fired;
              if (!PointEngine::valid(ctx.mask, mr)) {
                b.violation("G=" + join_names(e.pool, ctx.members) + "; t1=" + t1 +
                            "; t2=" + t2 + "; x=" + z +
                            "; A=" + format_formula(*e.pool[a]) + "; counter at " +
                            e.first_counter(ctx.mask, mr));
                break;
              }
            }
          }
          if (b.failed()) break;
        }
        if (b.failed()) break;
      }
      if (b.failed()) break;
    }
    out.push_back(std::move(b.row));
  }
}

}  // namespace

std::vector<SweepRow> rule_soundness_sweep(const SweepOptions& opts) {
  std::vector<SweepRow> out;
  sweep_prop(opts, out, /*just_c=*/false);
  sweep_quant(opts, out);
  sweep_eq(opts, out);
  if (opts.include_classical_rule) sweep_prop(opts, out, /*just_c=*/true);
  return out;
}

}  // namespace lpf
