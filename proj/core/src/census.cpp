#include "lpf/census.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace lpf {

ConnectiveTables lp_tables() {
  ConnectiveTables c{};
  for (Tv a : kAllTv) {
    c.neg[static_cast<int>(a)] = tv_not(a);
    for (Tv b : kAllTv) {
      c.conj[static_cast<int>(a)][static_cast<int>(b)] = tv_min(a, b);
      c.disj[static_cast<int>(a)][static_cast<int>(b)] = tv_max(a, b);
      c.impl[static_cast<int>(a)][static_cast<int>(b)] = tv_imp(a, b);
    }
  }
  return c;
}

namespace {

constexpr int iF = static_cast<int>(Tv::F);
constexpr int iB = static_cast<int>(Tv::B);
constexpr int iT = static_cast<int>(Tv::T);

struct FreeCell {
  enum class Table { Conj, Disj, Impl, Neg } table;
  int row, col;
};

// The 13 underdetermined cells; every other cell is pinned by classical
// agreement or by the designation patterns (the non-designated value is f).
constexpr FreeCell kFreeCells[] = {
    {FreeCell::Table::Conj, iT, iB}, {FreeCell::Table::Conj, iB, iT},
    {FreeCell::Table::Conj, iB, iB},
    {FreeCell::Table::Disj, iT, iB}, {FreeCell::Table::Disj, iB, iT},
    {FreeCell::Table::Disj, iB, iB}, {FreeCell::Table::Disj, iF, iB},
    {FreeCell::Table::Disj, iB, iF},
    {FreeCell::Table::Impl, iF, iB}, {FreeCell::Table::Impl, iT, iB},
    {FreeCell::Table::Impl, iB, iT}, {FreeCell::Table::Impl, iB, iB},
    {FreeCell::Table::Neg, iB, 0},
};

ConnectiveTables base_tables() {
  ConnectiveTables c{};
  // Classical corners.
  c.neg[iT] = Tv::F;
  c.neg[iF] = Tv::T;
  for (int a : {iF, iT}) {
    for (int b : {iF, iT}) {
      c.conj[a][b] = a == iT && b == iT ? Tv::T : Tv::F;
      c.disj[a][b] = a == iT || b == iT ? Tv::T : Tv::F;
      c.impl[a][b] = a == iF || b == iT ? Tv::T : Tv::F;
    }
  }
  // Non-designated cells forced to f by the designation patterns.
  c.conj[iF][iB] = c.conj[iB][iF] = Tv::F;
  c.impl[iB][iF] = Tv::F;
  return c;
}

}  // namespace

std::vector<ConnectiveTables> enumerate_candidates() {
  constexpr int kCells = 13;
  std::vector<ConnectiveTables> out;
  out.reserve(1 << kCells);
  const ConnectiveTables base = base_tables();
  for (int index = 0; index < (1 << kCells); ++index) {
    ConnectiveTables c = base;
    for (int j = 0; j < kCells; ++j) {
      Tv v = (index >> (kCells - 1 - j)) & 1 ? Tv::B : Tv::T;
      const FreeCell& cell = kFreeCells[j];
      switch (cell.table) {
        case FreeCell::Table::Conj: c.conj[cell.row][cell.col] = v; break;
        case FreeCell::Table::Disj: c.disj[cell.row][cell.col] = v; break;
        case FreeCell::Table::Impl: c.impl[cell.row][cell.col] = v; break;
        case FreeCell::Table::Neg: c.neg[cell.row] = v; break;
      }
    }
    out.push_back(c);
  }
  return out;
}

namespace {

Tv tneg(const ConnectiveTables& c, Tv a) { return c.neg[static_cast<int>(a)]; }
Tv tand(const ConnectiveTables& c, Tv a, Tv b) {
  return c.conj[static_cast<int>(a)][static_cast<int>(b)];
}
Tv tor(const ConnectiveTables& c, Tv a, Tv b) {
  return c.disj[static_cast<int>(a)][static_cast<int>(b)];
}
Tv timp(const ConnectiveTables& c, Tv a, Tv b) {
  return c.impl[static_cast<int>(a)][static_cast<int>(b)];
}

Tv fold(const ConnectiveTables& c, std::vector<Tv>& values, bool conjunctive) {
  std::sort(values.begin(), values.end());
  Tv acc = values.front();
  for (std::size_t i = 1; i < values.size(); ++i) {
    acc = conjunctive ? tand(c, acc, values[i]) : tor(c, acc, values[i]);
  }
  return acc;
}

}  // namespace

Tv fold_forall(const ConnectiveTables& c, std::vector<Tv> values) {
  if (values.empty()) throw std::invalid_argument("fold over empty value set");
  return fold(c, values, true);
}

Tv fold_exists(const ConnectiveTables& c, std::vector<Tv> values) {
  if (values.empty()) throw std::invalid_argument("fold over empty value set");
  return fold(c, values, false);
}

bool satisfies_law(const ConnectiveTables& c, int law) {
  const Tv top = tneg(c, Tv::F);  // T is the abbreviation ~F
  switch (law) {
    case 1:
      for (Tv a : kAllTv) {
        if (tand(c, a, Tv::F) != Tv::F) return false;
      }
      return true;
    case 2:
      for (Tv a : kAllTv) {
        if (tor(c, a, top) != top) return false;
      }
      return true;
    case 3:
      for (Tv a : kAllTv) {
        if (tand(c, a, top) != a) return false;
      }
      return true;
    case 4:
      for (Tv a : kAllTv) {
        if (tor(c, a, Tv::F) != a) return false;
      }
      return true;
    case 5:
      for (Tv a : kAllTv) {
        if (tand(c, a, a) != a) return false;
      }
      return true;
    case 6:
      for (Tv a : kAllTv) {
        if (tor(c, a, a) != a) return false;
      }
      return true;
    case 7:
      for (Tv a : kAllTv) {
        for (Tv b : kAllTv) {
          if (tand(c, a, b) != tand(c, b, a)) return false;
        }
      }
      return true;
    case 8:
      for (Tv a : kAllTv) {
        for (Tv b : kAllTv) {
          if (tor(c, a, b) != tor(c, b, a)) return false;
        }
      }
      return true;
    case 9:
    case 10: {
      // With x not free in A every instance has A's value, so the quantifier
      // folds a constant multiset; sizes up to 3 cover the three-valued case.
      for (Tv a : kAllTv) {
        for (int n = 1; n <= 3; ++n) {
          std::vector<Tv> values(n, a);
          Tv v = law == 9 ? fold_forall(c, values) : fold_exists(c, values);
          if (v != a) return false;
        }
      }
      return true;
    }
    case 11:
      for (Tv a : kAllTv) {
        if (tneg(c, tneg(c, a)) != a) return false;
      }
      return true;
    case 12:
      for (Tv a : kAllTv) {
        if (timp(c, Tv::F, a) != top) return false;
      }
      return true;
    case 13:
      for (Tv a : kAllTv) {
        for (Tv b : kAllTv) {
          if (timp(c, tor(c, a, tneg(c, a)), b) != b) return false;
        }
      }
      return true;
    default:
      throw std::invalid_argument("law must be in 1..13");
  }
}

CensusResult count_candidates(const std::set<int>& laws) {
  for (int law : laws) {
    if (law < 1 || law > 13) throw std::invalid_argument("law must be in 1..13");
  }
  CensusResult out;
  std::vector<ConnectiveTables> survivors;
  for (const ConnectiveTables& c : enumerate_candidates()) {
    bool keep = std::all_of(laws.begin(), laws.end(),
                            [&](int law) { return satisfies_law(c, law); });
    if (keep) {
      ++out.count;
      survivors.push_back(c);
    }
  }
  if (out.count <= 32) out.survivors = std::move(survivors);
  return out;
}

Tv eval_prop(const Formula& f, const ConnectiveTables& c,
             const std::map<std::string, Tv>& valuation) {
  switch (f.kind) {
    case Formula::Kind::Falsum:
      return Tv::F;
    case Formula::Kind::Pred: {
      if (!f.terms.empty()) throw std::invalid_argument("formula is not propositional");
      auto it = valuation.find(f.name);
      if (it == valuation.end()) throw std::invalid_argument("atom '" + f.name + "' unvalued");
      return it->second;
    }
    case Formula::Kind::Not:
      return tneg(c, eval_prop(*f.lhs, c, valuation));
    case Formula::Kind::And:
      return tand(c, eval_prop(*f.lhs, c, valuation), eval_prop(*f.rhs, c, valuation));
    case Formula::Kind::Or:
      return tor(c, eval_prop(*f.lhs, c, valuation), eval_prop(*f.rhs, c, valuation));
    case Formula::Kind::Imp:
      return timp(c, eval_prop(*f.lhs, c, valuation), eval_prop(*f.rhs, c, valuation));
    default:
      throw std::invalid_argument("formula is not propositional");
  }
}

std::set<std::string> atoms_of(const Formula& f) {
  std::set<std::string> out;
  for (const auto& [name, arity] : occurring_symbols({std::make_shared<Formula>(f)}).preds) {
    if (arity == 0) out.insert(name);
  }
  return out;
}

std::string format_tables(const ConnectiveTables& c) {
  const Tv order[3] = {Tv::T, Tv::F, Tv::B};
  std::string out = "neg:";
  for (Tv a : order) {
    out += "  ";
    out += tv_char(a);
    out += "->";
    out += tv_char(c.neg[static_cast<int>(a)]);
  }
  out += "\n";
  auto grid = [&](const std::string& label, const std::array<std::array<Tv, 3>, 3>& t) {
    out += label + " | t f b\n";
    for (Tv a : order) {
      out += std::string(label.size() - 1, ' ');
      out += tv_char(a);
      out += " |";
      for (Tv b : order) {
        out += ' ';
        out += tv_char(t[static_cast<int>(a)][static_cast<int>(b)]);
      }
      out += "\n";
    }
  };
  grid("and", c.conj);
  grid("or ", c.disj);
  grid("imp", c.impl);
  return out;
}

namespace {

// Runs fn over every valuation of the given atoms, odometer order f, b, t.
void for_each_valuation(const std::set<std::string>& atoms,
                        const std::function<void(const std::map<std::string, Tv>&)>& fn) {
  std::vector<std::string> names(atoms.begin(), atoms.end());
  std::vector<int> idx(names.size(), 0);
  for (;;) {
    std::map<std::string, Tv> val;
    for (std::size_t i = 0; i < names.size(); ++i) val[names[i]] = kAllTv[idx[i]];
    fn(val);
    std::size_t i = names.size();
    while (i-- > 0) {
      if (++idx[i] < 3) break;
      idx[i] = 0;
    }
    if (i == static_cast<std::size_t>(-1)) break;
  }
}

}  // namespace

InternalizationReport check_internalization_consistency(const FormulaPtr& a) {
  if (!is_propositional(*a)) throw std::invalid_argument("formula is not propositional");
  const ConnectiveTables lp = lp_tables();
  InternalizationReport r{true, true};
  // The internalizing formula (A -> F) \/ (~A -> F) is evaluated
  // compositionally from A's value at each valuation.
  for_each_valuation(atoms_of(*a), [&](const std::map<std::string, Tv>& val) {
    Tv v = eval_prop(*a, lp, val);
    if (v == Tv::B) r.semantic_side = false;
    Tv internal = tor(lp, timp(lp, v, Tv::F), timp(lp, tneg(lp, v), Tv::F));
    if (!designated(internal)) r.internalized_side = false;
  });
  return r;
}

InternalizationReport check_internalization_equivalence(const FormulaPtr& a1,
                                                        const FormulaPtr& a2) {
  if (!is_propositional(*a1) || !is_propositional(*a2)) {
    throw std::invalid_argument("formula is not propositional");
  }
  const ConnectiveTables lp = lp_tables();
  auto tiff = [&](Tv a, Tv b) { return tand(lp, timp(lp, a, b), timp(lp, b, a)); };
  std::set<std::string> atoms = atoms_of(*a1);
  std::set<std::string> atoms2 = atoms_of(*a2);
  atoms.insert(atoms2.begin(), atoms2.end());
  InternalizationReport r{true, true};
  // (A1 <-> A2) /\ (~A1 <-> ~A2), evaluated compositionally.
  for_each_valuation(atoms, [&](const std::map<std::string, Tv>& val) {
    Tv v1 = eval_prop(*a1, lp, val), v2 = eval_prop(*a2, lp, val);
    if (v1 != v2) r.semantic_side = false;
    Tv internal = tand(lp, tiff(v1, v2), tiff(tneg(lp, v1), tneg(lp, v2)));
    if (!designated(internal)) r.internalized_side = false;
  });
  return r;
}

}  // namespace lpf
