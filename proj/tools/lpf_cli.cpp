// lpf: parse, evaluate, search for counter-models, check proofs, translate
// into classical logic, and run the connective census for the three-valued
// paraconsistent logic implemented by lpf_core.
//
// Exit codes: 0 ok, 1 parse/input error, 2 semantic or check failure,
// 3 inconclusive (search budget exhausted).

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "lpf/census.hpp"
#include "lpf/embedding.hpp"
#include "lpf/proof.hpp"
#include "lpf/semantics.hpp"
#include "lpf/soundness.hpp"
#include "lpf/syntax.hpp"

using json = nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitParse = 1;
constexpr int kExitFailure = 2;
constexpr int kExitInconclusive = 3;

struct RunConfig {
  std::string sig_path;
  std::string structure_path;
  std::string assign;
  std::string mode = "lp";
  int max_domain = 3;
  long long budget = 2'000'000;
  std::string format = "text";
  std::string laws;
};

lpf::Signature load_sig(const RunConfig& cfg) {
  if (cfg.sig_path.empty()) throw lpf::SignatureError("--sig <file> is required");
  return lpf::parse_signature_file(cfg.sig_path);
}

lpf::Mode mode_of(const RunConfig& cfg) {
  if (cfg.mode == "lp") return lpf::Mode::LP;
  if (cfg.mode == "classical") return lpf::Mode::Classical;
  throw std::invalid_argument("--mode must be lp or classical");
}

// Gamma arguments are ';'-separated formulas, or @path for one formula per
// line.
std::vector<lpf::FormulaPtr> parse_gamma(const std::string& text, const lpf::Signature& sig) {
  std::vector<lpf::FormulaPtr> out;
  auto add = [&](const std::string& part) {
    auto b = part.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return;
    auto e = part.find_last_not_of(" \t\r\n");
    out.push_back(lpf::parse_formula(part.substr(b, e - b + 1), sig));
  };
  if (!text.empty() && text[0] == '@') {
    std::ifstream in(text.substr(1));
    if (!in) throw lpf::ParseError("cannot open premise file '" + text.substr(1) + "'", 0);
    std::string line;
    while (std::getline(in, line)) {
      auto hash = line.find('#');
      if (hash != std::string::npos) line.erase(hash);
      add(line);
    }
    return out;
  }
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ';')) add(part);
  return out;
}

json structure_json(const lpf::Structure& s) {
  json j;
  j["domain"] = s.domain;
  std::vector<std::string> rows;
  std::istringstream lines(lpf::format_structure(s));
  std::string line;
  while (std::getline(lines, line)) {
    if (line.rfind("domain", 0) != 0) rows.push_back(line);
  }
  j["rows"] = rows;
  // Compact form for purely propositional witnesses.
  bool propositional = s.funs.empty() && s.size() == 1;
  for (const auto& [name, p] : s.preds) propositional = propositional && p.arity == 0;
  if (propositional) {
    json atoms = json::object();
    for (const auto& [name, p] : s.preds) atoms[name] = std::string(1, lpf::tv_char(p.table[0]));
    j["atoms"] = atoms;
  }
  return j;
}

json assignment_json(const lpf::Structure& s, const lpf::Assignment& a) {
  json j = json::object();
  for (const auto& [v, d] : a.entries()) j[v] = s.domain[d];
  return j;
}

void render_witness_text(const json& j, std::ostream& os) {
  const json& w = j["witness"];
  if (w.contains("atoms")) {
    std::string line;
    for (const auto& [k, v] : w["atoms"].items()) {
      if (!line.empty()) line += ' ';
      line += k + "=" + v.get<std::string>();
    }
    os << "  " << line << "\n";
  } else {
    os << "  domain";
    for (const auto& d : w["domain"]) os << " " << d.get<std::string>();
    os << "\n";
    for (const auto& row : w["rows"]) os << "  " << row.get<std::string>() << "\n";
  }
  if (j.contains("assignment") && !j["assignment"].empty()) {
    os << "  assignment:";
    for (const auto& [k, v] : j["assignment"].items()) {
      os << " " << k << "=" << v.get<std::string>();
    }
    os << "\n";
  }
}

int emit_search(const RunConfig& cfg, const char* command, const lpf::SearchVerdict& v,
                const char* witness_label, const char* pass_label) {
  json j;
  j["command"] = command;
  j["max_domain"] = cfg.max_domain;
  j["visited"] = v.visited;
  switch (v.status) {
    case lpf::SearchStatus::WitnessFound:
      j["status"] = witness_label;
      j["bound"] = v.bound;
      j["witness"] = structure_json(*v.witness);
      j["assignment"] = assignment_json(*v.witness, *v.assignment);
      break;
    case lpf::SearchStatus::NoWitnessUpTo:
      j["status"] = pass_label;
      j["bound"] = v.bound;
      break;
    case lpf::SearchStatus::Inconclusive:
      j["status"] = "inconclusive";
      j["bound"] = v.bound;
      break;
  }
  if (cfg.format == "machine") {
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << j["status"].get<std::string>();
    if (v.status == lpf::SearchStatus::NoWitnessUpTo) {
      std::cout << " up to domain size " << v.bound;
    } else if (v.status == lpf::SearchStatus::WitnessFound) {
      std::cout << " at domain size " << v.bound;
    } else {
      std::cout << " (budget of " << cfg.budget << " points exhausted)";
    }
    std::cout << "\n";
    if (v.status == lpf::SearchStatus::WitnessFound) render_witness_text(j, std::cout);
  }
  if (v.status == lpf::SearchStatus::WitnessFound) return kExitFailure;
  if (v.status == lpf::SearchStatus::Inconclusive) return kExitInconclusive;
  return kExitOk;
}

std::set<int> parse_laws(const std::string& text) {
  std::set<int> out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    auto dash = part.find("..");
    std::size_t len = 2;
    if (dash == std::string::npos) {
      dash = part.find('-');
      len = 1;
    }
    try {
      if (dash == std::string::npos) {
        out.insert(std::stoi(part));
      } else {
        int lo = std::stoi(part.substr(0, dash));
        int hi = std::stoi(part.substr(dash + len));
        for (int i = lo; i <= hi; ++i) out.insert(i);
      }
    } catch (const std::exception&) {
      throw std::invalid_argument("bad --laws specification '" + text + "'");
    }
  }
  for (int law : out) {
    if (law < 1 || law > 13) throw std::invalid_argument("laws must be in 1..13");
  }
  return out;
}

int cmd_parse(const RunConfig& cfg, const std::string& text) {
  lpf::Signature sig = load_sig(cfg);
  lpf::FormulaPtr f = lpf::parse_formula(text, sig);
  json j;
  j["command"] = "parse";
  j["formula"] = lpf::format_formula(*f);
  if (cfg.format == "machine") {
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << j["formula"].get<std::string>() << "\n";
  }
  return kExitOk;
}

int cmd_eval(const RunConfig& cfg, const std::string& text) {
  lpf::Signature sig = load_sig(cfg);
  lpf::FormulaPtr f = lpf::parse_formula(text, sig);
  if (cfg.structure_path.empty()) throw lpf::StructureError("--structure <file> is required");
  lpf::Structure s = lpf::parse_structure_file(cfg.structure_path, sig);
  lpf::Assignment a;
  if (!cfg.assign.empty()) {
    std::stringstream ss(cfg.assign);
    std::string part;
    while (std::getline(ss, part, ',')) {
      auto eq = part.find('=');
      if (eq == std::string::npos) throw std::invalid_argument("--assign wants x=d1,y=d2");
      auto d = s.element(part.substr(eq + 1));
      if (!d) throw std::invalid_argument("unknown element '" + part.substr(eq + 1) + "'");
      a.set(part.substr(0, eq), *d);
    }
  }
  lpf::Tv v = lpf::eval_formula(*f, s, a);
  json j;
  j["command"] = "eval";
  j["formula"] = lpf::format_formula(*f);
  j["value"] = std::string(1, lpf::tv_char(v));
  if (cfg.format == "machine") {
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << j["value"].get<std::string>() << "\n";
  }
  return kExitOk;
}

int cmd_consequence(const RunConfig& cfg, const std::string& gamma_text,
                    const std::string& concl_text) {
  lpf::Signature sig = load_sig(cfg);
  auto gamma = parse_gamma(gamma_text, sig);
  auto concl = lpf::parse_formula(concl_text, sig);
  lpf::SearchOptions opts{cfg.max_domain, cfg.budget};
  return emit_search(cfg, "consequence", lpf::check_consequence(gamma, concl, opts),
                     "counter-model", "no counter-model");
}

int cmd_equiv(const RunConfig& cfg, const std::string& a_text, const std::string& b_text) {
  lpf::Signature sig = load_sig(cfg);
  auto a = lpf::parse_formula(a_text, sig);
  auto b = lpf::parse_formula(b_text, sig);
  lpf::SearchOptions opts{cfg.max_domain, cfg.budget};
  return emit_search(cfg, "equiv", lpf::check_equivalence(a, b, opts), "counter-witness",
                     "no counter-witness");
}

int cmd_consistent(const RunConfig& cfg, const std::string& a_text) {
  lpf::Signature sig = load_sig(cfg);
  auto a = lpf::parse_formula(a_text, sig);
  lpf::SearchOptions opts{cfg.max_domain, cfg.budget};
  return emit_search(cfg, "consistent", lpf::check_consistency(a, opts), "counter-witness",
                     "no counter-witness");
}

int cmd_check(const RunConfig& cfg, const std::string& proof_path) {
  lpf::Signature sig = load_sig(cfg);
  lpf::Mode mode = mode_of(cfg);
  auto lines = lpf::parse_proof_script_file(proof_path, sig);
  if (lines.empty()) throw lpf::ParseError("empty proof script", 0);

  std::vector<lpf::Sequent> hypotheses;
  for (const auto& l : lines) {
    if (l.just.is_hypothesis) hypotheses.push_back(l.seq);
  }
  lpf::Sequent target = lines.back().seq;
  lpf::DerivationReport report = lpf::check_derivation(lines, hypotheses, target, mode);

  json j;
  j["command"] = "check";
  j["mode"] = cfg.mode;
  j["target"] = lpf::format_sequent(target);
  j["hypotheses"] = hypotheses.size();
  json jl = json::array();
  for (std::size_t i = 0; i < report.lines.size(); ++i) {
    json line;
    line["line"] = i + 1;
    line["sequent"] = lpf::format_sequent(lines[i].seq);
    line["ok"] = report.lines[i].ok;
    if (!report.lines[i].ok) line["message"] = report.lines[i].message;
    jl.push_back(line);
  }
  j["lines"] = jl;
  j["ok"] = report.ok;
  if (!report.ok) {
    j["first_violation"] = report.first_violation;
    j["message"] = report.message;
  }
  if (cfg.format == "machine") {
    std::cout << j.dump(2) << "\n";
  } else {
    for (const auto& line : j["lines"]) {
      std::cout << "line " << line["line"].get<int>() << ": "
                << (line["ok"].get<bool>() ? "ok" : "FAIL — " + line["message"].get<std::string>())
                << "\n";
    }
    std::cout << (report.ok ? "ok" : "FAIL") << ": " << j["target"].get<std::string>() << "\n";
    if (!report.ok && !report.message.empty()) {
      std::cout << "line " << report.first_violation << ": " << report.message << "\n";
    }
  }
  return report.ok ? kExitOk : kExitFailure;
}

int cmd_translate(const RunConfig& cfg, const std::string& gamma_text,
                  const std::string& concl_text) {
  lpf::Signature sig = load_sig(cfg);
  lpf::Sequent seq;
  seq.hyps = parse_gamma(gamma_text, sig);
  seq.concl = lpf::parse_formula(concl_text, sig);
  lpf::Sequent translated = lpf::translate_sequent(seq);
  // translated hypotheses are the axiom block followed by one line per premise
  std::size_t ax_count = translated.hyps.size() - seq.hyps.size();

  json j;
  j["command"] = "translate";
  json axioms = json::array(), premises = json::array();
  for (std::size_t i = 0; i < translated.hyps.size(); ++i) {
    std::string text = lpf::format_formula(*translated.hyps[i]);
    if (i < ax_count) {
      axioms.push_back(text);
    } else {
      premises.push_back(text);
    }
  }
  j["axioms"] = axioms;
  j["premises"] = premises;
  j["conclusion"] = lpf::format_formula(*translated.concl);
  if (cfg.format == "machine") {
    std::cout << j.dump(2) << "\n";
  } else {
    for (const auto& a : axioms) std::cout << a.get<std::string>() << "\n";
    for (const auto& p : premises) std::cout << p.get<std::string>() << "\n";
    std::cout << "|- " << j["conclusion"].get<std::string>() << "\n";
  }
  return kExitOk;
}

int cmd_census(const RunConfig& cfg) {
  std::set<int> laws = parse_laws(cfg.laws);
  lpf::CensusResult result = lpf::count_candidates(laws);
  json j;
  j["command"] = "census";
  j["laws"] = laws;
  j["count"] = result.count;
  json survivors = json::array();
  for (const auto& s : result.survivors) survivors.push_back(lpf::format_tables(s));
  j["survivors"] = survivors;
  if (cfg.format == "machine") {
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "candidates: " << result.count << "\n";
    for (std::size_t i = 0; i < result.survivors.size(); ++i) {
      std::cout << "# survivor " << i + 1 << "\n" << survivors[i].get<std::string>();
    }
  }
  return kExitOk;
}

int cmd_sweep(const RunConfig& cfg) {
  lpf::SweepOptions opts;
  opts.semantics = mode_of(cfg) == lpf::Mode::Classical ? lpf::SweepSemantics::Classical
                                                        : lpf::SweepSemantics::LP;
  auto rows = lpf::rule_soundness_sweep(opts);

  json j;
  j["command"] = "soundness-sweep";
  j["semantics"] = cfg.mode;
  json jr = json::array();
  bool table_rules_pass = true;
  for (const auto& r : rows) {
    json row;
    row["rule"] = r.rule;
    row["instances"] = r.instances;
    row["fired"] = r.fired;
    row["pass"] = r.pass;
    if (!r.pass) row["witness"] = r.witness;
    jr.push_back(row);
    if (r.rule != "c") table_rules_pass = table_rules_pass && r.pass;
  }
  j["rows"] = jr;
  j["table_rules_pass"] = table_rules_pass;
  if (cfg.format == "machine") {
    std::cout << j.dump(2) << "\n";
  } else {
    for (const auto& r : rows) {
      std::cout << (r.pass ? "pass " : "FAIL ") << r.rule << "  instances=" << r.instances
                << " fired=" << r.fired;
      if (!r.pass) std::cout << "  witness: " << r.witness;
      std::cout << "\n";
    }
  }
  // Rule C is classical-only: its LP-mode failure is the expected result and
  // does not fail the sweep. In classical mode it must pass like the rest.
  bool ok = table_rules_pass;
  if (opts.semantics == lpf::SweepSemantics::Classical) {
    for (const auto& r : rows) {
      if (r.rule == "c") ok = ok && r.pass;
    }
  }
  return ok ? kExitOk : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"toolkit for a three-valued first-order paraconsistent logic"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string formula_arg, gamma_arg, second_arg, path_arg;

  auto add_common = [&](CLI::App* sub, bool search_flags) {
    sub->add_option("--sig", cfg.sig_path, "signature file");
    sub->add_option("--format", cfg.format, "text or machine")
        ->check(CLI::IsMember({"text", "machine"}));
    if (search_flags) {
      sub->add_option("--max-domain", cfg.max_domain, "largest domain size searched")
          ->check(CLI::PositiveNumber);
      sub->add_option("--budget", cfg.budget, "search budget in evaluation points")
          ->check(CLI::PositiveNumber);
    }
  };

  CLI::App* parse = app.add_subcommand("parse", "parse a formula and print its canonical form");
  parse->add_option("formula", formula_arg, "formula text")->required();
  add_common(parse, false);

  CLI::App* eval = app.add_subcommand("eval", "evaluate a formula in a structure");
  eval->add_option("formula", formula_arg)->required();
  eval->add_option("--structure", cfg.structure_path, "structure file");
  eval->add_option("--assign", cfg.assign, "variable assignment, x=d1,y=d2");
  add_common(eval, false);

  CLI::App* consequence =
      app.add_subcommand("consequence", "bounded counter-model search for gamma |- A");
  consequence->add_option("gamma", gamma_arg, "';'-separated premises, or @file");
  consequence->add_option("formula", second_arg)->required();
  add_common(consequence, true);

  CLI::App* equiv = app.add_subcommand("equiv", "bounded logical-equivalence check");
  equiv->add_option("a", gamma_arg)->required();
  equiv->add_option("b", second_arg)->required();
  add_common(equiv, true);

  CLI::App* consistent = app.add_subcommand("consistent", "bounded consistency check");
  consistent->add_option("a", gamma_arg)->required();
  add_common(consistent, true);

  CLI::App* check = app.add_subcommand("check", "check a proof script");
  check->add_option("proof", path_arg, "proof script path")->required();
  check->add_option("--mode", cfg.mode, "lp or classical")
      ->check(CLI::IsMember({"lp", "classical"}));
  add_common(check, false);

  CLI::App* translate =
      app.add_subcommand("translate", "translate a sequent into classical first-order logic");
  translate->add_option("gamma", gamma_arg, "';'-separated premises, or @file");
  translate->add_option("formula", second_arg)->required();
  add_common(translate, false);

  CLI::App* census = app.add_subcommand("census", "count candidate connective tables");
  census->add_option("--laws", cfg.laws, "laws to impose, e.g. 1-13 or 1,2,5");
  add_common(census, false);

  CLI::App* sweep = app.add_subcommand("soundness-sweep", "bounded rule soundness sweep");
  sweep->add_option("--mode", cfg.mode, "lp or classical")
      ->check(CLI::IsMember({"lp", "classical"}));
  add_common(sweep, false);

  CLI11_PARSE(app, argc, argv);

  try {
    if (parse->parsed()) return cmd_parse(cfg, formula_arg);
    if (eval->parsed()) return cmd_eval(cfg, formula_arg);
    if (consequence->parsed()) return cmd_consequence(cfg, gamma_arg, second_arg);
    if (equiv->parsed()) return cmd_equiv(cfg, gamma_arg, second_arg);
    if (consistent->parsed()) return cmd_consistent(cfg, gamma_arg);
    if (check->parsed()) return cmd_check(cfg, path_arg);
    if (translate->parsed()) return cmd_translate(cfg, gamma_arg, second_arg);
    if (census->parsed()) return cmd_census(cfg);
    if (sweep->parsed()) return cmd_sweep(cfg);
  } catch (const lpf::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const lpf::SignatureError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const lpf::StructureError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const lpf::EvalError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  }
  return kExitOk;
}
