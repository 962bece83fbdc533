// oclam: command-line workbench for a linear lambda-calculus with scalars,
// sums, and the ! exponential: typechecking, normalization, vector/matrix
// encodings, semantic evaluation, observational equivalence, property fuzzing.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "oclam/denot.hpp"
#include "oclam/encode.hpp"
#include "oclam/equiv.hpp"
#include "oclam/parse.hpp"
#include "oclam/props.hpp"
#include "oclam/reduce.hpp"
#include "oclam/syntax.hpp"
#include "oclam/typecheck.hpp"

using json = nlohmann::ordered_json;
using namespace oclam;

namespace {

// exit codes: 0 ok, 1 usage/parse, 2 semantic failure, 3 unknown/fuel,
// 4 internal invariant breach
constexpr int kOk = 0, kUsage = 1, kSemantic = 2, kUnknown = 3, kInternal = 4;

struct Output {
  bool as_json = false;
  json doc;
  std::vector<std::string> diagnostics;

  void line(const std::string& s) {
    if (!as_json) std::cout << s << "\n";
  }
  void diagnostic(const std::string& s) {
    diagnostics.push_back(s);
    if (!as_json) std::cerr << s << "\n";
  }
  int finish(const std::string& command, json inputs, json result, int code) {
    if (as_json) {
      json out;
      out["command"] = command;
      out["inputs"] = std::move(inputs);
      out["result"] = std::move(result);
      out["diagnostics"] = diagnostics;
      out["timings"] = nullptr; // kept null so identical argv is byte-identical
      std::cout << out.dump(2) << "\n";
    }
    return code;
  }
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'", 0, 0);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Strategy parse_strategy(const std::string& s) {
  if (s == "lo") return Strategy::leftmost_outermost();
  if (s.rfind("rand:", 0) == 0)
    return Strategy::random(std::stoull(s.substr(5)));
  throw ParseError("strategy must be 'lo' or 'rand:SEED', got '" + s + "'", 0, 0);
}

Matrix matrix_from_json(const json& j, const Semiring& ring) {
  Matrix m;
  m.rows = j.at("rows").get<size_t>();
  m.cols = j.at("cols").get<size_t>();
  for (const auto& row : j.at("entries"))
    for (const auto& cell : row)
      m.entries.push_back(ring.parse(cell.get<std::string>()));
  if (m.entries.size() != m.rows * m.cols)
    throw EncodeError("matrix entries do not match rows*cols");
  return m;
}

json matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (size_t i = 0; i < m.rows; ++i) {
    json row = json::array();
    for (size_t j = 0; j < m.cols; ++j) row.push_back(m.at(i, j).str());
    rows.push_back(std::move(row));
  }
  return json{{"rows", m.rows}, {"cols", m.cols}, {"entries", std::move(rows)}};
}

SemValuePtr value_from_json(const json& j, const Semiring& ring) {
  if (j.contains("scalar")) return sv_scalar(ring.parse(j["scalar"].get<std::string>()));
  if (j.contains("zero")) return sv_zero();
  if (j.contains("pair"))
    return sv_pair(value_from_json(j["pair"][0], ring),
                   value_from_json(j["pair"][1], ring));
  if (j.contains("tensor")) {
    std::vector<TensorAtom> atoms;
    for (const auto& a : j["tensor"])
      atoms.push_back({ring.parse(a[0].get<std::string>()),
                       value_from_json(a[1], ring), value_from_json(a[2], ring)});
    return sv_tensor(std::move(atoms));
  }
  if (j.contains("bang")) {
    std::vector<BangAtom> atoms;
    for (const auto& a : j["bang"])
      atoms.push_back({ring.parse(a[0].get<std::string>()),
                       value_from_json(a[1], ring)});
    return sv_bang(std::move(atoms));
  }
  throw ParseError("unknown value spec in environment file", 0, 0);
}

TypePtr required_type(const TermFile& file, const std::string& flag) {
  if (!flag.empty()) return parse_type(flag);
  if (file.pinned_type) return file.pinned_type;
  throw ParseError("no --type given and no '-- type:' header in the file", 0, 0);
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"workbench for a linear lambda-calculus with sums, scalars, "
               "and the ! exponential"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string semiring = "nat";
  uint64_t fuel = 100000;
  uint64_t seed = 1;
  bool as_json = false;
  app.add_option("--semiring", semiring, "scalar semiring")
      ->check(CLI::IsMember({"trivial", "nat", "rat", "crat"}));
  app.add_option("--fuel", fuel, "reduction step budget");
  app.add_option("--seed", seed, "random seed");
  app.add_flag("--json", as_json, "emit one JSON document");

  // check
  auto* cmd_check = app.add_subcommand("check", "typecheck a closed term");
  std::string check_file, check_type;
  cmd_check->add_option("file", check_file)->required();
  cmd_check->add_option("--type", check_type, "expected type");

  // normalize
  auto* cmd_norm = app.add_subcommand("normalize", "reduce to normal form");
  std::string norm_file, strategy_str = "lo";
  bool trace = false, ultra = false;
  cmd_norm->add_option("file", norm_file)->required();
  cmd_norm->add_flag("--trace", trace, "print every intermediate term");
  cmd_norm->add_option("--strategy", strategy_str, "lo | rand:SEED");
  cmd_norm->add_flag("--ultra", ultra, "enable ultra-reduction rules");

  // matrix compile/extract
  auto* cmd_matrix = app.add_subcommand("matrix", "matrix encodings");
  cmd_matrix->require_subcommand(1);
  auto* cmd_compile = cmd_matrix->add_subcommand("compile", "matrix JSON -> term");
  auto* cmd_extract = cmd_matrix->add_subcommand("extract", "term -> matrix JSON");
  std::string mat_file, domain_str, codomain_str;
  cmd_compile->add_option("file", mat_file)->required();
  cmd_compile->add_option("--domain", domain_str)->required();
  cmd_compile->add_option("--codomain", codomain_str)->required();
  std::string ext_file, ext_domain, ext_codomain;
  cmd_extract->add_option("file", ext_file)->required();
  cmd_extract->add_option("--domain", ext_domain)->required();
  cmd_extract->add_option("--codomain", ext_codomain)->required();

  // eval
  auto* cmd_eval = app.add_subcommand("eval", "denotational value of a term");
  std::string eval_file, eval_type, env_file;
  int at_basis = -1;
  cmd_eval->add_option("file", eval_file)->required();
  cmd_eval->add_option("--type", eval_type, "type of the term");
  cmd_eval->add_option("--at", at_basis,
                       "apply a function term to the n-th basis vector");
  cmd_eval->add_option("--env", env_file, "JSON environment for open terms");

  // equiv
  auto* cmd_equiv = app.add_subcommand("equiv", "bounded observational equivalence");
  std::string eq_a, eq_b, eq_type;
  int eq_depth = 2, eq_budget = 8;
  cmd_equiv->add_option("left", eq_a)->required();
  cmd_equiv->add_option("right", eq_b)->required();
  cmd_equiv->add_option("--type", eq_type)->required();
  cmd_equiv->add_option("--depth", eq_depth, "context spine depth");
  cmd_equiv->add_option("--budget", eq_budget, "generator budget for bodies");

  // fuzz
  auto* cmd_fuzz = app.add_subcommand("fuzz", "run property suites");
  std::string props_str = "sr,confluence,intro,linearity,soundness";
  int fuzz_n = 100, fuzz_size = 24;
  cmd_fuzz->add_option("--props", props_str, "comma-separated property names");
  cmd_fuzz->add_option("--n", fuzz_n, "samples per property");
  cmd_fuzz->add_option("--size", fuzz_size, "generator size budget");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) ? kUsage : kOk;
  }

  Output out;
  out.as_json = as_json;
  const Semiring& ring = Semiring::by_name(semiring);

  try {
    if (*cmd_check) {
      TermFile file = parse_term_file(slurp(check_file), ring);
      TypePtr expect = required_type(file, check_type);
      auto r = check_closed(file.term, expect);
      json inputs{{"file", check_file}, {"type", print_type(expect)},
                  {"semiring", semiring}};
      if (!r.ok()) {
        out.diagnostic(r.error().str());
        return out.finish("check", inputs, json{{"ok", false}}, kSemantic);
      }
      out.line("ok: " + print_type(expect));
      return out.finish("check", inputs, json{{"ok", true}}, kOk);
    }

    if (*cmd_norm) {
      TermFile file = parse_term_file(slurp(norm_file), ring);
      NormalizeResult r = normalize(file.term, parse_strategy(strategy_str),
                                    fuel, ultra, trace);
      json inputs{{"file", norm_file}, {"strategy", strategy_str},
                  {"fuel", fuel}, {"ultra", ultra}, {"semiring", semiring}};
      if (trace)
        for (const TermPtr& t : r.trace) out.line(print_term(t));
      else
        out.line(print_term(r.term));
      json result{{"normal_form", print_term(r.term)},
                  {"steps", r.steps},
                  {"fuel_exhausted", r.fuel_exhausted}};
      if (trace) {
        json steps = json::array();
        for (const TermPtr& t : r.trace) steps.push_back(print_term(t));
        result["trace"] = std::move(steps);
      }
      if (r.fuel_exhausted) {
        out.diagnostic("fuel exhausted after " + std::to_string(r.steps) +
                       " steps");
        return out.finish("normalize", inputs, result, kUnknown);
      }
      return out.finish("normalize", inputs, result, kOk);
    }

    if (*cmd_compile) {
      Matrix m = matrix_from_json(json::parse(slurp(mat_file)), ring);
      TypePtr a = parse_type(domain_str), b = parse_type(codomain_str);
      TermPtr t = matrix_to_term(m, a, b);
      out.line(print_term(t));
      return out.finish("matrix compile",
                        json{{"file", mat_file}, {"domain", domain_str},
                             {"codomain", codomain_str}, {"semiring", semiring}},
                        json{{"term", print_term(t)}}, kOk);
    }

    if (*cmd_extract) {
      TermFile file = parse_term_file(slurp(ext_file), ring);
      TypePtr a = parse_type(ext_domain), b = parse_type(ext_codomain);
      auto typed = check_closed(file.term, ty_lolli(a, b));
      if (!typed.ok()) {
        out.diagnostic(typed.error().str());
        return out.finish("matrix extract", json{{"file", ext_file}},
                          json{{"ok", false}}, kSemantic);
      }
      Matrix m = term_to_matrix(file.term, a, b, ring, fuel);
      json mj = matrix_to_json(m);
      if (!as_json) std::cout << mj.dump(2) << "\n";
      return out.finish("matrix extract",
                        json{{"file", ext_file}, {"domain", ext_domain},
                             {"codomain", ext_codomain}, {"semiring", semiring}},
                        json{{"matrix", std::move(mj)}}, kOk);
    }

    if (*cmd_eval) {
      TermFile file = parse_term_file(slurp(eval_file), ring);
      TypePtr ty = required_type(file, eval_type);
      json inputs{{"file", eval_file}, {"type", print_type(ty)},
                  {"semiring", semiring}};

      SemEnv env;
      Context intuit, linear;
      if (!env_file.empty()) {
        json ej = json::parse(slurp(env_file));
        for (const auto& var : ej.at("vars")) {
          std::string name = var.at("name").get<std::string>();
          TypePtr vt = parse_type(var.at("type").get<std::string>());
          SemValuePtr val = value_from_json(var.at("value"), ring);
          if (var.at("slot").get<std::string>() == "bang") {
            intuit.push_back({name, vt});
            env.intuit[name] = val;
          } else {
            linear.push_back({name, vt});
            env.linear[name] = val;
          }
        }
      }
      auto checked = infer(intuit, linear, file.term);
      if (!checked.ok()) {
        out.diagnostic(checked.error().str());
        return out.finish("eval", inputs, json{{"ok", false}}, kSemantic);
      }
      if (!type_match(checked->type, ty)) {
        out.diagnostic("term has type " + print_type(checked->type));
        return out.finish("eval", inputs, json{{"ok", false}}, kSemantic);
      }
      SemValuePtr v = eval(file.term, intuit, linear, env, ring);
      TypePtr result_ty = ty;
      if (at_basis >= 0) {
        if (ty->tag != TypeTag::Lolli) {
          out.diagnostic("--at requires a function type");
          return out.finish("eval", inputs, json{{"ok", false}}, kUsage);
        }
        SemTypeInfo dom = interp_type(ty->a, ring);
        if (!dom.enumerable || static_cast<size_t>(at_basis) >= dom.basis.size()) {
          out.diagnostic("basis index out of range for " + print_type(ty->a));
          return out.finish("eval", inputs, json{{"ok", false}}, kUsage);
        }
        v = sem_apply(ty, v, dom.basis[static_cast<size_t>(at_basis)]);
        result_ty = ty->b;
        inputs["at"] = at_basis;
      }
      auto canon = canonicalize(result_ty, v, ring);
      if (!canon.has_value()) {
        out.diagnostic("equality at " + print_type(result_ty) +
                       " is undecidable; value is opaque");
        return out.finish("eval", inputs, json{{"ok", false}}, kUnknown);
      }
      out.line(canon->str());
      return out.finish("eval", inputs, json{{"value", canon->str()}}, kOk);
    }

    if (*cmd_equiv) {
      TermFile fa = parse_term_file(slurp(eq_a), ring);
      TermFile fb = parse_term_file(slurp(eq_b), ring);
      TypePtr ty = parse_type(eq_type);
      json inputs{{"left", eq_a},     {"right", eq_b},
                  {"type", eq_type},  {"depth", eq_depth},
                  {"budget", eq_budget}, {"seed", seed},
                  {"fuel", fuel},     {"semiring", semiring}};
      EquivVerdict v =
          obs_equiv(fa.term, fb.term, ty, eq_depth, eq_budget, fuel, seed, ring);
      json result{{"contexts_tried", v.contexts_tried}};
      switch (v.tag) {
        case EquivVerdict::Tag::EquivalentUpToBound:
          result["verdict"] = "equivalent-up-to-bound";
          result["depth"] = v.depth;
          out.line("equivalent up to depth " + std::to_string(v.depth) + " (" +
                   std::to_string(v.contexts_tried) + " contexts)");
          return out.finish("equiv", inputs, result, kOk);
        case EquivVerdict::Tag::Distinguished:
          result["verdict"] = "distinguished";
          result["context"] = print_term(v.witness.as_term());
          result["left"] = print_term(v.left_result);
          result["right"] = print_term(v.right_result);
          out.line("distinguished by " + print_term(v.witness.as_term()));
          out.line("  left  ~> " + print_term(v.left_result));
          out.line("  right ~> " + print_term(v.right_result));
          return out.finish("equiv", inputs, result, kSemantic);
        case EquivVerdict::Tag::Unknown:
          result["verdict"] = "unknown";
          result["reason"] = v.reason;
          out.diagnostic("unknown: " + v.reason);
          return out.finish("equiv", inputs, result, kUnknown);
      }
    }

    if (*cmd_fuzz) {
      PropConfig cfg;
      cfg.seed = seed;
      cfg.n = fuzz_n;
      cfg.size = fuzz_size;
      cfg.fuel = fuel;
      cfg.semiring = ring.id();
      std::vector<std::string> chosen;
      std::stringstream ss(props_str);
      std::string item;
      while (std::getline(ss, item, ',')) chosen.push_back(item);
      json inputs{{"props", chosen}, {"n", fuzz_n}, {"seed", seed},
                  {"size", fuzz_size}, {"semiring", semiring}};
      json reports = json::array();
      bool all_ok = true;
      for (const std::string& name : chosen) {
        PropResult r = run_prop(name, cfg);
        all_ok &= r.ok();
        out.line(r.summary());
        reports.push_back(json{{"name", r.name},
                               {"ok", r.ok()},
                               {"runs", r.runs},
                               {"passes", r.passes},
                               {"failures", r.failures},
                               {"giveups", r.giveups},
                               {"skipped", r.skipped},
                               {"max_steps", r.max_steps},
                               {"witnesses", r.failure_notes}});
      }
      return out.finish("fuzz", inputs, json{{"reports", std::move(reports)}},
                         all_ok ? kOk : kSemantic);
    }
  } catch (const ParseError& e) {
    out.diagnostic(std::string("parse error: ") + e.what());
    return out.finish("error", {}, json{{"error", e.what()}}, kUsage);
  } catch (const ScalarError& e) {
    out.diagnostic(std::string("scalar error: ") + e.what());
    return out.finish("error", {}, json{{"error", e.what()}}, kUsage);
  } catch (const EncodeError& e) {
    out.diagnostic(std::string("encoding error: ") + e.what());
    return out.finish("error", {}, json{{"error", e.what()}}, kSemantic);
  } catch (const SemError& e) {
    out.diagnostic(std::string("semantic error: ") + e.what());
    return out.finish("error", {}, json{{"error", e.what()}}, kSemantic);
  } catch (const json::exception& e) {
    out.diagnostic(std::string("json error: ") + e.what());
    return out.finish("error", {}, json{{"error", e.what()}}, kUsage);
  } catch (const std::exception& e) {
    out.diagnostic(std::string("internal error: ") + e.what());
    return out.finish("error", {}, json{{"error", e.what()}}, kInternal);
  }
  return kInternal;
}
