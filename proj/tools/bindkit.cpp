// bindkit: terms with bindings from the command line. Exit codes:
//   0 success, 1 domain error (parse failure, fuel exhaustion),
//   2 usage error, 3 law suite reported a violation.
#include <cctype>
#include <cstdlib>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "bindkit/enumerate.hpp"
#include "bindkit/instances.hpp"
#include "bindkit/parse.hpp"
#include "bindkit/perm.hpp"
#include "bindkit/recursion.hpp"
#include "bindkit/renset.hpp"
#include "bindkit/semantics.hpp"

using namespace bindkit;
using nlohmann::ordered_json;

namespace {

// Mirrors the canonical-name rule: x<digits>, no leading zero, 32-bit.
bool canonical_form(const std::string& name, std::uint32_t* out) {
  if (name.size() < 2 || name[0] != 'x') return false;
  if (name[1] == '0' && name.size() > 2) return false;
  std::uint64_t acc = 0;
  for (std::size_t i = 1; i < name.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(name[i]))) return false;
    acc = acc * 10 + static_cast<std::uint64_t>(name[i] - '0');
    if (acc > 0xffffffffull) return false;
  }
  *out = static_cast<std::uint32_t>(acc);
  return true;
}

// Reserves every canonical identifier before any interning happens, so a
// plain name can never collide with an explicit index mentioned later in
// the same invocation.
void reserve_canonical(Interner& session, const std::string& src) {
  std::size_t i = 0;
  while (i < src.size()) {
    if (std::isalpha(static_cast<unsigned char>(src[i]))) {
      std::size_t j = i;
      auto ident_char = [](char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_' ||
               c == '\'';
      };
      while (j < src.size() && ident_char(src[j])) ++j;
      std::uint32_t idx = 0;
      if (canonical_form(src.substr(i, j - i), &idx)) session.reserve(vid(idx));
      i = j;
    } else {
      ++i;
    }
  }
}

// One parsing session per invocation; all inputs are prescanned first.
struct Session {
  Interner interner;

  explicit Session(const std::vector<std::string>& inputs) {
    for (const auto& s : inputs) reserve_canonical(interner, s);
  }

  Term term(const std::string& src) { return parse_term(src, interner); }
  VarId var(const std::string& name) {
    if (name.empty()) throw std::invalid_argument("empty variable name");
    return interner.intern(name);
  }
  std::string show(const Term& t) const {
    return print_term(t, &interner);
  }
};

std::string show_ast(const PreTerm& t, const Interner& session) {
  switch (t.kind()) {
    case PreTerm::Kind::Var:
      return "Vr " + session.name(t.var());
    case PreTerm::Kind::App:
      return "Ap(" + show_ast(t.fun(), session) + ", " +
             show_ast(t.arg(), session) + ")";
    case PreTerm::Kind::Lam:
      return "Lm " + session.name(t.var()) + "(" +
             show_ast(t.body(), session) + ")";
  }
  return "?";
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= s.size()) {
    std::size_t end = s.find(sep, start);
    if (end == std::string::npos) {
      out.push_back(s.substr(start));
      break;
    }
    out.push_back(s.substr(start, end - start));
    start = end + 1;
  }
  return out;
}

void emit(const ordered_json& j, const std::string& text, bool json) {
  if (json)
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text << "\n";
}

int finish_laws(const std::vector<LawReport>& reports, bool json) {
  if (json)
    std::cout << reports_to_json(reports).dump(2) << "\n";
  else
    std::cout << summarize(reports);
  return all_pass(reports) ? 0 : 3;
}

int pick(int flag_value, int suite_default) {
  return flag_value > 0 ? flag_value : suite_default;
}

int run_laws(const std::string& suite, std::string target,
             std::uint64_t seed, int trials, bool json,
             const std::string& fixtures_path, const std::string& domain) {
  std::vector<LawReport> reports;
  auto require_target = [&](std::initializer_list<const char*> allowed,
                            const char* fallback) {
    if (target.empty()) target = fallback;
    for (const char* a : allowed)
      if (target == a) return;
    std::string msg = "laws " + suite + ": unknown target '" + target +
                      "' (expected one of:";
    for (const char* a : allowed) msg += std::string(" ") + a;
    throw std::invalid_argument(msg + ")");
  };

  if (suite == "renset") {
    require_target({"term", "var", "broken", "lifted"}, "term");
    if (target == "term") {
      reports = check_renset_laws(term_renset(), seed, pick(trials, 2000));
      reports.push_back(
          check_support_bound(term_renset(), seed, pick(trials, 2000)));
    } else if (target == "var") {
      reports = check_renset_laws(var_renset(), seed, pick(trials, 2000));
      reports.push_back(
          check_support_bound(var_renset(), seed, pick(trials, 2000)));
    } else if (target == "broken") {
      reports = check_renset_laws(term_renset_broken_naive(), seed,
                                  pick(trials, 500));
    } else {
      int n = pick(trials, 800);
      auto list = lift_renset_list(term_renset());
      auto pairr = lift_renset_pair(term_renset(), var_renset());
      auto opt = lift_renset_option(var_renset());
      reports = check_renset_laws(list, seed, n);
      for (auto& r : check_renset_laws(pairr, seed, n))
        reports.push_back(std::move(r));
      for (auto& r : check_renset_laws(opt, seed, n))
        reports.push_back(std::move(r));
      reports.push_back(check_support_bound(list, seed, n));
      reports.push_back(check_support_bound(pairr, seed, n));
      reports.push_back(check_support_bound(opt, seed, n));
    }
  } else if (suite == "nominal") {
    require_target({"term", "broken"}, "term");
    if (target == "term") {
      int n = pick(trials, 1200);
      reports = check_nominal_laws(derive_nominal(term_renset()), seed, n);
      for (auto& r : check_nominal_laws(term_nominal_direct(), seed, n))
        reports.push_back(std::move(r));
      for (auto& r : check_derived_swap_agreement(seed, n))
        reports.push_back(std::move(r));
      for (auto& r : check_term_swap_constructor_laws(seed, n))
        reports.push_back(std::move(r));
      for (auto& r : check_term_function_support(seed, n))
        reports.push_back(std::move(r));
    } else {
      reports = check_nominal_laws(term_nominal_broken_binders(), seed,
                                   pick(trials, 500));
    }
  } else if (suite == "ce") {
    require_target({"term", "interp", "broken"}, "term");
    if (target == "term") {
      reports =
          check_ce_laws(term_ce_spec(), AvoidSet{}, seed, pick(trials, 1000));
      for (auto& r : check_recursor_clauses(term_ce_spec(), AvoidSet{}, seed,
                                            pick(trials, 600)))
        reports.push_back(std::move(r));
    } else if (target == "interp") {
      FixtureConfig cfg = fixtures_path.empty()
                              ? FixtureConfig::defaults()
                              : FixtureConfig::load(fixtures_path);
      auto spec = interp_ce_spec<long long>(arith_domain(cfg));
      reports = check_ce_laws(spec, AvoidSet{}, seed, pick(trials, 40));
      for (auto& r : check_recursor_clauses(spec, AvoidSet{}, seed,
                                            pick(trials, 30), VarPool{}, 7))
        reports.push_back(std::move(r));
    } else {
      reports = check_ce_laws(term_ce_spec_broken_fixed_binder(), AvoidSet{},
                              seed, pick(trials, 400));
    }
  } else if (suite == "frce") {
    require_target({"redex"}, "redex");
    reports = check_frce_laws(redex_counter_spec(), AvoidSet{}, seed,
                              pick(trials, 800));
    reports.push_back(check_frce_term_ignoring(term_ce_spec(), AvoidSet{},
                                               seed, pick(trials, 300)));
  } else if (suite == "subst") {
    require_target({"term"}, "term");
    reports = check_subst_laws(term_subst_spec(), seed, pick(trials, 800));
  } else if (suite == "prop3") {
    require_target({"term", "var"}, "term");
    auto run = [&](const auto& inst) {
      reports.push_back(
          check_prop3_equivalence(inst, seed, pick(trials, 1500)));
    };
    if (target == "term")
      run(term_renset());
    else
      run(var_renset());
  } else if (suite == "prop4") {
    require_target({"term", "var"}, "term");
    if (target == "term")
      reports = check_prop4(term_renset(), seed, pick(trials, 1500));
    else
      reports = check_prop4(var_renset(), seed, pick(trials, 1500));
  } else if (suite == "fcb") {
    std::string dom = domain.empty() ? "arith" : domain;
    if (dom == "arith") {
      FixtureConfig cfg = fixtures_path.empty()
                              ? FixtureConfig::defaults()
                              : FixtureConfig::load(fixtures_path);
      reports = fcb_contrast_report(arith_domain(cfg), seed, pick(trials, 25));
    } else if (dom == "one-point") {
      reports = fcb_contrast_report(one_point_domain(), seed,
                                    pick(trials, 25));
    } else {
      throw std::invalid_argument(
          "laws fcb: unknown --domain '" + dom +
          "' (expected arith or one-point)");
    }
  } else if (suite == "roundtrip") {
    require_target({"term"}, "term");
    int n = pick(trials, 700);
    reports = check_perm_group_laws(seed, n);
    for (auto& r : check_perm_action_laws(term_perm_nominal(), seed, n))
      reports.push_back(std::move(r));
    for (auto& r : check_perm_roundtrip(term_perm_nominal(),
                                        term_nominal_direct(), seed, n))
      reports.push_back(std::move(r));
  }
  return finish_laws(reports, json);
}

}  // namespace

int main(int argc, char** argv) {
  std::uint64_t env_seed = 0;
  if (const char* s = std::getenv("BINDKIT_SEED"))
    env_seed = std::strtoull(s, nullptr, 10);

  CLI::App app{
      "bindkit: lambda terms with bindings, renaming first.\n"
      "Terms use the grammar: \\x. body | f a | (t); identifiers xN denote "
      "index N,\nother names are interned per invocation.\n"
      "Exit codes: 0 ok, 1 domain error, 2 usage error, 3 law violation."};
  app.require_subcommand(1);
  int rc = 0;

  // parse / print / fv / fresh / debruijn -------------------------------
  std::string a_term, b_term, flag_new, flag_old, flag_a, flag_b;
  std::string flag_var, flag_with, flag_avoid, flag_map;
  std::vector<std::string> flag_binds;
  bool json = false;

  auto add_json = [&json](CLI::App* sub) {
    sub->add_flag("--json", json, "emit JSON instead of text");
  };

  auto* c_parse = app.add_subcommand("parse", "parse a term, show its tree");
  c_parse->add_option("term", a_term, "term text")->required();
  add_json(c_parse);
  c_parse->callback([&] {
    Session s({a_term});
    Term t = s.term(a_term);
    std::string ast = show_ast(t.repr(), s.interner);
    emit({{"ast", ast}, {"term", s.show(t)}}, ast, json);
  });

  auto* c_print = app.add_subcommand("print", "parse then pretty-print");
  c_print->add_option("term", a_term, "term text")->required();
  add_json(c_print);
  c_print->callback([&] {
    Session s({a_term});
    Term t = s.term(a_term);
    emit({{"term", s.show(t)}}, s.show(t), json);
  });

  auto* c_fv = app.add_subcommand("fv", "list free variables");
  c_fv->add_option("term", a_term, "term text")->required();
  add_json(c_fv);
  c_fv->callback([&] {
    Session s({a_term});
    Term t = s.term(a_term);
    std::string line;
    ordered_json names = ordered_json::array();
    for (VarId v : free_vars(t)) {
      if (!line.empty()) line += " ";
      line += s.interner.name(v);
      names.push_back(s.interner.name(v));
    }
    emit({{"free", names}}, line, json);
  });

  auto* c_fresh = app.add_subcommand(
      "fresh", "smallest variable fresh for the term and the avoid list");
  c_fresh->add_option("term", a_term, "term text")->required();
  c_fresh->add_option("--avoid", flag_avoid,
                      "comma-separated variables to avoid");
  add_json(c_fresh);
  c_fresh->callback([&] {
    Session s({a_term, flag_avoid});
    Term t = s.term(a_term);
    VarSet avoid = free_vars(t);
    if (!flag_avoid.empty())
      for (const auto& name : split(flag_avoid, ','))
        avoid.insert(s.var(name));
    VarId z = fresh_var(avoid);
    emit({{"fresh", s.interner.name(z)}}, s.interner.name(z), json);
  });

  auto* c_db = app.add_subcommand("debruijn", "show the nameless form");
  c_db->add_option("term", a_term, "term text")->required();
  add_json(c_db);
  c_db->callback([&] {
    Session s({a_term});
    DbTerm d = to_debruijn(s.term(a_term));
    emit({{"debruijn", d.show()}}, d.show(), json);
  });

  // rename / swap / subst / psubst / alphaeq / perm ----------------------
  auto* c_rename = app.add_subcommand(
      "rename", "capture-avoiding renaming t[new/old] of a variable");
  c_rename->add_option("term", a_term, "term text")->required();
  c_rename->add_option("--new", flag_new, "variable written in")->required();
  c_rename->add_option("--old", flag_old, "variable renamed away")
      ->required();
  add_json(c_rename);
  c_rename->callback([&] {
    Session s({a_term, flag_new, flag_old});
    Term t = s.term(a_term);
    Term out = rename(t, s.var(flag_new), s.var(flag_old));
    emit({{"term", s.show(out)}}, s.show(out), json);
  });

  auto* c_swap = app.add_subcommand(
      "swap", "swap two variables everywhere, including binders");
  c_swap->add_option("term", a_term, "term text")->required();
  c_swap->add_option("--a", flag_a, "first variable")->required();
  c_swap->add_option("--b", flag_b, "second variable")->required();
  add_json(c_swap);
  c_swap->callback([&] {
    Session s({a_term, flag_a, flag_b});
    Term t = s.term(a_term);
    Term out = swap(t, s.var(flag_a), s.var(flag_b));
    emit({{"term", s.show(out)}}, s.show(out), json);
  });

  auto* c_subst = app.add_subcommand(
      "subst", "capture-avoiding substitution t[with/var]");
  c_subst->add_option("term", a_term, "term text")->required();
  c_subst->add_option("--var", flag_var, "variable substituted away")
      ->required();
  c_subst->add_option("--with", flag_with, "term written in")->required();
  add_json(c_subst);
  c_subst->callback([&] {
    Session s({a_term, flag_var, flag_with});
    Term t = s.term(a_term);
    Term payload = s.term(flag_with);
    Term out = subst(t, payload, s.var(flag_var));
    emit({{"term", s.show(out)}}, s.show(out), json);
  });

  auto* c_psubst = app.add_subcommand(
      "psubst", "simultaneous substitution; repeat --bind \"v:=term\"");
  c_psubst->add_option("term", a_term, "term text")->required();
  c_psubst->add_option("--bind", flag_binds, "binding of the form v:=term")
      ->required();
  add_json(c_psubst);
  c_psubst->callback([&] {
    std::vector<std::string> inputs = {a_term};
    for (const auto& b : flag_binds) inputs.push_back(b);
    Session s(inputs);
    Term t = s.term(a_term);
    FinTermEnv rho;
    for (const auto& b : flag_binds) {
      auto pos = b.find(":=");
      if (pos == std::string::npos)
        throw std::invalid_argument("--bind expects v:=term, got: " + b);
      std::string name = b.substr(0, pos);
      while (!name.empty() && std::isspace(static_cast<unsigned char>(
                                  name.back())))
        name.pop_back();
      rho.bind(s.var(name), s.term(b.substr(pos + 2)));
    }
    Term out = psubst(t, rho);
    emit({{"term", s.show(out)}}, s.show(out), json);
  });

  auto* c_alphaeq =
      app.add_subcommand("alphaeq", "alpha-equivalence of two terms");
  c_alphaeq->add_option("left", a_term, "first term")->required();
  c_alphaeq->add_option("right", b_term, "second term")->required();
  add_json(c_alphaeq);
  c_alphaeq->callback([&] {
    Session s({a_term, b_term});
    bool eq = alpha_eq(s.term(a_term), s.term(b_term));
    emit({{"alphaeq", eq}}, eq ? "true" : "false", json);
  });

  auto* c_perm = app.add_subcommand(
      "perm", "apply a finite permutation, e.g. --map \"x0:x1,x1:x0\"");
  c_perm->add_option("term", a_term, "term text")->required();
  c_perm->add_option("--map", flag_map, "comma-separated v:w moves")
      ->required();
  add_json(c_perm);
  c_perm->callback([&] {
    Session s({a_term, flag_map});
    Term t = s.term(a_term);
    std::map<VarId, VarId> moves;
    for (const auto& item : split(flag_map, ',')) {
      if (item.empty()) continue;
      auto pos = item.find(':');
      if (pos == std::string::npos)
        throw std::invalid_argument("--map expects v:w pairs, got: " + item);
      moves[s.var(item.substr(0, pos))] = s.var(item.substr(pos + 1));
    }
    Term out = perm_action_term(t, FinPerm::from_map(moves));
    emit({{"term", s.show(out)}}, s.show(out), json);
  });

  // normalize and the example functions ----------------------------------
  long long fuel = 100000;
  auto* c_norm = app.add_subcommand("normalize", "beta-normal form");
  c_norm->add_option("term", a_term, "term text")->required();
  c_norm->add_option("--fuel", fuel, "beta-step budget (default 100000)");
  add_json(c_norm);
  c_norm->callback([&] {
    Session s({a_term});
    Term out = normalize(s.term(a_term), fuel);
    emit({{"term", s.show(out)}}, s.show(out), json);
  });

  auto add_numeric = [&](const char* name, const char* help, auto fn) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("term", a_term, "term text")->required();
    add_json(sub);
    sub->callback([&, fn] {
      Session s({a_term});
      unsigned long long v = fn(s.term(a_term));
      emit({{"value", v}}, std::to_string(v), json);
    });
    return sub;
  };
  add_numeric("length", "depth-style size (max over branches)", length_of);
  add_numeric("clam", "number of lambda abstractions", clam);
  add_numeric("cbv", "number of bound variable occurrences", cbv);

  auto* c_cfv = app.add_subcommand(
      "cfv", "number of free occurrences of a variable");
  c_cfv->add_option("term", a_term, "term text")->required();
  c_cfv->add_option("--var", flag_var, "variable to count")->required();
  add_json(c_cfv);
  c_cfv->callback([&] {
    Session s({a_term, flag_var});
    unsigned long long v = cfv(s.term(a_term), s.var(flag_var));
    emit({{"value", v}}, std::to_string(v), json);
  });

  auto* c_caneta = app.add_subcommand(
      "caneta", "whether the term is an eta-redex \\x. s x with x not in s");
  c_caneta->add_option("term", a_term, "term text")->required();
  add_json(c_caneta);
  c_caneta->callback([&] {
    Session s({a_term});
    bool v = can_eta(s.term(a_term));
    emit({{"value", v}}, v ? "true" : "false", json);
  });

  // law suites and cross-checks ------------------------------------------
  std::string suite, target, domain, fixtures_path, fn_name;
  std::uint64_t seed = env_seed;
  int trials = 0;
  std::size_t max_size = 4;
  int cc_trials = 200;

  auto* c_laws = app.add_subcommand(
      "laws",
      "run a law suite: renset | nominal | ce | frce | subst | prop3 | "
      "prop4 | fcb | roundtrip");
  c_laws
      ->add_option("suite", suite,
                   "one of: renset, nominal, ce, frce, subst, prop3, prop4, "
                   "fcb, roundtrip")
      ->required()
      ->check(CLI::IsMember({"renset", "nominal", "ce", "frce", "subst",
                             "prop3", "prop4", "fcb", "roundtrip"}));
  c_laws->add_option("--target", target,
                     "instance under test (suite-specific; default term)");
  c_laws->add_option("--seed", seed, "random seed (default $BINDKIT_SEED)")
      ->capture_default_str();
  c_laws->add_option("--trials", trials,
                     "random trials per law (0 = suite default)");
  c_laws->add_option("--domain", domain,
                     "fcb only: arith (default) or one-point");
  c_laws->add_option("--fixtures", fixtures_path,
                     "key=value config for the arithmetic fixture domain");
  add_json(c_laws);
  c_laws->callback([&] {
    rc = run_laws(suite, target, seed, trials, json, fixtures_path, domain);
  });

  auto* c_cc = app.add_subcommand(
      "crosscheck", "engine vs structural oracle for the example functions");
  c_cc->add_option("function", fn_name,
                   "one of: length, clam, cfv, subst, psubst, cbv, caneta")
      ->required();
  c_cc->add_option("--max-size", max_size,
                   "exhaustive bound over a 3-variable alphabet")
      ->capture_default_str();
  c_cc->add_option("--trials", cc_trials, "random trials on larger terms")
      ->capture_default_str();
  c_cc->add_option("--seed", seed, "random seed (default $BINDKIT_SEED)")
      ->capture_default_str();
  add_json(c_cc);
  c_cc->callback([&] {
    VarSet vars{vid(0), vid(1), vid(2)};
    LawReport r = cross_check(fn_name, max_size, vars, seed, cc_trials);
    rc = finish_laws({r}, json);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return rc;
}
