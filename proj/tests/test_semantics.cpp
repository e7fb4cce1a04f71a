#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "bindkit/enumerate.hpp"
#include "bindkit/parse.hpp"
#include "bindkit/semantics.hpp"
#include "oracles.hpp"

using namespace bindkit;

namespace {

Term T(const std::string& src) { return parse_term(src); }

const VarSet kAbc{vid(0), vid(1), vid(2)};

Env<long long> const_env(long long v) {
  return {[v](VarId) { return v; }, {}};
}

std::string write_temp(const std::string& body) {
  std::string path = "/tmp/bindkit_fixture_test.conf";
  std::ofstream out(path);
  out << body;
  return path;
}

}  // namespace

TEST_CASE("environments: update changes exactly one variable") {
  Env<long long> e = const_env(7);
  auto e2 = e.update(vid(1), 9);
  CHECK(e.at(vid(1)) == 7);
  CHECK(e2.at(vid(1)) == 9);
  CHECK(e2.at(vid(0)) == 7);
  auto e3 = e2.update(vid(1), e2.at(vid(1)));
  CHECK(e3.at(vid(1)) == 9);
  // Writing over x twice keeps only the outer write.
  CHECK(e.update(vid(0), 1).update(vid(0), 2).at(vid(0)) == 2);
}

TEST_CASE("probe environments form a wide deterministic family") {
  auto dom = arith_domain();
  auto envs = probe_envs(dom, default_alphabet());
  CHECK(envs.size() >= 50);
  auto envs2 = probe_envs(dom, default_alphabet());
  for (std::size_t i = 0; i < envs.size(); ++i)
    for (VarId v : default_alphabet())
      CHECK(envs[i].at(v) == envs2[i].at(v));
  CHECK(probe_envs(one_point_domain(), kAbc).size() >= 50);
}

TEST_CASE("interpretation clauses on the arithmetic fixture") {
  auto dom = arith_domain();

  // Variables read the environment.
  for (const auto& e : probe_envs(dom, kAbc))
    CHECK(sem(dom, T("x2"), e) == e.at(vid(2)));

  // \x. x x is one fixed function value, whatever the environment.
  long long want_selfapp =
      dom.lm([&](const long long& d) { return dom.ap(d, d); });
  for (const auto& e : probe_envs(dom, kAbc))
    CHECK(sem(dom, T("\\x0. x0 x0"), e) == want_selfapp);

  // \x. x y reads y from the environment under the binder.
  for (const auto& e : probe_envs(dom, kAbc)) {
    long long want =
        dom.lm([&](const long long& d) { return dom.ap(d, e.at(vid(1))); });
    CHECK(sem(dom, T("\\x0. x0 x1"), e) == want);
  }

  // Application is pointwise.
  for (const auto& e : probe_envs(dom, kAbc))
    CHECK(sem(dom, T("x0 x1"), e) ==
          dom.ap(e.at(vid(0)), e.at(vid(1))));
}

TEST_CASE("renaming a term shifts the environment") {
  auto dom = arith_domain();
  Rng rng(61);
  for (int i = 0; i < 120; ++i) {
    Term t = random_term(rng, kAbc, 8);
    VarId x = kAbc.items()[rng.below(3)];
    VarId y = kAbc.items()[rng.below(3)];
    Term renamed = rename(t, y, x);
    for (const auto& e : probe_envs(dom, kAbc)) {
      CHECK(sem(dom, renamed, e) ==
            sem(dom, t, e.update(x, e.at(y))));
    }
  }
}

TEST_CASE("interpretation spec passes the constructor law suite") {
  auto spec = interp_ce_spec<long long>(arith_domain());
  for (const auto& r : check_ce_laws(spec, AvoidSet{}, 47, 30)) {
    INFO(r.law);
    CHECK(r.pass());
  }
}

TEST_CASE("binder freshness contrast: renaming passes, swapping fails") {
  auto reports = fcb_contrast_report(arith_domain(), 53, 20);
  REQUIRE(reports.size() == 2);
  CHECK(reports[0].law.find("renaming") != std::string::npos);
  CHECK(reports[0].pass());
  CHECK(!reports[1].pass());
  CHECK(!reports[1].violations.empty());
  CHECK(!reports[1].meta.empty());

  // With a single value there is nothing to distinguish: both pass.
  auto degenerate = fcb_contrast_report(one_point_domain(), 53, 20);
  CHECK(degenerate[0].pass());
  CHECK(degenerate[1].pass());
}

TEST_CASE("normalization: basic reductions") {
  CHECK(alpha_eq(normalize(T("(\\x0. x0) x1"), 100), T("x1")));
  CHECK(alpha_eq(normalize(T("\\x0. (\\x1. x1) x0"), 100), T("\\x0. x0")));
  CHECK(alpha_eq(normalize(T("x0 x1"), 100), T("x0 x1")));
  // Capture-sensitive case: (\x.\y. x) y must not collapse to \y. y.
  Term got = normalize(T("(\\x0. \\x1. x0) x1"), 100);
  CHECK(alpha_eq(got, T("\\x2. x1")));
  CHECK(!alpha_eq(got, T("\\x1. x1")));
}

TEST_CASE("normalization agrees with the stepping oracle") {
  Rng rng(67);
  int compared = 0;
  for (int i = 0; i < 300; ++i) {
    Term t = random_term(rng, kAbc, 12);
    Term via_nbe = T("x0");
    try {
      via_nbe = normalize(t, 2000);
    } catch (const FuelExhausted&) {
      continue;
    }
    auto via_steps = testor::beta_normalize(t, 20000);
    if (!via_steps) continue;  // stepping duplicates work; budget differs
    CHECK(alpha_eq(via_nbe, *via_steps));
    CHECK(alpha_eq(normalize(via_nbe, 2000), via_nbe));  // idempotence
    ++compared;
  }
  CHECK(compared > 200);
}

TEST_CASE("normalization runs out of fuel on the looping term") {
  for (long long fuel : {1LL, 10LL, 100LL, 1000LL, 10000LL})
    CHECK_THROWS_AS(normalize(testor::omega(), fuel), FuelExhausted);
  CHECK_THROWS_AS(normalize(T("x0"), 0), std::invalid_argument);
  CHECK_THROWS_AS(normalize(T("x0"), -5), std::invalid_argument);
  try {
    normalize(testor::omega(), 42);
  } catch (const FuelExhausted& e) {
    CHECK(std::string(e.what()).find("42") != std::string::npos);
  }
}

TEST_CASE("church arithmetic normalizes to the expected numerals") {
  using testor::church;
  Term plus = testor::church_plus(), times = testor::church_times();
  Term four = normalize(
      Term::app(Term::app(plus, church(2)), church(2)), 10000);
  CHECK(alpha_eq(four, church(4)));
  Term six = normalize(
      Term::app(Term::app(times, church(2)), church(3)), 10000);
  CHECK(alpha_eq(six, church(6)));
  Term expd = normalize(
      Term::app(Term::app(testor::church_exp(), church(2)), church(2)),
      10000);
  CHECK(alpha_eq(expd, church(4)));
}

TEST_CASE("example functions match their frozen values") {
  CHECK(length_of(T("\\x0. x0 x0")) == 3);
  CHECK(length_of(T("x0")) == 1);
  CHECK(length_of(T("x0 (x1 x2)")) == 3);
  CHECK(clam(T("\\x0. \\x1. x0")) == 2);
  CHECK(clam(T("x0 x1")) == 0);
  CHECK(cfv(T("x0 x0"), vid(0)) == 2);
  CHECK(cfv(T("\\x0. x0"), vid(0)) == 0);
  CHECK(cfv(T("\\x0. x0 x1"), vid(1)) == 1);
  CHECK(cbv(T("\\x0. \\x1. x0")) == 1);
  CHECK(cbv(T("\\x0. x0 x0")) == 2);
  CHECK(cbv(T("x0 x1")) == 0);
  CHECK(can_eta(T("\\x0. (x1 x2) x0")));
  CHECK(!can_eta(T("\\x0. x0 x0")));
  CHECK(can_eta(T("\\x0. x1 x0")));
  CHECK(!can_eta(T("\\x0. x1 x1")));
  CHECK(!can_eta(T("x0 x1")));
}

TEST_CASE("length is invariant under renaming") {
  Rng rng(71);
  VarPool pool;
  for (int i = 0; i < 500; ++i) {
    Term t = random_term(rng, kAbc, 14);
    CHECK(length_of(rename(t, pool.any(rng), pool.any(rng))) ==
          length_of(t));
  }
}

TEST_CASE("occurrence counting commutes with renaming, case by case") {
  Rng rng(73);
  VarPool pool;
  for (int i = 0; i < 500; ++i) {
    Term t = random_term(rng, kAbc, 12);
    VarId y = pool.any(rng), z = pool.any(rng), x = pool.any(rng);
    unsigned long long lhs = cfv(rename(t, z, y), x);
    unsigned long long want;
    if (x != y && x != z)
      want = cfv(t, x);
    else if (x == z && z != y)
      want = cfv(t, x) + cfv(t, y);
    else if (x == y && y != z)
      want = 0;
    else
      want = cfv(t, y);
    CHECK(lhs == want);
  }
}

TEST_CASE("substitution through the recursion engine") {
  CHECK(alpha_eq(subst_via_recursor(T("x0"), T("x1 x2"), vid(0)),
                 T("x1 x2")));
  FinTermEnv id;
  for (const Term& t : enum_terms(4, kAbc))
    CHECK(alpha_eq(psubst_via_recursor(t, id), t));
}

TEST_CASE("engine and oracle agree on every exported function") {
  for (const auto& name : cross_check_names()) {
    LawReport r = cross_check(name, 4, kAbc, 83, 200);
    INFO(r.law);
    CHECK(r.pass());
    CHECK(r.trials > 0);
  }
  CHECK_THROWS_AS(cross_check("nosuchfn", 3, kAbc, 1, 5),
                  std::invalid_argument);
}

TEST_CASE("fixture config: shipped file, defaults, and errors") {
  FixtureConfig defaults = FixtureConfig::defaults();
  FixtureConfig shipped = FixtureConfig::load(BINDKIT_FIXTURE_PATH);
  CHECK(shipped.modulus == defaults.modulus);
  CHECK(shipped.ap_a == defaults.ap_a);
  CHECK(shipped.ap_b == defaults.ap_b);
  CHECK(shipped.ap_c == defaults.ap_c);
  CHECK(shipped.ap_k == defaults.ap_k);
  CHECK(shipped.lm_a == defaults.lm_a);
  CHECK(shipped.lm_b == defaults.lm_b);
  CHECK(shipped.lm_k == defaults.lm_k);
  CHECK(shipped.lm_probe == defaults.lm_probe);
  CHECK(defaults.describe().find("modulus=101") != std::string::npos);

  FixtureConfig tweaked = FixtureConfig::load(
      write_temp("# comment\nmodulus = 13\nap_a=2 # trailing\n"));
  CHECK(tweaked.modulus == 13);
  CHECK(tweaked.ap_a == 2);
  CHECK(tweaked.ap_b == FixtureConfig::defaults().ap_b);

  CHECK_THROWS_AS(FixtureConfig::load("/nonexistent/path.conf"),
                  std::runtime_error);
  CHECK_THROWS_AS(FixtureConfig::load(write_temp("nonsense\n")),
                  std::runtime_error);
  CHECK_THROWS_AS(FixtureConfig::load(write_temp("mystery = 3\n")),
                  std::runtime_error);
  CHECK_THROWS_AS(FixtureConfig::load(write_temp("modulus = abc\n")),
                  std::runtime_error);
  CHECK_THROWS_AS(arith_domain(FixtureConfig::load(write_temp(
                      "modulus = 1\n"))),
                  std::runtime_error);
  std::remove("/tmp/bindkit_fixture_test.conf");
}

TEST_CASE("a smaller modulus still satisfies the interpretation laws") {
  FixtureConfig cfg;
  cfg.modulus = 13;
  cfg.ap_c = 4;
  auto spec = interp_ce_spec<long long>(arith_domain(cfg));
  for (const auto& r : check_ce_laws(spec, AvoidSet{}, 59, 15)) {
    INFO(r.law);
    CHECK(r.pass());
  }
}

TEST_CASE("variable-count values behave like finite maps") {
  VarCount f;
  CHECK(f.value(vid(3)) == 0);
  f.set(vid(3), 2);
  CHECK(f.value(vid(3)) == 2);
  f.set(vid(3), 0);
  CHECK(f.at.empty());
  f.set(vid(0), 1);
  f.set(vid(2), 4);
  CHECK(f.show() == "{x0:1, x2:4}");
}
