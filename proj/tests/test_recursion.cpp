#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bindkit/enumerate.hpp"
#include "bindkit/parse.hpp"
#include "bindkit/recursion.hpp"
#include "bindkit/semantics.hpp"
#include "oracles.hpp"

using namespace bindkit;

namespace {

Term T(const std::string& src) { return parse_term(src); }

const VarSet kAbc{vid(0), vid(1), vid(2)};

}  // namespace

TEST_CASE("fresh picks respect the policy") {
  VarSet avoid{vid(0), vid(2)};
  CHECK(pick_fresh(avoid, FreshPolicy::Minimal) == vid(1));
  CHECK(pick_fresh(avoid, FreshPolicy::Shifted) == vid(3));
  CHECK(pick_fresh(VarSet{}, FreshPolicy::Minimal) == vid(0));
  CHECK(pick_fresh(VarSet{}, FreshPolicy::Shifted) == vid(1));
}

TEST_CASE("recursion into terms is the identity up to alpha") {
  auto spec = term_ce_spec();
  for (const Term& t : enum_terms(4, kAbc)) {
    CHECK(alpha_eq(recurse(spec, AvoidSet{}, t), t));
    CHECK(alpha_eq(recurse(spec, AvoidSet{vid(0), vid(1)}, t), t));
    CHECK(alpha_eq(recurse(spec, AvoidSet{}, t, FreshPolicy::Shifted), t));
  }
}

TEST_CASE("binders inside the avoid set are renamed before the clause") {
  // A spec that records binder names as it goes.
  CERensetSpec<std::vector<VarId>> spy;
  spy.name = "binder-spy";
  spy.base.name = "binder-spy";
  spy.base.rename = [](const std::vector<VarId>& v, VarId, VarId) {
    return v;
  };
  spy.base.equal = [](const auto& a, const auto& b) { return a == b; };
  spy.base.support_bound = [](const auto&) { return VarSet{}; };
  spy.base.sample = [](Rng&) { return std::vector<VarId>{}; };
  spy.base.show = [](const auto&) { return std::string("<spy>"); };
  spy.vr = [](VarId) { return std::vector<VarId>{}; };
  spy.ap = [](const auto& a, const auto& b) {
    auto out = a;
    out.insert(out.end(), b.begin(), b.end());
    return out;
  };
  spy.lm = [](VarId x, const auto& a) {
    auto out = a;
    out.push_back(x);
    return out;
  };

  auto seen = recurse(spy, AvoidSet{vid(0)}, T("\\x0. x0 x1"));
  REQUIRE(seen.size() == 1);
  CHECK(seen[0] != vid(0));  // renamed away from the avoid set
  CHECK(seen[0] != vid(1));  // and off the body's free variables
  CHECK(recurse(spy, AvoidSet{}, T("\\x0. x0"))[0] == vid(0));
}

TEST_CASE("constructor and renaming law suite passes for terms") {
  for (const auto& r :
       check_ce_laws(term_ce_spec(), AvoidSet{}, 37, 800)) {
    INFO(r.law);
    CHECK(r.pass());
  }
}

TEST_CASE("recursor clause conformance for terms") {
  for (const auto& r :
       check_recursor_clauses(term_ce_spec(), AvoidSet{}, 37, 400)) {
    INFO(r.law);
    CHECK(r.pass());
  }
}

TEST_CASE("fixed-binder spec is caught by the binder laws") {
  auto reports = check_ce_laws(term_ce_spec_broken_fixed_binder(),
                               AvoidSet{}, 37, 400);
  CHECK(!all_pass(reports));
  bool binder_law_failed = false;
  for (const auto& r : reports)
    if (!r.pass() && (r.law.find("S4") != std::string::npos ||
                      r.law.find("S5") != std::string::npos)) {
      binder_law_failed = true;
      CHECK(!r.violations.front().inputs.empty());
    }
  CHECK(binder_law_failed);
}

TEST_CASE("alpha variants recurse to equal values") {
  Rng rng(55);
  auto spec = term_ce_spec();
  for (int i = 0; i < 300; ++i) {
    Term t = random_term(rng, kAbc, 10);
    Term v = alpha_variant(t, rng);
    CHECK(alpha_eq(t, v));
    CHECK(testor::alpha_eq_oracle(t, v));
    CHECK(alpha_eq(recurse(spec, AvoidSet{vid(0)}, t),
                   recurse(spec, AvoidSet{vid(0)}, v)));
  }
}

TEST_CASE("policy independence on enumerated terms") {
  auto spec = term_ce_spec();
  auto counts = cfv_spec();
  for (const Term& t : enum_terms(4, kAbc)) {
    AvoidSet avoid{vid(0), vid(1)};
    CHECK(alpha_eq(recurse(spec, avoid, t, FreshPolicy::Minimal),
                   recurse(spec, avoid, t, FreshPolicy::Shifted)));
    CHECK(recurse(counts, avoid, t, FreshPolicy::Minimal) ==
          recurse(counts, avoid, t, FreshPolicy::Shifted));
  }
}

TEST_CASE("redex counting needs the subterm view") {
  CHECK(redex_count(T("(\\x0. x0) x1")) == 1);
  CHECK(redex_count(T("\\x0. x0")) == 0);
  CHECK(redex_count(T("(\\x0. (\\x1. x1) x0) ((\\x2. x2) x1)")) == 3);
  for (const Term& t : enum_terms(4, kAbc))
    CHECK(redex_count(t) == testor::redexes_db(to_debruijn(t)));
  Rng rng(81);
  for (int i = 0; i < 500; ++i) {
    Term t = random_term(rng, kAbc, 14);
    CHECK(redex_count(t) == testor::redexes_db(to_debruijn(t)));
  }
}

TEST_CASE("full-recursion law suite passes for the redex counter") {
  for (const auto& r : check_frce_laws(redex_counter_spec(), AvoidSet{},
                                       41, 600)) {
    INFO(r.law);
    CHECK(r.pass());
  }
}

TEST_CASE("term-ignoring lift of plain recursion agrees with it") {
  CHECK(check_frce_term_ignoring(term_ce_spec(), AvoidSet{}, 41, 300).pass());

  auto lifted = frce_from_ce(length_spec());
  for (const Term& t : enum_terms(4, kAbc))
    CHECK(prim_recurse(lifted, AvoidSet{}, t) ==
          recurse(length_spec(), AvoidSet{}, t));
}

TEST_CASE("substitution structure laws pass for terms") {
  for (const auto& r : check_subst_laws(term_subst_spec(), 43, 600)) {
    INFO(r.law);
    CHECK(r.pass());
  }
}

TEST_CASE("recursion by substitution is the identity on terms") {
  auto spec = term_subst_spec();
  for (const Term& t : enum_terms(4, kAbc))
    CHECK(alpha_eq(subst_recurse(spec, t), t));
}

TEST_CASE("renaming induced by substitution is term renaming") {
  auto ind = induced_renset(term_subst_spec());
  for (const Term& t : enum_terms(4, kAbc))
    for (VarId y : kAbc)
      for (VarId z : kAbc)
        CHECK(alpha_eq(ind.rename(t, y, z), rename(t, y, z)));
}
