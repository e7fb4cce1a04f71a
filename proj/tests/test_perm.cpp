#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bindkit/enumerate.hpp"
#include "bindkit/parse.hpp"
#include "bindkit/perm.hpp"
#include "oracles.hpp"

using namespace bindkit;

namespace {

Term T(const std::string& src) { return parse_term(src); }

const VarSet kAbc{vid(0), vid(1), vid(2)};
const std::vector<VarId> kWindow = {vid(0), vid(1), vid(2), vid(3)};

FinPerm three_cycle() {
  return FinPerm::from_map(
      {{vid(0), vid(1)}, {vid(1), vid(2)}, {vid(2), vid(0)}});
}

}  // namespace

TEST_CASE("finite permutations: construction and validation") {
  FinPerm id = FinPerm::identity();
  CHECK(id.is_identity());
  CHECK(id(vid(4)) == vid(4));

  FinPerm t01 = FinPerm::transposition(vid(0), vid(1));
  CHECK(t01(vid(0)) == vid(1));
  CHECK(t01(vid(1)) == vid(0));
  CHECK(t01(vid(2)) == vid(2));
  CHECK(FinPerm::transposition(vid(3), vid(3)).is_identity());

  // Explicit fixed points normalize away.
  CHECK(FinPerm::from_map({{vid(0), vid(0)}}).is_identity());
  CHECK_THROWS_AS(FinPerm::from_map({{vid(0), vid(1)}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      FinPerm::from_map(
          {{vid(0), vid(1)}, {vid(1), vid(1)}, {vid(2), vid(0)}}),
      std::invalid_argument);

  FinPerm c = three_cycle();
  CHECK(c(vid(0)) == vid(1));
  CHECK(c.moved() == VarSet{vid(0), vid(1), vid(2)});
  CHECK(c.inverse()(vid(1)) == vid(0));
  CHECK(c.compose(c.inverse()).is_identity());
}

TEST_CASE("composition applies the right factor first") {
  FinPerm t01 = FinPerm::transposition(vid(0), vid(1));
  FinPerm t12 = FinPerm::transposition(vid(1), vid(2));
  // compose(sigma, tau)(x) = sigma(tau(x)).
  CHECK(t01.compose(t12)(vid(1)) == vid(2));
  CHECK(t01.compose(t12)(vid(2)) == vid(0));
  CHECK(t12.compose(t01)(vid(0)) == vid(2));
  CHECK(t01.compose(t12) != t12.compose(t01));
}

TEST_CASE("canonical decomposition realizes the permutation") {
  FinPerm c = three_cycle();
  auto ts = c.transpositions();
  REQUIRE(ts.size() == 2);
  CHECK(ts[0] == std::pair{vid(0), vid(1)});
  CHECK(ts[1] == std::pair{vid(0), vid(2)});

  Rng rng(31);
  for (int i = 0; i < 300; ++i) {
    FinPerm sigma = random_perm(rng, kWindow);
    // Fold left to right as variable swaps and compare pointwise.
    FinPerm folded = FinPerm::identity();
    for (const auto& [u, v] : sigma.transpositions())
      folded = FinPerm::transposition(u, v).compose(folded);
    for (VarId w : kWindow) CHECK(folded(w) == sigma(w));
    CHECK(folded == sigma);
  }
}

TEST_CASE("permutation action on terms matches direct relabeling") {
  CHECK(alpha_eq(perm_action_term(T("\\x0. x0 x1"), three_cycle()),
                 T("\\x1. x1 x2")));
  for (const Term& t : enum_terms(4, kAbc)) {
    CHECK(alpha_eq(perm_action_term(t, three_cycle()),
                   direct_relabel_term(t, three_cycle())));
  }
  Rng rng(77);
  for (int i = 0; i < 400; ++i) {
    Term t = random_term(rng, kAbc, 12);
    FinPerm sigma = random_perm(rng, kWindow);
    CHECK(alpha_eq(perm_action_term(t, sigma),
                   direct_relabel_term(t, sigma)));
  }
}

TEST_CASE("group and action law suites pass") {
  for (const auto& r : check_perm_group_laws(19, 800)) {
    INFO(r.law);
    CHECK(r.pass());
  }
  for (const auto& r : check_perm_action_laws(term_perm_nominal(), 19, 500)) {
    INFO(r.law);
    CHECK(r.pass());
  }
}

TEST_CASE("swap and permutation presentations round trip") {
  for (const auto& r : check_perm_roundtrip(term_perm_nominal(),
                                            term_nominal_direct(), 29, 500)) {
    INFO(r.law);
    CHECK(r.pass());
  }
}

TEST_CASE("restricting the permutation action gives direct swapping") {
  auto as_swaps = to_swap_action(term_perm_nominal());
  for (const Term& t : enum_terms(4, kAbc))
    for (VarId a : kWindow)
      for (VarId b : kWindow)
        CHECK(alpha_eq(as_swaps.swap(t, a, b), swap(t, a, b)));
}

TEST_CASE("permutations serialize and parse back") {
  FinPerm c = three_cycle();
  CHECK(FinPerm::from_json(c.to_json()) == c);
  CHECK(FinPerm::from_json(nlohmann::json::object()).is_identity());
  CHECK_THROWS_AS(FinPerm::from_json(nlohmann::json::array()),
                  std::invalid_argument);
  CHECK(c.show() == "{\"0\":1,\"1\":2,\"2\":0}");
}
