#include <doctest.h>

#include "pftlab/error.hpp"
#include "support.hpp"

using namespace pftlab;
using namespace fixtures;

TEST_CASE("dual space examples") {
  const FiniteLattice l3 = L3();
  const EsakiaSpace x = dual_space(l3);
  CHECK(x.order.names() == std::vector<std::string>{"x1", "xm"});
  CHECK(x.order.less(0, 1));
  CHECK(x.filters[0].members == elements(l3, {"1"}));
  CHECK(x.filters[1].members == elements(l3, {"m", "1"}));
  const EsakiaSpace a = dual_space(L4());
  CHECK(a.size() == 2);
  CHECK_FALSE(a.order.comparable(0, 1));
  CHECK(dual_space(two()).size() == 1);
  CHECK(dual_space(one()).size() == 0);
  CHECK(EsakiaSpace::topology == "discrete");
}

TEST_CASE("phi examples") {
  const Dual d(L3());
  const FiniteLattice& l = d.lattice();
  CHECK(d.phi(el(l, "m")) == points(d.space().order, {"xm"}));
  CHECK(d.phi(l.bottom()).empty());
  CHECK(d.phi(l.top()) == d.carrier());
  CHECK(d.element_of(points(d.space().order, {"xm"})) == el(l, "m"));
  CHECK_FALSE(d.element_of(points(d.space().order, {"x1"})).has_value());
}

TEST_CASE("upset implication examples") {
  const EsakiaSpace x3 = dual_space(L3());
  const Subset xm = points(x3.order, {"xm"});
  CHECK(upset_implication(x3, xm, Subset{}).empty());
  for_each_subset(x3.carrier(), [&](Subset u) {
    if (is_upset(x3.order, u)) CHECK(upset_implication(x3, x3.carrier(), u) == u);
  });
  const EsakiaSpace a2 = esakia_space(A2());
  const Subset px = Subset::singleton(0);
  const Subset py = Subset::singleton(1);
  CHECK(upset_implication(a2, px, py) == py);
}

TEST_CASE("upset algebra implication matches the formula") {
  for (const FinitePoset& p : posets_up_to(5)) {
    const EsakiaSpace x = esakia_space(p);
    const FiniteLattice u = upset_algebra(x);
    for (std::size_t a = 0; a < u.size(); ++a) {
      for (std::size_t b = 0; b < u.size(); ++b) {
        CHECK(u.representation(u.implies(a, b)) == upset_implication(x, u.representation(a), u.representation(b)));
      }
    }
  }
}

TEST_CASE("unit and counit examples") {
  CHECK(unit_counit_check(L3()).ok());
  CHECK(unit_counit_check(two()).ok());
  CHECK(unit_counit_check(one()).ok());
  CHECK(find_isomorphism(dual_space(FiniteLattice::from_poset(C2())).order, C2()).has_value());
}

TEST_CASE("duality round trip over every poset up to 5 points") {
  for (const FinitePoset& p : posets_up_to(5)) {
    const FiniteLattice l = FiniteLattice::from_poset(p);
    const UnitCounitReport r = unit_counit_check(l);
    CHECK_MESSAGE(r.ok(), r.witness);
    CHECK(r.esakia.literal);
    const EsakiaSpace x = dual_space(l);
    CHECK(find_isomorphism(x.order, p).has_value());
    CHECK(priestley_separation(x));
    for_each_subset(x.carrier(), [&](Subset s) {
      CHECK(is_clopen(x, s));
      CHECK(is_regular_closed_pi(x, s));
    });
  }
}

TEST_CASE("literal topology checks switch to the shortcut above the bound") {
  Bounds tight;
  tight.literal_check_points = 2;
  const EsakiaSpace x = esakia_space(FinitePoset::antichain(3));
  CHECK_FALSE(esakia_condition(x, tight).literal);
  CHECK(esakia_condition(x, tight).holds);
  CHECK(esakia_condition(x).literal);
  CHECK(extremally_order_disconnected(x).holds);
  CHECK_THROWS_AS(closure_pi(x, Subset::singleton(4)), IndexOutOfRange);
}
