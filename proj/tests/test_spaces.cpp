#include <doctest.h>

#include <random>

#include "pftlab/error.hpp"
#include "pftlab/spaces.hpp"
#include "support.hpp"

using namespace pftlab;
using namespace fixtures;

TEST_CASE("open frame") {
  const FiniteLattice o = open_frame(sierpinski());
  CHECK(o.size() == 3);
  CHECK(validate(o).valid());
  CHECK(open_frame(discrete2()).size() == 4);
  CHECK(open_frame(indiscrete2()).size() == 2);
  CHECK(open_frame(FiniteSpace()).size() == 1);
}

TEST_CASE("t0 reflection") {
  CHECK(is_t0(sierpinski()));
  CHECK_FALSE(is_t0(indiscrete2()));
  CHECK_FALSE(is_t0(three_point()));
  const QuotientMap q = t0_reflection(three_point());
  CHECK(q.map == std::vector<std::size_t>{0, 0, 1});
  CHECK(q.target.names() == std::vector<std::string>{"[0,1]", "2"});
  CHECK(find_homeomorphism(q.target, sierpinski()).has_value());
  CHECK(check_quotient(q).ok());
  CHECK(t0_reflection(indiscrete2()).target.size() == 1);
  for (std::size_t n = 0; n <= 3; ++n) {
    for (const FiniteSpace& s : enumerate_topologies(n)) {
      const QuotientMap r = t0_reflection(s);
      CHECK(is_t0(r.target));
      CHECK(check_quotient(r).ok());
    }
  }
}

TEST_CASE("soberification") {
  const Soberification s = soberification(sierpinski());
  CHECK(s.continuous);
  CHECK(s.frame_isomorphism);
  CHECK(s.homeomorphic_to_t0);
  CHECK(s.space.size() == 2);
  const Soberification i = soberification(indiscrete2());
  CHECK(i.space.size() == 1);
  CHECK(i.epsilon == std::vector<std::size_t>{0, 0});
  CHECK(i.homeomorphic_to_t0);
}

TEST_CASE("sober spaces") {
  CHECK(is_sober(sierpinski()));
  CHECK(is_sober(discrete2()));
  CHECK_FALSE(is_sober(indiscrete2()));
  for (std::size_t n = 0; n <= 3; ++n) {
    for (const FiniteSpace& s : enumerate_topologies(n)) CHECK(is_sober(s) == is_t0(s));
  }
}

TEST_CASE("front topology") {
  CHECK(front_topology(sierpinski()).opens().size() == 4);
  CHECK(front_topology(indiscrete2()).opens().size() == 2);
  CHECK(front_topology(three_point()).opens().size() == 4);
  for (std::size_t n = 0; n <= 3; ++n) {
    for (const FiniteSpace& s : enumerate_topologies(n)) {
      const FiniteSpace f = front_topology(s);
      for (Subset u : s.opens()) CHECK(f.is_open(u));
      for (Subset u : s.opens()) CHECK(f.is_closed(u));
    }
  }
}

TEST_CASE("point kinds") {
  const FiniteSpace s = sierpinski();
  const PointKind top = classify_point(s, s.carrier(), 1);
  CHECK(top.isolated);
  CHECK(top.weakly_isolated);
  const PointKind bottom = classify_point(s, s.carrier(), 0);
  CHECK_FALSE(bottom.isolated);
  CHECK_FALSE(bottom.weakly_isolated);
  CHECK_FALSE(bottom.detached);
  CHECK(classify_point(s, Subset::singleton(0), 0).isolated);
  const FiniteSpace i = indiscrete2();
  CHECK_FALSE(classify_point(i, i.carrier(), 0).isolated);
  CHECK(classify_point(i, i.carrier(), 0).weakly_isolated);
  CHECK(classify_point(i, i.carrier(), 0).detached);
  CHECK(classify_point(i, Subset::singleton(0), 0).isolated);
  CHECK_THROWS_AS(classify_point(i, Subset::singleton(0), 1), IndexOutOfRange);
  CHECK_THROWS_AS(classify_point(i, Subset::full(3), 0), IndexOutOfRange);
}

TEST_CASE("scatter flags") {
  const ScatterFlags i = scatter_flags(indiscrete2());
  CHECK_FALSE(i.t0);
  CHECK_FALSE(i.t_d);
  CHECK_FALSE(i.scattered);
  CHECK(i.weakly_scattered);
  CHECK(i.dispersed);
  const ScatterFlags s = scatter_flags(sierpinski());
  CHECK(s.t0);
  CHECK(s.t_d);
  CHECK(s.scattered);
  for (std::size_t n = 0; n <= 4; ++n) {
    for (const FiniteSpace& sp : enumerate_topologies(n)) {
      const ScatterReport r = scatter_report(sp);
      CHECK(r.consistent());
      CHECK(r.flags.weakly_scattered);
      CHECK(r.flags.dispersed);
      CHECK(r.flags.scattered == r.flags.t0);
    }
  }
}

TEST_CASE("sigma and delta") {
  const FiniteSpace s = sierpinski();
  const SpaceDual sd(s);
  const FiniteLattice& o = sd.frame();
  CHECK(sigma(s, identity_nucleus(o)).empty());
  CHECK(sigma(s, top_nucleus(o)) == s.carrier());
  for (const Nucleus& j : enumerate_nuclei_oracle(o)) {
    const NuclearSet n = to_nuclear_set(sd.dual(), j);
    CHECK(sigma(s, j) == delta(sd, n).complement(s.size()));
    CHECK(front_topology(s).is_open(sigma(s, j)));
  }
  CHECK_THROWS_AS(sigma(s, Nucleus({2, 1, 2})), InvalidModel);
}

TEST_CASE("simmons-isbell report") {
  const SimmonsIsbellReport r = simmons_isbell_report(sierpinski());
  CHECK(r.ok());
  CHECK(r.nuclei == 4);
  CHECK(r.front_opens == 4);
  const SimmonsIsbellReport i = simmons_isbell_report(indiscrete2());
  CHECK(i.ok());
  CHECK(i.nuclei == 2);
  CHECK(i.sigma_injective);
  for (std::size_t n = 0; n <= 3; ++n) {
    for (const FiniteSpace& sp : enumerate_topologies(n)) {
      const SimmonsIsbellReport x = simmons_isbell_report(sp);
      CHECK(x.agree());
      CHECK(x.ok());
    }
  }
}

TEST_CASE("compactification") {
  CHECK(compactification_check(sierpinski()).ok());
  CHECK(compactification_check(sierpinski()).surjective);
  CHECK(compactification_check(indiscrete2()).ok());
  for (std::size_t n = 0; n <= 3; ++n) {
    for (const FiniteSpace& sp : enumerate_topologies(n)) CHECK(compactification_check(sp).ok());
  }
}

TEST_CASE("regular closed sets") {
  CHECK(regular_closed(sierpinski()) == std::vector<Subset>{Subset{}, Subset::full(2)});
  CHECK(regular_closed(discrete2()).size() == 4);
  CHECK(regular_closed(indiscrete2()).size() == 2);
}

TEST_CASE("topology enumeration matches the preorder count") {
  for (std::size_t n = 0; n <= 4; ++n) {
    CHECK(enumerate_topologies(n).size() == oracle::count_preorders(n));
  }
  CHECK(enumerate_topologies(3).size() == 29);
  Bounds tight;
  tight.max_topology_points = 2;
  CHECK_THROWS_AS(enumerate_topologies(3, tight), BoundExceeded);
}

TEST_CASE("homeomorphism search") {
  CHECK_FALSE(find_homeomorphism(sierpinski(), discrete2()).has_value());
  const FiniteSpace flipped = FiniteSpace::from_opens({"a", "b"}, {Subset{}, Subset::singleton(0), Subset::full(2)});
  const auto h = find_homeomorphism(sierpinski(), flipped);
  REQUIRE(h.has_value());
  CHECK(*h == std::vector<std::size_t>{1, 0});
}
