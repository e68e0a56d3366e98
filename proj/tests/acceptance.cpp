// Acceptance suite: one PASS/FAIL line per criterion, exit 1 if any fails.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "pftlab/assembly.hpp"
#include "pftlab/cli.hpp"
#include "pftlab/duality.hpp"
#include "pftlab/spaces.hpp"
#include "pftlab/spatiality.hpp"

#ifndef PFTLAB_GOLDEN_DIR
#define PFTLAB_GOLDEN_DIR "tests/golden"
#endif

using namespace pftlab;

namespace {

struct Result {
  bool pass = true;
  std::string note;

  void require(bool cond, const std::string& what) {
    if (!cond && pass) {
      pass = false;
      note = what;
    }
  }
};

std::vector<FinitePoset> posets_up_to(std::size_t max_n) {
  std::vector<FinitePoset> out;
  for (std::size_t n = 1; n <= max_n; ++n) {
    for (auto& p : enumerate_posets(n)) out.push_back(std::move(p));
  }
  return out;
}

std::string describe(const FinitePoset& p) {
  std::ostringstream s;
  s << "|P|=" << p.size() << " covers=";
  for (auto [a, b] : p.covers()) s << a << "<" << b << " ";
  return s.str();
}

Result duality_round_trip() {
  Result r;
  const auto ps = posets_up_to(5);
  r.require(ps.size() == 87, "expected 87 iso-classes, got " + std::to_string(ps.size()));
  for (const FinitePoset& p : ps) {
    const FiniteLattice l = FiniteLattice::from_poset(p);
    r.require(find_isomorphism(dual_space(l).order, p).has_value(), "X_L not isomorphic to P: " + describe(p));
    const UnitCounitReport u = unit_counit_check(l);
    r.require(u.ok() && u.phi_preserves_implication, "phi round trip failed: " + describe(p) + u.witness);
  }
  return r;
}

Result nucleus_duality() {
  Result r;
  const auto ps = posets_up_to(4);
  r.require(ps.size() == 24, "expected 24 iso-classes, got " + std::to_string(ps.size()));
  for (const FinitePoset& p : ps) {
    const Dual d(FiniteLattice::from_poset(p));
    const NuclearDualityReport n = nuclear_duality_check(d);
    r.require(n.oracle_count == (std::size_t{1} << p.size()), "oracle count is not 2^|P|: " + describe(p));
    r.require(n.bijective && n.order_reversing && n.round_trip, "j -> N_j not an anti-isomorphism: " + describe(p));
    r.require(n.u_v_w_formulas, "u/v/w nuclear sets disagree: " + describe(p) + n.witness);
    r.require(n.ok(), "nuclear duality check failed: " + describe(p) + n.witness);
  }
  return r;
}

Result w_decomposition() {
  Result r;
  for (const FinitePoset& p : posets_up_to(4)) {
    const FiniteLattice l = FiniteLattice::from_poset(p);
    for (const Nucleus& j : enumerate_nuclei_oracle(l)) {
      r.require(w_decomposition_check(l, j), "j != meet of w_a over fixpoints: " + describe(p));
    }
  }
  return r;
}

Result boolean_assemblies() {
  Result r;
  for (std::size_t n = 0; n <= 4; ++n) {
    const FiniteLattice b = FiniteLattice::from_poset(FinitePoset::antichain(n));
    const Dual d(b);
    const Assembly a = assembly_frame(d);
    r.require(enumerate_nuclei_oracle(b).size() == b.size(), "nucleus count differs from |2^n| at n=" + std::to_string(n));
    const auto iso = find_lattice_isomorphism(a.frame, b);
    r.require(iso.has_value() && is_boolean(a.frame), "no isomorphism N(2^n) -> 2^n at n=" + std::to_string(n));
  }
  return r;
}

Result booleanness() {
  Result r;
  for (const FinitePoset& p : posets_up_to(5)) {
    const Dual d(FiniteLattice::from_poset(p));
    const BooleanReport b = is_assembly_boolean(d);
    r.require(b.assembly_boolean && b.nuclear_equals_regular_closed && b.max_of_clopen_downsets_clopen && b.scattered,
              "a booleanness condition is false: " + describe(p));
    r.require(b.agree(), "booleanness conditions disagree: " + describe(p));
    r.require(assembly_booleanization_check(d).ok(), "B(N(L)) check failed: " + describe(p));
  }
  return r;
}

Result spatiality() {
  Result r;
  for (const FinitePoset& p : posets_up_to(5)) {
    const Dual d(FiniteLattice::from_poset(p));
    const PointSet y = nuclear_points(d);
    r.require(y.points == d.carrier(), "Y_L != X_L: " + describe(p));
    const AssemblySpatialReport s = assembly_spatial_report(d);
    r.require(s.agree() && s.y_dense == s.lattice_spatial, "spatial criteria disagree: " + describe(p));
    r.require(s.nonempty_meets_y, "a nonempty nuclear set misses Y_L: " + describe(p));
    const GammaReport g = gamma_check(d);
    r.require(g.injective && g.onto_closed && g.ok(), "gamma not bijective: " + describe(p));
    const JoinPrimes j = join_primes_of_assembly(d);
    r.require(j.points_of_lattice == j.points_of_assembly, "|pt(L)| != |pt(N(L))|: " + describe(p));
    r.require(j.singletons_of_y, "join-primes are not the singletons: " + describe(p));
  }
  return r;
}

Result essential_primes_agree() {
  Result r;
  for (const FinitePoset& p : posets_up_to(5)) {
    const Dual d(FiniteLattice::from_poset(p));
    const FiniteLattice& l = d.lattice();
    const PointSet y = nuclear_points(d);
    for (std::size_t a = 0; a < l.size(); ++a) {
      const DualPrimes dual = essential_primes_dual(d, y, a);
      const EssentialPrimes lat = essential_primes(l, a);
      r.require(dual.min_primes == min_primes(l, a), "Min(a) differs: " + describe(p));
      r.require(dual.essential == lat.primes, "essential primes differ: " + describe(p));
      r.require(lat.meet_of_min_is_a, "a != meet Min(a): " + describe(p));
    }
    r.require(every_element_has_essential_prime(l), "an element has no essential prime: " + describe(p));
  }
  return r;
}

Result simmons_isbell() {
  Result r;
  std::size_t total = 0;
  for (std::size_t n = 1; n <= 4; ++n) {
    for (const FiniteSpace& s : enumerate_topologies(n)) {
      ++total;
      const SimmonsIsbellReport si = simmons_isbell_report(s);
      const std::string at = " (n=" + std::to_string(n) + ", space #" + std::to_string(total) + ")";
      r.require(si.sigma_injective && si.sigma_onto, "sigma not a bijection onto front opens" + at);
      r.require(si.sigma_delta_identity, "sigma(j) != S - delta(N_j)" + at);
      r.require(si.soberification_is_t0_reflection, "soberification not the T0-reflection" + at);
      r.require(si.scatter.scattered_iff_weak_and_td, "scattered <=> weakly scattered and T_D fails" + at);
      r.require(si.scatter.dispersed_iff_t0_scattered, "dispersed <=> scattered(S_0) fails" + at);
      r.require(si.sober_iff_t0, "sober <=> T0 fails" + at);
      r.require(si.ok(), "Simmons/Isbell report not ok" + at);
    }
  }
  r.require(total == 389, "expected 389 spaces, got " + std::to_string(total));
  return r;
}

Result tower_check() {
  Result r;
  Bounds bounds;
  for (const FinitePoset& p : posets_up_to(3)) {
    const FiniteLattice l = FiniteLattice::from_poset(p);
    const Tower t = tower(l, 2, bounds);
    for (std::size_t k = 0; k < t.embeddings.size(); ++k) {
      const EmbeddingCheck& e = t.embeddings[k];
      r.require(e.injective && e.preserves_bounds && e.preserves_meets && e.preserves_joins,
                "a -> u_a not an injective frame map at stage " + std::to_string(k + 1) + ": " + describe(p));
      r.require(e.u_v_complemented, "u_a, v_a not complemented at stage " + std::to_string(k + 1) + ": " + describe(p));
    }
    const std::size_t expected = std::size_t{1} << (std::size_t{1} << p.size());
    r.require(t.stages[2].size() == expected, "|N^2(L)| = " + std::to_string(t.stages[2].size()) + ", expected 2^2^|P| = " +
                                                  std::to_string(expected) + ": " + describe(p));
  }
  return r;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return "<missing " + path + ">";
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

Result golden() {
  Result r;
  const std::string dir = PFTLAB_GOLDEN_DIR;
  const std::string l3 = dir + "/L3.json";
  const std::string sp = dir + "/sierpinski.json";
  struct Case {
    std::vector<std::string> args;
    std::string file;
  };
  const std::vector<Case> cases{
      {{"nuclei", "--lattice", l3, "--count"}, "L3_nuclei_count.out"},
      {{"nuclei", "--lattice", l3}, "L3_nuclei.out"},
      {{"dual", "--lattice", l3}, "L3_dual.out"},
      {{"assembly", "--lattice", l3}, "L3_assembly.out"},
      {{"points", "--lattice", l3}, "L3_points.out"},
      {{"space", "--space", sp}, "sierpinski_space.out"},
      {{"check", "--space", sp, "--simmons"}, "sierpinski_simmons.out"},
  };
  for (const Case& c : cases) {
    const cli::Outcome o = cli::run(c.args, Bounds{});
    r.require(o.status == cli::exit_ok, c.file + ": exit status " + std::to_string(o.status));
    r.require(o.out == read_file(dir + "/" + c.file), c.file + ": output differs from golden file");
  }
  return r;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double limit_s;  // 0 = none
    std::function<Result()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "duality round trip, all 87 posets |P| <= 5", 10, duality_round_trip},
      {2, "nucleus duality, all 24 posets |P| <= 4", 60, nucleus_duality},
      {3, "w-decomposition of every nucleus, |P| <= 4", 0, w_decomposition},
      {4, "N(2^n) isomorphic to 2^n, n <= 4", 0, boolean_assemblies},
      {5, "booleanness criteria, |P| <= 5", 0, booleanness},
      {6, "spatiality criteria, |P| <= 5", 0, spatiality},
      {7, "essential primes, |P| <= 5", 0, essential_primes_agree},
      {8, "Simmons/Isbell sweep, 389 topologies on 1..4 points", 300, simmons_isbell},
      {9, "tower N^2(L), |P| <= 3", 0, tower_check},
      {10, "golden CLI fixtures for L3 and the Sierpinski space", 0, golden},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Result r;
    try {
      r = c.run();
    } catch (const std::exception& e) {
      r.pass = false;
      r.note = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_s > 0 && secs >= c.limit_s) r.require(false, "exceeded time limit");
    if (!r.pass) ++failed;
    std::printf("criterion %2d: %s  %s (%.2fs)%s%s\n", c.id, r.pass ? "PASS" : "FAIL", c.name, secs,
                r.pass ? "" : " : ", r.note.c_str());
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
