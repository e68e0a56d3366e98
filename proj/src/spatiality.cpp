#include "pftlab/spatiality.hpp"

#include <algorithm>
#include <set>

#include "pftlab/error.hpp"

namespace pftlab {

Subset PointSet::tau_closure(Subset s) const {
  Subset out = points;
  for (Subset v : tau_opens) {
    const Subset closed = points - v;
    if (s.subset_of(closed)) out &= closed;
  }
  return out;
}

PointSet nuclear_points(const Dual& d, const Bounds& bounds) {
  const EsakiaSpace& x = d.space();
  const FiniteLattice& l = d.lattice();
  PointSet y;
  Subset by_prime;
  for (std::size_t p = 0; p < x.size(); ++p) {
    if (is_nuclear(x, Subset::singleton(p), bounds).holds) y.points.insert(p);
    if (is_completely_prime_filter(l, x.filters[p].members)) by_prime.insert(p);
  }
  y.characterizations_agree = y.points == by_prime;

  std::set<std::uint64_t> seen;
  for_each_subset(x.carrier(), [&](Subset u) {
    if (is_clopen(x, u) && is_upset(x.order, u) && seen.insert((u & y.points).bits()).second) {
      y.tau_opens.push_back(u & y.points);
    }
  });
  std::sort(y.tau_opens.begin(), y.tau_opens.end(), canonical_less);

  y.specialization_matches = true;
  for (std::size_t p : y.points) {
    if (y.tau_closure(Subset::singleton(p)) != (x.order.down(p) & y.points)) y.specialization_matches = false;
  }
  return y;
}

Subset gamma(const PointSet& y, NuclearSet n) { return n.points & y.points; }

GammaReport gamma_check(const Dual& d, const Bounds& bounds) {
  const EsakiaSpace& x = d.space();
  const PointSet y = nuclear_points(d, bounds);
  const Assembly a = assembly_frame(d, bounds);
  GammaReport r;
  r.preserves_unions = r.preserves_meets = true;
  std::set<std::uint64_t> image;
  for (const NuclearSet& n : a.sets) {
    image.insert(gamma(y, n).bits());
    for (const NuclearSet& m : a.sets) {
      // unions and intersections of nuclear sets stay nuclear in N(X_L)
      if (gamma(y, {n.points | m.points}) != (gamma(y, n) | gamma(y, m))) r.preserves_unions = false;
      const Subset fam[] = {n.points, m.points};
      const Subset meet = meet_in_nuclear_sets(x, fam, false, bounds);
      if (gamma(y, {meet}) != (gamma(y, n) & gamma(y, m))) r.preserves_meets = false;
    }
  }
  r.preserves_bounds = gamma(y, {Subset{}}).empty() && gamma(y, {x.carrier()}) == y.points;
  r.injective = image.size() == a.sets.size();

  std::set<std::uint64_t> closed;
  for_each_subset(y.points, [&](Subset s) {
    if (closure_pi(x, s) == s) closed.insert(s.bits());
  });
  r.onto_closed = image == closed;
  for (std::uint64_t bits : image) {
    const Subset s = Subset::from_bits(bits);
    if (y.tau_closure(s) == s) ++r.tau_closed_in_image;
  }
  return r;
}

bool AssemblySpatialReport::agree() const {
  return y_dense == lattice_spatial && y_dense == nonempty_meets_y && y_dense == gamma_injective &&
         y_dense == closed_set_coframe;
}

AssemblySpatialReport assembly_spatial_report(const Dual& d, const Bounds& bounds) {
  const EsakiaSpace& x = d.space();
  const PointSet y = nuclear_points(d, bounds);
  const Assembly a = assembly_frame(d, bounds);
  AssemblySpatialReport r;
  r.y_dense = closure_pi(x, y.points) == x.carrier();
  r.lattice_spatial = is_spatial(d.lattice()).spatial;

  r.nonempty_meets_y = true;
  std::set<std::uint64_t> image;
  for (const NuclearSet& n : a.sets) {
    if (!n.points.empty() && gamma(y, n).empty()) r.nonempty_meets_y = false;
    image.insert(gamma(y, n).bits());
  }
  r.gamma_injective = image.size() == a.sets.size();

  // (F_π(Y_L), ⊇) as a lattice in its own right
  std::vector<Subset> closed;
  for_each_subset(y.points, [&](Subset s) {
    if (closure_pi(x, s) == s) closed.push_back(s);
  });
  std::vector<std::string> names;
  Relation rel;
  for (std::size_t i = 0; i < closed.size(); ++i) {
    names.push_back(std::to_string(closed[i].bits()));
    for (std::size_t k = 0; k < closed.size(); ++k) {
      if (i != k && closed[k].subset_of(closed[i])) rel.emplace_back(i, k);
    }
  }
  const FiniteLattice coframe = FiniteLattice::from_order(FinitePoset::from_relation(std::move(names), rel));
  r.closed_set_coframe = find_lattice_isomorphism(a.frame, coframe).has_value();
  return r;
}

JoinPrimes join_primes_of_assembly(const Dual& d, const Bounds& bounds) {
  const Assembly a = assembly_frame(d, bounds);
  const PointSet y = nuclear_points(d, bounds);
  JoinPrimes out;
  // (N(X_L), ⊆) is the order dual of the frame, so its join-primes are the
  // frame's meet-primes.
  for (std::size_t p : meet_primes(a.frame)) out.primes.push_back(a.sets[p]);
  std::sort(out.primes.begin(), out.primes.end(),
            [](const NuclearSet& u, const NuclearSet& v) { return canonical_less(u.points, v.points); });

  std::vector<NuclearSet> expected;
  for (std::size_t p : y.points) expected.push_back({Subset::singleton(p)});
  out.singletons_of_y = out.primes == expected;
  out.points_of_lattice = completely_prime_filters(d.lattice()).size();
  out.points_of_assembly = completely_prime_filters(a.frame).size();
  return out;
}

DualPrimes essential_primes_dual(const Dual& d, const PointSet& y, std::size_t a) {
  const FiniteLattice& l = d.lattice();
  if (a >= l.size()) throw IndexOutOfRange("element index " + std::to_string(a) + " is outside the lattice");
  const EsakiaSpace& x = d.space();
  const Subset rest = d.phi(a).complement(x.size());
  auto prime_of = [&](std::size_t p) {
    const auto e = d.element_of(x.order.down(p).complement(x.size()));
    if (!e) throw InvalidModel("X ∖ ↓y is not in the image of φ");
    return *e;
  };
  DualPrimes out;
  for (std::size_t p : maximal_points(x.order, rest & y.points)) out.min_primes.insert(prime_of(p));
  for (std::size_t p : maximal_points(x.order, rest) & y.points) out.essential.insert(prime_of(p));
  return out;
}

bool max_commutes_with_trace(const Dual& d, const PointSet& y) {
  const EsakiaSpace& x = d.space();
  bool ok = true;
  for_each_subset(x.carrier(), [&](Subset s) {
    if (!is_downset(x.order, s)) return;
    if ((maximal_points(x.order, s) & y.points) != maximal_points(x.order, s & y.points)) ok = false;
  });
  return ok;
}

bool every_element_has_essential_prime(const FiniteLattice& l) {
  for (std::size_t a = 0; a < l.size(); ++a) {
    if (a == l.top()) continue;
    const EssentialPrimes e = essential_primes(l, a);
    if (!e.meet_of_min_is_a || e.primes.empty()) return false;
  }
  return true;
}

}  // namespace pftlab
