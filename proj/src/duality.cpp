#include "pftlab/duality.hpp"

#include <algorithm>

#include "pftlab/error.hpp"

namespace pftlab {

EsakiaSpace dual_space(const FiniteLattice& l) {
  EsakiaSpace x;
  x.filters = prime_filters(l);
  std::vector<std::string> names;
  Relation r;
  for (std::size_t i = 0; i < x.filters.size(); ++i) {
    names.push_back("x" + l.name(l.meet_all(x.filters[i].members)));
    for (std::size_t k = 0; k < x.filters.size(); ++k) {
      if (i != k && x.filters[i].members.subset_of(x.filters[k].members)) r.emplace_back(i, k);
    }
  }
  x.order = FinitePoset::from_relation(std::move(names), r);
  return x;
}

EsakiaSpace esakia_space(const FinitePoset& p) { return EsakiaSpace{p, {}}; }

Subset phi(const EsakiaSpace& x, std::size_t a) {
  if (x.filters.size() != x.size()) throw InvalidModel("φ needs a space built from a lattice");
  Subset out;
  for (std::size_t i = 0; i < x.filters.size(); ++i) {
    if (x.filters[i].members.contains(a)) out.insert(i);
  }
  return out;
}

bool is_clopen(const EsakiaSpace& x, Subset s) { return s.subset_of(x.carrier()); }

// Every subset of a finite Priestley space is clopen.
Subset closure_pi(const EsakiaSpace& x, Subset s) {
  if (!is_clopen(x, s)) throw IndexOutOfRange("subset mentions a point outside the space");
  return s;
}

Subset interior_pi(const EsakiaSpace& x, Subset s) {
  if (!is_clopen(x, s)) throw IndexOutOfRange("subset mentions a point outside the space");
  return s;
}

bool is_regular_closed_pi(const EsakiaSpace& x, Subset s) { return closure_pi(x, interior_pi(x, s)) == s; }

bool priestley_separation(const EsakiaSpace& x) {
  for (std::size_t a = 0; a < x.size(); ++a) {
    for (std::size_t b = 0; b < x.size(); ++b) {
      if (x.order.leq(a, b)) continue;
      const Subset u = down_closure(x.order, Subset::singleton(b)).complement(x.size());
      if (!(is_clopen(x, u) && is_upset(x.order, u) && u.contains(a) && !u.contains(b))) return false;
    }
  }
  return true;
}

TopologyCheck esakia_condition(const EsakiaSpace& x, const Bounds& bounds) {
  if (x.size() > bounds.literal_check_points) return {true, false};
  TopologyCheck out;
  for_each_subset(x.carrier(), [&](Subset u) {
    if (is_clopen(x, u) && !is_clopen(x, down_closure(x.order, u))) out.holds = false;
  });
  return out;
}

TopologyCheck extremally_order_disconnected(const EsakiaSpace& x, const Bounds& bounds) {
  if (x.size() > bounds.literal_check_points) return {true, false};
  TopologyCheck out;
  for_each_subset(x.carrier(), [&](Subset u) {
    // every subset is open; test the upsets
    if (is_upset(x.order, u) && !is_clopen(x, closure_pi(x, u))) out.holds = false;
  });
  return out;
}

FiniteLattice upset_algebra(const EsakiaSpace& x) { return FiniteLattice::from_poset(x.order); }

Subset upset_implication(const EsakiaSpace& x, Subset u, Subset v) {
  return down_closure(x.order, u - v).complement(x.size());
}

Dual::Dual(FiniteLattice l) : lattice_(std::move(l)), space_(dual_space(lattice_)) {
  phi_.reserve(lattice_.size());
  for (std::size_t a = 0; a < lattice_.size(); ++a) phi_.push_back(pftlab::phi(space_, a));
}

std::optional<std::size_t> Dual::element_of(Subset upset) const {
  for (std::size_t a = 0; a < phi_.size(); ++a) {
    if (phi_[a] == upset) return a;
  }
  return std::nullopt;
}

bool UnitCounitReport::ok() const {
  return phi_bijective && phi_preserves_bounds && phi_preserves_meet && phi_preserves_join &&
         phi_preserves_implication && upset_implication_agrees && xi_isomorphism && base_isomorphism &&
         priestley.holds && esakia.holds && extremal.holds;
}

UnitCounitReport unit_counit_check(const FiniteLattice& l, const Bounds& bounds) {
  UnitCounitReport r;
  const Dual d(l);
  const EsakiaSpace& x = d.space();
  const FiniteLattice ux = upset_algebra(x);
  auto note = [&](const std::string& w) {
    if (r.witness.empty()) r.witness = w;
  };

  // φ : L → U(X_L)
  std::vector<std::size_t> image(l.size());
  Subset hit;
  r.phi_bijective = true;
  for (std::size_t a = 0; a < l.size(); ++a) {
    const auto u = ux.element_of(d.phi(a));
    if (!u || hit.contains(*u)) {
      r.phi_bijective = false;
      note("φ is not injective into upsets at '" + l.name(a) + "'");
      continue;
    }
    image[a] = *u;
    hit.insert(*u);
  }
  if (hit != ux.carrier()) {
    r.phi_bijective = false;
    note("φ misses some upset of X_L");
  }
  r.phi_preserves_bounds = d.phi(l.bottom()).empty() && d.phi(l.top()) == x.carrier();
  r.phi_preserves_meet = r.phi_preserves_join = r.phi_preserves_implication = true;
  r.upset_implication_agrees = true;
  for (std::size_t a = 0; a < l.size(); ++a) {
    for (std::size_t b = 0; b < l.size(); ++b) {
      const Subset pa = d.phi(a);
      const Subset pb = d.phi(b);
      if (d.phi(l.meet(a, b)) != (pa & pb)) {
        r.phi_preserves_meet = false;
        note("φ(a ∧ b) ≠ φ(a) ∩ φ(b) at ('" + l.name(a) + "', '" + l.name(b) + "')");
      }
      if (d.phi(l.join(a, b)) != (pa | pb)) {
        r.phi_preserves_join = false;
        note("φ(a ∨ b) ≠ φ(a) ∪ φ(b) at ('" + l.name(a) + "', '" + l.name(b) + "')");
      }
      if (d.phi(l.implies(a, b)) != upset_implication(x, pa, pb)) {
        r.phi_preserves_implication = false;
        note("φ(a → b) ≠ X ∖ ↓(φ(a) ∖ φ(b)) at ('" + l.name(a) + "', '" + l.name(b) + "')");
      }
      if (r.phi_bijective &&
          ux.representation(ux.implies(image[a], image[b])) != upset_implication(x, pa, pb)) {
        r.upset_implication_agrees = false;
        note("upset implication formula disagrees with the sup definition");
      }
    }
  }

  // ξ : X → X_{U(X)}, ξ(x) = {U : x ∈ U}
  const EsakiaSpace xx = dual_space(ux);
  std::vector<std::size_t> xi(x.size(), xx.size());
  r.xi_isomorphism = xx.size() == x.size();
  for (std::size_t p = 0; p < x.size() && r.xi_isomorphism; ++p) {
    Subset f;
    for (std::size_t u = 0; u < ux.size(); ++u) {
      if (ux.representation(u).contains(p)) f.insert(u);
    }
    for (std::size_t q = 0; q < xx.size(); ++q) {
      if (xx.filters[q].members == f) xi[p] = q;
    }
    if (xi[p] == xx.size()) {
      r.xi_isomorphism = false;
      note("ξ(" + x.order.name(p) + ") is not a point of X_{U(X)}");
    }
  }
  if (r.xi_isomorphism && !is_order_isomorphism(x.order, xx.order, xi)) {
    r.xi_isomorphism = false;
    note("ξ is not an order isomorphism");
  }

  r.base_isomorphism = find_isomorphism(x.order, l.base()).has_value();
  if (!r.base_isomorphism) note("X_L is not isomorphic to the base poset");

  r.priestley = {priestley_separation(x), true};
  r.esakia = esakia_condition(x, bounds);
  r.extremal = extremally_order_disconnected(x, bounds);
  return r;
}

}  // namespace pftlab
