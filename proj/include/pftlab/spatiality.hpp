#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "pftlab/assembly.hpp"
#include "pftlab/bounds.hpp"
#include "pftlab/duality.hpp"

namespace pftlab {

/// Y_L, the nuclear points of X_L, with the topology τ of traces of clopen
/// upsets. Subsets are over the points of X_L.
struct PointSet {
  Subset points;
  std::vector<Subset> tau_opens;  // canonical order
  bool characterizations_agree = false;  // {y} nuclear ⇔ y completely prime
  bool specialization_matches = false;   // cl_τ{y} = ↓y ∩ Y

  /// Smallest τ-closed superset of s ⊆ Y.
  Subset tau_closure(Subset s) const;
};

PointSet nuclear_points(const Dual& d, const Bounds& bounds = {});

/// γ(N) = N ∩ Y_L.
Subset gamma(const PointSet& y, NuclearSet n);

struct GammaReport {
  bool preserves_unions = false;
  bool preserves_meets = false;
  bool preserves_bounds = false;
  bool injective = false;
  bool onto_closed = false;  // onto the π-closed subsets of Y_L
  std::size_t tau_closed_in_image = 0;

  bool ok() const { return preserves_unions && preserves_meets && preserves_bounds && onto_closed; }
};

GammaReport gamma_check(const Dual& d, const Bounds& bounds = {});

struct AssemblySpatialReport {
  bool y_dense = false;             // (a) Y_L dense in (X_L, π)
  bool lattice_spatial = false;     // L spatial, decided on L alone
  bool nonempty_meets_y = false;    // (b)
  bool gamma_injective = false;     // (c)
  bool closed_set_coframe = false;  // (d) N(L) ≅ (F_π(Y_L), ⊇)

  bool agree() const;
  bool all_true() const {
    return y_dense && lattice_spatial && nonempty_meets_y && gamma_injective && closed_set_coframe;
  }
};

AssemblySpatialReport assembly_spatial_report(const Dual& d, const Bounds& bounds = {});

struct JoinPrimes {
  std::vector<NuclearSet> primes;   // join-primes of (N(X_L), ⊆)
  bool singletons_of_y = false;     // exactly {{y} : y ∈ Y_L}
  std::size_t points_of_lattice = 0;   // |pt(L)|
  std::size_t points_of_assembly = 0;  // |pt(N(L))|
};

JoinPrimes join_primes_of_assembly(const Dual& d, const Bounds& bounds = {});

struct DualPrimes {
  Subset min_primes;  // elements of L
  Subset essential;
};

/// Min(a) and the essential primes of a read off the dual space: y in
/// max[(X ∖ φ(a)) ∩ Y] resp. max(X ∖ φ(a)) ∩ Y, and p with φ(p) = X ∖ ↓y.
DualPrimes essential_primes_dual(const Dual& d, const PointSet& y, std::size_t a);

/// max(D) ∩ Y = max(D ∩ Y) for every downset D of X_L.
bool max_commutes_with_trace(const Dual& d, const PointSet& y);

/// Every a ≠ 1 has an essential prime (and a = ⋀Min(a)).
bool every_element_has_essential_prime(const FiniteLattice& l);

}  // namespace pftlab
