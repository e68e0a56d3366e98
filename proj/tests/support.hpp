#pragma once

// Fixtures and brute-force oracles shared by the unit tests. The oracles
// work from the bare order relation and never call the library routine
// they are compared against.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "pftlab/assembly.hpp"
#include "pftlab/duality.hpp"
#include "pftlab/finite_space.hpp"
#include "pftlab/heyting.hpp"
#include "pftlab/poset.hpp"

namespace fixtures {

using namespace pftlab;

inline FinitePoset C2() { return FinitePoset::from_relation({"a", "b"}, {{0, 1}}); }
inline FinitePoset A2() { return FinitePoset::from_relation({"x", "y"}, {}); }

inline FiniteLattice L3() {
  return FiniteLattice::from_order(FinitePoset::from_relation({"0", "m", "1"}, {{0, 1}, {1, 2}}));
}
inline FiniteLattice L4() {
  return FiniteLattice::from_order(FinitePoset::from_relation({"0", "p", "q", "1"}, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}));
}
inline FiniteLattice two() { return FiniteLattice::from_order(FinitePoset::from_relation({"0", "1"}, {{0, 1}})); }
inline FiniteLattice one() { return FiniteLattice(); }

inline FinitePoset M3() {
  return FinitePoset::from_relation({"0", "a", "b", "c", "1"}, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}});
}

inline FiniteSpace sierpinski() { return FiniteSpace::sierpinski(); }
inline FiniteSpace indiscrete2() { return FiniteSpace::indiscrete(2); }
inline FiniteSpace discrete2() { return FiniteSpace::discrete(2); }
inline FiniteSpace three_point() {
  return FiniteSpace::from_opens({"0", "1", "2"}, {Subset{}, Subset::singleton(2), Subset::full(3)});
}

inline std::size_t el(const FiniteLattice& l, const char* name) { return *l.index_of(name); }
inline std::size_t pt(const FinitePoset& p, const char* name) { return *p.index_of(name); }

inline Subset points(const FinitePoset& p, std::initializer_list<const char*> names) {
  Subset s;
  for (const char* n : names) s.insert(*p.index_of(n));
  return s;
}

inline Subset elements(const FiniteLattice& l, std::initializer_list<const char*> names) {
  Subset s;
  for (const char* n : names) s.insert(*l.index_of(n));
  return s;
}

/// All posets with 1 ≤ |P| ≤ max_n from enumerate_posets.
inline std::vector<FinitePoset> posets_up_to(std::size_t max_n) {
  std::vector<FinitePoset> out;
  for (std::size_t n = 1; n <= max_n; ++n) {
    for (auto& p : enumerate_posets(n)) out.push_back(std::move(p));
  }
  return out;
}

/// A random poset: a random DAG on a random linear extension.
inline FinitePoset random_poset(std::mt19937& rng, std::size_t n, double density) {
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::bernoulli_distribution edge(density);
  Relation r;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = i + 1; k < n; ++k) {
      if (edge(rng)) r.emplace_back(perm[i], perm[k]);
    }
  }
  return FinitePoset::from_relation(n, r);
}

}  // namespace fixtures

namespace oracle {

using namespace pftlab;

/// leq as a dense matrix, for code that must not touch library tables.
using Matrix = std::vector<std::vector<bool>>;

inline Matrix leq_matrix(const FiniteLattice& l) {
  Matrix m(l.size(), std::vector<bool>(l.size()));
  for (std::size_t a = 0; a < l.size(); ++a) {
    for (std::size_t b = 0; b < l.size(); ++b) m[a][b] = l.leq(a, b);
  }
  return m;
}

/// Greatest lower bound by scanning the order.
inline std::size_t glb(const Matrix& m, std::size_t a, std::size_t b) {
  const std::size_t n = m.size();
  for (std::size_t c = 0; c < n; ++c) {
    if (!m[c][a] || !m[c][b]) continue;
    bool greatest = true;
    for (std::size_t d = 0; d < n && greatest; ++d) {
      if (m[d][a] && m[d][b] && !m[d][c]) greatest = false;
    }
    if (greatest) return c;
  }
  return n;
}

inline std::size_t lub(const Matrix& m, std::size_t a, std::size_t b) {
  const std::size_t n = m.size();
  for (std::size_t c = 0; c < n; ++c) {
    if (!m[a][c] || !m[b][c]) continue;
    bool least = true;
    for (std::size_t d = 0; d < n && least; ++d) {
      if (m[a][d] && m[b][d] && !m[c][d]) least = false;
    }
    if (least) return c;
  }
  return n;
}

/// a → b as the largest x with a ∧ x ≤ b.
inline std::size_t implies(const Matrix& m, std::size_t a, std::size_t b) {
  const std::size_t n = m.size();
  std::size_t best = n;
  for (std::size_t x = 0; x < n; ++x) {
    if (!m[glb(m, a, x)][b]) continue;
    if (best == n || m[best][x]) best = x;
  }
  return best;
}

/// Number of partial orders on n labelled points up to isomorphism, by
/// scanning every relation and canonicalising under all permutations.
inline std::size_t count_poset_classes(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> off;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      if (i != k) off.emplace_back(i, k);
    }
  }
  std::vector<std::vector<std::size_t>> perms;
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));

  std::set<std::uint64_t> classes;
  const std::uint64_t total = std::uint64_t{1} << off.size();
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    std::vector<std::vector<bool>> r(n, std::vector<bool>(n));
    for (std::size_t i = 0; i < n; ++i) r[i][i] = true;
    for (std::size_t b = 0; b < off.size(); ++b) {
      if ((mask >> b) & 1U) r[off[b].first][off[b].second] = true;
    }
    bool ok = true;
    for (std::size_t a = 0; a < n && ok; ++a) {
      for (std::size_t b = 0; b < n && ok; ++b) {
        if (a != b && r[a][b] && r[b][a]) ok = false;
        for (std::size_t c = 0; c < n && ok; ++c) {
          if (r[a][b] && r[b][c] && !r[a][c]) ok = false;
        }
      }
    }
    if (!ok) continue;
    std::uint64_t best = ~std::uint64_t{0};
    for (const auto& q : perms) {
      std::uint64_t code = 0;
      for (std::size_t b = 0; b < off.size(); ++b) {
        if (r[q[off[b].first]][q[off[b].second]]) code |= std::uint64_t{1} << b;
      }
      best = std::min(best, code);
    }
    classes.insert(best);
  }
  return classes.size();
}

/// Number of preorders on n labelled points.
inline std::size_t count_preorders(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> off;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      if (i != k) off.emplace_back(i, k);
    }
  }
  std::size_t count = 0;
  const std::uint64_t total = std::uint64_t{1} << off.size();
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    std::vector<std::vector<bool>> r(n, std::vector<bool>(n));
    for (std::size_t i = 0; i < n; ++i) r[i][i] = true;
    for (std::size_t b = 0; b < off.size(); ++b) {
      if ((mask >> b) & 1U) r[off[b].first][off[b].second] = true;
    }
    bool ok = true;
    for (std::size_t a = 0; a < n && ok; ++a) {
      for (std::size_t b = 0; b < n && ok; ++b) {
        for (std::size_t c = 0; c < n && ok; ++c) {
          if (r[a][b] && r[b][c] && !r[a][c]) ok = false;
        }
      }
    }
    if (ok) ++count;
  }
  return count;
}

/// Every endomap of L satisfying the nucleus axioms, by scanning all |L|^|L|
/// maps. Only for |L| ≤ 6.
inline std::set<std::vector<std::size_t>> all_nuclei(const FiniteLattice& l) {
  const Matrix m = leq_matrix(l);
  const std::size_t n = l.size();
  std::set<std::vector<std::size_t>> out;
  std::vector<std::size_t> v(n, 0);
  while (true) {
    bool ok = true;
    for (std::size_t a = 0; a < n && ok; ++a) {
      ok = m[a][v[a]] && m[v[v[a]]][v[a]];
      for (std::size_t b = 0; b < n && ok; ++b) ok = v[glb(m, a, b)] == glb(m, v[a], v[b]);
    }
    if (ok) out.insert(v);
    std::size_t i = 0;
    while (i < n && ++v[i] == n) v[i++] = 0;
    if (i == n) break;
  }
  return out;
}

/// Prime filters by scanning every subset of L.
inline std::set<std::uint64_t> prime_filters(const FiniteLattice& l) {
  const Matrix m = leq_matrix(l);
  const std::size_t n = l.size();
  std::vector<std::vector<std::size_t>> meet(n, std::vector<std::size_t>(n));
  std::vector<std::vector<std::size_t>> join(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      meet[a][b] = glb(m, a, b);
      join[a][b] = lub(m, a, b);
    }
  }
  std::set<std::uint64_t> out;
  for_each_subset(l.carrier(), [&](Subset f) {
    if (f.empty() || f == l.carrier()) return;
    for (std::size_t a : f) {
      for (std::size_t b = 0; b < n; ++b) {
        if (m[a][b] && !f.contains(b)) return;
        if (f.contains(b) && !f.contains(meet[a][b])) return;
      }
    }
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        if (f.contains(join[a][b]) && !f.contains(a) && !f.contains(b)) return;
      }
    }
    out.insert(f.bits());
  });
  return out;
}

/// Upsets of P by scanning every subset.
inline std::set<std::uint64_t> upsets(const FinitePoset& p) {
  std::set<std::uint64_t> out;
  for_each_subset(p.carrier(), [&](Subset s) {
    for (std::size_t a : s) {
      for (std::size_t b = 0; b < p.size(); ++b) {
        if (p.leq(a, b) && !s.contains(b)) return;
      }
    }
    out.insert(s.bits());
  });
  return out;
}

}  // namespace oracle
