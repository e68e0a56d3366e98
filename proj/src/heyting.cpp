#include "pftlab/heyting.hpp"

#include <algorithm>

#include "pftlab/error.hpp"

namespace pftlab {

namespace {

std::string set_name(const FinitePoset& p, Subset s) {
  std::string out = "{";
  bool first = true;
  for (std::size_t i : s) {
    if (!first) out += ",";
    out += p.name(i);
    first = false;
  }
  return out + "}";
}

// Greatest element of `s` under `order`, if any.
std::optional<std::size_t> greatest(const FinitePoset& order, Subset s) {
  for (std::size_t c : s) {
    if (s.subset_of(order.down(c))) return c;
  }
  return std::nullopt;
}

std::optional<std::size_t> least(const FinitePoset& order, Subset s) {
  for (std::size_t c : s) {
    if (s.subset_of(order.up(c))) return c;
  }
  return std::nullopt;
}

bool compare_filters(const Filter& a, const Filter& b) { return canonical_less(a.members, b.members); }

}  // namespace

LatticeReport check_lattice(const FinitePoset& order) {
  LatticeReport r;
  const std::size_t n = order.size();
  const auto bot = least(order, order.carrier());
  const auto top = greatest(order, order.carrier());
  if (!bot || !top) {
    r.message = n == 0 ? "empty order has no bounds" : "order has no bottom or no top element";
    return r;
  }
  r.bounded = true;
  std::vector<std::size_t> meet(n * n);
  std::vector<std::size_t> join(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const auto m = greatest(order, order.down(a) & order.down(b));
      const auto j = least(order, order.up(a) & order.up(b));
      if (!m || !j) {
        r.witness = {a, b};
        r.message = std::string("no ") + (m ? "join" : "meet") + " for ('" + order.name(a) + "', '" +
                    order.name(b) + "')";
        return r;
      }
      meet[a * n + b] = *m;
      join[a * n + b] = *j;
    }
  }
  r.lattice = true;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        const std::size_t lhs = meet[a * n + join[b * n + c]];
        const std::size_t rhs = join[meet[a * n + b] * n + meet[a * n + c]];
        if (lhs != rhs) {
          r.witness = {a, b, c};
          r.message = "not distributive: a ∧ (b ∨ c) ≠ (a ∧ b) ∨ (a ∧ c) at (a, b, c) = ('" + order.name(a) +
                      "', '" + order.name(b) + "', '" + order.name(c) + "')";
          return r;
        }
      }
    }
  }
  r.distributive = true;
  return r;
}

FiniteLattice::FiniteLattice() : FiniteLattice(from_poset(FinitePoset{})) {}

FiniteLattice::FiniteLattice(FinitePoset base, std::vector<Subset> upsets, std::vector<std::string> names)
    : base_(std::move(base)), upsets_(std::move(upsets)), names_(std::move(names)) {
  const std::size_t n = upsets_.size();
  if (n > Subset::capacity) {
    throw BoundExceeded("lattice has " + std::to_string(n) + " elements; at most 64 are supported");
  }
  for (std::size_t a = 0; a < n; ++a) {
    if (upsets_[a].empty()) bottom_ = a;
    if (upsets_[a] == base_.carrier()) top_ = a;
  }
  auto lookup = [&](Subset s) {
    auto e = element_of(s);
    if (!e) throw InvalidModel("carrier is not closed under union and intersection");
    return *e;
  };
  meet_.resize(n * n);
  join_.resize(n * n);
  implies_.resize(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      meet_[a * n + b] = lookup(upsets_[a] & upsets_[b]);
      join_[a * n + b] = lookup(upsets_[a] | upsets_[b]);
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) implies_[a * n + b] = implication_by_scan(*this, a, b);
  }
}

FiniteLattice FiniteLattice::from_poset(const FinitePoset& p) {
  auto ups = upsets(p);
  std::vector<std::string> names;
  names.reserve(ups.size());
  for (Subset u : ups) names.push_back(set_name(p, u));
  return FiniteLattice(p, std::move(ups), std::move(names));
}

FiniteLattice FiniteLattice::from_order(const FinitePoset& order) {
  const LatticeReport report = check_lattice(order);
  if (!report.valid()) throw InvalidModel(report.message);
  const std::size_t n = order.size();
  // Join-irreducibles: exactly one lower cover.
  std::vector<std::size_t> lower_covers(n, 0);
  for (auto [a, b] : order.covers()) ++lower_covers[b];
  std::vector<std::size_t> irreducibles;
  for (std::size_t a = 0; a < n; ++a) {
    if (lower_covers[a] == 1) irreducibles.push_back(a);
  }
  // P = J^op, so that {j ∈ J : j ≤ a} is an upset of P.
  std::vector<std::string> base_names;
  Relation base_rel;
  for (std::size_t i = 0; i < irreducibles.size(); ++i) {
    base_names.push_back(order.name(irreducibles[i]));
    for (std::size_t k = 0; k < irreducibles.size(); ++k) {
      if (order.leq(irreducibles[i], irreducibles[k])) base_rel.emplace_back(k, i);
    }
  }
  FinitePoset base = FinitePoset::from_relation(std::move(base_names), base_rel);
  std::vector<Subset> reps(n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t i = 0; i < irreducibles.size(); ++i) {
      if (order.leq(irreducibles[i], a)) reps[a].insert(i);
    }
  }
  FiniteLattice l(std::move(base), std::move(reps), order.names());
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (order.leq(a, b) != l.leq(a, b)) throw InvalidModel("Birkhoff representation does not reproduce the order");
    }
  }
  return l;
}

std::optional<std::size_t> FiniteLattice::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return i;
  }
  return std::nullopt;
}

std::size_t FiniteLattice::meet_all(Subset s) const {
  std::size_t acc = top_;
  for (std::size_t a : s) acc = meet(acc, a);
  return acc;
}

std::size_t FiniteLattice::join_all(Subset s) const {
  std::size_t acc = bottom_;
  for (std::size_t a : s) acc = join(acc, a);
  return acc;
}

Subset FiniteLattice::principal_up(std::size_t a) const {
  Subset out;
  for (std::size_t b = 0; b < size(); ++b) {
    if (leq(a, b)) out.insert(b);
  }
  return out;
}

Subset FiniteLattice::principal_down(std::size_t a) const {
  Subset out;
  for (std::size_t b = 0; b < size(); ++b) {
    if (leq(b, a)) out.insert(b);
  }
  return out;
}

std::optional<std::size_t> FiniteLattice::element_of(Subset upset) const {
  for (std::size_t a = 0; a < upsets_.size(); ++a) {
    if (upsets_[a] == upset) return a;
  }
  return std::nullopt;
}

FinitePoset FiniteLattice::order() const {
  Relation r;
  for (std::size_t a = 0; a < size(); ++a) {
    for (std::size_t b = 0; b < size(); ++b) {
      if (a != b && leq(a, b)) r.emplace_back(a, b);
    }
  }
  return FinitePoset::from_relation(names_, r);
}

bool FiniteLattice::operator==(const FiniteLattice& other) const {
  if (names_ != other.names_) return false;
  for (std::size_t a = 0; a < size(); ++a) {
    for (std::size_t b = 0; b < size(); ++b) {
      if (leq(a, b) != other.leq(a, b)) return false;
    }
  }
  return true;
}

LatticeReport validate(const FiniteLattice& l) {
  LatticeReport r;
  const std::size_t n = l.size();
  for (std::size_t a = 0; a < n; ++a) {
    if (!l.leq(l.bottom(), a) || !l.leq(a, l.top())) {
      r.witness = {a};
      r.message = "bounds do not enclose '" + l.name(a) + "'";
      return r;
    }
  }
  r.bounded = true;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const std::size_t m = l.meet(a, b);
      const std::size_t j = l.join(a, b);
      bool ok = l.leq(m, a) && l.leq(m, b) && l.leq(a, j) && l.leq(b, j);
      for (std::size_t c = 0; c < n && ok; ++c) {
        if (l.leq(c, a) && l.leq(c, b) && !l.leq(c, m)) ok = false;
        if (l.leq(a, c) && l.leq(b, c) && !l.leq(j, c)) ok = false;
      }
      if (!ok) {
        r.witness = {a, b};
        r.message = "meet/join table disagrees with the order at ('" + l.name(a) + "', '" + l.name(b) + "')";
        return r;
      }
    }
  }
  r.lattice = true;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        if (l.meet(a, l.join(b, c)) != l.join(l.meet(a, b), l.meet(a, c))) {
          r.witness = {a, b, c};
          r.message = "not distributive at ('" + l.name(a) + "', '" + l.name(b) + "', '" + l.name(c) + "')";
          return r;
        }
      }
    }
  }
  r.distributive = true;
  return r;
}

std::size_t implication_by_scan(const FiniteLattice& l, std::size_t a, std::size_t b) {
  Subset below;
  for (std::size_t x = 0; x < l.size(); ++x) {
    if (l.leq(l.meet(a, x), b)) below.insert(x);
  }
  return l.join_all(below);
}

std::optional<std::size_t> complement(const FiniteLattice& l, std::size_t a) {
  for (std::size_t b = 0; b < l.size(); ++b) {
    if (l.meet(a, b) == l.bottom() && l.join(a, b) == l.top()) return b;
  }
  return std::nullopt;
}

bool is_boolean(const FiniteLattice& l) {
  for (std::size_t a = 0; a < l.size(); ++a) {
    if (!complement(l, a)) return false;
  }
  return true;
}

Subset meet_primes(const FiniteLattice& l) {
  Subset out;
  for (std::size_t p = 0; p < l.size(); ++p) {
    if (p == l.top()) continue;
    bool prime = true;
    for (std::size_t a = 0; a < l.size() && prime; ++a) {
      for (std::size_t b = 0; b < l.size() && prime; ++b) {
        if (l.leq(l.meet(a, b), p) && !l.leq(a, p) && !l.leq(b, p)) prime = false;
      }
    }
    if (prime) out.insert(p);
  }
  return out;
}

Subset join_irreducibles(const FiniteLattice& l) {
  Subset out;
  for (std::size_t j = 0; j < l.size(); ++j) {
    if (j == l.bottom()) continue;
    bool prime = true;
    for (std::size_t a = 0; a < l.size() && prime; ++a) {
      for (std::size_t b = 0; b < l.size() && prime; ++b) {
        if (l.leq(j, l.join(a, b)) && !l.leq(j, a) && !l.leq(j, b)) prime = false;
      }
    }
    if (prime) out.insert(j);
  }
  return out;
}

bool is_filter(const FiniteLattice& l, Subset f) {
  if (f.empty() || !f.subset_of(l.carrier())) return false;
  for (std::size_t a : f) {
    if (!l.principal_up(a).subset_of(f)) return false;
    for (std::size_t b : f) {
      if (!f.contains(l.meet(a, b))) return false;
    }
  }
  return true;
}

bool is_prime_filter(const FiniteLattice& l, Subset f) {
  if (!is_filter(l, f) || f.contains(l.bottom())) return false;
  for (std::size_t a = 0; a < l.size(); ++a) {
    for (std::size_t b = 0; b < l.size(); ++b) {
      if (f.contains(l.join(a, b)) && !f.contains(a) && !f.contains(b)) return false;
    }
  }
  return true;
}

bool is_completely_prime_filter(const FiniteLattice& l, Subset f) {
  if (!is_filter(l, f)) return false;
  const Subset rest = f.complement(l.size());
  // ⋁∅ = 0 must stay outside F; every nonempty finite join reduces to
  // binary ones.
  if (!rest.contains(l.bottom())) return false;
  for (std::size_t a : rest) {
    for (std::size_t b : rest) {
      if (!rest.contains(l.join(a, b))) return false;
    }
  }
  return true;
}

std::vector<Filter> prime_filters(const FiniteLattice& l) {
  std::vector<Filter> out;
  for (std::size_t j : join_irreducibles(l)) {
    const Subset f = l.principal_up(j);
    if (!is_prime_filter(l, f)) continue;
    out.push_back({f, true, is_completely_prime_filter(l, f)});
  }
  std::sort(out.begin(), out.end(), compare_filters);
  return out;
}

Subset filter_of_meet_prime(const FiniteLattice& l, std::size_t p) { return l.principal_down(p).complement(l.size()); }

std::vector<Filter> completely_prime_filters(const FiniteLattice& l) {
  std::vector<Filter> out;
  for (std::size_t p : meet_primes(l)) {
    const Subset f = filter_of_meet_prime(l, p);
    if (!is_completely_prime_filter(l, f)) continue;
    out.push_back({f, is_prime_filter(l, f), true});
  }
  std::sort(out.begin(), out.end(), compare_filters);
  return out;
}

FiniteSpace points_space(const FiniteLattice& l) {
  const auto points = completely_prime_filters(l);
  std::vector<std::string> names;
  for (const Filter& x : points) names.push_back("x" + l.name(l.meet_all(x.members)));
  std::vector<Subset> opens;
  for (std::size_t a = 0; a < l.size(); ++a) {
    Subset eta;
    for (std::size_t i = 0; i < points.size(); ++i) {
      if (points[i].members.contains(a)) eta.insert(i);
    }
    opens.push_back(eta);
  }
  return FiniteSpace::from_opens(std::move(names), std::move(opens));
}

SpatialWitness is_spatial(const FiniteLattice& l) {
  const auto points = completely_prime_filters(l);
  for (std::size_t a = 0; a < l.size(); ++a) {
    for (std::size_t b = 0; b < l.size(); ++b) {
      if (l.leq(a, b)) continue;
      const bool separated = std::any_of(points.begin(), points.end(), [&](const Filter& x) {
        return x.members.contains(a) && !x.members.contains(b);
      });
      if (!separated) return {false, std::make_pair(a, b)};
    }
  }
  return {};
}

std::optional<std::size_t> smallest_dense(const FiniteLattice& l, std::size_t a) {
  Subset dense;
  for (std::size_t d = 0; d < l.size(); ++d) {
    if (l.leq(a, d) && l.implies(d, a) == a) dense.insert(d);
  }
  for (std::size_t d : dense) {
    if (dense.subset_of(l.principal_up(d))) return d;
  }
  return std::nullopt;
}

bool is_scattered_frame(const FiniteLattice& l) {
  for (std::size_t a = 0; a < l.size(); ++a) {
    if (!smallest_dense(l, a)) return false;
  }
  return true;
}

Subset min_primes(const FiniteLattice& l, std::size_t a) {
  const Subset above = meet_primes(l) & l.principal_up(a);
  Subset out;
  for (std::size_t p : above) {
    if ((above & l.principal_down(p)) == Subset::singleton(p)) out.insert(p);
  }
  return out;
}

EssentialPrimes essential_primes(const FiniteLattice& l, std::size_t a) {
  EssentialPrimes out;
  const Subset min = min_primes(l, a);
  out.meet_of_min_is_a = l.meet_all(min) == a;
  if (!out.meet_of_min_is_a) return out;
  for (std::size_t p : min) {
    if (l.meet_all(min - Subset::singleton(p)) != a) out.primes.insert(p);
  }
  return out;
}

Embedded induced_lattice(const FiniteLattice& l, Subset elements) {
  std::vector<std::size_t> source(elements.begin(), elements.end());
  std::vector<std::string> names;
  Relation r;
  for (std::size_t i = 0; i < source.size(); ++i) {
    names.push_back(l.name(source[i]));
    for (std::size_t k = 0; k < source.size(); ++k) {
      if (i != k && l.leq(source[i], source[k])) r.emplace_back(i, k);
    }
  }
  return {FiniteLattice::from_order(FinitePoset::from_relation(std::move(names), r)), std::move(source)};
}

Embedded booleanization(const FiniteLattice& l) {
  Subset image;
  for (std::size_t a = 0; a < l.size(); ++a) image.insert(l.negate(l.negate(a)));
  Embedded b = induced_lattice(l, image);
  if (!is_boolean(b.lattice)) throw InvalidModel("image of double negation is not boolean");
  for (std::size_t i = 0; i < b.source.size(); ++i) {
    for (std::size_t k = 0; k < b.source.size(); ++k) {
      const std::size_t expect = l.negate(l.negate(l.join(b.source[i], b.source[k])));
      if (b.source[b.lattice.join(i, k)] != expect) throw InvalidModel("booleanization join is not ¬¬(a ∨ b)");
    }
  }
  return b;
}

std::optional<std::vector<std::size_t>> find_lattice_isomorphism(const FiniteLattice& a, const FiniteLattice& b) {
  return find_isomorphism(a.order(), b.order());
}

}  // namespace pftlab
