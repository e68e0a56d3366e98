#include "pftlab/assembly.hpp"

#include <algorithm>
#include <set>

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

void require_nucleus(const FiniteLattice& l, const Nucleus& j) {
  const NucleusReport r = validate_nucleus(l, j);
  if (!r.valid()) throw InvalidModel(r.message);
}

void require_in(const Dual& d, Subset s) {
  if (!s.subset_of(d.carrier())) throw IndexOutOfRange("subset mentions a point outside X_L");
}

}  // namespace

NucleusReport validate_nucleus(const FiniteLattice& l, const Nucleus& j) {
  NucleusReport r;
  const std::size_t n = l.size();
  if (j.size() != n) {
    r.message = "nucleus has " + std::to_string(j.size()) + " values for " + std::to_string(n) + " elements";
    return r;
  }
  for (std::size_t a = 0; a < n; ++a) {
    if (j(a) >= n) {
      r.witness = {a};
      r.message = "value at '" + l.name(a) + "' is outside the lattice";
      return r;
    }
  }
  r.total = r.inflationary = r.idempotent = r.preserves_meets = r.monotone = true;
  auto fail = [&](bool& flag, std::vector<std::size_t> w, const std::string& msg) {
    if (!flag) return;
    flag = false;
    if (r.message.empty()) {
      r.witness = std::move(w);
      r.message = msg;
    }
  };
  for (std::size_t a = 0; a < n; ++a) {
    if (!l.leq(a, j(a))) fail(r.inflationary, {a}, "not inflationary at '" + l.name(a) + "'");
  }
  for (std::size_t a = 0; a < n; ++a) {
    if (!l.leq(j(j(a)), j(a))) fail(r.idempotent, {a}, "not idempotent at '" + l.name(a) + "'");
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (j(l.meet(a, b)) != l.meet(j(a), j(b))) {
        fail(r.preserves_meets, {a, b}, "j(a ∧ b) ≠ ja ∧ jb at ('" + l.name(a) + "', '" + l.name(b) + "')");
      }
      if (l.leq(a, b) && !l.leq(j(a), j(b))) {
        fail(r.monotone, {a, b}, "not monotone at ('" + l.name(a) + "', '" + l.name(b) + "')");
      }
    }
  }
  return r;
}

Nucleus identity_nucleus(const FiniteLattice& l) {
  std::vector<std::size_t> v(l.size());
  for (std::size_t a = 0; a < l.size(); ++a) v[a] = a;
  return Nucleus(std::move(v));
}

Nucleus top_nucleus(const FiniteLattice& l) { return Nucleus(std::vector<std::size_t>(l.size(), l.top())); }

Nucleus make_u(const FiniteLattice& l, std::size_t a) {
  std::vector<std::size_t> v(l.size());
  for (std::size_t x = 0; x < l.size(); ++x) v[x] = l.join(a, x);
  return Nucleus(std::move(v));
}

Nucleus make_v(const FiniteLattice& l, std::size_t a) {
  std::vector<std::size_t> v(l.size());
  for (std::size_t x = 0; x < l.size(); ++x) v[x] = l.implies(a, x);
  return Nucleus(std::move(v));
}

Nucleus make_w(const FiniteLattice& l, std::size_t a) {
  std::vector<std::size_t> v(l.size());
  for (std::size_t x = 0; x < l.size(); ++x) v[x] = l.implies(l.implies(x, a), a);
  return Nucleus(std::move(v));
}

bool nucleus_leq(const FiniteLattice& l, const Nucleus& j, const Nucleus& k) {
  for (std::size_t a = 0; a < l.size(); ++a) {
    if (!l.leq(j(a), k(a))) return false;
  }
  return true;
}

Subset fixpoints(const FiniteLattice& l, const Nucleus& j) {
  Subset out;
  for (std::size_t a = 0; a < l.size(); ++a) {
    if (j(a) == a) out.insert(a);
  }
  return out;
}

TopologyCheck is_nuclear(const EsakiaSpace& x, Subset f, const Bounds& bounds, bool allow_shortcut) {
  if (!f.subset_of(x.carrier())) throw IndexOutOfRange("subset mentions a point outside the space");
  if (x.size() > bounds.literal_check_points) {
    if (!allow_shortcut) {
      throw BoundExceeded("literal nuclearity check needs |X| ≤ " + std::to_string(bounds.literal_check_points));
    }
    return {true, false};
  }
  TopologyCheck out;
  if (closure_pi(x, f) != f) out.holds = false;
  for_each_subset(x.carrier(), [&](Subset u) {
    if (out.holds && is_clopen(x, u) && !is_clopen(x, down_closure(x.order, u & f))) out.holds = false;
  });
  return out;
}

NuclearSet to_nuclear_set(const Dual& d, const Nucleus& j) {
  const FiniteLattice& l = d.lattice();
  require_nucleus(l, j);
  NuclearSet n;
  const auto& filters = d.space().filters;
  for (std::size_t p = 0; p < filters.size(); ++p) {
    bool fixed = true;
    for (std::size_t a = 0; a < l.size() && fixed; ++a) {
      if (filters[p].members.contains(j(a)) && !filters[p].members.contains(a)) fixed = false;
    }
    if (fixed) n.points.insert(p);
  }
  return n;
}

Nucleus from_nuclear_set(const Dual& d, NuclearSet n) {
  require_in(d, n.points);
  const FiniteLattice& l = d.lattice();
  const EsakiaSpace& x = d.space();
  std::vector<std::size_t> v(l.size());
  for (std::size_t a = 0; a < l.size(); ++a) {
    const Subset u = down_closure(x.order, n.points - d.phi(a)).complement(x.size());
    const auto e = d.element_of(u);
    if (!e) throw InvalidModel("X ∖ ↓(N ∖ φ(a)) is not in the image of φ");
    v[a] = *e;
  }
  Nucleus j(std::move(v));
  require_nucleus(l, j);
  return j;
}

std::optional<std::size_t> Assembly::index_of(Subset nuclear) const {
  for (std::size_t i = 0; i < sets.size(); ++i) {
    if (sets[i].points == nuclear) return i;
  }
  return std::nullopt;
}

Assembly assembly_frame(const Dual& d, const Bounds& bounds) {
  const EsakiaSpace& x = d.space();
  if (x.size() > 6) {
    throw BoundExceeded("N(L) would have 2^" + std::to_string(x.size()) + " elements; at most 64 are supported");
  }
  Assembly out;
  std::vector<Subset> found;
  for_each_subset(x.carrier(), [&](Subset f) {
    const TopologyCheck c = is_nuclear(x, f, bounds);
    if (!c.literal) out.literal = false;
    if (c.holds) found.push_back(f);
  });
  const std::size_t n = x.size();
  std::sort(found.begin(), found.end(),
            [n](Subset a, Subset b) { return canonical_less(a.complement(n), b.complement(n)); });

  std::vector<std::string> names;
  Relation r;
  for (std::size_t i = 0; i < found.size(); ++i) {
    names.push_back(set_name(x.order, found[i]));
    for (std::size_t k = 0; k < found.size(); ++k) {
      if (i != k && found[k].subset_of(found[i])) r.emplace_back(i, k);
    }
  }
  out.frame = FiniteLattice::from_order(FinitePoset::from_relation(std::move(names), r));
  for (Subset f : found) {
    out.sets.push_back({f});
    out.nuclei.push_back(from_nuclear_set(d, {f}));
  }
  return out;
}

Nucleus nuclei_meet(const FiniteLattice& l, std::span<const Nucleus> js) {
  std::vector<std::size_t> v(l.size(), l.top());
  for (const Nucleus& j : js) {
    require_nucleus(l, j);
    for (std::size_t a = 0; a < l.size(); ++a) v[a] = l.meet(v[a], j(a));
  }
  return Nucleus(std::move(v));
}

Subset meet_in_nuclear_sets(const EsakiaSpace& x, std::span<const Subset> family, bool literal,
                            const Bounds& bounds) {
  Subset n = x.carrier();
  for (Subset f : family) {
    if (!f.subset_of(x.carrier())) throw IndexOutOfRange("subset mentions a point outside the space");
    n &= f;
  }
  if (!literal) return n;
  if (x.size() > 4) throw BoundExceeded("literal meet formula needs |X| ≤ 4");
  Subset u;
  for_each_subset(n, [&](Subset f) {
    if (is_nuclear(x, f, bounds, false).holds) u |= f;
  });
  return closure_pi(x, u);
}

Nucleus nuclei_join(const Dual& d, std::span<const Nucleus> js, const Bounds& bounds, bool literal_meet_formula) {
  std::vector<Subset> sets;
  for (const Nucleus& j : js) sets.push_back(to_nuclear_set(d, j).points);
  return from_nuclear_set(d, {meet_in_nuclear_sets(d.space(), sets, literal_meet_formula, bounds)});
}

Nucleus join_by_iteration(const FiniteLattice& l, std::span<const Nucleus> js) {
  for (const Nucleus& j : js) require_nucleus(l, j);
  std::vector<std::size_t> v(l.size());
  for (std::size_t a = 0; a < l.size(); ++a) {
    std::size_t cur = a;
    while (true) {
      std::size_t next = cur;
      for (const Nucleus& j : js) next = j(next);
      if (next == cur) break;
      cur = next;
    }
    v[a] = cur;
  }
  Nucleus out(std::move(v));
  require_nucleus(l, out);
  return out;
}

std::vector<Nucleus> enumerate_nuclei_oracle(const FiniteLattice& l, const Bounds& bounds) {
  const std::size_t n = l.size();
  if (n > bounds.oracle_elements) {
    throw BoundExceeded("oracle enumeration needs |L| ≤ " + std::to_string(bounds.oracle_elements));
  }
  std::vector<Subset> ups(n);
  for (std::size_t a = 0; a < n; ++a) ups[a] = l.principal_up(a);

  std::vector<Nucleus> out;
  const Subset top = Subset::singleton(l.top());
  for_each_subset(l.carrier() - top, [&](Subset rest) {
    const Subset s = rest | top;
    for (std::size_t x : s) {
      for (std::size_t a = 0; a < n; ++a) {
        if (!s.contains(l.implies(a, x))) return;
      }
      for (std::size_t y : s) {
        if (!s.contains(l.meet(x, y))) return;
      }
    }
    std::vector<std::size_t> v(n);
    for (std::size_t a = 0; a < n; ++a) v[a] = l.meet_all(s & ups[a]);
    Nucleus j(std::move(v));
    require_nucleus(l, j);
    out.push_back(std::move(j));
  });
  return out;
}

Embedded fixpoint_frame(const FiniteLattice& l, const Nucleus& j) {
  require_nucleus(l, j);
  Embedded e = induced_lattice(l, fixpoints(l, j));
  const auto& src = e.source;
  for (std::size_t a = 0; a < src.size(); ++a) {
    for (std::size_t b = 0; b < src.size(); ++b) {
      if (src[e.lattice.meet(a, b)] != l.meet(src[a], src[b])) throw InvalidModel("fixpoint meets differ from L");
      if (src[e.lattice.join(a, b)] != j(l.join(src[a], src[b]))) throw InvalidModel("fixpoint joins are not j(a ∨ b)");
    }
  }
  return e;
}

bool w_decomposition_check(const FiniteLattice& l, const Nucleus& j) {
  std::vector<Nucleus> ws;
  for (std::size_t a : fixpoints(l, j)) ws.push_back(make_w(l, a));
  return nuclei_meet(l, ws) == j;
}

bool NuclearDualityReport::ok() const {
  return oracle_count == nuclear_set_count && bijective && round_trip && order_reversing && u_v_w_formulas &&
         meet_is_union && join_is_intersection && max_of_downsets_nuclear && clopen_cut_nuclear;
}

NuclearDualityReport nuclear_duality_check(const Dual& d, const Bounds& bounds) {
  NuclearDualityReport r;
  const FiniteLattice& l = d.lattice();
  const EsakiaSpace& x = d.space();
  auto note = [&](const std::string& w) {
    if (r.witness.empty()) r.witness = w;
  };

  const std::vector<Nucleus> oracle = enumerate_nuclei_oracle(l, bounds);
  const Assembly asm_ = assembly_frame(d, bounds);
  r.oracle_count = oracle.size();
  r.nuclear_set_count = asm_.sets.size();

  std::vector<Subset> images;
  std::set<std::uint64_t> seen;
  for (const Nucleus& j : oracle) {
    images.push_back(to_nuclear_set(d, j).points);
    seen.insert(images.back().bits());
  }
  std::set<std::uint64_t> expected;
  for (const NuclearSet& s : asm_.sets) expected.insert(s.points.bits());
  r.bijective = seen.size() == oracle.size() && seen == expected;
  if (!r.bijective) note("j ↦ N_j is not a bijection onto N(X_L)");

  r.round_trip = true;
  for (std::size_t i = 0; i < oracle.size(); ++i) {
    if (from_nuclear_set(d, {images[i]}) != oracle[i]) {
      r.round_trip = false;
      note("j_{N_j} ≠ j");
    }
  }
  for (const NuclearSet& s : asm_.sets) {
    if (to_nuclear_set(d, from_nuclear_set(d, s)) != s) {
      r.round_trip = false;
      note("N_{j_N} ≠ N for N = " + set_name(x.order, s.points));
    }
  }

  r.order_reversing = r.meet_is_union = r.join_is_intersection = true;
  const bool literal_join = x.size() <= 4;
  for (std::size_t i = 0; i < oracle.size(); ++i) {
    for (std::size_t k = 0; k < oracle.size(); ++k) {
      if (nucleus_leq(l, oracle[i], oracle[k]) != images[k].subset_of(images[i])) {
        r.order_reversing = false;
        note("j ≤ k does not match N_k ⊆ N_j");
      }
      const Nucleus pair[] = {oracle[i], oracle[k]};
      if (to_nuclear_set(d, nuclei_meet(l, pair)).points != (images[i] | images[k])) {
        r.meet_is_union = false;
        note("N_{j∧k} ≠ N_j ∪ N_k");
      }
      const Nucleus iter = join_by_iteration(l, pair);
      if (to_nuclear_set(d, iter).points != (images[i] & images[k]) || nuclei_join(d, pair, bounds) != iter ||
          (literal_join && nuclei_join(d, pair, bounds, true) != iter)) {
        r.join_is_intersection = false;
        note("N_{j∨k} ≠ N_j ∩ N_k");
      }
    }
  }

  r.u_v_w_formulas = true;
  for (std::size_t a = 0; a < l.size(); ++a) {
    const Subset pa = d.phi(a);
    const Subset rest = pa.complement(x.size());
    if (to_nuclear_set(d, make_u(l, a)).points != rest || to_nuclear_set(d, make_v(l, a)).points != pa ||
        to_nuclear_set(d, make_w(l, a)).points != maximal_points(x.order, rest)) {
      r.u_v_w_formulas = false;
      note("nuclear set of u/v/w at '" + l.name(a) + "' is off");
    }
  }

  r.max_of_downsets_nuclear = r.clopen_cut_nuclear = true;
  for_each_subset(x.carrier(), [&](Subset s) {
    if (is_downset(x.order, s) && !is_nuclear(x, maximal_points(x.order, s), bounds).holds) {
      r.max_of_downsets_nuclear = false;
      note("max(D) is not nuclear for D = " + set_name(x.order, s));
    }
    if (!is_clopen(x, s)) return;
    for (const NuclearSet& n : asm_.sets) {
      if (!is_nuclear(x, s & n.points, bounds).holds) {
        r.clopen_cut_nuclear = false;
        note("U ∩ N is not nuclear");
      }
    }
  });
  return r;
}

bool BooleanReport::agree() const {
  return assembly_boolean == nuclear_equals_regular_closed && assembly_boolean == max_of_clopen_downsets_clopen &&
         assembly_boolean == scattered;
}

BooleanReport is_assembly_boolean(const Dual& d, const Bounds& bounds) {
  BooleanReport r;
  const EsakiaSpace& x = d.space();
  r.assembly_boolean = is_boolean(assembly_frame(d, bounds).frame);
  r.nuclear_equals_regular_closed = r.max_of_clopen_downsets_clopen = true;
  for_each_subset(x.carrier(), [&](Subset s) {
    if (is_nuclear(x, s, bounds).holds != is_regular_closed_pi(x, s)) r.nuclear_equals_regular_closed = false;
    if (is_downset(x.order, s) && is_clopen(x, s) && !is_clopen(x, maximal_points(x.order, s))) {
      r.max_of_clopen_downsets_clopen = false;
    }
  });
  r.scattered = is_scattered_frame(d.lattice());
  return r;
}

Tower tower(const FiniteLattice& l, std::size_t k, const Bounds& bounds) {
  if (k > bounds.max_tower_depth) {
    throw BoundExceeded("tower depth " + std::to_string(k) + " exceeds " + std::to_string(bounds.max_tower_depth));
  }
  Tower t;
  t.stages.push_back(l);
  if (k >= 2) {
    const std::size_t pts = dual_space(l).size();
    if (pts > bounds.tower_points) {
      throw BoundExceeded("a depth-" + std::to_string(k) + " tower needs |X_L| ≤ " +
                          std::to_string(bounds.tower_points));
    }
  }
  for (std::size_t stage = 0; stage < k; ++stage) {
    const FiniteLattice& cur = t.stages.back();
    const Dual d(cur);
    Assembly next = assembly_frame(d, bounds);
    const FiniteLattice& f = next.frame;
    EmbeddingCheck e;
    e.map.resize(cur.size());
    Subset hit;
    e.injective = true;
    for (std::size_t a = 0; a < cur.size(); ++a) {
      const auto i = next.index_of(d.phi(a).complement(d.points()));
      if (!i) throw InvalidModel("u_a has no nuclear set");
      e.map[a] = *i;
      if (hit.contains(*i)) e.injective = false;
      hit.insert(*i);
    }
    e.preserves_bounds = e.map[cur.bottom()] == f.bottom() && e.map[cur.top()] == f.top();
    e.preserves_meets = e.preserves_joins = true;
    for (std::size_t a = 0; a < cur.size(); ++a) {
      for (std::size_t b = 0; b < cur.size(); ++b) {
        if (e.map[cur.meet(a, b)] != f.meet(e.map[a], e.map[b])) e.preserves_meets = false;
        if (e.map[cur.join(a, b)] != f.join(e.map[a], e.map[b])) e.preserves_joins = false;
      }
    }
    e.u_v_complemented = true;
    for (std::size_t a = 0; a < cur.size(); ++a) {
      const auto v = next.index_of(d.phi(a));
      if (!v || f.meet(e.map[a], *v) != f.bottom() || f.join(e.map[a], *v) != f.top()) e.u_v_complemented = false;
    }
    t.embeddings.push_back(std::move(e));
    t.stages.push_back(f);
  }
  return t;
}

BooleanizationCheck assembly_booleanization_check(const Dual& d, const Bounds& bounds) {
  BooleanizationCheck r;
  const EsakiaSpace& x = d.space();
  const Assembly asm_ = assembly_frame(d, bounds);
  const Embedded b = booleanization(asm_.frame);
  r.booleanization_size = b.lattice.size();

  std::set<std::uint64_t> rc;
  for_each_subset(x.carrier(), [&](Subset s) {
    if (is_regular_closed_pi(x, s)) rc.insert(s.bits());
  });
  r.regular_closed_count = rc.size();

  std::set<std::uint64_t> image;
  bool ok = true;
  for (std::size_t i = 0; i < b.source.size(); ++i) {
    const Subset si = asm_.sets[b.source[i]].points;
    if (!rc.count(si.bits())) ok = false;
    image.insert(si.bits());
    for (std::size_t k = 0; k < b.source.size(); ++k) {
      const Subset sk = asm_.sets[b.source[k]].points;
      if (b.lattice.leq(i, k) != sk.subset_of(si)) ok = false;
    }
  }
  r.dual_isomorphism = ok && image == rc;
  return r;
}

}  // namespace pftlab
