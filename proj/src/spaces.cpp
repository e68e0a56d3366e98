#include "pftlab/spaces.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "pftlab/error.hpp"

namespace pftlab {

namespace {

std::string set_name(const std::vector<std::string>& names, Subset s, const char* open = "{",
                     const char* close = "}") {
  std::string out = open;
  bool first = true;
  for (std::size_t i : s) {
    if (!first) out += ",";
    out += names[i];
    first = false;
  }
  return out + close;
}

Subset image(const std::vector<std::size_t>& f, Subset s) {
  Subset out;
  for (std::size_t i : s) out.insert(f[i]);
  return out;
}

Subset preimage(const std::vector<std::size_t>& f, Subset s) {
  Subset out;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (s.contains(f[i])) out.insert(i);
  }
  return out;
}

std::size_t filter_index(const std::vector<Filter>& filters, Subset members) {
  for (std::size_t i = 0; i < filters.size(); ++i) {
    if (filters[i].members == members) return i;
  }
  throw InvalidModel("ε(x) is not a point of the frame");
}

// ε(x) = {U ∈ O S : x ∈ U} as a subset of the open_frame carrier.
Subset neighbourhood_filter(const FiniteSpace& s, std::size_t x) {
  Subset f;
  for (std::size_t i = 0; i < s.opens().size(); ++i) {
    if (s.opens()[i].contains(x)) f.insert(i);
  }
  return f;
}

Subset sigma_unchecked(const FiniteSpace& s, const Nucleus& j) {
  Subset out;
  const auto& opens = s.opens();
  for (std::size_t u = 0; u < opens.size(); ++u) out |= opens[j(u)] - opens[u];
  return out;
}

// Closure of `family` under binary ∩ and ∪.
std::vector<Subset> lattice_closure(std::vector<Subset> family) {
  std::set<std::uint64_t> seen;
  for (Subset f : family) seen.insert(f.bits());
  for (bool grew = true; grew;) {
    grew = false;
    const std::vector<std::uint64_t> now(seen.begin(), seen.end());
    for (std::uint64_t a : now) {
      for (std::uint64_t b : now) {
        grew |= seen.insert(a & b).second;
        grew |= seen.insert(a | b).second;
      }
    }
  }
  std::vector<Subset> out;
  for (std::uint64_t b : seen) out.push_back(Subset::from_bits(b));
  return out;
}

}  // namespace

FiniteLattice open_frame(const FiniteSpace& s) {
  const auto& opens = s.opens();
  std::vector<std::string> names;
  Relation r;
  for (std::size_t i = 0; i < opens.size(); ++i) {
    names.push_back(set_name(s.names(), opens[i]));
    for (std::size_t k = 0; k < opens.size(); ++k) {
      if (i != k && opens[i].subset_of(opens[k])) r.emplace_back(i, k);
    }
  }
  return FiniteLattice::from_order(FinitePoset::from_relation(std::move(names), r));
}

bool is_t0(const FiniteSpace& s) {
  for (std::size_t x = 0; x < s.size(); ++x) {
    if (s.t0_class(x).size() != 1) return false;
  }
  return true;
}

FiniteSpace subspace(const FiniteSpace& s, Subset t) {
  if (!t.subset_of(s.carrier())) throw IndexOutOfRange("subspace mentions a point outside the space");
  const std::vector<std::size_t> members = t.members();
  std::vector<std::string> names;
  for (std::size_t x : members) names.push_back(s.name(x));
  std::vector<Subset> opens;
  for (Subset u : s.opens()) {
    Subset local;
    for (std::size_t i = 0; i < members.size(); ++i) {
      if (u.contains(members[i])) local.insert(i);
    }
    opens.push_back(local);
  }
  return FiniteSpace::from_opens(std::move(names), std::move(opens));
}

QuotientCheck check_quotient(const QuotientMap& q) {
  QuotientCheck c;
  c.surjective = image(q.map, q.source.carrier()) == q.target.carrier();
  c.continuous = c.open = c.closed = true;
  for (Subset v : q.target.opens()) {
    if (!q.source.is_open(preimage(q.map, v))) c.continuous = false;
  }
  for (Subset u : q.source.opens()) {
    if (!q.target.is_open(image(q.map, u))) c.open = false;
  }
  for (Subset f : q.source.closed_sets()) {
    if (!q.target.is_closed(image(q.map, f))) c.closed = false;
  }
  return c;
}

QuotientMap t0_reflection(const FiniteSpace& s) {
  QuotientMap q;
  q.source = s;
  q.map.assign(s.size(), 0);
  std::vector<std::string> names;
  Subset done;
  for (std::size_t x = 0; x < s.size(); ++x) {
    if (done.contains(x)) continue;
    const Subset cls = s.t0_class(x);
    names.push_back(cls.size() == 1 ? s.name(x) : set_name(s.names(), cls, "[", "]"));
    for (std::size_t y : cls) q.map[y] = names.size() - 1;
    done |= cls;
  }
  std::vector<Subset> opens;
  for (Subset u : s.opens()) opens.push_back(image(q.map, u));
  q.target = FiniteSpace::from_opens(std::move(names), std::move(opens));
  return q;
}

Soberification soberification(const FiniteSpace& s) {
  const FiniteLattice frame = open_frame(s);
  const std::vector<Filter> points = completely_prime_filters(frame);
  const EsakiaSpace x = dual_space(frame);
  Soberification out;
  out.space = points_space(frame);
  for (std::size_t p = 0; p < s.size(); ++p) {
    const Subset f = neighbourhood_filter(s, p);
    out.epsilon.push_back(filter_index(points, f));
    out.epsilon_dual.push_back(filter_index(x.filters, f));
  }
  out.continuous = true;
  std::set<std::uint64_t> pulled;
  for (Subset v : out.space.opens()) {
    const Subset u = preimage(out.epsilon, v);
    if (!s.is_open(u)) out.continuous = false;
    pulled.insert(u.bits());
  }
  std::set<std::uint64_t> all;
  for (Subset u : s.opens()) all.insert(u.bits());
  out.frame_isomorphism = out.continuous && pulled == all && out.space.opens().size() == s.opens().size();
  for (Subset v : out.space.opens()) {
    for (Subset w : out.space.opens()) {
      if (v.subset_of(w) != preimage(out.epsilon, v).subset_of(preimage(out.epsilon, w))) {
        out.frame_isomorphism = false;
      }
    }
  }
  out.homeomorphic_to_t0 = find_homeomorphism(out.space, t0_reflection(s).target).has_value();
  return out;
}

bool is_sober(const FiniteSpace& s) {
  const std::vector<Subset> closed = s.closed_sets();
  for (Subset f : closed) {
    if (f.empty()) continue;
    bool irreducible = true;
    for (Subset a : closed) {
      if (!irreducible) break;
      if (!a.subset_of(f) || a == f) continue;
      for (Subset b : closed) {
        if (b.subset_of(f) && b != f && (a | b) == f) {
          irreducible = false;
          break;
        }
      }
    }
    if (!irreducible) continue;
    std::size_t generic = 0;
    for (std::size_t x : f) {
      if (s.point_closure(x) == f) ++generic;
    }
    if (generic != 1) return false;
  }
  return true;
}

FiniteSpace front_topology(const FiniteSpace& s) {
  std::vector<Subset> gens{Subset{}, s.carrier()};
  for (Subset u : s.opens()) {
    for (Subset v : s.opens()) gens.push_back(u - v);
  }
  return FiniteSpace::from_opens(s.names(), lattice_closure(std::move(gens)));
}

PointKind classify_point(const FiniteSpace& s, Subset t, std::size_t x) {
  if (!t.subset_of(s.carrier()) || !t.contains(x)) throw IndexOutOfRange("classify_point needs x ∈ T ⊆ S");
  const FiniteSpace sub = subspace(s, t);
  const std::size_t local = (t & Subset::full(x)).size();
  const Subset closure = sub.point_closure(local);
  const Subset cls = sub.t0_class(local);
  PointKind k;
  for (Subset u : sub.opens()) {
    if (!u.contains(local)) continue;
    if (u == Subset::singleton(local)) k.isolated = true;
    if (u.subset_of(closure)) k.weakly_isolated = true;
    if (u.subset_of(cls)) k.detached = true;
  }
  return k;
}

namespace {

ScatterFlags scatter_over(const FiniteSpace& s, const std::vector<Subset>& family) {
  ScatterFlags f;
  f.t0 = is_t0(s);
  f.t_d = true;
  for (std::size_t x = 0; x < s.size(); ++x) {
    const Subset cl = s.point_closure(x);
    bool found = false;
    for (Subset u : s.opens()) {
      if ((u & cl) == Subset::singleton(x)) found = true;
    }
    if (!found) f.t_d = false;
  }
  f.scattered = f.weakly_scattered = f.dispersed = true;
  for (Subset t : family) {
    if (t.empty()) continue;
    bool iso = false;
    bool weak = false;
    bool det = false;
    for (std::size_t x : t) {
      const PointKind k = classify_point(s, t, x);
      iso |= k.isolated;
      weak |= k.weakly_isolated;
      det |= k.detached;
    }
    f.scattered &= iso;
    f.weakly_scattered &= weak;
    f.dispersed &= det;
  }
  return f;
}

}  // namespace

ScatterFlags scatter_flags(const FiniteSpace& s) { return scatter_over(s, s.closed_sets()); }

ScatterFlags scatter_flags_all_subspaces(const FiniteSpace& s) {
  std::vector<Subset> all;
  for_each_subset(s.carrier(), [&](Subset t) { all.push_back(t); });
  return scatter_over(s, all);
}

ScatterReport scatter_report(const FiniteSpace& s) {
  ScatterReport r;
  r.flags = scatter_flags(s);
  const ScatterFlags all = scatter_flags_all_subspaces(s);
  r.all_subspaces_agree = all.scattered == r.flags.scattered && all.weakly_scattered == r.flags.weakly_scattered &&
                          all.dispersed == r.flags.dispersed;
  r.scattered_iff_weak_and_td = r.flags.scattered == (r.flags.weakly_scattered && r.flags.t_d);
  const ScatterFlags s0 = scatter_flags(t0_reflection(s).target);
  r.dispersed_iff_t0_scattered = r.flags.dispersed == s0.scattered;
  r.weak_iff_t0_weak = r.flags.weakly_scattered == s0.weakly_scattered;
  r.scattered_implies_t0 = !r.flags.scattered || r.flags.t0;
  return r;
}

SpaceDual::SpaceDual(FiniteSpace s) : space_(std::move(s)), dual_(open_frame(space_)) {
  for (std::size_t x = 0; x < space_.size(); ++x) {
    epsilon_.push_back(filter_index(dual_.space().filters, neighbourhood_filter(space_, x)));
  }
}

Subset sigma(const FiniteSpace& s, const Nucleus& j) {
  const NucleusReport r = validate_nucleus(open_frame(s), j);
  if (!r.valid()) throw InvalidModel(r.message);
  return sigma_unchecked(s, j);
}

Subset delta(const SpaceDual& sd, NuclearSet n) {
  if (!n.points.subset_of(sd.dual().carrier())) throw IndexOutOfRange("subset mentions a point outside X_{O S}");
  return preimage(sd.epsilon(), n.points);
}

CompactificationReport compactification_check(const FiniteSpace& s) {
  const SpaceDual sd(s);
  const QuotientMap q = t0_reflection(s);
  const EsakiaSpace& x = sd.dual().space();
  CompactificationReport r;
  r.factors_through_rho = true;
  for (std::size_t a = 0; a < s.size(); ++a) {
    for (std::size_t b = 0; b < s.size(); ++b) {
      if (q.map[a] == q.map[b] && sd.epsilon(a) != sd.epsilon(b)) r.factors_through_rho = false;
    }
  }
  std::vector<std::size_t> eps0(q.target.size());
  for (std::size_t a = s.size(); a-- > 0;) eps0[q.map[a]] = sd.epsilon(a);
  const Subset im = image(eps0, q.target.carrier());
  r.injective = im.size() == q.target.size();

  const FiniteSpace front = front_topology(q.target);
  r.front_continuous = true;
  for_each_subset(x.carrier(), [&](Subset v) {
    if (is_clopen(x, v) && !front.is_open(preimage(eps0, v))) r.front_continuous = false;
  });
  r.embedding = r.injective;
  for (Subset w : front.opens()) {
    // relatively open in the image: the trace of some π-open set
    const Subset ew = image(eps0, w);
    if (!(is_clopen(x, ew) && (ew & im) == ew)) r.embedding = false;
  }
  r.dense = closure_pi(x, im) == x.carrier();
  r.surjective = im == x.carrier();
  return r;
}

bool SimmonsIsbellReport::agree() const {
  return sigma_injective == sober_weakly_scattered && sigma_injective == dispersed &&
         sigma_injective == frame_scattered && sigma_injective == assembly_boolean;
}

bool SimmonsIsbellReport::ok() const {
  return agree() && sigma_onto && sigma_homomorphism && sigma_delta_identity && delta_homomorphism && sober_iff_t0 &&
         soberification_is_t0_reflection && scatter.consistent();
}

SimmonsIsbellReport simmons_isbell_report(const FiniteSpace& s, const Bounds& bounds) {
  SimmonsIsbellReport r;
  const SpaceDual sd(s);
  const FiniteLattice& frame = sd.frame();
  const std::vector<Nucleus> nuclei = enumerate_nuclei_oracle(frame, bounds);
  const FiniteSpace front = front_topology(s);
  r.nuclei = nuclei.size();
  r.front_opens = front.opens().size();

  std::vector<Subset> sig;
  std::set<std::uint64_t> distinct;
  for (const Nucleus& j : nuclei) {
    sig.push_back(sigma_unchecked(s, j));
    distinct.insert(sig.back().bits());
  }
  r.sigma_injective = distinct.size() == nuclei.size();
  std::set<std::uint64_t> front_opens;
  for (Subset u : front.opens()) front_opens.insert(u.bits());
  r.sigma_onto = distinct == front_opens;

  r.sigma_homomorphism = sigma_unchecked(s, identity_nucleus(frame)).empty() &&
                         sigma_unchecked(s, top_nucleus(frame)) == s.carrier();
  for (std::size_t i = 0; i < nuclei.size(); ++i) {
    for (std::size_t k = 0; k < nuclei.size(); ++k) {
      const Nucleus pair[] = {nuclei[i], nuclei[k]};
      if (sigma_unchecked(s, nuclei_meet(frame, pair)) != (sig[i] & sig[k]) ||
          sigma_unchecked(s, join_by_iteration(frame, pair)) != (sig[i] | sig[k])) {
        r.sigma_homomorphism = false;
      }
    }
  }

  r.sigma_delta_identity = true;
  for (std::size_t i = 0; i < nuclei.size(); ++i) {
    if (sig[i] != s.carrier() - delta(sd, to_nuclear_set(sd.dual(), nuclei[i]))) r.sigma_delta_identity = false;
  }

  const Assembly a = assembly_frame(sd.dual(), bounds);
  r.delta_homomorphism = true;
  std::set<std::uint64_t> delta_image;
  for (const NuclearSet& n : a.sets) {
    const Subset dn = delta(sd, n);
    delta_image.insert(dn.bits());
    if (!front.is_closed(dn)) r.delta_homomorphism = false;
    for (const NuclearSet& m : a.sets) {
      const Subset fam[] = {n.points, m.points};
      const Subset meet = meet_in_nuclear_sets(sd.dual().space(), fam, false, bounds);
      if (delta(sd, {n.points | m.points}) != (dn | delta(sd, m)) || delta(sd, {meet}) != (dn & delta(sd, m))) {
        r.delta_homomorphism = false;
      }
    }
  }
  std::set<std::uint64_t> front_closed;
  for (Subset f : front.closed_sets()) front_closed.insert(f.bits());
  if (delta_image != front_closed) r.delta_homomorphism = false;

  const Soberification sob = soberification(s);
  r.sober_weakly_scattered = scatter_flags(sob.space).weakly_scattered;
  r.scatter = scatter_report(s);
  r.dispersed = r.scatter.flags.dispersed;
  r.frame_scattered = is_scattered_frame(frame);
  r.assembly_boolean = is_boolean(a.frame);
  r.sober_iff_t0 = is_sober(s) == is_t0(s);
  r.soberification_is_t0_reflection = sob.homeomorphic_to_t0;
  return r;
}

std::vector<Subset> regular_closed(const FiniteSpace& s) {
  std::vector<Subset> out;
  for (Subset f : s.closed_sets()) {
    if (s.closure(s.interior(f)) == f) out.push_back(f);
  }
  return out;
}

std::vector<FiniteSpace> enumerate_topologies(std::size_t n, const Bounds& bounds) {
  if (n > bounds.max_topology_points) {
    throw BoundExceeded("topology enumeration needs n ≤ " + std::to_string(bounds.max_topology_points));
  }
  if (n == 0) return {FiniteSpace()};
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back(std::to_string(i));
  const Subset full = Subset::full(n);
  std::vector<Subset> middle;
  for_each_subset(full, [&](Subset u) {
    if (!u.empty() && u != full) middle.push_back(u);
  });

  std::vector<FiniteSpace> out;
  const std::uint64_t families = std::uint64_t{1} << middle.size();
  for (std::uint64_t mask = 0; mask < families; ++mask) {
    std::vector<Subset> opens{Subset{}, full};
    for (std::size_t i = 0; i < middle.size(); ++i) {
      if ((mask >> i) & 1U) opens.push_back(middle[i]);
    }
    std::set<std::uint64_t> has;
    for (Subset u : opens) has.insert(u.bits());
    bool closed = true;
    for (std::size_t i = 0; i < opens.size() && closed; ++i) {
      for (std::size_t k = i + 1; k < opens.size() && closed; ++k) {
        closed = has.count((opens[i] | opens[k]).bits()) && has.count((opens[i] & opens[k]).bits());
      }
    }
    if (closed) out.push_back(FiniteSpace::from_opens(names, std::move(opens)));
  }
  return out;
}

std::optional<std::vector<std::size_t>> find_homeomorphism(const FiniteSpace& a, const FiniteSpace& b) {
  const std::size_t n = a.size();
  if (n != b.size() || a.opens().size() != b.opens().size()) return std::nullopt;
  std::vector<std::size_t> f(n);
  Subset used;
  std::function<bool(std::size_t)> extend = [&](std::size_t i) {
    if (i == n) {
      for (Subset u : a.opens()) {
        if (!b.is_open(image(f, u))) return false;
      }
      return true;
    }
    for (std::size_t c = 0; c < n; ++c) {
      if (used.contains(c)) continue;
      if (a.point_closure(i).size() != b.point_closure(c).size() ||
          a.neighbourhood(i).size() != b.neighbourhood(c).size()) {
        continue;
      }
      bool fits = true;
      for (std::size_t k = 0; k < i && fits; ++k) {
        fits = a.specialization_leq(i, k) == b.specialization_leq(c, f[k]) &&
               a.specialization_leq(k, i) == b.specialization_leq(f[k], c);
      }
      if (!fits) continue;
      f[i] = c;
      used.insert(c);
      if (extend(i + 1)) return true;
      used.erase(c);
    }
    return false;
  };
  if (!extend(0)) return std::nullopt;
  return f;
}

}  // namespace pftlab
