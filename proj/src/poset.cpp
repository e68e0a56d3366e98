#include "pftlab/poset.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "pftlab/error.hpp"

namespace pftlab {

FinitePoset FinitePoset::from_relation(std::vector<std::string> names, const Relation& pairs) {
  const std::size_t n = names.size();
  if (n > Subset::capacity) {
    throw BoundExceeded("poset has " + std::to_string(n) + " points; at most 64 are supported");
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (names[i] == names[j]) throw InvalidModel("duplicate point name '" + names[i] + "'");
    }
  }
  FinitePoset p;
  p.names_ = std::move(names);
  p.up_.resize(n);
  for (std::size_t i = 0; i < n; ++i) p.up_[i] = Subset::singleton(i);
  for (auto [a, b] : pairs) {
    if (a >= n || b >= n) throw IndexOutOfRange("relation pair mentions a point outside the carrier");
    p.up_[a].insert(b);
  }
  // Warshall on bit rows.
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (p.up_[i].contains(k)) p.up_[i] |= p.up_[k];
    }
  }
  p.down_.assign(n, Subset{});
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j : p.up_[i]) p.down_[j].insert(i);
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j : p.up_[i]) {
      if (j != i && p.up_[j].contains(i)) {
        throw InvalidModel("relation is not antisymmetric: '" + p.names_[i] + "' and '" + p.names_[j] +
                           "' lie on a cycle");
      }
    }
  }
  return p;
}

FinitePoset FinitePoset::from_relation(std::size_t n, const Relation& pairs) {
  std::vector<std::string> names(n);
  for (std::size_t i = 0; i < n; ++i) names[i] = std::to_string(i);
  return from_relation(std::move(names), pairs);
}

FinitePoset FinitePoset::antichain(std::size_t n) { return from_relation(n, {}); }

FinitePoset FinitePoset::chain(std::size_t n) {
  Relation r;
  for (std::size_t i = 0; i + 1 < n; ++i) r.emplace_back(i, i + 1);
  return from_relation(n, r);
}

std::optional<std::size_t> FinitePoset::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return i;
  }
  return std::nullopt;
}

Relation FinitePoset::covers() const {
  Relation out;
  for (std::size_t a = 0; a < size(); ++a) {
    for (std::size_t b : up_[a]) {
      if (b == a) continue;
      // a < b is a cover iff ↑a ∩ ↓b = {a, b}
      if ((up_[a] & down_[b]).size() == 2) out.emplace_back(a, b);
    }
  }
  return out;
}

std::size_t FinitePoset::height(std::size_t i) const {
  std::size_t best = 0;
  for (std::size_t j : down_.at(i)) {
    if (j != i) best = std::max(best, height(j) + 1);
  }
  return best;
}

FinitePoset FinitePoset::permuted(std::span<const std::size_t> perm) const {
  std::vector<std::size_t> inverse(size());
  for (std::size_t i = 0; i < perm.size(); ++i) inverse[perm[i]] = i;
  std::vector<std::string> names(size());
  Relation r;
  for (std::size_t i = 0; i < size(); ++i) {
    names[i] = names_[perm[i]];
    for (std::size_t j : up_[perm[i]]) r.emplace_back(i, inverse[j]);
  }
  return from_relation(std::move(names), r);
}

void check_membership(const FinitePoset& p, Subset a) {
  if (!a.subset_of(p.carrier())) throw IndexOutOfRange("subset mentions a point outside the poset carrier");
}

Subset closure(const FinitePoset& p, Subset a, Direction dir) {
  check_membership(p, a);
  Subset out;
  for (std::size_t i : a) out |= dir == Direction::up ? p.up(i) : p.down(i);
  return out;
}

bool is_upset(const FinitePoset& p, Subset a) { return closure(p, a, Direction::up) == a; }
bool is_downset(const FinitePoset& p, Subset a) { return closure(p, a, Direction::down) == a; }

Subset maximal_points(const FinitePoset& p, Subset a) {
  check_membership(p, a);
  Subset out;
  for (std::size_t i : a) {
    if ((p.up(i) & a) == Subset::singleton(i)) out.insert(i);
  }
  return out;
}

Subset minimal_points(const FinitePoset& p, Subset a) {
  check_membership(p, a);
  Subset out;
  for (std::size_t i : a) {
    if ((p.down(i) & a) == Subset::singleton(i)) out.insert(i);
  }
  return out;
}

namespace {

// Decide each point in index order: including it forces its upset in,
// excluding it forces its downset out. An undecided point can always go
// either way, so every leaf is a distinct upset.
void collect_upsets(const FinitePoset& p, std::size_t i, Subset in, Subset out, std::size_t limit,
                    std::vector<Subset>& acc) {
  while (i < p.size() && (in.contains(i) || out.contains(i))) ++i;
  if (i == p.size()) {
    if (acc.size() == limit) {
      throw BoundExceeded("poset has more than " + std::to_string(limit) + " upsets");
    }
    acc.push_back(in);
    return;
  }
  collect_upsets(p, i + 1, in, out | p.down(i), limit, acc);
  collect_upsets(p, i + 1, in | p.up(i), out, limit, acc);
}

struct Invariant {
  std::size_t below;
  std::size_t above;
  std::size_t height;
  auto operator<=>(const Invariant&) const = default;
};

std::vector<Invariant> invariants(const FinitePoset& p) {
  std::vector<Invariant> out;
  out.reserve(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) out.push_back({p.down(i).size(), p.up(i).size(), p.height(i)});
  return out;
}

bool extend_isomorphism(const FinitePoset& p, const FinitePoset& q, const std::vector<Invariant>& ip,
                        const std::vector<Invariant>& iq, std::vector<std::size_t>& map, Subset used) {
  const std::size_t i = [&] {
    std::size_t k = 0;
    while (k < map.size() && map[k] != p.size()) ++k;
    return k;
  }();
  if (i == map.size()) return true;
  for (std::size_t j = 0; j < q.size(); ++j) {
    if (used.contains(j) || ip[i] != iq[j]) continue;
    bool ok = true;
    for (std::size_t k = 0; k < i && ok; ++k) {
      ok = p.leq(k, i) == q.leq(map[k], j) && p.leq(i, k) == q.leq(j, map[k]);
    }
    if (!ok) continue;
    map[i] = j;
    if (extend_isomorphism(p, q, ip, iq, map, used | Subset::singleton(j))) return true;
    map[i] = p.size();
  }
  return false;
}

std::uint64_t relation_code(const FinitePoset& p, std::span<const std::size_t> perm) {
  std::uint64_t code = 0;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    for (std::size_t j = 0; j < perm.size(); ++j) {
      if (i == j) continue;
      code = (code << 1) | (p.leq(perm[i], perm[j]) ? 1U : 0U);
    }
  }
  return code;
}

// Naturally labelled posets: point k sits strictly above exactly the downset
// D_k of the first k points; down[k] stores D_k.
void grow_natural(std::size_t n, std::vector<Subset>& down, std::map<std::pair<std::size_t, std::uint64_t>, FinitePoset>& classes) {
  const std::size_t k = down.size();
  if (k == n) {
    Relation r;
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t a : down[b]) r.emplace_back(a, b);
    }
    FinitePoset p = FinitePoset::from_relation(n, r);
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::uint64_t best = ~std::uint64_t{0};
    std::vector<std::size_t> best_perm = perm;
    do {
      const std::uint64_t c = relation_code(p, perm);
      if (c < best) {
        best = c;
        best_perm = perm;
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    std::size_t relations = 0;
    for (std::size_t i = 0; i < n; ++i) relations += p.up(i).size();
    const auto key = std::make_pair(relations, best);
    if (!classes.contains(key)) {
      // rename so that point i of the representative is called "i"
      FinitePoset rep = p.permuted(best_perm);
      Relation rr;
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b : rep.up(a)) rr.emplace_back(a, b);
      }
      classes.emplace(key, FinitePoset::from_relation(n, rr));
    }
    return;
  }
  for_each_subset(Subset::full(k), [&](Subset d) {
    for (std::size_t x : d) {
      if (!down[x].subset_of(d)) return;
    }
    down.push_back(d);
    grow_natural(n, down, classes);
    down.pop_back();
  });
}

}  // namespace

std::vector<Subset> upsets(const FinitePoset& p, std::size_t limit) {
  std::vector<Subset> acc;
  collect_upsets(p, 0, Subset{}, Subset{}, limit, acc);
  std::sort(acc.begin(), acc.end(), canonical_less);
  return acc;
}

std::optional<std::vector<std::size_t>> find_isomorphism(const FinitePoset& p, const FinitePoset& q) {
  if (p.size() != q.size()) return std::nullopt;
  auto ip = invariants(p);
  auto iq = invariants(q);
  {
    auto sp = ip;
    auto sq = iq;
    std::sort(sp.begin(), sp.end());
    std::sort(sq.begin(), sq.end());
    if (sp != sq) return std::nullopt;
  }
  std::vector<std::size_t> map(p.size(), p.size());
  if (!extend_isomorphism(p, q, ip, iq, map, Subset{})) return std::nullopt;
  return map;
}

bool is_order_isomorphism(const FinitePoset& p, const FinitePoset& q, std::span<const std::size_t> map) {
  if (p.size() != q.size() || map.size() != p.size()) return false;
  Subset image;
  for (std::size_t m : map) {
    if (m >= q.size()) return false;
    image.insert(m);
  }
  if (image != q.carrier()) return false;
  for (std::size_t a = 0; a < p.size(); ++a) {
    for (std::size_t b = 0; b < p.size(); ++b) {
      if (p.leq(a, b) != q.leq(map[a], map[b])) return false;
    }
  }
  return true;
}

std::vector<FinitePoset> enumerate_posets(std::size_t n, const Bounds& bounds) {
  if (n > bounds.max_poset_size) {
    throw BoundExceeded("enumerate_posets: n = " + std::to_string(n) + " exceeds the bound " +
                        std::to_string(bounds.max_poset_size));
  }
  std::map<std::pair<std::size_t, std::uint64_t>, FinitePoset> classes;
  std::vector<Subset> down;
  grow_natural(n, down, classes);
  std::vector<FinitePoset> out;
  out.reserve(classes.size());
  for (auto& [key, p] : classes) out.push_back(std::move(p));
  return out;
}

}  // namespace pftlab
