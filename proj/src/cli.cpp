#include "pftlab/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

#include "pftlab/assembly.hpp"
#include "pftlab/duality.hpp"
#include "pftlab/error.hpp"
#include "pftlab/spaces.hpp"
#include "pftlab/spatiality.hpp"

namespace pftlab::cli {

namespace {

using io::Json;

Json topology_json(const TopologyCheck& c) { return Json{{"holds", c.holds}, {"literal", c.literal}}; }

Json point_names(const Dual& d, Subset s) { return io::names_of(d.space().order.names(), s); }

Json element_names(const FiniteLattice& l, Subset s) { return io::names_of(l.names(), s); }

// ---- lattice reports ------------------------------------------------------

Json unit_counit_json(const UnitCounitReport& r) {
  Json out;
  out["phi_bijective"] = r.phi_bijective;
  out["phi_preserves_bounds"] = r.phi_preserves_bounds;
  out["phi_preserves_meet"] = r.phi_preserves_meet;
  out["phi_preserves_join"] = r.phi_preserves_join;
  out["phi_preserves_implication"] = r.phi_preserves_implication;
  out["upset_implication_agrees"] = r.upset_implication_agrees;
  out["xi_isomorphism"] = r.xi_isomorphism;
  out["base_isomorphism"] = r.base_isomorphism;
  out["priestley"] = topology_json(r.priestley);
  out["esakia"] = topology_json(r.esakia);
  out["extremally_order_disconnected"] = topology_json(r.extremal);
  if (!r.witness.empty()) out["witness"] = r.witness;
  out["ok"] = r.ok();
  return out;
}

Json dual_report(const FiniteLattice& l, const Bounds& bounds) {
  const Dual d(l);
  Json out;
  out["lattice"] = io::to_json(l);
  out["space"] = io::to_json(d.space());
  Json phi = Json::object();
  for (std::size_t a = 0; a < l.size(); ++a) phi[l.name(a)] = point_names(d, d.phi(a));
  out["phi"] = phi;
  out["checks"] = unit_counit_json(unit_counit_check(l, bounds));
  return out;
}

Json embedding_json(const EmbeddingCheck& e) {
  return Json{{"injective", e.injective},
              {"preserves_bounds", e.preserves_bounds},
              {"preserves_meets", e.preserves_meets},
              {"preserves_joins", e.preserves_joins},
              {"u_v_complemented", e.u_v_complemented},
              {"ok", e.ok()}};
}

Json assembly_report(const FiniteLattice& l, std::size_t tower_depth, const Bounds& bounds) {
  const Dual d(l);
  const Assembly a = assembly_frame(d, bounds);
  Json out;
  out["size"] = a.frame.size();
  out["literal"] = a.literal;
  Json elements = Json::array();
  for (std::size_t i = 0; i < a.frame.size(); ++i) {
    Json e;
    e["name"] = a.frame.name(i);
    e["nuclear_set"] = point_names(d, a.sets[i].points);
    e["nucleus"] = io::to_json(l, a.nuclei[i])["values"];
    elements.push_back(e);
  }
  out["elements"] = elements;
  out["order"] = io::to_json(a.frame);
  out["bottom"] = a.frame.name(a.frame.bottom());
  out["top"] = a.frame.name(a.frame.top());
  out["boolean"] = is_boolean(a.frame);
  if (tower_depth > 0) {
    const Tower t = tower(l, tower_depth, bounds);
    Json stages = Json::array();
    for (std::size_t k = 0; k < t.stages.size(); ++k) {
      Json s{{"stage", k}, {"size", t.stages[k].size()}};
      if (k > 0) s["embedding"] = embedding_json(t.embeddings[k - 1]);
      stages.push_back(s);
    }
    out["tower"] = stages;
  }
  return out;
}

Json known_as(const FiniteLattice& l, const Nucleus& j) {
  Json out = Json::array();
  if (j == identity_nucleus(l)) out.push_back("identity");
  if (j == top_nucleus(l)) out.push_back("top");
  for (std::size_t a = 0; a < l.size(); ++a) {
    if (j == make_u(l, a)) out.push_back("u_" + l.name(a));
  }
  for (std::size_t a = 0; a < l.size(); ++a) {
    if (j == make_v(l, a)) out.push_back("v_" + l.name(a));
  }
  for (std::size_t a = 0; a < l.size(); ++a) {
    if (j == make_w(l, a)) out.push_back("w_" + l.name(a));
  }
  return out;
}

Json nuclei_report(const FiniteLattice& l, bool count_only, const Bounds& bounds) {
  const std::vector<Nucleus> all = enumerate_nuclei_oracle(l, bounds);
  Json out;
  out["count"] = all.size();
  if (count_only) return out;
  const Dual d(l);
  Json list = Json::array();
  for (const Nucleus& j : all) {
    Json e;
    e["values"] = io::to_json(l, j)["values"];
    e["fixpoints"] = element_names(l, fixpoints(l, j));
    e["nuclear_set"] = point_names(d, to_nuclear_set(d, j).points);
    e["known_as"] = known_as(l, j);
    list.push_back(e);
  }
  out["nuclei"] = list;
  return out;
}

Json spatial_json(const AssemblySpatialReport& r) {
  return Json{{"y_dense", r.y_dense},
              {"lattice_spatial", r.lattice_spatial},
              {"nonempty_meets_y", r.nonempty_meets_y},
              {"gamma_injective", r.gamma_injective},
              {"closed_set_coframe", r.closed_set_coframe},
              {"agree", r.agree()}};
}

Json gamma_json(const GammaReport& r) {
  return Json{{"preserves_unions", r.preserves_unions},
              {"preserves_meets", r.preserves_meets},
              {"preserves_bounds", r.preserves_bounds},
              {"injective", r.injective},
              {"onto_closed", r.onto_closed},
              {"tau_closed_in_image", r.tau_closed_in_image},
              {"ok", r.ok()}};
}

Json essential_json(const Dual& d, const PointSet& y) {
  const FiniteLattice& l = d.lattice();
  Json out = Json::object();
  for (std::size_t a = 0; a < l.size(); ++a) {
    const Subset min = min_primes(l, a);
    const EssentialPrimes e = essential_primes(l, a);
    const DualPrimes dp = essential_primes_dual(d, y, a);
    out[l.name(a)] = Json{{"min_primes", element_names(l, min)},
                          {"meet_of_min_is_a", e.meet_of_min_is_a},
                          {"essential", element_names(l, e.primes)},
                          {"dual_agrees", dp.min_primes == min && dp.essential == e.primes}};
  }
  return out;
}

Json points_report(const FiniteLattice& l, const Bounds& bounds) {
  const Dual d(l);
  const PointSet y = nuclear_points(d, bounds);
  Json out;
  out["nuclear_points"] = point_names(d, y.points);
  out["characterizations_agree"] = y.characterizations_agree;
  Json tau = Json::array();
  for (Subset u : y.tau_opens) tau.push_back(point_names(d, u));
  out["tau_opens"] = tau;
  out["specialization_matches"] = y.specialization_matches;
  out["gamma"] = gamma_json(gamma_check(d, bounds));
  out["spatial"] = spatial_json(assembly_spatial_report(d, bounds));
  const JoinPrimes jp = join_primes_of_assembly(d, bounds);
  Json primes = Json::array();
  for (const NuclearSet& n : jp.primes) primes.push_back(point_names(d, n.points));
  out["join_primes"] = primes;
  out["join_primes_are_point_singletons"] = jp.singletons_of_y;
  out["pt_lattice"] = jp.points_of_lattice;
  out["pt_assembly"] = jp.points_of_assembly;
  out["essential_primes"] = essential_json(d, y);
  out["every_element_has_essential_prime"] = every_element_has_essential_prime(l);
  return out;
}

// ---- space reports --------------------------------------------------------

Json map_json(const FiniteSpace& from, const FiniteSpace& to, const std::vector<std::size_t>& f) {
  Json out = Json::object();
  for (std::size_t x = 0; x < from.size(); ++x) out[from.name(x)] = to.name(f[x]);
  return out;
}

Json flags_json(const ScatterFlags& f) {
  return Json{{"t0", f.t0},
              {"t_d", f.t_d},
              {"scattered", f.scattered},
              {"weakly_scattered", f.weakly_scattered},
              {"dispersed", f.dispersed}};
}

Json scatter_json(const ScatterReport& r) {
  Json out = flags_json(r.flags);
  out["all_subspaces_agree"] = r.all_subspaces_agree;
  out["scattered_iff_weak_and_td"] = r.scattered_iff_weak_and_td;
  out["dispersed_iff_t0_scattered"] = r.dispersed_iff_t0_scattered;
  out["weak_iff_t0_weak"] = r.weak_iff_t0_weak;
  out["scattered_implies_t0"] = r.scattered_implies_t0;
  out["consistent"] = r.consistent();
  return out;
}

Json simmons_json(const SimmonsIsbellReport& r) {
  return Json{{"nuclei", r.nuclei},
              {"front_opens", r.front_opens},
              {"sigma_injective", r.sigma_injective},
              {"sigma_onto", r.sigma_onto},
              {"sigma_homomorphism", r.sigma_homomorphism},
              {"sigma_delta_identity", r.sigma_delta_identity},
              {"delta_homomorphism", r.delta_homomorphism},
              {"sober_weakly_scattered", r.sober_weakly_scattered},
              {"dispersed", r.dispersed},
              {"frame_scattered", r.frame_scattered},
              {"assembly_boolean", r.assembly_boolean},
              {"sober_iff_t0", r.sober_iff_t0},
              {"soberification_is_t0_reflection", r.soberification_is_t0_reflection},
              {"agree", r.agree()},
              {"ok", r.ok()}};
}

Json compactification_json(const CompactificationReport& r) {
  return Json{{"factors_through_rho", r.factors_through_rho},
              {"injective", r.injective},
              {"front_continuous", r.front_continuous},
              {"embedding", r.embedding},
              {"dense", r.dense},
              {"surjective", r.surjective},
              {"ok", r.ok()}};
}

Json space_report(const FiniteSpace& s) {
  Json out;
  out["space"] = io::to_json(s);
  Json spec = Json::array();
  for (std::size_t x = 0; x < s.size(); ++x) {
    for (std::size_t y = 0; y < s.size(); ++y) {
      if (x != y && s.specialization_leq(x, y)) spec.push_back({s.name(x), s.name(y)});
    }
  }
  out["specialization"] = spec;
  out["open_frame"] = io::to_json(open_frame(s));
  const QuotientMap q = t0_reflection(s);
  const QuotientCheck qc = check_quotient(q);
  out["t0_reflection"] = Json{{"space", io::to_json(q.target)},
                              {"map", map_json(s, q.target, q.map)},
                              {"continuous", qc.continuous},
                              {"open", qc.open},
                              {"closed", qc.closed},
                              {"surjective", qc.surjective}};
  const Soberification sob = soberification(s);
  out["soberification"] = Json{{"space", io::to_json(sob.space)},
                               {"epsilon", map_json(s, sob.space, sob.epsilon)},
                               {"continuous", sob.continuous},
                               {"frame_isomorphism", sob.frame_isomorphism},
                               {"homeomorphic_to_t0", sob.homeomorphic_to_t0}};
  out["sober"] = is_sober(s);
  out["front_topology"] = io::to_json(front_topology(s));
  out["scatter"] = scatter_json(scatter_report(s));
  Json rc = Json::array();
  for (Subset f : regular_closed(s)) rc.push_back(io::names_of(s.names(), f));
  out["regular_closed"] = rc;
  return out;
}

// ---- sweeps ---------------------------------------------------------------

bool duality_suite(const FinitePoset& p, const Bounds& b) {
  const FiniteLattice l = FiniteLattice::from_poset(p);
  return unit_counit_check(l, b).ok() && find_isomorphism(dual_space(l).order, p).has_value();
}

bool nuclei_suite(const FinitePoset& p, const Bounds& b) {
  const Dual d(FiniteLattice::from_poset(p));
  const NuclearDualityReport r = nuclear_duality_check(d, b);
  if (!r.ok() || r.oracle_count != (std::size_t{1} << p.size())) return false;
  for (const Nucleus& j : enumerate_nuclei_oracle(d.lattice(), b)) {
    if (!w_decomposition_check(d.lattice(), j)) return false;
  }
  return true;
}

bool boolean_suite(const FinitePoset& p, const Bounds& b) {
  const Dual d(FiniteLattice::from_poset(p));
  const BooleanReport r = is_assembly_boolean(d, b);
  return r.agree() && r.assembly_boolean && assembly_booleanization_check(d, b).ok();
}

bool spatial_suite(const FinitePoset& p, const Bounds& b) {
  const Dual d(FiniteLattice::from_poset(p));
  const PointSet y = nuclear_points(d, b);
  if (y.points != d.carrier() || !y.characterizations_agree || !y.specialization_matches) return false;
  const AssemblySpatialReport s = assembly_spatial_report(d, b);
  const GammaReport g = gamma_check(d, b);
  const JoinPrimes jp = join_primes_of_assembly(d, b);
  return s.agree() && s.all_true() && g.ok() && g.injective && jp.singletons_of_y &&
         jp.points_of_lattice == jp.points_of_assembly && max_commutes_with_trace(d, y);
}

bool essential_suite(const FinitePoset& p, const Bounds& b) {
  const Dual d(FiniteLattice::from_poset(p));
  const FiniteLattice& l = d.lattice();
  const PointSet y = nuclear_points(d, b);
  for (std::size_t a = 0; a < l.size(); ++a) {
    const DualPrimes dp = essential_primes_dual(d, y, a);
    const EssentialPrimes e = essential_primes(l, a);
    if (dp.min_primes != min_primes(l, a) || dp.essential != e.primes || !e.meet_of_min_is_a) return false;
  }
  return every_element_has_essential_prime(l) == assembly_spatial_report(d, b).all_true();
}

bool tower_suite(const FinitePoset& p, const Bounds& b) {
  const Tower t = tower(FiniteLattice::from_poset(p), 2, b);
  for (const EmbeddingCheck& e : t.embeddings) {
    if (!e.ok()) return false;
  }
  return t.stages[1].size() == (std::size_t{1} << p.size());
}

bool simmons_suite(const FiniteSpace& s, const Bounds& b) {
  const SimmonsIsbellReport r = simmons_isbell_report(s, b);
  return r.ok() && r.sigma_injective && r.sigma_onto;
}

bool scatter_suite(const FiniteSpace& s, const Bounds&) { return scatter_report(s).consistent(); }

bool sober_suite(const FiniteSpace& s, const Bounds&) {
  const Soberification sob = soberification(s);
  const QuotientMap q = t0_reflection(s);
  const ScatterFlags f = scatter_flags(s);
  const bool weak_t0_sober = !(f.weakly_scattered && f.t0) || is_sober(s);
  const FiniteSpace front0 = front_topology(q.target);
  return (is_sober(s) == is_t0(s)) && sob.continuous && sob.frame_isomorphism && sob.homeomorphic_to_t0 &&
         check_quotient(q).ok() && is_t0(q.target) && weak_t0_sober &&
         front0.opens().size() == (std::size_t{1} << front0.size());
}

bool compactification_suite(const FiniteSpace& s, const Bounds&) { return compactification_check(s).ok(); }

template <typename Model>
using Suite = std::function<bool(const Model&, const Bounds&)>;

template <typename Model>
Suite<Model> combine(std::vector<Suite<Model>> parts) {
  return [parts = std::move(parts)](const Model& m, const Bounds& b) {
    for (const auto& part : parts) {
      if (!part(m, b)) return false;
    }
    return true;
  };
}

Suite<FinitePoset> poset_suite(const std::string& name, std::size_t n, const Bounds& b) {
  static const std::map<std::string, Suite<FinitePoset>> table{
      {"duality", duality_suite}, {"nuclei", nuclei_suite},       {"boolean", boolean_suite},
      {"spatial", spatial_suite}, {"essential", essential_suite}, {"tower", tower_suite}};
  if (name == "all") {
    std::vector<Suite<FinitePoset>> parts{duality_suite, boolean_suite, spatial_suite, essential_suite};
    if (n < 64 && (std::size_t{1} << n) <= b.oracle_elements) parts.push_back(nuclei_suite);
    if (n <= b.tower_points) parts.push_back(tower_suite);
    return combine(std::move(parts));
  }
  return table.at(name);
}

Suite<FiniteSpace> topology_suite(const std::string& name) {
  static const std::map<std::string, Suite<FiniteSpace>> table{{"simmons", simmons_suite},
                                                               {"scatter", scatter_suite},
                                                               {"sober", sober_suite},
                                                               {"compactification", compactification_suite}};
  if (name == "all") return combine<FiniteSpace>({simmons_suite, scatter_suite, sober_suite, compactification_suite});
  return table.at(name);
}

template <typename Model>
Json run_sweep(const std::vector<Model>& models, const Suite<Model>& suite, std::size_t jobs, const Bounds& b) {
  std::vector<char> pass(models.size(), 0);
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < models.size(); i = next++) {
      try {
        pass[i] = suite(models[i], b) ? 1 : 0;
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  const std::size_t threads = std::max<std::size_t>(1, std::min(jobs, models.size()));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);

  Json out;
  std::size_t passed = 0;
  Json counterexample = nullptr;
  for (std::size_t i = 0; i < models.size(); ++i) {
    if (pass[i]) {
      ++passed;
    } else if (counterexample.is_null()) {
      counterexample = io::to_json(models[i]);
    }
  }
  out["instances"] = models.size();
  out["passed"] = passed;
  out["failed"] = models.size() - passed;
  out["first_counterexample"] = counterexample;
  return out;
}

// ---- command line ---------------------------------------------------------

int status_of(ErrorCode code) {
  switch (code) {
    case ErrorCode::malformed_input: return exit_malformed_input;
    case ErrorCode::invalid_model: return exit_invalid_model;
    case ErrorCode::bound_exceeded: return exit_bound_exceeded;
    case ErrorCode::out_of_range: return exit_out_of_range;
  }
  return exit_invalid_model;
}

struct UsageError {
  std::string message;
};

std::string error_json(const std::string& code, const std::string& message) {
  return Json{{"error", Json{{"code", code}, {"message", message}}}}.dump() + "\n";
}

}  // namespace

const std::vector<std::string>& poset_suites() {
  static const std::vector<std::string> names{"duality", "nuclei", "boolean", "spatial",
                                              "essential", "tower", "all"};
  return names;
}

const std::vector<std::string>& topology_suites() {
  static const std::vector<std::string> names{"simmons", "scatter", "sober", "compactification", "all"};
  return names;
}

Json sweep(const std::string& kind, std::size_t n, const std::string& suite, std::size_t jobs, const Bounds& bounds) {
  Json out;
  out["kind"] = kind;
  out["n"] = n;
  out["suite"] = suite;
  Json counts;
  if (kind == "posets") {
    if (std::find(poset_suites().begin(), poset_suites().end(), suite) == poset_suites().end()) {
      throw MalformedInput("unknown poset suite \"" + suite + "\"");
    }
    counts = run_sweep(enumerate_posets(n, bounds), poset_suite(suite, n, bounds), jobs, bounds);
  } else if (kind == "topologies") {
    if (std::find(topology_suites().begin(), topology_suites().end(), suite) == topology_suites().end()) {
      throw MalformedInput("unknown topology suite \"" + suite + "\"");
    }
    counts = run_sweep(enumerate_topologies(n, bounds), topology_suite(suite), jobs, bounds);
  } else {
    throw MalformedInput("unknown sweep kind \"" + kind + "\"");
  }
  for (auto& [key, value] : counts.items()) out[key] = value;
  return out;
}

Outcome run(const std::vector<std::string>& args, const Bounds& bounds) {
  CLI::App app{"Finite frames, nuclei and their duals", "pftlab"};
  app.require_subcommand(1);
  app.fallthrough(false);

  std::string lattice_src;
  std::string space_src;
  std::string poset_src;
  std::string nucleus_src;

  auto* dual = app.add_subcommand("dual", "Dual Esakia space of a lattice, φ and the unit/counit checks");
  dual->add_option("--lattice", lattice_src, "lattice JSON (path or inline)")->required();

  std::size_t tower_depth = 0;
  auto* assembly = app.add_subcommand("assembly", "N(L) through the nuclear subsets of X_L");
  assembly->add_option("--lattice", lattice_src, "lattice JSON (path or inline)")->required();
  assembly->add_option("--tower", tower_depth, "also build N^k(L) for k up to this depth");

  bool count_only = false;
  auto* nuclei = app.add_subcommand("nuclei", "Every nucleus on a lattice, by brute force");
  nuclei->add_option("--lattice", lattice_src, "lattice JSON (path or inline)")->required();
  nuclei->add_flag("--count", count_only, "print only the number of nuclei");

  auto* points = app.add_subcommand("points", "Nuclear points, τ, γ and essential primes");
  points->add_option("--lattice", lattice_src, "lattice JSON (path or inline)")->required();

  auto* space = app.add_subcommand("space", "O(S), T0-reflection, soberification and scatteredness");
  space->add_option("--space", space_src, "space JSON (path or inline)")->required();

  std::map<std::string, bool> wanted;
  const std::vector<std::string> lattice_checks{"duality", "nuclei", "boolean", "booleanization", "spatial",
                                                "essential"};
  const std::vector<std::string> space_checks{"simmons", "compactification", "scatter"};
  auto* check = app.add_subcommand("check", "Run property checks; exit status 1 when one fails");
  auto* check_lattice = check->add_option("--lattice", lattice_src, "lattice JSON (path or inline)");
  auto* check_space = check->add_option("--space", space_src, "space JSON (path or inline)");
  check_lattice->excludes(check_space);
  check->add_option("--nucleus", nucleus_src, "validate this nucleus on --lattice")->needs(check_lattice);
  for (const auto& name : lattice_checks) check->add_flag("--" + name, wanted[name])->needs(check_lattice);
  for (const auto& name : space_checks) check->add_flag("--" + name, wanted[name])->needs(check_space);

  std::string kind;
  std::string suite = "all";
  std::size_t sweep_n = 0;
  std::size_t jobs = 1;
  auto* sweep_cmd = app.add_subcommand("sweep", "Run an invariant suite over all small instances");
  sweep_cmd->add_option("--kind", kind, "posets or topologies")
      ->required()
      ->check(CLI::IsMember({"posets", "topologies"}));
  sweep_cmd->add_option("--n", sweep_n, "instance size")->required();
  sweep_cmd->add_option("--suite", suite, "suite name (default all)");
  sweep_cmd->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);

  bool dot_dual = false;
  bool dot_assembly = false;
  std::string highlight;
  auto* dot = app.add_subcommand("export-dot", "Graphviz Hasse diagram of a poset, lattice, X_L, N(L) or space");
  auto* dot_poset = dot->add_option("--poset", poset_src, "poset JSON (path or inline)");
  auto* dot_lattice = dot->add_option("--lattice", lattice_src, "lattice JSON (path or inline)");
  auto* dot_space = dot->add_option("--space", space_src, "space JSON (path or inline)");
  dot_poset->excludes(dot_lattice)->excludes(dot_space);
  dot_lattice->excludes(dot_space);
  auto* dual_flag = dot->add_flag("--dual", dot_dual, "draw X_L instead of L")->needs(dot_lattice);
  dot->add_flag("--assembly", dot_assembly, "draw N(L) instead of L")->needs(dot_lattice)->excludes(dual_flag);
  dot->add_option("--highlight", highlight, "with --dual: shade φ of this element")->needs(dual_flag);

  Outcome result;
  std::ostringstream out;
  std::ostringstream err;
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    result.status = app.exit(e, out, err);
    if (result.status != 0) result.status = exit_usage;
    result.out = out.str();
    result.err = err.str();
    return result;
  }

  try {
    Json report;
    std::string text;
    if (dual->parsed()) {
      report = dual_report(io::parse_lattice(io::load(lattice_src)), bounds);
    } else if (assembly->parsed()) {
      report = assembly_report(io::parse_lattice(io::load(lattice_src)), tower_depth, bounds);
    } else if (nuclei->parsed()) {
      report = nuclei_report(io::parse_lattice(io::load(lattice_src)), count_only, bounds);
    } else if (points->parsed()) {
      report = points_report(io::parse_lattice(io::load(lattice_src)), bounds);
    } else if (space->parsed()) {
      report = space_report(io::parse_space(io::load(space_src)));
    } else if (check->parsed()) {
      bool ok = true;
      auto record = [&](const std::string& name, Json r, bool pass) {
        r["ok"] = pass;
        report[name] = std::move(r);
        ok = ok && pass;
      };
      if (!lattice_src.empty()) {
        const FiniteLattice l = io::parse_lattice(io::load(lattice_src));
        const Dual d(l);
        bool any = !nucleus_src.empty();
        for (const auto& name : lattice_checks) any = any || wanted[name];
        if (!any) throw UsageError{"check: select at least one check flag"};
        if (!nucleus_src.empty()) {
          const Nucleus j = io::parse_nucleus(l, io::load(nucleus_src));
          const NucleusReport r = validate_nucleus(l, j);
          Json w = Json::array();
          for (std::size_t a : r.witness) w.push_back(l.name(a));
          Json jr{{"total", r.total},         {"inflationary", r.inflationary},
                  {"idempotent", r.idempotent}, {"preserves_meets", r.preserves_meets},
                  {"monotone", r.monotone}};
          if (!r.valid()) {
            jr["witness"] = w;
            jr["message"] = r.message;
          }
          record("nucleus", jr, r.valid());
        }
        if (wanted["duality"]) {
          const UnitCounitReport r = unit_counit_check(l, bounds);
          record("duality", unit_counit_json(r), r.ok());
        }
        if (wanted["nuclei"]) {
          const NuclearDualityReport r = nuclear_duality_check(d, bounds);
          record("nuclei",
                 Json{{"oracle_count", r.oracle_count},
                      {"nuclear_set_count", r.nuclear_set_count},
                      {"bijective", r.bijective},
                      {"round_trip", r.round_trip},
                      {"order_reversing", r.order_reversing},
                      {"u_v_w_formulas", r.u_v_w_formulas},
                      {"meet_is_union", r.meet_is_union},
                      {"join_is_intersection", r.join_is_intersection},
                      {"max_of_downsets_nuclear", r.max_of_downsets_nuclear},
                      {"clopen_cut_nuclear", r.clopen_cut_nuclear}},
                 r.ok());
        }
        if (wanted["boolean"]) {
          const BooleanReport r = is_assembly_boolean(d, bounds);
          record("boolean",
                 Json{{"assembly_boolean", r.assembly_boolean},
                      {"nuclear_equals_regular_closed", r.nuclear_equals_regular_closed},
                      {"max_of_clopen_downsets_clopen", r.max_of_clopen_downsets_clopen},
                      {"scattered", r.scattered},
                      {"agree", r.agree()}},
                 r.agree());
        }
        if (wanted["booleanization"]) {
          const BooleanizationCheck r = assembly_booleanization_check(d, bounds);
          record("booleanization",
                 Json{{"booleanization_size", r.booleanization_size},
                      {"regular_closed_count", r.regular_closed_count},
                      {"dual_isomorphism", r.dual_isomorphism}},
                 r.ok());
        }
        if (wanted["spatial"]) {
          const AssemblySpatialReport r = assembly_spatial_report(d, bounds);
          record("spatial", spatial_json(r), r.agree());
        }
        if (wanted["essential"]) {
          const Json e = essential_json(d, nuclear_points(d, bounds));
          bool pass = every_element_has_essential_prime(l);
          for (const auto& [name, entry] : e.items()) pass = pass && entry["dual_agrees"].get<bool>();
          record("essential", Json{{"elements", e}}, pass);
        }
      } else if (!space_src.empty()) {
        const FiniteSpace s = io::parse_space(io::load(space_src));
        bool any = false;
        for (const auto& name : space_checks) any = any || wanted[name];
        if (!any) throw UsageError{"check: select at least one check flag"};
        if (wanted["simmons"]) {
          const SimmonsIsbellReport r = simmons_isbell_report(s, bounds);
          Json j = simmons_json(r);
          j.erase("ok");
          record("simmons", j, r.ok());
        }
        if (wanted["compactification"]) {
          const CompactificationReport r = compactification_check(s);
          Json j = compactification_json(r);
          j.erase("ok");
          record("compactification", j, r.ok());
        }
        if (wanted["scatter"]) {
          const ScatterReport r = scatter_report(s);
          record("scatter", scatter_json(r), r.consistent());
        }
      } else {
        throw UsageError{"check: give --lattice or --space"};
      }
      report["ok"] = ok;
      if (!ok) result.status = exit_check_failed;
    } else if (sweep_cmd->parsed()) {
      const auto& known = kind == "posets" ? poset_suites() : topology_suites();
      if (std::find(known.begin(), known.end(), suite) == known.end()) {
        throw UsageError{"sweep: unknown " + kind + " suite \"" + suite + "\""};
      }
      report = sweep(kind, sweep_n, suite, jobs, bounds);
      if (report["failed"].get<std::size_t>() != 0) result.status = exit_check_failed;
    } else if (dot->parsed()) {
      if (!poset_src.empty()) {
        text = io::to_dot(io::parse_poset(io::load(poset_src)), "P");
      } else if (!lattice_src.empty()) {
        const FiniteLattice l = io::parse_lattice(io::load(lattice_src));
        if (dot_dual) {
          const Dual d(l);
          Subset mark;
          if (!highlight.empty()) {
            const auto a = l.index_of(highlight);
            if (!a) throw MalformedInput("unknown element \"" + highlight + "\"");
            mark = d.phi(*a);
          }
          text = io::to_dot(d.space().order, "X", mark);
        } else if (dot_assembly) {
          text = io::to_dot(assembly_frame(Dual(l), bounds).frame.order(), "N");
        } else {
          text = io::to_dot(l.order(), "L");
        }
      } else if (!space_src.empty()) {
        text = io::to_dot(io::parse_space(io::load(space_src)), "S");
      } else {
        throw UsageError{"export-dot: give --poset, --lattice or --space"};
      }
    }
    result.out = text.empty() ? io::dump(report) : text;
  } catch (const UsageError& e) {
    result.status = exit_usage;
    result.err = error_json("usage", e.message);
  } catch (const Error& e) {
    result.status = status_of(e.code());
    result.err = error_json(to_string(e.code()), e.what());
  } catch (const std::ios_base::failure& e) {
    result.status = exit_io;
    result.err = error_json("io_error", e.what());
  } catch (const std::out_of_range& e) {
    result.status = exit_out_of_range;
    result.err = error_json("out_of_range", e.what());
  }
  return result;
}

}  // namespace pftlab::cli
