#include "cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <json.hpp>
#include <optional>
#include <ostream>

#include "xpk/edge_list.hpp"
#include "xpk/error.hpp"
#include "xpk/expansion.hpp"
#include "xpk/extraction.hpp"
#include "xpk/games.hpp"
#include "xpk/minors.hpp"
#include "xpk/parallel.hpp"
#include "xpk/random.hpp"
#include "xpk/rng.hpp"
#include "xpk/sparsity.hpp"
#include "xpk/spectral.hpp"

namespace xpk::cli {
namespace {

using json = nlohmann::ordered_json;

constexpr const char* kSchema = "xpk-report-1";
constexpr const char* kVersion = "0.3.0";

// Usage problems detected after parsing (missing --seed and the like).
struct UsageError {
  std::string what;
};

bool log_enabled() {
  const char* v = std::getenv("XPK_LOG");
  return v != nullptr && *v != '\0' && std::string(v) != "0";
}

json big(const BigInt& x) {
  if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max()) {
    return x.convert_to<std::int64_t>();
  }
  return x.str();
}

json rational(const Rational& r) { return {{"num", big(numerator(r))}, {"den", big(denominator(r))}}; }

json ids(const VertexSet& s) { return json(std::vector<Vertex>(s.begin(), s.end())); }

json verdict(const SparsityVerdict& v) {
  json j = {{"status", to_string(v.status)},
            {"effort_used", v.effort_used},
            {"best_density", v.best_density},
            {"witness", nullptr}};
  if (v.witness) j["witness"] = ids(*v.witness);
  return j;
}

json trace(const std::vector<TraceStep>& steps) {
  json out = json::array();
  for (const TraceStep& t : steps) {
    out.push_back({{"iteration", t.iteration},
                   {"vertices", t.vertices},
                   {"edges", t.edges},
                   {"density", t.density},
                   {"branch", to_string(t.branch)},
                   {"lambda", t.lambda < 0 ? json(nullptr) : json(t.lambda)},
                   {"cut_size", t.cut_size},
                   {"cut_boundary", t.cut_boundary},
                   {"cut_touching", t.cut_touching},
                   {"keep_steps", t.keep_steps},
                   {"removed", t.removed}});
  }
  return out;
}

json outcome(const ExtractionOutcome& o) {
  if (const auto* c = std::get_if<ExpanderCertificate>(&o)) {
    return {{"outcome", "ExpanderCertificate"},
            {"vertices", c->vertices.size()},
            {"vertex_ids", ids(c->vertices)},
            {"lambda", c->lambda_achieved},
            {"gamma_lower_bound", c->gamma_lower_bound},
            {"trace", trace(c->trace)}};
  }
  const auto& w = std::get<DenseWitness>(o);
  return {{"outcome", "DenseWitness"},
          {"vertices", w.w.size()},
          {"vertex_ids", ids(w.w)},
          {"spanned_edges", w.spanned_edges},
          {"trace", trace(w.trace)}};
}

json check(const OutcomeCheck& c) { return {{"ok", c.ok}, {"detail", c.detail}}; }

json model(const MinorModel& m) {
  json sets = json::array();
  for (const VertexSet& s : m.branch_sets) sets.push_back(ids(s));
  return {{"order", m.order()}, {"branch_sets", sets}};
}

json params_json(const ExtractionParams& p) {
  return {{"c1", rational(decimal(p.c1))},
          {"c2", rational(decimal(p.c2))},
          {"alpha", rational(decimal(p.alpha))},
          {"delta", p.delta_cap}};
}

json thresholds(const Thresholds& t) {
  return {{"levels", t.levels},
          {"delta_thm1", rational(t.delta_thm1)},
          {"gamma_thm1", rational(t.gamma_thm1)},
          {"k_thm2", t.k_thm2},
          {"k_steps", t.k_steps},
          {"delta_thm2", t.delta_thm2},
          {"lambda_star", t.lambda_star},
          {"gamma_alg", t.gamma_alg}};
}

json p123(const P123Report& p) {
  return {{"edges", p.edges},
          {"p1_bound", rational(p.p1_bound)},
          {"p1", p.p1},
          {"set_size", p.set_size},
          {"touch_limit", p.touch_limit},
          {"p2", verdict(p.p2)},
          {"p3", verdict(p.p3)},
          {"p2_holds", p.p2_holds()},
          {"p3_holds", p.p3_holds()}};
}

json giant(const PipelineReport& r) {
  json j = {{"seed", r.seed},
            {"edges", r.edges},
            {"giant_size", r.giant_size},
            {"giant_fraction", r.n ? double(r.giant_size) / double(r.n) : 0.0},
            {"giant_edges", r.giant_edges},
            {"giant_density", rational(r.giant_density)},
            {"trim_count", r.trim_count},
            {"trimmed_size", r.trimmed_size},
            {"trimmed_edges", r.trimmed_edges},
            {"trimmed_density", rational(r.trimmed_density)},
            {"trimmed_max_degree", r.trimmed_max_degree},
            {"params", params_json(r.params)},
            {"extraction", nullptr},
            {"check", nullptr},
            {"error", nullptr}};
  if (r.outcome) j["extraction"] = outcome(*r.outcome);
  if (r.check) j["check"] = check(*r.check);
  if (r.error) j["error"] = *r.error;
  return j;
}

json maker(const MakerMinorReport& r) {
  json j = {{"seed", r.seed},
            {"delta", rational(decimal(r.delta))},
            {"breaker", r.breaker},
            {"rounds", r.rounds},
            {"maker_edges", r.maker_edges},
            {"p123", p123(r.p123)},
            {"trim_count", r.trim_count},
            {"m1_vertices", r.m1_vertices},
            {"m1_edges", r.m1_edges},
            {"m1_max_degree", r.m1_max_degree},
            {"degree_bound", rational(r.degree_bound)},
            {"params", params_json(r.params)},
            {"extraction", nullptr},
            {"check", nullptr},
            {"minor", nullptr},
            {"error", nullptr}};
  if (r.outcome) j["extraction"] = outcome(*r.outcome);
  if (r.check) j["check"] = check(*r.check);
  if (r.minor) j["minor"] = model(*r.minor);
  if (r.error) j["error"] = *r.error;
  return j;
}

json input(const std::string& path, const Graph& g) {
  return {{"path", path}, {"fingerprint", fingerprint(g)}, {"n", g.num_vertices()}, {"m", g.num_edges()}};
}

GameKind parse_kind(const std::string& s) {
  if (s == "maker-breaker") return GameKind::MakerBreaker;
  if (s == "avoider-enforcer") return GameKind::AvoiderEnforcer;
  return GameKind::ClientWaiter;
}

std::optional<Family> build_family(const std::string& spec, std::size_t n, std::optional<double> eps,
                                   std::optional<double> delta) {
  if (spec.empty()) return std::nullopt;
  if (spec == "triangles") return all_triangles(n);
  if (spec == "f1" || spec == "f2" || spec == "f12") {
    if (!eps || !delta) throw UsageError{"--family " + spec + " needs --eps and --delta"};
    if (spec == "f1") return family_f1(n, *eps, *delta);
    if (spec == "f2") return family_f2(n, *eps, *delta);
    return family_union(family_f1(n, *eps, *delta), family_f2(n, *eps, *delta));
  }
  Family f = load_family(spec, n);
  if (f.n != n) throw UsageError{"family file is for n = " + std::to_string(f.n)};
  validate(f);
  return f;
}

json transcript(const GameState& s) {
  json moves = json::array();
  for (const Move& m : s.history) {
    moves.push_back({{"round", m.round},
                     {"side", side_name(s.kind, m.side)},
                     {"offer", m.offer},
                     {"edges", m.edges}});
  }
  std::string owners;
  for (Owner o : s.owner) owners += o == Owner::A ? 'A' : o == Owner::B ? 'B' : '.';
  return {{"moves", moves}, {"owners", owners}};
}

int code_for(ErrorCode c) {
  switch (c) {
    case ErrorCode::InternalInvariantViolated:
    case ErrorCode::NoConvergence:
      return kInternal;
    default:
      return kInvalid;
  }
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  const auto start = std::chrono::steady_clock::now();
  std::string echo;
  for (int i = 0; i < argc; ++i) echo += (i ? " " : "") + std::string(argv[i]);

  CLI::App app{"Expander extraction, sparsity checks, minors and positional games"};
  app.name("xpk");
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  // Shared option storage; each subcommand binds what it uses.
  std::string in, out_path, mode, method, kind, fam, strat_a = "random", strat_b = "random", first;
  std::size_t n = 0, b = 0, seeds = 1, jobs = 1, restarts = 10, delta_cap = 0;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> t, touch_m, touch_t;
  std::optional<double> p, c1, c2, alpha, eps, delta;
  std::uint64_t effort = 1'000'000;
  bool non_strict = false, with_transcript = false;

  auto* gen = app.add_subcommand("gen", "Sample G(n, p) into an edge-list file");
  gen->add_option("--n", n, "vertices")->required();
  gen->add_option("--p", p, "edge probability")->required();
  gen->add_option("--seed", seed)->required();
  gen->add_option("--out", out_path, "output edge list")->required();

  auto* extract = app.add_subcommand("extract", "Spectral expander extraction");
  extract->add_option("--in", in)->required()->check(CLI::ExistingFile);
  extract->add_option("--c1", c1)->required();
  extract->add_option("--c2", c2)->required();
  extract->add_option("--alpha", alpha)->required();
  extract->add_option("--delta", delta_cap, "maximum degree bound")->required();

  auto* verify = app.add_subcommand("verify", "Exact checks on a small graph");
  verify->add_option("--mode", mode)->required()->check(CLI::IsMember({"expansion", "cheeger", "sparsity", "separator"}));
  verify->add_option("--in", in)->required()->check(CLI::ExistingFile);
  verify->add_option("--c2", c2);
  verify->add_option("--alpha", alpha);
  verify->add_option("--touch-m", touch_m, "set size for the touch bound");
  verify->add_option("--touch-t", touch_t, "first violating touch count");
  verify->add_option("--effort", effort);
  verify->add_option("--seed", seed);
  verify->add_flag("--non-strict", non_strict, "violation means spanning more than c2 |W|");

  auto* minor = app.add_subcommand("minor", "Clique minors");
  minor->add_option("--in", in)->required()->check(CLI::ExistingFile);
  minor->add_option("--method", method)->required()->check(CLI::IsMember({"exact", "greedy"}));
  minor->add_option("--t", t, "exact: decide K_t instead of the maximum");
  minor->add_option("--seed", seed);
  minor->add_option("--restarts", restarts);
  minor->add_option("--jobs", jobs);

  auto* game = app.add_subcommand("game", "Biased positional games on K_n");
  game->add_option("--kind", kind)->required()->check(
      CLI::IsMember({"maker-breaker", "avoider-enforcer", "client-waiter"}));
  game->add_option("--n", n)->required();
  game->add_option("--b", b)->required();
  game->add_option("--strategy-a", strat_a, "Maker / Avoider / Client");
  game->add_option("--strategy-b", strat_b, "Breaker / Enforcer / Waiter");
  game->add_option("--family", fam, "triangles, f1, f2, f12 or a family file");
  game->add_option("--eps", eps);
  game->add_option("--delta", delta);
  game->add_option("--first", first)->check(CLI::IsMember({"a", "b"}));
  game->add_option("--seed", seed)->required();
  game->add_option("--seeds", seeds, "games on seeds seed .. seed + seeds - 1");
  game->add_option("--jobs", jobs);
  game->add_flag("--transcript", with_transcript);

  auto* pipeline = app.add_subcommand("pipeline", "End-to-end runs");
  pipeline->add_option("--kind", kind)->required()->check(CLI::IsMember({"maker-minor", "giant"}));
  pipeline->add_option("--n", n)->required();
  pipeline->add_option("--eps", eps)->required();
  pipeline->add_option("--b", b);
  pipeline->add_option("--breaker", strat_b);
  pipeline->add_option("--delta", delta);
  pipeline->add_option("--seed", seed)->required();
  pipeline->add_option("--seeds", seeds);
  pipeline->add_option("--jobs", jobs);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return kOk;
    }
    err << "xpk: " << e.what() << "\n" << "run 'xpk --help' for usage\n";
    return kInvalid;
  }

  auto log = [&](const std::string& msg) {
    if (log_enabled()) err << "[xpk] " << msg << "\n";
  };

  json report = {{"schema", kSchema}, {"version", kVersion}, {"command", echo}};
  json parameters = json::object();
  json result;
  json seed_list = json::array();
  int code = kOk;

  try {
    if (gen->parsed()) {
      parameters = {{"n", n}, {"p", *p}, {"seed", *seed}, {"out", out_path}};
      Graph g = gnp({n, *p, *seed});
      save_edge_list(out_path, g);
      seed_list.push_back(*seed);
      result = {{"n", g.num_vertices()}, {"edges", g.num_edges()}, {"fingerprint", fingerprint(g)}};
      log("wrote " + out_path);
    } else if (extract->parsed()) {
      Graph g = load_edge_list(in);
      report["input"] = input(in, g);
      ExtractionParams ep{*c1, *c2, *alpha, delta_cap};
      parameters = params_json(ep);
      Thresholds th = derive_thresholds(ep);
      log("extracting on n = " + std::to_string(g.num_vertices()));
      ExtractionOutcome o = extract_expander(g, ep);
      result = outcome(o);
      result["check"] = check(verify_outcome(g, ep, o));
      result["thresholds"] = thresholds(th);
    } else if (verify->parsed()) {
      Graph g = load_edge_list(in);
      report["input"] = input(in, g);
      parameters = {{"mode", mode}};
      if (mode == "expansion") {
        ExpansionProfile e = vertex_expansion_exact(g);
        result = {{"gamma", rational(e.gamma)}, {"gamma_value", to_double(e.gamma)}, {"worst_set", ids(e.worst_set)}};
        if (is_connected(g) && g.num_vertices() >= 2) result["spectral_lower_bound"] = certify_spectral_expansion(g);
      } else if (mode == "cheeger") {
        CheegerResult h = cheeger_exact(g);
        SpectralResult s = lambda1(g);
        const double hv = to_double(h.h);
        const bool ok = hv * hv / 2 - 1e-9 <= s.lambda1 && s.lambda1 <= 2 * hv + 1e-9;
        result = {{"h", hv},
                  {"h_exact", rational(h.h)},
                  {"witness", ids(h.witness)},
                  {"connected", h.connected},
                  {"lambda1", s.lambda1},
                  {"residual", s.residual},
                  {"lower", hv * hv / 2},
                  {"upper", 2 * hv},
                  {"sandwich", ok ? "pass" : "fail"}};
      } else if (mode == "sparsity") {
        SparsityVerdict v;
        if (touch_m || touch_t) {
          if (!touch_m || !touch_t) throw UsageError{"--touch-m and --touch-t go together"};
          parameters.update({{"touch_m", *touch_m}, {"touch_t", *touch_t}});
          v = touch_bound_verdict(g, *touch_m, *touch_t);
        } else {
          if (!c2 || !alpha) throw UsageError{"sparsity needs --c2 and --alpha (or --touch-m/--touch-t)"};
          if (!seed) throw UsageError{"sparsity needs --seed"};
          SparsityOptions o;
          o.effort = effort;
          o.seed = *seed;
          o.strict = !non_strict;
          parameters.update({{"c2", rational(decimal(*c2))},
                             {"alpha", rational(decimal(*alpha))},
                             {"max_set_size", max_set_size(*alpha, g.num_vertices())},
                             {"strict", o.strict},
                             {"effort", effort}});
          seed_list.push_back(*seed);
          v = local_sparsity_verdict(g, *c2, *alpha, o);
        }
        result = verdict(v);
        if (v.status == VerdictStatus::Inconclusive) code = kInconclusive;
      } else {
        std::optional<Separator> s = min_separator_exact(g);
        result = {{"separator", nullptr}};
        if (s) {
          result["separator"] = {{"s", ids(s->s)}, {"a", ids(s->a)}, {"b", ids(s->b)}};
          result["size"] = s->s.size();
        }
        if (is_connected(g) && g.num_vertices() >= 2) {
          Rational gamma = vertex_expansion_exact(g).gamma;
          Rational bound = separator_lower_bound(gamma, g.num_vertices());
          result["gamma"] = rational(gamma);
          result["bound"] = rational(bound);
          result["holds"] = !s || Rational(long(s->s.size())) >= bound;
        }
      }
    } else if (minor->parsed()) {
      Graph g = load_edge_list(in);
      report["input"] = input(in, g);
      parameters = {{"method", method}};
      std::optional<MinorModel> m;
      if (method == "exact") {
        if (t) {
          parameters["t"] = *t;
          m = clique_minor_exact(g, *t);
          result["found"] = m.has_value();
        } else {
          m = max_clique_minor_exact(g);
        }
      } else {
        if (!seed) throw UsageError{"greedy needs --seed"};
        parameters.update({{"seed", *seed}, {"restarts", restarts}});
        seed_list.push_back(*seed);
        m = clique_minor_greedy(g, *seed, restarts, jobs);
      }
      result["model"] = m ? model(*m) : json(nullptr);
      if (m) result["valid"] = model_defect(g, *m).empty();
    } else if (game->parsed()) {
      const GameKind gk = parse_kind(kind);
      std::optional<Family> family = build_family(fam, n, eps, delta);
      const StrategyKind ka = parse_strategy_kind(strat_a), kb = parse_strategy_kind(strat_b);
      parameters = {{"kind", to_string(gk)},   {"n", n},         {"b", b},
                    {"strategy_a", strat_a},   {"strategy_b", strat_b},
                    {"family", fam.empty() ? json(nullptr) : json(fam)},
                    {"seed", *seed},           {"seeds", seeds}};
      if (!first.empty()) parameters["first"] = first;
      if (family) {
        CriterionSums cs = criterion_sums(*family, b);
        result["family"] = {{"members", family->members.size()},
                            {"beck_sum", rational(cs.beck_sum)},
                            {"dk_sum", rational(cs.dk_sum)},
                            {"beck_holds", cs.beck_holds},
                            {"dk_holds", cs.dk_holds}};
      }
      std::vector<json> rows(seeds);
      const Family* fp = family ? &*family : nullptr;
      parallel_for(seeds, jobs, [&](std::size_t i) {
        const std::uint64_t s = *seed + i;
        GameState st = new_game(n, b, gk, s);
        if (!first.empty()) st.first = first == "a" ? Side::A : Side::B;
        auto a = make_strategy(ka, derive_seed(s, 0), fp, b);
        auto bb = make_strategy(kb, derive_seed(s, 1), fp, b);
        GameResult r = play_game(std::move(st), *a, *bb);
        json row = {{"seed", s},
                    {"rounds", r.state.rounds_played},
                    {"a_edges", r.a.num_edges()},
                    {"b_edges", r.b.num_edges()}};
        if (fp) {
          row["a_contains_member"] = contains_member(r.a, *fp);
          row["b_blocks_all"] = blocks_all(r.state, Side::B, *fp);
        }
        if (with_transcript) row["transcript"] = transcript(r.state);
        rows[i] = std::move(row);
      });
      for (std::size_t i = 0; i < seeds; ++i) seed_list.push_back(*seed + i);
      result["sides"] = {{"a", side_name(gk, Side::A)}, {"b", side_name(gk, Side::B)}};
      result["games"] = rows;
    } else if (pipeline->parsed()) {
      parameters = {{"kind", kind}, {"n", n}, {"eps", rational(decimal(*eps))}, {"seed", *seed}, {"seeds", seeds}};
      std::vector<json> rows(seeds);
      if (kind == "giant") {
        parallel_for(seeds, jobs, [&](std::size_t i) { rows[i] = giant(giant_pipeline(n, *eps, *seed + i)); });
      } else {
        const StrategyKind kb = parse_strategy_kind(strat_b);
        parameters.update({{"b", b}, {"breaker", strat_b}});
        if (delta) parameters["delta"] = rational(decimal(*delta));
        else parameters["delta_table"] = kDeltaTableVersion;
        parallel_for(seeds, jobs,
                     [&](std::size_t i) { rows[i] = maker(maker_minor_pipeline(n, *eps, b, *seed + i, kb, delta)); });
      }
      for (std::size_t i = 0; i < seeds; ++i) seed_list.push_back(*seed + i);
      result = {{"runs", rows}};
    }
  } catch (const UsageError& e) {
    err << "xpk: " << e.what << "\n";
    return kInvalid;
  } catch (const Error& e) {
    err << "xpk: " << e.what() << "\n";
    return code_for(e.code());
  } catch (const std::exception& e) {
    err << "xpk: " << e.what() << "\n";
    return kInternal;
  }

  report["parameters"] = parameters;
  report["seeds"] = seed_list;
  report["rng"] = Rng::kName;
  report["result"] = result;
  report["timings"] = {
      {"total_seconds", std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count()}};
  out << report.dump(2) << "\n";
  return code;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  return run(int(argv.size()), argv.data(), out, err);
}

}  // namespace xpk::cli
