#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "xpk/error.hpp"
#include "xpk/extraction.hpp"
#include "xpk/graph.hpp"
#include "xpk/minors.hpp"
#include "xpk/rational.hpp"
#include "xpk/sparsity.hpp"

namespace xpk {

// Edges of K_n numbered 0 .. C(n,2)-1 in lexicographic (u < v) order.
using EdgeId = std::uint32_t;

std::size_t board_size(std::size_t n);
EdgeId edge_id(std::size_t n, Vertex u, Vertex v);
std::vector<Edge> board_edges(std::size_t n);

enum class GameKind { MakerBreaker, AvoiderEnforcer, ClientWaiter };
std::string_view to_string(GameKind k);

// A claims one edge per round (Maker, Avoider, Client); B is the biased side
// (Breaker, Enforcer, Waiter).
enum class Side : std::uint8_t { A, B };
std::string_view side_name(GameKind k, Side s);

enum class Owner : std::uint8_t { Free, A, B };

struct Move {
  std::size_t round = 0;
  Side side = Side::A;
  bool offer = false;  // Waiter's offer; Client's pick follows as its own move
  std::vector<EdgeId> edges;
};

struct GameState {
  std::size_t n = 0;
  std::size_t b = 1;
  GameKind kind = GameKind::MakerBreaker;
  Side first = Side::A;  // ignored for ClientWaiter (Waiter always offers)
  std::uint64_t seed = 0;
  // Stop after this many full rounds; 0 plays until the board is exhausted.
  std::size_t max_rounds = 0;
  std::vector<Owner> owner;
  std::vector<Move> history;
  std::size_t rounds_played = 0;

  std::size_t free_count() const;
  std::vector<EdgeId> free_edges() const;
  std::size_t owned(Side s) const;
  bool finished() const;
  // Spanning graph on all n vertices of one side's edges.
  Graph graph_of(Side s) const;
};

// Defaults follow the game definitions: Maker first, Enforcer first.
// Errors: InvalidParams (b == 0).
GameState new_game(std::size_t n, std::size_t b, GameKind kind, std::uint64_t seed = 0);

// A strategy sees the full state and answers for the side it plays.
class Strategy {
 public:
  virtual ~Strategy() = default;
  virtual std::string name() const = 0;
  // Exactly `quota` distinct free edges.
  virtual std::vector<EdgeId> claim(const GameState& s, Side me, std::size_t quota) = 0;
  // Waiter: between 1 and max_offer free edges. Default: claim(s, B, max_offer).
  virtual std::vector<EdgeId> offer(const GameState& s, std::size_t max_offer);
  // Client: one of the offered edges. Default: the first.
  virtual EdgeId choose(const GameState& s, std::span<const EdgeId> offered);
};

class IllegalMove : public Error {
 public:
  IllegalMove(const std::string& what, std::vector<Move> log)
      : Error(ErrorCode::IllegalMove, what), log_(std::move(log)) {}
  const std::vector<Move>& log() const { return log_; }

 private:
  std::vector<Move> log_;
};

struct GameResult {
  GameState state;
  Graph a;  // Maker / Avoider / Client
  Graph b;  // Breaker / Enforcer / Waiter
};

// Errors: IllegalMove.
GameResult play_game(GameState state, Strategy& a, Strategy& b);

// Explicit family of edge sets of K_n. Members are sorted and nonempty.
struct Family {
  std::size_t n = 0;
  std::string tag;
  std::vector<std::vector<EdgeId>> members;
};

// Errors: InvalidParams.
void validate(const Family& f);

Family all_triangles(std::size_t n);
// Toy-scale enumerations (n <= 12, at most 2e6 members, else TooLarge).
// F1: edge sets of floor(eps n / 4) + 1 edges coverable by floor(delta n)
// vertices. F2: edge sets of floor((1 + eps/8) k) + 1 edges inside k <=
// floor(delta n) vertices. These are the smallest sets breaking the
// non-strict P3 and P2, so F1/F2-freeness is exactly P3/P2.
Family family_f1(std::size_t n, double eps, double delta);
Family family_f2(std::size_t n, double eps, double delta);
Family family_union(const Family& a, const Family& b);

// Members as edge lists in the edge-list syntax, separated by blank lines.
// An "n <count>" header may give the board size; otherwise n is required.
// Errors: ParseError, VertexOutOfRange, SelfLoop, DuplicateEdge (with line).
Family read_family(std::istream& in, std::size_t n = 0);
Family load_family(const std::filesystem::path& path, std::size_t n = 0);

// Some member lies entirely inside g (g on the board's vertex set).
bool contains_member(const Graph& g, const Family& f);
// Side s owns an edge of every member.
bool blocks_all(const GameState& s, Side side, const Family& f);

struct CriterionSums {
  Rational beck_sum;  // sum over members of (1+b)^-|H|
  Rational dk_sum;    // the same sum, compared against 1/2
  bool beck_holds = false;
  bool dk_holds = false;
};

// Errors: InvalidParams (b == 0).
CriterionSums criterion_sums(const Family& f, std::size_t b);

enum class StrategyKind { Random, GreedyDegree, PotentialBlocker, Adversarial };
std::string_view to_string(StrategyKind k);
StrategyKind parse_strategy_kind(std::string_view s);

// Uniform over free edges (or over the offer).
std::unique_ptr<Strategy> random_edge_strategy(std::uint64_t seed);
// Each pick maximizes its own degree at both endpoints; ties by seed.
std::unique_ptr<Strategy> greedy_degree_strategy(std::uint64_t seed);
// Blocks members: Phi = sum over members without an own edge of
// (1+b)^-(free edges); each pick maximizes the drop, ties by smallest id. As
// Client it takes the offered edge of least exposure.
std::unique_ptr<Strategy> potential_blocker_strategy(const Family& f, std::size_t b);
// Pushes toward completing members for side A: Maker/Avoider/Client take the
// most threatening edge, Waiter offers only the most threatening edges.
std::unique_ptr<Strategy> adversarial_strategy(const Family& f, std::size_t b, std::uint64_t seed);
// Errors: InvalidParams (a family strategy without a family).
std::unique_ptr<Strategy> make_strategy(StrategyKind k, std::uint64_t seed, const Family* f, std::size_t b);

struct P123Report {
  std::size_t edges = 0;
  Rational p1_bound;        // (1 + eps/2) n
  std::size_t set_size = 0;  // floor(delta n)
  std::size_t touch_limit = 0;  // first violating count: floor(eps n / 4) + 1
  bool p1 = false;
  SparsityVerdict p2;  // non-strict c2 = 1 + eps/8, sizes <= delta n
  SparsityVerdict p3;  // sets of delta n vertices touch at most eps n / 4
  bool p2_holds() const;
  bool p3_holds() const;
};

// g must have exactly n vertices. eps > 0, 0 < delta < 1.
// Errors: InvalidParams.
P123Report check_p123(const Graph& g, std::size_t n, double eps, double delta,
                      const SparsityOptions& opts = {});

// Frozen delta per (n, eps, b): calibrated once with random Maker against a
// random Breaker, taking the largest grid value whose P2-and-P3 rate reaches
// the target. Versioned; a change of table means a new version string.
struct DeltaEntry {
  std::size_t n;
  double eps;
  std::size_t b;
  double delta;
  double rate;  // calibration P2-and-P3 rate
};
inline constexpr const char* kDeltaTableVersion = "delta-table-v1";
std::optional<double> calibrated_delta(std::size_t n, double eps, std::size_t b);

struct CalibrationRow {
  double delta = 0.0;
  std::size_t holds = 0;
  std::size_t trials = 0;
};
struct Calibration {
  std::vector<CalibrationRow> rows;
  std::optional<double> chosen;  // largest delta with rate >= target
};

// Grid: delta = k/n for k = 1 .. floor(0.05 n), largest first.
Calibration calibrate_delta(std::size_t n, double eps, std::size_t b, std::uint64_t first_seed,
                            std::size_t seeds, double target, std::size_t jobs = 1);

struct MakerMinorReport {
  std::size_t n = 0;
  double eps = 0.0;
  std::size_t b = 0;
  std::uint64_t seed = 0;
  double delta = 0.0;
  std::string breaker;
  std::size_t rounds = 0;
  std::size_t maker_edges = 0;
  P123Report p123;
  std::size_t trim_count = 0;
  std::size_t m1_vertices = 0;
  std::size_t m1_edges = 0;
  std::size_t m1_max_degree = 0;
  Rational degree_bound;  // eps n / (2 floor(delta n)); eps/(2 delta) when delta n is whole
  ExtractionParams params;
  std::optional<ExtractionOutcome> outcome;  // ids of M1
  std::optional<OutcomeCheck> check;
  std::optional<MinorModel> minor;  // board ids
  std::optional<std::string> error;  // first stage that did not complete
  Graph m0;
  Graph m1;
  std::vector<Vertex> m1_original;  // M1 id -> board id
};

// Random Maker for ceil((1 + eps/2) n) rounds against the given Breaker,
// then P1-P3 on Maker's graph, trimming of floor(delta n) top-degree
// vertices, extraction with c1 = 1 + eps/4, c2 = 1 + eps/8, alpha = delta,
// Delta = floor(eps / (2 delta)), and the greedy minor on the certificate.
// delta defaults to the calibrated table entry.
// Errors: BiasTooLarge, InvalidParams, InternalInvariantViolated.
MakerMinorReport maker_minor_pipeline(std::size_t n, double eps, std::size_t b, std::uint64_t seed,
                                      StrategyKind breaker, std::optional<double> delta = std::nullopt,
                                      const Family* family = nullptr);

}  // namespace xpk
