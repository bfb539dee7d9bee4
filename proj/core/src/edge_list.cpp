#include "xpk/edge_list.hpp"

#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

#include "xpk/error.hpp"

namespace xpk {
namespace {

std::string_view trim(std::string_view s) {
  const char* ws = " \t\r\n";
  auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

bool parse_u64(std::string_view tok, std::uint64_t& out) {
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
  return ec == std::errc() && ptr == tok.data() + tok.size();
}

std::vector<std::string_view> split(std::string_view s) {
  std::vector<std::string_view> toks;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) toks.push_back(s.substr(i, j - i));
    i = j;
  }
  return toks;
}

[[noreturn]] void fail(ErrorCode code, std::size_t line, const std::string& msg) {
  throw Error(code, "line " + std::to_string(line) + ": " + msg);
}

}  // namespace

Graph read_edge_list(std::istream& in) {
  std::optional<std::uint64_t> declared;
  std::vector<Edge> edges;
  std::vector<std::size_t> lines;
  std::uint64_t max_id = 0;
  bool any_edge = false;

  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    auto line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    auto toks = split(line);
    if (toks.size() != 2) fail(ErrorCode::ParseError, line_no, "expected two fields");
    if (toks[0] == "n") {
      if (any_edge || declared) fail(ErrorCode::ParseError, line_no, "header must precede edges");
      std::uint64_t n = 0;
      if (!parse_u64(toks[1], n)) fail(ErrorCode::ParseError, line_no, "bad vertex count");
      declared = n;
      continue;
    }
    std::uint64_t u = 0, v = 0;
    if (!parse_u64(toks[0], u) || !parse_u64(toks[1], v)) {
      fail(ErrorCode::ParseError, line_no, "expected two non-negative integers");
    }
    if (declared && (u >= *declared || v >= *declared)) {
      fail(ErrorCode::VertexOutOfRange, line_no, "vertex id beyond declared n");
    }
    if (u >= kNoVertex || v >= kNoVertex) fail(ErrorCode::VertexOutOfRange, line_no, "id too large");
    if (u == v) fail(ErrorCode::SelfLoop, line_no, "self-loop at " + std::to_string(u));
    max_id = std::max({max_id, u, v});
    any_edge = true;
    edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
    lines.push_back(line_no);
  }
  const std::size_t n = declared ? *declared : (any_edge ? max_id + 1 : 0);

  std::vector<std::size_t> order(edges.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  auto key = [&](std::size_t i) {
    return Edge{std::min(edges[i].u, edges[i].v), std::max(edges[i].u, edges[i].v)};
  };
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return key(a) < key(b); });
  for (std::size_t i = 1; i < order.size(); ++i) {
    if (key(order[i]) == key(order[i - 1])) {
      fail(ErrorCode::DuplicateEdge, lines[order[i]],
           "edge repeats line " + std::to_string(lines[order[i - 1]]));
    }
  }
  return build_graph(n, edges);
}

Graph load_edge_list(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path.string());
  return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << "n " << g.num_vertices() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

void save_edge_list(const std::filesystem::path& path, const Graph& g) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::ParseError, "cannot write " + path.string());
  write_edge_list(out, g);
}

std::string fingerprint(const Graph& g) {
  std::ostringstream s;
  write_edge_list(s, g);
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s.str()) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  static const char* hex = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = hex[h & 0xf];
    h >>= 4;
  }
  return out;
}

}  // namespace xpk
