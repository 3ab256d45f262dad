#include "walklab/graph_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace walklab {

namespace {

constexpr std::string_view kGraph6Header = ">>graph6<<";

bool is_graph6_char(char c) { return c >= 63 && c <= 126; }

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\n' || s.front() == '\r'))
    s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\n' || s.back() == '\r'))
    s.remove_suffix(1);
  return s;
}

}  // namespace

Graph read_graph6(std::string_view text) {
  text = trim(text);
  if (text.substr(0, kGraph6Header.size()) == kGraph6Header) text.remove_prefix(kGraph6Header.size());
  std::size_t pos = 0;
  auto next = [&]() -> std::uint64_t {
    if (pos >= text.size()) throw ParseError("graph6: truncated input");
    const char c = text[pos++];
    if (!is_graph6_char(c)) throw ParseError("graph6: invalid character");
    return static_cast<std::uint64_t>(c - 63);
  };

  std::uint64_t n = next();
  if (n == 63) {
    std::size_t groups = 3;
    if (pos < text.size() && text[pos] == 126) {
      ++pos;
      groups = 6;
    }
    n = 0;
    for (std::size_t i = 0; i < groups; ++i) n = (n << 6U) | next();
  }
  if (n > static_cast<std::uint64_t>(max_vertices()))
    throw SizeLimitExceeded("graph6 declares " + std::to_string(n) + " vertices");

  const auto order = static_cast<Index>(n);
  AdjacencyMatrix a = AdjacencyMatrix::Zero(order, order);
  const std::uint64_t bits = n * (n - (n ? 1 : 0)) / 2;
  const std::uint64_t bytes = (bits + 5) / 6;
  if (text.size() - pos != bytes) throw ParseError("graph6: wrong data length");
  std::uint64_t k = 0;
  std::uint64_t word = 0;
  int left = 0;
  for (Index j = 1; j < order; ++j) {
    for (Index i = 0; i < j; ++i, ++k) {
      if (left == 0) {
        word = next();
        left = 6;
      }
      --left;
      if ((word >> static_cast<unsigned>(left)) & 1U) a(i, j) = a(j, i) = 1;
    }
  }
  if (left > 0 && (word & ((1U << static_cast<unsigned>(left)) - 1U)) != 0)
    throw ParseError("graph6: nonzero padding bits");
  return Graph(std::move(a));
}

std::string write_graph6(const Graph& g, bool with_header) {
  std::string out;
  if (with_header) out += kGraph6Header;
  const auto n = static_cast<std::uint64_t>(g.order());
  if (n <= 62) {
    out += static_cast<char>(n + 63);
  } else if (n <= 258047) {
    out += static_cast<char>(126);
    for (int shift = 12; shift >= 0; shift -= 6) out += static_cast<char>(((n >> shift) & 63U) + 63);
  } else {
    out += static_cast<char>(126);
    out += static_cast<char>(126);
    for (int shift = 30; shift >= 0; shift -= 6) out += static_cast<char>(((n >> shift) & 63U) + 63);
  }
  unsigned word = 0;
  int filled = 0;
  for (Index j = 1; j < g.order(); ++j) {
    for (Index i = 0; i < j; ++i) {
      word = (word << 1U) | (g.adjacent(i, j) ? 1U : 0U);
      if (++filled == 6) {
        out += static_cast<char>(word + 63);
        word = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out += static_cast<char>((word << static_cast<unsigned>(6 - filled)) + 63);
  return out;
}

Graph read_edge_list(std::istream& in) {
  long n = 0;
  long m = 0;
  if (!(in >> n >> m)) throw ParseError("edge list: missing header 'n m'");
  if (n < 0 || m < 0) throw ParseError("edge list: negative counts");
  if (n > max_vertices()) throw SizeLimitExceeded("edge list declares " + std::to_string(n) + " vertices");
  std::vector<std::pair<Index, Index>> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (long i = 0; i < m; ++i) {
    long u = 0;
    long v = 0;
    if (!(in >> u >> v)) throw ParseError("edge list: expected " + std::to_string(m) + " edges");
    edges.emplace_back(u, v);
  }
  std::string extra;
  if (in >> extra) throw ParseError("edge list: trailing data");
  return Graph::from_edges(n, edges);
}

std::string write_edge_list(const Graph& g) {
  std::ostringstream os;
  os << g.order() << " " << g.edge_count() << "\n";
  for (const auto& [u, v] : g.edges()) os << u << " " << v << "\n";
  return os.str();
}

Graph read_graph_auto(const std::string& text) {
  const std::string_view body = trim(text);
  if (body.substr(0, kGraph6Header.size()) == kGraph6Header) return read_graph6(body);
  const bool graph6_like = !body.empty() && std::all_of(body.begin(), body.end(), is_graph6_char);
  if (graph6_like) return read_graph6(body);
  std::istringstream in(text);
  return read_edge_list(in);
}

Graph load_graph_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return read_graph_auto(buf.str());
}

}  // namespace walklab
