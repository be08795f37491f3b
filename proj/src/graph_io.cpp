#include "kempe/graph_io.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

namespace kempe {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";

int decode_char(char ch) {
  const int v = static_cast<unsigned char>(ch);
  if (v < 63 || v > 126)
    throw FormatError("graph6 character out of range 63..126: code " + std::to_string(v));
  return v - 63;
}

void strip_line_end(std::string_view& s) {
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.remove_suffix(1);
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  strip_line_end(text);
  if (text.starts_with(kHeader)) text.remove_prefix(kHeader.size());
  if (text.empty()) throw FormatError("empty graph6 word");

  std::size_t pos = 0;
  long long n = 0;
  auto take = [&](std::size_t count) {
    if (pos + count > text.size()) throw FormatError("truncated graph6 length prefix");
    long long v = 0;
    for (std::size_t i = 0; i < count; ++i) v = (v << 6) | decode_char(text[pos++]);
    return v;
  };
  const int first = decode_char(text[pos]);
  if (first < 63) {
    n = first;
    ++pos;
  } else {
    ++pos;
    if (pos < text.size() && decode_char(text[pos]) == 63) {
      ++pos;
      n = take(6);
      if (n <= 258047) throw FormatError("non-canonical graph6 length prefix");
    } else {
      n = take(3);
      if (n < 63) throw FormatError("non-canonical graph6 length prefix");
    }
  }
  if (n > (1 << 20)) throw FormatError("graph6 vertex count too large");

  const long long bits = n * (n - 1) / 2;
  const long long bytes = (bits + 5) / 6;
  if (static_cast<long long>(text.size() - pos) != bytes)
    throw FormatError("graph6 body has " + std::to_string(text.size() - pos) +
                      " bytes, expected " + std::to_string(bytes));

  std::vector<Edge> edges;
  long long k = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++k) {
      const int byte = decode_char(text[pos + k / 6]);
      if ((byte >> (5 - k % 6)) & 1) edges.emplace_back(i, j);
    }
  for (long long b = bits; b < bytes * 6; ++b) {
    const int byte = decode_char(text[pos + b / 6]);
    if ((byte >> (5 - b % 6)) & 1) throw FormatError("graph6 padding bits are not zero");
  }
  return Graph(static_cast<int>(n), edges);
}

std::string encode_graph6(const Graph& g) {
  const long long n = g.order();
  std::string out;
  if (n < 63) {
    out.push_back(static_cast<char>(63 + n));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int s = 12; s >= 0; s -= 6) out.push_back(static_cast<char>(63 + ((n >> s) & 63)));
  } else {
    out.push_back(126);
    out.push_back(126);
    for (int s = 30; s >= 0; s -= 6) out.push_back(static_cast<char>(63 + ((n >> s) & 63)));
  }
  int acc = 0, filled = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = filled = 0;
      }
    }
  if (filled > 0) out.push_back(static_cast<char>(63 + (acc << (6 - filled))));
  return out;
}

std::vector<Graph> read_graph6_stream(std::istream& in) {
  std::vector<Graph> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view s(line);
    strip_line_end(s);
    if (s.empty()) continue;
    try {
      out.push_back(parse_graph6(s));
    } catch (const FormatError& e) {
      throw FormatError("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return out;
}

Graph parse_edge_list(std::istream& in) {
  long long n = -1, m = -1;
  if (!(in >> n >> m) || n < 0 || m < 0) throw FormatError("edge list: bad 'n m' header");
  std::vector<Edge> edges;
  for (long long i = 0; i < m; ++i) {
    long long u, v;
    if (!(in >> u >> v)) throw FormatError("edge list: expected " + std::to_string(m) + " edges");
    if (u < 0 || v < 0 || u >= n || v >= n) throw FormatError("edge list: vertex out of range");
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
  }
  try {
    return Graph(static_cast<int>(n), edges);
  } catch (const std::invalid_argument& e) {
    throw FormatError(std::string("edge list: ") + e.what());
  }
}

std::string format_edge_list(const Graph& g) {
  std::ostringstream os;
  os << g.order() << ' ' << g.size() << '\n';
  for (auto [u, v] : g.edges()) os << u << ' ' << v << '\n';
  return os.str();
}

namespace {

bool looks_like_edge_list(const std::string& content) {
  std::istringstream is(content);
  std::string first;
  std::getline(is, first);
  std::istringstream ls(first);
  long long a, b;
  std::string rest;
  return static_cast<bool>(ls >> a >> b) && !(ls >> rest);
}

}  // namespace

std::vector<Graph> load_graphs(const std::string& path) {
  std::string content;
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    content = ss.str();
  } else {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw FormatError("cannot open " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    content = ss.str();
  }
  std::istringstream is(content);
  if (looks_like_edge_list(content)) return {parse_edge_list(is)};
  return read_graph6_stream(is);
}

}  // namespace kempe
