#include "lapsep/graph6.hpp"

#include <istream>

namespace lapsep {

namespace {

constexpr char kHeader[] = ">>graph6<<";

void append_bits(std::string& out, const std::vector<bool>& bits) {
  for (std::size_t start = 0; start < bits.size(); start += 6) {
    int group = 0;
    for (std::size_t k = 0; k < 6; ++k) {
      group <<= 1;
      if (start + k < bits.size() && bits[start + k]) group |= 1;
    }
    out += static_cast<char>(group + 63);
  }
}

}  // namespace

std::string graph6_encode(const Graph& g) {
  if (!g.is_unweighted())
    throw NonBinaryWeightsError("graph6 encodes unweighted graphs only");
  const long long n = g.size();
  std::string out;
  if (n <= 62) {
    out += static_cast<char>(n + 63);
  } else if (n <= 258047) {
    out += static_cast<char>(126);
    for (int shift = 12; shift >= 0; shift -= 6)
      out += static_cast<char>(((n >> shift) & 63) + 63);
  } else if (n <= 68719476735LL) {
    out += static_cast<char>(126);
    out += static_cast<char>(126);
    for (int shift = 30; shift >= 0; shift -= 6)
      out += static_cast<char>(((n >> shift) & 63) + 63);
  } else {
    throw TooLargeError("graph too large for graph6");
  }
  std::vector<bool> bits;
  bits.reserve(static_cast<std::size_t>(n * (n - 1) / 2));
  for (int j = 1; j < g.size(); ++j)
    for (int i = 0; i < j; ++i) bits.push_back(g.weight(i, j) != 0.0);
  append_bits(out, bits);
  return out;
}

Graph graph6_decode(const std::string& line) {
  std::string_view text(line);
  if (text.starts_with(kHeader)) text.remove_prefix(sizeof(kHeader) - 1);
  while (!text.empty() && (text.back() == '\r' || text.back() == '\n'))
    text.remove_suffix(1);
  if (text.empty()) throw BadGraph6Error("empty graph6 string");

  const auto value = [&](std::size_t pos) -> long long {
    if (pos >= text.size()) throw BadGraph6Error("truncated graph6 string");
    const unsigned char c = static_cast<unsigned char>(text[pos]);
    if (c < 63 || c > 126) throw BadGraph6Error("invalid graph6 character");
    return c - 63;
  };

  long long n = 0;
  std::size_t pos = 0;
  if (value(0) < 63) {
    n = value(0);
    pos = 1;
  } else if (text.size() >= 2 && value(1) < 63) {
    n = (value(1) << 12) | (value(2) << 6) | value(3);
    pos = 4;
  } else {
    for (int k = 2; k < 8; ++k) n = (n << 6) | value(k);
    pos = 8;
  }
  if (n <= 0) throw BadGraph6Error("graph6 vertex count must be positive");
  if (n > 4096) throw TooLargeError("graph6 vertex count too large");

  const std::size_t bit_count = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t char_count = (bit_count + 5) / 6;
  if (text.size() - pos != char_count)
    throw BadGraph6Error("graph6 payload length mismatch");

  Graph g(static_cast<int>(n));
  std::size_t bit = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++bit) {
      const long long group = value(pos + bit / 6);
      if ((group >> (5 - bit % 6)) & 1) g.add_edge(i, j);
    }
  return g;
}

std::vector<Graph> read_graph6_stream(std::istream& in) {
  std::vector<Graph> out;
  std::string line;
  while (std::getline(in, line)) {
    std::string_view text(line);
    if (text.starts_with(kHeader)) text.remove_prefix(sizeof(kHeader) - 1);
    while (!text.empty() && (text.back() == '\r' || text.back() == ' '))
      text.remove_suffix(1);
    if (text.empty()) continue;
    out.push_back(graph6_decode(std::string(text)));
  }
  return out;
}

}  // namespace lapsep
