#include "rainbow/core/io.hpp"

#include <atomic>
#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include <unistd.h>

namespace rainbow {

namespace {

// Reads one non-negative decimal integer token; leading zeros and signs are
// left for the round-trip comparison to reject.
bool next_int(std::string_view text, std::size_t& pos, long& value) {
  while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\n')) ++pos;
  if (pos >= text.size()) return false;
  const char* begin = text.data() + pos;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr == begin) return false;
  pos += static_cast<std::size_t>(ptr - begin);
  return true;
}

}  // namespace

std::string to_text(const HyperGraph& h) {
  std::ostringstream os;
  os << h.uniformity() << ' ' << h.order() << ' ' << h.size() << '\n';
  for (VertexSet e : h.edges()) {
    bool first = true;
    for (Vertex v : set_members(e)) {
      if (!first) os << ' ';
      os << v;
      first = false;
    }
    os << '\n';
  }
  return os.str();
}

HyperGraph parse_hypergraph(std::string_view text) {
  std::size_t pos = 0;
  long r = 0, n = 0, m = 0;
  if (!next_int(text, pos, r) || !next_int(text, pos, n) || !next_int(text, pos, m)) {
    throw ParseError("hypergraph header must be 'r n m'");
  }
  if (r < 1 || r > kMaxVertices) throw ParseError("uniformity out of range");
  if (n < 0 || n > kMaxVertices) throw ParseError("vertex count out of supported range");
  if (m < 0 || static_cast<std::uint64_t>(m) > binomial(static_cast<int>(n), static_cast<int>(r))) {
    throw ParseError("edge count out of range");
  }
  std::vector<VertexSet> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (long i = 0; i < m; ++i) {
    VertexSet e = 0;
    long prev = -1;
    for (long j = 0; j < r; ++j) {
      long v = 0;
      if (!next_int(text, pos, v)) throw ParseError("truncated edge list at edge " + std::to_string(i));
      if (v < 0 || v >= n) throw ParseError("vertex out of range at edge " + std::to_string(i));
      if (v <= prev) throw ParseError("edge vertices not strictly ascending at edge " + std::to_string(i));
      prev = v;
      e |= vertex_bit(static_cast<Vertex>(v));
    }
    if (!edges.empty() && e <= edges.back()) {
      throw ParseError("edges not in strictly increasing colex order at edge " + std::to_string(i));
    }
    edges.push_back(e);
  }
  HyperGraph h(static_cast<int>(r), static_cast<int>(n), std::move(edges));
  if (to_text(h) != text) throw ParseError("hypergraph text is not in canonical layout");
  return h;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path.string());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file_atomic(const std::filesystem::path& path, std::string_view contents) {
  static std::atomic<unsigned> counter{0};
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::filesystem::path tmp = path;
  tmp += ".tmp." + std::to_string(::getpid()) + "." + std::to_string(counter++);
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write " + tmp.string());
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    if (!out) throw Error("write failed for " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

HyperGraph read_hypergraph(const std::filesystem::path& path) {
  return parse_hypergraph(read_file(path));
}

void write_hypergraph(const std::filesystem::path& path, const HyperGraph& h) {
  write_file_atomic(path, to_text(h));
}

}  // namespace rainbow
