#include "rainbow/antiramsey/coloring.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "rainbow/core/errors.hpp"

namespace rainbow::antiramsey {

namespace {

constexpr std::uint64_t kMaxColoredEdges = std::uint64_t{1} << 24;

std::uint64_t checked_edge_count(int n, int r) {
  if (r < 1 || n < r || n > kMaxVertices) throw InvalidArgument("coloring needs 1 <= r <= n <= 64");
  const std::uint64_t m = binomial(n, r);
  if (m > kMaxColoredEdges) throw CapacityError("too many edges to color");
  return m;
}

int parse_number(std::string_view s) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size() || s[0] == '+' || (s.size() > 1 && s[0] == '0')) {
    throw ParseError("bad number '" + std::string(s) + "' in coloring");
  }
  return v;
}

std::vector<std::string_view> tokens_of(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (true) {
    const std::size_t next = line.find(' ', pos);
    out.push_back(line.substr(pos, next == std::string_view::npos ? std::string_view::npos : next - pos));
    if (next == std::string_view::npos) return out;
    pos = next + 1;
  }
}

}  // namespace

EdgeColoring::EdgeColoring(int n, int r, std::vector<int> colors) : n_(n), r_(r), colors_(std::move(colors)) {
  if (colors_.size() != checked_edge_count(n, r)) throw InvalidArgument("coloring must color every edge of K_n^r");
  for (int c : colors_) {
    if (c < 1) throw InvalidArgument("colors start at 1");
    count_ = std::max(count_, c);
  }
  std::vector<bool> used(count_ + 1, false);
  for (int c : colors_) used[c] = true;
  if (std::find(used.begin() + 1, used.end(), false) != used.end()) {
    throw InvalidArgument("coloring is not surjective onto 1..N");
  }
}

EdgeColoring EdgeColoring::from_rgs(int n, int r, const std::vector<int>& rgs) {
  std::vector<int> colors(rgs.size());
  int next = 0;
  for (std::size_t i = 0; i < rgs.size(); ++i) {
    if (rgs[i] < 0 || rgs[i] > next) throw InvalidArgument("not a restricted growth string");
    if (rgs[i] == next) ++next;
    colors[i] = rgs[i] + 1;
  }
  return EdgeColoring(n, r, std::move(colors));
}

EdgeColoring EdgeColoring::constant(int n, int r) {
  return EdgeColoring(n, r, std::vector<int>(checked_edge_count(n, r), 1));
}

int EdgeColoring::color_of(VertexSet edge) const {
  if (set_size(edge) != r_ || (n_ < kMaxVertices && (edge >> n_) != 0)) throw InvalidArgument("not an edge of K_n^r");
  return colors_[colex_rank(edge)];
}

EdgeColoring EdgeColoring::merged(int a, int b) const {
  if (a < 1 || b < 1 || a > count_ || b > count_ || a == b) throw InvalidArgument("merge needs two distinct colors");
  const int keep = std::min(a, b), gone = std::max(a, b);
  std::vector<int> out = colors_;
  for (int& c : out) {
    if (c == gone) c = keep;
    else if (c > gone) --c;
  }
  return EdgeColoring(n_, r_, std::move(out));
}

std::string coloring_text(const EdgeColoring& chi) {
  std::ostringstream out;
  out << chi.uniformity() << ' ' << chi.order() << ' ' << chi.color_count() << '\n';
  for (int i = 0; i < chi.edge_count(); ++i) out << (i ? " " : "") << chi.color(i);
  out << '\n';
  return out.str();
}

EdgeColoring parse_coloring(std::string_view text) {
  const std::size_t first = text.find('\n');
  if (first == std::string_view::npos) throw ParseError("coloring needs a header line");
  const std::size_t second = text.find('\n', first + 1);
  if (second == std::string_view::npos || second + 1 != text.size()) {
    throw ParseError("coloring must be exactly two newline-terminated lines");
  }
  const auto head = tokens_of(text.substr(0, first));
  if (head.size() != 3) throw ParseError("coloring header must be 'r n N'");
  const int r = parse_number(head[0]), n = parse_number(head[1]), count = parse_number(head[2]);
  const auto body = tokens_of(text.substr(first + 1, second - first - 1));
  std::vector<int> colors;
  colors.reserve(body.size());
  for (auto tok : body) colors.push_back(parse_number(tok));
  try {
    EdgeColoring chi(n, r, std::move(colors));
    if (chi.color_count() != count) throw ParseError("declared color count differs from the colors used");
    return chi;
  } catch (const InvalidArgument& e) {
    throw ParseError(std::string("invalid coloring: ") + e.what());
  }
}

}  // namespace rainbow::antiramsey
