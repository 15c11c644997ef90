#include "apls/io.hpp"

#include <charconv>
#include <sstream>
#include <string_view>

namespace apls::io {

namespace {

class LineReader {
 public:
  explicit LineReader(std::istream& is) : is_(is) {}

  // Next non-blank line split on whitespace; false at end of input.
  bool next(std::vector<std::string_view>& tokens) {
    tokens.clear();
    while (std::getline(is_, line_)) {
      ++line_no_;
      std::size_t i = 0;
      while (i < line_.size()) {
        while (i < line_.size() && (line_[i] == ' ' || line_[i] == '\t' || line_[i] == '\r')) ++i;
        const std::size_t start = i;
        while (i < line_.size() && line_[i] != ' ' && line_[i] != '\t' && line_[i] != '\r') ++i;
        if (i > start) tokens.emplace_back(line_.data() + start, i - start);
      }
      if (!tokens.empty()) return true;
    }
    return false;
  }

  std::vector<std::string_view> expect(const char* what) {
    std::vector<std::string_view> tokens;
    if (!next(tokens)) fail(std::string("unexpected end of input, expected ") + what);
    return tokens;
  }

  void expect_end() {
    std::vector<std::string_view> tokens;
    if (next(tokens)) fail("trailing content");
  }

  [[noreturn]] void fail(const std::string& message) const {
    throw FormatError("line " + std::to_string(line_no_) + ": " + message);
  }

  template <class T>
  T integer(std::string_view token, const char* what) const {
    T value{};
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size()) {
      fail(std::string("bad ") + what + " '" + std::string(token) + "'");
    }
    return value;
  }

  Rational fraction(std::string_view token, const char* what) const {
    if (token.find('/') == std::string_view::npos) fail(std::string(what) + " must be num/den");
    const auto slash = token.find('/');
    const auto num = integer<std::int64_t>(token.substr(0, slash), what);
    const auto den = integer<std::int64_t>(token.substr(slash + 1), what);
    if (den <= 0) fail(std::string(what) + " needs a positive denominator");
    return Rational(num, den);
  }

  void arity(const std::vector<std::string_view>& tokens, std::size_t n, const char* what) const {
    if (tokens.size() != n) fail(std::string(what) + ": expected " + std::to_string(n) + " fields");
  }

  void keyword(const std::vector<std::string_view>& tokens, std::string_view word) const {
    if (tokens.empty() || tokens[0] != word) fail("expected '" + std::string(word) + "'");
  }

 private:
  std::istream& is_;
  std::string line_;
  int line_no_ = 0;
};

void write_edges(std::ostream& os, std::span<const Edge> edges) {
  for (const Edge& e : edges) os << e.u << ' ' << e.v << '\n';
}

std::vector<Edge> read_edges(LineReader& in, std::size_t m, Vertex n) {
  std::vector<Edge> edges;
  edges.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    const auto t = in.expect("edge");
    in.arity(t, 2, "edge");
    const Edge e{in.integer<Vertex>(t[0], "vertex"), in.integer<Vertex>(t[1], "vertex")};
    if (e.u < 0 || e.v >= n) in.fail("vertex out of range");
    if (e.u >= e.v) in.fail("edge endpoints must satisfy u < v");
    if (!edges.empty() && !(edges.back() < e)) in.fail("edges must be strictly ascending");
    edges.push_back(e);
  }
  return edges;
}

}  // namespace

void write_graph(std::ostream& os, const BoundedDegreeGraph& g) {
  os << "graph " << g.num_vertices() << ' ' << g.num_edges() << ' ' << g.degree_bound() << '\n';
  write_edges(os, g.edges());
}

BoundedDegreeGraph read_graph(std::istream& is) {
  LineReader in(is);
  const auto h = in.expect("header");
  in.keyword(h, "graph");
  in.arity(h, 4, "graph header");
  const auto n = in.integer<Vertex>(h[1], "n");
  const auto m = in.integer<std::size_t>(h[2], "m");
  const auto d = in.integer<int>(h[3], "d");
  if (n < 0) in.fail("negative vertex count");
  if (d < 2) in.fail("degree bound must be at least 2");
  const auto edges = read_edges(in, m, n);
  in.expect_end();
  try {
    return BoundedDegreeGraph::build(n, d, edges);
  } catch (const Error& e) {
    throw FormatError(e.what());
  }
}

std::string to_string(const BoundedDegreeGraph& g) {
  std::ostringstream os;
  write_graph(os, g);
  return os.str();
}

void write_witness(std::ostream& os, const WitnessFunction& w) {
  os << "witness " << w.dists.size() << ' ' << w.radius << '\n';
  for (std::size_t x = 0; x < w.dists.size(); ++x) {
    const auto& f = w.dists[x];
    os << x << ' ' << f.denominator();
    for (const auto& e : f.entries()) os << ' ' << e.vertex << ':' << e.numerator;
    os << '\n';
  }
}

WitnessFunction read_witness(std::istream& is) {
  LineReader in(is);
  const auto h = in.expect("header");
  in.keyword(h, "witness");
  in.arity(h, 3, "witness header");
  const auto n = in.integer<Vertex>(h[1], "n");
  WitnessFunction w;
  w.radius = in.integer<int>(h[2], "r");
  if (n < 0 || w.radius < 0) in.fail("negative field");
  for (Vertex x = 0; x < n; ++x) {
    const auto t = in.expect("witness row");
    if (t.size() < 3) in.fail("witness row needs a vertex, a denominator and at least one entry");
    if (in.integer<Vertex>(t[0], "vertex") != x) in.fail("witness rows must list vertices 0..n-1 in order");
    const auto den = in.integer<std::int64_t>(t[1], "denominator");
    if (den <= 0) in.fail("denominator must be positive");
    std::vector<RationalDist::Entry> entries;
    for (std::size_t i = 2; i < t.size(); ++i) {
      const auto colon = t[i].find(':');
      if (colon == std::string_view::npos) in.fail("entry must be z:num");
      const auto z = in.integer<Vertex>(t[i].substr(0, colon), "vertex");
      const auto num = in.integer<std::int64_t>(t[i].substr(colon + 1), "numerator");
      if (z < 0 || z >= n) in.fail("vertex out of range");
      if (num <= 0) in.fail("numerators must be positive");
      if (!entries.empty() && entries.back().vertex >= z) in.fail("entries must be strictly ascending");
      entries.push_back({z, num});
    }
    try {
      w.dists.push_back(RationalDist::from_entries(den, std::move(entries)));
    } catch (const Error& e) {
      in.fail(e.what());
    }
  }
  in.expect_end();
  return w;
}

void write_sepdist(std::ostream& os, const SeparatorDistribution& dist) {
  os << "sepdist " << dist.num_vertices() << ' ' << dist.K() << ' ' << dist.support().size() << '\n';
  for (const auto& s : dist.support()) {
    os << s.weight.fraction_str() << ' ' << s.sample.removed.size();
    for (Vertex y : s.sample.removed) os << ' ' << y;
    os << '\n';
  }
}

SeparatorDistribution read_sepdist(std::istream& is, const BoundedDegreeGraph& g) {
  LineReader in(is);
  const auto h = in.expect("header");
  in.keyword(h, "sepdist");
  in.arity(h, 4, "sepdist header");
  const auto n = in.integer<Vertex>(h[1], "n");
  const auto K = in.integer<std::int64_t>(h[2], "K");
  const auto size = in.integer<std::size_t>(h[3], "support size");
  if (n != g.num_vertices()) in.fail("separator distribution is for a graph on " + std::to_string(n) + " vertices");
  std::vector<std::pair<std::vector<Vertex>, Rational>> samples;
  for (std::size_t i = 0; i < size; ++i) {
    const auto t = in.expect("sample");
    if (t.size() < 2) in.fail("sample needs a weight and a size");
    const Rational weight = in.fraction(t[0], "weight");
    const auto count = in.integer<std::size_t>(t[1], "separator size");
    if (t.size() != count + 2) in.fail("separator size does not match the listed vertices");
    std::vector<Vertex> removed;
    for (std::size_t j = 0; j < count; ++j) {
      const auto y = in.integer<Vertex>(t[j + 2], "vertex");
      if (y < 0 || y >= n) in.fail("vertex out of range");
      removed.push_back(y);
    }
    samples.emplace_back(std::move(removed), weight);
  }
  in.expect_end();
  return SeparatorDistribution::build(g, K, std::move(samples));
}

void write_labels(std::ostream& os, const ProofLabeling& labeling) {
  const auto& p = labeling.params;
  os << "labels " << labeling.num_vertices() << ' ' << p.r << ' ' << p.alpha << ' ' << p.palette << ' '
     << p.eps_prime.fraction_str();
  if (p.K) os << ' ' << *p.K;
  os << '\n';
  for (Vertex x = 0; x < labeling.num_vertices(); ++x) {
    os << x << ' ' << labeling.colors[x];
    for (std::int64_t t : labeling.table(x)) os << ' ' << t;
    os << '\n';
  }
}

ProofLabeling read_labels(std::istream& is) {
  LineReader in(is);
  const auto h = in.expect("header");
  in.keyword(h, "labels");
  if (h.size() != 6 && h.size() != 7) in.fail("labels header: expected 6 or 7 fields");
  const auto n = in.integer<Vertex>(h[1], "n");
  ProofLabeling out;
  auto& p = out.params;
  p.r = in.integer<int>(h[2], "r");
  p.alpha = in.integer<std::int64_t>(h[3], "alpha");
  p.palette = in.integer<int>(h[4], "palette");
  p.eps_prime = in.fraction(h[5], "eps'");
  if (h.size() == 7) p.K = in.integer<std::int64_t>(h[6], "K");
  if (n < 0 || p.r < 0 || p.alpha <= 0 || p.palette <= 0 || (p.K && *p.K < 0)) in.fail("header field out of range");
  out.colors.reserve(static_cast<std::size_t>(n));
  out.tables.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(p.palette));
  for (Vertex x = 0; x < n; ++x) {
    const auto t = in.expect("label row");
    in.arity(t, static_cast<std::size_t>(p.palette) + 2, "label row");
    if (in.integer<Vertex>(t[0], "vertex") != x) in.fail("label rows must list vertices 0..n-1 in order");
    out.colors.push_back(in.integer<int>(t[1], "color"));
    for (int q = 0; q < p.palette; ++q) out.tables.push_back(in.integer<std::int64_t>(t[q + 2], "table entry"));
  }
  in.expect_end();
  return out;
}

void write_verdict(std::ostream& os, const Verdict& verdict) {
  os << "verdict " << (verdict.accepted() ? "accept" : "reject") << '\n';
  for (std::size_t x = 0; x < verdict.decisions.size(); ++x) {
    if (verdict.decisions[x]) os << "reject " << x << ' ' << to_string(*verdict.decisions[x]) << '\n';
  }
}

void write_partition(std::ostream& os, Vertex n, const PartitionResult& partition) {
  os << "partition " << n << ' ' << partition.blocks.size() << ' ' << partition.removed.size() << '\n';
  for (const auto& block : partition.blocks) {
    os << block.size();
    for (Vertex v : block) os << ' ' << v;
    os << '\n';
  }
  os << "removed\n";
  write_edges(os, partition.removed);
}

PartitionResult read_partition(std::istream& is) {
  LineReader in(is);
  const auto h = in.expect("header");
  in.keyword(h, "partition");
  in.arity(h, 4, "partition header");
  const auto n = in.integer<Vertex>(h[1], "n");
  const auto blocks = in.integer<std::size_t>(h[2], "block count");
  const auto removed = in.integer<std::size_t>(h[3], "|W|");
  PartitionResult out;
  for (std::size_t b = 0; b < blocks; ++b) {
    const auto t = in.expect("block");
    const auto size = in.integer<std::size_t>(t[0], "block size");
    if (t.size() != size + 1) in.fail("block size does not match the listed vertices");
    std::vector<Vertex> block;
    for (std::size_t i = 1; i < t.size(); ++i) {
      const auto v = in.integer<Vertex>(t[i], "vertex");
      if (v < 0 || v >= n) in.fail("vertex out of range");
      block.push_back(v);
    }
    out.blocks.push_back(std::move(block));
  }
  const auto sep = in.expect("'removed'");
  in.keyword(sep, "removed");
  in.arity(sep, 1, "removed marker");
  out.removed = read_edges(in, removed, n);
  in.expect_end();
  return out;
}

}  // namespace apls::io
