#include "avgpart/generators.hpp"

#include <cctype>
#include <string>
#include <utility>
#include <vector>

#include "avgpart/error.hpp"

namespace avgpart {

std::uint64_t SplitMix64::next() {
  std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

Graph complete_graph(std::size_t n) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v) edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  return Graph::build(n, edges);
}

Graph gnp_graph(std::size_t n, const Rational& prob, std::uint64_t seed) {
  if (prob < 0 || prob > 1) throw Error(ErrorKind::InvalidSpec, "gnp probability outside [0,1]");
  if (!prob.get_num().fits_slong_p() || !prob.get_den().fits_slong_p())
    throw Error(ErrorKind::InvalidSpec, "gnp probability too large to represent");
  using u128 = unsigned __int128;
  const u128 num = static_cast<u128>(prob.get_num().get_si());
  const u128 den = static_cast<u128>(prob.get_den().get_si());
  SplitMix64 rng(seed);
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (static_cast<u128>(rng.next()) * den < (num << 64)) edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  return Graph::build(n, edges);
}

Graph sharp_graph(std::int64_t s, std::int64_t t, std::size_t n) {
  if (s <= 0 || t <= 0) throw Error(ErrorKind::InvalidSpec, "sharp needs positive integers s and t");
  const auto k = static_cast<std::size_t>(s + t + 1);
  if (n <= k) throw Error(ErrorKind::InvalidSpec, "sharp needs n > s+t+1");
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (std::size_t u = 0; u < k; ++u)
    for (std::size_t v = u + 1; v < n; ++v) edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  return Graph::build(n, edges);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  const auto shift = static_cast<Vertex>(a.vertex_count());
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (const Edge& e : a.edges()) edges.emplace_back(e.u, e.v);
  for (const Edge& e : b.edges()) edges.emplace_back(e.u + shift, e.v + shift);
  return Graph::build(a.vertex_count() + b.vertex_count(), edges);
}

namespace {

// Recursive-descent reader for name(arg, ...).
class SpecReader {
 public:
  SpecReader(std::string_view text, std::uint64_t default_seed) : text_(text), default_seed_(default_seed) {}

  Graph parse_all() {
    Graph g = expression();
    skip_space();
    if (pos_ != text_.size()) fail("trailing characters");
    return g;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw Error(ErrorKind::InvalidSpec, why + " at offset " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  void expect(char ch) {
    skip_space();
    if (pos_ >= text_.size() || text_[pos_] != ch) fail(std::string("expected '") + ch + "'");
    ++pos_;
  }

  bool accept(char ch) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == ch) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::string word() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '/' ||
                                   text_[pos_] == '-' || text_[pos_] == '_'))
      ++pos_;
    if (start == pos_) fail("expected a name or number");
    return std::string(text_.substr(start, pos_ - start));
  }

  std::uint64_t count() {
    const std::string w = word();
    if (w.find_first_not_of("0123456789") != std::string::npos || w.size() > 18) fail("expected a count, got '" + w + "'");
    return std::stoull(w);
  }

  Rational rational() {
    const std::string w = word();
    try {
      return parse_rational(w);
    } catch (const Error&) {
      fail("expected a rational, got '" + w + "'");
    }
  }

  Graph expression() {
    const std::string name = word();
    expect('(');
    Graph g;
    if (name == "complete") {
      g = complete_graph(count());
    } else if (name == "gnp") {
      const std::uint64_t n = count();
      expect(',');
      const Rational prob = rational();
      std::uint64_t seed = default_seed_;
      if (accept(',')) seed = count();
      g = gnp_graph(n, prob, seed);
    } else if (name == "sharp") {
      const auto s = static_cast<std::int64_t>(count());
      expect(',');
      const auto t = static_cast<std::int64_t>(count());
      expect(',');
      g = sharp_graph(s, t, count());
    } else if (name == "union") {
      Graph a = expression();
      expect(',');
      Graph b = expression();
      g = disjoint_union(a, b);
    } else {
      fail("unknown generator '" + name + "'");
    }
    expect(')');
    return g;
  }

  std::string_view text_;
  std::uint64_t default_seed_;
  std::size_t pos_ = 0;
};

}  // namespace

Graph generate(std::string_view spec, std::uint64_t default_seed) { return SpecReader(spec, default_seed).parse_all(); }

}  // namespace avgpart
