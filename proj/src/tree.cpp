#include "padic/tree.hpp"

#include <sstream>
#include <stdexcept>

namespace padic {

Prime::Prime(std::uint64_t p) : p_(p) {
  if (p < 2) throw std::invalid_argument("p must be a prime >= 2");
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) throw std::invalid_argument(std::to_string(p) + " is not prime");
}

std::uint64_t level_size(const Prime& p, unsigned level) { return pow_u64(p, level); }

std::uint64_t vertex_count(const Prime& p, unsigned depth) {
  std::uint64_t total = 0;
  for (unsigned n = 0; n <= depth; ++n) total += level_size(p, n);
  return total;
}

std::uint64_t flat_index(const Prime& p, const Vertex& v) {
  return (v.level == 0 ? 0 : vertex_count(p, v.level - 1)) + v.index;
}

void require_valid(const Prime& p, const Vertex& v) {
  if (v.index >= level_size(p, v.level))
    throw std::invalid_argument("vertex index must be below p^level");
}

void require_valid(const Prime& p, const PruferPoint& g) {
  if (g.m == 0) {
    if (g.r != 0) throw std::invalid_argument("Prufer point with m = 0 must have r = 0");
    return;
  }
  if (g.r == 0 || g.r >= level_size(p, g.m) || g.r % p == 0)
    throw std::invalid_argument("Prufer point needs 0 < r < p^m with p not dividing r");
}

std::vector<Vertex> children(const Prime& p, const Vertex& v) {
  require_valid(p, v);
  const std::uint64_t stride = level_size(p, v.level);
  std::vector<Vertex> out;
  out.reserve(p);
  for (std::uint64_t j = 0; j < p; ++j) out.push_back({v.level + 1, v.index + j * stride});
  return out;
}

Vertex parent(const Prime& p, const Vertex& v) {
  require_valid(p, v);
  if (v.level == 0) throw std::domain_error("the root has no parent");
  return {v.level - 1, v.index % level_size(p, v.level - 1)};
}

Rational weight(const Prime& p, const Vertex& v) {
  return Rational(Integer(1), ipow(Integer(p.value()), v.level));
}

PruferPoint to_prufer(const Prime& p, const Vertex& v) {
  require_valid(p, v);
  if (v.index == 0) return {0, 0, v.level};
  std::uint64_t r = v.index;
  unsigned l = 0;
  while (r % p == 0) {
    r /= p;
    ++l;
  }
  return {r, v.level - l, l};
}

Vertex from_prufer(const Prime& p, const PruferPoint& g) {
  require_valid(p, g);
  return {g.m + g.l, g.r * level_size(p, g.l)};
}

std::uint64_t prufer_multiplicity(const Prime& p, unsigned m) {
  if (m == 0) return 1;
  return level_size(p, m) - level_size(p, m - 1);
}

std::string tree_to_dot(const Prime& p, unsigned depth) {
  std::ostringstream out;
  out << "digraph padic_tree {\n";
  out << "  // p = " << p.value() << ", depth = " << depth << "\n";
  for (unsigned n = 0; n <= depth; ++n) {
    const std::uint64_t size = level_size(p, n);
    for (std::uint64_t k = 0; k < size; ++k) {
      const Vertex v{n, k};
      out << "  \"" << n << ':' << k << "\" [weight=\"" << weight(p, v) << "\"];\n";
    }
  }
  for (unsigned n = 0; n < depth; ++n) {
    const std::uint64_t size = level_size(p, n);
    for (std::uint64_t k = 0; k < size; ++k)
      for (const Vertex& c : children(p, {n, k}))
        out << "  \"" << n << ':' << k << "\" -> \"" << c.level << ':' << c.index << "\";\n";
  }
  out << "}\n";
  return out.str();
}

namespace detail {

void require_level_size(const Prime& p, std::uint64_t size) {
  std::uint64_t s = 1;
  while (s < size) s *= p;
  if (s != size) throw std::invalid_argument("level data length must be a power of p");
}

}  // namespace detail

}  // namespace padic
