#include "mstep/generator.hpp"

#include <numeric>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

namespace mstep {

namespace {

std::vector<VertexSet> contiguous_parts(std::span<const std::size_t> part_sizes) {
  if (part_sizes.size() < 2) {
    throw std::invalid_argument("a multipartite tournament needs at least two parts");
  }
  const std::size_t n = std::accumulate(part_sizes.begin(), part_sizes.end(), std::size_t{0});
  std::vector<VertexSet> parts;
  std::size_t next = 0;
  for (std::size_t size : part_sizes) {
    if (size == 0) throw std::invalid_argument("part sizes must be at least 1");
    VertexSet part(n);
    for (std::size_t i = 0; i < size; ++i) part.insert(next++);
    parts.push_back(std::move(part));
  }
  return parts;
}

double unit_interval(std::uint64_t word) {
  return static_cast<double>(word >> 11) * 0x1.0p-53;
}

}  // namespace

Instance random_multipartite_tournament(std::span<const std::size_t> part_sizes,
                                        std::uint64_t seed) {
  PartiteStructure parts(contiguous_parts(part_sizes));
  const std::size_t n = parts.vertex_count();
  std::mt19937_64 engine(seed);
  Digraph d(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (parts.part_of(i) == parts.part_of(j)) continue;
      if ((engine() >> 63) == 0) {
        d.add_arc(i, j);
      } else {
        d.add_arc(j, i);
      }
    }
  }
  return {std::move(d), std::move(parts)};
}

Instance random_ranked_multipartite_tournament(std::span<const std::size_t> part_sizes,
                                               std::uint64_t seed,
                                               double forward_probability) {
  if (!(forward_probability >= 0.0 && forward_probability <= 1.0)) {
    throw std::invalid_argument("forward_probability must lie in [0, 1]");
  }
  PartiteStructure parts(contiguous_parts(part_sizes));
  const std::size_t n = parts.vertex_count();
  std::mt19937_64 engine(seed);

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  for (std::size_t i = n; i-- > 1;) {
    std::swap(order[i], order[engine() % (i + 1)]);
  }
  std::vector<std::size_t> rank(n);
  for (std::size_t pos = 0; pos < n; ++pos) rank[order[pos]] = pos;

  Digraph d(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (parts.part_of(i) == parts.part_of(j)) continue;
      const auto [low, high] = rank[i] < rank[j] ? std::pair{i, j} : std::pair{j, i};
      if (unit_interval(engine()) < forward_probability) {
        d.add_arc(low, high);
      } else {
        d.add_arc(high, low);
      }
    }
  }
  return {std::move(d), std::move(parts)};
}

}  // namespace mstep
