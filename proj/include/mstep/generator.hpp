#pragma once

// Seeded random multipartite tournaments.
//
// All randomness comes from std::mt19937_64 seeded with the given seed; its
// output sequence is fixed by the C++ standard, so the procedures below can
// be reimplemented elsewhere bit-for-bit:
//
//   * Vertices are assigned to parts contiguously: part 0 gets vertices
//     0..s0-1, part 1 the next s1, and so on.
//   * random_multipartite_tournament visits cross-part pairs (i, j), i < j,
//     in lexicographic order and draws one 64-bit word w per pair. The arc
//     is i -> j when the top bit of w is 0, otherwise j -> i.
//   * random_ranked_multipartite_tournament first draws a ranking of the
//     vertices by Fisher-Yates (for i = n-1 down to 1, swap position i with
//     position w % (i+1)), then for each cross pair in the same order draws
//     w and orients the pair from the lower-ranked to the higher-ranked
//     vertex when (w >> 11) * 2^-53 < forward_probability, otherwise the
//     other way.

#include <cstddef>
#include <cstdint>
#include <span>

#include "mstep/graph.hpp"

namespace mstep {

struct Instance {
  Digraph digraph;
  PartiteStructure parts;
};

/// Every cross-part pair gets exactly one arc with a uniformly random
/// direction. Throws std::invalid_argument for fewer than two parts or an
/// empty part.
Instance random_multipartite_tournament(std::span<const std::size_t> part_sizes,
                                        std::uint64_t seed);

/// Like random_multipartite_tournament, but arcs follow a random vertex
/// ranking with probability `forward_probability` in [0, 1]. Values near 1
/// produce long chains of trivial strong components.
Instance random_ranked_multipartite_tournament(std::span<const std::size_t> part_sizes,
                                               std::uint64_t seed,
                                               double forward_probability);

}  // namespace mstep
