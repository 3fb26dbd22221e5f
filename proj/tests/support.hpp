#pragma once

// Fixtures and independent reference computations shared by the tests. None
// of the helpers here call into the classifier; the structural ones only
// read StructureReport fields.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "mstep/generator.hpp"
#include "mstep/graph.hpp"
#include "mstep/structure.hpp"

namespace mstep::testing {

// Reference digraphs, rows v1..v6 mapped to vertices 0..5.
inline constexpr const char* kA1 =
    "001011\n"
    "001011\n"
    "000000\n"
    "110010\n"
    "001000\n"
    "001100\n";

inline constexpr const char* kA2 =
    "000011\n"
    "000011\n"
    "000000\n"
    "111010\n"
    "001000\n"
    "001100\n";

inline constexpr const char* kThreeParts =
    "011101\n"
    "000011\n"
    "000011\n"
    "000000\n"
    "100100\n"
    "000100\n";

// A_1^m (A_1^T)^m for m = 3a+2, 3a+3, 3a+4, diagonal included.
inline constexpr const char* kA1Residue2 =
    "110100\n110100\n000000\n110101\n000000\n000101\n";
inline constexpr const char* kA1Residue0 =
    "110001\n110001\n000000\n000101\n000000\n110101\n";
inline constexpr const char* kA1Residue1 =
    "110101\n110101\n000000\n110100\n000000\n110001\n";

// Limit of A_2^m (A_2^T)^m, diagonal included.
inline constexpr const char* kA2Limit =
    "110101\n110101\n000000\n110101\n000000\n110101\n";

Digraph digraph_from_text(const char* rows);

/// A printed A^m (A^T)^m matrix with its diagonal cleared, i.e. the
/// adjacency matrix of C^m(D).
BoolMatrix competition_rows(const char* rows);

/// Uniform random digraph without loops: each ordered pair is an arc with
/// probability p. Not a tournament in general.
Digraph random_digraph(std::size_t n, double p, std::uint64_t seed);

/// Random part sizes with k parts and n vertices, drawn from `seed`.
std::vector<std::size_t> random_sizes(std::size_t k, std::size_t n, std::uint64_t seed);

/// gcd of the lengths of all directed cycles inside `vertices`, by
/// exhaustive enumeration of simple cycles. 0 if there is none.
std::size_t cycle_length_gcd(const Digraph& d, const VertexSet& vertices);

/// Whether `vertices` induces a strongly connected subdigraph, by
/// reachability closure.
bool strongly_connected(const Digraph& d, const VertexSet& vertices);

/// The divergence criterion evaluated directly from structural data:
/// returns the flags (a), (b), (c), (i), (ii), (iii) in that order.
std::vector<bool> divergence_flags(const StructureReport& report);

/// Head cliques K^(1)..K^(4) of the kappa-3 templates from phase sets:
/// vertex u in U_c has phase {c}; a head vertex x collects (phase(y) - 1)
/// mod 3 over its out-neighbours y, iterated to a fixpoint. Full phase
/// {0,1,2} gives K^(1); {0,1}, {0,2}, {1,2} give K^(2), K^(3), K^(4).
std::vector<VertexSet> phase_set_heads(const Digraph& d, const StructureReport& report);

/// Random strong multipartite tournament with the given sizes, by rejection
/// over seeds starting at `seed`. Throws after 100000 rejections, e.g. for
/// two parts where one is a single vertex, which can never be strong.
Instance random_strong_instance(std::span<const std::size_t> sizes, std::uint64_t seed);

}  // namespace mstep::testing
