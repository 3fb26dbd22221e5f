#pragma once

// Bitset primitives: vertex sets and square Boolean matrices over {0,1}
// with OR as addition and AND as multiplication.

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

namespace mstep {

using Word = std::uint64_t;
inline constexpr std::size_t kWordBits = 64;

constexpr std::size_t words_for(std::size_t bits) {
  return (bits + kWordBits - 1) / kWordBits;
}

/// A subset of {0, ..., universe-1}. Bits at positions >= universe are
/// always clear.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t universe);
  VertexSet(std::size_t universe, std::initializer_list<std::size_t> members);

  static VertexSet full(std::size_t universe);
  static VertexSet from_words(std::size_t universe, std::span<const Word> words);
  static VertexSet from_members(std::size_t universe,
                                std::span<const std::size_t> members);

  std::size_t universe() const { return universe_; }
  std::span<const Word> words() const { return words_; }

  void insert(std::size_t v);
  void erase(std::size_t v);
  bool contains(std::size_t v) const;

  std::size_t size() const;
  bool empty() const;
  std::optional<std::size_t> lowest() const;
  std::vector<std::size_t> members() const;

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      Word bits = words_[w];
      while (bits != 0) {
        f(w * kWordBits + static_cast<std::size_t>(std::countr_zero(bits)));
        bits &= bits - 1;
      }
    }
  }

  bool is_subset_of(const VertexSet& other) const;
  bool intersects(const VertexSet& other) const;

  VertexSet& operator|=(const VertexSet& other);
  VertexSet& operator&=(const VertexSet& other);
  VertexSet& operator-=(const VertexSet& other);

  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  void require_same_universe(const VertexSet& other) const;

  std::size_t universe_ = 0;
  std::vector<Word> words_;
};

/// Square Boolean matrix stored as contiguous bitset rows.
class BoolMatrix {
 public:
  BoolMatrix() = default;
  explicit BoolMatrix(std::size_t n);

  static BoolMatrix identity(std::size_t n);

  std::size_t order() const { return n_; }
  std::size_t words_per_row() const { return stride_; }

  bool get(std::size_t i, std::size_t j) const;
  void set(std::size_t i, std::size_t j, bool value = true);

  std::span<const Word> row(std::size_t i) const {
    return {bits_.data() + i * stride_, stride_};
  }
  std::span<Word> row(std::size_t i) { return {bits_.data() + i * stride_, stride_}; }
  VertexSet row_set(std::size_t i) const { return VertexSet::from_words(n_, row(i)); }

  BoolMatrix transpose() const;
  bool is_symmetric() const;
  bool diagonal_clear() const;
  void clear_diagonal();
  std::size_t count() const;

  std::size_t hash() const;

  friend bool operator==(const BoolMatrix&, const BoolMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::size_t stride_ = 0;
  std::vector<Word> bits_;
};

/// Boolean product: entry (i,j) is 1 iff a(i,k) = b(k,j) = 1 for some k.
/// Throws std::invalid_argument when the orders differ.
BoolMatrix bool_mul(const BoolMatrix& a, const BoolMatrix& b);

/// P * P^T, i.e. entry (i,j) is 1 iff rows i and j of P share a column.
BoolMatrix gram_product(const BoolMatrix& p);

/// A^m (A^T)^m with the diagonal kept. Throws for m == 0.
BoolMatrix walk_product(const BoolMatrix& a, std::size_t m);

/// A^m (A^T)^m with the diagonal zeroed: the adjacency matrix of the m-step
/// competition graph of the digraph of A. Throws for m == 0.
BoolMatrix competition_matrix(const BoolMatrix& a, std::size_t m);

}  // namespace mstep
