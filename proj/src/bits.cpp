#include "mstep/bits.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace mstep {

namespace {

void check_index(std::size_t v, std::size_t universe) {
  if (v >= universe) {
    throw std::out_of_range("vertex " + std::to_string(v) +
                            " outside universe of size " + std::to_string(universe));
  }
}

Word tail_mask(std::size_t universe) {
  const std::size_t used = universe % kWordBits;
  return used == 0 ? ~Word{0} : (Word{1} << used) - 1;
}

}  // namespace

VertexSet::VertexSet(std::size_t universe)
    : universe_(universe), words_(words_for(universe), 0) {}

VertexSet::VertexSet(std::size_t universe, std::initializer_list<std::size_t> members)
    : VertexSet(universe) {
  for (std::size_t v : members) insert(v);
}

VertexSet VertexSet::full(std::size_t universe) {
  VertexSet s(universe);
  std::fill(s.words_.begin(), s.words_.end(), ~Word{0});
  if (!s.words_.empty()) s.words_.back() &= tail_mask(universe);
  return s;
}

VertexSet VertexSet::from_words(std::size_t universe, std::span<const Word> words) {
  if (words.size() != words_for(universe)) {
    throw std::invalid_argument("word count does not match universe");
  }
  VertexSet s(universe);
  std::copy(words.begin(), words.end(), s.words_.begin());
  if (!s.words_.empty()) s.words_.back() &= tail_mask(universe);
  return s;
}

VertexSet VertexSet::from_members(std::size_t universe,
                                  std::span<const std::size_t> members) {
  VertexSet s(universe);
  for (std::size_t v : members) s.insert(v);
  return s;
}

void VertexSet::insert(std::size_t v) {
  check_index(v, universe_);
  words_[v / kWordBits] |= Word{1} << (v % kWordBits);
}

void VertexSet::erase(std::size_t v) {
  check_index(v, universe_);
  words_[v / kWordBits] &= ~(Word{1} << (v % kWordBits));
}

bool VertexSet::contains(std::size_t v) const {
  if (v >= universe_) return false;
  return (words_[v / kWordBits] >> (v % kWordBits)) & 1U;
}

std::size_t VertexSet::size() const {
  std::size_t total = 0;
  for (Word w : words_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

bool VertexSet::empty() const {
  return std::all_of(words_.begin(), words_.end(), [](Word w) { return w == 0; });
}

std::optional<std::size_t> VertexSet::lowest() const {
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if (words_[w] != 0) {
      return w * kWordBits + static_cast<std::size_t>(std::countr_zero(words_[w]));
    }
  }
  return std::nullopt;
}

std::vector<std::size_t> VertexSet::members() const {
  std::vector<std::size_t> out;
  out.reserve(size());
  for_each([&](std::size_t v) { out.push_back(v); });
  return out;
}

void VertexSet::require_same_universe(const VertexSet& other) const {
  if (universe_ != other.universe_) {
    throw std::invalid_argument("vertex sets over different universes");
  }
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
  require_same_universe(other);
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if ((words_[w] & ~other.words_[w]) != 0) return false;
  }
  return true;
}

bool VertexSet::intersects(const VertexSet& other) const {
  require_same_universe(other);
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if ((words_[w] & other.words_[w]) != 0) return true;
  }
  return false;
}

VertexSet& VertexSet::operator|=(const VertexSet& other) {
  require_same_universe(other);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= other.words_[w];
  return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& other) {
  require_same_universe(other);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= other.words_[w];
  return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& other) {
  require_same_universe(other);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= ~other.words_[w];
  return *this;
}

BoolMatrix::BoolMatrix(std::size_t n)
    : n_(n), stride_(words_for(n)), bits_(n * words_for(n), 0) {}

BoolMatrix BoolMatrix::identity(std::size_t n) {
  BoolMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i);
  return m;
}

bool BoolMatrix::get(std::size_t i, std::size_t j) const {
  check_index(i, n_);
  check_index(j, n_);
  return (bits_[i * stride_ + j / kWordBits] >> (j % kWordBits)) & 1U;
}

void BoolMatrix::set(std::size_t i, std::size_t j, bool value) {
  check_index(i, n_);
  check_index(j, n_);
  Word& w = bits_[i * stride_ + j / kWordBits];
  const Word mask = Word{1} << (j % kWordBits);
  w = value ? (w | mask) : (w & ~mask);
}

BoolMatrix BoolMatrix::transpose() const {
  BoolMatrix t(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    row_set(i).for_each([&](std::size_t j) { t.set(j, i); });
  }
  return t;
}

bool BoolMatrix::is_symmetric() const { return *this == transpose(); }

bool BoolMatrix::diagonal_clear() const {
  for (std::size_t i = 0; i < n_; ++i) {
    if (get(i, i)) return false;
  }
  return true;
}

void BoolMatrix::clear_diagonal() {
  for (std::size_t i = 0; i < n_; ++i) set(i, i, false);
}

std::size_t BoolMatrix::count() const {
  std::size_t total = 0;
  for (Word w : bits_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

std::size_t BoolMatrix::hash() const {
  // FNV-1a over the words, then a splitmix finalizer.
  std::uint64_t h = 1469598103934665603ULL ^ n_;
  for (Word w : bits_) {
    h ^= w;
    h *= 1099511628211ULL;
  }
  h ^= h >> 30;
  h *= 0xbf58476d1ce4e5b9ULL;
  h ^= h >> 27;
  h *= 0x94d049bb133111ebULL;
  h ^= h >> 31;
  return static_cast<std::size_t>(h);
}

BoolMatrix bool_mul(const BoolMatrix& a, const BoolMatrix& b) {
  if (a.order() != b.order()) {
    throw std::invalid_argument("bool_mul: order mismatch (" + std::to_string(a.order()) +
                                " vs " + std::to_string(b.order()) + ")");
  }
  const std::size_t n = a.order();
  BoolMatrix c(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::span<Word> out = c.row(i);
    a.row_set(i).for_each([&](std::size_t k) {
      std::span<const Word> in = b.row(k);
      for (std::size_t w = 0; w < out.size(); ++w) out[w] |= in[w];
    });
  }
  return c;
}

BoolMatrix gram_product(const BoolMatrix& p) {
  const std::size_t n = p.order();
  BoolMatrix c(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::span<const Word> ri = p.row(i);
    for (std::size_t j = i; j < n; ++j) {
      std::span<const Word> rj = p.row(j);
      bool meet = false;
      for (std::size_t w = 0; w < ri.size() && !meet; ++w) meet = (ri[w] & rj[w]) != 0;
      if (meet) {
        c.set(i, j);
        c.set(j, i);
      }
    }
  }
  return c;
}

BoolMatrix walk_product(const BoolMatrix& a, std::size_t m) {
  if (m == 0) throw std::invalid_argument("walk_product: m must be at least 1");
  BoolMatrix power = a;
  for (std::size_t step = 1; step < m; ++step) power = bool_mul(power, a);
  return gram_product(power);
}

BoolMatrix competition_matrix(const BoolMatrix& a, std::size_t m) {
  if (m == 0) throw std::invalid_argument("competition_matrix: m must be at least 1");
  BoolMatrix c = walk_product(a, m);
  c.clear_diagonal();
  return c;
}

}  // namespace mstep
