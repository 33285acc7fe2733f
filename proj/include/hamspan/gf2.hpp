#ifndef HAMSPAN_GF2_HPP
#define HAMSPAN_GF2_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace hamspan {

// Vector over GF(2) indexed by edge positions 0..dimension-1. Addition is
// bitwise XOR, i.e. symmetric difference of the supports.
class EdgeVector {
 public:
  EdgeVector() = default;
  explicit EdgeVector(int dimension);
  static EdgeVector from_support(int dimension, const std::vector<int>& positions);

  int dimension() const { return dim_; }
  bool test(int pos) const { return (words_[pos >> 6] >> (pos & 63)) & 1; }
  void set(int pos) { words_[pos >> 6] |= 1ull << (pos & 63); }
  void reset(int pos) { words_[pos >> 6] &= ~(1ull << (pos & 63)); }
  void flip(int pos) { words_[pos >> 6] ^= 1ull << (pos & 63); }

  bool is_zero() const;
  int popcount() const;
  int parity() const { return popcount() & 1; }
  // Lowest set position, -1 when zero.
  int leading() const;
  std::vector<int> support() const;

  EdgeVector& operator^=(const EdgeVector& other);
  friend EdgeVector operator^(EdgeVector a, const EdgeVector& b) { return a ^= b; }
  bool operator==(const EdgeVector&) const = default;

 private:
  int dim_ = 0;
  std::vector<uint64_t> words_;
};

EdgeVector vector_add(const EdgeVector& a, const EdgeVector& b);

// Incrementally maintained reduced row echelon basis. Each row owns a
// distinct pivot (its lowest set bit) and every pivot column is clear in all
// other rows, so a span query is one ascending sweep.
//
// With combination tracking enabled, each row also carries the set of
// inserted vectors it is a XOR of, which makes span witnesses expressible
// in terms of the original insertion sequence.
class Gf2Basis {
 public:
  explicit Gf2Basis(int dimension, bool track_combinations = false);

  int dimension() const { return dim_; }
  int rank() const { return static_cast<int>(rows_.size()); }
  const std::vector<EdgeVector>& rows() const { return rows_; }

  // Returns true iff v was outside the span (rank grew by one).
  bool insert(const EdgeVector& v);

  bool contains(const EdgeVector& v) const;

  // Indices (into the insertion sequence) of vectors whose XOR equals v;
  // nullopt if v is outside the span. Requires combination tracking.
  std::optional<std::vector<int>> witness(const EdgeVector& v) const;

 private:
  struct Comb {
    std::vector<uint64_t> bits;
    void flip(int i);
    void operator^=(const Comb& other);
  };

  int dim_ = 0;
  bool track_ = false;
  int inserted_ = 0;
  std::vector<EdgeVector> rows_;   // ascending pivot order
  std::vector<Comb> combs_;        // parallel to rows_ when tracking
};

// GF(2) rank of a list of vectors (order-independent). Empty list -> 0.
int rank_of(std::span<const EdgeVector> vectors);
int rank_of(const std::vector<EdgeVector>& vectors);

// Golden-test dump: one line per position, "label b b b ..." with one 0/1
// entry per column vector, matching the row-per-edge matrix layout.
std::string dump_matrix(const std::vector<std::string>& row_labels,
                        const std::vector<EdgeVector>& columns);

}  // namespace hamspan

#endif
