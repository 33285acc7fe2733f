#include "hamspan/gf2.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

namespace hamspan {

namespace {
int words_for(int dim) { return (dim + 63) / 64; }

void require_same_dim(int a, int b) {
  if (a != b) throw std::invalid_argument("EdgeVector dimension mismatch");
}
}  // namespace

EdgeVector::EdgeVector(int dimension) : dim_(dimension) {
  if (dimension < 0) throw std::invalid_argument("negative dimension");
  words_.assign(words_for(dimension), 0);
}

EdgeVector EdgeVector::from_support(int dimension, const std::vector<int>& positions) {
  EdgeVector v(dimension);
  for (int p : positions) {
    if (p < 0 || p >= dimension) throw std::invalid_argument("support position out of range");
    if (v.test(p)) throw std::invalid_argument("duplicate support position");
    v.set(p);
  }
  return v;
}

bool EdgeVector::is_zero() const {
  for (uint64_t w : words_)
    if (w) return false;
  return true;
}

int EdgeVector::popcount() const {
  int c = 0;
  for (uint64_t w : words_) c += std::popcount(w);
  return c;
}

int EdgeVector::leading() const {
  for (size_t i = 0; i < words_.size(); ++i)
    if (words_[i]) return static_cast<int>(i * 64 + std::countr_zero(words_[i]));
  return -1;
}

std::vector<int> EdgeVector::support() const {
  std::vector<int> out;
  for (size_t i = 0; i < words_.size(); ++i) {
    uint64_t w = words_[i];
    while (w) {
      out.push_back(static_cast<int>(i * 64 + std::countr_zero(w)));
      w &= w - 1;
    }
  }
  return out;
}

EdgeVector& EdgeVector::operator^=(const EdgeVector& other) {
  require_same_dim(dim_, other.dim_);
  for (size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
  return *this;
}

EdgeVector vector_add(const EdgeVector& a, const EdgeVector& b) { return a ^ b; }

void Gf2Basis::Comb::flip(int i) {
  size_t word = i >> 6;
  if (word >= bits.size()) bits.resize(word + 1, 0);
  bits[word] ^= 1ull << (i & 63);
}

void Gf2Basis::Comb::operator^=(const Comb& other) {
  if (other.bits.size() > bits.size()) bits.resize(other.bits.size(), 0);
  for (size_t i = 0; i < other.bits.size(); ++i) bits[i] ^= other.bits[i];
}

Gf2Basis::Gf2Basis(int dimension, bool track_combinations)
    : dim_(dimension), track_(track_combinations) {
  if (dimension < 0) throw std::invalid_argument("negative dimension");
}

bool Gf2Basis::insert(const EdgeVector& v) {
  require_same_dim(dim_, v.dimension());
  EdgeVector residual = v;
  Comb comb;
  if (track_) comb.flip(inserted_);
  ++inserted_;
  for (size_t r = 0; r < rows_.size(); ++r) {
    int p = rows_[r].leading();
    if (residual.test(p)) {
      residual ^= rows_[r];
      if (track_) comb ^= combs_[r];
    }
  }
  if (residual.is_zero()) return false;

  int pivot = residual.leading();
  // Clear the new pivot column everywhere else to keep the basis reduced.
  for (size_t r = 0; r < rows_.size(); ++r) {
    if (rows_[r].test(pivot)) {
      rows_[r] ^= residual;
      if (track_) combs_[r] ^= comb;
    }
  }
  auto at = std::lower_bound(rows_.begin(), rows_.end(), pivot,
                             [](const EdgeVector& row, int p) { return row.leading() < p; });
  size_t idx = static_cast<size_t>(at - rows_.begin());
  rows_.insert(at, std::move(residual));
  if (track_) combs_.insert(combs_.begin() + idx, std::move(comb));
  return true;
}

bool Gf2Basis::contains(const EdgeVector& v) const {
  require_same_dim(dim_, v.dimension());
  EdgeVector residual = v;
  for (const auto& row : rows_) {
    int p = row.leading();
    if (residual.test(p)) residual ^= row;
  }
  return residual.is_zero();
}

std::optional<std::vector<int>> Gf2Basis::witness(const EdgeVector& v) const {
  if (!track_) throw std::logic_error("witness requires combination tracking");
  require_same_dim(dim_, v.dimension());
  EdgeVector residual = v;
  Comb comb;
  for (size_t r = 0; r < rows_.size(); ++r) {
    int p = rows_[r].leading();
    if (residual.test(p)) {
      residual ^= rows_[r];
      comb ^= combs_[r];
    }
  }
  if (!residual.is_zero()) return std::nullopt;
  std::vector<int> indices;
  for (size_t w = 0; w < comb.bits.size(); ++w) {
    uint64_t bits = comb.bits[w];
    while (bits) {
      indices.push_back(static_cast<int>(w * 64 + std::countr_zero(bits)));
      bits &= bits - 1;
    }
  }
  return indices;
}

int rank_of(std::span<const EdgeVector> vectors) {
  if (vectors.empty()) return 0;
  Gf2Basis basis(vectors.front().dimension());
  for (const auto& v : vectors) basis.insert(v);
  return basis.rank();
}

int rank_of(const std::vector<EdgeVector>& vectors) {
  return rank_of(std::span<const EdgeVector>(vectors));
}

std::string dump_matrix(const std::vector<std::string>& row_labels,
                        const std::vector<EdgeVector>& columns) {
  for (const auto& col : columns)
    if (col.dimension() != static_cast<int>(row_labels.size()))
      throw std::invalid_argument("dump_matrix: column dimension != label count");
  std::ostringstream out;
  for (size_t row = 0; row < row_labels.size(); ++row) {
    out << row_labels[row];
    for (const auto& col : columns) out << ' ' << (col.test(static_cast<int>(row)) ? '1' : '0');
    out << '\n';
  }
  return out.str();
}

}  // namespace hamspan
