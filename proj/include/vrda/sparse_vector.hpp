#ifndef VRDA_SPARSE_VECTOR_HPP
#define VRDA_SPARSE_VECTOR_HPP

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <utility>
#include <vector>

namespace vrda {

/// Sparse vector over an n-dimensional feature space, stored as
/// index-sorted (index, value) pairs. Canonical form: no entry holds an
/// exact zero, every index is < dim(). Equality is entry-set equality.
class SparseVector {
 public:
  using Entry = std::pair<std::size_t, double>;

  SparseVector() = default;

  explicit SparseVector(std::size_t dim) : dim_(dim) {}

  /// Builds from arbitrary (index, value) pairs; duplicates are summed,
  /// exact zeros dropped.
  SparseVector(std::size_t dim, std::vector<Entry> entries);

  SparseVector(std::size_t dim, std::initializer_list<Entry> entries)
      : SparseVector(dim, std::vector<Entry>(entries)) {}

  std::size_t dim() const { return dim_; }
  std::size_t nnz() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  const std::vector<Entry>& entries() const { return entries_; }

  /// Value at index i (0 when not stored).
  double at(std::size_t i) const;

  /// Sets coordinate i; exact zero erases the entry.
  void set(std::size_t i, double value);

  double dot(const SparseVector& other) const;
  double l2_norm() const;
  double l1_norm() const;

  /// this + alpha * other, canonicalized (exact zeros dropped).
  SparseVector add_scaled(const SparseVector& other, double alpha) const;

  /// Coordinate-wise scaling; alpha = 0 yields the zero vector.
  SparseVector scaled(double alpha) const;

  bool operator==(const SparseVector& other) const {
    return dim_ == other.dim_ && entries_ == other.entries_;
  }
  bool operator!=(const SparseVector& other) const { return !(*this == other); }

 private:
  void check_same_dim(const SparseVector& other) const {
    if (dim_ != other.dim_)
      throw std::invalid_argument("SparseVector: dimension mismatch");
  }

  std::size_t dim_ = 0;
  std::vector<Entry> entries_;
};

inline double dot(const SparseVector& a, const SparseVector& b) {
  return a.dot(b);
}
inline double l2_norm(const SparseVector& a) { return a.l2_norm(); }
inline std::size_t nnz(const SparseVector& a) { return a.nnz(); }
inline SparseVector add_scaled(const SparseVector& a, const SparseVector& b,
                               double alpha) {
  return a.add_scaled(b, alpha);
}

}  // namespace vrda

#endif
