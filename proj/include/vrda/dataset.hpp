#ifndef VRDA_DATASET_HPP
#define VRDA_DATASET_HPP

#include <stdexcept>
#include <vector>

#include "vrda/sparse_vector.hpp"

namespace vrda {

/// A labeled example. Labels are exactly +1 or -1.
struct Example {
  SparseVector x;
  int y = 1;

  Example() = default;
  Example(SparseVector x_, int y_) : x(std::move(x_)), y(y_) {
    if (y != 1 && y != -1)
      throw std::invalid_argument("Example: label must be +1 or -1");
  }
};

/// Ordered sequence of examples over a common feature dimension.
/// Order is significant: it is the online presentation order.
class Dataset {
 public:
  Dataset() = default;
  explicit Dataset(std::size_t dim) : dim_(dim) {}

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return examples_.size(); }
  bool empty() const { return examples_.empty(); }

  const Example& operator[](std::size_t i) const { return examples_[i]; }
  const std::vector<Example>& examples() const { return examples_; }

  void add(Example e) {
    if (e.x.dim() != dim_)
      throw std::invalid_argument("Dataset: example dimension mismatch");
    examples_.push_back(std::move(e));
  }

  auto begin() const { return examples_.begin(); }
  auto end() const { return examples_.end(); }

 private:
  std::size_t dim_ = 0;
  std::vector<Example> examples_;
};

}  // namespace vrda

#endif
