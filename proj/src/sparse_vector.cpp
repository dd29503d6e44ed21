#include "vrda/sparse_vector.hpp"

#include <algorithm>
#include <cmath>

namespace vrda {

SparseVector::SparseVector(std::size_t dim, std::vector<Entry> entries)
    : dim_(dim) {
  std::sort(entries.begin(), entries.end(),
            [](const Entry& a, const Entry& b) { return a.first < b.first; });
  entries_.reserve(entries.size());
  for (const Entry& e : entries) {
    if (e.first >= dim_)
      throw std::invalid_argument("SparseVector: index out of range");
    if (!entries_.empty() && entries_.back().first == e.first)
      entries_.back().second += e.second;
    else
      entries_.push_back(e);
  }
  entries_.erase(std::remove_if(entries_.begin(), entries_.end(),
                                [](const Entry& e) { return e.second == 0.0; }),
                 entries_.end());
}

double SparseVector::at(std::size_t i) const {
  auto it = std::lower_bound(
      entries_.begin(), entries_.end(), i,
      [](const Entry& e, std::size_t idx) { return e.first < idx; });
  if (it != entries_.end() && it->first == i) return it->second;
  return 0.0;
}

void SparseVector::set(std::size_t i, double value) {
  if (i >= dim_) throw std::invalid_argument("SparseVector: index out of range");
  auto it = std::lower_bound(
      entries_.begin(), entries_.end(), i,
      [](const Entry& e, std::size_t idx) { return e.first < idx; });
  if (it != entries_.end() && it->first == i) {
    if (value == 0.0)
      entries_.erase(it);
    else
      it->second = value;
  } else if (value != 0.0) {
    entries_.insert(it, {i, value});
  }
}

double SparseVector::dot(const SparseVector& other) const {
  check_same_dim(other);
  double sum = 0.0;
  auto a = entries_.begin();
  auto b = other.entries_.begin();
  while (a != entries_.end() && b != other.entries_.end()) {
    if (a->first < b->first)
      ++a;
    else if (b->first < a->first)
      ++b;
    else {
      sum += a->second * b->second;
      ++a;
      ++b;
    }
  }
  return sum;
}

double SparseVector::l2_norm() const {
  double sum = 0.0;
  for (const Entry& e : entries_) sum += e.second * e.second;
  return std::sqrt(sum);
}

double SparseVector::l1_norm() const {
  double sum = 0.0;
  for (const Entry& e : entries_) sum += std::abs(e.second);
  return sum;
}

SparseVector SparseVector::add_scaled(const SparseVector& other,
                                      double alpha) const {
  check_same_dim(other);
  SparseVector out(dim_);
  out.entries_.reserve(entries_.size() + other.entries_.size());
  auto a = entries_.begin();
  auto b = other.entries_.begin();
  auto push = [&out](std::size_t i, double v) {
    if (v != 0.0) out.entries_.push_back({i, v});
  };
  while (a != entries_.end() && b != other.entries_.end()) {
    if (a->first < b->first) {
      push(a->first, a->second);
      ++a;
    } else if (b->first < a->first) {
      push(b->first, alpha * b->second);
      ++b;
    } else {
      push(a->first, a->second + alpha * b->second);
      ++a;
      ++b;
    }
  }
  for (; a != entries_.end(); ++a) push(a->first, a->second);
  for (; b != other.entries_.end(); ++b) push(b->first, alpha * b->second);
  return out;
}

SparseVector SparseVector::scaled(double alpha) const {
  SparseVector out(dim_);
  out.entries_.reserve(entries_.size());
  for (const Entry& e : entries_) {
    double v = alpha * e.second;
    if (v != 0.0) out.entries_.push_back({e.first, v});
  }
  return out;
}

}  // namespace vrda
