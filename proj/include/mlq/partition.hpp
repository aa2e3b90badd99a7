#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "mlq/bigint.hpp"

namespace mlq {

// Integer partition: weakly decreasing positive parts. Trailing zeros are
// stripped at construction so there is one canonical representation; the
// empty partition is valid and has weight 0.
class Partition {
 public:
  Partition() = default;

  explicit Partition(std::vector<long long> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] <= 0)
        throw std::invalid_argument("Partition: parts must be positive");
      if (i > 0 && parts_[i] > parts_[i - 1])
        throw std::invalid_argument("Partition: parts must weakly decrease");
    }
  }

  Partition(std::initializer_list<long long> parts)
      : Partition(std::vector<long long>(parts)) {}

  const std::vector<long long>& parts() const { return parts_; }
  std::size_t rows() const { return parts_.size(); }
  bool empty() const { return parts_.empty(); }

  long long part(std::size_t i) const {  // zero-padded access
    return i < parts_.size() ? parts_[i] : 0;
  }

  long long weight() const {
    long long w = 0;
    for (long long p : parts_) w += p;
    return w;
  }

  Partition conjugate() const {
    std::vector<long long> c;
    if (parts_.empty()) return Partition();
    c.resize(static_cast<std::size_t>(parts_[0]), 0);
    for (long long p : parts_)
      for (long long j = 0; j < p; ++j) ++c[static_cast<std::size_t>(j)];
    return Partition(std::move(c));
  }

  // Containment order: every row of this fits inside the other.
  bool contained_in(const Partition& outer) const {
    for (std::size_t i = 0; i < parts_.size(); ++i)
      if (parts_[i] > outer.part(i)) return false;
    return true;
  }

  friend bool operator==(const Partition& a, const Partition& b) {
    return a.parts_ == b.parts_;
  }
  friend bool operator!=(const Partition& a, const Partition& b) {
    return !(a == b);
  }

  std::string to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(parts_[i]);
    }
    s += ")";
    return s;
  }

 private:
  std::vector<long long> parts_;
};

// Hook length of the box (i, j): arm + leg + 1.
// Returned grid is congruent to the Young diagram of the shape.
inline std::vector<std::vector<long long>> hook_lengths(const Partition& shape) {
  Partition conj = shape.conjugate();
  std::vector<std::vector<long long>> grid(shape.rows());
  for (std::size_t i = 0; i < shape.rows(); ++i) {
    grid[i].resize(static_cast<std::size_t>(shape.part(i)));
    for (long long j = 0; j < shape.part(i); ++j) {
      grid[i][static_cast<std::size_t>(j)] =
          (shape.part(i) - 1 - j) +
          (conj.part(static_cast<std::size_t>(j)) - 1 - static_cast<long long>(i)) +
          1;
    }
  }
  return grid;
}

// Skew shape outer/inner; inner must fit inside outer. inner may be empty,
// in which case the shape is the straight diagram of outer.
class SkewShape {
 public:
  SkewShape() = default;

  explicit SkewShape(Partition outer, Partition inner = Partition())
      : outer_(std::move(outer)), inner_(std::move(inner)) {
    if (!inner_.contained_in(outer_))
      throw std::invalid_argument("SkewShape: inner not contained in outer");
  }

  const Partition& outer() const { return outer_; }
  const Partition& inner() const { return inner_; }

  long long cells() const { return outer_.weight() - inner_.weight(); }
  bool is_straight() const { return inner_.empty(); }

  // True when row i occupies columns [inner.part(i), outer.part(i)).
  bool contains(std::size_t i, long long j) const {
    return i < outer_.rows() && j >= inner_.part(i) && j < outer_.part(i);
  }

  friend bool operator==(const SkewShape& a, const SkewShape& b) {
    return a.outer_ == b.outer_ && a.inner_ == b.inner_;
  }
  friend bool operator!=(const SkewShape& a, const SkewShape& b) {
    return !(a == b);
  }

  std::string to_string() const {
    if (is_straight()) return outer_.to_string();
    return outer_.to_string() + "/" + inner_.to_string();
  }

 private:
  Partition outer_;
  Partition inner_;
};

}  // namespace mlq
