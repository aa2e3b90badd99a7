#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "mlq/bigint.hpp"
#include "mlq/combinatorics.hpp"

namespace mlq {

// Species multiplicity vector m = (m_1, ..., m_n). Row i of a multiline
// queue of this type carries S_i = m_1 + ... + m_i entries, and a placement
// uses the integers 1..N with N = S_1 + ... + S_n. Zero multiplicities are
// allowed; they produce rows that pass every entry straight through.
class TypeVector {
 public:
  explicit TypeVector(std::vector<long long> m) : m_(std::move(m)) {
    if (m_.empty()) throw std::invalid_argument("TypeVector: need n >= 1");
    long long run = 0;
    for (long long v : m_) {
      if (v < 0) throw std::invalid_argument("TypeVector: negative multiplicity");
      run += v;
      prefix_.push_back(run);
      total_ += run;
    }
  }

  TypeVector(std::initializer_list<long long> m)
      : TypeVector(std::vector<long long>(m)) {}

  static TypeVector ones(int n) {
    return TypeVector(std::vector<long long>(static_cast<std::size_t>(n), 1));
  }

  // m_{s,t} = (s, t, n - s - t), the three-species projection type.
  static TypeVector three_species(long long s, long long t, long long n) {
    if (s < 0 || t < 0 || s + t > n)
      throw std::invalid_argument("TypeVector: invalid (s,t,n)");
    return TypeVector({s, t, n - s - t});
  }

  // (s, n - s), the two-species type.
  static TypeVector two_species(long long s, long long n) {
    if (s <= 0 || s >= n)
      throw std::invalid_argument("TypeVector: need 0 < s < n");
    return TypeVector({s, n - s});
  }

  int n() const { return static_cast<int>(m_.size()); }
  const std::vector<long long>& m() const { return m_; }
  long long multiplicity(int i) const {  // 1-based
    return m_[static_cast<std::size_t>(i - 1)];
  }
  long long row_size(int i) const {  // S_i, 1-based
    return prefix_[static_cast<std::size_t>(i - 1)];
  }
  long long total() const { return total_; }  // N

  long long word_length() const { return prefix_.back(); }  // S_n

  BigInt placement_count() const {
    std::vector<long long> parts(prefix_.begin(), prefix_.end());
    return multinomial(total_, parts);
  }

  friend bool operator==(const TypeVector& a, const TypeVector& b) {
    return a.m_ == b.m_;
  }
  friend bool operator!=(const TypeVector& a, const TypeVector& b) {
    return !(a == b);
  }

  std::string to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < m_.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(m_[i]);
    }
    return s + ")";
  }

 private:
  std::vector<long long> m_;
  std::vector<long long> prefix_;
  long long total_ = 0;
};

}  // namespace mlq
