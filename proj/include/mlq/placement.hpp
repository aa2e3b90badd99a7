#pragma once

#include <algorithm>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "mlq/typevector.hpp"

namespace mlq {

// Placement of a continuous multiline queue: row i holds S_i of the
// integers 1..N in increasing order, and the rows partition {1,...,N}.
// Row sizes determine the type vector (m_i = S_i - S_{i-1}).
class Placement {
 public:
  Placement() = default;

  explicit Placement(std::vector<std::vector<long long>> rows)
      : rows_(std::move(rows)) {
    if (rows_.empty()) throw std::invalid_argument("Placement: no rows");
  }

  Placement(std::initializer_list<std::vector<long long>> rows)
      : Placement(std::vector<std::vector<long long>>(rows)) {}

  const std::vector<std::vector<long long>>& rows() const { return rows_; }
  int row_count() const { return static_cast<int>(rows_.size()); }
  const std::vector<long long>& row(int i) const {  // 1-based
    return rows_[static_cast<std::size_t>(i - 1)];
  }

  long long total() const {
    long long n = 0;
    for (const auto& r : rows_) n += static_cast<long long>(r.size());
    return n;
  }

  // The type whose S_i equal the observed row sizes, if the sizes are
  // weakly increasing.
  std::optional<TypeVector> inferred_type() const {
    std::vector<long long> m;
    long long prev = 0;
    for (const auto& r : rows_) {
      long long len = static_cast<long long>(r.size());
      if (len < prev) return std::nullopt;
      m.push_back(len - prev);
      prev = len;
    }
    return TypeVector(std::move(m));
  }

  friend bool operator==(const Placement& a, const Placement& b) {
    return a.rows_ == b.rows_;
  }
  friend bool operator!=(const Placement& a, const Placement& b) {
    return !(a == b);
  }

 private:
  std::vector<std::vector<long long>> rows_;
};

// True iff row lengths match the S_i of `type`, every row strictly
// increases, and the entries are a permutation of {1,...,N}.
inline bool validate_placement(const Placement& p, const TypeVector& type) {
  if (p.row_count() != type.n()) return false;
  long long total = type.total();
  std::vector<char> seen(static_cast<std::size_t>(total) + 1, 0);
  for (int i = 1; i <= type.n(); ++i) {
    const auto& row = p.row(i);
    if (static_cast<long long>(row.size()) != type.row_size(i)) return false;
    for (std::size_t k = 0; k < row.size(); ++k) {
      long long v = row[k];
      if (v < 1 || v > total) return false;
      if (seen[static_cast<std::size_t>(v)]) return false;
      seen[static_cast<std::size_t>(v)] = 1;
      if (k > 0 && row[k - 1] >= v) return false;
    }
  }
  return true;
}

inline void require_valid_placement(const Placement& p, const TypeVector& type) {
  if (!validate_placement(p, type))
    throw std::invalid_argument("invalid placement for type " + type.to_string());
}

// Rank encoding of real particle positions: row i of `positions` holds the
// horizontal coordinates of the row-i particles; every coordinate must be
// distinct. Each particle is replaced by the rank of its coordinate among
// all N of them, which is the only data the projection ever uses.
inline Placement placement_from_positions(
    const std::vector<std::vector<double>>& positions) {
  std::vector<double> all;
  for (const auto& row : positions) all.insert(all.end(), row.begin(), row.end());
  std::sort(all.begin(), all.end());
  for (std::size_t i = 1; i < all.size(); ++i)
    if (all[i] == all[i - 1])
      throw std::invalid_argument("positions must be pairwise distinct");
  std::vector<std::vector<long long>> rows;
  for (const auto& row : positions) {
    std::vector<long long> ranks;
    for (double x : row) {
      auto it = std::lower_bound(all.begin(), all.end(), x);
      ranks.push_back(static_cast<long long>(it - all.begin()) + 1);
    }
    std::sort(ranks.begin(), ranks.end());
    rows.push_back(std::move(ranks));
  }
  return Placement(std::move(rows));
}

// Shift operator: add 1 mod N to every entry (N maps to 1) and re-sort
// each row. Applying it N times is the identity.
inline Placement shift(const Placement& p) {
  long long total = p.total();
  std::vector<std::vector<long long>> rows = p.rows();
  for (auto& row : rows) {
    for (auto& v : row) v = v % total + 1;
    std::sort(row.begin(), row.end());
  }
  return Placement(std::move(rows));
}

// --- Text format -----------------------------------------------------------
// One row per line, entries space-separated. The canonical form emitted by
// serialize_placement round-trips bit-exactly through parse_placement.

struct PlacementParseError : std::runtime_error {
  PlacementParseError(int line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message),
        line_number(line) {}
  int line_number;
};

inline Placement parse_placement(const std::string& text) {
  std::vector<std::vector<long long>> rows;
  std::istringstream in(text);
  std::string line;
  int line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    // A whitespace-only line is an empty row; types with m_1 = 0 have those.
    std::istringstream ls(line);
    std::vector<long long> row;
    std::string tok;
    while (ls >> tok) {
      try {
        std::size_t used = 0;
        long long v = std::stoll(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        row.push_back(v);
      } catch (const std::exception&) {
        throw PlacementParseError(line_number, "not an integer: '" + tok + "'");
      }
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw PlacementParseError(line_number, "no rows");
  Placement p(std::move(rows));
  auto type = p.inferred_type();
  if (!type)
    throw PlacementParseError(line_number, "row sizes must weakly increase");
  if (!validate_placement(p, *type))
    throw PlacementParseError(line_number, "rows are not a sorted partition of 1..N");
  return p;
}

inline std::string serialize_placement(const Placement& p) {
  std::string out;
  for (const auto& row : p.rows()) {
    for (std::size_t k = 0; k < row.size(); ++k) {
      if (k) out += ' ';
      out += std::to_string(row[k]);
    }
    out += '\n';
  }
  return out;
}

}  // namespace mlq
