#pragma once

#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "mlq/placement.hpp"
#include "mlq/typevector.hpp"

namespace mlq {

// Discrete multiline queue: n rows of L ring sites each, row i listing its
// S_i occupied sites in increasing order. Sites are 1-based.
class DiscreteMLQ {
 public:
  DiscreteMLQ(long long sites, std::vector<std::vector<long long>> rows)
      : sites_(sites), rows_(std::move(rows)) {
    if (sites_ <= 0) throw std::invalid_argument("DiscreteMLQ: need L >= 1");
    if (rows_.empty()) throw std::invalid_argument("DiscreteMLQ: no rows");
    for (const auto& row : rows_) {
      if (static_cast<long long>(row.size()) > sites_)
        throw std::invalid_argument("DiscreteMLQ: row larger than ring");
      for (std::size_t k = 0; k < row.size(); ++k) {
        if (row[k] < 1 || row[k] > sites_)
          throw std::invalid_argument("DiscreteMLQ: site out of range");
        if (k > 0 && row[k - 1] >= row[k])
          throw std::invalid_argument("DiscreteMLQ: sites must increase");
      }
    }
  }

  long long sites() const { return sites_; }
  int row_count() const { return static_cast<int>(rows_.size()); }
  const std::vector<std::vector<long long>>& rows() const { return rows_; }
  const std::vector<long long>& row(int i) const {  // 1-based
    return rows_[static_cast<std::size_t>(i - 1)];
  }

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

  // Rank encoding: when all occupied sites (across every row) are at
  // pairwise distinct positions, replacing each site by its rank among all
  // occupied sites gives a Placement of the same type.
  std::optional<Placement> rank_encoding() const {
    std::vector<long long> all;
    for (const auto& r : rows_) all.insert(all.end(), r.begin(), r.end());
    std::sort(all.begin(), all.end());
    for (std::size_t i = 1; i < all.size(); ++i)
      if (all[i] == all[i - 1]) return std::nullopt;
    std::vector<std::vector<long long>> rows;
    for (const auto& r : rows_) {
      std::vector<long long> out;
      for (long long site : r) {
        auto it = std::lower_bound(all.begin(), all.end(), site);
        out.push_back(static_cast<long long>(it - all.begin()) + 1);
      }
      rows.push_back(std::move(out));
    }
    return Placement(std::move(rows));
  }

 private:
  long long sites_;
  std::vector<std::vector<long long>> rows_;
};

// Text format: first line is the ring length L, then one row of occupied
// sites per line (possibly empty). Round-trips bit-exactly.

inline DiscreteMLQ parse_discrete_mlq(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line))
    throw PlacementParseError(1, "missing ring length header");
  long long sites = 0;
  try {
    std::size_t used = 0;
    sites = std::stoll(line, &used);
    std::istringstream rest(line.substr(used));
    std::string extra;
    if (rest >> extra) throw std::invalid_argument(extra);
  } catch (const std::exception&) {
    throw PlacementParseError(1, "ring length must be a single integer");
  }
  std::vector<std::vector<long long>> rows;
  int line_number = 1;
  while (std::getline(in, line)) {
    ++line_number;
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
  try {
    DiscreteMLQ q(sites, std::move(rows));
    if (!q.inferred_type())
      throw PlacementParseError(line_number, "row sizes must weakly increase");
    return q;
  } catch (const std::invalid_argument& e) {
    throw PlacementParseError(line_number, e.what());
  }
}

inline std::string serialize_discrete_mlq(const DiscreteMLQ& q) {
  std::string out = std::to_string(q.sites()) + "\n";
  for (const auto& row : q.rows()) {
    for (std::size_t k = 0; k < row.size(); ++k) {
      if (k) out += ' ';
      out += std::to_string(row[k]);
    }
    out += '\n';
  }
  return out;
}

}  // namespace mlq
