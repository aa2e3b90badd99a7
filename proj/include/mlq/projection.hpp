#pragma once

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "mlq/discrete_mlq.hpp"
#include "mlq/placement.hpp"
#include "mlq/typevector.hpp"

namespace mlq {

struct PathStep {
  int row;          // 1-based
  long long value;  // placement entry, or site index in the discrete case
};

struct BullyPath {
  int type;  // row the path starts in; its endpoint receives this label
  std::vector<PathStep> steps;
};

struct WrapEvent {
  int from_row;     // 1-based; the path wrapped moving from this row down
  long long value;  // the entry (or site) the path was at when it wrapped
};

// Outcome of the bully path procedure. `word` lists the labels along the
// last row (continuous) or around the whole ring (discrete, with n+1 on
// empty sites). Every entry of the queue appears in exactly one path;
// unbullied last-row entries appear as singleton paths of type n.
struct ProjectionResult {
  std::vector<int> word;
  std::vector<BullyPath> paths;
  std::vector<WrapEvent> wraps;

  std::string word_string() const {
    std::string s;
    for (int label : word) s += std::to_string(label);
    return s;
  }
};

// Number of wrap events out of `from_row` (1-based, must be < last row).
inline int wrap_count(const ProjectionResult& result, int from_row) {
  int count = 0;
  for (const auto& w : result.wraps)
    if (w.from_row == from_row) ++count;
  return count;
}

namespace detail {

// Within each row the paths are started in the given order over the row's
// available entries. The canonical order is left to right (identity); the
// projected word does not depend on this choice, which the test suite
// verifies by trying all orders on small instances.
inline ProjectionResult project_continuous(
    const Placement& p, const std::vector<std::vector<int>>* starter_orders) {
  const int n = p.row_count();
  std::vector<std::vector<char>> avail(static_cast<std::size_t>(n));
  for (int r = 0; r < n; ++r)
    avail[static_cast<std::size_t>(r)].assign(p.rows()[static_cast<std::size_t>(r)].size(), 1);

  ProjectionResult result;
  const auto& last = p.rows().back();
  result.word.assign(last.size(), n);
  std::vector<int> word_label(last.size(), n);

  for (int r = 0; r < n - 1; ++r) {
    const auto& row = p.rows()[static_cast<std::size_t>(r)];
    std::vector<int> starters;
    for (std::size_t k = 0; k < row.size(); ++k)
      if (avail[static_cast<std::size_t>(r)][k]) starters.push_back(static_cast<int>(k));
    if (starter_orders) {
      const auto& order = (*starter_orders)[static_cast<std::size_t>(r)];
      if (order.size() != starters.size())
        throw std::invalid_argument("starter order has wrong length");
      std::vector<int> permuted(starters.size());
      for (std::size_t k = 0; k < order.size(); ++k)
        permuted[k] = starters[static_cast<std::size_t>(order[k])];
      starters = std::move(permuted);
    }
    for (int start : starters) {
      BullyPath path;
      path.type = r + 1;
      long long cur = row[static_cast<std::size_t>(start)];
      path.steps.push_back({r + 1, cur});
      avail[static_cast<std::size_t>(r)][static_cast<std::size_t>(start)] = 0;
      int landed = -1;
      for (int q = r + 1; q < n; ++q) {
        const auto& qrow = p.rows()[static_cast<std::size_t>(q)];
        auto& qavail = avail[static_cast<std::size_t>(q)];
        int pick = -1;
        for (std::size_t k = 0; k < qrow.size(); ++k)
          if (qavail[k] && qrow[k] > cur) {
            pick = static_cast<int>(k);
            break;
          }
        if (pick < 0) {
          // Wrapping: no larger entry remains, take the smallest one.
          for (std::size_t k = 0; k < qrow.size(); ++k)
            if (qavail[k]) {
              pick = static_cast<int>(k);
              break;
            }
          result.wraps.push_back({q, cur});
        }
        qavail[static_cast<std::size_t>(pick)] = 0;
        cur = qrow[static_cast<std::size_t>(pick)];
        path.steps.push_back({q + 1, cur});
        landed = pick;
      }
      word_label[static_cast<std::size_t>(landed)] = r + 1;
      result.paths.push_back(std::move(path));
    }
  }

  for (std::size_t k = 0; k < last.size(); ++k) {
    result.word[k] = word_label[k];
    if (avail.back()[k]) {
      BullyPath leftover;
      leftover.type = n;
      leftover.steps.push_back({n, last[k]});
      result.paths.push_back(std::move(leftover));
    }
  }
  return result;
}

}  // namespace detail

// Bully path projection of a placement. Paths start row by row; from an
// entry the path moves to the smallest available larger entry of the next
// row, wrapping to the smallest available entry when none is larger.
inline ProjectionResult bully_project(const Placement& p, const TypeVector& type) {
  require_valid_placement(p, type);
  return detail::project_continuous(p, nullptr);
}

inline ProjectionResult bully_project(const Placement& p) {
  auto type = p.inferred_type();
  if (!type) throw std::invalid_argument("placement rows must weakly increase");
  return bully_project(p, *type);
}

// As bully_project, but paths within row r start in the order given by
// starter_orders[r-1] (a permutation of that row's available entries).
inline ProjectionResult bully_project_ordered(
    const Placement& p, const TypeVector& type,
    const std::vector<std::vector<int>>& starter_orders) {
  require_valid_placement(p, type);
  return detail::project_continuous(p, &starter_orders);
}

// Discrete bully path projection. From a particle on site s of row r the
// path drops to the first available particle of row r+1 at site >= s,
// scanning cyclically to the right ("directly below" counts); passing the
// end of the ring is a wrap. The word reads the whole last row: label of
// the particle, or n+1 on an empty site.
inline ProjectionResult bully_project_discrete(const DiscreteMLQ& q) {
  if (!q.inferred_type())
    throw std::invalid_argument("discrete MLQ row sizes must weakly increase");
  const int n = q.row_count();
  const long long sites = q.sites();
  std::vector<std::vector<char>> avail(static_cast<std::size_t>(n));
  for (int r = 0; r < n; ++r)
    avail[static_cast<std::size_t>(r)].assign(q.rows()[static_cast<std::size_t>(r)].size(), 1);

  ProjectionResult result;
  const auto& last = q.rows().back();
  std::vector<int> word_label(last.size(), n);

  for (int r = 0; r < n - 1; ++r) {
    const auto& row = q.rows()[static_cast<std::size_t>(r)];
    for (std::size_t start = 0; start < row.size(); ++start) {
      if (!avail[static_cast<std::size_t>(r)][start]) continue;
      BullyPath path;
      path.type = r + 1;
      long long cur = row[start];
      path.steps.push_back({r + 1, cur});
      avail[static_cast<std::size_t>(r)][start] = 0;
      int landed = -1;
      for (int qi = r + 1; qi < n; ++qi) {
        const auto& qrow = q.rows()[static_cast<std::size_t>(qi)];
        auto& qavail = avail[static_cast<std::size_t>(qi)];
        int pick = -1;
        for (std::size_t k = 0; k < qrow.size(); ++k)
          if (qavail[k] && qrow[k] >= cur) {
            pick = static_cast<int>(k);
            break;
          }
        if (pick < 0) {
          for (std::size_t k = 0; k < qrow.size(); ++k)
            if (qavail[k]) {
              pick = static_cast<int>(k);
              break;
            }
          result.wraps.push_back({qi, cur});
        }
        qavail[static_cast<std::size_t>(pick)] = 0;
        cur = qrow[static_cast<std::size_t>(pick)];
        path.steps.push_back({qi + 1, cur});
        landed = pick;
      }
      word_label[static_cast<std::size_t>(landed)] = r + 1;
      result.paths.push_back(std::move(path));
    }
  }

  result.word.assign(static_cast<std::size_t>(sites), n + 1);
  for (std::size_t k = 0; k < last.size(); ++k) {
    result.word[static_cast<std::size_t>(last[k] - 1)] = word_label[k];
    if (avail.back()[k]) {
      BullyPath leftover;
      leftover.type = n;
      leftover.steps.push_back({n, last[k]});
      result.paths.push_back(std::move(leftover));
    }
  }
  return result;
}

}  // namespace mlq
