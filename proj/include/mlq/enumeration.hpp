#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "mlq/bigint.hpp"
#include "mlq/pie.hpp"
#include "mlq/placement.hpp"
#include "mlq/projection.hpp"
#include "mlq/rational.hpp"
#include "mlq/typevector.hpp"

namespace mlq {

// Raised when a request would exceed the configured enumeration budget.
// The message carries the exact size of the state space that was refused.
class BudgetExceeded : public std::runtime_error {
 public:
  explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

struct EnumOptions {
  int workers = 0;             // 0 = use hardware concurrency
  long long max_total_n = 24;  // refuse types with N above this
  long long max_direct_n = 5;  // refuse correlations_direct above this n

  int resolved_workers() const {
    if (workers > 0) return workers;
    unsigned hc = std::thread::hardware_concurrency();
    return hc == 0 ? 1 : static_cast<int>(hc);
  }
};

namespace hot {

constexpr int kMaxRows = 12;
constexpr int kMaxLen = 32;

// Flat placement used inside enumeration loops; rows ascending.
struct Queue {
  int rows = 0;
  int len[kMaxRows] = {};
  std::uint8_t val[kMaxRows][kMaxLen] = {};
};

struct Projection {
  std::uint8_t word[kMaxLen];        // labels along the last row, 1-based
  std::uint8_t wraps_from[kMaxRows]; // wrap counts, index = 1-based from-row
};

// Mask-based bully path projection; mirrors mlq::bully_project and is
// checked against it by the test suite on exhaustive small inputs.
inline void project(const Queue& q, Projection& out) {
  const int n = q.rows;
  std::uint32_t avail[kMaxRows];
  for (int r = 0; r < n; ++r)
    avail[r] = q.len[r] >= 32 ? ~0u : ((1u << q.len[r]) - 1u);
  for (int r = 0; r < n; ++r) out.wraps_from[r] = 0;
  const int last = n - 1;
  for (int k = 0; k < q.len[last]; ++k)
    out.word[k] = static_cast<std::uint8_t>(n);

  for (int r = 0; r + 1 < n; ++r) {
    std::uint32_t starters = avail[r];
    while (starters != 0) {
      const int start = std::countr_zero(starters);
      starters &= starters - 1;
      std::uint8_t cur = q.val[r][start];
      int landed = -1;
      for (int t = r + 1; t < n; ++t) {
        const std::uint8_t* vals = q.val[t];
        int pos = 0;
        while (pos < q.len[t] && vals[pos] <= cur) ++pos;
        const std::uint32_t above =
            pos >= 32 ? 0u : (avail[t] & (~0u << pos));
        int pick;
        if (above != 0) {
          pick = std::countr_zero(above);
        } else {
          pick = std::countr_zero(avail[t]);
          ++out.wraps_from[t];  // wrapped moving from row t (1-based) down
        }
        avail[t] &= ~(1u << pick);
        cur = vals[pick];
        landed = pick;
      }
      out.word[landed] = static_cast<std::uint8_t>(r + 1);
    }
  }
}

}  // namespace hot

namespace detail {

// Values are assigned to rows from largest to smallest, giving the
// colexicographic order on the row-assignment word of 1..N. Subtree sizes
// are multinomials, so any contiguous index range can be enumerated
// directly; that is what makes worker partitioning deterministic.
struct WalkPlan {
  int rows = 0;
  std::vector<std::uint8_t> values;    // dynamic values, ascending
  std::array<int, hot::kMaxRows> caps{};       // dynamic capacity per row
  std::array<int, hot::kMaxRows> stride{};     // mixed-radix strides
  std::vector<std::uint64_t> subtree;          // count per capacity state
  hot::Queue seed;                             // pinned entries pre-placed
  std::array<int, hot::kMaxRows> cursor{};     // next dynamic slot per row
  std::uint64_t total = 0;
};

inline WalkPlan make_plan(const TypeVector& type,
                          const std::vector<std::pair<long long, int>>& pins,
                          const EnumOptions& opts) {
  const long long N = type.total();
  if (N > opts.max_total_n)
    throw BudgetExceeded("type " + type.to_string() + " has N=" +
                         std::to_string(N) + " > budget " +
                         std::to_string(opts.max_total_n) + " (" +
                         type.placement_count().to_string() + " placements)");
  if (type.n() > hot::kMaxRows || N > hot::kMaxLen)
    throw BudgetExceeded("type " + type.to_string() + " exceeds kernel limits");

  WalkPlan plan;
  plan.rows = type.n();
  plan.seed.rows = type.n();

  std::vector<char> pinned(static_cast<std::size_t>(N) + 1, 0);
  std::vector<int> pin_row(static_cast<std::size_t>(N) + 1, -1);
  for (auto [value, row] : pins) {
    if (value < 1 || value > N || row < 1 || row > type.n())
      throw std::logic_error("pin out of range");
    if (pinned[static_cast<std::size_t>(value)])
      throw std::logic_error("duplicate pin");
    pinned[static_cast<std::size_t>(value)] = 1;
    pin_row[static_cast<std::size_t>(value)] = row - 1;
  }
  // Pins must sit at the extremes of 1..N so their sorted positions inside
  // each row are fixed no matter what the dynamic values do.
  long long lo = 1;
  while (lo <= N && pinned[static_cast<std::size_t>(lo)]) ++lo;
  long long hi = N;
  while (hi >= 1 && pinned[static_cast<std::size_t>(hi)]) --hi;
  for (long long v = lo; v <= hi; ++v)
    if (pinned[static_cast<std::size_t>(v)])
      throw std::logic_error("pins must be a prefix and/or suffix of 1..N");

  std::array<int, hot::kMaxRows> low_count{};
  std::array<int, hot::kMaxRows> high_count{};
  for (long long v = 1; v < lo; ++v) ++low_count[static_cast<std::size_t>(pin_row[static_cast<std::size_t>(v)])];
  for (long long v = hi + 1; v <= N; ++v) ++high_count[static_cast<std::size_t>(pin_row[static_cast<std::size_t>(v)])];

  for (int r = 0; r < type.n(); ++r) {
    const int len = static_cast<int>(type.row_size(r + 1));
    plan.seed.len[r] = len;
    plan.caps[static_cast<std::size_t>(r)] =
        len - low_count[static_cast<std::size_t>(r)] - high_count[static_cast<std::size_t>(r)];
    if (plan.caps[static_cast<std::size_t>(r)] < 0)
      throw std::logic_error("pins exceed row size");
    plan.cursor[static_cast<std::size_t>(r)] = len - high_count[static_cast<std::size_t>(r)] - 1;
  }
  // Place the pinned values at their forced positions.
  {
    std::array<int, hot::kMaxRows> next_low{};
    for (long long v = 1; v < lo; ++v) {
      const int r = pin_row[static_cast<std::size_t>(v)];
      plan.seed.val[r][next_low[static_cast<std::size_t>(r)]++] =
          static_cast<std::uint8_t>(v);
    }
    std::array<int, hot::kMaxRows> placed{};
    for (long long v = hi + 1; v <= N; ++v) {
      const int r = pin_row[static_cast<std::size_t>(v)];
      const int slot = plan.seed.len[r] - high_count[static_cast<std::size_t>(r)] +
                       placed[static_cast<std::size_t>(r)]++;
      plan.seed.val[r][slot] = static_cast<std::uint8_t>(v);
    }
  }

  for (long long v = lo; v <= hi; ++v)
    plan.values.push_back(static_cast<std::uint8_t>(v));

  // Mixed-radix table of multinomial subtree sizes over capacity states.
  long long table_cells = 1;
  for (int r = 0; r < type.n(); ++r) {
    plan.stride[static_cast<std::size_t>(r)] = static_cast<int>(table_cells);
    table_cells *= plan.caps[static_cast<std::size_t>(r)] + 1;
    if (table_cells > 50'000'000)
      throw BudgetExceeded("capacity table too large for type " + type.to_string());
  }
  const int table_size = static_cast<int>(table_cells);
  {
    BigInt total(1);
    long long remaining = 0;
    for (int r = 0; r < type.n(); ++r) remaining += plan.caps[static_cast<std::size_t>(r)];
    std::vector<long long> parts;
    for (int r = 0; r < type.n(); ++r) parts.push_back(plan.caps[static_cast<std::size_t>(r)]);
    total = multinomial(remaining, parts);
    if (!(total < BigInt(static_cast<long long>(1) << 62)))
      throw BudgetExceeded("state space too large for 64-bit enumeration: " +
                           total.to_string());
  }
  plan.subtree.assign(static_cast<std::size_t>(table_size), 0);
  plan.subtree[0] = 1;
  for (int state = 1; state < table_size; ++state) {
    std::uint64_t sum = 0;
    int rem = state;
    for (int r = 0; r < type.n(); ++r) {
      const int digit = rem % (plan.caps[static_cast<std::size_t>(r)] + 1);
      rem /= plan.caps[static_cast<std::size_t>(r)] + 1;
      if (digit > 0)
        sum += plan.subtree[static_cast<std::size_t>(
            state - plan.stride[static_cast<std::size_t>(r)])];
    }
    plan.subtree[static_cast<std::size_t>(state)] = sum;
  }
  plan.total = plan.subtree.back();
  return plan;
}

// Enumerates the assignments with colex index in [begin, end), invoking
// sink(queue) at each complete placement.
template <typename Sink>
class Walker {
 public:
  Walker(const WalkPlan& plan, Sink& sink) : plan_(plan), sink_(sink) {}

  void run(std::uint64_t begin, std::uint64_t end) {
    if (begin >= end) return;
    begin_ = begin;
    end_ = end;
    pos_ = 0;
    queue_ = plan_.seed;
    caps_ = plan_.caps;
    cursor_ = plan_.cursor;
    state_ = static_cast<int>(plan_.subtree.size()) - 1;
    descend(0);
  }

 private:
  void descend(int depth) {
    if (depth == static_cast<int>(plan_.values.size())) {
      sink_(queue_);
      ++pos_;
      return;
    }
    const std::uint8_t value =
        plan_.values[plan_.values.size() - 1 - static_cast<std::size_t>(depth)];
    for (int r = 0; r < plan_.rows; ++r) {
      if (caps_[static_cast<std::size_t>(r)] == 0) continue;
      const int child = state_ - plan_.stride[static_cast<std::size_t>(r)];
      const std::uint64_t size = plan_.subtree[static_cast<std::size_t>(child)];
      if (pos_ + size <= begin_) {
        pos_ += size;
        continue;
      }
      --caps_[static_cast<std::size_t>(r)];
      state_ = child;
      const int slot = cursor_[static_cast<std::size_t>(r)]--;
      queue_.val[r][slot] = value;
      descend(depth + 1);
      ++cursor_[static_cast<std::size_t>(r)];
      ++caps_[static_cast<std::size_t>(r)];
      state_ += plan_.stride[static_cast<std::size_t>(r)];
      if (pos_ >= end_) return;
    }
  }

  const WalkPlan& plan_;
  Sink& sink_;
  std::uint64_t begin_ = 0, end_ = 0, pos_ = 0;
  hot::Queue queue_;
  std::array<int, hot::kMaxRows> caps_{};
  std::array<int, hot::kMaxRows> cursor_{};
  int state_ = 0;
};

// Runs `make_body(worker_index)` over deterministic contiguous chunks of
// the enumeration, one thread per worker. Bodies are callables over the
// completed hot::Queue; merging is up to the caller via captured state.
template <typename BodyFactory>
inline void chunked_scan(const WalkPlan& plan, int workers,
                         BodyFactory&& make_body) {
  const std::uint64_t total = plan.total;
  if (workers < 1) workers = 1;
  if (static_cast<std::uint64_t>(workers) > total && total > 0)
    workers = static_cast<int>(total);
  if (total == 0) return;
  if (workers == 1) {
    auto body = make_body(0);
    Walker<decltype(body)> walker(plan, body);
    walker.run(0, total);
    return;
  }
  std::vector<std::thread> threads;
  threads.reserve(static_cast<std::size_t>(workers));
  for (int w = 0; w < workers; ++w) {
    const std::uint64_t begin = total / static_cast<std::uint64_t>(workers) * w +
                                std::min<std::uint64_t>(w, total % workers);
    const std::uint64_t len = total / static_cast<std::uint64_t>(workers) +
                              (static_cast<std::uint64_t>(w) < total % workers ? 1 : 0);
    threads.emplace_back([&plan, &make_body, w, begin, len] {
      auto body = make_body(w);
      Walker<decltype(body)> walker(plan, body);
      walker.run(begin, begin + len);
    });
  }
  for (auto& t : threads) t.join();
}

inline Placement to_placement(const hot::Queue& q) {
  std::vector<std::vector<long long>> rows(static_cast<std::size_t>(q.rows));
  for (int r = 0; r < q.rows; ++r) {
    rows[static_cast<std::size_t>(r)].assign(q.len[r], 0);
    for (int k = 0; k < q.len[r]; ++k)
      rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(k)] = q.val[r][k];
  }
  return Placement(std::move(rows));
}

}  // namespace detail

// --- Plain enumeration ------------------------------------------------------

inline BigInt placements_total(const TypeVector& type) {
  return type.placement_count();
}

// Visits every placement of the type exactly once, in colexicographic order
// of the row assignment of the values N, N-1, ..., 1.
inline void for_each_placement(const TypeVector& type,
                               const std::function<void(const Placement&)>& fn,
                               const EnumOptions& opts = {}) {
  auto plan = detail::make_plan(type, {}, opts);
  auto body = [&fn](const hot::Queue& q) { fn(detail::to_placement(q)); };
  detail::Walker<decltype(body)> walker(plan, body);
  walker.run(0, plan.total);
}

// The [begin, end) slice of the same order; chunked workers see exactly
// these slices, so partitioning is reproducible by construction.
inline void for_each_placement_range(
    const TypeVector& type, std::uint64_t begin, std::uint64_t end,
    const std::function<void(const Placement&)>& fn,
    const EnumOptions& opts = {}) {
  auto plan = detail::make_plan(type, {}, opts);
  auto body = [&fn](const hot::Queue& q) { fn(detail::to_placement(q)); };
  detail::Walker<decltype(body)> walker(plan, body);
  walker.run(begin, std::min<std::uint64_t>(end, plan.total));
}

// --- Counting statistics ----------------------------------------------------

struct WordDistribution {
  std::map<std::string, BigInt> counts;
  BigInt total;
};

inline std::string word_key(const std::uint8_t* word, int len) {
  std::string s;
  s.reserve(static_cast<std::size_t>(len));
  bool wide = false;
  for (int i = 0; i < len; ++i)
    if (word[i] > 9) wide = true;
  for (int i = 0; i < len; ++i) {
    if (wide) {
      if (i) s += ',';
      s += std::to_string(static_cast<int>(word[i]));
    } else {
      s += static_cast<char>('0' + word[i]);
    }
  }
  return s;
}

// Exact histogram of the projected word over all placements of the type.
inline WordDistribution word_distribution(const TypeVector& type,
                                          const EnumOptions& opts = {}) {
  auto plan = detail::make_plan(type, {}, opts);
  const int workers = opts.resolved_workers();
  const int word_len = static_cast<int>(type.word_length());
  std::vector<std::map<std::string, long long>> partial(
      static_cast<std::size_t>(std::max(workers, 1)));
  detail::chunked_scan(plan, workers, [&](int w) {
    auto* local = &partial[static_cast<std::size_t>(w)];
    return [local, word_len](const hot::Queue& q) {
      hot::Projection proj;
      hot::project(q, proj);
      ++(*local)[word_key(proj.word, word_len)];
    };
  });
  WordDistribution dist;
  dist.total = type.placement_count();
  for (const auto& part : partial)
    for (const auto& [word, count] : part) {
      auto it = dist.counts.find(word);
      if (it == dist.counts.end())
        dist.counts.emplace(word, BigInt(count));
      else
        it->second += BigInt(count);
    }
  return dist;
}

struct CorrelationTable {
  int n = 0;
  std::map<std::pair<int, int>, Rational> entries;

  const Rational& at(int i, int j) const { return entries.at({i, j}); }
};

// Two-point correlations of the type 1^n system by direct enumeration:
// c_{i,j} = sum over placements and ring positions of [w_a=i][w_{a+1}=j],
// divided by #placements (the position sum realizes sum_a E^a_{i,j}).
inline CorrelationTable correlations_direct(int n, const EnumOptions& opts = {}) {
  if (n < 2) throw std::invalid_argument("correlations_direct: need n >= 2");
  if (n > opts.max_direct_n)
    throw BudgetExceeded(
        "correlations_direct: n=" + std::to_string(n) + " > budget " +
        std::to_string(opts.max_direct_n) + " (" +
        TypeVector::ones(n).placement_count().to_string() + " placements)");
  const TypeVector type = TypeVector::ones(n);
  auto plan = detail::make_plan(type, {}, opts);
  const int workers = opts.resolved_workers();
  const int cells = (n + 1) * (n + 1);
  std::vector<std::vector<long long>> partial(
      static_cast<std::size_t>(std::max(workers, 1)),
      std::vector<long long>(static_cast<std::size_t>(cells), 0));
  detail::chunked_scan(plan, workers, [&](int w) {
    auto* local = partial[static_cast<std::size_t>(w)].data();
    return [local, n](const hot::Queue& q) {
      hot::Projection proj;
      hot::project(q, proj);
      for (int a = 0; a < n; ++a) {
        const int i = proj.word[a];
        const int j = proj.word[(a + 1) % n];
        ++local[i * (n + 1) + j];
      }
    };
  });
  std::vector<long long> merged(static_cast<std::size_t>(cells), 0);
  for (const auto& part : partial)
    for (int c = 0; c < cells; ++c) merged[static_cast<std::size_t>(c)] += part[static_cast<std::size_t>(c)];
  const BigInt denom = type.placement_count();
  CorrelationTable table;
  table.n = n;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      if (i == j) continue;
      table.entries[{i, j}] =
          Rational(BigInt(merged[static_cast<std::size_t>(i * (n + 1) + j)]), denom);
    }
  return table;
}

namespace detail {

// One pinned scan counting placements whose projected word satisfies a
// small predicate; the workhorse behind every conditioned statistic.
template <typename Filter>
inline long long count_filtered(const TypeVector& type,
                                const std::vector<std::pair<long long, int>>& pins,
                                const EnumOptions& opts, Filter&& filter) {
  auto plan = detail::make_plan(type, pins, opts);
  const int workers = opts.resolved_workers();
  std::vector<long long> partial(static_cast<std::size_t>(std::max(workers, 1)), 0);
  detail::chunked_scan(plan, workers, [&](int w) {
    auto* local = &partial[static_cast<std::size_t>(w)];
    return [local, &filter](const hot::Queue& q) {
      hot::Projection proj;
      hot::project(q, proj);
      if (filter(q, proj)) ++(*local);
    };
  });
  long long total = 0;
  for (long long part : partial) total += part;
  return total;
}

}  // namespace detail

// Placements with N in the last row whose word starts (first, second).
// For type m_{s,t}: tau_{s,t} = count(3,2), theta_{s,t} = count(2,3),
// n_{x,y}(s,t,n) = count(x,y).
inline BigInt count_conditioned(const TypeVector& type, int first, int second,
                                const EnumOptions& opts = {}) {
  if (type.n() != 3)
    throw std::invalid_argument("count_conditioned: need a three-species type");
  if (type.word_length() < 2)
    throw std::invalid_argument("count_conditioned: word too short");
  return BigInt(detail::count_filtered(
      type, {{type.total(), 3}}, opts,
      [first, second](const hot::Queue&, const hot::Projection& proj) {
        return proj.word[0] == first && proj.word[1] == second;
      }));
}

// Placements with N in the last row whose word starts with z.
inline BigInt count_first_only(const TypeVector& type, int z,
                               const EnumOptions& opts = {}) {
  if (type.n() != 3)
    throw std::invalid_argument("count_first_only: need a three-species type");
  return BigInt(detail::count_filtered(
      type, {{type.total(), 3}}, opts,
      [z](const hot::Queue&, const hot::Projection& proj) {
        return proj.word[0] == z;
      }));
}

// delta_{c,d}(s,n) (or delta_c when d is absent): two-species placements
// with N' = n+s in the second row and prescribed first word letters.
inline BigInt count_delta(long long s, long long n, int c, std::optional<int> d,
                          const EnumOptions& opts = {}) {
  const TypeVector type = TypeVector::two_species(s, n);
  return BigInt(detail::count_filtered(
      type, {{type.total(), 2}}, opts,
      [c, d](const hot::Queue&, const hot::Projection& proj) {
        if (proj.word[0] != c) return false;
        return !d || proj.word[1] == *d;
      }));
}

// Like count_delta with the single letter at word position a (1-based);
// rotational symmetry says the result does not depend on a.
inline BigInt count_delta_at(long long s, long long n, int c, int a,
                             const EnumOptions& opts = {}) {
  const TypeVector type = TypeVector::two_species(s, n);
  if (a < 1 || a > type.word_length())
    throw std::invalid_argument("count_delta_at: position out of range");
  return BigInt(detail::count_filtered(
      type, {{type.total(), 2}}, opts,
      [c, a](const hot::Queue&, const hot::Projection& proj) {
        return proj.word[a - 1] == c;
      }));
}

// Splits n_{1,3}(s,t,n) by the number of wraps out of the second row:
// alpha has none, beta exactly one. (With w_2 = 3 no more than one wrap
// out of row 2 is possible.)
inline std::pair<BigInt, BigInt> count_alpha_beta(long long s, long long t,
                                                  long long n,
                                                  const EnumOptions& opts = {}) {
  const TypeVector type = TypeVector::three_species(s, t, n);
  if (type.word_length() < 2)
    throw std::invalid_argument("count_alpha_beta: word too short");
  auto plan = detail::make_plan(type, {{type.total(), 3}}, opts);
  const int workers = opts.resolved_workers();
  std::vector<std::pair<long long, long long>> partial(
      static_cast<std::size_t>(std::max(workers, 1)), {0, 0});
  detail::chunked_scan(plan, workers, [&](int w) {
    auto* local = &partial[static_cast<std::size_t>(w)];
    return [local](const hot::Queue& q) {
      hot::Projection proj;
      hot::project(q, proj);
      if (proj.word[0] != 1 || proj.word[1] != 3) return;
      if (proj.wraps_from[2] == 0)
        ++local->first;
      else
        ++local->second;
    };
  });
  long long alpha = 0, beta = 0;
  for (auto [a, b] : partial) {
    alpha += a;
    beta += b;
  }
  return {BigInt(alpha), BigInt(beta)};
}

// gamma^ell(s,n): type m_{s,1} placements with N in the last row, second
// entry of the last row equal to ell, b_1 > ell, word starting (1,3).
inline BigInt count_gamma(long long s, long long n, long long ell,
                          const EnumOptions& opts = {}) {
  if (ell < 2 || ell > s)
    throw std::invalid_argument("count_gamma: need 2 <= ell <= s");
  const TypeVector type = TypeVector::three_species(s, 1, n);
  return BigInt(detail::count_filtered(
      type, {{type.total(), 3}}, opts,
      [ell](const hot::Queue& q, const hot::Projection& proj) {
        return proj.word[0] == 1 && proj.word[1] == 3 &&
               q.val[2][1] == ell && q.val[1][0] > ell;
      }));
}

// rho statistics: type m_{s,1} placements with c_1 = 1, c_2 = 2 and
// c_n = N, counted by the prescribed word letters (either may be absent).
inline BigInt count_rho(long long s, long long n, std::optional<int> first,
                        std::optional<int> second, const EnumOptions& opts = {}) {
  if (n <= s + 1) throw std::invalid_argument("count_rho: need n > s+1");
  const TypeVector type = TypeVector::three_species(s, 1, n);
  return BigInt(detail::count_filtered(
      type, {{1, 3}, {2, 3}, {type.total(), 3}}, opts,
      [first, second](const hot::Queue&, const hot::Projection& proj) {
        if (first && proj.word[0] != *first) return false;
        if (second && proj.word[1] != *second) return false;
        return true;
      }));
}

// Sum over all placements (no pinning) and all ring positions a of
// [w_a = x][w_{a+1} = y]; the rotation lemma ties this to the pinned count.
inline BigInt count_adjacent_pairs_all(const TypeVector& type, int x, int y,
                                       const EnumOptions& opts = {}) {
  const int len = static_cast<int>(type.word_length());
  if (len < 2)
    throw std::invalid_argument("count_adjacent_pairs_all: word too short");
  auto plan = detail::make_plan(type, {}, opts);
  const int workers = opts.resolved_workers();
  std::vector<long long> partial(static_cast<std::size_t>(std::max(workers, 1)), 0);
  detail::chunked_scan(plan, workers, [&](int w) {
    auto* local = &partial[static_cast<std::size_t>(w)];
    return [local, len, x, y](const hot::Queue& q) {
      hot::Projection proj;
      hot::project(q, proj);
      for (int a = 0; a < len; ++a)
        if (proj.word[a] == x && proj.word[(a + 1) % len] == y) ++(*local);
    };
  });
  long long total = 0;
  for (long long part : partial) total += part;
  return BigInt(total);
}

// Number of placements of the type whose projection wraps nowhere;
// the no-wrapping bijection says this is f_(S_n, ..., S_1).
inline BigInt count_no_wrap(const TypeVector& type, const EnumOptions& opts = {}) {
  return BigInt(detail::count_filtered(
      type, {}, opts, [&type](const hot::Queue&, const hot::Projection& proj) {
        for (int r = 1; r < type.n(); ++r)
          if (proj.wraps_from[r] != 0) return false;
        return true;
      }));
}

// --- Correlations via the projection principle ------------------------------

struct ProjectionCounts {
  BigInt tau;    // word starts (3,2), N in last row
  BigInt theta;  // word starts (2,3), N in last row
  BigInt placements;
};

// One pinned scan per (s,t) cell produces both conditioned counts.
inline ProjectionCounts projection_counts(long long s, long long t, long long n,
                                          const EnumOptions& opts = {}) {
  const TypeVector type = TypeVector::three_species(s, t, n);
  auto plan = detail::make_plan(type, {{type.total(), 3}}, opts);
  const int workers = opts.resolved_workers();
  std::vector<std::pair<long long, long long>> partial(
      static_cast<std::size_t>(std::max(workers, 1)), {0, 0});
  detail::chunked_scan(plan, workers, [&](int w) {
    auto* local = &partial[static_cast<std::size_t>(w)];
    return [local](const hot::Queue& q) {
      hot::Projection proj;
      hot::project(q, proj);
      if (proj.word[0] == 3 && proj.word[1] == 2) ++local->first;
      if (proj.word[0] == 2 && proj.word[1] == 3) ++local->second;
    };
  });
  ProjectionCounts out;
  long long tau = 0, theta = 0;
  for (auto [a, b] : partial) {
    tau += a;
    theta += b;
  }
  out.tau = BigInt(tau);
  out.theta = BigInt(theta);
  out.placements = type.placement_count();
  return out;
}

// Correlations of the type 1^n system assembled from three-species
// enumerations through the projection principle.
inline CorrelationTable correlations_via_projection(int n,
                                                    const EnumOptions& opts = {}) {
  if (n < 2)
    throw std::invalid_argument("correlations_via_projection: need n >= 2");
  // fail fast: the largest cell the assembly touches has N = 3n-3 (n >= 3)
  const long long max_cell_N = n >= 3 ? 3LL * n - 3 : n + 1;
  if (max_cell_N > opts.max_total_n)
    throw BudgetExceeded("correlations_via_projection: n=" + std::to_string(n) +
                         " needs three-species cells with N=" +
                         std::to_string(max_cell_N) + " > budget " +
                         std::to_string(opts.max_total_n));
  std::map<std::pair<long long, long long>, ProjectionCounts> cache;
  auto counts_for = [&](long long s, long long t) -> const ProjectionCounts& {
    auto key = std::make_pair(s, t);
    auto it = cache.find(key);
    if (it == cache.end())
      it = cache.emplace(key, projection_counts(s, t, n, opts)).first;
    return it->second;
  };
  auto T_gt = [&](long long s, long long t) {
    const auto& c = counts_for(s, t);
    return Rational(c.tau, c.placements);
  };
  auto T_lt = [&](long long s, long long t) {
    const auto& c = counts_for(s, t);
    return Rational(c.theta, c.placements);
  };

  CorrelationTable table;
  table.n = n;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      if (i == j) continue;
      if (i < j)
        table.entries[{i, j}] = assemble_pie(i, j, n, T_lt);
      else
        table.entries[{i, j}] = assemble_pie(j, i, n, T_gt);
    }
  return table;
}

}  // namespace mlq
