#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace mlq {

// Arbitrary-precision signed integer. Limbs are base 10^9, little-endian.
// Zero is represented by an empty limb vector and sign 0. Every counting
// path in this library runs on BigInt (or on int64 tallies that are
// widened to BigInt before any arithmetic that could overflow).
class BigInt {
 public:
  BigInt() = default;

  BigInt(long long v) {  // NOLINT: implicit by design, literals read naturally
    if (v == 0) return;
    sign_ = v < 0 ? -1 : 1;
    unsigned long long u =
        v < 0 ? ~static_cast<unsigned long long>(v) + 1ULL
              : static_cast<unsigned long long>(v);
    while (u != 0) {
      limbs_.push_back(static_cast<std::uint32_t>(u % kBase));
      u /= kBase;
    }
  }

  BigInt(int v) : BigInt(static_cast<long long>(v)) {}
  BigInt(unsigned v) : BigInt(static_cast<long long>(v)) {}

  BigInt(unsigned long long u) {
    if (u == 0) return;
    sign_ = 1;
    while (u != 0) {
      limbs_.push_back(static_cast<std::uint32_t>(u % kBase));
      u /= kBase;
    }
  }

  static BigInt from_string(std::string_view s) {
    if (s.empty()) throw std::invalid_argument("BigInt: empty string");
    int sign = 1;
    std::size_t i = 0;
    if (s[0] == '+' || s[0] == '-') {
      sign = s[0] == '-' ? -1 : 1;
      i = 1;
    }
    if (i == s.size()) throw std::invalid_argument("BigInt: no digits");
    BigInt r;
    for (; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9')
        throw std::invalid_argument("BigInt: bad digit");
      r.mul_small(10);
      r.add_small(static_cast<std::uint32_t>(s[i] - '0'));
    }
    if (sign < 0 && r.sign_ != 0) r.sign_ = -1;
    return r;
  }

  int signum() const { return sign_; }
  bool is_zero() const { return sign_ == 0; }
  bool is_negative() const { return sign_ < 0; }

  bool fits_int64() const {
    static const BigInt kMin(std::numeric_limits<long long>::min());
    static const BigInt kMax(std::numeric_limits<long long>::max());
    return !(*this < kMin) && !(kMax < *this);
  }

  long long to_int64() const {
    if (!fits_int64()) throw std::overflow_error("BigInt: does not fit int64");
    long long v = 0;
    for (auto it = limbs_.rbegin(); it != limbs_.rend(); ++it)
      v = v * static_cast<long long>(kBase) + *it;
    return sign_ < 0 ? -v : v;
  }

  std::string to_string() const {
    if (sign_ == 0) return "0";
    std::string out;
    if (sign_ < 0) out.push_back('-');
    out += std::to_string(limbs_.back());
    char buf[10];
    for (auto it = limbs_.rbegin() + 1; it != limbs_.rend(); ++it) {
      std::snprintf(buf, sizeof buf, "%09u", *it);
      out += buf;
    }
    return out;
  }

  friend bool operator==(const BigInt& a, const BigInt& b) {
    return a.sign_ == b.sign_ && a.limbs_ == b.limbs_;
  }
  friend bool operator!=(const BigInt& a, const BigInt& b) { return !(a == b); }
  friend bool operator<(const BigInt& a, const BigInt& b) {
    if (a.sign_ != b.sign_) return a.sign_ < b.sign_;
    int c = ucmp(a.limbs_, b.limbs_);
    return a.sign_ >= 0 ? c < 0 : c > 0;
  }
  friend bool operator>(const BigInt& a, const BigInt& b) { return b < a; }
  friend bool operator<=(const BigInt& a, const BigInt& b) { return !(b < a); }
  friend bool operator>=(const BigInt& a, const BigInt& b) { return !(a < b); }

  BigInt operator-() const {
    BigInt r = *this;
    r.sign_ = -r.sign_;
    return r;
  }

  friend BigInt operator+(const BigInt& a, const BigInt& b) {
    if (a.sign_ == 0) return b;
    if (b.sign_ == 0) return a;
    BigInt r;
    if (a.sign_ == b.sign_) {
      r.limbs_ = uadd(a.limbs_, b.limbs_);
      r.sign_ = a.sign_;
    } else {
      int c = ucmp(a.limbs_, b.limbs_);
      if (c == 0) return BigInt();
      if (c > 0) {
        r.limbs_ = usub(a.limbs_, b.limbs_);
        r.sign_ = a.sign_;
      } else {
        r.limbs_ = usub(b.limbs_, a.limbs_);
        r.sign_ = b.sign_;
      }
    }
    return r;
  }

  friend BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

  friend BigInt operator*(const BigInt& a, const BigInt& b) {
    if (a.sign_ == 0 || b.sign_ == 0) return BigInt();
    BigInt r;
    r.limbs_.assign(a.limbs_.size() + b.limbs_.size(), 0);
    for (std::size_t i = 0; i < a.limbs_.size(); ++i) {
      std::uint64_t carry = 0;
      std::uint64_t ai = a.limbs_[i];
      for (std::size_t j = 0; j < b.limbs_.size(); ++j) {
        std::uint64_t cur = r.limbs_[i + j] + ai * b.limbs_[j] + carry;
        r.limbs_[i + j] = static_cast<std::uint32_t>(cur % kBase);
        carry = cur / kBase;
      }
      std::size_t k = i + b.limbs_.size();
      while (carry != 0) {
        std::uint64_t cur = r.limbs_[k] + carry;
        r.limbs_[k] = static_cast<std::uint32_t>(cur % kBase);
        carry = cur / kBase;
        ++k;
      }
    }
    r.trim();
    r.sign_ = a.sign_ * b.sign_;
    return r;
  }

  // Truncated division (quotient rounds toward zero, remainder has the
  // sign of the dividend), matching built-in integer semantics.
  static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
    if (b.sign_ == 0) throw std::domain_error("BigInt: division by zero");
    int c = ucmp(a.limbs_, b.limbs_);
    if (c < 0) {
      q = BigInt();
      r = a;
      return;
    }
    udivmod(a.limbs_, b.limbs_, q.limbs_, r.limbs_);
    q.sign_ = q.limbs_.empty() ? 0 : a.sign_ * b.sign_;
    r.sign_ = r.limbs_.empty() ? 0 : a.sign_;
  }

  friend BigInt operator/(const BigInt& a, const BigInt& b) {
    BigInt q, r;
    divmod(a, b, q, r);
    return q;
  }
  friend BigInt operator%(const BigInt& a, const BigInt& b) {
    BigInt q, r;
    divmod(a, b, q, r);
    return r;
  }

  BigInt& operator+=(const BigInt& o) { return *this = *this + o; }
  BigInt& operator-=(const BigInt& o) { return *this = *this - o; }
  BigInt& operator*=(const BigInt& o) { return *this = *this * o; }
  BigInt& operator/=(const BigInt& o) { return *this = *this / o; }

  // Quotient of an exact division; throws if b does not divide a.
  static BigInt div_exact(const BigInt& a, const BigInt& b) {
    BigInt q, r;
    divmod(a, b, q, r);
    if (!r.is_zero()) throw std::logic_error("BigInt: inexact division");
    return q;
  }

  static BigInt gcd(BigInt a, BigInt b) {
    a.sign_ = std::abs(a.sign_);
    b.sign_ = std::abs(b.sign_);
    while (!b.is_zero()) {
      BigInt q, r;
      divmod(a, b, q, r);
      a = std::move(b);
      b = std::move(r);
    }
    return a;
  }

  friend std::ostream& operator<<(std::ostream& os, const BigInt& v) {
    return os << v.to_string();
  }

 private:
  static constexpr std::uint64_t kBase = 1000000000ULL;

  using Limbs = std::vector<std::uint32_t>;

  void trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
    if (limbs_.empty()) sign_ = 0;
  }

  void mul_small(std::uint32_t m) {
    std::uint64_t carry = 0;
    for (auto& limb : limbs_) {
      std::uint64_t cur = static_cast<std::uint64_t>(limb) * m + carry;
      limb = static_cast<std::uint32_t>(cur % kBase);
      carry = cur / kBase;
    }
    while (carry != 0) {
      limbs_.push_back(static_cast<std::uint32_t>(carry % kBase));
      carry /= kBase;
    }
    trim();
    if (!limbs_.empty() && sign_ == 0) sign_ = 1;
  }

  void add_small(std::uint32_t v) {
    if (v == 0) return;
    if (sign_ == 0) {
      limbs_.assign(1, v);
      sign_ = 1;
      return;
    }
    std::uint64_t carry = v;
    for (auto& limb : limbs_) {
      std::uint64_t cur = limb + carry;
      limb = static_cast<std::uint32_t>(cur % kBase);
      carry = cur / kBase;
      if (carry == 0) break;
    }
    if (carry != 0) limbs_.push_back(static_cast<std::uint32_t>(carry));
  }

  static int ucmp(const Limbs& a, const Limbs& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (std::size_t i = a.size(); i-- > 0;)
      if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
  }

  static Limbs uadd(const Limbs& a, const Limbs& b) {
    const Limbs& lo = a.size() < b.size() ? a : b;
    const Limbs& hi = a.size() < b.size() ? b : a;
    Limbs r(hi.size() + 1, 0);
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < hi.size(); ++i) {
      std::uint64_t cur = carry + hi[i] + (i < lo.size() ? lo[i] : 0);
      r[i] = static_cast<std::uint32_t>(cur % kBase);
      carry = cur / kBase;
    }
    r[hi.size()] = static_cast<std::uint32_t>(carry);
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
  }

  // Requires a >= b.
  static Limbs usub(const Limbs& a, const Limbs& b) {
    Limbs r = a;
    std::int64_t borrow = 0;
    for (std::size_t i = 0; i < r.size(); ++i) {
      std::int64_t cur = static_cast<std::int64_t>(r[i]) - borrow -
                         (i < b.size() ? static_cast<std::int64_t>(b[i]) : 0);
      if (cur < 0) {
        cur += static_cast<std::int64_t>(kBase);
        borrow = 1;
      } else {
        borrow = 0;
      }
      r[i] = static_cast<std::uint32_t>(cur);
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
  }

  // Schoolbook long division on magnitudes; requires |a| >= |b| > 0.
  // Quotient digits are found by 64-bit estimation against the top two
  // divisor limbs, then fixed up by at most a couple of corrections.
  static void udivmod(const Limbs& a, const Limbs& b, Limbs& q, Limbs& rem) {
    if (b.size() == 1) {
      q.assign(a.size(), 0);
      std::uint64_t r = 0;
      std::uint64_t d = b[0];
      for (std::size_t i = a.size(); i-- > 0;) {
        std::uint64_t cur = r * kBase + a[i];
        q[i] = static_cast<std::uint32_t>(cur / d);
        r = cur % d;
      }
      while (!q.empty() && q.back() == 0) q.pop_back();
      rem.clear();
      if (r != 0) rem.push_back(static_cast<std::uint32_t>(r));
      return;
    }

    Limbs r;  // running remainder, always < b * kBase
    r.reserve(b.size() + 1);
    q.assign(a.size(), 0);
    for (std::size_t i = a.size(); i-- > 0;) {
      r.insert(r.begin(), a[i]);
      while (!r.empty() && r.back() == 0) r.pop_back();
      if (ucmp(r, b) < 0) continue;
      // Estimate r / b using the leading limbs.
      std::uint64_t rtop = r.back();
      if (r.size() > b.size()) rtop = rtop * kBase + r[r.size() - 2];
      std::uint64_t btop = b.back();
      std::uint64_t lo = rtop / (btop + 1);
      std::uint64_t hi = std::min<std::uint64_t>(kBase - 1, rtop / btop + 1);
      // Binary search the exact digit in [lo, hi].
      while (lo < hi) {
        std::uint64_t mid = lo + (hi - lo + 1) / 2;
        Limbs t = b;
        std::uint64_t carry = 0;
        for (auto& limb : t) {
          std::uint64_t cur = static_cast<std::uint64_t>(limb) * mid + carry;
          limb = static_cast<std::uint32_t>(cur % kBase);
          carry = cur / kBase;
        }
        while (carry != 0) {
          t.push_back(static_cast<std::uint32_t>(carry % kBase));
          carry /= kBase;
        }
        while (!t.empty() && t.back() == 0) t.pop_back();
        if (ucmp(t, r) <= 0)
          lo = mid;
        else
          hi = mid - 1;
      }
      if (lo != 0) {
        Limbs t = b;
        std::uint64_t carry = 0;
        for (auto& limb : t) {
          std::uint64_t cur = static_cast<std::uint64_t>(limb) * lo + carry;
          limb = static_cast<std::uint32_t>(cur % kBase);
          carry = cur / kBase;
        }
        while (carry != 0) {
          t.push_back(static_cast<std::uint32_t>(carry % kBase));
          carry /= kBase;
        }
        while (!t.empty() && t.back() == 0) t.pop_back();
        r = usub(r, t);
        q[i] = static_cast<std::uint32_t>(lo);
      }
    }
    while (!q.empty() && q.back() == 0) q.pop_back();
    rem = std::move(r);
  }

  Limbs limbs_;
  int sign_ = 0;
};

}  // namespace mlq
