#pragma once

// Exact dyadic rationals num / 2^exp.

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include "dis/tree.hpp"

namespace dis {

class DyadicRational {
public:
  static constexpr unsigned max_exponent = 60;

  constexpr DyadicRational() = default;
  DyadicRational(std::int64_t num, unsigned exp = 0) : num_(num), exp_(exp) { normalize(); }

  static DyadicRational zero() { return {}; }
  static DyadicRational one() { return {1, 0}; }
  static DyadicRational half() { return {1, 1}; }

  std::int64_t numerator() const noexcept { return num_; }
  unsigned exponent() const noexcept { return exp_; }
  double to_double() const noexcept { return double(num_) / double(std::uint64_t{1} << exp_); }

  friend DyadicRational operator+(DyadicRational a, DyadicRational b) {
    align(a, b);
    return {a.num_ + b.num_, a.exp_};
  }
  friend DyadicRational operator-(DyadicRational a, DyadicRational b) {
    align(a, b);
    return {a.num_ - b.num_, a.exp_};
  }
  friend DyadicRational operator*(DyadicRational a, DyadicRational b) {
    if (a.exp_ + b.exp_ > max_exponent) throw error("dyadic exponent overflow");
    return {a.num_ * b.num_, a.exp_ + b.exp_};
  }

  /// this / 2^k
  DyadicRational scaled_down(unsigned k) const {
    if (exp_ + k > max_exponent) throw error("dyadic exponent overflow");
    return {num_, exp_ + k};
  }

  /// Midpoint of [a, b].
  static DyadicRational midpoint(DyadicRational a, DyadicRational b) { return (a + b).scaled_down(1); }

  friend bool operator==(const DyadicRational&, const DyadicRational&) = default;
  friend std::strong_ordering operator<=>(DyadicRational a, DyadicRational b) {
    align(a, b);
    return a.num_ <=> b.num_;
  }

  /// "a/2^b" in lowest terms.
  std::string str() const { return std::to_string(num_) + "/2^" + std::to_string(exp_); }

  /// Accepts "a/2^b", "a/c" with c a power of two, or an integer.
  static DyadicRational parse(std::string_view s) {
    auto bad = [&] { return parse_error("not a dyadic rational: '" + std::string(s) + "'", 0); };
    auto to_int = [&](std::string_view t) -> std::int64_t {
      if (t.empty()) throw bad();
      std::int64_t v = 0;
      std::size_t i = 0;
      bool neg = false;
      if (t[0] == '-') {
        neg = true;
        i = 1;
        if (t.size() == 1) throw bad();
      }
      for (; i < t.size(); ++i) {
        if (t[i] < '0' || t[i] > '9') throw bad();
        v = v * 10 + (t[i] - '0');
        if (v > (std::int64_t{1} << 62)) throw bad();
      }
      return neg ? -v : v;
    };
    auto slash = s.find('/');
    if (slash == std::string_view::npos) return {to_int(s), 0};
    auto num = to_int(s.substr(0, slash));
    auto den = s.substr(slash + 1);
    if (den.size() > 2 && den[0] == '2' && den[1] == '^') {
      auto e = to_int(den.substr(2));
      if (e < 0 || e > std::int64_t(max_exponent)) throw bad();
      return {num, unsigned(e)};
    }
    auto d = to_int(den);
    if (d <= 0 || (d & (d - 1)) != 0) throw bad();
    unsigned e = 0;
    while ((std::int64_t{1} << e) != d) ++e;
    return {num, e};
  }

private:
  void normalize() {
    if (num_ == 0) {
      exp_ = 0;
      return;
    }
    while (exp_ > 0 && (num_ & 1) == 0) {
      num_ /= 2;
      --exp_;
    }
    if (exp_ > max_exponent) throw error("dyadic exponent overflow");
  }

  static void align(DyadicRational& a, DyadicRational& b) {
    // raw rescaling, deliberately bypassing normalize()
    while (a.exp_ < b.exp_) {
      a.num_ *= 2;
      ++a.exp_;
    }
    while (b.exp_ < a.exp_) {
      b.num_ *= 2;
      ++b.exp_;
    }
  }

  std::int64_t num_ = 0;
  unsigned exp_ = 0;
};

inline std::ostream& operator<<(std::ostream& os, const DyadicRational& d) { return os << d.str(); }

}  // namespace dis
