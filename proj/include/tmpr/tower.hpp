#pragma once

// Tower function T_0(x) = x, T_{h+1}(x) = 2^{T_h(x)} with a symbolic base.
// The base is a product of factors b^e, where e is rational or a rational
// multiple of log2 of an integer, so bases such as (n / 8^9)^2 or
// n^{9 log 3} stay exact. Values are compared in the log domain with
// certified interval arithmetic.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "tmpr/errors.hpp"
#include "tmpr/interval.hpp"

namespace tmpr {

/// base^(exponent) or base^(exponent * log2(log_of)).
struct Factor {
  Factor(Rational b, Rational e = 1, std::optional<BigInt> log = std::nullopt, std::string name = {})
      : base(std::move(b)), exponent(std::move(e)), log_of(std::move(log)), label(std::move(name)) {}

  Rational base;
  Rational exponent;
  std::optional<BigInt> log_of;
  std::string label;  // display name of the base, e.g. "n"; empty prints the number

  friend bool operator==(Factor const&, Factor const&) = default;
};

inline std::string rational_text(Rational const& r) {
  std::ostringstream os;
  os << boost::multiprecision::numerator(r);
  if (boost::multiprecision::denominator(r) != 1) os << '/' << boost::multiprecision::denominator(r);
  return os.str();
}

class TowerExpr {
 public:
  TowerExpr() = default;
  TowerExpr(std::size_t height, std::vector<Factor> factors) : height_(height), factors_(std::move(factors)) {
    for (auto const& f : factors_)
      if (f.base < 0) throw ContractError("tower base factors must be nonnegative");
    canonicalize();
  }
  TowerExpr(std::size_t height, Rational const& x) : TowerExpr(height, std::vector<Factor>{Factor{x}}) {}

  std::size_t height() const noexcept { return height_; }
  std::vector<Factor> const& factors() const noexcept { return factors_; }

  bool base_is_zero() const {
    return std::ranges::any_of(factors_, [](Factor const& f) { return f.base == 0; });
  }

  /// Exact base when every exponent is an integer without a log part and
  /// the value stays below `max_bits`.
  std::optional<Rational> exact_base(std::size_t max_bits = 1 << 16) const {
    if (base_is_zero()) return Rational(0);
    Rational out = 1;
    for (auto const& f : factors_) {
      if (f.log_of || boost::multiprecision::denominator(f.exponent) != 1) return std::nullopt;
      BigInt e = boost::multiprecision::numerator(f.exponent);
      bool const neg = e < 0;
      if (neg) e = -e;
      BigInt const num = boost::multiprecision::numerator(f.base);
      BigInt const den = boost::multiprecision::denominator(f.base);
      std::size_t const bits = std::max(boost::multiprecision::msb(num), boost::multiprecision::msb(den)) + 1;
      if (e * bits > max_bits) return std::nullopt;
      unsigned const ee = static_cast<unsigned>(e);
      Rational const pw(boost::multiprecision::pow(num, ee), boost::multiprecision::pow(den, ee));
      out *= neg ? Rational(1) / pw : pw;
    }
    return out;
  }

  /// Enclosure of log2 of the base; the base must be positive.
  Interval log2_base(mpfr_prec_t prec) const {
    if (base_is_zero()) throw ContractError("log2 of a zero tower base");
    Interval acc(prec);
    for (auto const& f : factors_) {
      Interval term = Interval::log2_of(f.base, prec) * Interval::from_rational(f.exponent, prec);
      if (f.log_of) term = term * Interval::log2_of(*f.log_of, prec);
      acc = acc + term;
    }
    return acc;
  }

  /// Product form of the base; named factors print their label unless
  /// `numeric` is set.
  std::string base_text(bool numeric = false) const {
    if (factors_.empty()) return "1";
    std::string out;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      auto const& f = factors_[i];
      if (i) out += " * ";
      std::string const b = (numeric || f.label.empty()) ? rational_text(f.base) : f.label;
      bool const plain = !f.log_of && f.exponent == 1;
      if (plain) {
        out += b;
        continue;
      }
      out += b + "^(";
      if (f.log_of) {
        if (f.exponent != 1) out += rational_text(f.exponent) + "*";
        out += "log2(" + f.log_of->str() + ")";
      } else {
        out += rational_text(f.exponent);
      }
      out += ")";
    }
    return out;
  }

  /// "T^h(base)"
  std::string str(bool numeric = false) const {
    return "T^" + std::to_string(height_) + "(" + base_text(numeric) + ")";
  }

  friend bool operator==(TowerExpr const&, TowerExpr const&) = default;

 private:
  void canonicalize() {
    auto key = [](Factor const& f) { return std::tie(f.base, f.log_of, f.label); };
    std::ranges::sort(factors_, [&](Factor const& a, Factor const& b) {
      if (a.base != b.base) return a.base < b.base;
      if (a.log_of != b.log_of) return a.log_of < b.log_of;
      return a.label < b.label;
    });
    std::vector<Factor> merged;
    for (auto& f : factors_) {
      if (!merged.empty() && key(merged.back()) == key(f))
        merged.back().exponent += f.exponent;
      else
        merged.push_back(f);
    }
    std::erase_if(merged, [](Factor const& f) { return f.exponent == 0 || (f.base == 1 && f.label.empty()); });
    factors_ = std::move(merged);
  }

  std::size_t height_ = 0;
  std::vector<Factor> factors_;
};

namespace detail {

template <typename N>
std::partial_ordering order_of(N const& a, N const& b) {
  if (a < b) return std::partial_ordering::less;
  if (b < a) return std::partial_ordering::greater;
  return std::partial_ordering::equivalent;
}

// Value T_level(x) with x known through an enclosure.
struct TowerPoint {
  std::size_t level;
  Interval x;
};

inline TowerPoint tower_point(TowerExpr const& t, mpfr_prec_t prec) {
  if (auto exact = t.exact_base(4096)) return {t.height(), Interval::from_rational(*exact, prec)};
  return {t.height() + 1, t.log2_base(prec)};
}

// Keeps the enclosure moderate: exponentiate small arguments down a level and
// take logs of large ones up a level.
inline void normalize(TowerPoint& a) {
  while (a.level >= 1 && mpfr_cmp_si(a.x.hi(), 6) <= 0) {
    a.x = a.x.exp2();
    --a.level;
  }
  while (mpfr_cmp_si(a.x.lo(), 64) > 0) {
    a.x = a.x.log2();
    ++a.level;
  }
}

// Sign of T_{a.level}(a.x) - T_{b.level}(b.x) when certain.
inline std::partial_ordering compare_points(TowerPoint a, TowerPoint b) {
  normalize(a);
  normalize(b);
  bool swapped = false;
  if (a.level < b.level) {
    std::swap(a, b);
    swapped = true;
  }
  auto flip = [&](std::partial_ordering o) {
    if (!swapped || o == std::partial_ordering::unordered || o == std::partial_ordering::equivalent) return o;
    return o == std::partial_ordering::less ? std::partial_ordering::greater : std::partial_ordering::less;
  };
  // T_j is increasing in j on nonnegative arguments, so once a's argument
  // exceeds b's, raising a back to its level only widens the gap.
  while (a.level > b.level) {
    if (mpfr_sgn(a.x.lo()) >= 0 && a.x.certainly_greater(b.x)) return flip(std::partial_ordering::greater);
    a.x = a.x.exp2();
    --a.level;
  }
  if (a.x.certainly_greater(b.x)) return flip(std::partial_ordering::greater);
  if (a.x.certainly_less(b.x)) return flip(std::partial_ordering::less);
  return std::partial_ordering::unordered;
}

}  // namespace detail

/// Default bit budget for numeric expansion; TMPR_TOWER_BITS overrides it.
inline std::uint64_t default_tower_bits() {
  if (char const* env = std::getenv("TMPR_TOWER_BITS")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
  }
  return 1'000'000;
}

struct TowerValue {
  TowerExpr expr;
  std::optional<BigInt> value;  // set when the expansion fits the budget
  bool over_budget = false;
};

/// T_h(x) for an integer x, expanded numerically when every intermediate
/// value fits in `bit_budget` bits.
inline TowerValue tower_eval(std::size_t h, BigInt const& x, std::uint64_t bit_budget = default_tower_bits()) {
  if (x < 0) throw ContractError("tower argument must be nonnegative");
  TowerValue out{TowerExpr(h, Rational(x)), std::nullopt, false};
  BigInt v = x;
  for (std::size_t i = 0; i < h; ++i) {
    if (v + 1 > bit_budget) {
      out.over_budget = true;
      return out;
    }
    v = BigInt(1) << static_cast<std::size_t>(v);
  }
  if (v != 0 && boost::multiprecision::msb(v) + 1 > bit_budget) {
    out.over_budget = true;
    return out;
  }
  out.value = v;
  return out;
}

/// Certified comparison of the values of two towers. Returns unordered only
/// when escalating precision could not separate them.
inline std::partial_ordering compare(TowerExpr const& a, TowerExpr const& b) {
  if (a == b) return std::partial_ordering::equivalent;
  auto ea = a.exact_base(4096);
  auto eb = b.exact_base(4096);
  if (ea && eb && a.height() == b.height()) return detail::order_of(*ea, *eb);
  if (ea && eb && boost::multiprecision::denominator(*ea) == 1 && boost::multiprecision::denominator(*eb) == 1) {
    auto va = tower_eval(a.height(), boost::multiprecision::numerator(*ea), 1 << 16);
    auto vb = tower_eval(b.height(), boost::multiprecision::numerator(*eb), 1 << 16);
    if (va.value && vb.value) return detail::order_of(*va.value, *vb.value);
  }
  for (mpfr_prec_t prec : {128, 512, 2048, 8192}) {
    auto r = detail::compare_points(detail::tower_point(a, prec), detail::tower_point(b, prec));
    if (r != std::partial_ordering::unordered) return r;
  }
  return std::partial_ordering::unordered;
}

}  // namespace tmpr
