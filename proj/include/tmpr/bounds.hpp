#pragma once

// Numeric bounds for tight-monotone-path Ramsey numbers:
//
//   T_{k-2}(n^{q-1} / (2 sqrt q)) <= MS_k(n; q) <= T_{k-2}(2 n^{q-1})
//   A_k(n; q, p) <= T_{k-3}(n^{C b^2 log b}),  b = C(q, p),  p > q/2
//   log A_k(3pn; (4pq)^{4p}, p) >= min{A_{floor(k/p)-1}(n; q, ceil(p/2)), A_{k-1}(n; (4pq)^{4p}, p)} - 1
//   A_k(n; q, p) >= T_{floor(k/C_p)}((n / (4p)^k)^{g_{p-1}(q)})
//   A_2(n; q, p) >= n^{q/(2p)}
//
// with f(x) = (4px)^{4p}, f_m its m-fold iterate, g_m(q) the largest y with
// f_m(y) <= q, and C_p = 4 p^{10 log p} = 4 * 2^{10 (log2 p)^2}.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tmpr/errors.hpp"
#include "tmpr/interval.hpp"
#include "tmpr/tower.hpp"

namespace tmpr {

/// f(x) = (4px)^{4p}
inline BigInt f_eval(std::size_t p, BigInt const& x) {
  if (p < 1) throw ContractError("f: p must be positive");
  if (x < 0) throw ContractError("f: x must be nonnegative");
  return boost::multiprecision::pow(BigInt(4 * p) * x, static_cast<unsigned>(4 * p));
}

/// f_m(x); throws RangeError when an iterate exceeds `max_bits`.
inline BigInt f_iter(std::size_t p, std::size_t m, BigInt const& x, std::size_t max_bits = 1 << 22) {
  BigInt v = x;
  for (std::size_t i = 0; i < m; ++i) {
    if (v > 0) {
      std::size_t const bits = boost::multiprecision::msb(v) + 1 + boost::multiprecision::msb(BigInt(4 * p)) + 1;
      if (bits * 4 * p > max_bits) throw RangeError("f iterate exceeds the bit limit");
    }
    v = f_eval(p, v);
  }
  return v;
}

struct GValue {
  BigInt value;
  bool positive;  // false when q < f_m(1), i.e. only y = 0 qualifies
};

namespace detail {
// f_m(y) <= q without building iterates larger than q.
inline bool f_iter_at_most(std::size_t p, std::size_t m, BigInt const& y, BigInt const& q) {
  BigInt v = y;
  for (std::size_t i = 0; i < m; ++i) {
    if (v > q) return false;
    v = f_eval(p, v);
  }
  return v <= q;
}
}  // namespace detail

/// g_m(q): the largest integer y >= 0 with f_m(y) <= q, by doubling then
/// bisection (f_m is increasing).
inline GValue g_eval(std::size_t p, std::size_t m, BigInt const& q) {
  if (p < 1) throw ContractError("g: p must be positive");
  if (q < 0) throw ContractError("g: q must be nonnegative");
  if (m == 0) return {q, q >= 1};
  if (!detail::f_iter_at_most(p, m, 1, q)) return {0, false};
  BigInt lo = 1;
  BigInt hi = 2;
  while (detail::f_iter_at_most(p, m, hi, q)) {
    lo = hi;
    hi *= 2;
  }
  while (hi - lo > 1) {
    BigInt const mid = (lo + hi) / 2;
    if (detail::f_iter_at_most(p, m, mid, q))
      lo = mid;
    else
      hi = mid;
  }
  return {lo, true};
}

inline bool is_power_of_two(std::size_t p) { return p && (p & (p - 1)) == 0; }

/// C_p as an enclosure at the given precision.
inline Interval c_p_interval(std::size_t p, mpfr_prec_t prec) {
  if (p < 1) throw ContractError("C_p: p must be positive");
  Interval const l = Interval::log2_of(BigInt(p), prec);
  Interval const e = Interval::point(10, prec) * l * l + Interval::point(2, prec);
  return e.exp2();
}

/// C_p exactly, when p is a power of two: 2^{2 + 10 j^2} for p = 2^j.
inline std::optional<BigInt> c_p_exact(std::size_t p) {
  if (!is_power_of_two(p)) return std::nullopt;
  std::size_t const j = static_cast<std::size_t>(std::countr_zero(p));
  return BigInt(1) << (2 + 10 * j * j);
}

struct CpValue {
  std::optional<BigInt> exact;
  double approx;
  std::string text;  // exact digits or "~<approx>"
};

inline CpValue c_p(std::size_t p) {
  CpValue out;
  out.exact = c_p_exact(p);
  Interval const iv = c_p_interval(p, 128);
  out.approx = iv.mid_double();
  out.text = out.exact ? out.exact->str() : "~" + std::to_string(out.approx);
  return out;
}

/// floor(k / C_p), certified. Raises precision until the enclosure of
/// k / C_p has a single floor; fails loudly otherwise.
inline BigInt floor_k_over_cp(BigInt const& k, std::size_t p) {
  if (k < 0) throw ContractError("floor(k/C_p): k must be nonnegative");
  if (auto ex = c_p_exact(p)) return k / *ex;
  for (mpfr_prec_t prec = 64; prec <= 1 << 14; prec *= 2) {
    Interval const q = Interval::from_int(k, prec) / c_p_interval(p, prec);
    if (auto f = q.certain_floor()) return *f;
  }
  throw RangeError("floor(k/C_p): interval arithmetic could not certify the floor");
}

/// Breakpoints of k -> floor(k / C_p) on [0, k_max]: entry h - 1 is
/// ceil(h C_p), the least k with floor(k / C_p) >= h. Each is certified.
inline std::vector<BigInt> certify_floor_range(std::size_t p, BigInt const& k_max) {
  std::vector<BigInt> out;
  for (BigInt h = 1;; ++h) {
    std::optional<BigInt> t;
    if (auto ex = c_p_exact(p)) {
      t = h * *ex;
    } else {
      for (mpfr_prec_t prec = 64; prec <= 1 << 14 && !t; prec *= 2)
        t = (Interval::from_int(h, prec) * c_p_interval(p, prec)).certain_ceil();
      if (!t) throw RangeError("certify_floor_range: could not certify ceil(h C_p)");
    }
    if (*t > k_max) return out;
    out.push_back(*t);
  }
}

/// 2p C_{p'} <= C_p with p' = ceil(p/2). In log2 terms:
/// 1 + log p + 10 (log p')^2 <= 10 (log p)^2.
inline bool claim5_check(std::size_t p) {
  if (p < 2) throw ContractError("claim 5 needs p >= 2");
  std::size_t const pp = (p + 1) / 2;
  if (auto cp = c_p_exact(p)) {
    if (auto cpp = c_p_exact(pp)) return BigInt(2 * p) * *cpp <= *cp;
  }
  for (mpfr_prec_t prec = 64; prec <= 1 << 14; prec *= 2) {
    Interval const l = Interval::log2_of(BigInt(p), prec);
    Interval const lp = Interval::log2_of(BigInt(pp), prec);
    Interval const ten = Interval::point(10, prec);
    Interval const lhs = Interval::point(1, prec) + l + ten * lp * lp;
    Interval const rhs = ten * l * l;
    if (lhs.certainly_less(rhs)) return true;
    if (lhs.certainly_greater(rhs)) return false;
  }
  throw RangeError("claim5_check: comparison not certified");
}

struct Precondition {
  std::string name;
  bool met;
  std::string detail;
};

struct BoundReport {
  std::string theorem;  // "1", "2", "3", "4", "obs9"
  std::size_t k = 0;
  BigInt n, q, p;
  std::vector<Precondition> preconditions;
  std::optional<TowerExpr> lower;
  std::optional<TowerExpr> upper;
  std::string formula;  // symbolic form with n left as a name
  std::vector<std::pair<std::string, std::string>> extras;

  bool emitted() const { return lower.has_value() || upper.has_value(); }
  bool all_met() const {
    return std::ranges::all_of(preconditions, [](Precondition const& c) { return c.met; });
  }
};

namespace detail {
inline Factor named(BigInt const& v, Rational e, std::string label) { return Factor{Rational(v), e, std::nullopt, label}; }
}  // namespace detail

/// Both sides of T_{k-2}(n^{q-1} / (2 sqrt q)) <= MS_k(n; q) <= T_{k-2}(2 n^{q-1}).
/// n >= n_0 is listed but cannot be checked: n_0 is an unspecified constant.
inline BoundReport theorem1_ms_bounds(std::size_t k, BigInt const& n, BigInt const& q, std::optional<BigInt> n0 = {}) {
  BoundReport r;
  r.theorem = "1";
  r.k = k;
  r.n = n;
  r.q = q;
  r.p = 1;
  r.preconditions.push_back({"k >= 3", k >= 3, "k=" + std::to_string(k)});
  r.preconditions.push_back({"q >= 2", q >= 2, "q=" + q.str()});
  r.preconditions.push_back({"n >= 1", n >= 1, "n=" + n.str()});
  r.preconditions.push_back({"n >= n0", true,
                             n0 ? "n0=" + n0->str() + " supplied by the caller; the constant is unspecified"
                                : "n0 is an unspecified absolute constant; not checked"});
  if (n0 && n < *n0) r.preconditions.back().met = false;
  r.formula = "T^" + std::to_string(k >= 2 ? k - 2 : 0) + "(n^(q-1)/(2*sqrt(q))) <= MS_k(n;q) <= T^" +
              std::to_string(k >= 2 ? k - 2 : 0) + "(2*n^(q-1))";
  if (!r.all_met()) return r;
  Rational const qm1(q - 1);
  r.lower = TowerExpr(k - 2, {detail::named(n, qm1, "n"), Factor{2, -1}, Factor{Rational(q), Rational(-1, 2)}});
  r.upper = TowerExpr(k - 2, {detail::named(n, qm1, "n"), Factor{2, 1}});
  return r;
}

/// T_{k-3}(n^{C b^2 log2 b}) with b = C(q, p) and a caller-chosen constant C
/// (the paper states only O(.)).
inline BoundReport theorem2_upper(std::size_t k, BigInt const& n, std::size_t q, std::size_t p,
                                  Rational const& big_o_c = 1) {
  BoundReport r;
  r.theorem = "2";
  r.k = k;
  r.n = n;
  r.q = q;
  r.p = p;
  r.preconditions.push_back({"k >= 3", k >= 3, "k=" + std::to_string(k)});
  r.preconditions.push_back({"n >= k", n >= k, "n=" + n.str()});
  r.preconditions.push_back({"q > p >= 1", q > p && p >= 1, "q=" + std::to_string(q) + " p=" + std::to_string(p)});
  r.preconditions.push_back({"p > q/2", 2 * p > q, "2p=" + std::to_string(2 * p)});
  BigInt b = 1;
  for (std::size_t i = 0; i < p && q > p; ++i) b = b * (q - i) / (i + 1);
  r.extras.push_back({"binomial", b.str()});
  r.extras.push_back({"big_o_c", rational_text(big_o_c) + " (caller-supplied, not from the paper)"});
  r.formula = "T^" + std::to_string(k >= 3 ? k - 3 : 0) + "(n^(C*" + b.str() + "^2*log2(" + b.str() + ")))";
  if (!r.all_met()) return r;
  Rational const coef = big_o_c * Rational(b * b);
  if (b == 1) {
    r.upper = TowerExpr(k - 3, std::vector<Factor>{});
  } else {
    r.upper = TowerExpr(k - 3, {Factor{Rational(n), coef, b, "n"}});
  }
  return r;
}

/// T_1(min(A1, A2) - 1), the lower bound on A_k(3pn; (4pq)^{4p}, p) implied
/// by the stepping-up inequality, where A1 and A2 bound
/// A_{floor(k/p)-1}(n; q, ceil(p/2)) and A_{k-1}(n; (4pq)^{4p}, p).
inline BoundReport theorem3_rhs(std::size_t k, BigInt const& n, std::size_t q, std::size_t p, BigInt const& a1,
                                BigInt const& a2) {
  BoundReport r;
  r.theorem = "3";
  r.k = k;
  r.n = n;
  r.q = q;
  r.p = p;
  r.preconditions.push_back({"q > p >= 2", q > p && p >= 2, "q=" + std::to_string(q) + " p=" + std::to_string(p)});
  r.preconditions.push_back({"k >= 4p + 1", k >= 4 * p + 1, "k=" + std::to_string(k)});
  r.preconditions.push_back({"n >= 2k", n >= 2 * k, "n=" + n.str()});
  r.preconditions.push_back({"min(A1, A2) >= 1", a1 >= 1 && a2 >= 1, "A1=" + a1.str() + " A2=" + a2.str()});
  r.extras.push_back({"path_length", (BigInt(3 * p) * n).str()});
  r.extras.push_back({"colors", BigInt(boost::multiprecision::pow(BigInt(4 * p * q), static_cast<unsigned>(4 * p))).str()});
  r.formula = "A_k(3pn;(4pq)^(4p),p) >= T^1(min(A1,A2)-1)";
  if (!r.all_met()) return r;
  r.lower = TowerExpr(1, Rational(std::min(a1, a2) - 1));
  return r;
}

/// T_{floor(k/C_p)}((n / (4p)^k)^{g_{p-1}(q)}) with its preconditions
/// q >= f_p(p) and n >= N(k, q, p) = 2 n_0 (4p)^{qk}. Also reports
/// gamma = g_{p-1}(q) / 2 and the simplified T_{floor(k/C_p)}(n^gamma).
inline BoundReport theorem4_bound(std::size_t k, BigInt const& n, BigInt const& q, std::size_t p,
                                  BigInt const& n0 = 1) {
  BoundReport r;
  r.theorem = "4";
  r.k = k;
  r.n = n;
  r.q = q;
  r.p = p;
  if (p < 1) throw ContractError("theorem 4: p must be positive");
  BigInt const height = floor_k_over_cp(k, p);
  r.extras.push_back({"height", height.str()});
  r.extras.push_back({"C_p", c_p(p).text});
  r.extras.push_back({"n0", n0.str() + " (configurable; default 1)"});

  r.preconditions.push_back({"k >= 3", k >= 3, "k=" + std::to_string(k)});
  std::optional<BigInt> q0;
  try {
    q0 = f_iter(p, p, BigInt(p));
  } catch (RangeError const&) {
  }
  r.preconditions.push_back({"q >= q0 = f_p(p)", q0 && q >= *q0,
                             q0 ? "q0 has " + std::to_string(boost::multiprecision::msb(*q0) + 1) + " bits"
                                : "f_p(p) exceeds the evaluation limit"});
  if (q0 && boost::multiprecision::msb(*q0) < 64) r.extras.push_back({"q0", q0->str()});

  // N(k, q, p) = 2 n0 (4p)^{qk}; compare in log2 to avoid building it.
  bool n_ok = false;
  std::string n_detail;
  if (n >= 1 && q >= 1 && n0 >= 1) {
    BigInt const qk = q * k;
    std::size_t const lg = boost::multiprecision::msb(BigInt(4 * p));
    if (is_power_of_two(4 * p) && qk * lg < (BigInt(1) << 24)) {
      BigInt const big = 2 * n0 * (BigInt(1) << static_cast<std::size_t>(qk * lg));
      n_ok = n >= big;
      n_detail = "N(k,q,p) has " + std::to_string(boost::multiprecision::msb(big) + 1) + " bits";
    } else if (qk < (BigInt(1) << 20)) {
      BigInt const big = 2 * n0 * boost::multiprecision::pow(BigInt(4 * p), static_cast<unsigned>(qk));
      n_ok = n >= big;
      n_detail = "N(k,q,p) has " + std::to_string(boost::multiprecision::msb(big) + 1) + " bits";
    } else {
      n_detail = "N(k,q,p) too large to evaluate";
    }
  }
  r.preconditions.push_back({"n >= N(k,q,p) = 2*n0*(4p)^(qk)", n_ok, n_detail});

  std::string const fp = std::to_string(4 * p);
  r.formula = "T^" + height.str() + "((n/" + fp + "^" + std::to_string(k) + ")^(g_" + std::to_string(p - 1) + "(q)))";
  if (!r.all_met()) return r;

  GValue const g = g_eval(p, p - 1, q);
  r.extras.push_back({"g", g.value.str()});
  r.extras.push_back({"gamma", rational_text(Rational(g.value, 2))});
  std::size_t const h = static_cast<std::size_t>(height);
  Rational const ge(g.value);
  r.lower = TowerExpr(h, {detail::named(n, ge, "n"), Factor{Rational(4 * p), -ge * k}});
  r.extras.push_back({"simplified", TowerExpr(h, {detail::named(n, Rational(g.value, 2), "n")}).str()});
  r.formula = "T^" + height.str() + "((n/" + fp + "^" + std::to_string(k) + ")^(" + g.value.str() + "))";
  return r;
}

/// Least integer >= n^{q/(2p)}: the smallest c with c^{2p} >= n^q.
inline BigInt ceil_rational_power(BigInt const& n, std::size_t q, std::size_t p) {
  BigInt const target = boost::multiprecision::pow(n, static_cast<unsigned>(q));
  unsigned const root = static_cast<unsigned>(2 * p);
  BigInt lo = 0;
  BigInt hi = 1;
  while (boost::multiprecision::pow(hi, root) < target) hi *= 2;
  while (hi - lo > 1) {
    BigInt const mid = (lo + hi) / 2;
    if (boost::multiprecision::pow(mid, root) >= target)
      hi = mid;
    else
      lo = mid;
  }
  return boost::multiprecision::pow(lo, root) >= target ? lo : hi;
}

/// A_2(n; q, p) >= n^{q/(2p)}. The construction behind it colors K_N with
/// N = ceil(n^{1/(2p)})^q, which is also reported.
inline BoundReport obs9_bound(BigInt const& n, std::size_t q, std::size_t p) {
  BoundReport r;
  r.theorem = "obs9";
  r.k = 2;
  r.n = n;
  r.q = q;
  r.p = p;
  if (p < 1) throw ContractError("observation 9: p must be positive");
  BigInt const least = BigInt(1) << (2 * p);
  r.preconditions.push_back({"n >= 2^(2p)", n >= least, "2^(2p)=" + least.str()});
  r.preconditions.push_back({"q > p", q > p, "q=" + std::to_string(q)});
  r.formula = "A_2(n;q,p) >= n^(" + rational_text(Rational(q, 2 * p)) + ")";
  if (!r.all_met()) return r;
  r.lower = TowerExpr(0, {detail::named(n, Rational(q, 2 * p), "n")});
  BigInt const bound = ceil_rational_power(n, q, p);
  r.extras.push_back({"bound_ceil", bound.str()});
  BigInt const side = ceil_rational_power(n, 1, p);
  r.extras.push_back({"construction_N", BigInt(boost::multiprecision::pow(side, static_cast<unsigned>(q))).str()});
  return r;
}

}  // namespace tmpr
