#pragma once

#include <memory>
#include <string>
#include <vector>

#include "orbitcensus/exactmath.hpp"

#include "json.hpp"

namespace orbitcensus {

/// Exact rational interval; all star arithmetic runs on these so that
/// sqrt-bearing coefficients stay bracketed instead of rounded.
struct IntervalRat {
  Rational lo, hi;
  static IntervalRat exact(Rational v) { return {v, v}; }
};

/// Evaluation context for one (W, b, m) parameter point: W = r^m.
struct StarContext {
  BigInt W;
  unsigned b = 1;
  unsigned m = 1;
  BigInt r;
  BigInt sqrt_lo, sqrt_hi;   // bracket of sqrt(W); equal when m is even
  unsigned div_m = 0;        // Div(m)
  unsigned d2 = 0, d3 = 0;   // D_2(W-1), D_3(W-1)
  unsigned ind2m = 0;        // 1 if 2 | m
};

/// Expression tree for the per-term coefficients a_i: constants and the
/// parameters W, b, m, sqrtW (interval), DivM, D2, D3 combined with
/// +, -, *, / and integer powers.
class CoefExpr {
 public:
  enum class Param { W, b, m, sqrtW, DivM, D2, D3, Ind2M };

  static CoefExpr constant(long num, long den = 1);
  static CoefExpr constant(const BigInt& v);
  static CoefExpr param(Param p);
  /// W^(1/t) for an odd prime t dividing m; exact (equals r^(m/t)).
  static CoefExpr root(unsigned t);

  CoefExpr() = default;
  friend CoefExpr operator+(const CoefExpr& a, const CoefExpr& b);
  friend CoefExpr operator-(const CoefExpr& a, const CoefExpr& b);
  friend CoefExpr operator*(const CoefExpr& a, const CoefExpr& b);
  friend CoefExpr operator/(const CoefExpr& a, const CoefExpr& b);
  CoefExpr powi(unsigned e) const;

  IntervalRat eval(const StarContext& ctx) const;

 private:
  struct Node;
  explicit CoefExpr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

/// Exponent of |W| in a term bound |C_V(P)| <= |W|^(beta*b). Table rows
/// carry half-integers; the per-prime Galois expansion rows carry e/t.
struct Beta {
  int num = 0;
  int den = 1;
  static Beta whole(int v) { return {v, 1}; }
  static Beta half(int twice) { return {twice, 2}; }
  std::string str() const;
  bool less_than(unsigned e) const { return num < static_cast<int>(e) * den; }
};

struct StarTerm {
  std::string label;
  Beta beta;
  CoefExpr coef;
};

enum class StarVariant { paper_verbatim, corrected };

std::string variant_name(StarVariant v);
StarVariant variant_from_name(const std::string& name);

/// One e-case of the star inequality: the transcribed coefficient table
/// plus the admissibility constraints. Cases with galois_expansion set
/// grow one extra term per prime t | m at evaluation time (the coset
/// counts of Galois elements); e = 9 and e = 3 instead fold those counts
/// into a fixed A5 row.
struct StarCase {
  unsigned e = 0;
  unsigned required_divisor = 2;  // divides |W| - 1
  BigInt af_bound;
  StarVariant variant = StarVariant::corrected;
  std::vector<StarTerm> terms;
  bool galois_expansion = false;
  BigInt galois_two_part;  // coefficient of (sqrtW + 1), beta = e/2
  BigInt galois_odd;       // af * e^2 for odd t rows, beta = e/t
};

StarCase builtin_case(unsigned e, StarVariant v = StarVariant::corrected);

enum class StarStatus { holds, fails, indeterminate };

struct TermReport {
  std::string label;
  std::string beta;
  BigInt a_lower, a_upper;               // ceiled coefficient bracket
  BigInt contribution_lower, contribution_upper;
};

struct StarVerdict {
  StarStatus status = StarStatus::indeterminate;
  unsigned e = 0;
  StarVariant variant = StarVariant::corrected;
  BigInt W;
  unsigned b = 1, m = 1;
  BigInt lhs_lower, lhs_upper, rhs;
  BigInt margin;  // rhs - lhs_upper if holds, lhs_lower - rhs if fails
  std::vector<TermReport> per_term;

  nlohmann::ordered_json to_json() const;
};

/// Throws std::invalid_argument naming the violated constraint when
/// (W, b, m) is inadmissible for the case.
StarVerdict evaluate_star(const StarCase& c, const BigInt& W, unsigned b,
                          unsigned m);

/// True iff W = r^m is admissible for the case; reason set otherwise.
bool star_admissible(const StarCase& c, const BigInt& W, std::string* reason);

enum class ScanMode { prime, prime_power };

struct ScanResult {
  unsigned e = 0;
  unsigned b = 1;
  ScanMode mode = ScanMode::prime;
  StarVariant variant = StarVariant::corrected;
  BigInt cap;
  std::vector<BigInt> failing;
  std::vector<BigInt> indeterminate;
  /// Least W above which no admissible value fails up to cap: the largest
  /// failing (or indeterminate) W, or 0 when everything passes.
  BigInt minimal_pass;

  nlohmann::ordered_json to_json() const;
};

ScanResult scan_thresholds(unsigned e, StarVariant v, unsigned b,
                           ScanMode mode, const BigInt& cap);

/// dim(W) * |A/F| * e^2 * (|W| - 1), exactly.
BigInt group_order_bound(const BigInt& dim_w, const BigInt& af_bound,
                         unsigned e, const BigInt& W);

}  // namespace orbitcensus
