#include "orbitcensus/starcheck.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace orbitcensus {

namespace {

Rational rat_min(const Rational& a, const Rational& b) { return a < b ? a : b; }
Rational rat_max(const Rational& a, const Rational& b) { return a < b ? b : a; }

IntervalRat iv_add(const IntervalRat& a, const IntervalRat& b) {
  return {a.lo + b.lo, a.hi + b.hi};
}
IntervalRat iv_sub(const IntervalRat& a, const IntervalRat& b) {
  return {a.lo - b.hi, a.hi - b.lo};
}
IntervalRat iv_mul(const IntervalRat& a, const IntervalRat& b) {
  Rational p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo,
           p4 = a.hi * b.hi;
  return {rat_min(rat_min(p1, p2), rat_min(p3, p4)),
          rat_max(rat_max(p1, p2), rat_max(p3, p4))};
}
IntervalRat iv_div(const IntervalRat& a, const IntervalRat& b) {
  if (b.lo <= 0)
    throw std::domain_error("CoefExpr: division by non-positive interval");
  Rational p1 = a.lo / b.lo, p2 = a.lo / b.hi, p3 = a.hi / b.lo,
           p4 = a.hi / b.hi;
  return {rat_min(rat_min(p1, p2), rat_min(p3, p4)),
          rat_max(rat_max(p1, p2), rat_max(p3, p4))};
}

BigInt ceil_rat(const Rational& q) {
  BigInt quot;
  mpz_cdiv_q(quot.get_mpz_t(), q.get_num().get_mpz_t(),
             q.get_den().get_mpz_t());
  return quot;
}

}  // namespace

struct CoefExpr::Node {
  enum class Kind { constant, param, root, add, sub, mul, div, pow };
  Kind kind;
  Rational value;      // constant
  Param param{};       // param
  unsigned root_t = 0; // root
  unsigned exp = 1;    // pow
  std::shared_ptr<const Node> a, b;
};

CoefExpr CoefExpr::constant(long num, long den) {
  auto n = std::make_shared<Node>();
  n->kind = Node::Kind::constant;
  n->value = Rational(num, den);
  n->value.canonicalize();
  CoefExpr e;
  e.node_ = n;
  return e;
}

CoefExpr CoefExpr::constant(const BigInt& v) {
  auto n = std::make_shared<Node>();
  n->kind = Node::Kind::constant;
  n->value = Rational(v);
  CoefExpr e;
  e.node_ = n;
  return e;
}

CoefExpr CoefExpr::param(Param p) {
  auto n = std::make_shared<Node>();
  n->kind = Node::Kind::param;
  n->param = p;
  CoefExpr e;
  e.node_ = n;
  return e;
}

CoefExpr CoefExpr::root(unsigned t) {
  auto n = std::make_shared<Node>();
  n->kind = Node::Kind::root;
  n->root_t = t;
  CoefExpr e;
  e.node_ = n;
  return e;
}

#define OC_COEF_BINARY(OP, KIND)                                  \
  CoefExpr operator OP(const CoefExpr& a, const CoefExpr& b) {    \
    auto n = std::make_shared<CoefExpr::Node>();                  \
    n->kind = CoefExpr::Node::Kind::KIND;                         \
    n->a = a.node_;                                               \
    n->b = b.node_;                                               \
    return CoefExpr(std::move(n));                                \
  }

OC_COEF_BINARY(+, add)
OC_COEF_BINARY(-, sub)
OC_COEF_BINARY(*, mul)
OC_COEF_BINARY(/, div)
#undef OC_COEF_BINARY

CoefExpr CoefExpr::powi(unsigned e) const {
  auto n = std::make_shared<Node>();
  n->kind = Node::Kind::pow;
  n->exp = e;
  n->a = node_;
  return CoefExpr(std::move(n));
}

IntervalRat CoefExpr::eval(const StarContext& ctx) const {
  if (!node_) throw std::logic_error("CoefExpr: empty expression");
  const Node& n = *node_;
  switch (n.kind) {
    case Node::Kind::constant:
      return IntervalRat::exact(n.value);
    case Node::Kind::param:
      switch (n.param) {
        case Param::W:
          return IntervalRat::exact(Rational(ctx.W));
        case Param::b:
          return IntervalRat::exact(Rational(static_cast<long>(ctx.b)));
        case Param::m:
          return IntervalRat::exact(Rational(static_cast<long>(ctx.m)));
        case Param::sqrtW:
          return {Rational(ctx.sqrt_lo), Rational(ctx.sqrt_hi)};
        case Param::DivM:
          return IntervalRat::exact(Rational(static_cast<long>(ctx.div_m)));
        case Param::D2:
          return IntervalRat::exact(Rational(static_cast<long>(ctx.d2)));
        case Param::D3:
          return IntervalRat::exact(Rational(static_cast<long>(ctx.d3)));
        case Param::Ind2M:
          return IntervalRat::exact(Rational(static_cast<long>(ctx.ind2m)));
      }
      throw std::logic_error("CoefExpr: bad param");
    case Node::Kind::root: {
      if (ctx.m % n.root_t != 0)
        throw std::domain_error("CoefExpr: root index does not divide m");
      BigInt v = bigint_pow(ctx.r, ctx.m / n.root_t);
      return IntervalRat::exact(Rational(v));
    }
    case Node::Kind::add:
      return iv_add(CoefExpr{n.a}.eval(ctx), CoefExpr{n.b}.eval(ctx));
    case Node::Kind::sub:
      return iv_sub(CoefExpr{n.a}.eval(ctx), CoefExpr{n.b}.eval(ctx));
    case Node::Kind::mul:
      return iv_mul(CoefExpr{n.a}.eval(ctx), CoefExpr{n.b}.eval(ctx));
    case Node::Kind::div:
      return iv_div(CoefExpr{n.a}.eval(ctx), CoefExpr{n.b}.eval(ctx));
    case Node::Kind::pow: {
      IntervalRat r = IntervalRat::exact(Rational(1));
      IntervalRat base = CoefExpr{n.a}.eval(ctx);
      for (unsigned i = 0; i < n.exp; ++i) r = iv_mul(r, base);
      return r;
    }
  }
  throw std::logic_error("CoefExpr: bad node");
}

std::string Beta::str() const {
  if (den == 1) return std::to_string(num);
  if (den == 2 && num % 2 == 0) return std::to_string(num / 2);
  if (den == 2) return std::to_string(num / 2) + "." + (num % 2 ? "5" : "0");
  return std::to_string(num) + "/" + std::to_string(den);
}

std::string variant_name(StarVariant v) {
  return v == StarVariant::paper_verbatim ? "paper-verbatim" : "corrected";
}

StarVariant variant_from_name(const std::string& name) {
  if (name == "paper" || name == "paper-verbatim")
    return StarVariant::paper_verbatim;
  if (name == "corrected") return StarVariant::corrected;
  throw std::invalid_argument("unknown variant: " + name);
}

namespace {

using P = CoefExpr::Param;

CoefExpr c(long num, long den = 1) { return CoefExpr::constant(num, den); }
CoefExpr cw() { return CoefExpr::param(P::W); }
CoefExpr csqrt() { return CoefExpr::param(P::sqrtW); }
CoefExpr cdivm() { return CoefExpr::param(P::DivM); }
CoefExpr cd2() { return CoefExpr::param(P::D2); }
CoefExpr cd3() { return CoefExpr::param(P::D3); }
CoefExpr cind2() { return CoefExpr::param(P::Ind2M); }

StarTerm term(std::string label, Beta beta, CoefExpr coef) {
  return StarTerm{std::move(label), beta, std::move(coef)};
}

// Galois-coset row for e in {9, 3}: every prime t | m contributes
// generic*(W-1) subgroups except t = 2, which is refined to the
// (sqrtW + 1) coset count; all sit at one half-integer beta.
CoefExpr folded_galois_coef(const CoefExpr& generic, const CoefExpr& two_part) {
  return (cdivm() - cind2()) * generic * (cw() - c(1)) +
         cind2() * two_part * (csqrt() + c(1));
}

BigInt bp(long base, unsigned exp) { return bigint_pow(BigInt(base), exp); }

}  // namespace

StarCase builtin_case(unsigned e, StarVariant v) {
  StarCase sc;
  sc.e = e;
  sc.variant = v;
  bool verbatim = v == StarVariant::paper_verbatim;
  switch (e) {
    case 16:
      sc.required_divisor = 2;
      sc.af_bound = bp(6, 4) * 24;
      sc.terms = {
          term("A1", Beta::whole(8), c(2).powi(8)),
          term("A2", Beta::whole(12), c(90) * c(2).powi(2) * c(2)),
          term("A3", Beta::whole(10), c(513) * c(2).powi(4) * c(2)),
          term("A4", Beta::whole(8), c(1883) * c(2).powi(8) * c(2)),
      };
      sc.galois_expansion = true;
      sc.galois_two_part = bp(6, 4) * 24 * bp(2, 8);
      sc.galois_odd = sc.af_bound * e * e;
      break;
    case 9:
      sc.required_divisor = 3;
      sc.af_bound = bp(24, 2) * 2;
      sc.terms = {
          term("A1", Beta::whole(3), c(3).powi(5) / c(2)),
          term("A2", Beta::whole(6), c(95) * c(3).powi(4) * c(2)),
          term("A3", Beta::whole(6), c(16) * c(3).powi(4) / c(2)),
          term("A4", verbatim ? Beta::whole(6) : Beta::whole(5),
               c(95) * c(3).powi(5) / c(2)),
          term("A5", Beta::half(9),
               folded_galois_coef(c(2) * c(24).powi(2) * c(3).powi(4),
                                  c(2) * c(24).powi(2) * c(3).powi(4))),
      };
      break;
    case 8:
      sc.required_divisor = 2;
      sc.af_bound = bp(6, 4);
      sc.terms = {
          term("A1", Beta::whole(4), c(2).powi(8)),
          term("A21", Beta::whole(6), c(45) * c(2).powi(2)),
          term("A22", Beta::whole(2), c(45) * c(2).powi(2)),
          term("A3", Beta::whole(4), c(135) * c(2).powi(6) * c(2)),
          term("A4", Beta::whole(4), c(248) * c(2).powi(6) * c(3) / c(2)),
      };
      sc.galois_expansion = true;
      sc.galois_two_part = bp(6, 4) * bp(2, 6);
      sc.galois_odd = sc.af_bound * e * e;
      break;
    case 4:
      sc.required_divisor = 2;
      sc.af_bound = bp(6, 2) * 2;
      sc.terms = {
          term("A1", Beta::whole(2), c(2).powi(5)),
          term("A21", Beta::whole(3), c(15) * c(2).powi(2)),
          term("A22", verbatim ? Beta::whole(3) : Beta::whole(1),
               c(15) * c(2).powi(2)),
          term("A3", Beta::whole(2), c(21) * c(2).powi(4) * c(2)),
          term("A4", Beta::whole(2),
               (c(4) * c(2).powi(2) + c(4) * c(2).powi(4)) * cd3() / c(2)),
      };
      sc.galois_expansion = true;
      sc.galois_two_part = BigInt(2) * bp(6, 2) * bp(2, 4);
      sc.galois_odd = sc.af_bound * e * e;
      break;
    case 3:
      sc.required_divisor = 3;
      sc.af_bound = 24;
      sc.terms = {
          term("A1", Beta::whole(1), c(3).powi(3) / c(2)),
          term("A2", Beta::whole(2), c(1) * c(3).powi(2) * cd2()),
          term("A31", Beta::whole(2), c(8) * c(3).powi(2) / c(2)),
          term("A32", Beta::whole(1), c(8) * c(3).powi(2) / c(2)),
          term("A33", Beta::whole(0), c(8) * c(3).powi(2) / c(2)),
          term("A5", Beta::half(3),
               folded_galois_coef(c(24) * c(3).powi(2),
                                  verbatim ? c(1, 2) * c(24) * c(3).powi(2)
                                           : c(24) * c(3).powi(2))),
      };
      break;
    case 2:
      sc.required_divisor = 2;
      sc.af_bound = 6;
      sc.terms = {
          term("A1", Beta::whole(1), c(4)),
          term("A2", Beta::whole(1), c(3) * c(2).powi(2) * c(2)),
          term("A3", Beta::whole(1), c(2) * c(2).powi(2) * cd3() / c(2)),
      };
      sc.galois_expansion = true;
      // order-2 refinement: 6*2^2 as printed, 3*2^2 after the Q8 o Z4 study
      sc.galois_two_part =
          (verbatim ? BigInt(6) : BigInt(3)) * bp(2, 2);
      sc.galois_odd = sc.af_bound * e * e;
      break;
    default:
      throw std::invalid_argument("builtin_case: e must be one of 2,3,4,8,9,16");
  }
  return sc;
}

namespace {

struct Admissibility {
  bool ok = false;
  BigInt r;
  unsigned m = 0;
  std::string reason;
};

Admissibility check_admissible(const StarCase& c, const BigInt& W,
                               int expect_m) {
  Admissibility a;
  if (W < 2) {
    a.reason = "W must be >= 2";
    return a;
  }
  auto pp = prime_power(W);
  if (!pp) {
    a.reason = "W is not a prime power";
    return a;
  }
  a.r = pp->first;
  a.m = static_cast<unsigned>(pp->second);
  if (expect_m >= 0 && a.m != static_cast<unsigned>(expect_m)) {
    a.reason = "m does not match the prime-power decomposition of W";
    return a;
  }
  if (!mpz_divisible_ui_p(BigInt(W - 1).get_mpz_t(), c.required_divisor)) {
    a.reason = std::to_string(c.required_divisor) + " does not divide W-1";
    return a;
  }
  if (a.r <= c.e &&
      mpz_divisible_p(BigInt(c.e).get_mpz_t(), a.r.get_mpz_t())) {
    a.reason = "gcd(r, e) != 1";
    return a;
  }
  a.ok = true;
  return a;
}

struct IntervalInt {
  BigInt lo, hi;
};

// W^(beta*b) as an exact value or a sqrt bracket.
IntervalInt pow_beta(const StarContext& ctx, Beta beta) {
  long num = static_cast<long>(beta.num) * ctx.b;
  long den = beta.den;
  long total_num = num * ctx.m;  // exponent of r is total_num / den
  if (total_num % den == 0) {
    BigInt v = bigint_pow(ctx.r, static_cast<unsigned long>(total_num / den));
    return {v, v};
  }
  if (den == 2) {
    HalfInt h(num);  // beta*b as a half-integer exponent of W
    return {pow_half(ctx.W, h, RoundMode::lower),
            pow_half(ctx.W, h, RoundMode::upper)};
  }
  throw std::logic_error("pow_beta: non-half fractional exponent with t∤m");
}

std::vector<std::uint32_t> odd_primes_dividing(unsigned m) {
  std::vector<std::uint32_t> out;
  unsigned rest = m;
  for (unsigned p = 3; p <= rest; ++p) {
    if (rest % p != 0) continue;
    bool prime = true;
    for (unsigned d = 2; d * d <= p; ++d)
      if (p % d == 0) prime = false;
    if (prime) out.push_back(p);
    while (rest % p == 0) rest /= p;
  }
  return out;
}

}  // namespace

bool star_admissible(const StarCase& c, const BigInt& W, std::string* reason) {
  Admissibility a = check_admissible(c, W, -1);
  if (!a.ok && reason) *reason = a.reason;
  return a.ok;
}

StarVerdict evaluate_star(const StarCase& c, const BigInt& W, unsigned b,
                          unsigned m) {
  if (b < 1) throw std::invalid_argument("evaluate_star: b must be >= 1");
  Admissibility adm = check_admissible(c, W, static_cast<int>(m));
  if (!adm.ok)
    throw std::invalid_argument("evaluate_star: inadmissible parameters: " +
                                adm.reason);

  StarContext ctx;
  ctx.W = W;
  ctx.b = b;
  ctx.m = m;
  ctx.r = adm.r;
  if (m % 2 == 0) {
    ctx.sqrt_lo = ctx.sqrt_hi = bigint_pow(adm.r, m / 2);
  } else {
    ctx.sqrt_lo = isqrt_floor(W);
    ctx.sqrt_hi = isqrt_ceil(W);
  }
  ctx.div_m = div_count(m);
  ctx.d2 = mpz_divisible_ui_p(BigInt(W - 1).get_mpz_t(), 2) ? 2 : 0;
  ctx.d3 = mpz_divisible_ui_p(BigInt(W - 1).get_mpz_t(), 3) ? 3 : 0;
  ctx.ind2m = m % 2 == 0 ? 1 : 0;

  std::vector<StarTerm> rows = c.terms;
  if (c.galois_expansion && m > 1) {
    // one row per prime t | m:  t = 2 uses the printed (sqrtW+1) coset
    // count at beta = e/2; odd t uses the Galois norm count
    // af*e^2*(W-1)/(W^(1/t)-1) at beta = e/t, both exact here.
    const CoefExpr one = CoefExpr::constant(1);
    if (m % 2 == 0)
      rows.push_back(term("A5[t=2]", Beta::half(static_cast<int>(c.e)),
                          CoefExpr::constant(c.galois_two_part) *
                              (csqrt() + one)));
    for (std::uint32_t t : odd_primes_dividing(m))
      rows.push_back(
          term("A5[t=" + std::to_string(t) + "]",
               Beta{static_cast<int>(c.e), static_cast<int>(t)},
               CoefExpr::constant(c.galois_odd) * (cw() - one) /
                   (CoefExpr::root(t) - one)));
  }

  StarVerdict verdict;
  verdict.e = c.e;
  verdict.variant = c.variant;
  verdict.W = W;
  verdict.b = b;
  verdict.m = m;
  verdict.lhs_lower = 0;
  verdict.lhs_upper = 0;
  for (const StarTerm& t : rows) {
    if (!t.beta.less_than(c.e))
      throw std::logic_error("star term with beta >= e: " + t.label);
    IntervalRat a = t.coef.eval(ctx);
    if (a.lo < 0)
      throw std::logic_error("negative coefficient in term " + t.label);
    TermReport rep;
    rep.label = t.label;
    rep.beta = t.beta.str();
    rep.a_lower = ceil_rat(a.lo);
    rep.a_upper = ceil_rat(a.hi);
    IntervalInt p = pow_beta(ctx, t.beta);
    rep.contribution_lower = rep.a_lower * (p.lo - 1);
    rep.contribution_upper = rep.a_upper * (p.hi - 1);
    verdict.lhs_lower += rep.contribution_lower;
    verdict.lhs_upper += rep.contribution_upper;
    verdict.per_term.push_back(std::move(rep));
  }
  verdict.rhs =
      bigint_pow(W, static_cast<unsigned long>(c.e) * b) - 1;
  if (verdict.lhs_upper < verdict.rhs) {
    verdict.status = StarStatus::holds;
    verdict.margin = verdict.rhs - verdict.lhs_upper;
  } else if (verdict.lhs_lower >= verdict.rhs) {
    verdict.status = StarStatus::fails;
    verdict.margin = verdict.lhs_lower - verdict.rhs;
  } else {
    verdict.status = StarStatus::indeterminate;
    verdict.margin = 0;
  }
  return verdict;
}

nlohmann::ordered_json StarVerdict::to_json() const {
  nlohmann::ordered_json j;
  j["e"] = e;
  j["variant"] = variant_name(variant);
  j["W"] = to_decimal(W);
  j["b"] = b;
  j["m"] = m;
  j["verdict"] = status == StarStatus::holds
                     ? "holds"
                     : status == StarStatus::fails ? "fails" : "indeterminate";
  j["lhs_upper"] = to_decimal(lhs_upper);
  j["lhs_lower"] = to_decimal(lhs_lower);
  j["rhs"] = to_decimal(rhs);
  j["margin"] = to_decimal(margin);
  nlohmann::ordered_json terms(nlohmann::ordered_json::value_t::array);
  for (const TermReport& t : per_term) {
    nlohmann::ordered_json tj;
    tj["label"] = t.label;
    tj["beta"] = t.beta;
    tj["a"] = to_decimal(t.a_upper);
    tj["contribution"] = to_decimal(t.contribution_upper);
    terms.push_back(tj);
  }
  j["per_term"] = terms;
  return j;
}

namespace {

const BigInt& claimed_threshold(unsigned e, ScanMode mode) {
  static const std::map<std::pair<unsigned, ScanMode>, BigInt> claims = {
      {{16, ScanMode::prime}, 7},        {{16, ScanMode::prime_power}, 7},
      {{9, ScanMode::prime}, 29},        {{9, ScanMode::prime_power}, 121},
      {{8, ScanMode::prime}, 19},        {{8, ScanMode::prime_power}, 49},
      {{4, ScanMode::prime}, 71},        {{4, ScanMode::prime_power}, 121},
      {{3, ScanMode::prime}, 61},        {{3, ScanMode::prime_power}, 256},
      {{2, ScanMode::prime}, 41},        {{2, ScanMode::prime_power}, 289},
  };
  auto it = claims.find({e, mode});
  if (it == claims.end())
    throw std::invalid_argument("scan_thresholds: unknown case");
  return it->second;
}

}  // namespace

ScanResult scan_thresholds(unsigned e, StarVariant v, unsigned b,
                           ScanMode mode, const BigInt& cap) {
  if (cap < claimed_threshold(e, mode))
    throw std::invalid_argument(
        "scan_thresholds: cap below the claimed threshold for this case");
  StarCase c = builtin_case(e, v);
  ScanResult result;
  result.e = e;
  result.b = b;
  result.mode = mode;
  result.variant = v;
  result.cap = cap;
  for (BigInt W = 2; W <= cap; ++W) {
    if (mode == ScanMode::prime && !is_prime(W)) continue;
    std::string reason;
    if (!star_admissible(c, W, &reason)) continue;
    unsigned m = static_cast<unsigned>(prime_power(W)->second);
    StarVerdict verdict = evaluate_star(c, W, b, m);
    if (verdict.status == StarStatus::fails)
      result.failing.push_back(W);
    else if (verdict.status == StarStatus::indeterminate)
      result.indeterminate.push_back(W);
  }
  result.minimal_pass = 0;
  for (const BigInt& w : result.failing)
    if (w > result.minimal_pass) result.minimal_pass = w;
  for (const BigInt& w : result.indeterminate)
    if (w > result.minimal_pass) result.minimal_pass = w;
  return result;
}

nlohmann::ordered_json ScanResult::to_json() const {
  nlohmann::ordered_json j;
  j["e"] = e;
  j["b"] = b;
  j["mode"] = mode == ScanMode::prime ? "prime" : "prime-power";
  j["variant"] = variant_name(variant);
  j["cap"] = to_decimal(cap);
  nlohmann::ordered_json f(nlohmann::ordered_json::value_t::array);
  for (const BigInt& w : failing) f.push_back(to_decimal(w));
  j["failing"] = f;
  nlohmann::ordered_json ind(nlohmann::ordered_json::value_t::array);
  for (const BigInt& w : indeterminate) ind.push_back(to_decimal(w));
  j["indeterminate"] = ind;
  j["minimal_pass"] = to_decimal(minimal_pass);
  return j;
}

BigInt group_order_bound(const BigInt& dim_w, const BigInt& af_bound,
                         unsigned e, const BigInt& W) {
  if (dim_w < 1 || af_bound < 1 || e < 1 || W < 2)
    throw std::invalid_argument("group_order_bound: inputs must be positive");
  return dim_w * af_bound * BigInt(e) * BigInt(e) * (W - 1);
}

}  // namespace orbitcensus
