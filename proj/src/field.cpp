#include "nearassoc/field.hpp"

namespace nearassoc {

namespace {

bool is_prime(unsigned p) {
  if (p < 2) return false;
  for (unsigned q = 2; q * q <= p; ++q)
    if (p % q == 0) return false;
  return true;
}

bool is_square_free(long long d) {
  long long m = d < 0 ? -d : d;
  for (long long q = 2; q * q <= m; ++q) {
    if (m % (q * q) == 0) return false;
  }
  return true;
}

void require_same_context(const Scalar& a, const Scalar& b) {
  if (a.context() != b.context())
    fail(Errc::ContextMismatch,
         a.context().describe() + " vs " + b.context().describe());
}

uint32_t mod_inverse(uint32_t a, uint32_t p) {
  // p <= 251 and prime, so Fermat is plenty
  uint64_t result = 1, base = a % p;
  unsigned exp = p - 2;
  while (exp) {
    if (exp & 1) result = result * base % p;
    base = base * base % p;
    exp >>= 1;
  }
  return static_cast<uint32_t>(result);
}

// Exact square root of a non-negative rational, if it is a perfect square.
std::optional<Rational> rational_sqrt(const Rational& x) {
  if (x < 0) return std::nullopt;
  const BigInt num = numerator(x), den = denominator(x);
  const BigInt rn = boost::multiprecision::sqrt(num);
  const BigInt rd = boost::multiprecision::sqrt(den);
  if (rn * rn != num || rd * rd != den) return std::nullopt;
  return Rational(rn, rd);
}

Rational parse_rational(std::string_view text) {
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  if (text.empty()) fail(Errc::ParseError, "empty scalar literal");
  for (char ch : text) {
    if (!(ch == '-' || ch == '+' || ch == '/' || (ch >= '0' && ch <= '9')))
      fail(Errc::ParseError, "bad character in rational literal '" + std::string(text) + "'");
  }
  const auto slash = text.find('/');
  if (slash != std::string_view::npos) {
    if (text.find('/', slash + 1) != std::string_view::npos)
      fail(Errc::ParseError, "multiple '/' in rational literal '" + std::string(text) + "'");
    if (slash == 0 || slash + 1 == text.size())
      fail(Errc::ParseError, "missing numerator or denominator in '" + std::string(text) + "'");
  }
  try {
    Rational value{std::string(text)};
    return value;
  } catch (const std::exception&) {
    fail(Errc::ParseError, "bad rational literal '" + std::string(text) + "'");
  }
}

}  // namespace

FieldContext FieldContext::rationals() { return FieldContext(FieldKind::Rationals, 0, 0); }

FieldContext FieldContext::quadratic(long long d) {
  if (d == 0 || d == 1 || !is_square_free(d))
    fail(Errc::InvalidParams, "quadratic extension needs square-free d, not 0 or 1; got " +
                                  std::to_string(d));
  return FieldContext(FieldKind::Quadratic, d, 0);
}

FieldContext FieldContext::prime(unsigned p) {
  if (p > 251 || !is_prime(p))
    fail(Errc::InvalidParams, "prime field needs a prime p <= 251; got " + std::to_string(p));
  return FieldContext(FieldKind::Prime, 0, p);
}

std::string FieldContext::describe() const {
  switch (kind_) {
    case FieldKind::Rationals: return "Q";
    case FieldKind::Quadratic: return "Q(rt " + std::to_string(d_) + ")";
    case FieldKind::Prime: return "F_" + std::to_string(p_);
  }
  return "?";
}

Scalar Scalar::zero(const FieldContext& ctx) { return Scalar(ctx); }

Scalar Scalar::one(const FieldContext& ctx) { return of_int(ctx, 1); }

Scalar Scalar::of_int(const FieldContext& ctx, long long value) {
  Scalar s(ctx);
  if (ctx.kind() == FieldKind::Prime) {
    long long m = value % static_cast<long long>(ctx.p());
    if (m < 0) m += ctx.p();
    s.r_ = static_cast<uint32_t>(m);
  } else {
    s.a_ = value;
  }
  return s;
}

Scalar Scalar::of_rational(const FieldContext& ctx, const Rational& value) {
  if (ctx.kind() == FieldKind::Prime) {
    // reduce p/q mod p only when q is invertible
    const FieldContext& c = ctx;
    BigInt num = numerator(value) % c.p();
    BigInt den = denominator(value) % c.p();
    if (den == 0) fail(Errc::DivisionByZero, "denominator vanishes mod p");
    if (num < 0) num += c.p();
    uint32_t n = static_cast<uint32_t>(num), d = static_cast<uint32_t>(den);
    Scalar s(ctx);
    s.r_ = static_cast<uint32_t>(uint64_t(n) * mod_inverse(d, c.p()) % c.p());
    return s;
  }
  Scalar s(ctx);
  s.a_ = value;
  return s;
}

Scalar Scalar::quadratic(const FieldContext& ctx, const Rational& a, const Rational& b) {
  if (ctx.kind() != FieldKind::Quadratic)
    fail(Errc::ContextMismatch, "radical coefficient outside a quadratic context");
  Scalar s(ctx);
  s.a_ = a;
  s.b_ = b;
  return s;
}

bool Scalar::is_zero() const {
  switch (ctx_.kind()) {
    case FieldKind::Rationals: return a_ == 0;
    case FieldKind::Quadratic: return a_ == 0 && b_ == 0;
    case FieldKind::Prime: return r_ == 0;
  }
  return false;
}

bool Scalar::is_one() const {
  switch (ctx_.kind()) {
    case FieldKind::Rationals: return a_ == 1;
    case FieldKind::Quadratic: return a_ == 1 && b_ == 0;
    case FieldKind::Prime: return r_ == 1;
  }
  return false;
}

Scalar Scalar::operator-() const {
  Scalar s(ctx_);
  if (ctx_.kind() == FieldKind::Prime) {
    s.r_ = r_ == 0 ? 0 : ctx_.p() - r_;
  } else {
    s.a_ = -a_;
    s.b_ = -b_;
  }
  return s;
}

Scalar operator+(const Scalar& lhs, const Scalar& rhs) {
  require_same_context(lhs, rhs);
  Scalar s(lhs.ctx_);
  if (lhs.ctx_.kind() == FieldKind::Prime) {
    s.r_ = (lhs.r_ + rhs.r_) % lhs.ctx_.p();
  } else {
    s.a_ = lhs.a_ + rhs.a_;
    s.b_ = lhs.b_ + rhs.b_;
  }
  return s;
}

Scalar operator-(const Scalar& lhs, const Scalar& rhs) {
  require_same_context(lhs, rhs);
  Scalar s(lhs.ctx_);
  if (lhs.ctx_.kind() == FieldKind::Prime) {
    s.r_ = (lhs.r_ + lhs.ctx_.p() - rhs.r_) % lhs.ctx_.p();
  } else {
    s.a_ = lhs.a_ - rhs.a_;
    s.b_ = lhs.b_ - rhs.b_;
  }
  return s;
}

Scalar operator*(const Scalar& lhs, const Scalar& rhs) {
  require_same_context(lhs, rhs);
  Scalar s(lhs.ctx_);
  switch (lhs.ctx_.kind()) {
    case FieldKind::Prime:
      s.r_ = static_cast<uint32_t>(uint64_t(lhs.r_) * rhs.r_ % lhs.ctx_.p());
      break;
    case FieldKind::Rationals:
      s.a_ = lhs.a_ * rhs.a_;
      break;
    case FieldKind::Quadratic:
      // (a1 + b1 rt)(a2 + b2 rt) = a1 a2 + d b1 b2 + (a1 b2 + a2 b1) rt
      s.a_ = lhs.a_ * rhs.a_ + Rational(lhs.ctx_.d()) * lhs.b_ * rhs.b_;
      s.b_ = lhs.a_ * rhs.b_ + lhs.b_ * rhs.a_;
      break;
  }
  return s;
}

Scalar Scalar::inverse() const {
  if (is_zero()) fail(Errc::DivisionByZero, "inverse of zero");
  Scalar s(ctx_);
  switch (ctx_.kind()) {
    case FieldKind::Prime:
      s.r_ = mod_inverse(r_, ctx_.p());
      break;
    case FieldKind::Rationals:
      s.a_ = 1 / a_;
      break;
    case FieldKind::Quadratic: {
      // 1/(a + b rt) = (a - b rt) / (a^2 - d b^2); the norm is nonzero since
      // d is not a rational square.
      Rational norm = a_ * a_ - Rational(ctx_.d()) * b_ * b_;
      s.a_ = a_ / norm;
      s.b_ = -b_ / norm;
      break;
    }
  }
  return s;
}

Scalar operator/(const Scalar& lhs, const Scalar& rhs) {
  require_same_context(lhs, rhs);
  if (rhs.is_zero()) fail(Errc::DivisionByZero, "division by zero");
  return lhs * rhs.inverse();
}

bool Scalar::operator==(const Scalar& other) const {
  require_same_context(*this, other);
  switch (ctx_.kind()) {
    case FieldKind::Prime: return r_ == other.r_;
    case FieldKind::Rationals: return a_ == other.a_;
    case FieldKind::Quadratic: return a_ == other.a_ && b_ == other.b_;
  }
  return false;
}

std::string Scalar::str() const {
  switch (ctx_.kind()) {
    case FieldKind::Prime: return std::to_string(r_);
    case FieldKind::Rationals: return a_.str();
    case FieldKind::Quadratic: {
      if (b_ == 0) return a_.str();
      const Rational mag = b_ < 0 ? Rational(-b_) : b_;
      return a_.str() + (b_ < 0 ? "-" : "+") + mag.str() + "*rt";
    }
  }
  return "?";
}

Scalar Scalar::parse(const FieldContext& ctx, std::string_view text) {
  switch (ctx.kind()) {
    case FieldKind::Rationals:
      return of_rational(ctx, parse_rational(text));
    case FieldKind::Prime: {
      if (text.empty()) fail(Errc::ParseError, "empty prime-field literal");
      for (std::size_t i = 0; i < text.size(); ++i) {
        const char ch = text[i];
        const bool sign_ok = i == 0 && (ch == '-' || ch == '+');
        if (!sign_ok && !(ch >= '0' && ch <= '9'))
          fail(Errc::ParseError, "bad prime-field literal '" + std::string(text) + "'");
      }
      BigInt value;
      try {
        value = BigInt(std::string(text));
      } catch (const std::exception&) {
        fail(Errc::ParseError, "bad prime-field literal '" + std::string(text) + "'");
      }
      BigInt m = value % ctx.p();
      if (m < 0) m += ctx.p();
      Scalar s(ctx);
      s.r_ = static_cast<uint32_t>(m);
      return s;
    }
    case FieldKind::Quadratic: {
      const std::string_view suffix = "*rt";
      const auto pos = text.rfind(suffix);
      if (pos == std::string_view::npos || pos + suffix.size() != text.size()) {
        // plain rational part
        return quadratic(ctx, parse_rational(text), Rational(0));
      }
      std::string_view head = text.substr(0, pos);
      if (head.empty()) fail(Errc::ParseError, "missing radical coefficient in '" + std::string(text) + "'");
      // split "a+b" / "a-b" at the sign that separates the two parts; signs at
      // position 0 or right after '/' belong to the literal itself
      std::size_t split = std::string_view::npos;
      for (std::size_t i = head.size(); i-- > 1;) {
        if ((head[i] == '+' || head[i] == '-') && head[i - 1] != '/' && head[i - 1] != '+' &&
            head[i - 1] != '-') {
          split = i;
          break;
        }
      }
      if (split == std::string_view::npos) {
        // bare "b*rt"
        return quadratic(ctx, Rational(0), parse_rational(head));
      }
      Rational a = parse_rational(head.substr(0, split));
      Rational b = parse_rational(head.substr(split + 1));
      if (head[split] == '-') b = -b;
      return quadratic(ctx, a, b);
    }
  }
  fail(Errc::ParseError, "unknown field context");
}

std::optional<Scalar> sqrt_in_field(const Scalar& x) {
  const FieldContext& ctx = x.context();
  switch (ctx.kind()) {
    case FieldKind::Prime: {
      for (uint32_t r = 0; r < ctx.p(); ++r)
        if (uint64_t(r) * r % ctx.p() == x.residue()) return Scalar::of_int(ctx, r);
      return std::nullopt;
    }
    case FieldKind::Rationals: {
      auto root = rational_sqrt(x.rat_a());
      if (!root) return std::nullopt;
      return Scalar::of_rational(ctx, *root);
    }
    case FieldKind::Quadratic: {
      const Rational d(ctx.d());
      const Rational& a = x.rat_a();
      const Rational& b = x.rat_b();
      if (b == 0) {
        // u^2 = a, or (v rt)^2 = d v^2 = a
        if (auto u = rational_sqrt(a)) return Scalar::quadratic(ctx, *u, Rational(0));
        if (auto v = rational_sqrt(a / d)) return Scalar::quadratic(ctx, Rational(0), *v);
        return std::nullopt;
      }
      // (u + v rt)^2 = u^2 + d v^2 + 2uv rt with u, v both nonzero:
      // u^2 and d v^2 are roots of t^2 - a t + d b^2 / 4.
      auto e = rational_sqrt(a * a - d * b * b);
      if (!e) return std::nullopt;
      for (const Rational& usq : {Rational((a + *e) / 2), Rational((a - *e) / 2)}) {
        auto u = rational_sqrt(usq);
        if (!u || *u == 0) continue;
        Rational v = b / (2 * *u);
        Scalar s = Scalar::quadratic(ctx, *u, v);
        if (s * s == x) return s;
      }
      return std::nullopt;
    }
  }
  return std::nullopt;
}

const char* errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::ContextMismatch: return "ContextMismatch";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::WrongDimension: return "WrongDimension";
    case Errc::NotABimodule: return "NotABimodule";
    case Errc::NotAMatchedPair: return "NotAMatchedPair";
    case Errc::NotARepresentation: return "NotARepresentation";
    case Errc::DegenerateForm: return "DegenerateForm";
    case Errc::NotInvariant: return "NotInvariant";
    case Errc::IntertwinerFails: return "IntertwinerFails";
    case Errc::LRNotCommuting: return "LRNotCommuting";
    case Errc::SearchSpaceTooLarge: return "SearchSpaceTooLarge";
    case Errc::InvalidParams: return "InvalidParams";
    case Errc::NoSquareRoot: return "NoSquareRoot";
    case Errc::CharTwoFamilyIII: return "CharTwoFamilyIII";
    case Errc::ConditionsFail: return "ConditionsFail";
    case Errc::ParseError: return "ParseError";
    case Errc::PostconditionFailed: return "PostconditionFailed";
  }
  return "UnknownError";
}

}  // namespace nearassoc
