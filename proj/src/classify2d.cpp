#include "nearassoc/classify2d.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <thread>

namespace nearassoc {

namespace {

// ---- raw mod-p tensors -----------------------------------------------------
//
// A candidate table is a flat digit array c[(i*n+j)*n+k], every digit < p.
// The enumeration and the isomorphism scan work on these directly; Scalar
// objects are only materialized for survivors.

using Digits = std::array<std::uint8_t, 27>;

struct RawAlgebra {
  const std::uint8_t* c;
  std::size_t n;
  unsigned p;

  unsigned at(std::size_t i, std::size_t j, std::size_t k) const {
    return c[(i * n + j) * n + k];
  }
};

// out = x * (sum_m w[m] e_m)
void left_mul(const RawAlgebra& a, std::size_t x, const unsigned* w, unsigned* out) {
  for (std::size_t k = 0; k < a.n; ++k) {
    unsigned acc = 0;
    for (std::size_t m = 0; m < a.n; ++m) acc += w[m] * a.at(x, m, k);
    out[k] = acc % a.p;
  }
}

// out = (sum_m w[m] e_m) * y
void right_mul(const RawAlgebra& a, const unsigned* w, std::size_t y, unsigned* out) {
  for (std::size_t k = 0; k < a.n; ++k) {
    unsigned acc = 0;
    for (std::size_t m = 0; m < a.n; ++m) acc += w[m] * a.at(m, y, k);
    out[k] = acc % a.p;
  }
}

void basis_prod(const RawAlgebra& a, std::size_t i, std::size_t j, unsigned* out) {
  for (std::size_t k = 0; k < a.n; ++k) out[k] = a.at(i, j, k);
}

// x*(y*z) - (z*x)*y
void na_residual(const RawAlgebra& a, std::size_t x, std::size_t y, std::size_t z,
                 unsigned* out) {
  unsigned w[3], lhs[3], rhs[3];
  basis_prod(a, y, z, w);
  left_mul(a, x, w, lhs);
  basis_prod(a, z, x, w);
  right_mul(a, w, y, rhs);
  for (std::size_t k = 0; k < a.n; ++k) out[k] = (lhs[k] + a.p - rhs[k]) % a.p;
}

// (x*y)*z - x*(y*z)
void associator(const RawAlgebra& a, std::size_t x, std::size_t y, std::size_t z,
                unsigned* out) {
  unsigned w[3], lhs[3], rhs[3];
  basis_prod(a, x, y, w);
  right_mul(a, w, z, lhs);
  basis_prod(a, y, z, w);
  left_mul(a, x, w, rhs);
  for (std::size_t k = 0; k < a.n; ++k) out[k] = (lhs[k] + a.p - rhs[k]) % a.p;
}

bool vanishes(const unsigned* v, std::size_t n) {
  for (std::size_t k = 0; k < n; ++k)
    if (v[k] != 0) return false;
  return true;
}

// Signed sum of associators over permuted arguments; perms are slot tuples,
// signs +1/-1.
template <std::size_t N>
bool signed_sum_vanishes(const RawAlgebra& a,
                         const std::array<std::array<std::size_t, 3>, N>& perms,
                         const std::array<int, N>& signs) {
  const std::size_t n = a.n;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        const std::size_t args[3] = {x, y, z};
        unsigned acc[3] = {0, 0, 0};
        for (std::size_t q = 0; q < N; ++q) {
          unsigned term[3];
          associator(a, args[perms[q][0]], args[perms[q][1]], args[perms[q][2]], term);
          for (std::size_t k = 0; k < n; ++k)
            acc[k] = (acc[k] + (signs[q] > 0 ? term[k] : (a.p - term[k]) % a.p)) % a.p;
        }
        if (!vanishes(acc, n)) return false;
      }
  return true;
}

bool raw_identity_holds(const RawAlgebra& a, IdentityId id) {
  const std::size_t n = a.n;
  constexpr std::array<std::size_t, 3> kId{0, 1, 2}, kSwap01{1, 0, 2}, kSwap12{0, 2, 1},
      kSwap02{2, 1, 0}, kCycle120{1, 2, 0}, kCycle201{2, 0, 1};
  switch (id) {
    case IdentityId::NearlyAssociative:
    case IdentityId::HomNearlyAssociative: {
      for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
          for (std::size_t z = 0; z < n; ++z) {
            unsigned r[3];
            na_residual(a, x, y, z, r);
            if (!vanishes(r, n)) return false;
          }
      return true;
    }
    case IdentityId::Associative:
    case IdentityId::HomAssociative:
    case IdentityId::GHomAssociativeG1:
    case IdentityId::LRCommute: {
      // operator commutation L(x)R(y) = R(y)L(x) on basis vectors is the
      // associator statement on triples
      for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
          for (std::size_t z = 0; z < n; ++z) {
            unsigned r[3];
            associator(a, x, y, z, r);
            if (!vanishes(r, n)) return false;
          }
      return true;
    }
    case IdentityId::AntiFlexible:
    case IdentityId::HomAntiFlexible:
    case IdentityId::GHomAssociativeG4:
      return signed_sum_vanishes<2>(a, {kId, kSwap02}, {1, -1});
    case IdentityId::GHomAssociativeG2:
      return signed_sum_vanishes<2>(a, {kId, kSwap01}, {1, -1});
    case IdentityId::GHomAssociativeG3:
      return signed_sum_vanishes<2>(a, {kId, kSwap12}, {1, -1});
    case IdentityId::GHomAssociativeG5:
      return signed_sum_vanishes<3>(a, {kId, kCycle120, kCycle201}, {1, 1, 1});
    case IdentityId::GHomAssociativeG6:
      return signed_sum_vanishes<6>(
          a, {kId, kSwap01, kSwap12, kSwap02, kCycle120, kCycle201},
          {1, -1, -1, -1, 1, 1});
    case IdentityId::Flexible:
    case IdentityId::HomFlexible: {
      // quantified form: associator(x, y, x) = 0 for all x, y
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          unsigned r[3];
          associator(a, i, j, i, r);
          if (!vanishes(r, n)) return false;
        }
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = i + 1; k < n; ++k)
          for (std::size_t j = 0; j < n; ++j) {
            unsigned r1[3], r2[3];
            associator(a, i, j, k, r1);
            associator(a, k, j, i, r2);
            for (std::size_t m = 0; m < n; ++m)
              if ((r1[m] + r2[m]) % a.p != 0) return false;
          }
      return true;
    }
  }
  return false;  // unreachable
}

std::size_t thread_count(std::uint64_t total) {
  std::size_t t = 0;
  if (const char* env = std::getenv("NEARASSOC_THREADS")) {
    char* end = nullptr;
    const long parsed = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && parsed > 0) t = static_cast<std::size_t>(parsed);
  }
  if (t == 0) t = std::max<std::size_t>(1, std::thread::hardware_concurrency());
  t = std::min<std::size_t>(t, 64);
  if (total < 1024) t = 1;  // not worth spawning for tiny spaces
  return std::min<std::size_t>(t, static_cast<std::size_t>(total));
}

void decode(std::uint64_t v, unsigned p, std::size_t entries, Digits& digits) {
  for (std::size_t e = entries; e-- > 0;) {
    digits[e] = static_cast<std::uint8_t>(v % p);
    v /= p;
  }
}

unsigned det_mod_p(const std::uint8_t* t, std::size_t n, unsigned p) {
  switch (n) {
    case 1:
      return t[0] % p;
    case 2:
      return (t[0] * t[3] % p + p - t[1] * t[2] % p) % p;
    default: {
      unsigned pos = t[0] * t[4] % p * t[8] % p;
      pos = (pos + t[1] * t[5] % p * t[6] % p) % p;
      pos = (pos + t[2] * t[3] % p * t[7] % p) % p;
      unsigned neg = t[2] * t[4] % p * t[6] % p;
      neg = (neg + t[0] * t[5] % p * t[7] % p) % p;
      neg = (neg + t[1] * t[3] % p * t[8] % p) % p;
      return (pos + p - neg) % p;
    }
  }
}

unsigned inverse_mod_p(unsigned x, unsigned p) {
  for (unsigned y = 1; y < p; ++y)
    if (x * y % p == 1) return y;
  return 0;
}

Algebra algebra_from_digits(const FieldContext& ctx, std::size_t n, const Digits& digits) {
  Algebra alg(ctx, n);
  std::size_t e = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) alg.at(i, j, k) = Scalar::of_int(ctx, digits[e++]);
  return alg;
}

}  // namespace

std::array<Vec, 8> dim2_defining_residuals(const Algebra& alg) {
  if (alg.dim() != 2)
    fail(Errc::WrongDimension, "the residual expansion is defined for dimension 2");
  constexpr std::array<std::array<std::size_t, 3>, 8> kTriples{{{0, 0, 0},
                                                                {0, 0, 1},
                                                                {0, 1, 0},
                                                                {1, 0, 0},
                                                                {0, 1, 1},
                                                                {1, 0, 1},
                                                                {1, 1, 0},
                                                                {1, 1, 1}}};
  const FieldContext& ctx = alg.context();
  std::array<Vec, 8> out;
  for (std::size_t q = 0; q < 8; ++q) {
    const auto [x, y, z] = kTriples[q];
    const Vec lhs = multiply(alg, basis_vec(ctx, 2, x), alg.basis_product(y, z));
    const Vec rhs = multiply(alg, alg.basis_product(z, x), basis_vec(ctx, 2, y));
    out[q] = sub(lhs, rhs);
  }
  return out;
}

const char* family_name(Family f) noexcept {
  switch (f) {
    case Family::I:
      return "I";
    case Family::II:
      return "II";
    case Family::III:
      return "III";
  }
  return "?";
}

Algebra family_algebra(const FamilyParams& params, const FieldContext& ctx) {
  if (params.alpha.context() != ctx || params.beta.context() != ctx)
    fail(Errc::ContextMismatch, "family parameters live over a different field");
  const Scalar& alpha = params.alpha;
  const Scalar& beta = params.beta;
  Algebra alg(ctx, 2);

  if (params.family == Family::I || params.family == Family::II) {
    if (params.gamma || params.delta)
      fail(Errc::InvalidParams, "families I and II take exactly two parameters");
    if (alpha.is_zero() && beta.is_zero())
      fail(Errc::InvalidParams, "(alpha, beta) = (0, 0) is excluded");
    if (params.family == Family::I) {
      alg.at(0, 0, 1) = alpha;
      alg.at(0, 1, 0) = beta;
      alg.at(1, 0, 0) = beta;
      alg.at(1, 1, 1) = beta;
    } else {
      for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) {
          alg.at(i, j, 0) = (i == j) ? alpha : beta;
          alg.at(i, j, 1) = (i == j) ? beta : alpha;
        }
    }
  } else {
    if (ctx.characteristic() == 2)
      fail(Errc::CharTwoFamilyIII, "family III divides by 2");
    if (!params.gamma)
      fail(Errc::InvalidParams, "family III needs a third parameter");
    if (params.gamma->context() != ctx ||
        (params.delta && params.delta->context() != ctx))
      fail(Errc::ContextMismatch, "family parameters live over a different field");
    const Scalar& gamma = *params.gamma;
    const Scalar disc = gamma * gamma +
                        Scalar::of_int(ctx, 4) * alpha * beta;
    Scalar delta = Scalar::zero(ctx);
    if (params.delta) {
      delta = *params.delta;
      if (!(delta * delta == disc))
        fail(Errc::InvalidParams, "delta^2 != gamma^2 + 4 alpha beta");
    } else {
      const std::optional<Scalar> root = sqrt_in_field(disc);
      if (!root)
        fail(Errc::NoSquareRoot, "gamma^2 + 4 alpha beta has no square root in the field");
      delta = *root;
    }
    const Scalar lambda = (gamma + delta) * Scalar::of_int(ctx, 2).inverse();
    alg.at(0, 0, 0) = alpha;
    alg.at(0, 1, 0) = lambda;
    alg.at(1, 0, 0) = lambda;
    alg.at(1, 1, 0) = beta;
    alg.at(1, 1, 1) = gamma;
  }

  if (!check_identity(alg, IdentityId::NearlyAssociative).holds)
    fail(Errc::PostconditionFailed, "family table fails the defining identity");
  return alg;
}

std::vector<Algebra> enumerate_fp(std::size_t n, unsigned p, IdentityId id) {
  const FieldContext ctx = FieldContext::prime(p);
  if (n == 0 || n > 3 || p > 7)
    fail(Errc::SearchSpaceTooLarge, "enumeration supports dimension <= 3 and p <= 7");
  const std::size_t entries = n * n * n;
  std::uint64_t total = 1;
  for (std::size_t e = 0; e < entries; ++e) {
    total *= p;
    if (total > 1'000'000'000ULL)
      fail(Errc::SearchSpaceTooLarge, "p^(n^3) exceeds the enumeration budget");
  }

  const std::size_t workers = thread_count(total);
  std::vector<std::vector<std::uint64_t>> hits(workers);

  auto scan = [&](std::size_t w) {
    const std::uint64_t lo = total / workers * w + std::min<std::uint64_t>(w, total % workers);
    const std::uint64_t hi =
        total / workers * (w + 1) + std::min<std::uint64_t>(w + 1, total % workers);
    Digits digits{};
    decode(lo, p, entries, digits);
    const RawAlgebra raw{digits.data(), n, p};
    for (std::uint64_t v = lo; v < hi; ++v) {
      if (raw_identity_holds(raw, id)) hits[w].push_back(v);
      for (std::size_t e = entries; e-- > 0;) {
        if (++digits[e] == p)
          digits[e] = 0;
        else
          break;
      }
    }
  };

  if (workers == 1) {
    scan(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(scan, w);
    for (std::thread& th : pool) th.join();
  }

  std::vector<Algebra> out;
  Digits digits{};
  for (std::size_t w = 0; w < workers; ++w)
    for (const std::uint64_t v : hits[w]) {
      decode(v, p, entries, digits);
      out.push_back(algebra_from_digits(ctx, n, digits));
    }
  return out;
}

std::optional<Matrix> isomorphism_search_fp(const Algebra& a, const Algebra& b) {
  if (a.context() != b.context())
    fail(Errc::ContextMismatch, "the two algebras live over different fields");
  if (a.context().kind() != FieldKind::Prime)
    fail(Errc::InvalidParams, "exhaustive search needs a finite prime field");
  if (a.dim() != b.dim())
    fail(Errc::DimensionMismatch, "the two algebras have different dimensions");
  const std::size_t n = a.dim();
  const unsigned p = a.context().p();
  if (n > 3 || p > 7)
    fail(Errc::SearchSpaceTooLarge, "search supports dimension <= 3 and p <= 7");

  Digits ca{}, cb{};
  {
    std::size_t e = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k, ++e) {
          ca[e] = static_cast<std::uint8_t>(a.at(i, j, k).residue());
          cb[e] = static_cast<std::uint8_t>(b.at(i, j, k).residue());
        }
  }

  const std::size_t cells = n * n;
  std::uint64_t total = 1;
  for (std::size_t e = 0; e < cells; ++e) total *= p;

  std::array<std::uint8_t, 9> t{};  // row-major candidate map
  for (std::uint64_t v = 0; v < total; ++v) {
    {
      std::uint64_t rest = v;
      for (std::size_t e = cells; e-- > 0;) {
        t[e] = static_cast<std::uint8_t>(rest % p);
        rest /= p;
      }
    }
    if (det_mod_p(t.data(), n, p) == 0) continue;
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i)
      for (std::size_t j = 0; j < n && ok; ++j) {
        unsigned lhs[3], rhs[3];
        for (std::size_t k = 0; k < n; ++k) {
          unsigned acc = 0;
          for (std::size_t m = 0; m < n; ++m) acc += t[k * n + m] * ca[(i * n + j) * n + m];
          lhs[k] = acc % p;
        }
        for (std::size_t k = 0; k < n; ++k) {
          unsigned acc = 0;
          for (std::size_t s = 0; s < n; ++s)
            for (std::size_t u = 0; u < n; ++u)
              acc += t[s * n + i] * t[u * n + j] % p * cb[(s * n + u) * n + k];
          rhs[k] = acc % p;
        }
        for (std::size_t k = 0; k < n; ++k)
          if (lhs[k] != rhs[k]) {
            ok = false;
            break;
          }
      }
    if (ok) {
      Matrix witness(a.context(), n, n);
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
          witness.at(r, c) = Scalar::of_int(a.context(), t[r * n + c]);
      return witness;
    }
  }
  return std::nullopt;
}

CheckReport verify_isomorphism(const Algebra& a, const Algebra& b, const Matrix& t) {
  if (a.context() != b.context() || a.context() != t.context())
    fail(Errc::ContextMismatch, "algebras and map live over different fields");
  if (a.dim() != b.dim() || t.rows() != a.dim() || t.cols() != a.dim())
    fail(Errc::DimensionMismatch, "map shape does not match the algebras");
  const FieldContext& ctx = a.context();
  const std::size_t n = a.dim();

  CheckReport report;
  report.check = "isomorphism";

  const Scalar det = t.det();
  if (det.is_zero()) {
    report.holds = false;
    report.witness = Witness{"determinant is zero", {}, {det}, {Scalar::zero(ctx)}};
    return report;
  }

  for (std::size_t i = 0; i < n && report.holds; ++i)
    for (std::size_t j = 0; j < n && report.holds; ++j) {
      const Vec lhs = t.apply(a.basis_product(i, j));
      const Vec rhs =
          multiply(b, t.apply(basis_vec(ctx, n, i)), t.apply(basis_vec(ctx, n, j)));
      if (!is_zero(sub(lhs, rhs))) {
        report.holds = false;
        report.witness = Witness{"structure preservation", {i, j}, lhs, rhs};
      }
    }
  return report;
}

ClassifyReport classify_report_fp(unsigned p) {
  const FieldContext ctx = FieldContext::prime(p);
  if (p > 5) fail(Errc::SearchSpaceTooLarge, "classification supports p <= 5");
  const std::size_t n = 2;

  const std::vector<Algebra> tables = enumerate_fp(n, p, IdentityId::NearlyAssociative);

  // all invertible 2x2 maps with their inverses, as raw digit arrays
  struct GLElem {
    std::array<std::uint8_t, 4> s, sinv;
  };
  std::vector<GLElem> gl;
  for (unsigned v = 0; v < p * p * p * p; ++v) {
    std::array<std::uint8_t, 4> s{};
    unsigned rest = v;
    for (std::size_t e = 4; e-- > 0;) {
      s[e] = static_cast<std::uint8_t>(rest % p);
      rest /= p;
    }
    const unsigned det = det_mod_p(s.data(), 2, p);
    if (det == 0) continue;
    const unsigned dinv = inverse_mod_p(det, p);
    const GLElem elem{
        s,
        {static_cast<std::uint8_t>(s[3] * dinv % p),
         static_cast<std::uint8_t>((p - s[1] % p) * dinv % p),
         static_cast<std::uint8_t>((p - s[2] % p) * dinv % p),
         static_cast<std::uint8_t>(s[0] * dinv % p)}};
    gl.push_back(elem);
  }

  using Key = std::array<std::uint8_t, 8>;
  auto raw_of = [](const Algebra& alg) {
    Key raw{};
    std::size_t e = 0;
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j)
        for (std::size_t k = 0; k < 2; ++k) raw[e++] = static_cast<std::uint8_t>(alg.at(i, j, k).residue());
    return raw;
  };
  auto canonical = [&](const Key& c) {
    Key best = c;
    for (const GLElem& elem : gl) {
      Key ct{};
      for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) {
          unsigned w[2];
          for (std::size_t k = 0; k < 2; ++k) {
            unsigned acc = 0;
            for (std::size_t s = 0; s < 2; ++s)
              for (std::size_t u = 0; u < 2; ++u)
                acc += elem.s[s * 2 + i] * elem.s[u * 2 + j] % p * c[(s * 2 + u) * 2 + k];
            w[k] = acc % p;
          }
          for (std::size_t k = 0; k < 2; ++k) {
            const unsigned y = (elem.sinv[k * 2] * w[0] + elem.sinv[k * 2 + 1] * w[1]) % p;
            ct[(i * 2 + j) * 2 + k] = static_cast<std::uint8_t>(y);
          }
        }
      if (ct < best) best = ct;
    }
    return best;
  };

  std::map<Key, std::size_t> class_sizes;
  for (const Algebra& alg : tables) ++class_sizes[canonical(raw_of(alg))];

  std::map<Key, std::vector<FamilyInstance>> matches;
  auto record = [&](const Algebra& table, FamilyInstance instance) {
    const Key key = canonical(raw_of(table));
    const auto it = class_sizes.find(key);
    if (it == class_sizes.end())
      fail(Errc::PostconditionFailed, "family table escaped the enumerated classes");
    matches[key].push_back(std::move(instance));
  };

  for (const Family fam : {Family::I, Family::II}) {
    for (unsigned av = 0; av < p; ++av)
      for (unsigned bv = 0; bv < p; ++bv) {
        if (av == 0 && bv == 0) continue;
        const Scalar alpha = Scalar::of_int(ctx, static_cast<int>(av));
        const Scalar beta = Scalar::of_int(ctx, static_cast<int>(bv));
        const Algebra table =
            family_algebra({fam, alpha, beta, std::nullopt, std::nullopt}, ctx);
        record(table, FamilyInstance{fam, {alpha, beta}});
      }
  }
  if (p != 2) {
    for (unsigned av = 0; av < p; ++av)
      for (unsigned bv = 0; bv < p; ++bv)
        for (unsigned gv = 0; gv < p; ++gv) {
          const unsigned disc = (gv * gv + 4 * av * bv) % p;
          for (unsigned dv = 0; dv < p; ++dv) {
            if (dv * dv % p != disc) continue;
            const Scalar alpha = Scalar::of_int(ctx, static_cast<int>(av));
            const Scalar beta = Scalar::of_int(ctx, static_cast<int>(bv));
            const Scalar gamma = Scalar::of_int(ctx, static_cast<int>(gv));
            const Scalar delta = Scalar::of_int(ctx, static_cast<int>(dv));
            const Algebra table =
                family_algebra({Family::III, alpha, beta, gamma, delta}, ctx);
            record(table, FamilyInstance{Family::III, {alpha, beta, gamma, delta}});
          }
        }
  }

  ClassifyReport report{ctx, {}};
  for (const auto& [key, size] : class_sizes) {
    Digits digits{};
    std::copy(key.begin(), key.end(), digits.begin());
    IsoClass cls{algebra_from_digits(ctx, n, digits), size, {}, true};
    if (const auto it = matches.find(key); it != matches.end()) {
      cls.family_matches = it->second;
      cls.family_gap = cls.family_matches.empty();
    }
    report.classes.push_back(std::move(cls));
  }
  return report;
}

}  // namespace nearassoc
