#include "forge/hilbert.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "forge/error.hpp"

namespace forge {

Place Place::finite(long p) {
  if (p < 2) fail(Errc::invalid_input, "finite place needs a prime");
  for (long i = 2; i * i <= p; ++i)
    if (p % i == 0) fail(Errc::invalid_input, "finite place needs a prime");
  return Place{false, p};
}

long rational_valuation(const Rat& a, long p) {
  if (a == 0) fail(Errc::invalid_input, "valuation of zero");
  auto count = [p](mpz_class v) {
    long n = 0;
    while (mpz_divisible_ui_p(v.get_mpz_t(), p)) {
      v /= p;
      ++n;
    }
    return n;
  };
  return count(a.get_num()) - count(a.get_den());
}

int legendre_symbol(long a, long p) {
  // Jacobi algorithm; for prime p this is the Legendre symbol
  long n = p;
  a %= n;
  if (a < 0) a += n;
  int result = 1;
  while (a != 0) {
    while (a % 2 == 0) {
      a /= 2;
      if (n % 8 == 3 || n % 8 == 5) result = -result;
    }
    std::swap(a, n);
    if (a % 4 == 3 && n % 4 == 3) result = -result;
    a %= n;
  }
  return n == 1 ? result : 0;
}

namespace {

// the p-unit part of a, reduced mod m (m a power of p or a prime)
long unit_part_mod(const Rat& a, long p, long m) {
  mpz_class num = a.get_num(), den = a.get_den();
  auto strip = [p](mpz_class& v) {
    while (mpz_divisible_ui_p(v.get_mpz_t(), p)) v /= p;
  };
  strip(num);
  strip(den);
  // num/den mod m: with den a unit mod m (p-free), for m in {p, 4, 8} the
  // product num*den is in the same class as num/den because den^2 = 1 holds
  // mod 8 for odd den, and Legendre is multiplicative
  mpz_class prod = num * den;
  long r = mpz_fdiv_ui(prod.get_mpz_t(), m);
  return r;
}

} // namespace

int hilbert_symbol(const Rat& a, const Rat& b, const Place& v) {
  if (a == 0 || b == 0) fail(Errc::invalid_input, "Hilbert symbol of zero");
  if (v.infinite) return a < 0 && b < 0 ? -1 : 1;
  const long p = v.prime;
  const long alpha = rational_valuation(a, p);
  const long beta = rational_valuation(b, p);
  if (p != 2) {
    const long u = unit_part_mod(a, p, p);
    const long w = unit_part_mod(b, p, p);
    int exponent = static_cast<int>(alpha * beta * ((p - 1) / 2)) % 2;
    int sym = exponent ? -1 : 1;
    if (beta % 2 != 0) sym *= legendre_symbol(u, p);
    if (alpha % 2 != 0) sym *= legendre_symbol(w, p);
    return sym;
  }
  const long u8 = unit_part_mod(a, 2, 8);
  const long w8 = unit_part_mod(b, 2, 8);
  auto eps = [](long x) { return x % 4 == 3 ? 1 : 0; };
  auto omega = [](long x) { return x == 3 || x == 5 ? 1 : 0; };
  const long exponent = eps(u8) * eps(w8) + alpha * omega(w8) + beta * omega(u8);
  return exponent % 2 == 0 ? 1 : -1;
}

std::vector<Place> relevant_places(const std::vector<Rat>& values) {
  std::set<long> primes{2};
  for (const auto& v : values) {
    if (v == 0) continue;
    for (mpz_class part : {mpz_class(abs(v.get_num())), mpz_class(v.get_den())}) {
      for (long p = 2; mpz_class(p) * p <= part; ++p)
        while (mpz_divisible_ui_p(part.get_mpz_t(), p)) {
          primes.insert(p);
          part /= p;
        }
      if (part > 1) {
        if (!part.fits_slong_p())
          fail(Errc::cap_exceeded, "prime factor does not fit in a long");
        primes.insert(part.get_si());
      }
    }
  }
  std::vector<Place> out{Place::inf()};
  for (long p : primes) out.push_back(Place{false, p});
  return out;
}

bool product_formula_check(const Rat& a, const Rat& b) {
  int prod = 1;
  for (const auto& v : relevant_places({a, b})) prod *= hilbert_symbol(a, b, v);
  return prod == 1;
}

bool is_local_square(const Rat& a, const Place& v) {
  if (a == 0) fail(Errc::invalid_input, "square test of zero");
  if (v.infinite) return a > 0;
  const long p = v.prime;
  const long val = rational_valuation(a, p);
  if (val % 2 != 0) return false;
  if (p != 2) return legendre_symbol(unit_part_mod(a, p, p), p) == 1;
  return unit_part_mod(a, 2, 8) == 1;
}

// ---- prescribed norms, quadratic case ---------------------------------------

namespace {

bool squarefree(long d) {
  d = std::abs(d);
  for (long i = 2; i * i <= d; ++i)
    if (d % (i * i) == 0) return false;
  return true;
}

std::optional<std::pair<Rat, Rat>> try_witness(const Rat& alpha, long d, long num,
                                               long den) {
  Rat y(num, den);
  y.canonicalize();
  Rat rhs = alpha + Rat(d) * y * y;
  if (rhs < 0 || !is_rational_square(rhs)) return std::nullopt;
  mpz_class xn, xd;
  mpz_sqrt(xn.get_mpz_t(), rhs.get_num().get_mpz_t());
  mpz_sqrt(xd.get_mpz_t(), rhs.get_den().get_mpz_t());
  Rat x(xn, xd);
  x.canonicalize();
  return std::make_pair(x, y);
}

std::optional<std::pair<Rat, Rat>> witness_search(const Rat& alpha, long d,
                                                  const RunConfig& cfg) {
  // y = num/den over heights h = max(num, den), bounded by the witness
  // magnitude cap and the global pair budget
  std::int64_t budget = cfg.search_budget;
  if (auto w = try_witness(alpha, d, 0, 1)) return w;
  for (long h = 1; h <= cfg.witness_bound; ++h) {
    for (long den = 1; den <= h; ++den) {
      if (std::gcd(h, den) != 1) continue;
      if (--budget < 0) return std::nullopt;
      if (auto w = try_witness(alpha, d, h, den)) return w;
    }
    for (long num = 0; num < h; ++num) {
      if (std::gcd(num, h) != 1) continue;
      if (--budget < 0) return std::nullopt;
      if (auto w = try_witness(alpha, d, num, h)) return w;
    }
  }
  return std::nullopt;
}

} // namespace

bool verify_certificate(const NormCertificate& cert) {
  for (const auto& s : cert.symbols) {
    if (s.value != 1) return false;
    if (hilbert_symbol(cert.alpha, Rat(cert.d), s.place) != 1) return false;
  }
  if (cert.witness) {
    const auto& [x, y] = *cert.witness;
    if (x * x - Rat(cert.d) * y * y != cert.alpha) return false;
  }
  return true;
}

NormFieldResult find_quadratic_norm_field(const std::vector<Rat>& alphas,
                                          const std::vector<Place>& split,
                                          const RunConfig& cfg) {
  for (const auto& a : alphas)
    if (a == 0) fail(Errc::invalid_input, "norm targets must be nonzero");

  auto admissible = [&](long d) {
    if (!squarefree(d)) return false;
    Rat dr(d);
    for (const auto& alpha : alphas) {
      for (const auto& v : relevant_places({alpha, dr}))
        if (hilbert_symbol(alpha, dr, v) != 1) return false;
    }
    for (const auto& v : split)
      if (!is_local_square(dr, v)) return false;
    return true;
  };

  for (long mag = 1; mag <= cfg.d_bound; ++mag) {
    for (long d : {mag, -mag}) {
      if (d == 1) continue; // Q(sqrt(1)) is not a field
      if (!admissible(d)) continue;
      NormFieldResult result;
      result.d = d;
      for (const auto& alpha : alphas) {
        NormCertificate cert;
        cert.alpha = alpha;
        cert.d = d;
        for (const auto& v : relevant_places({alpha, Rat(d)}))
          cert.symbols.push_back(LocalSymbol{v, hilbert_symbol(alpha, Rat(d), v)});
        cert.witness = witness_search(alpha, d, cfg);
        result.certificates.push_back(std::move(cert));
      }
      return result;
    }
  }
  fail(Errc::bound_exhausted, "no admissible squarefree d within the bound");
}

// ---- the cubic trace-square constructor ---------------------------------------

CubicTraceSquare cubic_trace_square(const Rat& alpha, bool require_cyclic,
                                    const RunConfig& cfg) {
  if (require_cyclic) {
    if (alpha <= 0)
      fail(Errc::obstruction,
           "cyclic cubic rejected: alpha is not totally positive, so the "
           "trace-square equation has no solution in a cyclic cubic field");
    fail(Errc::unsupported,
         "cyclic cubic construction is not supported; only the generic "
         "(non-cyclic) constructor is implemented");
  }

  for (long e1_int = 1; e1_int <= 8; ++e1_int) {
    const Rat e1(e1_int);
    const Rat e2 = (e1 * e1 - alpha) / 2;
    for (int step = 1; step <= cfg.ladder_length; ++step) {
      // ladder 1, -1, 2, -2, ...
      const long mag = (step + 1) / 2;
      const Rat e3 = step % 2 == 1 ? Rat(mag) : Rat(-mag);
      PolyQ f(std::vector<Rat>{-e3, e2, -e1, Rat(1)});
      if (has_rational_root(f)) continue;
      if (is_rational_square(cubic_discriminant(f))) continue;
      auto field = NumberField::create(f);
      FieldElement beta = field_generator(field);
      // verification through the resultant characteristic polynomial of
      // beta^2, independent of the symmetric-function construction
      FieldElement beta2 = mul(beta, beta);
      PolyQ cp = char_poly(beta2);
      Rat trace = -cp.coeff(cp.degree() - 1);
      if (trace != alpha)
        fail(Errc::mismatch, "trace verification failed (internal error)");
      return CubicTraceSquare{std::move(f), std::move(beta), std::move(trace)};
    }
  }
  fail(Errc::bound_exhausted, "constant-term ladder exhausted");
}

bool faithfulness_check(GroupPtr g, const Subgroup& h) {
  return subgroup_core(std::move(g), h).order() == 1;
}

} // namespace forge
