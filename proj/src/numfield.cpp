#include "forge/numfield.hpp"

#include <algorithm>

#include "forge/error.hpp"

namespace forge {

PolyQ::PolyQ(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

PolyQ PolyQ::constant(const Rat& c) { return PolyQ(std::vector<Rat>{c}); }

PolyQ PolyQ::monomial(int degree, const Rat& c) {
  std::vector<Rat> v(degree + 1, Rat(0));
  v[degree] = c;
  return PolyQ(std::move(v));
}

Rat PolyQ::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[i];
}

const Rat& PolyQ::leading() const {
  if (is_zero()) fail(Errc::invalid_input, "zero polynomial has no leading coefficient");
  return coeffs_.back();
}

Rat PolyQ::eval(const Rat& x) const {
  Rat acc = 0;
  for (int i = degree(); i >= 0; --i) acc = acc * x + coeffs_[i];
  return acc;
}

PolyQ operator+(const PolyQ& a, const PolyQ& b) {
  std::vector<Rat> v(std::max(a.coeffs().size(), b.coeffs().size()), Rat(0));
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
  return PolyQ(std::move(v));
}

PolyQ operator-(const PolyQ& a, const PolyQ& b) {
  std::vector<Rat> v(std::max(a.coeffs().size(), b.coeffs().size()), Rat(0));
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(static_cast<int>(i)) - b.coeff(static_cast<int>(i));
  return PolyQ(std::move(v));
}

PolyQ operator*(const PolyQ& a, const PolyQ& b) {
  if (a.is_zero() || b.is_zero()) return PolyQ();
  std::vector<Rat> v(a.coeffs().size() + b.coeffs().size() - 1, Rat(0));
  for (std::size_t i = 0; i < a.coeffs().size(); ++i)
    for (std::size_t j = 0; j < b.coeffs().size(); ++j)
      v[i + j] += a.coeffs()[i] * b.coeffs()[j];
  return PolyQ(std::move(v));
}

PolyQ scale(const PolyQ& a, const Rat& c) {
  if (c == 0) return PolyQ();
  std::vector<Rat> v = a.coeffs();
  for (auto& x : v) x *= c;
  return PolyQ(std::move(v));
}

PolyDiv poly_divmod(const PolyQ& a, const PolyQ& b) {
  if (b.is_zero()) fail(Errc::invalid_input, "polynomial division by zero");
  std::vector<Rat> rem = a.coeffs();
  std::vector<Rat> quot(a.degree() >= b.degree() ? a.degree() - b.degree() + 1 : 0,
                        Rat(0));
  for (int d = a.degree(); d >= b.degree() && d >= 0;) {
    if (static_cast<int>(rem.size()) - 1 < d || rem[d] == 0) {
      --d;
      continue;
    }
    Rat q = rem[d] / b.leading();
    quot[d - b.degree()] = q;
    for (int i = 0; i <= b.degree(); ++i) rem[d - b.degree() + i] -= q * b.coeff(i);
    --d;
  }
  return PolyDiv{PolyQ(std::move(quot)), PolyQ(std::move(rem))};
}

Rat resultant(const PolyQ& a, const PolyQ& b) {
  if (a.is_zero() || b.is_zero()) return 0;
  if (a.degree() == 0) {
    Rat r = 1;
    for (int i = 0; i < b.degree(); ++i) r *= a.leading();
    return r;
  }
  if (b.degree() == 0) {
    Rat r = 1;
    for (int i = 0; i < a.degree(); ++i) r *= b.leading();
    return r;
  }
  if (a.degree() < b.degree()) {
    Rat sign = (a.degree() * b.degree()) % 2 == 0 ? 1 : -1;
    return sign * resultant(b, a);
  }
  PolyQ r = poly_divmod(a, b).rem;
  if (r.is_zero()) return 0;
  Rat sign = (a.degree() * b.degree()) % 2 == 0 ? 1 : -1;
  Rat lead_pow = 1;
  for (int i = 0; i < a.degree() - r.degree(); ++i) lead_pow *= b.leading();
  return sign * lead_pow * resultant(b, r);
}

bool has_rational_root(const PolyQ& f) {
  if (f.is_zero()) return true;
  if (f.degree() == 0) return false;
  if (f.coeff(0) == 0) return true; // root at 0
  // clear denominators to an integer polynomial
  mpz_class lcm = 1;
  for (const auto& c : f.coeffs()) {
    mpz_class den = c.get_den();
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
    lcm = lcm / g * den;
  }
  std::vector<mpz_class> ic;
  for (const auto& c : f.coeffs()) {
    Rat scaled = c * Rat(lcm);
    ic.push_back(scaled.get_num());
  }
  // candidate roots p/q: p | ic[0], q | lead
  auto divisors = [](mpz_class v) {
    v = abs(v);
    std::vector<mpz_class> out;
    for (mpz_class i = 1; i * i <= v; ++i) {
      if (v % i == 0) {
        out.push_back(i);
        out.push_back(v / i);
      }
    }
    return out;
  };
  for (const auto& p : divisors(ic.front()))
    for (const auto& q : divisors(ic.back())) {
      for (int sign : {1, -1}) {
        Rat cand(sign * p, q);
        cand.canonicalize();
        if (f.eval(cand) == 0) return true;
      }
    }
  return false;
}

Rat cubic_discriminant(const PolyQ& f) {
  if (f.degree() != 3 || !f.monic())
    fail(Errc::invalid_input, "discriminant expects a monic cubic");
  const Rat a = f.coeff(2), b = f.coeff(1), c = f.coeff(0);
  return Rat(18) * a * b * c - Rat(4) * a * a * a * c + a * a * b * b -
         Rat(4) * b * b * b - Rat(27) * c * c;
}

bool is_rational_square(const Rat& r) {
  if (r < 0) return false;
  return mpz_perfect_square_p(r.get_num().get_mpz_t()) &&
         mpz_perfect_square_p(r.get_den().get_mpz_t());
}

// ---- number fields -----------------------------------------------------------

FieldPtr NumberField::create(PolyQ modulus) {
  if (modulus.degree() < 1) fail(Errc::invalid_input, "field modulus must be nonconstant");
  if (!modulus.monic()) fail(Errc::invalid_input, "field modulus must be monic");
  if (has_rational_root(modulus))
    fail(Errc::invalid_input, "field modulus has a rational root");
  return FieldPtr(new NumberField(std::move(modulus)));
}

FieldElement make_element(FieldPtr field, const PolyQ& value) {
  PolyQ reduced = poly_divmod(value, field->modulus()).rem;
  return FieldElement{std::move(field), std::move(reduced)};
}

FieldElement field_generator(const FieldPtr& field) {
  return make_element(field, PolyQ::monomial(1));
}

FieldElement field_rational(const FieldPtr& field, const Rat& c) {
  return make_element(field, PolyQ::constant(c));
}

FieldElement mul(const FieldElement& a, const FieldElement& b) {
  if (a.field.get() != b.field.get()) fail(Errc::mismatch, "elements of different fields");
  return make_element(a.field, a.repr * b.repr);
}

FieldElement add(const FieldElement& a, const FieldElement& b) {
  if (a.field.get() != b.field.get()) fail(Errc::mismatch, "elements of different fields");
  return make_element(a.field, a.repr + b.repr);
}

PolyQ char_poly(const FieldElement& z) {
  const PolyQ& f = z.field->modulus();
  const int d = f.degree();
  // evaluate y -> Res_x(f, y - repr) at d+1 points, then interpolate
  std::vector<Rat> ys, vals;
  for (int i = 0; i <= d; ++i) {
    Rat y(i);
    PolyQ g = PolyQ::constant(y) - z.repr;
    vals.push_back(resultant(f, g));
    ys.push_back(y);
  }
  // Lagrange interpolation
  PolyQ result;
  for (int i = 0; i <= d; ++i) {
    PolyQ basis = PolyQ::constant(1);
    Rat denom = 1;
    for (int j = 0; j <= d; ++j) {
      if (i == j) continue;
      basis = basis * (PolyQ::monomial(1) - PolyQ::constant(ys[j]));
      denom *= ys[i] - ys[j];
    }
    result = result + scale(basis, vals[i] / denom);
  }
  if (result.degree() != d)
    fail(Errc::mismatch, "characteristic polynomial has wrong degree");
  if (result.leading() != 1) result = scale(result, 1 / result.leading());
  return result;
}

// ---- symmetric evaluation -------------------------------------------------------

std::vector<Rat> elementary_symmetric(const PolyQ& cp) {
  if (!cp.monic()) fail(Errc::invalid_input, "expected a monic polynomial");
  const int d = cp.degree();
  std::vector<Rat> e(d + 1);
  e[0] = 1;
  for (int i = 1; i <= d; ++i) {
    e[i] = cp.coeff(d - i);
    if (i % 2 == 1) e[i] = -e[i];
  }
  return e;
}

std::vector<Rat> power_sums(const std::vector<Rat>& e, int upto) {
  const int d = static_cast<int>(e.size()) - 1;
  std::vector<Rat> p(upto + 1);
  p[0] = d;
  for (int k = 1; k <= upto; ++k) {
    Rat acc = 0;
    for (int i = 1; i < k && i <= d; ++i) {
      Rat term = e[i] * p[k - i];
      acc += i % 2 == 1 ? term : -term;
    }
    if (k <= d) {
      Rat tail = Rat(k) * e[k];
      acc += k % 2 == 1 ? tail : -tail;
    }
    p[k] = acc;
  }
  return p;
}

Rat n_theta_eval(const FieldElement& z, const ThetaSpec& theta) {
  PolyQ cp = char_poly(z);
  auto e = elementary_symmetric(cp);
  const int d = cp.degree();
  switch (theta.kind) {
    case ThetaSpec::Kind::product:
      return e[d];
    case ThetaSpec::Kind::sum:
      return e[1];
    case ThetaSpec::Kind::power_sum: {
      if (theta.k < 0) fail(Errc::invalid_input, "power sum index must be >= 0");
      return power_sums(e, theta.k)[theta.k];
    }
    case ThetaSpec::Kind::esym_poly: {
      Rat acc = 0;
      for (const auto& [coeff, exps] : theta.terms) {
        if (static_cast<int>(exps.size()) > d)
          fail(Errc::unsupported, "exponent vector longer than the degree");
        Rat term = coeff;
        for (std::size_t i = 0; i < exps.size(); ++i) {
          if (exps[i] < 0) fail(Errc::invalid_input, "negative exponent");
          for (int rep = 0; rep < exps[i]; ++rep) term *= e[i + 1];
        }
        acc += term;
      }
      return acc;
    }
  }
  fail(Errc::invalid_input, "unknown theta kind");
}

} // namespace forge
