#ifndef FORGE_NUMFIELD_HPP
#define FORGE_NUMFIELD_HPP

#include <gmpxx.h>

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace forge {

using Rat = mpq_class;

// Polynomial over Q; coefficients constant-first with no high-order zeros.
class PolyQ {
public:
  PolyQ() = default; // zero polynomial
  explicit PolyQ(std::vector<Rat> coeffs);
  static PolyQ constant(const Rat& c);
  static PolyQ monomial(int degree, const Rat& c = 1);

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  Rat coeff(int i) const; // zero beyond the degree
  const Rat& leading() const;
  const std::vector<Rat>& coeffs() const { return coeffs_; }
  bool monic() const { return !is_zero() && leading() == 1; }

  Rat eval(const Rat& x) const;

  bool operator==(const PolyQ& o) const = default;

private:
  std::vector<Rat> coeffs_;
};

PolyQ operator+(const PolyQ& a, const PolyQ& b);
PolyQ operator-(const PolyQ& a, const PolyQ& b);
PolyQ operator*(const PolyQ& a, const PolyQ& b);
PolyQ scale(const PolyQ& a, const Rat& c);

struct PolyDiv {
  PolyQ quot;
  PolyQ rem;
};
PolyDiv poly_divmod(const PolyQ& a, const PolyQ& b);

// resultant of two rational polynomials, by a Euclidean remainder sequence
Rat resultant(const PolyQ& a, const PolyQ& b);

// complete for degree <= 3 (a cubic is irreducible iff it has no rational
// root); used as a necessary check in higher degree
bool has_rational_root(const PolyQ& f);

// discriminant of a monic cubic x^3 + a x^2 + b x + c
Rat cubic_discriminant(const PolyQ& f);

bool is_rational_square(const Rat& r);

// ---- number fields -----------------------------------------------------------

// Q[x]/(f) for a monic polynomial f. Irreducibility is fully verified for
// degree <= 3; in higher degree the rational-root test is applied and the
// caller vouches for the rest (no general factorization here).
class NumberField;
using FieldPtr = std::shared_ptr<const NumberField>;

class NumberField {
public:
  static FieldPtr create(PolyQ modulus);

  const PolyQ& modulus() const { return modulus_; }
  int degree() const { return modulus_.degree(); }

private:
  explicit NumberField(PolyQ modulus) : modulus_(std::move(modulus)) {}
  PolyQ modulus_;
};

struct FieldElement {
  FieldPtr field;
  PolyQ repr; // degree < field degree
};

FieldElement make_element(FieldPtr field, const PolyQ& value); // reduces mod f
FieldElement field_generator(const FieldPtr& field);           // x mod f
FieldElement field_rational(const FieldPtr& field, const Rat& c);
FieldElement mul(const FieldElement& a, const FieldElement& b);
FieldElement add(const FieldElement& a, const FieldElement& b);

// characteristic polynomial of multiplication by z, computed as the
// resultant Res_x(f(x), y - repr(x)), normalized monic; degree [K:Q]
PolyQ char_poly(const FieldElement& z);

// ---- symmetric evaluation ------------------------------------------------------

// theta as a symmetric-function specification: the product or sum of the
// conjugates, a power sum p_k, or a polynomial in the elementary symmetric
// functions e_1..e_d given as (coefficient, exponent vector) terms.
struct ThetaSpec {
  enum class Kind { product, sum, power_sum, esym_poly };
  Kind kind = Kind::product;
  int k = 0;
  std::vector<std::pair<Rat, std::vector<int>>> terms;

  static ThetaSpec product() { return {Kind::product, 0, {}}; }
  static ThetaSpec sum() { return {Kind::sum, 0, {}}; }
  static ThetaSpec power_sum(int k) { return {Kind::power_sum, k, {}}; }
};

// e_0..e_d from a monic characteristic polynomial
std::vector<Rat> elementary_symmetric(const PolyQ& cp);
// p_0..p_upto by Newton's identities
std::vector<Rat> power_sums(const std::vector<Rat>& e, int upto);

// evaluates theta at the conjugates of z through the characteristic
// polynomial; product recovers the field norm, sum the trace
Rat n_theta_eval(const FieldElement& z, const ThetaSpec& theta);

} // namespace forge

#endif
