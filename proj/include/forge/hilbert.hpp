#ifndef FORGE_HILBERT_HPP
#define FORGE_HILBERT_HPP

#include <compare>
#include <optional>
#include <vector>

#include "forge/config.hpp"
#include "forge/group.hpp"
#include "forge/numfield.hpp"

namespace forge {

// A place of Q: a finite prime or the real place.
struct Place {
  bool infinite = false;
  long prime = 0;

  static Place inf() { return Place{true, 0}; }
  static Place finite(long p);

  auto operator<=>(const Place&) const = default;
};

// (a, b)_v = +1 iff z^2 = a x^2 + b y^2 has a nontrivial v-adic solution;
// closed form via Legendre symbols at odd p, parity formulas at 2, and the
// sign rule at the real place.
int hilbert_symbol(const Rat& a, const Rat& b, const Place& v);

// the real place, 2, and every odd prime dividing a numerator or denominator
std::vector<Place> relevant_places(const std::vector<Rat>& values);

// product of (a,b)_v over the relevant places; must be +1
bool product_formula_check(const Rat& a, const Rat& b);

long rational_valuation(const Rat& a, long p);
int legendre_symbol(long a, long p);
bool is_local_square(const Rat& a, const Place& v);

struct LocalSymbol {
  Place place;
  int value;
};

// certificate that alpha is a norm from Q(sqrt(d)): all local symbols +1,
// optionally an explicit witness x^2 - d y^2 = alpha
struct NormCertificate {
  Rat alpha;
  long d = 0;
  std::vector<LocalSymbol> symbols;
  std::optional<std::pair<Rat, Rat>> witness;
};

bool verify_certificate(const NormCertificate& cert);

struct NormFieldResult {
  long d = 0;
  std::vector<NormCertificate> certificates;
};

// Searches squarefree d (increasing |d|, positive first) making every alpha
// a local norm from Q(sqrt(d)) everywhere and d a v-adic square at each
// place in split; local-global for the quadratic extension then makes each
// alpha a global norm. Witness search is a bounded ladder over heights.
NormFieldResult find_quadratic_norm_field(const std::vector<Rat>& alphas,
                                          const std::vector<Place>& split,
                                          const RunConfig& cfg = default_config());

struct CubicTraceSquare {
  PolyQ f;            // monic irreducible cubic with nonsquare discriminant
  FieldElement beta;  // x mod f
  Rat p2_check;       // sum of squared conjugates, via the resultant path
};

// Builds a cubic field K = Q[x]/(f) and beta in K with Tr(beta^2) = alpha,
// from e2 = (e1^2 - alpha)/2 and a deterministic ladder over constant terms.
// The cyclic variant is rejected for alpha <= 0 (the trace form of a cyclic
// cubic is totally positive on beta) and unsupported otherwise.
CubicTraceSquare cubic_trace_square(const Rat& alpha, bool require_cyclic = false,
                                    const RunConfig& cfg = default_config());

// The permutation action on cosets of h is faithful iff the core of h in g
// is trivial.
bool faithfulness_check(GroupPtr g, const Subgroup& h);

} // namespace forge

#endif
