#ifndef FORGE_INTMAT_HPP
#define FORGE_INTMAT_HPP

#include <gmpxx.h>

#include <optional>
#include <vector>

namespace forge {

using Int = mpz_class;

// Dense integer matrix, row-major. All arithmetic is exact.
struct IntMat {
  int rows = 0;
  int cols = 0;
  std::vector<Int> a;

  IntMat() = default;
  IntMat(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c) {}

  Int& at(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
  const Int& at(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }

  static IntMat identity(int n);
  static IntMat from_rows(const std::vector<std::vector<long>>& rows);

  bool operator==(const IntMat& o) const = default;
};

IntMat mat_mul(const IntMat& a, const IntMat& b);
IntMat mat_add(const IntMat& a, const IntMat& b);
IntMat mat_sub(const IntMat& a, const IntMat& b);
IntMat mat_transpose(const IntMat& a);
IntMat mat_neg(const IntMat& a);
IntMat hstack(const IntMat& a, const IntMat& b);
IntMat vstack(const IntMat& a, const IntMat& b);
IntMat submatrix(const IntMat& a, int r0, int c0, int r1, int c1); // half-open
std::vector<Int> mat_apply(const IntMat& a, const std::vector<Int>& x);
std::vector<Int> column(const IntMat& a, int j);
bool is_zero(const IntMat& a);

// u * a * v = d with u, v unimodular; d diagonal with d1 | d2 | ... >= 1.
struct SmithResult {
  IntMat d;
  IntMat u, u_inv;
  IntMat v, v_inv;
  int rank = 0;
  std::vector<Int> invariants; // the nonzero diagonal entries
};

SmithResult smith_normal_form(IntMat a);

// Reusable exact solver for a x = b based on one Smith decomposition.
class SnfSolver {
public:
  explicit SnfSolver(IntMat a);

  // particular integer solution of a x = b, if one exists
  std::optional<std::vector<Int>> solve(const std::vector<Int>& b) const;
  bool contains(const std::vector<Int>& b) const; // b in the column lattice
  bool contains_columns(const IntMat& b) const;

  const SmithResult& snf() const { return snf_; }
  const IntMat& matrix() const { return a_; }

private:
  IntMat a_;
  SmithResult snf_;
};

// basis (as columns) of {x : a x = 0}
IntMat kernel_basis(const IntMat& a);

// basis (as columns) of the lattice spanned by the columns of a
IntMat column_lattice_basis(const IntMat& a);

bool lattice_contains(const IntMat& a, const IntMat& b); // columns of b in L(a)
bool lattice_equal(const IntMat& a, const IntMat& b);

// true when the columns of a together with the standard lattice relations
// given by rel span all of Z^rows
bool spans_ambient(const IntMat& a);

} // namespace forge

#endif
