#include "forge/intmat.hpp"

#include "forge/error.hpp"

namespace forge {

IntMat IntMat::identity(int n) {
  IntMat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMat IntMat::from_rows(const std::vector<std::vector<long>>& rows) {
  const int r = static_cast<int>(rows.size());
  const int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
  IntMat m(r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[i].size()) != c)
      fail(Errc::invalid_input, "ragged matrix rows");
    for (int j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

IntMat mat_mul(const IntMat& a, const IntMat& b) {
  if (a.cols != b.rows) fail(Errc::mismatch, "matrix product shape mismatch");
  IntMat r(a.rows, b.cols);
  for (int i = 0; i < a.rows; ++i)
    for (int k = 0; k < a.cols; ++k) {
      const Int& aik = a.at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < b.cols; ++j) r.at(i, j) += aik * b.at(k, j);
    }
  return r;
}

IntMat mat_add(const IntMat& a, const IntMat& b) {
  if (a.rows != b.rows || a.cols != b.cols) fail(Errc::mismatch, "shape mismatch");
  IntMat r(a.rows, a.cols);
  for (std::size_t i = 0; i < r.a.size(); ++i) r.a[i] = a.a[i] + b.a[i];
  return r;
}

IntMat mat_sub(const IntMat& a, const IntMat& b) {
  if (a.rows != b.rows || a.cols != b.cols) fail(Errc::mismatch, "shape mismatch");
  IntMat r(a.rows, a.cols);
  for (std::size_t i = 0; i < r.a.size(); ++i) r.a[i] = a.a[i] - b.a[i];
  return r;
}

IntMat mat_transpose(const IntMat& a) {
  IntMat r(a.cols, a.rows);
  for (int i = 0; i < a.rows; ++i)
    for (int j = 0; j < a.cols; ++j) r.at(j, i) = a.at(i, j);
  return r;
}

IntMat mat_neg(const IntMat& a) {
  IntMat r(a.rows, a.cols);
  for (std::size_t i = 0; i < r.a.size(); ++i) r.a[i] = -a.a[i];
  return r;
}

IntMat hstack(const IntMat& a, const IntMat& b) {
  if (a.rows != b.rows) fail(Errc::mismatch, "hstack row mismatch");
  IntMat r(a.rows, a.cols + b.cols);
  for (int i = 0; i < a.rows; ++i) {
    for (int j = 0; j < a.cols; ++j) r.at(i, j) = a.at(i, j);
    for (int j = 0; j < b.cols; ++j) r.at(i, a.cols + j) = b.at(i, j);
  }
  return r;
}

IntMat vstack(const IntMat& a, const IntMat& b) {
  if (a.cols != b.cols) fail(Errc::mismatch, "vstack column mismatch");
  IntMat r(a.rows + b.rows, a.cols);
  for (int i = 0; i < a.rows; ++i)
    for (int j = 0; j < a.cols; ++j) r.at(i, j) = a.at(i, j);
  for (int i = 0; i < b.rows; ++i)
    for (int j = 0; j < b.cols; ++j) r.at(a.rows + i, j) = b.at(i, j);
  return r;
}

IntMat submatrix(const IntMat& a, int r0, int c0, int r1, int c1) {
  IntMat r(r1 - r0, c1 - c0);
  for (int i = r0; i < r1; ++i)
    for (int j = c0; j < c1; ++j) r.at(i - r0, j - c0) = a.at(i, j);
  return r;
}

std::vector<Int> mat_apply(const IntMat& a, const std::vector<Int>& x) {
  if (static_cast<int>(x.size()) != a.cols) fail(Errc::mismatch, "apply shape mismatch");
  std::vector<Int> r(a.rows);
  for (int i = 0; i < a.rows; ++i)
    for (int j = 0; j < a.cols; ++j) r[i] += a.at(i, j) * x[j];
  return r;
}

std::vector<Int> column(const IntMat& a, int j) {
  std::vector<Int> c(a.rows);
  for (int i = 0; i < a.rows; ++i) c[i] = a.at(i, j);
  return c;
}

bool is_zero(const IntMat& a) {
  for (const auto& v : a.a)
    if (v != 0) return false;
  return true;
}

// ---- Smith normal form -------------------------------------------------------

namespace {

struct SnfWork {
  IntMat a, u, u_inv, v, v_inv;

  void swap_rows(int i, int j) {
    if (i == j) return;
    for (int c = 0; c < a.cols; ++c) std::swap(a.at(i, c), a.at(j, c));
    for (int c = 0; c < u.cols; ++c) std::swap(u.at(i, c), u.at(j, c));
    for (int r = 0; r < u_inv.rows; ++r) std::swap(u_inv.at(r, i), u_inv.at(r, j));
  }
  void swap_cols(int i, int j) {
    if (i == j) return;
    for (int r = 0; r < a.rows; ++r) std::swap(a.at(r, i), a.at(r, j));
    for (int r = 0; r < v.rows; ++r) std::swap(v.at(r, i), v.at(r, j));
    for (int c = 0; c < v_inv.cols; ++c) std::swap(v_inv.at(i, c), v_inv.at(j, c));
  }
  // row i -= q * row t
  void row_sub(int i, const Int& q, int t) {
    if (q == 0) return;
    for (int c = 0; c < a.cols; ++c) a.at(i, c) -= q * a.at(t, c);
    for (int c = 0; c < u.cols; ++c) u.at(i, c) -= q * u.at(t, c);
    for (int r = 0; r < u_inv.rows; ++r) u_inv.at(r, t) += q * u_inv.at(r, i);
  }
  // col j -= q * col t
  void col_sub(int j, const Int& q, int t) {
    if (q == 0) return;
    for (int r = 0; r < a.rows; ++r) a.at(r, j) -= q * a.at(r, t);
    for (int r = 0; r < v.rows; ++r) v.at(r, j) -= q * v.at(r, t);
    for (int c = 0; c < v_inv.cols; ++c) v_inv.at(t, c) += q * v_inv.at(j, c);
  }
  void negate_row(int i) {
    for (int c = 0; c < a.cols; ++c) a.at(i, c) = -a.at(i, c);
    for (int c = 0; c < u.cols; ++c) u.at(i, c) = -u.at(i, c);
    for (int r = 0; r < u_inv.rows; ++r) u_inv.at(r, i) = -u_inv.at(r, i);
  }
  // row t += row i
  void row_add(int t, int i) {
    for (int c = 0; c < a.cols; ++c) a.at(t, c) += a.at(i, c);
    for (int c = 0; c < u.cols; ++c) u.at(t, c) += u.at(i, c);
    for (int r = 0; r < u_inv.rows; ++r) u_inv.at(r, i) -= u_inv.at(r, t);
  }
};

} // namespace

SmithResult smith_normal_form(IntMat input) {
  const int m = input.rows, n = input.cols;
  SnfWork w{std::move(input), IntMat::identity(m), IntMat::identity(m),
            IntMat::identity(n), IntMat::identity(n)};

  const int steps = std::min(m, n);
  int t = 0;
  while (t < steps) {
    // locate a pivot of minimal absolute value in the trailing submatrix
    int pi = -1, pj = -1;
    Int best;
    for (int i = t; i < m; ++i)
      for (int j = t; j < n; ++j) {
        const Int& x = w.a.at(i, j);
        if (x == 0) continue;
        Int ax = abs(x);
        if (pi < 0 || ax < best) {
          best = ax;
          pi = i;
          pj = j;
        }
      }
    if (pi < 0) break; // trailing submatrix is zero
    w.swap_rows(t, pi);
    w.swap_cols(t, pj);

    bool clean = false;
    while (!clean) {
      clean = true;
      // clear the pivot column
      for (int i = t + 1; i < m; ++i) {
        if (w.a.at(i, t) == 0) continue;
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), w.a.at(i, t).get_mpz_t(), w.a.at(t, t).get_mpz_t());
        w.row_sub(i, q, t);
        if (w.a.at(i, t) != 0) { // remainder became the new, smaller pivot
          w.swap_rows(t, i);
          clean = false;
        }
      }
      if (!clean) continue;
      // clear the pivot row
      for (int j = t + 1; j < n; ++j) {
        if (w.a.at(t, j) == 0) continue;
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), w.a.at(t, j).get_mpz_t(), w.a.at(t, t).get_mpz_t());
        w.col_sub(j, q, t);
        if (w.a.at(t, j) != 0) {
          w.swap_cols(t, j);
          clean = false;
        }
      }
      if (!clean) continue;
      // divisibility: the pivot must divide the whole trailing block
      for (int i = t + 1; i < m && clean; ++i)
        for (int j = t + 1; j < n && clean; ++j)
          if (w.a.at(i, j) % w.a.at(t, t) != 0) {
            w.row_add(t, i);
            clean = false;
          }
    }
    if (w.a.at(t, t) < 0) w.negate_row(t);
    ++t;
  }

  SmithResult r;
  r.rank = t;
  r.d = std::move(w.a);
  r.u = std::move(w.u);
  r.u_inv = std::move(w.u_inv);
  r.v = std::move(w.v);
  r.v_inv = std::move(w.v_inv);
  for (int i = 0; i < r.rank; ++i) r.invariants.push_back(r.d.at(i, i));
  return r;
}

// ---- solver ------------------------------------------------------------------

SnfSolver::SnfSolver(IntMat a) : a_(std::move(a)), snf_(smith_normal_form(a_)) {}

std::optional<std::vector<Int>> SnfSolver::solve(const std::vector<Int>& b) const {
  if (static_cast<int>(b.size()) != a_.rows)
    fail(Errc::mismatch, "solve: vector length mismatch");
  std::vector<Int> ub = mat_apply(snf_.u, b);
  std::vector<Int> y(a_.cols, Int(0));
  for (int i = 0; i < a_.rows; ++i) {
    if (i < snf_.rank) {
      if (ub[i] % snf_.d.at(i, i) != 0) return std::nullopt;
      if (i < a_.cols) y[i] = ub[i] / snf_.d.at(i, i);
    } else if (ub[i] != 0) {
      return std::nullopt;
    }
  }
  return mat_apply(snf_.v, y);
}

bool SnfSolver::contains(const std::vector<Int>& b) const {
  return solve(b).has_value();
}

bool SnfSolver::contains_columns(const IntMat& b) const {
  if (b.rows != a_.rows) fail(Errc::mismatch, "lattice membership shape mismatch");
  for (int j = 0; j < b.cols; ++j)
    if (!contains(column(b, j))) return false;
  return true;
}

IntMat kernel_basis(const IntMat& a) {
  auto snf = smith_normal_form(a);
  return submatrix(snf.v, 0, snf.rank, a.cols, a.cols);
}

IntMat column_lattice_basis(const IntMat& a) {
  auto snf = smith_normal_form(a);
  IntMat basis(a.rows, snf.rank);
  for (int t = 0; t < snf.rank; ++t)
    for (int i = 0; i < a.rows; ++i)
      basis.at(i, t) = snf.d.at(t, t) * snf.u_inv.at(i, t);
  return basis;
}

bool lattice_contains(const IntMat& a, const IntMat& b) {
  return SnfSolver(a).contains_columns(b);
}

bool lattice_equal(const IntMat& a, const IntMat& b) {
  return lattice_contains(a, b) && lattice_contains(b, a);
}

bool spans_ambient(const IntMat& a) {
  auto snf = smith_normal_form(a);
  if (snf.rank != a.rows) return false;
  for (const auto& d : snf.invariants)
    if (d != 1) return false;
  return true;
}

} // namespace forge
