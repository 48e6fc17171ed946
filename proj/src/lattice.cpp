#include "retract/lattice.hpp"

#include <stdexcept>
#include <utility>

#include "retract/errors.hpp"

namespace retract {

namespace {

void swap_rows(IntMatrix& a, std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(i, c), a(j, c));
}

// row_i -= q * row_j
void sub_row(IntMatrix& a, std::size_t i, std::size_t j, const mpz_class& q) {
  if (q == 0) return;
  for (std::size_t c = 0; c < a.cols(); ++c) a(i, c) -= q * a(j, c);
}

void negate_row(IntMatrix& a, std::size_t i) {
  for (std::size_t c = 0; c < a.cols(); ++c) a(i, c) = -a(i, c);
}

mpz_class floor_div(const mpz_class& a, const mpz_class& b) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

void require_idempotent(const IntMatrix& m) {
  if (!mat_is_idempotent(m)) throw NotIdempotent("unit-lattice matrix is not idempotent: " + m.to_string());
}

}  // namespace

HermiteResult hermite_form(const IntMatrix& a) {
  HermiteResult res{a, IntMatrix::identity(a.rows()), 0, {}};
  IntMatrix& h = res.h;
  IntMatrix& u = res.transform;
  const std::size_t rows = h.rows();
  std::size_t r = 0;
  for (std::size_t c = 0; c < h.cols() && r < rows; ++c) {
    // Euclid on column c among rows r..: repeatedly pull up the smallest entry.
    while (true) {
      std::size_t best = rows;
      for (std::size_t i = r; i < rows; ++i) {
        if (h(i, c) != 0 && (best == rows || abs(h(i, c)) < abs(h(best, c)))) best = i;
      }
      if (best == rows) break;
      swap_rows(h, r, best);
      swap_rows(u, r, best);
      bool done = true;
      for (std::size_t i = r + 1; i < rows; ++i) {
        if (h(i, c) == 0) continue;
        mpz_class q = floor_div(h(i, c), h(r, c));
        sub_row(h, i, r, q);
        sub_row(u, i, r, q);
        if (h(i, c) != 0) done = false;
      }
      if (done) break;
    }
    if (h(r, c) == 0) continue;
    if (h(r, c) < 0) {
      negate_row(h, r);
      negate_row(u, r);
    }
    for (std::size_t i = 0; i < r; ++i) {
      mpz_class q = floor_div(h(i, c), h(r, c));
      sub_row(h, i, r, q);
      sub_row(u, i, r, q);
    }
    res.pivots.push_back(c);
    ++r;
  }
  res.rank = r;
  return res;
}

std::vector<IntVector> canonical_basis(const std::vector<IntVector>& vectors, std::size_t dim) {
  IntMatrix a(vectors.size(), dim);
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    if (vectors[i].size() != dim) throw std::invalid_argument("vector length mismatch");
    for (std::size_t j = 0; j < dim; ++j) a(i, j) = vectors[i][j];
  }
  HermiteResult hr = hermite_form(a);
  std::vector<IntVector> basis;
  for (std::size_t i = 0; i < hr.rank; ++i) basis.push_back(hr.h.row(i));
  return basis;
}

bool mat_is_idempotent(const IntMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("idempotency test on a non-square matrix");
  return m * m == m;
}

std::vector<IntVector> fixed_lattice_basis(const IntMatrix& m) {
  require_idempotent(m);
  std::vector<IntVector> cols;
  for (std::size_t j = 0; j < m.cols(); ++j) cols.push_back(m.column(j));
  return canonical_basis(cols, m.rows());
}

std::vector<IntVector> integer_kernel(const IntMatrix& m) {
  // Rows of U at zero rows of U·Mᵀ = H span the left kernel of Mᵀ, i.e. ker M.
  HermiteResult hr = hermite_form(m.transpose());
  std::vector<IntVector> raw;
  for (std::size_t i = hr.rank; i < hr.h.rows(); ++i) raw.push_back(hr.transform.row(i));
  return canonical_basis(raw, m.cols());
}

std::vector<IntVector> kernel_basis(const IntMatrix& m) {
  require_idempotent(m);
  return integer_kernel(m);
}

IntMatrix unimodular_inverse(const IntMatrix& m) {
  if (!m.is_square()) throw CertificateFailure("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  std::vector<std::vector<mpq_class>> a(n, std::vector<mpq_class>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m(i, j);
    a[i][n + i] = 1;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && a[piv][c] == 0) ++piv;
    if (piv == n) throw CertificateFailure("singular basis matrix " + m.to_string());
    std::swap(a[piv], a[c]);
    mpq_class inv = 1 / a[c][c];
    for (auto& x : a[c]) x *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a[i][c] == 0) continue;
      mpq_class f = a[i][c];
      for (std::size_t j = 0; j < 2 * n; ++j) a[i][j] -= f * a[c][j];
    }
  }
  IntMatrix t(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const mpq_class& v = a[i][n + j];
      if (v.get_den() != 1) throw CertificateFailure("basis matrix is not unimodular: " + m.to_string());
      t(i, j) = v.get_num();
    }
  }
  return t;
}

UnimodularBasis assemble_unimodular(const std::vector<IntVector>& fixed, const std::vector<IntVector>& kernel) {
  std::vector<IntVector> cols = fixed;
  cols.insert(cols.end(), kernel.begin(), kernel.end());
  const std::size_t d = cols.size();
  for (const auto& c : cols) {
    if (c.size() != d) throw CertificateFailure("fixed and kernel bases do not form a square system");
  }
  IntMatrix y = IntMatrix::from_columns(d, cols);
  mpz_class det = determinant(y);
  if (det != 1 && det != -1) {
    throw CertificateFailure("|det Y| = " + mpz_class(abs(det)).get_str() + " != 1 for Y = " + y.to_string());
  }
  IntMatrix t = unimodular_inverse(y);
  if (!(t * y == IntMatrix::identity(d))) throw CertificateFailure("T·Y != I");
  return UnimodularBasis{std::move(y), std::move(t), det > 0 ? 1 : -1};
}

std::optional<IntVector> solve_in_lattice(const IntVector& v, const std::vector<IntVector>& basis) {
  const std::size_t dim = v.size();
  if (basis.empty()) {
    for (const auto& x : v) {
      if (x != 0) return std::nullopt;
    }
    return IntVector{};
  }
  IntMatrix b(basis.size(), dim);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (basis[i].size() != dim) throw std::invalid_argument("vector length mismatch");
    for (std::size_t j = 0; j < dim; ++j) b(i, j) = basis[i][j];
  }
  HermiteResult hr = hermite_form(b);
  // Solve w·H = v along the pivots, then c = w·U.
  IntVector w(basis.size());
  IntVector residual = v;
  for (std::size_t k = 0; k < hr.rank; ++k) {
    std::size_t p = hr.pivots[k];
    if (!mpz_divisible_p(residual[p].get_mpz_t(), hr.h(k, p).get_mpz_t())) return std::nullopt;
    w[k] = residual[p] / hr.h(k, p);
    for (std::size_t j = 0; j < dim; ++j) residual[j] -= w[k] * hr.h(k, j);
  }
  for (const auto& x : residual) {
    if (x != 0) return std::nullopt;
  }
  IntVector c(basis.size());
  for (std::size_t k = 0; k < basis.size(); ++k) {
    for (std::size_t i = 0; i < basis.size(); ++i) c[i] += w[k] * hr.transform(k, i);
  }
  return c;
}

SummandDecomposition decompose(const IntMatrix& m) {
  SummandDecomposition dec;
  dec.m = m;
  dec.fixed_basis = fixed_lattice_basis(m);
  dec.kernel_basis = kernel_basis(m);
  dec.r = dec.fixed_basis.size();
  if (dec.r + dec.kernel_basis.size() != m.rows()) {
    throw CertificateFailure("rank(fixed) + rank(kernel) != d for M = " + m.to_string());
  }
  UnimodularBasis ub = assemble_unimodular(dec.fixed_basis, dec.kernel_basis);
  dec.y = std::move(ub.y);
  dec.t = std::move(ub.t);
  dec.det_sign = ub.det_sign;
  return dec;
}

}  // namespace retract
