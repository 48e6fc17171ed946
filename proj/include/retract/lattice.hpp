#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "retract/int_matrix.hpp"

namespace retract {

// Integer linear algebra on Z^d for idempotent matrices. Vectors are columns;
// the image of an idempotent M (its fixed lattice) and its kernel are direct
// summands with Z^d = im M ⊕ ker M.

struct HermiteResult {
  IntMatrix h;          // row-style Hermite normal form
  IntMatrix transform;  // unimodular U with U·A = H
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

/// Row Hermite normal form with positive pivots and entries above each pivot
/// reduced into [0, pivot). Unique for a given row lattice.
HermiteResult hermite_form(const IntMatrix& a);

/// Canonical Z-basis of the span of the given vectors.
std::vector<IntVector> canonical_basis(const std::vector<IntVector>& vectors, std::size_t dim);

bool mat_is_idempotent(const IntMatrix& m);

/// Basis of {v : Mv = v} = im M. Throws NotIdempotent.
std::vector<IntVector> fixed_lattice_basis(const IntMatrix& m);

/// Basis of {v : Mv = 0}. Throws NotIdempotent.
std::vector<IntVector> kernel_basis(const IntMatrix& m);

/// Basis of {v : Mv = 0} for any integer matrix.
std::vector<IntVector> integer_kernel(const IntMatrix& m);

struct UnimodularBasis {
  IntMatrix y;  // columns fixed basis then kernel basis
  IntMatrix t;  // exact inverse of y
  int det_sign = 1;
};

/// Assembles Y and its integer inverse. Throws CertificateFailure unless
/// |det Y| = 1.
UnimodularBasis assemble_unimodular(const std::vector<IntVector>& fixed, const std::vector<IntVector>& kernel);

/// Integer coordinates c with Σ c_i·basis_i = v, if any exist.
std::optional<IntVector> solve_in_lattice(const IntVector& v, const std::vector<IntVector>& basis);

/// Exact inverse of a unimodular matrix. Throws CertificateFailure otherwise.
IntMatrix unimodular_inverse(const IntMatrix& m);

struct SummandDecomposition {
  IntMatrix m;
  std::size_t r = 0;
  std::vector<IntVector> fixed_basis;
  std::vector<IntVector> kernel_basis;
  IntMatrix y;
  IntMatrix t;
  int det_sign = 1;

  std::size_t dim() const { return m.rows(); }
};

/// Full decomposition Z^d = im M ⊕ ker M with the assembled basis.
SummandDecomposition decompose(const IntMatrix& m);

}  // namespace retract
