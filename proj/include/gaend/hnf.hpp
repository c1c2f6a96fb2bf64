#pragma once

#include "gaend/matrix.hpp"

namespace gaend {

/// Column-style Hermite normal form: M * U = H, U unimodular, H upper
/// triangular with positive pivots and entries right of each pivot
/// reduced into [0, pivot).
struct HnfResult {
    IntMatrix H;
    IntMatrix U;
};

/// Square input. With full_rank set, a singular M raises
/// MathError("singular lattice"). Without it, zero columns of H are
/// placed first and the remaining columns are in echelon form.
HnfResult hnf(const IntMatrix& M, bool full_rank);

/// Canonical n x n basis of the full-rank lattice spanned by the columns of
/// `generators`, given a positive integer d with d*Z^n contained in the
/// lattice. Intermediate entries stay bounded by d.
IntMatrix lattice_hnf(const IntMatrix& generators, const Integer& d);

/// Canonical basis of a full-rank lattice without a known multiple.
IntMatrix lattice_hnf(const IntMatrix& generators);

/// Coordinates of v in the basis H (upper triangular, full rank), or throws
/// when v is outside the Q-span. Result may be non-integral.
RatVector triangular_coordinates(const IntMatrix& H, const RatVector& v);

/// True when v lies in the lattice spanned by the columns of H.
bool lattice_contains(const IntMatrix& H, const RatVector& v);

/// Sublattice { x in L : c . x == 0 mod a } of the full-rank lattice with
/// basis H; returned in canonical form.
IntMatrix sublattice_congruence(const IntMatrix& H, const IntVector& c, const Integer& a);

}  // namespace gaend
