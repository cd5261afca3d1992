#pragma once

#include <array>

#include "blockdiag/block_partition.hpp"
#include "blockdiag/matrix.hpp"

namespace blockdiag {

// Hand-coded third-order closed forms for the least-action transform and its
// generator, kept deliberately separate from the series-composition code so
// the two routes can cross-check each other. Nothing on the main code path
// calls these.

/// Order-(1..3) coefficients of T from the generator coefficients z1..z3.
/// Returns {T1, T2, T3}.
std::array<ComplexMatrix, 3> t_coeffs_closed_form(const ComplexMatrix& z1,
                                                  const ComplexMatrix& z2,
                                                  const ComplexMatrix& z3,
                                                  const BlockPartition& P);

/// Order-(1..3) coefficients of the least-action generator from z1..z3.
/// Returns {s1, s2, s3}.
std::array<ComplexMatrix, 3> s_coeffs_closed_form(const ComplexMatrix& z1,
                                                  const ComplexMatrix& z2,
                                                  const ComplexMatrix& z3,
                                                  const BlockPartition& P);

/// Order-(0..3) coefficients of exp(iS) (H0 + lambda H1) exp(-iS) written
/// out as nested commutators in s1..s3. Returns {H0, hb1, hb2, hb3}.
std::array<ComplexMatrix, 4> h_block_coeffs_closed_form(
    const ComplexMatrix& H0, const ComplexMatrix& H1, const ComplexMatrix& s1,
    const ComplexMatrix& s2, const ComplexMatrix& s3);

} // namespace blockdiag
