#include "blockdiag/closed_forms.hpp"

namespace blockdiag {

namespace {
const Complex kI(0.0, 1.0);
}

std::array<ComplexMatrix, 3> t_coeffs_closed_form(const ComplexMatrix& z1,
                                                  const ComplexMatrix& z2,
                                                  const ComplexMatrix& z3,
                                                  const BlockPartition& P) {
    const ComplexMatrix Bz1 = block_project(z1, P);
    const ComplexMatrix Bz2 = block_project(z2, P);
    const ComplexMatrix Bz3 = block_project(z3, P);
    const ComplexMatrix z1sq = z1 * z1;
    const ComplexMatrix Bz1sq = block_project(z1sq, P);
    const ComplexMatrix Bz1cb = block_project(z1sq * z1, P);

    ComplexMatrix T1 = -kI * (z1 - Bz1);

    ComplexMatrix T2 = -kI * (z2 - Bz2) - 0.5 * z1sq - 0.5 * Bz1 * Bz1 + z1 * Bz1;

    ComplexMatrix T3 = -kI * (z3 - Bz3)
                     + (kI / 6.0) * (z1sq * z1 - Bz1cb)
                     - (kI / 2.0) * Bz1 * Bz1 * Bz1
                     - 0.5 * (z1 * z2 + z2 * z1)
                     - 0.5 * (Bz1 * Bz2 + Bz2 * Bz1)
                     + (z1 * Bz2 + z2 * Bz1)
                     + (kI / 4.0) * (Bz1 * Bz1sq + Bz1sq * Bz1)
                     - (kI / 2.0) * (z1sq * Bz1 - z1 * Bz1 * Bz1);

    return {T1, T2, T3};
}

std::array<ComplexMatrix, 3> s_coeffs_closed_form(const ComplexMatrix& z1,
                                                  const ComplexMatrix& z2,
                                                  const ComplexMatrix& z3,
                                                  const BlockPartition& P) {
    const ComplexMatrix Bz1 = block_project(z1, P);
    const ComplexMatrix Bz2 = block_project(z2, P);
    const ComplexMatrix Bz3 = block_project(z3, P);
    const ComplexMatrix z1sq = z1 * z1;
    const ComplexMatrix Bz1sq = block_project(z1sq, P);
    const ComplexMatrix Bz1cb = block_project(z1sq * z1, P);

    ComplexMatrix s1 = z1 - Bz1;

    ComplexMatrix s2 = (z2 - Bz2) + (kI / 2.0) * commutator(z1, Bz1);

    ComplexMatrix s3 = (z3 - Bz3)
                     + Bz1cb / 6.0
                     + (Bz1 * Bz1 * Bz1) / 3.0
                     + (kI / 2.0) * (commutator(z1, Bz2) + commutator(z2, Bz1))
                     - 0.25 * (Bz1 * Bz1sq + Bz1sq * Bz1)
                     - (1.0 / 12.0) * (Bz1 * Bz1 * z1 + z1 * Bz1 * Bz1
                                       - z1sq * Bz1 - Bz1 * z1sq)
                     - (1.0 / 6.0) * (z1 * Bz1 * z1 - Bz1 * z1 * Bz1);

    return {s1, s2, s3};
}

std::array<ComplexMatrix, 4> h_block_coeffs_closed_form(
    const ComplexMatrix& H0, const ComplexMatrix& H1, const ComplexMatrix& s1,
    const ComplexMatrix& s2, const ComplexMatrix& s3) {
    const ComplexMatrix c1H0 = commutator(s1, H0);
    const ComplexMatrix c2H0 = commutator(s2, H0);
    const ComplexMatrix c1H1 = commutator(s1, H1);

    ComplexMatrix hb1 = kI * c1H0 + H1;

    ComplexMatrix hb2 = kI * c2H0 - 0.5 * commutator(s1, c1H0) + kI * c1H1;

    ComplexMatrix hb3 = kI * commutator(s3, H0)
                      - (kI / 6.0) * commutator(s1, commutator(s1, c1H0))
                      - 0.5 * (commutator(s1, c2H0) + commutator(s2, c1H0))
                      + kI * commutator(s2, H1)
                      - 0.5 * commutator(s1, c1H1);

    return {H0, hb1, hb2, hb3};
}

} // namespace blockdiag
