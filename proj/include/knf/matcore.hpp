#pragma once

#include <Eigen/Dense>
#include <complex>

#include "knf/errors.hpp"
#include "knf/tolerances.hpp"

namespace knf {

using Cmat = Eigen::MatrixXcd;
using Cvec = Eigen::VectorXcd;
using cplx = std::complex<double>;

/// Ambient matrix group a representation lives in.
enum class Ambient { GL, SL };
enum class Field { Complex, Real };

struct GroupSpec {
    Ambient ambient = Ambient::GL;
    int dim = 1;
    Field field = Field::Complex;
};

/// Result of a (possibly non-unitary) eigendecomposition m = P diag(lambda) P^-1.
/// Eigenvalues are sorted by modulus descending, then argument in [0, 2pi)
/// ascending, so repeated decompositions agree.
struct EigenDecomp {
    Cvec eigenvalues;
    Cmat basis;              // columns are eigenvectors
    double basis_condition;  // 2-norm condition estimate of basis
};

struct PolarDecomp {
    Cmat unitary;
    Cmat positive;  // Hermitian positive-definite, = sqrt(m^* m)
};

bool entries_finite(const Cmat& m);
void require_square_finite(const Cmat& m);

/// trace(a^* b); the Hermitian inner product every norm here derives from.
cplx frobenius_inner(const Cmat& a, const Cmat& b);
double frobenius_norm(const Cmat& m);

/// || m m^* - m^* m ||_F; zero exactly for normal matrices.
double normality_residual(const Cmat& m);

/// General eigendecomposition. Throws NonSemisimple when the eigenvector
/// basis is numerically defective (condition >= cond_cap).
EigenDecomp eigendecompose(const Cmat& m, const ToleranceConfig& tol = {});

/// Eigendecomposition with a unitary basis, valid for (near-)normal matrices
/// only; computed via a Schur factorization so the basis is orthonormal to
/// machine precision. Throws NotNormal if the input fails the normality gate.
EigenDecomp spectral_decompose(const Cmat& m, const ToleranceConfig& tol = {});

/// m = unitary * positive. Positive part is sqrt(m^* m) through a
/// self-adjoint eigendecomposition.
PolarDecomp polar_decompose(const Cmat& m, const ToleranceConfig& tol = {});

/// exp(h) for Hermitian h, computed spectrally. Output is Hermitian
/// positive-definite; real symmetric input gives (numerically) real output.
Cmat hermitian_exp(const Cmat& h, const ToleranceConfig& tol = {});

/// Checks one matrix against a GroupSpec (invertibility, determinant,
/// realness as applicable). Throws InvalidRepresentation on failure.
void validate_member(const Cmat& m, const GroupSpec& spec, const ToleranceConfig& tol = {});

}  // namespace knf
