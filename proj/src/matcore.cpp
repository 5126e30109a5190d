#include "knf/matcore.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <vector>

namespace knf {

namespace {

// argument normalized to [0, 2pi) so the sort below is total
double arg_2pi(cplx z) {
    double a = std::arg(z);
    if (a < 0.0) a += 2.0 * std::numbers::pi;
    return a;
}

// modulus descending, then argument ascending
std::vector<int> sorted_order(const Cvec& values) {
    std::vector<int> idx(static_cast<std::size_t>(values.size()));
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) {
        double ma = std::abs(values[a]), mb = std::abs(values[b]);
        if (ma != mb) return ma > mb;
        return arg_2pi(values[a]) < arg_2pi(values[b]);
    });
    return idx;
}

double condition_2norm(const Cmat& m) {
    Eigen::JacobiSVD<Cmat> svd(m);
    double smin = svd.singularValues()(svd.singularValues().size() - 1);
    double smax = svd.singularValues()(0);
    if (smin <= 0.0) return std::numeric_limits<double>::infinity();
    return smax / smin;
}

}  // namespace

bool entries_finite(const Cmat& m) {
    return m.allFinite();
}

void require_square_finite(const Cmat& m) {
    if (m.rows() != m.cols())
        throw DimensionMismatch("matrix is not square");
    if (!entries_finite(m))
        throw InvalidRepresentation("matrix has non-finite entries");
}

cplx frobenius_inner(const Cmat& a, const Cmat& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw DimensionMismatch("frobenius_inner: size mismatch");
    return (a.conjugate().cwiseProduct(b)).sum();
}

double frobenius_norm(const Cmat& m) {
    return m.norm();
}

double normality_residual(const Cmat& m) {
    require_square_finite(m);
    return (m * m.adjoint() - m.adjoint() * m).norm();
}

EigenDecomp eigendecompose(const Cmat& m, const ToleranceConfig& tol) {
    require_square_finite(m);
    Eigen::ComplexEigenSolver<Cmat> solver(m, /*computeEigenvectors=*/true);
    if (solver.info() != Eigen::Success)
        throw NonSemisimple("eigendecomposition failed to converge");

    EigenDecomp d;
    const auto order = sorted_order(solver.eigenvalues());
    const int n = static_cast<int>(m.rows());
    d.eigenvalues.resize(n);
    d.basis.resize(n, n);
    for (int k = 0; k < n; ++k) {
        d.eigenvalues[k] = solver.eigenvalues()[order[k]];
        d.basis.col(k) = solver.eigenvectors().col(order[k]);
    }
    d.basis_condition = condition_2norm(d.basis);
    if (!(d.basis_condition < tol.cond_cap))
        throw NonSemisimple("eigenvector basis is numerically defective");
    return d;
}

EigenDecomp spectral_decompose(const Cmat& m, const ToleranceConfig& tol) {
    require_square_finite(m);
    const double nr = normality_residual(m);
    const double scale = 1.0 + m.squaredNorm();
    if (!(nr <= tol.tol_normal * scale))
        throw NotNormal("matrix fails the normality gate");

    // For a normal matrix the Schur form is diagonal and Q is an orthonormal
    // eigenbasis; this path never inverts anything.
    Eigen::ComplexSchur<Cmat> schur(m, /*computeU=*/true);
    if (schur.info() != Eigen::Success)
        throw NonSemisimple("Schur factorization failed to converge");

    const int n = static_cast<int>(m.rows());
    Cvec raw = schur.matrixT().diagonal();
    const auto order = sorted_order(raw);
    EigenDecomp d;
    d.eigenvalues.resize(n);
    d.basis.resize(n, n);
    for (int k = 0; k < n; ++k) {
        d.eigenvalues[k] = raw[order[k]];
        d.basis.col(k) = schur.matrixU().col(order[k]);
    }
    d.basis_condition = 1.0;
    return d;
}

PolarDecomp polar_decompose(const Cmat& m, const ToleranceConfig& tol) {
    require_square_finite(m);
    // positive part as sqrt(m^* m)
    Eigen::SelfAdjointEigenSolver<Cmat> es(m.adjoint() * m);
    if (es.info() != Eigen::Success)
        throw Singular("self-adjoint eigendecomposition failed");
    const auto& lam = es.eigenvalues();
    if (!(lam.minCoeff() > tol.tol_sing * tol.tol_sing))
        throw Singular("matrix is not invertible within tolerance");

    Eigen::VectorXd roots = lam.cwiseSqrt();
    const Cmat& v = es.eigenvectors();
    PolarDecomp p;
    p.positive = v * roots.asDiagonal() * v.adjoint();
    p.unitary = m * (v * roots.cwiseInverse().asDiagonal() * v.adjoint());
    return p;
}

Cmat hermitian_exp(const Cmat& h, const ToleranceConfig& tol) {
    require_square_finite(h);
    const double asym = (h - h.adjoint()).norm();
    if (!(asym <= tol.tol_herm * (1.0 + h.norm())))
        throw NotHermitian("input is not Hermitian within tolerance");

    Eigen::SelfAdjointEigenSolver<Cmat> es((h + h.adjoint()) / 2.0);
    if (es.info() != Eigen::Success)
        throw NotHermitian("self-adjoint eigendecomposition failed");
    Eigen::VectorXd e = es.eigenvalues().array().exp();
    return es.eigenvectors() * e.asDiagonal() * es.eigenvectors().adjoint();
}

void validate_member(const Cmat& m, const GroupSpec& spec, const ToleranceConfig& tol) {
    require_square_finite(m);
    if (m.rows() != spec.dim)
        throw DimensionMismatch("matrix dimension differs from group dimension");
    if (spec.field == Field::Real) {
        const double max_imag = m.imag().cwiseAbs().maxCoeff();
        if (!(max_imag <= tol.tol_real))
            throw InvalidRepresentation("matrix is not real within tolerance");
    }
    if (spec.ambient == Ambient::SL) {
        const cplx det = m.determinant();
        if (!(std::abs(det - 1.0) <= tol.tol_det))
            throw InvalidRepresentation("matrix determinant is not 1 within tolerance");
    } else {
        // GL: just invertibility
        Eigen::JacobiSVD<Cmat> svd(m);
        if (!(svd.singularValues().minCoeff() > tol.tol_sing))
            throw Singular("matrix is not invertible within tolerance");
    }
}

}  // namespace knf
