#include "gie/entanglement.hpp"

#include "gie/errors.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace gie {

namespace {

constexpr double kHermitianTol = 1e-12;
constexpr double kTraceTol = 1e-12;
constexpr double kNegativeEigenTol = 1e-10;
// Eigenvalues below this are treated as exact zeros when forming sqrt(rho).
constexpr double kRankCutoff = 1e-13;

double clamp_eigenvalue(double x) { return (x < 0.0 && x >= -kNegativeEigenTol) ? 0.0 : x; }

template <std::size_t N>
std::array<double, N> eigenvalues_of(const CMatrix<N>& m) {
    return hermitian_eigenvalues(m);
}

} // namespace

template <std::size_t N>
DensityMatrix<N>::DensityMatrix(const CMatrix<N>& m) : m_(m) {
    if (m_.max_abs_diff(m_.adjoint()) > kHermitianTol)
        throw DomainError("density matrix is not Hermitian");
    const cplx tr = m_.trace();
    if (std::abs(tr - 1.0) > kTraceTol) {
        std::ostringstream os;
        os << "density matrix trace " << tr.real() << " differs from 1";
        throw DomainError(os.str());
    }
    const auto ev = eigenvalues_of(m_);
    if (ev[0] < -kNegativeEigenTol)
        throw DomainError("density matrix is not positive semidefinite");
}

template class DensityMatrix<2>;
template class DensityMatrix<4>;

DensityMatrix4 density_matrix(const TwoQubitState& state) {
    if (std::abs(state.norm() - 1.0) > 1e-12)
        throw DomainError("state is not normalized");
    return DensityMatrix4(outer(state.amplitudes));
}

DensityMatrix4 product_density(const Vector2c& psi_a, const Vector2c& phi_b) {
    return DensityMatrix4(kron(outer(psi_a), outer(phi_b)));
}

DensityMatrix2 partial_trace_B(const DensityMatrix4& rho) {
    Matrix2c r;
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            r(i, j) = rho(2 * i, 2 * j) + rho(2 * i + 1, 2 * j + 1);
    return DensityMatrix2(r);
}

DensityMatrix2 partial_trace_A(const DensityMatrix4& rho) {
    Matrix2c r;
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            r(i, j) = rho(i, j) + rho(2 + i, 2 + j);
    return DensityMatrix2(r);
}

Matrix4c partial_transpose_B(const DensityMatrix4& rho) {
    Matrix4c pt;
    for (std::size_t a = 0; a < 2; ++a)
        for (std::size_t b = 0; b < 2; ++b)
            for (std::size_t c = 0; c < 2; ++c)
                for (std::size_t d = 0; d < 2; ++d)
                    pt(2 * a + b, 2 * c + d) = rho(2 * a + d, 2 * c + b);
    return pt;
}

double von_neumann_entropy(const DensityMatrix2& rho) {
    double s = 0.0;
    for (double lambda : hermitian_eigenvalues(rho.matrix())) {
        lambda = clamp_eigenvalue(lambda);
        if (lambda > 0.0)
            s -= lambda * std::log2(lambda);
    }
    return s;
}

double entropy_closed_form(const ExperimentConfig& config) {
    const BranchGeometry g = branch_distances(config);
    const double r0 = config.d_m;
    auto phi = [&](double r) {
        return potential_per_unit_mass(config.model, r, config.mass_kg, config.constants);
    };
    const double phase = config.mass_kg * config.tau_s / config.constants.hbar *
                         (phi(g.r_rL) + phi(g.r_lR) - 2.0 * phi(r0));
    const double root = std::sqrt(0.5 * (1.0 + std::cos(phase)));
    const double plus = 0.5 + 0.5 * root;
    const double minus = 0.5 - 0.5 * root;
    double s = 0.0;
    for (double lambda : {minus, plus})
        if (lambda > 0.0)
            s -= lambda * std::log2(lambda);
    return s;
}

double concurrence(const DensityMatrix4& rho) {
    // lambda_i = singular values of W^T (sy x sy) W for any rho = W W^dagger;
    // W = sqrt(rho) here, so lambda_i^2 are the eigenvalues of rho rho~.
    const Matrix4c w = hermitian_function(rho.matrix(), [](double x) { return x > kRankCutoff ? std::sqrt(x) : 0.0; });
    const Matrix4c flip = kron(pauli::y(), pauli::y());
    Matrix4c wt;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            wt(i, j) = w(j, i);
    const auto lambda = singular_values(wt * flip * w);
    return std::max(0.0, lambda[0] - lambda[1] - lambda[2] - lambda[3]);
}

CorrelationMatrix correlation_matrix(const DensityMatrix4& rho) {
    CorrelationMatrix t;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            const Matrix4c op = kron(pauli::by_index(i), pauli::by_index(j));
            t.t[static_cast<std::size_t>(3 * i + j)] = (rho.matrix() * op).trace().real();
        }
    return t;
}

BlochVectors bloch_vectors(const DensityMatrix4& rho) {
    BlochVectors v{};
    const Matrix2c id = Matrix2c::identity();
    for (int i = 0; i < 3; ++i) {
        v.a[static_cast<std::size_t>(i)] = (rho.matrix() * kron(pauli::by_index(i), id)).trace().real();
        v.b[static_cast<std::size_t>(i)] = (rho.matrix() * kron(id, pauli::by_index(i))).trace().real();
    }
    return v;
}

double witness_fixed_frame(const DensityMatrix4& rho) {
    const CorrelationMatrix t = correlation_matrix(rho);
    return std::abs(t(0, 2) - t(1, 1));
}

double witness_optimized(const DensityMatrix4& rho) {
    const auto sv = singular_values(correlation_matrix(rho).t);
    return sv[0] + sv[1];
}

double negativity(const DensityMatrix4& rho) {
    double n = 0.0;
    for (double lambda : hermitian_eigenvalues(partial_transpose_B(rho))) {
        lambda = clamp_eigenvalue(lambda);
        if (lambda < 0.0)
            n -= lambda;
    }
    return n;
}

} // namespace gie
