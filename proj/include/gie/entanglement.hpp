#pragma once

#include "gie/interferometer.hpp"
#include "gie/linalg.hpp"

#include <array>

namespace gie {

// Validated density matrix: Hermitian and unit trace to 1e-12, smallest
// eigenvalue >= -1e-10. Construction throws DomainError otherwise.
template <std::size_t N>
class DensityMatrix {
public:
    explicit DensityMatrix(const CMatrix<N>& m);

    const CMatrix<N>& matrix() const { return m_; }
    const cplx& operator()(std::size_t i, std::size_t j) const { return m_(i, j); }
    double purity() const { return (m_ * m_).trace().real(); }

private:
    CMatrix<N> m_;
};

using DensityMatrix2 = DensityMatrix<2>;
using DensityMatrix4 = DensityMatrix<4>;

// T_ij = Tr[rho (sigma_i x sigma_j)], i, j in {x, y, z}.
struct CorrelationMatrix {
    std::array<double, 9> t{};
    double operator()(int i, int j) const { return t[static_cast<std::size_t>(3 * i + j)]; }
};

struct BlochVectors {
    std::array<double, 3> a; // Tr[rho (sigma_i x 1)]
    std::array<double, 3> b; // Tr[rho (1 x sigma_i)]
};

// Throws DomainError unless |psi| = 1 to 1e-12.
DensityMatrix4 density_matrix(const TwoQubitState& state);
DensityMatrix4 product_density(const Vector2c& psi_a, const Vector2c& phi_b);

DensityMatrix2 partial_trace_B(const DensityMatrix4& rho);
DensityMatrix2 partial_trace_A(const DensityMatrix4& rho);
Matrix4c partial_transpose_B(const DensityMatrix4& rho);

// Von Neumann entropy in bits.
double von_neumann_entropy(const DensityMatrix2& rho);

// Reduced-state entropy of evolve(config) from the eigenvalues
// 1/2 +- 1/2 sqrt((1 + cos Delta)/2), Delta the residual entangling phase.
double entropy_closed_form(const ExperimentConfig& config);

// Wootters concurrence.
double concurrence(const DensityMatrix4& rho);

CorrelationMatrix correlation_matrix(const DensityMatrix4& rho);
BlochVectors bloch_vectors(const DensityMatrix4& rho);

// |<sigma_x x sigma_z> - <sigma_y x sigma_y>| in the computational frame.
double witness_fixed_frame(const DensityMatrix4& rho);

// Maximum of <sigma_x x sigma_z> - <sigma_y x sigma_y> over independent
// local rotations of both qubits: sum of the two largest singular values of T.
double witness_optimized(const DensityMatrix4& rho);

// Sum of |negative eigenvalues| of the partial transpose.
double negativity(const DensityMatrix4& rho);

} // namespace gie
