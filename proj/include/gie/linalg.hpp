#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace gie {

using cplx = std::complex<double>;

// Dense row-major N x N complex matrix.
template <std::size_t N>
struct CMatrix {
    std::array<cplx, N * N> a{};

    static constexpr std::size_t size() { return N; }

    cplx& operator()(std::size_t i, std::size_t j) { return a[i * N + j]; }
    const cplx& operator()(std::size_t i, std::size_t j) const { return a[i * N + j]; }

    static CMatrix identity() {
        CMatrix m;
        for (std::size_t i = 0; i < N; ++i)
            m(i, i) = 1.0;
        return m;
    }

    CMatrix adjoint() const {
        CMatrix m;
        for (std::size_t i = 0; i < N; ++i)
            for (std::size_t j = 0; j < N; ++j)
                m(i, j) = std::conj((*this)(j, i));
        return m;
    }

    CMatrix conjugate() const {
        CMatrix m;
        for (std::size_t i = 0; i < N * N; ++i)
            m.a[i] = std::conj(a[i]);
        return m;
    }

    cplx trace() const {
        cplx t = 0.0;
        for (std::size_t i = 0; i < N; ++i)
            t += (*this)(i, i);
        return t;
    }

    CMatrix& operator+=(const CMatrix& o) {
        for (std::size_t i = 0; i < N * N; ++i)
            a[i] += o.a[i];
        return *this;
    }
    CMatrix& operator-=(const CMatrix& o) {
        for (std::size_t i = 0; i < N * N; ++i)
            a[i] -= o.a[i];
        return *this;
    }
    CMatrix& operator*=(cplx s) {
        for (auto& x : a)
            x *= s;
        return *this;
    }

    friend CMatrix operator+(CMatrix l, const CMatrix& r) { return l += r; }
    friend CMatrix operator-(CMatrix l, const CMatrix& r) { return l -= r; }
    friend CMatrix operator*(CMatrix m, cplx s) { return m *= s; }
    friend CMatrix operator*(cplx s, CMatrix m) { return m *= s; }

    friend CMatrix operator*(const CMatrix& l, const CMatrix& r) {
        CMatrix m;
        for (std::size_t i = 0; i < N; ++i)
            for (std::size_t k = 0; k < N; ++k) {
                const cplx lik = l(i, k);
                for (std::size_t j = 0; j < N; ++j)
                    m(i, j) += lik * r(k, j);
            }
        return m;
    }

    // Largest entrywise modulus of (this - o).
    double max_abs_diff(const CMatrix& o) const {
        double d = 0.0;
        for (std::size_t i = 0; i < N * N; ++i)
            d = std::max(d, std::abs(a[i] - o.a[i]));
        return d;
    }
};

using Matrix2c = CMatrix<2>;
using Matrix4c = CMatrix<4>;
using Vector2c = std::array<cplx, 2>;
using Vector4c = std::array<cplx, 4>;

Matrix4c kron(const Matrix2c& a, const Matrix2c& b);

template <std::size_t N>
CMatrix<N> outer(const std::array<cplx, N>& v) {
    CMatrix<N> m;
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j)
            m(i, j) = v[i] * std::conj(v[j]);
    return m;
}

template <std::size_t N>
std::array<cplx, N> apply(const CMatrix<N>& m, const std::array<cplx, N>& v) {
    std::array<cplx, N> out{};
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j)
            out[i] += m(i, j) * v[j];
    return out;
}

namespace pauli {
Matrix2c x();
Matrix2c y();
Matrix2c z();
// sigma_x, sigma_y, sigma_z by index 0..2.
Matrix2c by_index(int i);
} // namespace pauli

// Cyclic Jacobi diagonalization of a real symmetric n x n matrix stored
// row-major in `a` (destroyed). Eigenvalues are returned ascending; if
// `vectors` is non-null it receives the matching orthonormal eigenvectors
// as columns (row-major n x n).
std::vector<double> symmetric_eigen(std::span<double> a, std::size_t n,
                                    std::vector<double>* vectors = nullptr);

// Eigenvalues (ascending) of a Hermitian matrix. The 2x2 case is closed
// form; larger sizes go through the real 2n x 2n embedding [[A,-B],[B,A]].
std::array<double, 2> hermitian_eigenvalues(const Matrix2c& h);
std::array<double, 4> hermitian_eigenvalues(const Matrix4c& h);

// f(H) for Hermitian H, evaluated spectrally.
Matrix4c hermitian_function(const Matrix4c& h, const std::function<double(double)>& f);

// Singular values (descending) of a real 3x3 matrix. Computed from the
// symmetric embedding [[0, M], [M^T, 0]] so small singular values keep
// absolute accuracy.
std::array<double, 3> singular_values(const std::array<double, 9>& m);

// Singular values (descending) of a complex square matrix, same embedding.
std::array<double, 4> singular_values(const Matrix4c& m);

} // namespace gie
