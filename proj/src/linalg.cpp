#include "gie/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace gie {

Matrix4c kron(const Matrix2c& a, const Matrix2c& b) {
    Matrix4c m;
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            for (std::size_t k = 0; k < 2; ++k)
                for (std::size_t l = 0; l < 2; ++l)
                    m(2 * i + k, 2 * j + l) = a(i, j) * b(k, l);
    return m;
}

namespace pauli {
Matrix2c x() {
    Matrix2c m;
    m(0, 1) = 1.0;
    m(1, 0) = 1.0;
    return m;
}
Matrix2c y() {
    Matrix2c m;
    m(0, 1) = cplx(0.0, -1.0);
    m(1, 0) = cplx(0.0, 1.0);
    return m;
}
Matrix2c z() {
    Matrix2c m;
    m(0, 0) = 1.0;
    m(1, 1) = -1.0;
    return m;
}
Matrix2c by_index(int i) {
    switch (i) {
    case 0: return x();
    case 1: return y();
    default: return z();
    }
}
} // namespace pauli

std::vector<double> symmetric_eigen(std::span<double> a, std::size_t n, std::vector<double>* vectors) {
    std::vector<double> v(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i)
        v[i * n + i] = 1.0;
    auto at = [&](std::size_t i, std::size_t j) -> double& { return a[i * n + j]; };

    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        double total = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                total += at(i, j) * at(i, j);
                if (i != j)
                    off += at(i, j) * at(i, j);
            }
        if (off <= 1e-32 * total || off == 0.0)
            break;

        for (std::size_t p = 0; p + 1 < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = at(p, q);
                if (apq == 0.0)
                    continue;
                const double theta = (at(q, q) - at(p, p)) / (2.0 * apq);
                const double t = std::copysign(1.0, theta) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (std::size_t k = 0; k < n; ++k) {
                    const double akp = at(k, p);
                    const double akq = at(k, q);
                    at(k, p) = c * akp - s * akq;
                    at(k, q) = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double apk = at(p, k);
                    const double aqk = at(q, k);
                    at(p, k) = c * apk - s * aqk;
                    at(q, k) = s * apk + c * aqk;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double vkp = v[k * n + p];
                    const double vkq = v[k * n + q];
                    v[k * n + p] = c * vkp - s * vkq;
                    v[k * n + q] = s * vkp + c * vkq;
                }
            }
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t l, std::size_t r) { return at(l, l) < at(r, r); });

    std::vector<double> values(n);
    for (std::size_t i = 0; i < n; ++i)
        values[i] = at(order[i], order[i]);
    if (vectors) {
        vectors->assign(n * n, 0.0);
        for (std::size_t col = 0; col < n; ++col)
            for (std::size_t row = 0; row < n; ++row)
                (*vectors)[row * n + col] = v[row * n + order[col]];
    }
    return values;
}

std::array<double, 2> hermitian_eigenvalues(const Matrix2c& h) {
    const double a = h(0, 0).real();
    const double d = h(1, 1).real();
    const double mean = 0.5 * (a + d);
    const double half_gap = 0.5 * (a - d);
    const double radius = std::sqrt(half_gap * half_gap + std::norm(h(0, 1)));
    return {mean - radius, mean + radius};
}

namespace {

std::vector<double> real_embedding(const Matrix4c& h) {
    constexpr std::size_t n = 4;
    std::vector<double> r(4 * n * n);
    const std::size_t m = 2 * n;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const double re = h(i, j).real();
            const double im = h(i, j).imag();
            r[i * m + j] = re;
            r[i * m + j + n] = -im;
            r[(i + n) * m + j] = im;
            r[(i + n) * m + j + n] = re;
        }
    return r;
}

} // namespace

std::array<double, 4> hermitian_eigenvalues(const Matrix4c& h) {
    auto r = real_embedding(h);
    const auto doubled = symmetric_eigen(r, 8);
    // Each eigenvalue of H appears twice in the embedding.
    std::array<double, 4> out{};
    for (std::size_t i = 0; i < 4; ++i)
        out[i] = 0.5 * (doubled[2 * i] + doubled[2 * i + 1]);
    return out;
}

Matrix4c hermitian_function(const Matrix4c& h, const std::function<double(double)>& f) {
    constexpr std::size_t m = 8;
    auto r = real_embedding(h);
    std::vector<double> q;
    const auto values = symmetric_eigen(r, m, &q);
    std::array<double, m> fv{};
    for (std::size_t i = 0; i < m; ++i)
        fv[i] = f(values[i]);
    // f applied to the embedding is the embedding of f(H).
    Matrix4c out;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) {
            double re = 0.0;
            double im = 0.0;
            for (std::size_t k = 0; k < m; ++k) {
                re += q[i * m + k] * fv[k] * q[j * m + k];
                im += q[(i + 4) * m + k] * fv[k] * q[j * m + k];
            }
            out(i, j) = cplx(re, im);
        }
    return out;
}

std::array<double, 3> singular_values(const std::array<double, 9>& m) {
    constexpr std::size_t n = 6;
    std::vector<double> h(n * n, 0.0);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) {
            h[i * n + (j + 3)] = m[i * 3 + j];
            h[(j + 3) * n + i] = m[i * 3 + j];
        }
    const auto values = symmetric_eigen(h, n);
    return {std::max(values[5], 0.0), std::max(values[4], 0.0), std::max(values[3], 0.0)};
}

std::array<double, 4> singular_values(const Matrix4c& m) {
    // Hermitian [[0, M], [M^dagger, 0]] embedded as a real 16 x 16 symmetric
    // matrix; every singular value then appears twice with each sign.
    constexpr std::size_t n = 8;
    constexpr std::size_t r = 2 * n;
    std::vector<double> e(r * r, 0.0);
    auto put = [&](std::size_t i, std::size_t j, cplx v) {
        e[i * r + j] = v.real();
        e[i * r + j + n] = -v.imag();
        e[(i + n) * r + j] = v.imag();
        e[(i + n) * r + j + n] = v.real();
    };
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) {
            put(i, j + 4, m(i, j));
            put(j + 4, i, std::conj(m(i, j)));
        }
    const auto values = symmetric_eigen(e, r);
    std::array<double, 4> out{};
    for (std::size_t i = 0; i < 4; ++i)
        out[i] = std::max(0.5 * (values[r - 1 - 2 * i] + values[r - 2 - 2 * i]), 0.0);
    return out;
}

} // namespace gie
