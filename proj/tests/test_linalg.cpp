#include "gie/linalg.hpp"

#include <Eigen/Dense>
#include <doctest.h>

#include <algorithm>
#include <random>

using namespace gie;

namespace {

Matrix4c random_hermitian(std::mt19937_64& rng) {
    std::normal_distribution<double> g;
    Matrix4c h;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i; j < 4; ++j) {
            const cplx v = i == j ? cplx(g(rng), 0.0) : cplx(g(rng), g(rng));
            h(i, j) = v;
            h(j, i) = std::conj(v);
        }
    return h;
}

Eigen::Matrix4cd to_eigen(const Matrix4c& m) {
    Eigen::Matrix4cd e;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            e(i, j) = m(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
    return e;
}

} // namespace

TEST_CASE("pauli algebra") {
    const Matrix2c i2 = Matrix2c::identity();
    for (int a = 0; a < 3; ++a) {
        const Matrix2c s = pauli::by_index(a);
        CHECK((s * s).max_abs_diff(i2) == 0.0);
        CHECK(s.adjoint().max_abs_diff(s) == 0.0);
    }
    const Matrix2c xy = pauli::x() * pauli::y();
    CHECK(xy.max_abs_diff(cplx(0.0, 1.0) * pauli::z()) == 0.0);
}

TEST_CASE("kron of identities and block layout") {
    CHECK(kron(Matrix2c::identity(), Matrix2c::identity()).max_abs_diff(Matrix4c::identity()) == 0.0);
    const Matrix4c zx = kron(pauli::z(), pauli::x());
    CHECK(zx(0, 1) == cplx(1.0));
    CHECK(zx(2, 3) == cplx(-1.0));
    CHECK(zx(0, 2) == cplx(0.0));
}

TEST_CASE("symmetric Jacobi against Eigen") {
    std::mt19937_64 rng(5);
    std::normal_distribution<double> g;
    for (std::size_t n : {2u, 3u, 6u, 8u}) {
        Eigen::MatrixXd m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i; j < n; ++j)
                m(i, j) = m(j, i) = g(rng);
        std::vector<double> a(n * n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                a[i * n + j] = m(i, j);
        std::vector<double> vecs;
        const auto ev = symmetric_eigen(a, n, &vecs);
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m);
        for (std::size_t i = 0; i < n; ++i)
            CHECK(ev[i] == doctest::Approx(es.eigenvalues()(static_cast<Eigen::Index>(i))).epsilon(1e-12));
        // M v = lambda v for every column.
        for (std::size_t c = 0; c < n; ++c)
            for (std::size_t i = 0; i < n; ++i) {
                double mv = 0.0;
                for (std::size_t k = 0; k < n; ++k)
                    mv += m(i, k) * vecs[k * n + c];
                CHECK(std::abs(mv - ev[c] * vecs[i * n + c]) < 1e-12);
            }
    }
}

TEST_CASE("hermitian eigenvalues against Eigen") {
    std::mt19937_64 rng(17);
    for (int t = 0; t < 200; ++t) {
        const Matrix4c h = random_hermitian(rng);
        const auto ev = hermitian_eigenvalues(h);
        Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> es(to_eigen(h));
        for (int i = 0; i < 4; ++i)
            CHECK(std::abs(ev[static_cast<std::size_t>(i)] - es.eigenvalues()(i)) < 1e-12);

        Matrix2c h2;
        h2(0, 0) = h(0, 0);
        h2(1, 1) = h(1, 1);
        h2(0, 1) = h(0, 1);
        h2(1, 0) = h(1, 0);
        Eigen::Matrix2cd e2;
        e2 << h2(0, 0), h2(0, 1), h2(1, 0), h2(1, 1);
        Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd> es2(e2);
        const auto ev2 = hermitian_eigenvalues(h2);
        CHECK(std::abs(ev2[0] - es2.eigenvalues()(0)) < 1e-13);
        CHECK(std::abs(ev2[1] - es2.eigenvalues()(1)) < 1e-13);
    }
    // Degenerate spectrum.
    const auto d = hermitian_eigenvalues(Matrix4c::identity());
    for (double v : d)
        CHECK(v == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("hermitian_function reproduces squares and square roots") {
    std::mt19937_64 rng(23);
    for (int t = 0; t < 50; ++t) {
        const Matrix4c h = random_hermitian(rng);
        const Matrix4c sq = hermitian_function(h, [](double x) { return x * x; });
        CHECK(sq.max_abs_diff(h * h) < 1e-11);
        const Matrix4c pos = h * h;
        const Matrix4c root = hermitian_function(pos, [](double x) { return std::sqrt(std::max(x, 0.0)); });
        CHECK((root * root).max_abs_diff(pos) < 1e-10);
    }
}

TEST_CASE("singular values against Eigen") {
    std::mt19937_64 rng(29);
    std::normal_distribution<double> g;
    for (int t = 0; t < 100; ++t) {
        std::array<double, 9> m{};
        Eigen::Matrix3d e;
        for (int i = 0; i < 9; ++i) {
            m[static_cast<std::size_t>(i)] = g(rng);
            e(i / 3, i % 3) = m[static_cast<std::size_t>(i)];
        }
        const auto sv = singular_values(m);
        Eigen::JacobiSVD<Eigen::Matrix3d> svd(e);
        for (int i = 0; i < 3; ++i)
            CHECK(std::abs(sv[static_cast<std::size_t>(i)] - svd.singularValues()(i)) < 1e-12);

        Matrix4c c;
        for (auto& x : c.a)
            x = cplx(g(rng), g(rng));
        const auto csv = singular_values(c);
        Eigen::JacobiSVD<Eigen::Matrix4cd> csvd(to_eigen(c));
        for (int i = 0; i < 4; ++i)
            CHECK(std::abs(csv[static_cast<std::size_t>(i)] - csvd.singularValues()(i)) < 1e-12);
    }
    // Small singular values keep absolute accuracy.
    const std::array<double, 9> tiny{1.0, 0, 0, 0, 1e-9, 0, 0, 0, 0};
    const auto sv = singular_values(tiny);
    CHECK(sv[1] == doctest::Approx(1e-9).epsilon(1e-12));
    CHECK(std::abs(sv[2]) < 1e-15);
}
