#pragma once

#include "gie/potentials.hpp"
#include "gie/units.hpp"

#include <array>
#include <cstddef>
#include <random>
#include <vector>

namespace gie {

// Minkowski metric component eta_{mu mu}, signature (-,+,+,...).
inline double eta(std::size_t mu) { return mu == 0 ? -1.0 : 1.0; }

// Contravariant D-momentum k^mu, index 0 is time.
class Momentum {
public:
    explicit Momentum(std::vector<double> components);

    // Purely spatial momentum (0, ..., 0, |k|) in `dim` dimensions.
    static Momentum static_along_last_axis(double magnitude, std::size_t dim = 4);

    std::size_t dimension() const { return k_.size(); }
    double upper(std::size_t mu) const { return k_[mu]; }
    double lower(std::size_t mu) const { return eta(mu) * k_[mu]; }
    // k^2 = eta_{mu nu} k^mu k^nu
    double square() const;
    double spatial_magnitude() const;

private:
    std::vector<double> k_;
};

// Symmetric rank-2 tensor with lower indices.
class RankTwo {
public:
    explicit RankTwo(std::size_t dim) : dim_(dim), e_(dim * dim, 0.0) {}

    std::size_t dimension() const { return dim_; }
    double& operator()(std::size_t m, std::size_t n) { return e_[m * dim_ + n]; }
    double operator()(std::size_t m, std::size_t n) const { return e_[m * dim_ + n]; }

    // Index contraction A_{m a} eta^{a b} B_{b n}.
    RankTwo contract(const RankTwo& other) const;
    double max_abs_diff(const RankTwo& other) const;

private:
    std::size_t dim_;
    std::vector<double> e_;
};

RankTwo metric(std::size_t dim);
// theta_{mu nu} = eta_{mu nu} - k_mu k_nu / k^2 ; throws DomainError if k^2 == 0.
RankTwo theta(const Momentum& k);
// omega_{mu nu} = k_mu k_nu / k^2 ; throws DomainError if k^2 == 0.
RankTwo omega(const Momentum& k);

// Dense rank-4 tensor T_{mu nu rho sigma} (all indices lower), D^4 entries.
class Rank4Operator {
public:
    explicit Rank4Operator(std::size_t dim) : dim_(dim), e_(dim * dim * dim * dim, 0.0) {}

    std::size_t dimension() const { return dim_; }
    double& operator()(std::size_t m, std::size_t n, std::size_t r, std::size_t s) {
        return e_[((m * dim_ + n) * dim_ + r) * dim_ + s];
    }
    double operator()(std::size_t m, std::size_t n, std::size_t r, std::size_t s) const {
        return e_[((m * dim_ + n) * dim_ + r) * dim_ + s];
    }

    // Pairwise contraction (A o B)_{mn rs} = A_{mn}^{ab} B_{ab rs}.
    Rank4Operator compose(const Rank4Operator& other) const;
    // Swap of the index pairs (mn) <-> (rs).
    Rank4Operator pair_transpose() const;

    Rank4Operator& operator+=(const Rank4Operator& o);
    Rank4Operator& operator-=(const Rank4Operator& o);
    Rank4Operator& operator*=(double s);
    friend Rank4Operator operator+(Rank4Operator l, const Rank4Operator& r) { return l += r; }
    friend Rank4Operator operator-(Rank4Operator l, const Rank4Operator& r) { return l -= r; }
    friend Rank4Operator operator*(double s, Rank4Operator m) { return m *= s; }

    double max_abs() const;
    double max_abs_diff(const Rank4Operator& o) const;

    // 1/2 (eta_{mr} eta_{ns} + eta_{ms} eta_{nr}), the identity on symmetric tensors.
    static Rank4Operator symmetric_identity(std::size_t dim);

private:
    std::size_t dim_;
    std::vector<double> e_;
};

enum class ProjectorKind { P2, P1, P0s, P0w, P0sw, P0ws };
inline constexpr std::array<ProjectorKind, 6> kAllProjectors = {
    ProjectorKind::P2,  ProjectorKind::P1,   ProjectorKind::P0s,
    ProjectorKind::P0w, ProjectorKind::P0sw, ProjectorKind::P0ws};
const char* to_string(ProjectorKind kind);

// Barnes-Rivers spin projector in D = k.dimension() dimensions (D >= 3).
Rank4Operator projector(ProjectorKind kind, const Momentum& k);

// Single entry of a projector, from precomputed theta/omega.
double projector_entry(ProjectorKind kind, const RankTwo& th, const RankTwo& om, std::size_t m,
                       std::size_t n, std::size_t r, std::size_t s);

// Form factors of the quadratic action evaluated at box -> -k^2.
struct FormFactors {
    double a = 1.0;
    double b = -1.0;
    double c = 1.0;
    double d = -1.0;
    double f = 0.0;
    PotentialModel model = PotentialModel::newtonian();
};

struct ConstraintResiduals {
    double a_plus_b;
    double c_plus_d;
    double b_plus_c_plus_f;
    double max_abs() const;
};

// GR (Newtonian model): a = c = 1, b = d = -1, f = 0.
// IDG: a = c = exp(k^2 / M_s^2), b = -a, d = -c, f = 0.
FormFactors form_factors(const PotentialModel& model, double k2);
ConstraintResiduals constraint_residuals(const FormFactors& ff);

// Coefficients multiplying each spin sector in the field equations.
struct SectorCoefficients {
    double spin2;
    double spin1;
    double spin0_s;
    double spin0_w;
    double mixing;
};

SectorCoefficients sector_coefficients(const FormFactors& ff, const Momentum& k);

// Saturated propagator (1/(k^2 a)) (P2 - P0s/(D-2)).
Rank4Operator saturated_propagator(const FormFactors& ff, const Momentum& k);
double saturated_propagator_entry(const FormFactors& ff, const Momentum& k, std::size_t m,
                                  std::size_t n, std::size_t r, std::size_t s);

// Static potential per unit test mass obtained by Fourier transforming
// the 0000 component of the saturated propagator with kappa^2 = 8 pi G.
// Throws QuadratureError if a panel fails to converge.
double potential_from_propagator(const PotentialModel& model, double r, double m_source,
                                 const PhysicalConstants& k = kCodata);

// Largest entrywise deviation of each projector identity at momentum k.
struct ProjectorAlgebraResiduals {
    double idempotency = 0.0;   // P o P = P for P2, P1, P0s, P0w
    double orthogonality = 0.0; // products that must vanish
    double mixing = 0.0;        // P0sw o P0ws = P0s, P0ws o P0sw = P0w and the other non-zero mixed products
    double completeness = 0.0;  // P2 + P1 + P0s + P0w = symmetric identity
    double symmetry = 0.0;      // mu<->nu, rho<->sigma; pair swap maps P0sw <-> P0ws, others invariant
    double max() const;
};

// Full 6 x 6 composition table checked against its expected values.
ProjectorAlgebraResiduals projector_algebra_residuals(const Momentum& k);

// Random momentum with Gaussian components and |k^2| >= 0.5 sum_mu (k^mu)^2.
Momentum random_off_shell_momentum(std::mt19937_64& rng, std::size_t dim);

// int_x^infty sin(u)/u du for x >= 40 (asymptotic expansion, optimally truncated).
double sine_integral_tail(double x);

} // namespace gie
