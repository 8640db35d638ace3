#include "gie/graviton.hpp"

#include "gie/errors.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace gie {

Momentum::Momentum(std::vector<double> components) : k_(std::move(components)) {
    if (k_.size() < 3)
        throw DomainError("momentum dimension must be at least 3");
}

Momentum Momentum::static_along_last_axis(double magnitude, std::size_t dim) {
    std::vector<double> k(dim, 0.0);
    k.at(dim - 1) = magnitude;
    return Momentum(std::move(k));
}

double Momentum::square() const {
    double s = 0.0;
    for (std::size_t mu = 0; mu < k_.size(); ++mu)
        s += eta(mu) * k_[mu] * k_[mu];
    return s;
}

double Momentum::spatial_magnitude() const {
    double s = 0.0;
    for (std::size_t i = 1; i < k_.size(); ++i)
        s += k_[i] * k_[i];
    return std::sqrt(s);
}

RankTwo RankTwo::contract(const RankTwo& other) const {
    RankTwo out(dim_);
    for (std::size_t m = 0; m < dim_; ++m)
        for (std::size_t n = 0; n < dim_; ++n) {
            double s = 0.0;
            for (std::size_t a = 0; a < dim_; ++a)
                s += (*this)(m, a) * eta(a) * other(a, n);
            out(m, n) = s;
        }
    return out;
}

double RankTwo::max_abs_diff(const RankTwo& other) const {
    double d = 0.0;
    for (std::size_t i = 0; i < e_.size(); ++i)
        d = std::max(d, std::abs(e_[i] - other.e_[i]));
    return d;
}

RankTwo metric(std::size_t dim) {
    RankTwo g(dim);
    for (std::size_t mu = 0; mu < dim; ++mu)
        g(mu, mu) = eta(mu);
    return g;
}

namespace {
double require_off_shell(const Momentum& k) {
    const double k2 = k.square();
    if (k2 == 0.0 || !std::isfinite(k2))
        throw DomainError("projectors need an off-shell momentum (k^2 != 0)");
    return k2;
}
} // namespace

RankTwo omega(const Momentum& k) {
    const double k2 = require_off_shell(k);
    const std::size_t dim = k.dimension();
    RankTwo w(dim);
    for (std::size_t m = 0; m < dim; ++m)
        for (std::size_t n = 0; n < dim; ++n)
            w(m, n) = k.lower(m) * k.lower(n) / k2;
    return w;
}

RankTwo theta(const Momentum& k) {
    const RankTwo w = omega(k);
    RankTwo t = metric(k.dimension());
    for (std::size_t m = 0; m < k.dimension(); ++m)
        for (std::size_t n = 0; n < k.dimension(); ++n)
            t(m, n) -= w(m, n);
    return t;
}

Rank4Operator Rank4Operator::compose(const Rank4Operator& other) const {
    const std::size_t d = dim_;
    const std::size_t d2 = d * d;
    // Raise the contracted pair of `other` once, then it is a plain matrix product
    // over the flattened (mn) x (ab) x (rs) indices.
    std::vector<double> raised(other.e_);
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b) {
            const double g = eta(a) * eta(b);
            for (std::size_t rs = 0; rs < d2; ++rs)
                raised[(a * d + b) * d2 + rs] *= g;
        }
    Rank4Operator out(d);
    for (std::size_t mn = 0; mn < d2; ++mn)
        for (std::size_t ab = 0; ab < d2; ++ab) {
            const double lhs = e_[mn * d2 + ab];
            if (lhs == 0.0)
                continue;
            for (std::size_t rs = 0; rs < d2; ++rs)
                out.e_[mn * d2 + rs] += lhs * raised[ab * d2 + rs];
        }
    return out;
}

Rank4Operator Rank4Operator::pair_transpose() const {
    const std::size_t d2 = dim_ * dim_;
    Rank4Operator out(dim_);
    for (std::size_t i = 0; i < d2; ++i)
        for (std::size_t j = 0; j < d2; ++j)
            out.e_[j * d2 + i] = e_[i * d2 + j];
    return out;
}

Rank4Operator& Rank4Operator::operator+=(const Rank4Operator& o) {
    for (std::size_t i = 0; i < e_.size(); ++i)
        e_[i] += o.e_[i];
    return *this;
}

Rank4Operator& Rank4Operator::operator-=(const Rank4Operator& o) {
    for (std::size_t i = 0; i < e_.size(); ++i)
        e_[i] -= o.e_[i];
    return *this;
}

Rank4Operator& Rank4Operator::operator*=(double s) {
    for (auto& x : e_)
        x *= s;
    return *this;
}

double Rank4Operator::max_abs() const {
    double m = 0.0;
    for (double x : e_)
        m = std::max(m, std::abs(x));
    return m;
}

double Rank4Operator::max_abs_diff(const Rank4Operator& o) const {
    double m = 0.0;
    for (std::size_t i = 0; i < e_.size(); ++i)
        m = std::max(m, std::abs(e_[i] - o.e_[i]));
    return m;
}

Rank4Operator Rank4Operator::symmetric_identity(std::size_t dim) {
    Rank4Operator id(dim);
    for (std::size_t m = 0; m < dim; ++m)
        for (std::size_t n = 0; n < dim; ++n) {
            id(m, n, m, n) += 0.5 * eta(m) * eta(n);
            id(m, n, n, m) += 0.5 * eta(m) * eta(n);
        }
    return id;
}

const char* to_string(ProjectorKind kind) {
    switch (kind) {
    case ProjectorKind::P2: return "P2";
    case ProjectorKind::P1: return "P1";
    case ProjectorKind::P0s: return "P0s";
    case ProjectorKind::P0w: return "P0w";
    case ProjectorKind::P0sw: return "P0sw";
    case ProjectorKind::P0ws: return "P0ws";
    }
    return "?";
}

double projector_entry(ProjectorKind kind, const RankTwo& th, const RankTwo& om, std::size_t m,
                       std::size_t n, std::size_t r, std::size_t s) {
    const double dm1 = static_cast<double>(th.dimension()) - 1.0;
    switch (kind) {
    case ProjectorKind::P2:
        return 0.5 * (th(m, r) * th(n, s) + th(m, s) * th(n, r)) - th(m, n) * th(r, s) / dm1;
    case ProjectorKind::P1:
        return 0.5 * (th(m, r) * om(n, s) + th(m, s) * om(n, r) + th(n, r) * om(m, s) +
                      th(n, s) * om(m, r));
    case ProjectorKind::P0s:
        return th(m, n) * th(r, s) / dm1;
    case ProjectorKind::P0w:
        return om(m, n) * om(r, s);
    case ProjectorKind::P0sw:
        return th(m, n) * om(r, s) / std::sqrt(dm1);
    case ProjectorKind::P0ws:
        return om(m, n) * th(r, s) / std::sqrt(dm1);
    }
    throw DomainError("unknown projector kind");
}

Rank4Operator projector(ProjectorKind kind, const Momentum& k) {
    const RankTwo th = theta(k);
    const RankTwo om = omega(k);
    const std::size_t d = k.dimension();
    Rank4Operator p(d);
    for (std::size_t m = 0; m < d; ++m)
        for (std::size_t n = 0; n < d; ++n)
            for (std::size_t r = 0; r < d; ++r)
                for (std::size_t s = 0; s < d; ++s)
                    p(m, n, r, s) = projector_entry(kind, th, om, m, n, r, s);
    return p;
}

FormFactors form_factors(const PotentialModel& model, double k2) {
    FormFactors ff;
    ff.model = model;
    if (model.is_idg()) {
        const double a = std::exp(k2 / (model.ms() * model.ms()));
        ff.a = a;
        ff.c = a;
        ff.b = -a;
        ff.d = -a;
        ff.f = 0.0;
    }
    return ff;
}

double ConstraintResiduals::max_abs() const {
    return std::max({std::abs(a_plus_b), std::abs(c_plus_d), std::abs(b_plus_c_plus_f)});
}

ConstraintResiduals constraint_residuals(const FormFactors& ff) {
    return {ff.a + ff.b, ff.c + ff.d, ff.b + ff.c + ff.f};
}

SectorCoefficients sector_coefficients(const FormFactors& ff, const Momentum& k) {
    const double k2 = k.square();
    const double dm1 = static_cast<double>(k.dimension()) - 1.0;
    return {
        ff.a * k2,
        (ff.a + ff.b) * k2,
        (ff.a + dm1 * ff.d) * k2,
        (ff.a + 2.0 * ff.b + 2.0 * ff.c + ff.d + ff.f) * k2,
        (ff.c + ff.d) * k2 * std::sqrt(dm1),
    };
}

namespace {
double propagator_prefactor(const FormFactors& ff, const Momentum& k) {
    const double k2 = require_off_shell(k);
    if (ff.a == 0.0)
        throw DomainError("saturated propagator: form factor a vanishes");
    return 1.0 / (k2 * ff.a);
}
} // namespace

Rank4Operator saturated_propagator(const FormFactors& ff, const Momentum& k) {
    const double pre = propagator_prefactor(ff, k);
    const double scalar_weight = 1.0 / (static_cast<double>(k.dimension()) - 2.0);
    Rank4Operator prop = projector(ProjectorKind::P2, k);
    prop -= scalar_weight * projector(ProjectorKind::P0s, k);
    prop *= pre;
    return prop;
}

double saturated_propagator_entry(const FormFactors& ff, const Momentum& k, std::size_t m,
                                  std::size_t n, std::size_t r, std::size_t s) {
    const double pre = propagator_prefactor(ff, k);
    const double scalar_weight = 1.0 / (static_cast<double>(k.dimension()) - 2.0);
    const RankTwo th = theta(k);
    const RankTwo om = omega(k);
    return pre * (projector_entry(ProjectorKind::P2, th, om, m, n, r, s) -
                  scalar_weight * projector_entry(ProjectorKind::P0s, th, om, m, n, r, s));
}

double ProjectorAlgebraResiduals::max() const {
    return std::max({idempotency, orthogonality, mixing, completeness, symmetry});
}

namespace {

// Expected value of P_a o P_b: index into kAllProjectors, or -1 for zero.
int composition_result(ProjectorKind a, ProjectorKind b) {
    using K = ProjectorKind;
    auto idx = [](K k) { return static_cast<int>(k); };
    switch (a) {
    case K::P2:
    case K::P1:
        return a == b ? idx(a) : -1;
    case K::P0s:
        if (b == K::P0s || b == K::P0sw)
            return idx(b);
        return -1;
    case K::P0w:
        if (b == K::P0w || b == K::P0ws)
            return idx(b);
        return -1;
    case K::P0sw:
        if (b == K::P0ws)
            return idx(K::P0s);
        if (b == K::P0w)
            return idx(K::P0sw);
        return -1;
    case K::P0ws:
        if (b == K::P0sw)
            return idx(K::P0w);
        if (b == K::P0s)
            return idx(K::P0ws);
        return -1;
    }
    return -1;
}

double index_symmetry_residual(const Rank4Operator& p) {
    const std::size_t d = p.dimension();
    double res = 0.0;
    for (std::size_t m = 0; m < d; ++m)
        for (std::size_t n = 0; n < d; ++n)
            for (std::size_t r = 0; r < d; ++r)
                for (std::size_t s = 0; s < d; ++s) {
                    res = std::max(res, std::abs(p(m, n, r, s) - p(n, m, r, s)));
                    res = std::max(res, std::abs(p(m, n, r, s) - p(m, n, s, r)));
                }
    return res;
}

} // namespace

ProjectorAlgebraResiduals projector_algebra_residuals(const Momentum& k) {
    std::vector<Rank4Operator> ops;
    for (ProjectorKind kind : kAllProjectors)
        ops.push_back(projector(kind, k));

    ProjectorAlgebraResiduals res;
    const Rank4Operator zero(k.dimension());
    for (std::size_t a = 0; a < ops.size(); ++a)
        for (std::size_t b = 0; b < ops.size(); ++b) {
            const Rank4Operator product = ops[a].compose(ops[b]);
            const int expected = composition_result(kAllProjectors[a], kAllProjectors[b]);
            const double dev = product.max_abs_diff(expected < 0 ? zero : ops[static_cast<std::size_t>(expected)]);
            if (expected < 0)
                res.orthogonality = std::max(res.orthogonality, dev);
            else if (a == b)
                res.idempotency = std::max(res.idempotency, dev);
            else
                res.mixing = std::max(res.mixing, dev);
        }

    const Rank4Operator sum = ops[0] + ops[1] + ops[2] + ops[3];
    res.completeness = sum.max_abs_diff(Rank4Operator::symmetric_identity(k.dimension()));

    for (std::size_t a = 0; a < ops.size(); ++a) {
        res.symmetry = std::max(res.symmetry, index_symmetry_residual(ops[a]));
        std::size_t partner = a;
        if (kAllProjectors[a] == ProjectorKind::P0sw)
            partner = static_cast<std::size_t>(ProjectorKind::P0ws);
        else if (kAllProjectors[a] == ProjectorKind::P0ws)
            partner = static_cast<std::size_t>(ProjectorKind::P0sw);
        res.symmetry = std::max(res.symmetry, ops[a].pair_transpose().max_abs_diff(ops[partner]));
    }
    return res;
}

Momentum random_off_shell_momentum(std::mt19937_64& rng, std::size_t dim) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    for (;;) {
        std::vector<double> k(dim);
        double euclid = 0.0;
        for (auto& x : k) {
            x = gauss(rng);
            euclid += x * x;
        }
        Momentum p(std::move(k));
        if (std::abs(p.square()) >= 0.5 * euclid)
            return p;
    }
}

double sine_integral_tail(double x) {
    if (x < 40.0)
        throw DomainError("sine_integral_tail: asymptotic form needs x >= 40");
    const double inv2 = 1.0 / (x * x);
    // f(x) = (1/x) sum (-1)^n (2n)!/x^{2n},  g(x) = (1/x^2) sum (-1)^n (2n+1)!/x^{2n}
    double f = 0.0;
    double g = 0.0;
    double tf = 1.0;
    double tg = 1.0;
    for (int n = 0; n < 40; ++n) {
        f += tf;
        g += tg;
        const double next_f = -tf * (2.0 * n + 1.0) * (2.0 * n + 2.0) * inv2;
        const double next_g = -tg * (2.0 * n + 2.0) * (2.0 * n + 3.0) * inv2;
        if (std::abs(next_f) > std::abs(tf) || std::abs(next_f) < 1e-18)
            break;
        tf = next_f;
        tg = next_g;
    }
    return std::cos(x) * f / x + std::sin(x) * g * inv2;
}

double potential_from_propagator(const PotentialModel& model, double r, double m_source,
                                 const PhysicalConstants& k) {
    if (!(r > 0.0))
        throw DomainError("potential_from_propagator: distance must be positive");

    // Spectral weight 2 k^2 Pi_0000(k) at a static momentum, evaluated through
    // the projector machinery (1 for GR, exp(-k^2/M_s^2) for IDG).
    auto spectral_weight = [&](double kmag) {
        const Momentum q = Momentum::static_along_last_axis(kmag, 4);
        const FormFactors ff = form_factors(model, q.square());
        return 2.0 * kmag * kmag * saturated_propagator_entry(ff, q, 0, 0, 0, 0);
    };
    // In u = k r: integrand sin(u)/u * weight(u/r).
    auto integrand = [&](double u) {
        const double sinc = u == 0.0 ? 1.0 : std::sin(u) / u;
        return sinc * spectral_weight(u / r);
    };

    const double ms_r = model.is_idg() ? model.ms() * r : 0.0;
    const double u_max_raw = std::max(40.0, 8.0 * ms_r);
    const auto panels = static_cast<std::size_t>(std::ceil(u_max_raw / std::numbers::pi));
    const double u_max = std::numbers::pi * static_cast<double>(panels);

    using Quadrature = boost::math::quadrature::gauss_kronrod<double, 31>;
    double integral = 0.0;
    for (std::size_t p = 0; p < panels; ++p) {
        const double lo = std::numbers::pi * static_cast<double>(p);
        const double hi = lo + std::numbers::pi;
        double err = 0.0;
        double l1 = 0.0;
        integral += Quadrature::integrate(integrand, lo, hi, 12, 1e-14, &err, &l1);
        if (!std::isfinite(integral) || err > 1e-10 * std::max(l1, 1e-300) + 1e-300) {
            std::ostringstream os;
            os << "quadrature did not converge: r=" << r << " panel=[" << lo << ',' << hi
               << "] error_estimate=" << err << " l1=" << l1;
            throw QuadratureError(os.str());
        }
    }
    // Weight is identically 1 beyond the cutoff for GR; for IDG it is below exp(-64).
    if (!model.is_idg())
        integral += sine_integral_tail(u_max);

    const double kappa2 = 8.0 * std::numbers::pi * k.G;
    return -(kappa2 * m_source / 2.0) * integral / (2.0 * std::numbers::pi * std::numbers::pi * r);
}

} // namespace gie
