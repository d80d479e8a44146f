#include "beukers/bounds.hpp"

#include "beukers/arith.hpp"
#include "beukers/constants.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <stdexcept>

namespace beukers {

namespace {

template <class T>
T g2_formula(const T& x, const T& y, const T& one) {
    return x * (one - x) * y * (one - y) / (one - x * y);
}

template <class T>
T g3_formula(const T& x, const T& y, const T& z, const T& one) {
    return x * (one - x) * y * (one - y) * z * (one - z) / ((one - (one - z) * x) * (one - y * z));
}

template <class T>
void require_closed_unit(const T& v, const char* what) {
    if (v < T(Rational(0)) || v > T(Rational(1))) throw std::domain_error(std::string(what) + ": coordinate outside [0, 1]");
}

}  // namespace

Rational g2(const Rational& x, const Rational& y) {
    require_closed_unit(x, "g2");
    require_closed_unit(y, "g2");
    if (x * y == Rational(1)) throw std::domain_error("g2: undefined at xy = 1");
    return g2_formula(x, y, Rational(1));
}

QuadSurd g2(const QuadSurd& x, const QuadSurd& y) {
    require_closed_unit(x, "g2");
    require_closed_unit(y, "g2");
    if (x * y == QuadSurd(Rational(1))) throw std::domain_error("g2: undefined at xy = 1");
    return g2_formula(x, y, QuadSurd(Rational(1)));
}

BallReal g2(const BallReal& x, const BallReal& y) {
    const Precision p = x.precision().digits() >= y.precision().digits() ? x.precision() : y.precision();
    return g2_formula(x, y, BallReal(Rational(1), p));
}

double g2_approx(double x, double y) { return x * (1 - x) * y * (1 - y) / (1 - x * y); }

Rational g3(const Rational& x, const Rational& y, const Rational& z) {
    require_closed_unit(x, "g3");
    require_closed_unit(y, "g3");
    require_closed_unit(z, "g3");
    const Rational one(1);
    if ((one - (one - z) * x).sign() == 0 || (one - y * z).sign() == 0) throw std::domain_error("g3: zero denominator");
    return g3_formula(x, y, z, one);
}

QuadSurd g3(const QuadSurd& x, const QuadSurd& y, const QuadSurd& z) {
    require_closed_unit(x, "g3");
    require_closed_unit(y, "g3");
    require_closed_unit(z, "g3");
    const QuadSurd one(Rational(1));
    if ((one - (one - z) * x).is_zero() || (one - y * z).is_zero()) throw std::domain_error("g3: zero denominator");
    return g3_formula(x, y, z, one);
}

BallReal g3(const BallReal& x, const BallReal& y, const BallReal& z) {
    return g3_formula(x, y, z, BallReal(Rational(1), x.precision()));
}

double g3_approx(double x, double y, double z) {
    return x * (1 - x) * y * (1 - y) * z * (1 - z) / ((1 - (1 - z) * x) * (1 - y * z));
}

namespace {

Rational exact(double v) {
    mpq_class q(v);
    return Rational(q);
}

// Nested grid search over [0,1)^dim. Each round scans `points` per axis over the
// current window, then shrinks the window to +-2 steps around the best point.
template <std::size_t Dim>
std::array<double, Dim> grid_search(const std::function<double(const std::array<double, Dim>&)>& f, unsigned points,
                                    unsigned refinements) {
    std::array<double, Dim> lo{}, step{}, best{};
    lo.fill(0.0);
    step.fill(1.0 / points);
    double best_value = -1.0;
    for (unsigned round = 0; round <= refinements; ++round) {
        std::array<unsigned, Dim> idx{};
        std::array<double, Dim> x{};
        std::array<double, Dim> round_best = best;
        for (;;) {
            bool inside = true;
            for (std::size_t d = 0; d < Dim; ++d) {
                x[d] = lo[d] + idx[d] * step[d];
                if (x[d] < 0.0 || x[d] >= 1.0) inside = false;
            }
            if (inside) {
                const double v = f(x);
                if (v > best_value) {
                    best_value = v;
                    round_best = x;
                }
            }
            std::size_t d = 0;
            while (d < Dim && ++idx[d] == points) idx[d++] = 0;
            if (d == Dim) break;
        }
        best = round_best;
        for (std::size_t d = 0; d < Dim; ++d) {
            lo[d] = best[d] - 2.0 * step[d];
            step[d] = 4.0 * step[d] / points;
        }
    }
    return best;
}

const QuadSurd kOne{Rational(1)};

}  // namespace

bool MaxResult::residuals_vanish() const {
    return std::all_of(residuals.begin(), residuals.end(), [](const QuadSurd& r) { return r.is_zero(); });
}

bool MaxResult::grid_below_analytic() const {
    if (QuadSurd(grid.value) > value) return false;
    return !diagonal_grid || !(QuadSurd(diagonal_grid->value) > value);
}

MaxResult max_g2(unsigned grid_points, unsigned refinements, Precision prec) {
    if (grid_points < 2) throw std::invalid_argument("max_g2: at least 2 grid points per axis");
    MaxResult out;
    const QuadSurd phi = const_phi(prec).exact;
    out.point = {phi, phi};
    out.value = const_phi5(prec).exact;
    for (const auto& c : out.point) out.point_ball.push_back(c.to_ball(prec));
    out.value_ball = out.value.to_ball(prec);
    out.value_from_formula = g2(phi, phi);

    // Diagonal critical equation and the numerator of dg/dx (dg/dy by symmetry).
    out.residual_names = {"t^2 + t - 1", "x^2 y - 2x + 1", "y^2 x - 2y + 1"};
    const QuadSurd two(Rational(2));
    out.residuals = {phi * phi + phi - kOne, phi * phi * phi - two * phi + kOne, phi * phi * phi - two * phi + kOne};

    const auto square = grid_search<2>([](const std::array<double, 2>& p) { return g2_approx(p[0], p[1]); },
                                       grid_points, refinements);
    out.grid = {{exact(square[0]), exact(square[1])}, Rational(0), refinements + 1, grid_points};
    out.grid.value = g2(out.grid.point[0], out.grid.point[1]);

    const auto diag = grid_search<1>([](const std::array<double, 1>& p) { return g2_approx(p[0], p[0]); },
                                     grid_points, refinements);
    GridMaximum d{{exact(diag[0]), exact(diag[0])}, Rational(0), refinements + 1, grid_points};
    d.value = g2(d.point[0], d.point[1]);
    out.diagonal_grid = d;
    return out;
}

MaxResult max_g3(unsigned grid_points, unsigned refinements, Precision prec) {
    if (grid_points < 2) throw std::invalid_argument("max_g3: at least 2 grid points per axis");
    MaxResult out;
    const QuadSurd x = QuadSurd(Rational(2), Rational(-1), 2);
    const QuadSurd half(Rational(1, 2));
    out.point = {x, x, half};
    out.value = const_delta3(prec).exact;
    for (const auto& c : out.point) out.point_ball.push_back(c.to_ball(prec));
    out.value_ball = out.value.to_ball(prec);
    out.value_from_formula = g3(x, x, half);

    const QuadSurd& y = x;
    const QuadSurd& z = half;
    const QuadSurd two(Rational(2));
    out.residual_names = {"(1-z)x^2 - 2x + 1", "z y^2 - 2y + 1", "(y-x)z^2 - 2(1-x)z + 1 - x"};
    out.residuals = {
        (kOne - z) * x * x - two * x + kOne,
        z * y * y - two * y + kOne,
        (y - x) * z * z - two * (kOne - x) * z + kOne - x,
    };

    // x = 1/(1+sqrt z), y = (1 - sqrt(1-z))/z with sqrt(1/2) = sqrt2/2.
    const QuadSurd sqrt_half(Rational(0), Rational(1, 2), 2);
    const QuadSurd x_closed = kOne / (kOne + sqrt_half);
    const QuadSurd y_closed = (kOne - sqrt_half) / half;
    out.closed_form_solution_matches = x_closed == x && y_closed == y;

    const QuadSurd rival_y(Rational(-1), Rational(1), 2);
    out.rival_point = std::vector<QuadSurd>{x, rival_y, half};
    out.rival_value = g3(x, rival_y, half);

    const auto cube = grid_search<3>(
        [](const std::array<double, 3>& p) { return g3_approx(p[0], p[1], p[2]); }, grid_points, refinements);
    out.grid = {{exact(cube[0]), exact(cube[1]), exact(cube[2])}, Rational(0), refinements + 1, grid_points};
    out.grid.value = g3(out.grid.point[0], out.grid.point[1], out.grid.point[2]);
    return out;
}

std::string to_string(BoundStatus s) {
    switch (s) {
        case BoundStatus::Holds: return "holds";
        case BoundStatus::Inconclusive: return "inconclusive";
        case BoundStatus::Violated: return "violated";
    }
    return "unknown";
}

SurdConstant bound_factor(ZetaKind kind, Precision prec) {
    return kind == ZetaKind::Two ? const_phi5(prec) : const_delta3(prec);
}

long bound_lead(ZetaKind kind) { return kind == ZetaKind::Two ? 1 : 2; }

BoundReport bound_report(ZetaKind kind, unsigned n, Precision prec, int retries) {
    const LinearForm form = beukers_form(kind, n);
    BoundReport rep;
    rep.n = n;
    rep.kind = kind;
    rep.integers = integerize(form, n);

    int digits = prec.digits();
    for (int attempt = 0; attempt <= retries; ++attempt, digits *= 2) {
        const Precision p(digits);
        const BallReal zeta = zeta_ref(power_of(kind), p);
        rep.digits_used = digits;
        rep.value = form.realize(zeta);
        rep.abs_value = rep.value.abs();
        rep.bound = bound_factor(kind, p).ball.pow(n) * zeta * Rational(bound_lead(kind));
        rep.positive = !rep.value.contains_zero();

        if (n == 0) {
            // Both sides are lead * zeta(k) exactly.
            const bool equal = form.rat == Rational(0) && form.zcoef == bound_lead(kind);
            rep.status = equal ? BoundStatus::Holds : BoundStatus::Violated;
        } else if (rep.abs_value.upper() <= rep.bound.lower()) {
            rep.status = BoundStatus::Holds;
        } else if (rep.bound.upper() < rep.abs_value.lower()) {
            rep.status = BoundStatus::Violated;
        } else {
            rep.status = BoundStatus::Inconclusive;
        }
        if (rep.status == BoundStatus::Violated) break;
        if (rep.status == BoundStatus::Holds && rep.positive) break;
    }
    return rep;
}

bool ChainSummary::all_hold() const {
    return std::all_of(reports.begin(), reports.end(), [](const BoundReport& r) { return r.holds(); });
}

bool ChainSummary::any_inconclusive() const {
    return std::any_of(reports.begin(), reports.end(), [](const BoundReport& r) {
        return r.status == BoundStatus::Inconclusive || (r.status == BoundStatus::Holds && !r.positive);
    });
}

CrossoverScan scan_crossover(ZetaKind kind, std::uint64_t scan_to) {
    CrossoverScan scan;
    scan.base = kind == ZetaKind::Two ? 8 : 21;
    scan.scanned_to = scan_to;
    if (scan_to < 2) return scan;
    const PrimeTable table(scan_to);
    DnStream stream(table);
    BigInt power = 1;
    BigInt dk;
    for (std::uint64_t n = 1; n <= scan_to; ++n) {
        const BigInt& dn = stream.next().second;
        power *= scan.base;
        mpz_pow_ui(dk.get_mpz_t(), dn.get_mpz_t(), power_of(kind));
        if (dk < power) {
            if (!scan.first_holds) scan.first_holds = n;
        } else {
            scan.last_failure = n;
        }
    }
    const std::uint64_t candidate = scan.last_failure ? *scan.last_failure + 1 : 1;
    if (candidate <= scan_to) scan.crossover = candidate;
    return scan;
}

ChainSummary verify_chain(ZetaKind kind, unsigned n_min, unsigned n_max, Precision prec, std::uint64_t scan_to) {
    if (n_max < n_min) throw std::invalid_argument("verify_chain: empty index range");
    ChainSummary summary;
    summary.kind = kind;
    for (unsigned n = n_min; n <= n_max; ++n) summary.reports.push_back(bound_report(kind, n, prec));
    summary.strictly_decreasing = true;
    for (std::size_t i = 1; i < summary.reports.size(); ++i) {
        if (!(summary.reports[i].abs_value.upper() < summary.reports[i - 1].abs_value.lower())) {
            summary.strictly_decreasing = false;
        }
    }
    summary.scan = scan_crossover(kind, std::max<std::uint64_t>(scan_to, n_max));
    return summary;
}

ContradictionReport contradiction_threshold(ZetaKind kind, const BigInt& p, const BigInt& q, Precision prec) {
    if (p <= 0 || q <= 0) throw std::invalid_argument("contradiction_threshold: p and q must be positive");
    BigInt g;
    mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
    if (g != 1) throw std::invalid_argument("contradiction_threshold: p and q must be coprime");

    ContradictionReport rep;
    rep.kind = kind;
    rep.p = p;
    rep.q = q;
    const BallReal factor = bound_factor(kind, prec).ball;
    const BallReal scale(Rational(p) * Rational(bound_lead(kind)), prec);
    const BallReal one(Rational(1), prec);

    BigInt dn = 1;
    BigInt dk;
    BallReal factor_pow = one;
    for (unsigned n = 1; n <= kContradictionScanCap; ++n) {
        mpz_lcm_ui(dn.get_mpz_t(), dn.get_mpz_t(), n);
        mpz_pow_ui(dk.get_mpz_t(), dn.get_mpz_t(), power_of(kind));
        factor_pow *= factor;
        BallReal product = scale * factor_pow * Rational(dk);
        if (product.certainly_less(one)) {
            rep.n_star = n;
            rep.product_at_n_star = product;
            break;
        }
    }
    if (rep.n_star == 0) throw std::runtime_error("contradiction_threshold: no threshold below scan cap");

    if (kind == ZetaKind::Two) {
        rep.coarse_bound = BallReal(Rational(p), prec).log() / BallReal(Rational(4, 3), prec).log();
    } else {
        rep.coarse_bound = BallReal(Rational(2) * Rational(p), prec).log() / BallReal(Rational(3, 2), prec).log();
    }

    rep.integers = integerize(beukers_form(kind, rep.n_star), rep.n_star);
    rep.witness = ::abs(q * rep.integers.a + p * rep.integers.c);
    return rep;
}

}  // namespace beukers
