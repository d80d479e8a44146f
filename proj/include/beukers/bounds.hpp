#pragma once

#include "beukers/ball.hpp"
#include "beukers/constants.hpp"
#include "beukers/forms.hpp"
#include "beukers/surd.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace beukers {

// g(x,y) = x(1-x) y(1-y) / (1-xy)
Rational g2(const Rational& x, const Rational& y);
QuadSurd g2(const QuadSurd& x, const QuadSurd& y);
BallReal g2(const BallReal& x, const BallReal& y);
double g2_approx(double x, double y);

// g(x,y,z) = x(1-x) y(1-y) z(1-z) / ([1-(1-z)x] (1-yz))
Rational g3(const Rational& x, const Rational& y, const Rational& z);
QuadSurd g3(const QuadSurd& x, const QuadSurd& y, const QuadSurd& z);
BallReal g3(const BallReal& x, const BallReal& y, const BallReal& z);
double g3_approx(double x, double y, double z);

/// Best point found by nested grid refinement, with g evaluated exactly there.
struct GridMaximum {
    std::vector<Rational> point;
    Rational value;
    unsigned rounds = 0;
    unsigned points_per_axis = 0;
};

struct MaxResult {
    std::vector<QuadSurd> point;
    QuadSurd value;
    std::vector<BallReal> point_ball;
    BallReal value_ball;

    GridMaximum grid;
    /// g2 only: best point restricted to the diagonal x = y.
    std::optional<GridMaximum> diagonal_grid;

    /// Critical-point equations at the analytic point, exactly.
    std::vector<std::string> residual_names;
    std::vector<QuadSurd> residuals;
    /// g at the analytic point recomputed from the formula; must equal value.
    QuadSurd value_from_formula;

    /// g3 only: the competing point (2-sqrt2, sqrt2-1, 1/2) and its value.
    std::optional<std::vector<QuadSurd>> rival_point;
    std::optional<QuadSurd> rival_value;
    /// g3 only: analytic point rebuilt from x = 1/(1+sqrt z), y = (1-sqrt(1-z))/z at z = 1/2.
    bool closed_form_solution_matches = true;

    bool residuals_vanish() const;
    bool grid_below_analytic() const;
};

inline constexpr unsigned kDefaultGridPoints = 100;
inline constexpr unsigned kDefaultRefinements = 3;

MaxResult max_g2(unsigned grid_points = kDefaultGridPoints, unsigned refinements = kDefaultRefinements,
                 Precision prec = Precision());
MaxResult max_g3(unsigned grid_points = kDefaultGridPoints, unsigned refinements = kDefaultRefinements,
                 Precision prec = Precision());

enum class BoundStatus { Holds, Inconclusive, Violated };
std::string to_string(BoundStatus s);

struct BoundReport {
    unsigned n = 0;
    ZetaKind kind = ZetaKind::Two;
    IntegerForm integers;
    BallReal value;      // realized linear form
    BallReal abs_value;  // |I_n| or |J_n|
    BallReal bound;      // Phi^{5n} zeta(2) or 2 (17-12 sqrt2)^n zeta(3)
    bool positive = false;  // abs_value excludes 0
    BoundStatus status = BoundStatus::Inconclusive;
    int digits_used = 0;

    bool holds() const { return status == BoundStatus::Holds && positive; }
};

/// d_n^k < base^n scan: base 8 for k = 2, 21 for k = 3.
struct CrossoverScan {
    std::uint64_t scanned_to = 0;
    unsigned base = 0;
    std::optional<std::uint64_t> first_holds;
    std::optional<std::uint64_t> last_failure;
    /// Smallest N such that the inequality holds for every tested n >= N.
    std::optional<std::uint64_t> crossover;
};

struct ChainSummary {
    ZetaKind kind = ZetaKind::Two;
    std::vector<BoundReport> reports;
    CrossoverScan scan;
    /// Observed |value_{n+1}| < |value_n| over the reported range.
    bool strictly_decreasing = false;

    bool all_hold() const;
    bool any_inconclusive() const;
};

inline constexpr int kMaxPrecisionRetries = 3;
inline constexpr std::uint64_t kDefaultCrossoverScan = 2000;

/// The bound factor of one step: Phi^5 or 17 - 12 sqrt2.
SurdConstant bound_factor(ZetaKind kind, Precision prec);
/// 1 for zeta(2), 2 for zeta(3).
long bound_lead(ZetaKind kind);

BoundReport bound_report(ZetaKind kind, unsigned n, Precision prec, int retries = kMaxPrecisionRetries);
ChainSummary verify_chain(ZetaKind kind, unsigned n_min, unsigned n_max, Precision prec = Precision(),
                          std::uint64_t scan_to = kDefaultCrossoverScan);
inline ChainSummary verify_chain_zeta2(unsigned n_max, Precision prec = Precision()) {
    return verify_chain(ZetaKind::Two, 1, n_max, prec);
}
inline ChainSummary verify_chain_zeta3(unsigned n_max, Precision prec = Precision()) {
    return verify_chain(ZetaKind::Three, 1, n_max, prec);
}
CrossoverScan scan_crossover(ZetaKind kind, std::uint64_t scan_to);

struct ContradictionReport {
    ZetaKind kind = ZetaKind::Two;
    BigInt p;
    BigInt q;
    /// Smallest n with p * lead * d_n^k * F^n < 1, certified in ball arithmetic.
    unsigned n_star = 0;
    BallReal product_at_n_star;
    /// ln p / ln(4/3) or ln(2p) / ln(3/2).
    BallReal coarse_bound;
    /// |q a_n + p c_n| at n_star; would have to be a positive integer below 1 if zeta(k) = p/q.
    BigInt witness;
    IntegerForm integers;
};

inline constexpr unsigned kContradictionScanCap = 100000;

/// Throws std::invalid_argument unless p, q are coprime positive integers.
ContradictionReport contradiction_threshold(ZetaKind kind, const BigInt& p, const BigInt& q,
                                            Precision prec = Precision());

}  // namespace beukers
