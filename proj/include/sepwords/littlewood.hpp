#pragma once

#include <cstdint>
#include <vector>

#include "sepwords/arithmetic.hpp"

namespace sepwords::littlewood {

/// Polynomial 1 - sigma*x^d + sum_j a_j x^j restricted to the sparse
/// class: with t = ceil(n^{1/3}), the middle exponent satisfies
/// 1 <= d <= t-1, tail exponents lie in [t, n], and |a_j| <= 1.
struct SparsePoly {
    int64_t n = 1;   // degree bound defining the class
    int sigma = 0;   // 0 or 1
    int64_t d = 0;   // meaningful iff sigma == 1
    std::vector<std::pair<int64_t, double>> tail; // (exponent, coefficient), ascending

    double eval(double x) const;
    /// Checks every class constraint; usable on hand-built instances.
    bool is_member() const;
};

/// Dense coefficient vector c_0..c_N, evaluated by compensated Horner.
struct DensePoly {
    std::vector<double> coefficients;

    double eval(double x) const;
    int64_t degree() const { return static_cast<int64_t>(coefficients.size()) - 1; }
};

/// Difference polynomial of a separated set pair, normalized: divided by
/// its lowest power of x and negated if needed so the constant term is 1.
SparsePoly from_set_pair(const arithmetic::IndexSet& a, const arithmetic::IndexSet& b);

/// Max of |p| over `grid` equispaced points of [lo, hi], refined by local
/// ternary search around grid maxima down to 1e-12 relative bracket width.
/// The result is a certified lower bound on the true maximum.
double eval_max_on_interval(const SparsePoly& p, double lo, double hi, int64_t grid);
double eval_max_on_interval(const DensePoly& p, double lo, double hi, int64_t grid);

/// f(x) = prod_{i=0}^{k-1} (x^{2^i} - 1): degree 2^k - 1, coefficients
/// all in {-1, +1}, divisible by (x-1)^k. Valid for 1 <= k <= 15.
DensePoly order_family(int64_t k);

struct OrderBoundCheck {
    double lhs = 0.0; // evaluated max of |f| on [1 - k/(9n), 1]
    double rhs = 0.0; // (n+1) (e/9)^k
    bool ok = false;
};

/// Quantitative check of the vanishing-order bound on the order_family
/// polynomial with n = 2^k - 1.
OrderBoundCheck check_order_bound(int64_t k, int64_t grid);

} // namespace sepwords::littlewood
