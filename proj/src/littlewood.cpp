#include "sepwords/littlewood.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "sepwords/errors.hpp"

namespace sepwords::littlewood {

using arithmetic::IndexSet;

namespace {

// Error-free float transformations for the compensated evaluation paths.
inline void two_sum(double a, double b, double& s, double& e) {
    s = a + b;
    const double bb = s - a;
    e = (a - (s - bb)) + (b - bb);
}

inline void two_prod(double a, double b, double& p, double& e) {
    p = a * b;
    e = std::fma(a, b, -p);
}

} // namespace

double SparsePoly::eval(double x) const {
    // Term-wise evaluation with compensated (Kahan) summation; the terms
    // are O(1) and cancellation, not magnitude, is the hazard.
    double sum = 1.0; // constant term
    double comp = 0.0;
    auto add = [&](double term) {
        const double y = term - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    };
    if (sigma) add(-std::pow(x, static_cast<double>(d)));
    for (const auto& [exponent, coefficient] : tail) {
        add(coefficient * std::pow(x, static_cast<double>(exponent)));
    }
    return sum;
}

bool SparsePoly::is_member() const {
    if (n < 1) return false;
    const int64_t t = arithmetic::ceil_cbrt(n);
    if (sigma != 0 && sigma != 1) return false;
    if (sigma == 1 && (d < 1 || d > t - 1)) return false;
    int64_t prev = 0;
    for (const auto& [exponent, coefficient] : tail) {
        if (exponent < t || exponent > n) return false;
        if (exponent <= prev) return false;
        if (std::abs(coefficient) > 1.0) return false;
        prev = exponent;
    }
    return true;
}

double DensePoly::eval(double x) const {
    // Compensated Horner: the residual polynomial of the error terms is
    // accumulated alongside and added back at the end.
    if (coefficients.empty()) return 0.0;
    double s = coefficients.back();
    double c = 0.0;
    for (size_t i = coefficients.size() - 1; i-- > 0;) {
        double p, ep, t, et;
        two_prod(s, x, p, ep);
        two_sum(p, coefficients[i], t, et);
        s = t;
        c = c * x + (ep + et);
    }
    return s + c;
}

SparsePoly from_set_pair(const IndexSet& a, const IndexSet& b) {
    if (a == b) throw std::invalid_argument("from_set_pair: sets must differ");
    if (a.universe() != b.universe()) {
        throw std::invalid_argument("from_set_pair: sets must share a universe");
    }
    const int64_t n = a.universe();
    const int64_t t = arithmetic::ceil_cbrt(n);
    if (!a.is_separated(t) || !b.is_separated(t)) {
        throw std::invalid_argument("from_set_pair: sets must be ceil(n^{1/3})-separated");
    }

    // Coefficients of sum (1_A(j) - 1_B(j)) x^j, nonzero entries only.
    std::vector<std::pair<int64_t, int>> terms; // (exponent, +-1), ascending
    {
        size_t ia = 0, ib = 0;
        const auto& ea = a.elements();
        const auto& eb = b.elements();
        while (ia < ea.size() || ib < eb.size()) {
            if (ib == eb.size() || (ia < ea.size() && ea[ia] < eb[ib])) {
                terms.emplace_back(ea[ia++], 1);
            } else if (ia == ea.size() || eb[ib] < ea[ia]) {
                terms.emplace_back(eb[ib++], -1);
            } else {
                ++ia; // common element cancels
                ++ib;
            }
        }
    }
    if (terms.empty()) throw std::invalid_argument("from_set_pair: sets must differ");

    const int64_t r = terms.front().first;
    const int flip = terms.front().second; // normalize constant term to +1

    SparsePoly poly;
    poly.n = n;
    for (size_t idx = 1; idx < terms.size(); ++idx) {
        const int64_t exponent = terms[idx].first - r;
        const int coefficient = terms[idx].second * flip;
        if (exponent < t) {
            // Separation forces this to be the single -x^d term.
            if (poly.sigma == 1 || idx != 1 || coefficient != -1) {
                throw ContradictionError("from_set_pair: separation precondition violated");
            }
            poly.sigma = 1;
            poly.d = exponent;
        } else {
            poly.tail.emplace_back(exponent, static_cast<double>(coefficient));
        }
    }
    if (!poly.is_member()) {
        throw ContradictionError("from_set_pair: output fails class membership");
    }
    return poly;
}

namespace {

template <typename Poly>
double max_abs_impl(const Poly& p, double lo, double hi, int64_t grid) {
    if (grid < 2) throw std::invalid_argument("eval_max_on_interval: grid must be >= 2");
    if (!(lo <= hi)) throw std::invalid_argument("eval_max_on_interval: lo must be <= hi");

    auto value = [&](double x) { return std::abs(p.eval(x)); };

    std::vector<double> xs(static_cast<size_t>(grid));
    std::vector<double> vs(static_cast<size_t>(grid));
    for (int64_t i = 0; i < grid; ++i) {
        const double x = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(grid - 1);
        xs[static_cast<size_t>(i)] = x;
        vs[static_cast<size_t>(i)] = value(x);
    }
    double best = *std::max_element(vs.begin(), vs.end());

    // Ternary refinement around every grid-local maximum; every evaluation
    // feeds the running max, so the result can only improve with the grid.
    for (int64_t i = 0; i < grid; ++i) {
        const bool left_ok = i == 0 || vs[static_cast<size_t>(i)] >= vs[static_cast<size_t>(i - 1)];
        const bool right_ok =
            i == grid - 1 || vs[static_cast<size_t>(i)] >= vs[static_cast<size_t>(i + 1)];
        if (!left_ok || !right_ok) continue;
        double a = xs[static_cast<size_t>(std::max<int64_t>(0, i - 1))];
        double b = xs[static_cast<size_t>(std::min<int64_t>(grid - 1, i + 1))];
        while (b - a > 1e-12 * std::max({std::abs(a), std::abs(b), 1e-300})) {
            const double m1 = a + (b - a) / 3.0;
            const double m2 = b - (b - a) / 3.0;
            const double v1 = value(m1);
            const double v2 = value(m2);
            best = std::max({best, v1, v2});
            if (v1 < v2) {
                a = m1;
            } else {
                b = m2;
            }
        }
        best = std::max(best, value((a + b) / 2.0));
    }
    return best;
}

} // namespace

double eval_max_on_interval(const SparsePoly& p, double lo, double hi, int64_t grid) {
    return max_abs_impl(p, lo, hi, grid);
}

double eval_max_on_interval(const DensePoly& p, double lo, double hi, int64_t grid) {
    return max_abs_impl(p, lo, hi, grid);
}

DensePoly order_family(int64_t k) {
    if (k < 1 || k > 15) throw std::invalid_argument("order_family: k must be in [1, 15]");
    std::vector<double> coeffs{-1.0, 1.0}; // x - 1
    for (int64_t i = 1; i < k; ++i) {
        const int64_t shift = int64_t{1} << i;
        std::vector<double> next(coeffs.size() + static_cast<size_t>(shift), 0.0);
        for (size_t j = 0; j < coeffs.size(); ++j) {
            next[j] -= coeffs[j];
            next[j + static_cast<size_t>(shift)] += coeffs[j];
        }
        coeffs = std::move(next);
    }
    return DensePoly{std::move(coeffs)};
}

OrderBoundCheck check_order_bound(int64_t k, int64_t grid) {
    const DensePoly f = order_family(k);
    const int64_t n = (int64_t{1} << k) - 1;
    const double lo = 1.0 - static_cast<double>(k) / (9.0 * static_cast<double>(n));
    OrderBoundCheck out;
    out.lhs = eval_max_on_interval(f, lo, 1.0, grid);
    out.rhs = static_cast<double>(n + 1) * std::pow(std::exp(1.0) / 9.0, static_cast<double>(k));
    out.ok = out.lhs <= out.rhs;
    return out;
}

} // namespace sepwords::littlewood
