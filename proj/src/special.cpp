#include "idf/special.hpp"

#include <limits>
#include <stdexcept>

namespace idf {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kHalfLog2Pi = 0.91893853320467274178;  // 0.5 * log(2*pi)

const double kLanczos[9] = {
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
};

}  // namespace

double log_gamma(double x) {
    if (!(x > 0.0)) {
        if (x <= 0.0 && x == std::floor(x)) {
            return std::numeric_limits<double>::infinity();
        }
        // Reflection for negative non-integers; only the magnitude is meaningful.
        return std::log(kPi / std::fabs(std::sin(kPi * x))) - log_gamma(1.0 - x);
    }
    if (x < 0.5) {
        return std::log(kPi / std::sin(kPi * x)) - log_gamma(1.0 - x);
    }
    double z = x - 1.0;
    double a = kLanczos[0];
    for (int i = 1; i < 9; ++i) {
        a += kLanczos[i] / (z + static_cast<double>(i));
    }
    double t = z + 7.5;
    return kHalfLog2Pi + (z + 0.5) * std::log(t) - t + std::log(a);
}

double digamma(double x) {
    if (!(x > 0.0)) {
        throw std::domain_error("digamma: argument must be positive");
    }
    double result = 0.0;
    while (x < 10.0) {
        result -= 1.0 / x;
        x += 1.0;
    }
    double inv = 1.0 / x;
    double inv2 = inv * inv;
    // ln x - 1/(2x) - sum B_{2n} / (2n x^{2n})
    double series = std::log(x) - 0.5 * inv -
                    inv2 * (1.0 / 12.0 -
                            inv2 * (1.0 / 120.0 -
                                    inv2 * (1.0 / 252.0 -
                                            inv2 * (1.0 / 240.0 -
                                                    inv2 * (1.0 / 132.0)))));
    return result + series;
}

namespace {

constexpr int kMaxIter = 500;
constexpr double kEps = 3.0e-16;
constexpr double kFpMin = 1.0e-300;

double gamma_series_lower(double a, double x) {
    double ap = a;
    double sum = 1.0 / a;
    double del = sum;
    for (int n = 0; n < kMaxIter; ++n) {
        ap += 1.0;
        del *= x / ap;
        sum += del;
        if (std::fabs(del) < std::fabs(sum) * kEps) {
            break;
        }
    }
    return sum * std::exp(-x + a * std::log(x) - log_gamma(a));
}

double gamma_contfrac_upper(double a, double x) {
    double b = x + 1.0 - a;
    double c = 1.0 / kFpMin;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i <= kMaxIter; ++i) {
        double an = -static_cast<double>(i) * (static_cast<double>(i) - a);
        b += 2.0;
        d = an * d + b;
        if (std::fabs(d) < kFpMin) d = kFpMin;
        c = b + an / c;
        if (std::fabs(c) < kFpMin) c = kFpMin;
        d = 1.0 / d;
        double del = d * c;
        h *= del;
        if (std::fabs(del - 1.0) < kEps) {
            break;
        }
    }
    return std::exp(-x + a * std::log(x) - log_gamma(a)) * h;
}

}  // namespace

double reg_gamma_lower(double a, double x) {
    if (!(a > 0.0) || x < 0.0) {
        throw std::domain_error("reg_gamma_lower: require a > 0, x >= 0");
    }
    if (x == 0.0) {
        return 0.0;
    }
    if (x < a + 1.0) {
        return gamma_series_lower(a, x);
    }
    return 1.0 - gamma_contfrac_upper(a, x);
}

double reg_gamma_upper(double a, double x) {
    if (!(a > 0.0) || x < 0.0) {
        throw std::domain_error("reg_gamma_upper: require a > 0, x >= 0");
    }
    if (x == 0.0) {
        return 1.0;
    }
    if (x < a + 1.0) {
        return 1.0 - gamma_series_lower(a, x);
    }
    return gamma_contfrac_upper(a, x);
}

double chi_square_upper_tail(double df, double x) {
    if (x <= 0.0) {
        return 1.0;
    }
    return reg_gamma_upper(0.5 * df, 0.5 * x);
}

}  // namespace idf
