#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace sgas {

using cplx = std::complex<double>;
inline constexpr cplx I1{0.0, 1.0};
inline constexpr double kPi = 3.14159265358979323846;

// Argument outside the mathematically valid range.
struct DomainError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A requested evaluation would overflow the exponent budget.
struct BudgetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Iteration or quadrature failed to reach its target.
struct ConvergenceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed input files or records.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Which side of a vertical cut. Left is the "+" side for cuts oriented upward.
enum class Side { Left, Right };

// Tiny real offset that pins a point on the imaginary axis to one side of a cut
// while keeping it numerically on the axis.
inline constexpr double kSideOffset = 1e-200;

// max that lets a NaN through instead of silently dropping it
inline double nan_max(double a, double b) {
    if (std::isnan(a) || std::isnan(b)) return std::numeric_limits<double>::quiet_NaN();
    return std::max(a, b);
}

inline double nan_min(double a, double b) {
    if (std::isnan(a) || std::isnan(b)) return std::numeric_limits<double>::quiet_NaN();
    return std::min(a, b);
}

inline cplx on_axis(double y, Side s) {
    return {s == Side::Left ? -kSideOffset : kSideOffset, y};
}

}  // namespace sgas
