#include "fuzzquant/fuzzy_number.hpp"

#include <limits>

#include "fuzzquant/errors.hpp"

namespace fq {

FuzzyNumber FuzzyNumber::trapezoid(double a, double b, double c, double d) {
    if (!(a <= b && b <= c && c <= d))
        throw ArgumentError("trapezoid requires a <= b <= c <= d");
    return FuzzyNumber(Kind::Trapezoid, {a, b, c, d});
}

FuzzyNumber FuzzyNumber::s_shape(double alpha, double gamma) {
    if (!(alpha < gamma)) throw ArgumentError("s-shape requires alpha < gamma");
    return FuzzyNumber(Kind::SShape, {alpha, gamma, 0.0, 0.0});
}

FuzzyNumber FuzzyNumber::left_s_shape(double alpha, double gamma) {
    if (!(alpha < gamma)) throw ArgumentError("s-shape requires alpha < gamma");
    return FuzzyNumber(Kind::LeftSShape, {alpha, gamma, 0.0, 0.0});
}

double FuzzyNumber::s_eval(double x) const {
    const double alpha = p_[0], gamma = p_[1];
    if (x <= alpha) return 0.0;
    if (x > gamma) return 1.0;
    const double range = gamma - alpha;
    if (x <= 0.5 * (alpha + gamma)) {
        const double t = (x - alpha) / range;
        return 2.0 * t * t;
    }
    const double t = (x - gamma) / range;
    return 1.0 - 2.0 * t * t;
}

double FuzzyNumber::operator()(double x) const {
    switch (kind_) {
        case Kind::Trapezoid: {
            const double a = p_[0], b = p_[1], c = p_[2], d = p_[3];
            if (x < a || x > d) return 0.0;
            if (x < b) return (x - a) / (b - a);
            // Degenerate ramps (a==b, c==d) fall through to the plateau: the
            // vertical edge attains the plateau value at the knot.
            if (x <= c) return 1.0;
            return (d - x) / (d - c);
        }
        case Kind::SShape:
            return s_eval(x);
        case Kind::LeftSShape:
            return 1.0 - s_eval(x);
    }
    return 0.0;  // unreachable
}

std::pair<double, double> FuzzyNumber::support() const {
    constexpr double inf = std::numeric_limits<double>::infinity();
    switch (kind_) {
        case Kind::Trapezoid:
            return {p_[0], p_[3]};
        case Kind::SShape:
            return {p_[0], inf};
        case Kind::LeftSShape:
            return {-inf, p_[1]};
    }
    return {-inf, inf};  // unreachable
}

}  // namespace fq
