#pragma once

#include <array>
#include <utility>

namespace fq {

// Parametric membership shapes mapping reals into [0,1].
//
//   Trapezoid(a,b,c,d): 0 outside [a,d], linear ramps on [a,b] and [c,d],
//     1 on the plateau [b,c]. Degenerate knots (a==b or c==d) behave as
//     steps that attain the plateau value at the knot.
//   SShape(alpha,gamma): nondecreasing 0 -> 1 ramp, piecewise quadratic,
//     reaching 0.5 at the midpoint (alpha+gamma)/2.
//   LeftSShape(alpha,gamma): the mirrored nonincreasing ramp 1 - SShape.
class FuzzyNumber {
public:
    enum class Kind { Trapezoid, SShape, LeftSShape };

    static FuzzyNumber trapezoid(double a, double b, double c, double d);
    static FuzzyNumber s_shape(double alpha, double gamma);
    static FuzzyNumber left_s_shape(double alpha, double gamma);

    // Membership of x, always in [0,1].
    double operator()(double x) const;

    Kind kind() const { return kind_; }

    // Trapezoid parameters.
    double a() const { return p_[0]; }
    double b() const { return p_[1]; }
    double c() const { return p_[2]; }
    double d() const { return p_[3]; }

    // S-shape parameters.
    double alpha() const { return p_[0]; }
    double gamma() const { return p_[1]; }

    // Closed interval outside which membership is exactly 0; unbounded
    // ends are +-infinity.
    std::pair<double, double> support() const;

    bool operator==(const FuzzyNumber&) const = default;

private:
    FuzzyNumber(Kind k, std::array<double, 4> p) : kind_(k), p_(p) {}

    double s_eval(double x) const;

    Kind kind_;
    std::array<double, 4> p_;
};

}  // namespace fq
