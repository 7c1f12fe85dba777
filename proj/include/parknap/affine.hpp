#pragma once

#include "parknap/rational.hpp"

#include <optional>

namespace parknap {

/// Affine function of the parameter: lambda -> intercept + lambda * slope.
struct AffineForm {
    Rational intercept;
    Rational slope;

    AffineForm() = default;
    AffineForm(Rational a, Rational b) : intercept(std::move(a)), slope(std::move(b)) {}

    Rational eval(const Rational& lambda) const { return intercept + lambda * slope; }

    friend AffineForm operator+(const AffineForm& f, const AffineForm& g) {
        return {f.intercept + g.intercept, f.slope + g.slope};
    }
    friend AffineForm operator-(const AffineForm& f, const AffineForm& g) {
        return {f.intercept - g.intercept, f.slope - g.slope};
    }
    friend bool operator==(const AffineForm& f, const AffineForm& g) {
        return f.intercept == g.intercept && f.slope == g.slope;
    }
};

/// The unique crossing point of two non-parallel lines; nullopt when the
/// slopes coincide (parallel or identical -- the caller can tell which by
/// comparing intercepts).
inline std::optional<Rational> affine_intersect(const AffineForm& f, const AffineForm& g) {
    if (f.slope == g.slope) return std::nullopt;
    return (g.intercept - f.intercept) / (f.slope - g.slope);
}

/// Root of f(lambda) = level, if the line is not horizontal.
inline std::optional<Rational> affine_root(const AffineForm& f, const Rational& level) {
    if (f.slope.is_zero()) return std::nullopt;
    return (level - f.intercept) / f.slope;
}

/// Closed interval of parameter values {lambda : lo <= lambda <= hi}.
/// Infinite endpoints describe rays or the whole line.
struct ClosedInterval {
    ExtRational lo;
    ExtRational hi;

    ClosedInterval() : lo(ExtRational::neg_inf()), hi(ExtRational::pos_inf()) {}
    ClosedInterval(ExtRational l, ExtRational h) : lo(std::move(l)), hi(std::move(h)) {
        if (hi < lo) throw std::invalid_argument("ClosedInterval: hi < lo");
    }

    static ClosedInterval whole_line() { return {}; }
    static ClosedInterval ray_left(Rational x) { return {ExtRational::neg_inf(), ExtRational(std::move(x))}; }
    static ClosedInterval ray_right(Rational x) { return {ExtRational(std::move(x)), ExtRational::pos_inf()}; }
    static ClosedInterval point(Rational x) { ExtRational e(std::move(x)); return {e, e}; }

    bool contains(const Rational& x) const {
        ExtRational e(x);
        return lo <= e && e <= hi;
    }
    bool contains(const ClosedInterval& other) const { return lo <= other.lo && other.hi <= hi; }

    friend bool operator==(const ClosedInterval& a, const ClosedInterval& b) {
        return a.lo == b.lo && a.hi == b.hi;
    }
};

inline std::optional<ClosedInterval> intersect(const ClosedInterval& a, const ClosedInterval& b) {
    ExtRational lo = a.lo < b.lo ? b.lo : a.lo;
    ExtRational hi = a.hi < b.hi ? a.hi : b.hi;
    if (hi < lo) return std::nullopt;
    return ClosedInterval(lo, hi);
}

}  // namespace parknap
