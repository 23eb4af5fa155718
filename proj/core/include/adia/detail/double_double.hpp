#pragma once

#include <cmath>

namespace adia::detail {

// Double-double (Dekker/Knuth) compensated arithmetic, ~31 significant
// digits. The Bessel power series loses ~9 digits to alternating-sign
// cancellation near the series/asymptotic crossover; running the term
// recurrence and the accumulation in double-double keeps the final
// rounding at double precision harmless.
struct dd {
    double hi = 0.0;
    double lo = 0.0;

    constexpr dd() = default;
    constexpr dd(double h) : hi(h) {}
    constexpr dd(double h, double l) : hi(h), lo(l) {}
};

inline dd two_sum(double a, double b) {
    const double s = a + b;
    const double bb = s - a;
    return {s, (a - (s - bb)) + (b - bb)};
}

inline dd quick_two_sum(double a, double b) {
    const double s = a + b;
    return {s, b - (s - a)};
}

inline dd two_prod(double a, double b) {
    const double p = a * b;
    return {p, std::fma(a, b, -p)};
}

inline dd operator+(dd a, dd b) {
    dd s = two_sum(a.hi, b.hi);
    s.lo += a.lo + b.lo;
    return quick_two_sum(s.hi, s.lo);
}

inline dd operator-(dd a) { return {-a.hi, -a.lo}; }

inline dd operator-(dd a, dd b) { return a + (-b); }

inline dd operator*(dd a, dd b) {
    dd p = two_prod(a.hi, b.hi);
    p.lo += a.hi * b.lo + a.lo * b.hi;
    return quick_two_sum(p.hi, p.lo);
}

inline dd operator*(dd a, double b) {
    dd p = two_prod(a.hi, b);
    p.lo += a.lo * b;
    return quick_two_sum(p.hi, p.lo);
}

inline dd operator/(dd a, double b) {
    const double q1 = a.hi / b;
    dd r = a - two_prod(q1, b);
    const double q2 = (r.hi + r.lo) / b;
    r = r - two_prod(q2, b);
    const double q3 = (r.hi + r.lo) / b;
    dd q = quick_two_sum(q1, q2);
    return q + dd(q3);
}

inline dd operator/(dd a, dd b) {
    const double q1 = a.hi / b.hi;
    dd r = a - b * q1;
    const double q2 = (r.hi + r.lo) / b.hi;
    r = r - b * q2;
    const double q3 = (r.hi + r.lo) / b.hi;
    dd q = quick_two_sum(q1, q2);
    return q + dd(q3);
}

inline double to_double(dd a) { return a.hi + a.lo; }

inline double abs_hi(dd a) { return std::fabs(a.hi); }

}  // namespace adia::detail
