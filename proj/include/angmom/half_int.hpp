#pragma once

#include <cmath>
#include <compare>
#include <stdexcept>
#include <string>

namespace angmom {

/// Half-integer quantum number, stored as twice its value so that
/// l = 3/2 is exactly representable. Plain ints convert implicitly.
class HalfInt {
public:
    constexpr HalfInt() = default;
    constexpr HalfInt(int n) : twice_(2 * n) {}

    static constexpr HalfInt from_twice(int t) {
        HalfInt h;
        h.twice_ = t;
        return h;
    }

    /// Parse from a double that must be an exact (half-)integer.
    static HalfInt from_double(double x) {
        const double t = 2.0 * x;
        const double r = std::nearbyint(t);
        if (!(std::fabs(t - r) < 1e-9) || std::fabs(r) > 1e9) {
            throw std::domain_error("not a half-integer: " + std::to_string(x));
        }
        return from_twice(static_cast<int>(r));
    }

    constexpr int twice() const { return twice_; }
    constexpr bool is_integer() const { return twice_ % 2 == 0; }

    /// Exact for any half-integer within double range.
    constexpr double value() const { return twice_ / 2.0; }

    /// Only valid when is_integer().
    constexpr int as_integer() const {
        return twice_ / 2;
    }

    friend constexpr HalfInt operator+(HalfInt a, HalfInt b) { return from_twice(a.twice_ + b.twice_); }
    friend constexpr HalfInt operator-(HalfInt a, HalfInt b) { return from_twice(a.twice_ - b.twice_); }
    friend constexpr HalfInt operator-(HalfInt a) { return from_twice(-a.twice_); }

    friend constexpr auto operator<=>(HalfInt a, HalfInt b) = default;

private:
    int twice_ = 0;
};

inline HalfInt abs(HalfInt a) { return HalfInt::from_twice(a.twice() < 0 ? -a.twice() : a.twice()); }

} // namespace angmom
