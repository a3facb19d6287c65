#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

namespace angmom {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

inline constexpr int factorial_table_max = 512;

/// n! as an exact integer, from a table built once (thread-safe static init).
inline const BigInt& factorial(int n) {
    if (n < 0) throw std::domain_error("factorial of negative integer");
    if (n > factorial_table_max) throw std::domain_error("factorial argument above table cap");
    static const std::vector<BigInt> table = [] {
        std::vector<BigInt> t(factorial_table_max + 1);
        t[0] = 1;
        for (int k = 1; k <= factorial_table_max; ++k) t[k] = t[k - 1] * k;
        return t;
    }();
    return table[static_cast<std::size_t>(n)];
}

namespace detail {

// Split n > 0 into a*a*b with b squarefree, by trial division. Prime factors
// above the bound are left inside b; every input built from factorials of
// arguments <= ~1000 factors completely.
inline std::pair<BigInt, BigInt> extract_square(BigInt n) {
    BigInt root = 1, rest = 1;
    for (BigInt p = 2; p * p <= n && p < (1 << 20); p += (p == 2 ? 1 : 2)) {
        if (n % p != 0) continue;
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        for (int i = 0; i < e / 2; ++i) root *= p;
        if (e % 2 != 0) rest *= p;
    }
    return {root, rest * n};
}

} // namespace detail

/// Exact number of the form r*sqrt(s) with r, s rationals, s >= 0.
/// Canonical form pulls square factors of s into r, leaving s a ratio of
/// squarefree integers (s = 1 whenever the radical is rational).
class ExactCoeff {
public:
    ExactCoeff() : r_(0), s_(1) {}
    ExactCoeff(BigRational r) : r_(std::move(r)), s_(1) {}
    ExactCoeff(BigRational r, BigRational s) : r_(std::move(r)), s_(std::move(s)) {
        if (s_ < 0) throw std::domain_error("ExactCoeff: negative radicand");
        canonicalize();
    }

    const BigRational& rational() const { return r_; }
    const BigRational& radicand() const { return s_; }

    /// Correctly rounded double value of r*sqrt(s).
    double value() const {
        using Float50 = boost::multiprecision::cpp_bin_float_50;
        Float50 v = Float50(boost::multiprecision::numerator(r_)) /
                    Float50(boost::multiprecision::denominator(r_));
        v *= sqrt(Float50(boost::multiprecision::numerator(s_)) /
                  Float50(boost::multiprecision::denominator(s_)));
        return v.convert_to<double>();
    }

    friend ExactCoeff operator*(const ExactCoeff& a, const ExactCoeff& b) {
        return ExactCoeff(a.r_ * b.r_, a.s_ * b.s_);
    }
    friend ExactCoeff operator*(const ExactCoeff& a, const BigRational& q) {
        ExactCoeff r = a;
        r.r_ *= q;
        if (r.r_ == 0) r.s_ = 1;
        return r;
    }
    friend ExactCoeff operator-(const ExactCoeff& a) {
        ExactCoeff r = a;
        r.r_ = -r.r_;
        return r;
    }
    friend bool operator==(const ExactCoeff& a, const ExactCoeff& b) {
        return a.r_ == b.r_ && a.s_ == b.s_;
    }

private:
    void canonicalize() {
        if (r_ == 0 || s_ == 0) {
            r_ = 0;
            s_ = 1;
            return;
        }
        // sqrt(p/q) = sqrt(p*q)/q; p, q coprime so their square parts split.
        auto [np, nrest] = detail::extract_square(boost::multiprecision::numerator(s_));
        auto [dp, drest] = detail::extract_square(boost::multiprecision::denominator(s_));
        r_ *= BigRational(np, dp);
        s_ = BigRational(nrest, drest);
    }

    BigRational r_;
    BigRational s_;
};

} // namespace angmom
