#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <iterator>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "algebra.hpp"
#include "exact.hpp"
#include "expm.hpp"
#include "half_int.hpp"

namespace angmom {

enum class Method { Form1, Form2, Middle, Operator, Legendre };

inline const char* method_name(Method m) {
    switch (m) {
        case Method::Form1: return "form1";
        case Method::Form2: return "form2";
        case Method::Middle: return "middle";
        case Method::Operator: return "operator";
        case Method::Legendre: return "legendre";
    }
    throw std::invalid_argument("unknown method");
}

inline Method parse_method(const std::string& s) {
    for (Method m : {Method::Form1, Method::Form2, Method::Middle, Method::Operator, Method::Legendre}) {
        if (s == method_name(m)) return m;
    }
    throw std::invalid_argument("unknown method: " + s + " (expected form1|form2|middle|operator|legendre)");
}

namespace detail {

inline constexpr long double pi_ld = std::numbers::pi_v<long double>;

inline long double to_ld(const BigInt& n) { return n.convert_to<long double>(); }

inline long double to_ld(const BigRational& q) {
    return to_ld(boost::multiprecision::numerator(q)) / to_ld(boost::multiprecision::denominator(q));
}

// Exact integer -> Real, accumulating 32-bit chunks (cpp_int cannot convert
// to __float128 directly).
template <typename Real>
Real big_to_real(const BigInt& n) {
    if (n == 0) return Real{};
    std::vector<std::uint32_t> chunks;
    boost::multiprecision::export_bits(n, std::back_inserter(chunks), 32);
    Real r{};
    for (const std::uint32_t c : chunks) r = r * Real{4294967296.0} + Real(c);
    return n < 0 ? -r : r;
}

template <typename Real>
Real big_to_real(const BigRational& q) {
    return big_to_real<Real>(boost::multiprecision::numerator(q)) /
           big_to_real<Real>(boost::multiprecision::denominator(q));
}

// sqrt at Real precision: correctly rounded long double root, then one
// Newton step (a second-order polish; exact inputs assumed well in range).
template <typename Real>
Real sqrt_real(Real x) {
    const Real x0 = static_cast<Real>(std::sqrt(static_cast<long double>(x)));
    if (x0 == Real{}) return x0;
    return (x0 + x / x0) / Real{2};
}

inline void check_lm(int l, int m, const char* who) {
    if (l < 0) throw std::domain_error(std::string(who) + ": l must be a nonnegative integer");
    if (m < -l || m > l) throw std::domain_error(std::string(who) + ": |m| > l");
}

inline void check_theta(double theta, const char* who) {
    if (!(theta >= 0.0) || theta > std::numbers::pi) {
        throw std::domain_error(std::string(who) + ": theta outside [0, pi]");
    }
}

// (sin theta)^m with the negative-m branch computed as exp(m ln sin theta);
// callers guarantee sin theta > 0 when m < 0.
inline long double sin_pow(long double sin_theta, int m) {
    if (m >= 0) return std::pow(sin_theta, static_cast<long double>(m));
    return std::exp(static_cast<long double>(m) * std::log(sin_theta));
}

} // namespace detail

/// d-row value <l,0|e^{i theta Ly}|l,m> by the closed sum with the lowering
/// factor on the left:
///   sum_{n=max(0,-m)}^{l-m} (-1/2)^{m+n} (sin t)^m (1-cos t)^n
///     * (l+m+n)!/((m+n)! n! (l-m-n)!) * sqrt((l-m)!/(l+m)!).
/// Singular (negative power of sin) at the endpoints when m < 0.
inline double d_row_form1(int l, int m, double theta) {
    using Real = detail::ProductReal;
    detail::check_lm(l, m, "d_row_form1");
    detail::check_theta(theta, "d_row_form1");
    if (m < 0 && (theta <= 0.0 || theta >= std::numbers::pi)) {
        throw std::domain_error("d_row_form1: singular at theta in {0, pi} for m < 0");
    }
    const long double t = static_cast<long double>(theta);
    // common prefactor; negative powers via exp(m ln sin theta)
    const Real sp = static_cast<Real>(detail::sin_pow(std::sin(t), m));
    const Real omc = Real{1} - static_cast<Real>(std::cos(t));
    const Real radical =
        detail::sqrt_real(detail::big_to_real<Real>(BigRational(factorial(l - m), factorial(l + m))));

    // The terms reach ~sec^|m|(theta/2) and cancel down to an order-one value,
    // so the alternating sum runs at extended precision.
    Real sum{};
    for (int n = std::max(0, -m); n <= l - m; ++n) {
        const BigRational ratio(factorial(l + m + n), factorial(m + n) * factorial(n) * factorial(l - m - n));
        Real term = ((m + n) % 2 != 0 ? Real{-1} : Real{1}) * detail::int_pow(Real{0.5}, m + n);
        term *= detail::int_pow(omc, n);
        term *= detail::big_to_real<Real>(ratio) * radical;
        sum += term;
    }
    return static_cast<double>(sp * sum);
}

/// Same matrix element by the reversed-order closed sum (raising factor on
/// the left); equals form 1 with m -> -m and an extra (-1)^m:
///   sum_{n=max(0,m)}^{l+m} (-1)^m (-1/2)^{n-m} (sin t)^{-m} (1-cos t)^n
///     * (l-m+n)!/((n-m)! n! (l+m-n)!) * sqrt((l+m)!/(l-m)!).
inline double d_row_form2(int l, int m, double theta) {
    using Real = detail::ProductReal;
    detail::check_lm(l, m, "d_row_form2");
    detail::check_theta(theta, "d_row_form2");
    if (m > 0 && (theta <= 0.0 || theta >= std::numbers::pi)) {
        throw std::domain_error("d_row_form2: singular at theta in {0, pi} for m > 0");
    }
    const long double t = static_cast<long double>(theta);
    const Real sp = static_cast<Real>(detail::sin_pow(std::sin(t), -m));
    const Real omc = Real{1} - static_cast<Real>(std::cos(t));
    const Real radical =
        detail::sqrt_real(detail::big_to_real<Real>(BigRational(factorial(l + m), factorial(l - m))));
    const Real phase = (m % 2 != 0) ? Real{-1} : Real{1};

    Real sum{};
    for (int n = std::max(0, m); n <= l + m; ++n) {
        const BigRational ratio(factorial(l - m + n), factorial(n - m) * factorial(n) * factorial(l + m - n));
        Real term = phase * ((n - m) % 2 != 0 ? Real{-1} : Real{1}) * detail::int_pow(Real{0.5}, n - m);
        term *= detail::int_pow(omc, n);
        term *= detail::big_to_real<Real>(ratio) * radical;
        sum += term;
    }
    return static_cast<double>(sp * sum);
}

/// The single-sum half-angle form (all powers nonnegative, so well defined on
/// the whole of [0, pi] for every m):
///   sum_k (-1)^k sin^{2k+|m|}(t/2) cos^{2l-2k-|m|}(t/2)
///     * l! sqrt((l+|m|)!(l-|m|)!) / (k!(l-|m|-k)!(|m|+k)!(l-k)!),
/// times (-1)^m when m > 0.
inline double d_row_middle(int l, int m, double theta) {
    detail::check_lm(l, m, "d_row_middle");
    detail::check_theta(theta, "d_row_middle");
    const int am = std::abs(m);
    const long double h = static_cast<long double>(theta) / 2.0L;
    const long double s = std::sin(h);
    const long double c = std::cos(h);
    const long double radical =
        std::sqrt(detail::to_ld(factorial(l + am)) * detail::to_ld(factorial(l - am)));

    long double sum = 0.0L;
    for (int k = 0; k <= l - am; ++k) {
        const BigRational ratio(factorial(l),
                                factorial(k) * factorial(l - am - k) * factorial(am + k) * factorial(l - k));
        long double term = (k % 2 != 0 ? -1.0L : 1.0L);
        term *= std::pow(s, static_cast<long double>(2 * k + am));
        term *= std::pow(c, static_cast<long double>(2 * l - 2 * k - am));
        term *= detail::to_ld(ratio) * radical;
        sum += term;
    }
    if (m > 0 && m % 2 != 0) sum = -sum;
    return static_cast<double>(sum);
}

/// Operator route: the m'=0 row of the rotation matrix, v[i] = <l,0|e^{i t Ly}|l,m_i>
/// for m_i = l..-l. Only integer l has an m'=0 row.
inline std::vector<double> ladder_matrix_element(const Rep& rep, double theta) {
    if (!rep.l.is_integer()) {
        throw std::domain_error("ladder_matrix_element: no m'=0 row for half-integer l");
    }
    const CMatrix e = exp_i_theta_ly(rep, theta);
    const int row = rep.index_of(HalfInt(0));
    std::vector<double> v(static_cast<std::size_t>(rep.dim));
    for (int j = 0; j < rep.dim; ++j) v[static_cast<std::size_t>(j)] = e(row, j).real();
    return v;
}

/// Associated Legendre function (no Condon-Shortley phase), m >= 0:
///   P_l^m(cos t) = (sin t)^m / 2^m * sum_n (-1)^n (l+m+n)!/((l-m-n)!(m+n)!n!) ((1-cos t)/2)^n.
inline double assoc_legendre(int l, int m, double theta) {
    if (m < 0) throw std::domain_error("assoc_legendre: m must be nonnegative");
    detail::check_lm(l, m, "assoc_legendre");
    detail::check_theta(theta, "assoc_legendre");
    const long double t = static_cast<long double>(theta);
    const long double half_omc = (1.0L - std::cos(t)) / 2.0L;
    long double sum = 0.0L;
    for (int n = 0; n <= l - m; ++n) {
        const BigRational ratio(factorial(l + m + n), factorial(l - m - n) * factorial(m + n) * factorial(n));
        long double term = (n % 2 != 0 ? -1.0L : 1.0L) * detail::to_ld(ratio);
        term *= std::pow(half_omc, static_cast<long double>(n));
        sum += term;
    }
    sum *= std::ldexp(1.0L, -m) * std::pow(std::sin(t), static_cast<long double>(m));
    return static_cast<double>(sum);
}

/// d^l_{m'm}(theta) = <l,m'|e^{i theta Ly}|l,m>, rows/columns in descending m.
inline double wigner_d(HalfInt l, HalfInt mp, HalfInt m, double theta) {
    const Rep rep = build_rep(l);
    const int r = rep.index_of(mp);
    const int c = rep.index_of(m);
    detail::check_theta(theta, "wigner_d");
    return exp_i_theta_ly(rep, theta)(r, c).real();
}

/// Y_l^m(theta, phi) = sqrt((2l+1)/4pi) e^{i m phi} <l,0|e^{i theta Ly}|l,m>,
/// evaluated by the chosen route. Half-integer l (or m) is rejected: the
/// north-pole state only overlaps the m'=0 member of integer-l multiplets.
inline std::complex<double> ylm(HalfInt l, HalfInt m, double theta, double phi,
                                Method method = Method::Middle) {
    if (!l.is_integer() || !m.is_integer()) {
        throw std::domain_error("ylm: l and m must be integers (no m'=0 row otherwise)");
    }
    const int li = l.as_integer();
    const int mi = m.as_integer();
    detail::check_lm(li, mi, "ylm");
    detail::check_theta(theta, "ylm");

    const long double norm = std::sqrt((2.0L * li + 1.0L) / (4.0L * detail::pi_ld));
    const long double arg = static_cast<long double>(mi) * static_cast<long double>(phi);
    const std::complex<double> phase(static_cast<double>(std::cos(arg)), static_cast<double>(std::sin(arg)));

    double d = 0.0;
    switch (method) {
        case Method::Form1: d = d_row_form1(li, mi, theta); break;
        case Method::Form2: d = d_row_form2(li, mi, theta); break;
        case Method::Middle: d = d_row_middle(li, mi, theta); break;
        case Method::Operator: {
            const Rep rep = build_rep(l);
            d = ladder_matrix_element(rep, theta)[static_cast<std::size_t>(rep.index_of(m))];
            break;
        }
        case Method::Legendre: {
            const int am = std::abs(mi);
            const long double ratio =
                std::sqrt(detail::to_ld(BigRational(factorial(li - am), factorial(li + am))));
            const double dm = (am % 2 != 0 ? -1.0 : 1.0) *
                              static_cast<double>(ratio * static_cast<long double>(assoc_legendre(li, am, theta)));
            const long double argp = static_cast<long double>(am) * static_cast<long double>(phi);
            const std::complex<double> pos =
                static_cast<double>(norm) * dm *
                std::complex<double>(static_cast<double>(std::cos(argp)), static_cast<double>(std::sin(argp)));
            if (mi >= 0) return pos;
            // Y_l^{-|m|} = (-1)^{|m|} conj(Y_l^{|m|})
            return (am % 2 != 0 ? -1.0 : 1.0) * std::conj(pos);
        }
    }
    return static_cast<double>(norm) * d * phase;
}

/// One term of the exact coefficient expansion of a d-row value.
struct HarmonicTerm {
    int n = 0;
    ExactCoeff coeff;
};

/// Exact-coefficient series for <l,0|e^{i theta Ly}|l,m>; form 1 sums
/// coeff(n) * (sin t)^m (1-cos t)^n, form 2 uses (sin t)^{-m}.
struct HarmonicTermSeries {
    int l = 0;
    int m = 0;
    int form = 1;
    std::vector<HarmonicTerm> terms;

    double eval(double theta) const {
        using Real = detail::ProductReal;
        detail::check_theta(theta, "HarmonicTermSeries::eval");
        const int sp_exp = (form == 1) ? m : -m;
        if (sp_exp < 0 && (theta <= 0.0 || theta >= std::numbers::pi)) {
            throw std::domain_error("HarmonicTermSeries::eval: singular at theta in {0, pi}");
        }
        const long double t = static_cast<long double>(theta);
        const Real sp = static_cast<Real>(detail::sin_pow(std::sin(t), sp_exp));
        const Real omc = Real{1} - static_cast<Real>(std::cos(t));
        Real sum{};
        for (const auto& term : terms) {
            Real coeff = detail::big_to_real<Real>(term.coeff.rational());
            if (term.coeff.radicand() != 1) {
                coeff *= detail::sqrt_real(detail::big_to_real<Real>(term.coeff.radicand()));
            }
            sum += coeff * detail::int_pow(omc, term.n);
        }
        return static_cast<double>(sp * sum);
    }
};

inline constexpr int exact_series_l_max = 30;

inline HarmonicTermSeries exact_term_series(int l, int m, int form) {
    detail::check_lm(l, m, "exact_term_series");
    if (form != 1 && form != 2) throw std::invalid_argument("exact_term_series: form must be 1 or 2");
    if (l > exact_series_l_max) throw std::domain_error("exact_term_series: l above exact-layer cap");

    HarmonicTermSeries series{l, m, form, {}};
    if (form == 1) {
        const BigRational radicand(factorial(l - m), factorial(l + m));
        for (int n = std::max(0, -m); n <= l - m; ++n) {
            BigRational r(factorial(l + m + n), factorial(m + n) * factorial(n) * factorial(l - m - n));
            r /= BigRational(BigInt(1) << (m + n));
            if ((m + n) % 2 != 0) r = -r;
            series.terms.push_back({n, ExactCoeff(r, radicand)});
        }
    } else {
        const BigRational radicand(factorial(l + m), factorial(l - m));
        for (int n = std::max(0, m); n <= l + m; ++n) {
            BigRational r(factorial(l - m + n), factorial(n - m) * factorial(n) * factorial(l + m - n));
            r /= BigRational(BigInt(1) << (n - m));
            if ((n - m) % 2 != 0) r = -r;
            if (m % 2 != 0) r = -r;
            series.terms.push_back({n, ExactCoeff(r, radicand)});
        }
    }
    return series;
}

} // namespace angmom
