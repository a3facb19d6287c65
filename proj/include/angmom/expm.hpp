#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>

#include "algebra.hpp"
#include "matrix.hpp"

namespace angmom {

enum class FactorOrder { LDU, UDL };

/// Scalars of a 2x2 Gauss factorization:
/// LDU:  M = [[1,0],[a,1]] * diag(b,c) * [[1,d],[0,1]]
/// UDL:  M = [[1,a],[0,1]] * diag(b,c) * [[1,0],[d,1]]
struct GaussFactors {
    std::complex<double> a, b, c, d;
};

/// Coefficients of one factored exponential of i*theta*Ly:
/// LDU:  exp(xi_minus*L-) * exp(lambda_z*Lz) * exp(xi_plus*L+)
/// UDL:  exp(xi_plus*L+) * exp(lambda_z*Lz) * exp(xi_minus*L-)
struct DisentanglingParams {
    FactorOrder order = FactorOrder::LDU;
    double xi_minus = 0.0;
    double lambda_z = 0.0;
    double xi_plus = 0.0;
    double theta = 0.0;
};

namespace detail {

template <typename T>
struct GaussScalars {
    T a, b, c, d;
};

// Shared 2x2 Gauss elimination over any field scalar.
template <typename T>
GaussScalars<T> gauss2x2(const T& m00, const T& m01, const T& m10, const T& m11, FactorOrder order) {
    if (order == FactorOrder::LDU) {
        if (m00 == T{}) throw std::domain_error("gauss_decompose_2x2: singular pivot M[0,0] = 0");
        const T a = m10 / m00;
        const T d = m01 / m00;
        return {a, m00, m11 - m10 * d, d};
    }
    if (m11 == T{}) throw std::domain_error("gauss_decompose_2x2: singular pivot M[1,1] = 0");
    const T ap = m01 / m11;
    const T dp = m10 / m11;
    return {ap, m00 - m01 * dp, m11, dp};
}

// Terminating exponential series of a nilpotent ladder matrix:
// sum_{k=0}^{dim-1} alpha^k L^k / k!.
template <typename Real>
DenseMatrix<Real> exp_ladder_series(Real alpha, const DenseMatrix<Real>& ladder) {
    const int dim = ladder.size();
    auto total = DenseMatrix<Real>::identity(dim);
    auto term = DenseMatrix<Real>::identity(dim);
    for (int k = 1; k < dim; ++k) {
        term = term * ladder * (alpha / static_cast<Real>(k));
        total += term;
    }
    return total;
}

// Norm-controlled scaling-and-squaring exponential. The Taylor tail is summed
// until its inf-norm falls below 1e-20 (tighter than the 1e-16 contract), then
// the result is squared back.
template <typename T>
DenseMatrix<T> expm_series(const DenseMatrix<T>& a) {
    const int dim = a.size();
    const auto norm = inf_norm(a);
    int squarings = 0;
    if (norm > 0.5) squarings = static_cast<int>(std::ceil(std::log2(static_cast<double>(norm) / 0.5)));
    T scale = T{1};
    for (int i = 0; i < squarings; ++i) scale *= T{static_cast<decltype(norm)>(0.5)};
    const DenseMatrix<T> b = a * scale;

    auto total = DenseMatrix<T>::identity(dim);
    auto term = DenseMatrix<T>::identity(dim);
    for (int k = 1; k <= 64; ++k) {
        term = term * b * (T{1} / T{static_cast<decltype(norm)>(k)});
        total += term;
        if (static_cast<double>(inf_norm(term)) <= 1e-20) break;
    }
    for (int i = 0; i < squarings; ++i) total = total * total;
    return total;
}

template <typename Real>
struct DisParams {
    Real xi_minus, xi_plus;
    Real diag_ratio; // e^{lambda_z} = b/c of the 2x2 factorization
};

// Derive the disentangling coefficients at runtime by Gauss-factorizing the
// 2x2 rotation exp(i*theta*Ly) in the defining representation, then reading
// the Lie-algebra coefficients off the unit-triangular and diagonal factors:
// exp(x*L-) = [[1,0],[x,1]], exp(x*L+) = [[1,x],[0,1]], exp(b*Lz) = diag(e^{b/2}, e^{-b/2}).
template <typename Real>
DisParams<Real> disentangling_params_impl(Real theta, FactorOrder order) {
    const Real c = std::cos(theta / 2);
    const Real s = std::sin(theta / 2);
    const auto f = gauss2x2<Real>(c, s, -s, c, order);
    if (order == FactorOrder::LDU) {
        return {f.a, f.d, f.b / f.c};
    }
    return {f.d, f.a, f.b / f.c};
}

template <typename Real>
Real int_pow(Real base, int e) {
    if (e < 0) return Real{1} / int_pow(base, -e);
    Real r{1};
    while (e > 0) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

// diag((b/c)^m) for m = l..-l, as integer powers of the square root of the
// factor ratio; avoids the log/exp round trip on the diagonal.
template <typename Real>
DenseMatrix<Real> diag_ratio_powers(Real root, const Rep& rep) {
    DenseMatrix<Real> d(rep.dim);
    for (int i = 0; i < rep.dim; ++i) d(i, i) = int_pow(root, rep.m_at(i).twice());
    return d;
}

// Widest hardware-independent real available for the factored-product chain.
// The three-factor product cancels terms of size sec^(2l)(theta/2) down to
// order-one entries; binary128 arithmetic keeps that cancellation exact far
// past every tolerance in use. Inputs are well conditioned, so feeding it
// long double trigonometry loses nothing.
#if defined(__SIZEOF_FLOAT128__) && !defined(__clang__)
using ProductReal = __float128;
#else
using ProductReal = long double;
#endif

// Real copies of the ladder matrices of a Rep.
template <typename Real>
DenseMatrix<Real> ladder_real(const CMatrix& m) {
    DenseMatrix<Real> r(m.size());
    for (int i = 0; i < m.size(); ++i)
        for (int j = 0; j < m.size(); ++j) r(i, j) = static_cast<Real>(m(i, j).real());
    return r;
}

inline DenseMatrix<long double> ladder_ld(const CMatrix& m) { return ladder_real<long double>(m); }

// sqrt of an exact small integer at Real precision: the correctly rounded
// long double root plus one Newton step (quadratic convergence makes the
// result correctly rounded at binary128 too).
template <typename Real>
Real sqrt_int(long long n) {
    const Real x0 = static_cast<Real>(std::sqrt(static_cast<long double>(n)));
    if (x0 == Real{}) return x0;
    return (x0 + static_cast<Real>(n) / x0) / Real{2};
}

// Ladder matrices regenerated at Real precision from the exact integer
// products (l-+m)(l+-m+1); the double-rounded entries stored in Rep would
// perturb the algebra at 1e-16 relative, which the factored product
// amplifies by sec^2(theta/2).
template <typename Real>
DenseMatrix<Real> ladder_refined(const Rep& rep, LadderDir dir) {
    DenseMatrix<Real> m(rep.dim);
    const long long tl = rep.l.twice();
    for (int col = 0; col < rep.dim; ++col) {
        const long long tm = rep.m_at(col).twice();
        if (dir == LadderDir::Raise && col > 0) {
            m(col - 1, col) = sqrt_int<Real>((tl - tm) / 2 * ((tl + tm) / 2 + 1));
        }
        if (dir == LadderDir::Lower && col + 1 < rep.dim) {
            m(col + 1, col) = sqrt_int<Real>((tl + tm) / 2 * ((tl - tm) / 2 + 1));
        }
    }
    return m;
}

template <typename Real>
CMatrix to_cmatrix(const DenseMatrix<Real>& m) {
    CMatrix r(m.size());
    for (int i = 0; i < m.size(); ++i)
        for (int j = 0; j < m.size(); ++j) r(i, j) = static_cast<double>(m(i, j));
    return r;
}

inline DenseMatrix<long double> exp_diag_ld(long double beta, const Rep& rep) {
    DenseMatrix<long double> r(rep.dim);
    for (int i = 0; i < rep.dim; ++i) {
        r(i, i) = std::exp(beta * static_cast<long double>(rep.m_at(i).twice()) / 2.0L);
    }
    return r;
}

inline void check_disentangling_range(double theta) {
    if (!(theta >= 0.0) || theta >= std::acos(-1.0)) {
        throw std::range_error("disentangling requires theta in [0, pi): tan(theta/2) is singular at pi");
    }
}

} // namespace detail

/// Factor an invertible 2x2 matrix into unit-triangular and diagonal parts.
/// LDU needs M[0,0] != 0, UDL needs M[1,1] != 0 (for the i*theta*Ly rotation
/// both pivots vanish exactly at theta = pi).
inline GaussFactors gauss_decompose_2x2(const CMatrix& m, FactorOrder order) {
    if (m.size() != 2) throw std::invalid_argument("gauss_decompose_2x2: matrix must be 2x2");
    const auto f = detail::gauss2x2<std::complex<double>>(m(0, 0), m(0, 1), m(1, 0), m(1, 1), order);
    return {f.a, f.b, f.c, f.d};
}

/// exp(alpha * L+-): terminating series with exactly 2l+1 terms, unit triangular.
inline CMatrix exp_ladder(double alpha, LadderDir which, const Rep& rep) {
    const auto ladder = detail::ladder_ld(which == LadderDir::Raise ? rep.Lp : rep.Lm);
    return detail::to_cmatrix(detail::exp_ladder_series<long double>(alpha, ladder));
}

/// exp(beta * Lz): diagonal with entries e^{beta*m}, m = l..-l.
inline CMatrix exp_diag(double beta, const Rep& rep) {
    return detail::to_cmatrix(detail::exp_diag_ld(static_cast<long double>(beta), rep));
}

/// Reference exponential of i*theta*Ly. The generator i*Ly = (L+ - L-)/2 is
/// real antisymmetric in this basis, so the result is real orthogonal.
inline CMatrix exp_i_theta_ly(const Rep& rep, double theta) {
    auto gen = detail::ladder_refined<long double>(rep, LadderDir::Raise);
    gen -= detail::ladder_refined<long double>(rep, LadderDir::Lower);
    gen *= static_cast<long double>(theta) / 2.0L;
    return detail::to_cmatrix(detail::expm_series(gen));
}

/// General dense complex matrix exponential (scaling and squaring).
inline CMatrix expm(const CMatrix& a) {
    using CL = std::complex<long double>;
    return detail::expm_series(a.cast<CL>()).cast<std::complex<double>>();
}

/// Disentangling coefficients for exp(i*theta*Ly), derived from the 2x2
/// factorization at runtime (the closed forms -tan(theta/2), ln cos^2(theta/2),
/// tan(theta/2) serve as the independent test oracle).
inline DisentanglingParams disentangling_params(double theta, FactorOrder order) {
    detail::check_disentangling_range(theta);
    const auto p = detail::disentangling_params_impl<long double>(static_cast<long double>(theta), order);
    return {order, static_cast<double>(p.xi_minus), static_cast<double>(std::log(p.diag_ratio)),
            static_cast<double>(p.xi_plus), theta};
}

/// The three-factor disentangled exponential:
/// LDU: exp(xi_minus*L-) exp(lambda_z*Lz) exp(xi_plus*L+),  UDL reversed.
/// Equals exp_i_theta_ly for every representation.
inline CMatrix disentangled_product(const Rep& rep, double theta, FactorOrder order) {
    using Real = detail::ProductReal;
    detail::check_disentangling_range(theta);
    const auto p = detail::disentangling_params_impl<long double>(static_cast<long double>(theta), order);
    const auto lower = detail::exp_ladder_series<Real>(static_cast<Real>(p.xi_minus),
                                                       detail::ladder_refined<Real>(rep, LadderDir::Lower));
    const auto diag = detail::diag_ratio_powers<Real>(static_cast<Real>(std::sqrt(p.diag_ratio)), rep);
    const auto upper = detail::exp_ladder_series<Real>(static_cast<Real>(p.xi_plus),
                                                       detail::ladder_refined<Real>(rep, LadderDir::Raise));
    const auto prod = (order == FactorOrder::LDU) ? lower * (diag * upper) : upper * (diag * lower);
    return detail::to_cmatrix(prod);
}

} // namespace angmom
