#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>

#include "half_int.hpp"
#include "matrix.hpp"

namespace angmom {

enum class LadderDir { Raise, Lower };

/// Matrix element of the raising/lowering operator within the l multiplet:
/// L+|l,m> = sqrt((l-m)(l+m+1)) |l,m+1>,  L-|l,m> = sqrt((l+m)(l-m+1)) |l,m-1>.
inline double ladder_coeff(HalfInt l, HalfInt m, LadderDir dir) {
    if (l.twice() < 0) throw std::domain_error("ladder_coeff: l must be nonnegative");
    if (abs(m).twice() > l.twice()) throw std::domain_error("ladder_coeff: |m| > l");
    if ((l - m).twice() % 2 != 0) throw std::domain_error("ladder_coeff: l - m must be an integer");
    const double lv = l.value();
    const double mv = m.value();
    const double prod = (dir == LadderDir::Raise) ? (lv - mv) * (lv + mv + 1.0)
                                                  : (lv + mv) * (lv - mv + 1.0);
    return std::sqrt(prod);
}

/// The (2l+1)-dimensional representation of the angular momentum algebra
/// (hbar = 1), basis ordered by descending m: |l,l>, |l,l-1>, ..., |l,-l>.
struct Rep {
    HalfInt l;
    int dim = 0;
    CMatrix Lz, Lp, Lm;

    /// Row/column index of |l,m> in the descending-m basis.
    int index_of(HalfInt m) const {
        if (abs(m).twice() > l.twice() || (l - m).twice() % 2 != 0)
            throw std::domain_error("m outside the l multiplet");
        return (l - m).twice() / 2;
    }
    HalfInt m_at(int idx) const { return HalfInt::from_twice(l.twice() - 2 * idx); }
};

inline Rep build_rep(HalfInt l) {
    if (l.twice() < 0) throw std::domain_error("build_rep: l must be nonnegative");
    Rep r;
    r.l = l;
    r.dim = l.twice() + 1;
    r.Lz = CMatrix(r.dim);
    r.Lp = CMatrix(r.dim);
    r.Lm = CMatrix(r.dim);
    for (int i = 0; i < r.dim; ++i) {
        const HalfInt m = r.m_at(i);
        r.Lz(i, i) = m.value();
        if (i > 0) r.Lp(i - 1, i) = ladder_coeff(l, m, LadderDir::Raise);
        if (i + 1 < r.dim) r.Lm(i + 1, i) = ladder_coeff(l, m, LadderDir::Lower);
    }
    return r;
}

/// Lx = (L+ + L-)/2
inline CMatrix lx(const Rep& r) { return (r.Lp + r.Lm) * std::complex<double>(0.5, 0.0); }

/// Ly = (L+ - L-)/(2i)
inline CMatrix ly(const Rep& r) { return (r.Lp - r.Lm) * std::complex<double>(0.0, -0.5); }

inline CMatrix commutator(const CMatrix& a, const CMatrix& b) {
    if (a.size() != b.size()) throw std::invalid_argument("commutator: dimension mismatch");
    return a * b - b * a;
}

} // namespace angmom
