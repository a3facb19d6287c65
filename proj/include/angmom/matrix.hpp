#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <type_traits>
#include <vector>

namespace angmom {

namespace detail {

template <typename T>
struct is_complex : std::false_type {};
template <typename R>
struct is_complex<std::complex<R>> : std::true_type {};

template <typename T>
T conj_scalar(const T& v) {
    if constexpr (is_complex<T>::value) {
        return std::conj(v);
    } else {
        return v;
    }
}

template <typename T>
auto abs_scalar(const T& v) {
    using std::abs;
    return abs(v);
}

} // namespace detail

/// Dense square matrix over a scalar type T (real or complex), row-major.
template <typename T>
class DenseMatrix {
public:
    DenseMatrix() = default;
    explicit DenseMatrix(int n) : n_(check_size(n)), a_(static_cast<std::size_t>(n) * n, T{}) {}

    static DenseMatrix identity(int n) {
        DenseMatrix m(n);
        for (int i = 0; i < n; ++i) m(i, i) = T{1};
        return m;
    }

    int size() const { return n_; }

    T& operator()(int r, int c) {
        check_index(r, c);
        return a_[static_cast<std::size_t>(r) * n_ + c];
    }
    const T& operator()(int r, int c) const {
        check_index(r, c);
        return a_[static_cast<std::size_t>(r) * n_ + c];
    }

    DenseMatrix& operator+=(const DenseMatrix& o) {
        check_same(o);
        for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
        return *this;
    }
    DenseMatrix& operator-=(const DenseMatrix& o) {
        check_same(o);
        for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
        return *this;
    }
    DenseMatrix& operator*=(const T& s) {
        for (auto& v : a_) v *= s;
        return *this;
    }

    friend DenseMatrix operator+(DenseMatrix a, const DenseMatrix& b) { return a += b; }
    friend DenseMatrix operator-(DenseMatrix a, const DenseMatrix& b) { return a -= b; }
    friend DenseMatrix operator*(DenseMatrix a, const T& s) { return a *= s; }
    friend DenseMatrix operator*(const T& s, DenseMatrix a) { return a *= s; }

    friend DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
        a.check_same(b);
        const int n = a.n_;
        DenseMatrix r(n);
        for (int i = 0; i < n; ++i) {
            for (int k = 0; k < n; ++k) {
                const T aik = a(i, k);
                if (aik == T{}) continue;
                for (int j = 0; j < n; ++j) r(i, j) += aik * b(k, j);
            }
        }
        return r;
    }

    DenseMatrix adjoint() const {
        DenseMatrix r(n_);
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) r(j, i) = detail::conj_scalar((*this)(i, j));
        return r;
    }

    DenseMatrix transpose() const {
        DenseMatrix r(n_);
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }

    /// Entrywise cast to another scalar type.
    template <typename U>
    DenseMatrix<U> cast() const {
        DenseMatrix<U> r(n_);
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) r(i, j) = static_cast<U>((*this)(i, j));
        return r;
    }

private:
    static int check_size(int n) {
        if (n < 0) throw std::invalid_argument("matrix size must be nonnegative");
        return n;
    }
    void check_index(int r, int c) const {
        if (r < 0 || c < 0 || r >= n_ || c >= n_) throw std::out_of_range("matrix index out of range");
    }
    void check_same(const DenseMatrix& o) const {
        if (n_ != o.n_) throw std::invalid_argument("matrix dimension mismatch");
    }

    int n_ = 0;
    std::vector<T> a_;
};

/// Carrier for all operator arithmetic: dense complex double matrix.
using CMatrix = DenseMatrix<std::complex<double>>;

/// Max row sum (infinity) norm.
template <typename T>
auto inf_norm(const DenseMatrix<T>& m) {
    using R = decltype(detail::abs_scalar(T{}));
    R best{};
    for (int i = 0; i < m.size(); ++i) {
        R row{};
        for (int j = 0; j < m.size(); ++j) row += detail::abs_scalar(m(i, j));
        best = std::max(best, row);
    }
    return best;
}

/// Largest entrywise absolute difference.
template <typename T>
double max_abs_diff(const DenseMatrix<T>& a, const DenseMatrix<T>& b) {
    if (a.size() != b.size()) throw std::invalid_argument("matrix dimension mismatch");
    double best = 0.0;
    for (int i = 0; i < a.size(); ++i)
        for (int j = 0; j < a.size(); ++j)
            best = std::max(best, static_cast<double>(detail::abs_scalar(a(i, j) - b(i, j))));
    return best;
}

} // namespace angmom
