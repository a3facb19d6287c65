// Acceptance suite: golden values and properties of the full pipeline, one
// pass/fail line per criterion. Exit status is the number of failures.
//
// Identity-comparison criteria (3, 5, 6, 9) draw seeded theta samples from
// (0, 7pi/8], where the implementation resolves the identities with margins
// of 1e3 and better; past theta ~ 2.9 the factored product and the closed
// sums hit their sec^(2l)(theta/2) cancellation floor at l = 10 and no fixed
// precision can verify anything (see README). Since every route is a
// polynomial in sin/cos(theta/2), agreement on an interval settles the
// identity everywhere. Range-pinned criteria (1, 2, 4, 7, 8) run on their
// full stated ranges.

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdint>
#include <cstdio>
#include <numbers>
#include <string>
#include <vector>

#include <angmom/angmom.hpp>

namespace {

using namespace angmom;

constexpr double kPi = std::numbers::pi;
constexpr double kThetaEnvelope = 7.0 * std::numbers::pi / 8.0;

struct SplitMix64 {
    std::uint64_t state;
    explicit SplitMix64(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        state += 0x9e3779b97f4a7c15ULL;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
};

struct Outcome {
    double max_dev = 0.0;
    double tol = 0.0;
    double limit_s = 0.0; // 0 = no runtime budget
};

int g_failures = 0;

void report(int id, const std::string& label, const Outcome& o, double elapsed_s) {
    const bool dev_ok = o.max_dev <= o.tol;
    const bool time_ok = o.limit_s <= 0.0 || elapsed_s < o.limit_s;
    const bool pass = dev_ok && time_ok;
    if (!pass) ++g_failures;
    std::printf("%s  criterion %2d: %-52s max dev %9.3e  tol %7.1e  %6.2fs%s\n", pass ? "PASS" : "FAIL",
                id, label.c_str(), o.max_dev, o.tol, elapsed_s,
                time_ok ? "" : " (over budget)");
}

template <typename F>
void run(int id, const std::string& label, F&& body) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        ++g_failures;
        std::printf("FAIL  criterion %2d: %-52s exception: %s\n", id, label.c_str(), e.what());
        return;
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    report(id, label, o, s);
}

Outcome golden_half() {
    Outcome o{0.0, 1e-14, 1.0};
    const Rep r = build_rep(HalfInt::from_twice(1));
    for (int i = 0; i < 100; ++i) {
        const double theta = kPi * i / 99;
        CMatrix expected(2);
        expected(0, 0) = std::cos(theta / 2);
        expected(0, 1) = std::sin(theta / 2);
        expected(1, 0) = -std::sin(theta / 2);
        expected(1, 1) = std::cos(theta / 2);
        o.max_dev = std::max(o.max_dev, max_abs_diff(exp_i_theta_ly(r, theta), expected));
    }
    return o;
}

Outcome golden_one() {
    Outcome o{0.0, 1e-13, 0.0};
    const Rep r = build_rep(1);
    for (int i = 0; i < 100; ++i) {
        const double theta = (kPi - 1e-3) * i / 99;
        const double c = std::cos(theta), s = std::sin(theta) / std::sqrt(2.0);
        CMatrix expected(3);
        expected(0, 0) = (1 + c) / 2;
        expected(0, 1) = s;
        expected(0, 2) = (1 - c) / 2;
        expected(1, 0) = -s;
        expected(1, 1) = c;
        expected(1, 2) = s;
        expected(2, 0) = (1 - c) / 2;
        expected(2, 1) = -s;
        expected(2, 2) = (1 + c) / 2;
        o.max_dev =
            std::max(o.max_dev, max_abs_diff(disentangled_product(r, theta, FactorOrder::LDU), expected));
    }
    return o;
}

Outcome disentangling_at_scale() {
    Outcome o{0.0, 1e-11, 10.0}; // deviation scaled by 1/(2l+1)
    SplitMix64 rng(0);
    for (int twol = 1; twol <= 20; ++twol) {
        const Rep r = build_rep(HalfInt::from_twice(twol));
        for (int s = 0; s < 25; ++s) {
            const double theta = rng.uniform() * kThetaEnvelope;
            const CMatrix e = exp_i_theta_ly(r, theta);
            for (FactorOrder order : {FactorOrder::LDU, FactorOrder::UDL}) {
                const double dev = max_abs_diff(disentangled_product(r, theta, order), e);
                o.max_dev = std::max(o.max_dev, dev / (twol + 1));
            }
        }
    }
    return o;
}

Outcome worked_example() {
    Outcome o{0.0, 1e-12, 0.0};
    SplitMix64 rng(0);
    const double norm = 0.34549414947133547; // sqrt(3/(8 pi))
    for (int s = 0; s < 100; ++s) {
        const double theta = 1e-3 + rng.uniform() * (kPi - 2e-3);
        const double phi = rng.uniform() * 2 * kPi;
        const std::complex<double> expected =
            norm * std::sin(theta) * std::complex<double>(std::cos(phi), -std::sin(phi));
        for (Method method : {Method::Form1, Method::Form2, Method::Middle, Method::Operator,
                              Method::Legendre}) {
            o.max_dev = std::max(o.max_dev, std::abs(ylm(1, -1, theta, phi, method) - expected));
        }
    }
    return o;
}

Outcome four_route() {
    Outcome o{0.0, 1e-10, 30.0};
    SplitMix64 rng(0);
    for (int l = 0; l <= 10; ++l) {
        const Rep rep = build_rep(l);
        for (int s = 0; s < 25; ++s) {
            const double theta = 1e-3 + rng.uniform() * (kThetaEnvelope - 1e-3);
            const auto row = ladder_matrix_element(rep, theta);
            for (int m = -l; m <= l; ++m) {
                const double v[4] = {d_row_form1(l, m, theta), d_row_form2(l, m, theta),
                                     d_row_middle(l, m, theta), row[static_cast<std::size_t>(l - m)]};
                for (int i = 0; i < 4; ++i)
                    for (int j = i + 1; j < 4; ++j)
                        o.max_dev = std::max(o.max_dev, std::fabs(v[i] - v[j]));
            }
        }
    }
    return o;
}

Outcome vandermonde_equivalence() {
    Outcome o{0.0, 1e-11, 0.0};
    SplitMix64 rng(0);
    for (int l = 0; l <= 10; ++l) {
        for (int m = 1; m <= l; ++m) {
            for (int s = 0; s < 25; ++s) {
                const double theta = 1e-3 + rng.uniform() * (kThetaEnvelope - 1e-3);
                const double sign = (m % 2 != 0) ? -1.0 : 1.0;
                o.max_dev = std::max(
                    o.max_dev, std::fabs(d_row_form1(l, -m, theta) - sign * d_row_form1(l, m, theta)));
            }
        }
    }
    return o;
}

Outcome conjugation_parity() {
    Outcome o{0.0, 1e-11, 0.0};
    SplitMix64 rng(0);
    for (int l = 0; l <= 10; ++l) {
        for (int s = 0; s < 25; ++s) {
            const double theta = 1e-3 + rng.uniform() * (kPi - 2e-3);
            const double phi = rng.uniform() * 2 * kPi;
            for (int m = 0; m <= l; ++m) {
                const std::complex<double> plus = ylm(l, m, theta, phi, Method::Middle);
                const std::complex<double> minus = ylm(l, -m, theta, phi, Method::Middle);
                o.max_dev =
                    std::max(o.max_dev, std::abs(minus - (m % 2 != 0 ? -1.0 : 1.0) * std::conj(plus)));
            }
            for (int m = -l; m <= l; ++m) {
                const std::complex<double> direct = ylm(l, m, theta, phi, Method::Middle);
                const std::complex<double> mirrored = ylm(l, m, kPi - theta, phi + kPi, Method::Middle);
                o.max_dev =
                    std::max(o.max_dev, std::abs(mirrored - (l % 2 != 0 ? -1.0 : 1.0) * direct));
            }
        }
    }
    return o;
}

Outcome orthonormality() {
    Outcome o{0.0, 1e-10, 5.0};
    std::vector<HarmonicSpec> basis;
    for (int l = 0; l <= 5; ++l)
        for (int m = -l; m <= l; ++m) basis.push_back({l, m, Method::Middle});
    const QuadratureRule rule = sphere_rule(6, 12);
    for (std::size_t i = 0; i < basis.size(); ++i) {
        for (std::size_t j = i; j < basis.size(); ++j) {
            const std::complex<double> g = sphere_inner(basis[i], basis[j], rule);
            o.max_dev = std::max(o.max_dev, std::abs(g - (i == j ? 1.0 : 0.0)));
        }
    }
    return o;
}

Outcome exact_layer() {
    Outcome o{0.0, 1e-12, 0.0};
    SplitMix64 rng(0);
    for (int l = 0; l <= 10; ++l) {
        for (int m = -l; m <= l; ++m) {
            const auto s1 = exact_term_series(l, m, 1);
            const auto s2 = exact_term_series(l, m, 2);
            for (int s = 0; s < 25; ++s) {
                const double theta = 1e-3 + rng.uniform() * (kThetaEnvelope - 1e-3);
                o.max_dev = std::max(o.max_dev, std::fabs(s1.eval(theta) - d_row_form1(l, m, theta)));
                o.max_dev = std::max(o.max_dev, std::fabs(s2.eval(theta) - d_row_form2(l, m, theta)));
            }
        }
    }
    // the single l=1, m=1 coefficient is exactly -1 * sqrt(1/2)
    const auto series = exact_term_series(1, 1, 1);
    const bool exact_ok = series.terms.size() == 1 && series.terms[0].coeff.rational() == BigRational(-1) &&
                          series.terms[0].coeff.radicand() == BigRational(1, 2);
    if (!exact_ok) o.max_dev = 1.0;
    return o;
}

Outcome integer_gate() {
    Outcome o{1.0, 0.5, 0.0}; // max_dev 0 iff both rejections fire
    bool ladder_rejected = false, ylm_rejected = false;
    try {
        ladder_matrix_element(build_rep(HalfInt::from_twice(1)), 1.0);
    } catch (const std::domain_error&) {
        ladder_rejected = true;
    }
    try {
        ylm(HalfInt::from_twice(1), HalfInt::from_twice(1), 1.0, 0.0);
    } catch (const std::domain_error&) {
        ylm_rejected = true;
    }
    o.max_dev = (ladder_rejected && ylm_rejected) ? 0.0 : 1.0;
    return o;
}

} // namespace

int main() {
    run(1, "golden l=1/2 rotation vs exp_i_theta_ly", golden_half);
    run(2, "golden l=1 LDU product vs closed 3x3 form", golden_one);
    run(3, "disentangling identity, l <= 10, both orders", disentangling_at_scale);
    run(4, "Y_1^-1 = sqrt(3/8pi) e^{-i phi} sin(theta), all methods", worked_example);
    run(5, "four-route agreement, l <= 10, all m", four_route);
    run(6, "negative-m form1 = (-1)^|m| positive-m form1", vandermonde_equivalence);
    run(7, "conjugation and parity symmetries, l <= 10", conjugation_parity);
    run(8, "orthonormality of all Y_l^m, l <= 5", orthonormality);
    run(9, "exact coefficient layer tracks the double routes", exact_layer);
    run(10, "half-integer l rejected by ladder_matrix_element/ylm", integer_gate);

    if (g_failures == 0) {
        std::printf("all acceptance criteria passed\n");
    } else {
        std::printf("%d acceptance criteria FAILED\n", g_failures);
    }
    return g_failures;
}
