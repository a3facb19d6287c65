// Command-line front end: point evaluation, grid export, identity
// verification, Wigner-d dumps, and micro-benchmarks.
//
// Exit codes: 0 success, 1 verification failure, 2 usage/domain error.

#include <algorithm>
#include <chrono>
#include <cinttypes>
#include <complex>
#include <cstdint>
#include <cstdio>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <angmom/angmom.hpp>

namespace {

using namespace angmom;

constexpr double kPi = std::numbers::pi;

// Deterministic seeded sampling (splitmix64) so failures reproduce exactly.
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

HalfInt parse_half(const std::string& s) {
    const auto slash = s.find('/');
    if (slash != std::string::npos) {
        const int num = std::stoi(s.substr(0, slash));
        const int den = std::stoi(s.substr(slash + 1));
        if (den == 1) return HalfInt(num);
        if (den == 2) return HalfInt::from_twice(num);
        throw std::domain_error("half-integer denominator must be 1 or 2: " + s);
    }
    return HalfInt::from_double(std::stod(s));
}

// Methods with a negative power of sin(theta): undefined at the poles.
bool singular_at_poles(Method method, int m) {
    return (method == Method::Form1 && m < 0) || (method == Method::Form2 && m > 0);
}

struct EvalArgs {
    int l = 0, m = 0;
    double theta = 0.0, phi = 0.0;
    std::string method = "middle";
};

int run_eval(const EvalArgs& a) {
    const std::complex<double> y = ylm(a.l, a.m, a.theta, a.phi, parse_method(a.method));
    std::printf("%.17g %.17g\n", y.real() + 0.0, y.imag() + 0.0); // +0.0 folds away negative zero
    return 0;
}

struct GridArgs {
    int l = 0, m = 0;
    int ntheta = 0, nphi = 0;
    std::string method = "middle";
    std::string out;
};

int run_grid(const GridArgs& a) {
    const Method method = parse_method(a.method);
    if (a.ntheta < 1 || a.nphi < 1) throw std::domain_error("grid: ntheta and nphi must be >= 1");
    const double eps = singular_at_poles(method, a.m) ? 1e-6 : 0.0;
    const double lo = eps;
    const double hi = kPi - eps;

    std::FILE* f = std::fopen(a.out.c_str(), "wb");
    if (!f) throw std::domain_error("grid: cannot open output file: " + a.out);
    std::fprintf(f, "theta,phi,re,im\n");
    for (int i = 0; i < a.ntheta; ++i) {
        const double theta = (a.ntheta == 1) ? lo : lo + (hi - lo) * i / (a.ntheta - 1);
        for (int j = 0; j < a.nphi; ++j) {
            const double phi = 2.0 * kPi * j / a.nphi;
            const std::complex<double> y = ylm(a.l, a.m, theta, phi, method);
            std::fprintf(f, "%.17g,%.17g,%.17g,%.17g\n", theta, phi, y.real() + 0.0, y.imag() + 0.0);
        }
    }
    std::fclose(f);
    return 0;
}

struct VerifyArgs {
    int lmax = 5;
    int samples = 25;
    std::uint64_t seed = 0;
    double tolerance = 0.0; // 0 = per-check defaults
};

struct VerificationReport {
    std::string check;
    std::string l_range;
    long samples = 0;
    double max_dev = 0.0;
    double tolerance = 0.0;
    bool pass() const { return max_dev <= tolerance; }
};

// The three-factor product is compared against the series exponential over
// theta in [0, pi/2], where the comparison resolves the identity rather than
// the sec^(2l)(theta/2) cancellation floor of the factors (see README).
VerificationReport check_disentangling(const VerifyArgs& a, FactorOrder order) {
    SplitMix64 rng(a.seed + (order == FactorOrder::LDU ? 1 : 2));
    VerificationReport rep;
    rep.check = (order == FactorOrder::LDU) ? "disentangling-ldu" : "disentangling-udl";
    rep.l_range = "1/2..lmax";
    rep.tolerance = 1e-11; // scaled by 1/(2l+1)
    for (int twol = 1; twol <= 2 * a.lmax; ++twol) {
        const Rep r = build_rep(HalfInt::from_twice(twol));
        for (int s = 0; s < a.samples; ++s) {
            const double theta = rng.uniform() * kPi / 2;
            const double dev = max_abs_diff(disentangled_product(r, theta, order), exp_i_theta_ly(r, theta));
            rep.max_dev = std::max(rep.max_dev, dev / (twol + 1));
            ++rep.samples;
        }
    }
    return rep;
}

VerificationReport check_four_route(const VerifyArgs& a) {
    SplitMix64 rng(a.seed + 3);
    VerificationReport rep{"four-route", "0..lmax", 0, 0.0, 1e-10};
    for (int l = 0; l <= a.lmax; ++l) {
        const Rep r = build_rep(l);
        for (int s = 0; s < a.samples; ++s) {
            const double theta = 1e-3 + rng.uniform() * (kPi / 2 - 1e-3);
            const std::vector<double> row = ladder_matrix_element(r, theta);
            for (int m = -l; m <= l; ++m) {
                const double v[4] = {d_row_form1(l, m, theta), d_row_form2(l, m, theta),
                                     d_row_middle(l, m, theta), row[static_cast<std::size_t>(l - m)]};
                for (int i = 0; i < 4; ++i)
                    for (int j = i + 1; j < 4; ++j)
                        rep.max_dev = std::max(rep.max_dev, std::fabs(v[i] - v[j]));
                ++rep.samples;
            }
        }
    }
    return rep;
}

VerificationReport check_conjugation(const VerifyArgs& a) {
    SplitMix64 rng(a.seed + 4);
    VerificationReport rep{"conjugation", "0..lmax", 0, 0.0, 1e-11};
    for (int l = 0; l <= a.lmax; ++l) {
        for (int s = 0; s < a.samples; ++s) {
            const double theta = 1e-3 + rng.uniform() * (kPi - 2e-3);
            const double phi = rng.uniform() * 2.0 * kPi;
            for (int m = 0; m <= l; ++m) {
                const std::complex<double> lhs = ylm(l, -m, theta, phi, Method::Middle);
                const std::complex<double> rhs =
                    (m % 2 != 0 ? -1.0 : 1.0) * std::conj(ylm(l, m, theta, phi, Method::Middle));
                rep.max_dev = std::max(rep.max_dev, std::abs(lhs - rhs));
                ++rep.samples;
            }
        }
    }
    return rep;
}

VerificationReport check_parity(const VerifyArgs& a) {
    SplitMix64 rng(a.seed + 5);
    VerificationReport rep{"parity", "0..lmax", 0, 0.0, 1e-11};
    for (int l = 0; l <= a.lmax; ++l) {
        for (int s = 0; s < a.samples; ++s) {
            const double theta = 1e-3 + rng.uniform() * (kPi - 2e-3);
            const double phi = rng.uniform() * 2.0 * kPi;
            for (int m = -l; m <= l; ++m) {
                const std::complex<double> lhs = ylm(l, m, kPi - theta, phi + kPi, Method::Middle);
                const std::complex<double> rhs =
                    (l % 2 != 0 ? -1.0 : 1.0) * ylm(l, m, theta, phi, Method::Middle);
                rep.max_dev = std::max(rep.max_dev, std::abs(lhs - rhs));
                ++rep.samples;
            }
        }
    }
    return rep;
}

VerificationReport check_orthonormality(const VerifyArgs& a) {
    const int lg = std::min(a.lmax, 5);
    VerificationReport rep{"orthonormality", "0..=" + std::to_string(lg), 0, 0.0, 1e-10};
    const QuadratureRule rule = sphere_rule(lg + 1, 2 * lg + 2);
    std::vector<HarmonicSpec> basis;
    for (int l = 0; l <= lg; ++l)
        for (int m = -l; m <= l; ++m) basis.push_back({l, m, Method::Middle});
    for (std::size_t i = 0; i < basis.size(); ++i) {
        for (std::size_t j = i; j < basis.size(); ++j) {
            const std::complex<double> g = sphere_inner(basis[i], basis[j], rule);
            const double expected = (i == j) ? 1.0 : 0.0;
            rep.max_dev = std::max(rep.max_dev, std::abs(g - expected));
            ++rep.samples;
        }
    }
    return rep;
}

int run_verify(const VerifyArgs& a) {
    std::vector<VerificationReport> reports;
    reports.push_back(check_disentangling(a, FactorOrder::LDU));
    reports.push_back(check_disentangling(a, FactorOrder::UDL));
    reports.push_back(check_four_route(a));
    reports.push_back(check_conjugation(a));
    reports.push_back(check_parity(a));
    reports.push_back(check_orthonormality(a));

    if (a.tolerance > 0.0) {
        for (auto& r : reports) r.tolerance = a.tolerance;
    }
    std::printf("%-18s %-10s %9s %13s %10s  %s\n", "check", "l-range", "samples", "max-dev", "tol", "status");
    bool all = true;
    for (const auto& r : reports) {
        std::printf("%-18s %-10s %9ld %13.3e %10.1e  %s\n", r.check.c_str(), r.l_range.c_str(), r.samples,
                    r.max_dev, r.tolerance, r.pass() ? "pass" : "FAIL");
        all = all && r.pass();
    }
    return all ? 0 : 1;
}

struct WignerArgs {
    std::string l;
    double theta = 0.0;
    std::string mp, m;
};

int run_wigner(const WignerArgs& a) {
    const HalfInt l = parse_half(a.l);
    if (a.mp.empty() != a.m.empty()) throw std::domain_error("wigner-d: give both --mp and --m or neither");
    if (!a.mp.empty()) {
        std::printf("%.17g\n", wigner_d(l, parse_half(a.mp), parse_half(a.m), a.theta));
        return 0;
    }
    const Rep rep = build_rep(l);
    const CMatrix e = exp_i_theta_ly(rep, a.theta);
    std::printf("mp,m,value\n");
    for (int i = 0; i < rep.dim; ++i) {
        for (int j = 0; j < rep.dim; ++j) {
            std::printf("%g,%g,%.17g\n", rep.m_at(i).value(), rep.m_at(j).value(), e(i, j).real() + 0.0);
        }
    }
    return 0;
}

struct BenchArgs {
    int lmax = 3;
    int reps = 100;
};

int run_bench(const BenchArgs& a) {
    if (a.reps < 1) throw std::domain_error("bench: reps must be >= 1");
    constexpr int kBatch = 16;
    const double theta = 1.0, phi = 0.5;
    volatile double sink = 0.0;
    std::printf("method,l,median_ns\n");
    for (int l = 0; l <= a.lmax; ++l) {
        for (Method method : {Method::Form1, Method::Form2, Method::Middle, Method::Operator, Method::Legendre}) {
            std::vector<double> ns(static_cast<std::size_t>(a.reps));
            for (int r = 0; r < a.reps; ++r) {
                const auto t0 = std::chrono::steady_clock::now();
                for (int b = 0; b < kBatch; ++b) sink = sink + ylm(l, 0, theta, phi, method).real();
                const auto t1 = std::chrono::steady_clock::now();
                ns[static_cast<std::size_t>(r)] =
                    std::chrono::duration<double, std::nano>(t1 - t0).count() / kBatch;
            }
            std::nth_element(ns.begin(), ns.begin() + a.reps / 2, ns.end());
            std::printf("%s,%d,%" PRId64 "\n", method_name(method), l,
                        static_cast<std::int64_t>(ns[static_cast<std::size_t>(a.reps / 2)]));
        }
    }
    (void)sink;
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Spherical harmonics and rotation matrix elements via operator algebra"};
    app.require_subcommand(1);

    EvalArgs eval_args;
    auto* eval = app.add_subcommand("eval", "Evaluate Y_l^m(theta, phi); prints 're im'");
    eval->add_option("--l", eval_args.l, "Integer orbital quantum number")->required();
    eval->add_option("--m", eval_args.m, "Integer magnetic quantum number")->required();
    eval->add_option("--theta", eval_args.theta, "Polar angle in radians")->required();
    eval->add_option("--phi", eval_args.phi, "Azimuthal angle in radians");
    eval->add_option("--method", eval_args.method, "form1|form2|middle|operator|legendre");

    GridArgs grid_args;
    auto* grid = app.add_subcommand("grid", "Export Y_l^m on a theta x phi grid as CSV");
    grid->add_option("--l", grid_args.l)->required();
    grid->add_option("--m", grid_args.m)->required();
    grid->add_option("--ntheta", grid_args.ntheta, "Polar sample count")->required();
    grid->add_option("--nphi", grid_args.nphi, "Azimuthal sample count")->required();
    grid->add_option("--method", grid_args.method, "form1|form2|middle|operator|legendre");
    grid->add_option("--out", grid_args.out, "Output CSV path")->required();

    VerifyArgs verify_args;
    auto* verify = app.add_subcommand("verify", "Run the identity/property checks and report a table");
    verify->add_option("--lmax", verify_args.lmax)->check(CLI::NonNegativeNumber);
    verify->add_option("--samples", verify_args.samples)->check(CLI::PositiveNumber);
    verify->add_option("--seed", verify_args.seed);
    verify->add_option("--tolerance", verify_args.tolerance, "Override every check tolerance");

    WignerArgs wigner_args;
    auto* wig = app.add_subcommand("wigner-d", "Wigner d^l_{m'm}(theta) elements (half-integer l allowed)");
    wig->add_option("--l", wigner_args.l, "l as integer, decimal, or fraction (e.g. 3/2)")->required();
    wig->add_option("--theta", wigner_args.theta)->required();
    wig->add_option("--mp", wigner_args.mp, "Row index m'");
    wig->add_option("--m", wigner_args.m, "Column index m");

    BenchArgs bench_args;
    auto* bench = app.add_subcommand("bench", "Median ns per evaluation, per method and l");
    bench->add_option("--lmax", bench_args.lmax)->check(CLI::NonNegativeNumber);
    bench->add_option("--reps", bench_args.reps)->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (eval->parsed()) return run_eval(eval_args);
        if (grid->parsed()) return run_grid(grid_args);
        if (verify->parsed()) return run_verify(verify_args);
        if (wig->parsed()) return run_wigner(wigner_args);
        if (bench->parsed()) return run_bench(bench_args);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return 2;
}
