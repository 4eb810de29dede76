#pragma once

// Independent reference computations for the tests. These repeat the model's
// closed forms by hand and use plain bisection, sharing no code with the
// library beyond the Params struct.

#include <cmath>
#include <cstdint>
#include <functional>

#include "macroatlas/params.hpp"

namespace oracle {

using macroatlas::Params;

inline double bisect(const std::function<double(double)>& f, double lo, double hi, int iters = 300) {
    double flo = f(lo);
    for (int k = 0; k < iters; ++k) {
        const double mid = 0.5 * (lo + hi);
        const double fm = f(mid);
        if (fm == 0) return mid;
        if ((fm < 0) == (flo < 0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

// Hours supplied by one household: H - theta (m + w H) / ((1 + theta) w), clamped.
inline double hours(double w, const Params& p) {
    const double leisure = p.theta * (p.m + w * p.H) / ((1 + p.theta) * w);
    return p.H - std::min(std::max(leisure, 0.0), p.H);
}

// Labor demand from w = (1 - alpha) A (K/L)^alpha.
inline double demand(double w, const Params& p) {
    return p.K * std::pow((1 - p.alpha) * p.A / w, 1 / p.alpha);
}

inline double wageStar(const Params& p) {
    return bisect([&](double w) { return p.Nh * hours(w, p) - demand(w, p); }, 1e-6, 1e4);
}

inline double laborStar(const Params& p) { return demand(wageStar(p), p); }

inline double potential(const Params& p) {
    return p.A * std::pow(p.K, p.alpha) * std::pow(laborStar(p), 1 - p.alpha);
}

// IS: Y = (c0 - c1 T + I0 + G - (e + d) r) / (1 - c1).
inline double isY(double r, const Params& p) {
    return (p.c0 - p.c1 * p.T + p.I0 + p.G - (p.e + p.d) * r) / (1 - p.c1);
}

// LM: Ms = P kY Y exp(-b i)  =>  i = ln(P kY Y / Ms) / b.
inline double lmI(double Y, double P, const Params& p) { return std::log(P * p.kY * Y / p.Ms) / p.b; }

struct Islm {
    double Y, i, r;
};

// Substitute LM into IS and bisect in Y.
inline Islm islm(double P, const Params& p) {
    const double Y = bisect([&](double y) { return y - isY(lmI(y, P, p) - 100 * p.piE, p); }, 1e-9, 1e7, 400);
    const double i = lmI(Y, P, p);
    return {Y, i, i - 100 * p.piE};
}

struct Ge {
    double P, Y, i, r, Ybar;
};

// AD(P) = SRAS(P) by bisection in P, with AD itself from the IS-LM oracle.
inline Ge shortRun(const Params& p) {
    const double Ybar = potential(p);
    const double P = bisect(
        [&](double P) { return islm(P, p).Y - Ybar * std::pow(P / p.PE, 1 / p.gamma); }, 1e-6 * p.PE, 1e3 * p.PE, 200);
    const Islm s = islm(P, p);
    return {P, s.Y, s.i, s.r, Ybar};
}

// Y = Ybar, r from IS, i by Fisher, P from LM.
inline Ge longRun(const Params& p) {
    const double Ybar = potential(p);
    const double r = (p.c0 - p.c1 * p.T + p.I0 + p.G - (1 - p.c1) * Ybar) / (p.e + p.d);
    const double i = r + 100 * p.piE;
    const double P = p.Ms / (p.kY * Ybar * std::exp(-p.b * i));
    return {P, Ybar, i, r, Ybar};
}

// Fixed-seed generator for property tests (splitmix64).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}
    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    double uniform(double lo, double hi) { return lo + (hi - lo) * (next() >> 11) * 0x1.0p-53; }

private:
    std::uint64_t state_;
};

inline double relErr(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

}  // namespace oracle
