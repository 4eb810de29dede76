#include "macroatlas/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "macroatlas/error.hpp"

namespace macroatlas {

namespace {

bool sameSign(double a, double b) { return (a > 0 && b > 0) || (a < 0 && b < 0); }

void checkBracket(const Bracket& b) {
    if (!(b.lo < b.hi)) throw ValidationError("lo", "bracket requires lo < hi");
    if (!(b.tolX > 0) || !(b.tolF > 0)) throw ValidationError("tol", "bracket tolerances must be positive");
    if (b.maxIter <= 0) throw ValidationError("maxIter", "bracket maxIter must be positive");
}

double maxAbs(std::pair<double, double> v) { return std::max(std::abs(v.first), std::abs(v.second)); }

bool finite(std::pair<double, double> v) { return std::isfinite(v.first) && std::isfinite(v.second); }

}  // namespace

SolveReport findRoot1D(const Fn1D& f, const Bracket& bracket, RootMethod method) {
    checkBracket(bracket);
    double lo = bracket.lo, hi = bracket.hi;
    double flo = f(lo), fhi = f(hi);
    if (!std::isfinite(flo) || !std::isfinite(fhi))
        throw SolverError(SolverError::Kind::NonBracketing, "function is not finite at the bracket ends");
    if (std::abs(flo) < bracket.tolF) return {lo, flo, 0, true};
    if (std::abs(fhi) < bracket.tolF) return {hi, fhi, 0, true};
    if (sameSign(flo, fhi))
        throw SolverError(SolverError::Kind::NonBracketing,
                          "f(lo) and f(hi) have the same sign on [" + std::to_string(lo) + ", " +
                              std::to_string(hi) + "]");

    bool forceBisect = method == RootMethod::Bisection;
    for (int iter = 1; iter <= bracket.maxIter; ++iter) {
        const double width = hi - lo;
        double x = 0.5 * (lo + hi);
        if (!forceBisect) {
            const double secant = lo - flo * width / (fhi - flo);
            if (secant > lo && secant < hi) x = secant;
        }
        if (x <= lo || x >= hi)
            throw SolverError(SolverError::Kind::NoConvergence, "bracket exhausted at floating-point resolution");
        const double fx = f(x);
        if (!std::isfinite(fx))
            throw SolverError(SolverError::Kind::NoConvergence, "function is not finite inside the bracket");
        if (std::abs(fx) < bracket.tolF) return {x, fx, iter, true};

        if (sameSign(fx, flo)) {
            lo = x;
            flo = fx;
        } else {
            hi = x;
            fhi = fx;
        }
        if (method == RootMethod::SafeguardedSecant) forceBisect = (hi - lo) > 0.5 * width;

        if (hi - lo < bracket.tolX)
            throw SolverError(SolverError::Kind::NoConvergence,
                              "bracket collapsed below tolX with residual " +
                                  std::to_string(std::min(std::abs(flo), std::abs(fhi))));
    }
    throw SolverError(SolverError::Kind::NoConvergence,
                      "no root within " + std::to_string(bracket.maxIter) + " iterations");
}

Bracket expandBracket(const Fn1D& f, Bracket bracket, double floor, int maxExpansions) {
    checkBracket(bracket);
    double flo = f(bracket.lo), fhi = f(bracket.hi);
    for (int k = 0; k <= maxExpansions; ++k) {
        if (std::isfinite(flo) && std::isfinite(fhi) && !sameSign(flo, fhi)) return bracket;
        const double width = bracket.hi - bracket.lo;
        bracket.lo = std::isfinite(floor) ? floor + 0.5 * (bracket.lo - floor) : bracket.lo - width;
        bracket.hi += width;
        flo = f(bracket.lo);
        fhi = f(bracket.hi);
    }
    throw SolverError(SolverError::Kind::NoCrossing, "no sign change found while widening the bracket");
}

SolveReport2D solve2DNested(const Fn2D& F, const Box& box, double tolF, int maxIter) {
    auto innerY = [&](double x) {
        Bracket inner{box.ylo, box.yhi, 1e-14, tolF, maxIter};
        return findRoot1D([&](double y) { return F(x, y).second; }, inner).root;
    };
    Bracket outer{box.xlo, box.xhi, 1e-14, tolF, maxIter};
    const auto rep = findRoot1D([&](double x) { return F(x, innerY(x)).first; }, outer);
    const double y = innerY(rep.root);
    const auto res = F(rep.root, y);
    SolveReport2D out;
    out.root = {rep.root, y};
    out.residual = res;
    out.iterations = rep.iterations;
    out.converged = maxAbs(res) < tolF;
    out.usedFallback = true;
    if (!out.converged)
        throw SolverError(SolverError::Kind::NoConvergence, "nested bisection residual above tolerance");
    return out;
}

SolveReport2D solve2D(const Fn2D& F, std::pair<double, double> start, const Solve2DOptions& opts) {
    auto giveUp = [&](SolverError::Kind kind, const std::string& why) -> SolveReport2D {
        if (opts.fallback) return solve2DNested(F, *opts.fallback, opts.tolF, opts.maxIter);
        throw SolverError(kind, why);
    };

    double x = start.first, y = start.second;
    auto fx = F(x, y);
    if (!finite(fx)) return giveUp(SolverError::Kind::NoConvergence, "start point outside the domain of F");

    for (int iter = 0; iter < opts.maxIter; ++iter) {
        if (maxAbs(fx) < opts.tolF) return {{x, y}, fx, iter, true, false};

        // Jacobian columns by central differences, one-sided if a probe leaves the domain.
        auto column = [&](double& var) {
            const double h = 1e-6 * std::max(1.0, std::abs(var));
            const double saved = var;
            var = saved + h;
            const auto up = F(x, y);
            var = saved - h;
            const auto down = F(x, y);
            var = saved;
            if (finite(up) && finite(down))
                return std::pair{(up.first - down.first) / (2 * h), (up.second - down.second) / (2 * h)};
            if (finite(up)) return std::pair{(up.first - fx.first) / h, (up.second - fx.second) / h};
            if (finite(down)) return std::pair{(fx.first - down.first) / h, (fx.second - down.second) / h};
            return std::pair{std::numeric_limits<double>::quiet_NaN(), 0.0};
        };
        const auto [j00, j10] = column(x);
        const auto [j01, j11] = column(y);
        const double det = j00 * j11 - j01 * j10;
        const double scale = std::max({std::abs(j00 * j11), std::abs(j01 * j10), 1e-300});
        if (!std::isfinite(det) || std::abs(det) < 1e-12 * scale)
            return giveUp(SolverError::Kind::SingularJacobian, "finite-difference Jacobian is singular");

        const double dx = -(j11 * fx.first - j01 * fx.second) / det;
        const double dy = -(-j10 * fx.first + j00 * fx.second) / det;

        const double norm = maxAbs(fx);
        bool accepted = false;
        for (double lambda = 1.0; lambda > 1e-12; lambda *= 0.5) {
            const double xn = x + lambda * dx, yn = y + lambda * dy;
            const auto fn = F(xn, yn);
            if (finite(fn) && maxAbs(fn) < norm) {
                x = xn;
                y = yn;
                fx = fn;
                accepted = true;
                break;
            }
        }
        if (!accepted) {
            if (maxAbs(fx) < opts.tolF) return {{x, y}, fx, iter, true, false};
            return giveUp(SolverError::Kind::NoConvergence, "damped Newton stalled");
        }
    }
    if (maxAbs(fx) < opts.tolF) return {{x, y}, fx, opts.maxIter, true, false};
    return giveUp(SolverError::Kind::NoConvergence, "damped Newton hit the iteration limit");
}

EconState comparativeStatic(const std::function<EconState(const Params&)>& solve, const Params& base,
                            std::string_view field, double h) {
    if (!(h != 0) || !std::isfinite(h)) throw ValidationError("h", "finite-difference step must be nonzero");
    Params up = base, down = base;
    setParam(up, field, getParam(base, field) + h);
    setParam(down, field, getParam(base, field) - h);
    const EconState hi = solve(up);
    const EconState lo = solve(down);
    EconState out;
    for (const auto& f : stateFields()) out.*(f.member) = (hi.*(f.member) - lo.*(f.member)) / (2 * h);
    return out;
}

}  // namespace macroatlas
