#pragma once

#include <functional>
#include <optional>
#include <string_view>
#include <utility>

#include "macroatlas/params.hpp"

namespace macroatlas {

struct Bracket {
    double lo = 0.0;
    double hi = 1.0;
    double tolX = 1e-12;
    double tolF = 1e-10;
    int maxIter = 200;
};

struct SolveReport {
    double root = 0.0;
    double residual = 0.0;
    int iterations = 0;
    bool converged = false;
};

struct SolveReport2D {
    std::pair<double, double> root;
    std::pair<double, double> residual;
    int iterations = 0;
    bool converged = false;
    bool usedFallback = false;
};

enum class RootMethod {
    Bisection,
    // Regula falsi steps, with a bisection step whenever the bracket fails to halve.
    SafeguardedSecant,
};

using Fn1D = std::function<double(double)>;
using Fn2D = std::function<std::pair<double, double>(double, double)>;

// Throws SolverError::NonBracketing when f(lo) and f(hi) share a sign and
// SolverError::NoConvergence when |f| never drops below tolF.
SolveReport findRoot1D(const Fn1D& f, const Bracket& bracket,
                       RootMethod method = RootMethod::SafeguardedSecant);

// Widens [lo, hi] geometrically until f changes sign: hi grows by the current
// width, lo halves its distance to floor (or steps down by the width when
// floor is -infinity). Throws SolverError::NoCrossing after maxExpansions.
Bracket expandBracket(const Fn1D& f, Bracket bracket, double floor, int maxExpansions = 60);

struct Box {
    double xlo, xhi, ylo, yhi;
};

struct Solve2DOptions {
    double tolF = 1e-10;
    int maxIter = 200;
    // Nested bisection region used when the Jacobian is singular or Newton stalls.
    std::optional<Box> fallback;
};

// Damped Newton with a central finite-difference Jacobian. F may return NaN
// to mark points outside its domain; such steps are halved.
SolveReport2D solve2D(const Fn2D& F, std::pair<double, double> start, const Solve2DOptions& opts = {});

// Nested bisection: outer over x in [xlo, xhi], inner solves F.second = 0 for y.
SolveReport2D solve2DNested(const Fn2D& F, const Box& box, double tolF = 1e-10, int maxIter = 200);

// Central-difference sensitivity of every EconState field to one Params field.
// A negative h gives the same estimate with the probes swapped.
EconState comparativeStatic(const std::function<EconState(const Params&)>& solve, const Params& base,
                            std::string_view field, double h);

}  // namespace macroatlas
