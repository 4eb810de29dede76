#include "macroatlas/econ_core.hpp"

#include <cmath>
#include <string>

#include "macroatlas/error.hpp"

namespace macroatlas {

namespace {

void requirePositive(double v, const char* name) {
    if (!(v > 0)) throw ValidationError(name, std::string(name) + " must be positive");
}

void requireNonnegative(double v, const char* name) {
    if (!(v >= 0)) throw ValidationError(name, std::string(name) + " must be nonnegative");
}

}  // namespace

double production(double A, double K, double L, double alpha) {
    requireNonnegative(K, "K");
    requireNonnegative(L, "L");
    return A * std::pow(K, alpha) * std::pow(L, 1.0 - alpha);
}

double mpl(double A, double K, double L, double alpha) {
    requirePositive(L, "L");
    requireNonnegative(K, "K");
    return (1.0 - alpha) * A * std::pow(K / L, alpha);
}

double mpk(double A, double K, double L, double alpha) {
    requirePositive(K, "K");
    requireNonnegative(L, "L");
    return alpha * A * std::pow(L / K, 1.0 - alpha);
}

double mplSlope(double A, double K, double L, double alpha) {
    requirePositive(L, "L");
    requireNonnegative(K, "K");
    return -alpha * (1.0 - alpha) * A * std::pow(K / L, alpha) / L;
}

double mpkSlope(double A, double K, double L, double alpha) {
    requirePositive(K, "K");
    requireNonnegative(L, "L");
    return -alpha * (1.0 - alpha) * A * std::pow(L / K, 1.0 - alpha) / K;
}

double intensiveOutput(double A, double k, double alpha) {
    requireNonnegative(k, "k");
    return A * std::pow(k, alpha);
}

double consumption(double Y, double r, double c0, double c1, double T, double e) {
    return c0 + c1 * (Y - T) - e * r;
}

double investmentDemand(double r, double I0, double d) { return I0 - d * r; }

double plannedExpenditure(double Y, double r, double c0, double c1, double T, double e, double I0,
                          double d, double G) {
    return consumption(Y, r, c0, c1, T, e) + investmentDemand(r, I0, d) + G;
}

double liquidity(double Y, double i, double kY, double b) {
    requireNonnegative(Y, "Y");
    return kY * Y * std::exp(-b * i);
}

double moneyDemand(double P, double Y, double i, double kY, double b) {
    requirePositive(P, "P");
    return P * liquidity(Y, i, kY, b);
}

double userCost(double r, double delta, double pK) {
    if (r + delta < 0) throw ValidationError("r", "user cost requires r + delta >= 0");
    return (r + delta) * pK;
}

double capitalDemand(double uc, double L, double A, double alpha, double pK) {
    requirePositive(uc, "uc");
    requirePositive(L, "L");
    return L * std::pow(alpha * A * pK / uc, 1.0 / (1.0 - alpha));
}

double nominalWage(double w, double P) { return w * P; }

}  // namespace macroatlas
