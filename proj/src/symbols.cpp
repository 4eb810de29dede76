#include "macroatlas/symbols.hpp"

#include <set>

#include "macroatlas/error.hpp"

namespace macroatlas {

SymbolRegistry::SymbolRegistry(std::vector<SymbolEntry> entries) : entries_(std::move(entries)) {
    std::set<std::string> keys;
    for (const auto& e : entries_)
        if (!keys.insert(e.key).second) throw ValidationError(e.key, "duplicate symbol key '" + e.key + "'");
}

const SymbolRegistry& SymbolRegistry::standard() {
    static const SymbolRegistry reg({
        {"-", "-", "Fixed", "", "notation:fixed", true},
        {"~", "~", "Changing", "", "notation:changing", true},
        {"I (income)", "I", "Income", "output units", "HouseholdChoice.cons", true},
        {"I(w1)", "I(w1)", "Income at wage rate 1", "output units", "curve:budgetLine", true},
        {"U (utility)", "U", "Utility level or utility indifference curve", "utils", "HouseholdChoice.utility", true},
        {"L (leisure)", "L", "Leisure hours", "hours", "HouseholdChoice.leisure", true},
        {"W (hours)", "W", "Hours worked", "hours", "HouseholdChoice.labor", true},
        {"W (nominal wage)", "W", "Nominal wage rate", "currency per hour", "op:nominalWage", true},
        {"w", "w", "Real wage rate (W/P)", "output per hour", "EconState.w", true},
        {"P", "P", "Price level", "price index", "EconState.P", true},
        {"I.E", "I.E", "Income effect", "hours", "SlutskyDecomposition.income", true},
        {"S.E", "S.E", "Substitution effect", "hours", "SlutskyDecomposition.substitution", true},
        {"L (labor)", "L", "Labor supplied or labor hours worked", "hours", "EconState.L", true},
        {"LS", "LS", "Supply of labor", "hours", "op:laborSupply", true},
        {"LD", "LD", "Demand for labor", "hours", "op:laborDemand", true},
        {"MCL", "MCL", "Marginal cost of labor", "output per hour", "curve:MCL", true},
        {"MPL", "MPL", "Marginal product of labor", "output per hour", "op:mpl", true},
        {"Y", "Y", "Output (income)", "output units", "EconState.Y", true},
        {"A", "A", "Technology level or total factor productivity", "output units", "Params.A", true},
        {"PF", "PF", "Production function", "output units", "op:production", true},
        {"MPL'", "MPL'", "Derivative of the marginal product of labor with respect to L", "output per hour squared",
         "op:mplSlope", true},
        {"MPK", "MPK", "Marginal product of capital", "output per capital unit", "op:mpk", true},
        {"MPK'", "MPK'", "Derivative of the marginal product of capital with respect to K",
         "output per capital unit squared", "op:mpkSlope", true},
        {"f", "f", "Function of (per-worker production f(k))", "output per worker", "op:intensiveOutput", true},
        {"δ", "δ", "Depreciation rate", "fraction per period", "Params.delta", true},
        {"k", "k", "Capital per worker (K/L)", "capital per worker", "curve:Solow.k", true},
        {"k*", "k*", "Steady-state k", "capital per worker", "SolowSolution.kStar", true},
        {"k-gold", "k-gold", "Golden-rule k", "capital per worker", "SolowSolution.kGold", true},
        {"n", "n", "Population growth rate", "fraction per period", "Params.n", true},
        {"s", "s", "Saving rate (S/Y)", "fraction", "Params.s", true},
        {"LRAS", "LRAS", "Long-run aggregate supply", "output units", "op:lrasOutput", true},
        {"SRAS", "SRAS", "Short-run aggregate supply", "output units", "op:srasOutput", true},
        {"AS", "AS", "Aggregate supply", "output units", "curve:AS", true},
        {"AD", "AD", "Aggregate demand", "output units", "op:adOutput", true},
        {"FE", "FE", "Full employment", "output units", "op:fullEmploymentOutput", true},
        {"Y⁻", "Y⁻", "Output level at full employment", "output units", "EconState.Ybar", true},
        {"PE", "PE", "Price expectation", "price index", "Params.PE", true},
        {"MS⁻", "MS⁻", "Money supply, set by the central bank", "currency", "Params.Ms", true},
        {"M0", "M0", "Currency in circulation plus bank reserves at the central bank", "currency", "", false},
        {"M1", "M1", "Currency in circulation plus checkable deposits", "currency", "", false},
        {"i", "i", "Nominal interest rate", "percent points", "EconState.i", true},
        {"r", "r", "Real interest rate", "percent points", "EconState.r", true},
        {"MD", "MD", "Money demand", "currency", "op:moneyDemand", true},
        {"LM", "LM", "Liquidity-money equilibrium curve", "percent points", "op:lmRate", true},
        {"L(Y, i)", "L(Y, i)", "Liquidity function", "output units", "op:liquidity", true},
        {"S", "S", "National saving", "output units", "EconState.Snat", true},
        {"I (investment)", "I", "National investment", "output units", "EconState.Ipriv", true},
        {"IS", "IS", "Investment-saving curve", "output units", "op:isOutput", true},
        {"K", "K", "Capital stock", "capital units", "Params.K", true},
        {"UC", "UC", "User cost of capital", "output per capital unit", "op:userCost", true},
        {"E", "E", "Expenditures", "output units", "op:plannedExpenditure", true},
        {"G", "G", "Government expenditures", "output units", "Params.G", true},
        {"I(r1)", "I(r1)", "Investment at the interest rate r1", "output units", "op:investmentDemand", true},
        {"C", "C", "Consumption", "output units", "EconState.C", true},
        {"π", "π", "Inflation rate", "fraction per period", "EconState.pi", true},
        {"U (unemployment)", "U", "Unemployment rate", "fraction", "EconState.Uu", true},
        {"U⁻", "U⁻", "Natural rate of unemployment", "fraction", "Params.Ubar", true},
        {"LRPC", "LRPC", "Long-run Phillips curve", "fraction", "curve:LRPC", true},
        {"SRPC", "SRPC", "Short-run Phillips curve", "fraction", "op:phillips", true},
    });
    return reg;
}

const SymbolEntry* SymbolRegistry::find(std::string_view key) const {
    for (const auto& e : entries_)
        if (e.key == key) return &e;
    return nullptr;
}

const SymbolEntry& SymbolRegistry::at(std::string_view key) const {
    if (const auto* e = find(key)) return *e;
    throw NotFoundError("unknown symbol '" + std::string(key) + "'");
}

std::vector<const SymbolEntry*> SymbolRegistry::withSymbol(std::string_view symbol) const {
    std::vector<const SymbolEntry*> out;
    for (const auto& e : entries_)
        if (e.symbol == symbol) out.push_back(&e);
    return out;
}

nlohmann::json toJson(const SymbolRegistry& reg) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& e : reg.entries())
        arr.push_back({{"key", e.key},
                       {"symbol", e.symbol},
                       {"description", e.description},
                       {"unit", e.unit},
                       {"owner", e.owner},
                       {"inScope", e.inScope}});
    return arr;
}

}  // namespace macroatlas
