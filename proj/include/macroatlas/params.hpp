#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <string_view>

#include <json.hpp>

namespace macroatlas {

using json = nlohmann::json;

// Every exogenous symbol of the model economy. Interest rates used in the
// IS-LM blocks (i, r) are percent points; delta, n, s, piE, Ubar are fractions.
struct Params {
    // technology
    double alpha = 0.5;   // capital share
    double A = 1.0;       // total factor productivity
    double K = 10000.0;   // aggregate capital stock
    double delta = 0.08;  // depreciation rate
    double n = 0.02;      // population growth rate
    double s = 0.2;       // saving rate (Solow)
    // households
    double theta = 1.0;   // leisure preference weight
    double H = 16.0;      // time endowment per household
    double m = 8.0;       // nonlabor income per household
    double Nh = 100.0;    // number of identical households
    // goods market
    double c0 = 200.0;
    double c1 = 0.75;
    double e = 10.0;      // interest sensitivity of consumption
    double I0 = 200.0;
    double d = 25.0;      // interest sensitivity of investment
    double T = 100.0;
    double G = 300.0;
    // money
    double Ms = 1000.0;
    double kY = 0.5;
    double b = 0.1;
    // capital, supply, expectations
    double pK = 1.0;
    double gamma = 1.0;
    double PE = 1.0;
    double piE = 0.0;
    double beta = 0.5;
    double Ubar = 0.05;
    double omega = 0.5;

    friend bool operator==(const Params&, const Params&) = default;
};

// A complete endogenous solution. PE is the price expectation the state was
// solved under (equal to P in the long run).
struct EconState {
    double Y = 0.0;
    double C = 0.0;
    double Ipriv = 0.0;
    double Snat = 0.0;
    double P = 0.0;
    double PE = 0.0;
    double i = 0.0;
    double r = 0.0;
    double w = 0.0;
    double L = 0.0;
    double Uu = 0.0;
    double pi = 0.0;
    double Ybar = 0.0;
    double leisure = 0.0;

    friend bool operator==(const EconState&, const EconState&) = default;
};

struct ParamField {
    std::string_view name;
    double Params::*member;
    std::string_view description;
};

struct StateField {
    std::string_view name;
    double EconState::*member;
};

std::span<const ParamField> paramFields();
std::span<const StateField> stateFields();

bool isParamField(std::string_view name);
double getParam(const Params& p, std::string_view name);
// Throws ValidationError for unknown names. Does not validate the new value.
void setParam(Params& p, std::string_view name, double value);

double getState(const EconState& s, std::string_view name);

// Throws ValidationError naming the first field that breaks an invariant.
void validate(const Params& p);

json toJson(const Params& p);
json toJson(const EconState& s);
// Keys absent from j keep their value from base; unknown keys are an error.
Params paramsFromJson(const json& j, Params base = {});
EconState stateFromJson(const json& j);

// Flat "key = value" text, '#' starts a comment.
std::string toConfig(const Params& p);
Params parseConfig(std::string_view text, Params base = {});
Params loadConfig(const std::filesystem::path& path);

}  // namespace macroatlas
