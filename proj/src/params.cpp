#include "macroatlas/params.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "macroatlas/error.hpp"

namespace macroatlas {

namespace {

constexpr std::array<ParamField, 27> kParamFields{{
    {"alpha", &Params::alpha, "capital share"},
    {"A", &Params::A, "total factor productivity"},
    {"K", &Params::K, "aggregate capital stock"},
    {"delta", &Params::delta, "depreciation rate per period"},
    {"n", &Params::n, "population growth rate per period"},
    {"s", &Params::s, "saving rate"},
    {"theta", &Params::theta, "leisure preference weight"},
    {"H", &Params::H, "time endowment per household (hours)"},
    {"m", &Params::m, "nonlabor income per household"},
    {"Nh", &Params::Nh, "number of identical households"},
    {"c0", &Params::c0, "autonomous consumption"},
    {"c1", &Params::c1, "marginal propensity to consume"},
    {"e", &Params::e, "interest sensitivity of consumption"},
    {"I0", &Params::I0, "autonomous investment"},
    {"d", &Params::d, "interest sensitivity of investment"},
    {"T", &Params::T, "lump-sum taxes"},
    {"G", &Params::G, "government expenditures"},
    {"Ms", &Params::Ms, "nominal money supply"},
    {"kY", &Params::kY, "money-demand income coefficient"},
    {"b", &Params::b, "money-demand interest semi-elasticity"},
    {"pK", &Params::pK, "price of capital goods"},
    {"gamma", &Params::gamma, "SRAS price-output elasticity"},
    {"PE", &Params::PE, "price expectation"},
    {"piE", &Params::piE, "expected inflation rate"},
    {"beta", &Params::beta, "Phillips slope"},
    {"Ubar", &Params::Ubar, "natural unemployment rate"},
    {"omega", &Params::omega, "output-gap-to-unemployment coefficient"},
}};

constexpr std::array<StateField, 14> kStateFields{{
    {"Y", &EconState::Y},
    {"C", &EconState::C},
    {"Ipriv", &EconState::Ipriv},
    {"Snat", &EconState::Snat},
    {"P", &EconState::P},
    {"PE", &EconState::PE},
    {"i", &EconState::i},
    {"r", &EconState::r},
    {"w", &EconState::w},
    {"L", &EconState::L},
    {"Uu", &EconState::Uu},
    {"pi", &EconState::pi},
    {"Ybar", &EconState::Ybar},
    {"leisure", &EconState::leisure},
}};

const ParamField* findParam(std::string_view name) {
    for (const auto& f : kParamFields)
        if (f.name == name) return &f;
    return nullptr;
}

// Shortest text that parses back to the same double.
std::string fmtValue(double v) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

void require(bool ok, std::string_view field, const std::string& rule, double value) {
    if (!ok)
        throw ValidationError(std::string(field),
                              std::string(field) + " must satisfy " + rule + " (got " + fmtValue(value) + ")");
}

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

}  // namespace

std::span<const ParamField> paramFields() { return kParamFields; }
std::span<const StateField> stateFields() { return kStateFields; }

bool isParamField(std::string_view name) { return findParam(name) != nullptr; }

double getParam(const Params& p, std::string_view name) {
    const auto* f = findParam(name);
    if (!f) throw ValidationError(std::string(name), "unknown parameter '" + std::string(name) + "'");
    return p.*(f->member);
}

void setParam(Params& p, std::string_view name, double value) {
    const auto* f = findParam(name);
    if (!f) throw ValidationError(std::string(name), "unknown parameter '" + std::string(name) + "'");
    p.*(f->member) = value;
}

double getState(const EconState& s, std::string_view name) {
    for (const auto& f : kStateFields)
        if (f.name == name) return s.*(f.member);
    throw ValidationError(std::string(name), "unknown state field '" + std::string(name) + "'");
}

void validate(const Params& p) {
    for (const auto& f : kParamFields)
        require(std::isfinite(p.*(f.member)), f.name, "a finite value", p.*(f.member));

    require(p.alpha > 0 && p.alpha < 1, "alpha", "0 < alpha < 1", p.alpha);
    require(p.c1 > 0 && p.c1 < 1, "c1", "0 < c1 < 1", p.c1);
    for (auto name : {"A", "K", "H", "Nh", "d", "kY", "b", "gamma", "pK", "PE", "Ms"}) {
        const double v = getParam(p, name);
        require(v > 0, name, std::string(name) + " > 0", v);
    }
    for (auto name : {"delta", "n", "s", "theta", "e", "m", "omega", "beta", "Ubar"}) {
        const double v = getParam(p, name);
        require(v >= 0, name, std::string(name) + " >= 0", v);
    }
    require(p.s <= 1, "s", "0 <= s <= 1", p.s);
    require(p.Ubar < 1, "Ubar", "0 <= Ubar < 1", p.Ubar);
}

json toJson(const Params& p) {
    json j = json::object();
    for (const auto& f : kParamFields) j[std::string(f.name)] = p.*(f.member);
    return j;
}

json toJson(const EconState& s) {
    json j = json::object();
    for (const auto& f : kStateFields) j[std::string(f.name)] = s.*(f.member);
    return j;
}

Params paramsFromJson(const json& j, Params base) {
    if (!j.is_object()) throw ValidationError("", "params must be a JSON object");
    for (const auto& [key, value] : j.items()) {
        if (!isParamField(key)) throw ValidationError(key, "unknown parameter '" + key + "'");
        if (!value.is_number()) throw ValidationError(key, "parameter '" + key + "' must be a number");
        setParam(base, key, value.get<double>());
    }
    return base;
}

EconState stateFromJson(const json& j) {
    EconState s;
    for (const auto& f : kStateFields) {
        const std::string key(f.name);
        if (!j.contains(key) || !j[key].is_number())
            throw ValidationError(key, "state field '" + key + "' missing or not a number");
        s.*(f.member) = j[key].get<double>();
    }
    return s;
}

std::string toConfig(const Params& p) {
    std::ostringstream os;
    for (const auto& f : kParamFields) os << f.name << " = " << fmtValue(p.*(f.member)) << '\n';
    return os.str();
}

Params parseConfig(std::string_view text, Params base) {
    std::size_t lineNo = 0;
    while (!text.empty()) {
        const auto eol = text.find('\n');
        std::string_view line = text.substr(0, eol);
        text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
        ++lineNo;

        if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;

        const auto eq = line.find('=');
        if (eq == std::string_view::npos)
            throw ValidationError("", "line " + std::to_string(lineNo) + ": expected 'key = value'");
        const auto key = std::string(trim(line.substr(0, eq)));
        const auto raw = trim(line.substr(eq + 1));
        if (!isParamField(key))
            throw ValidationError(key, "line " + std::to_string(lineNo) + ": unknown parameter '" + key + "'");

        double value = 0.0;
        const auto [ptr, ec] = std::from_chars(raw.data(), raw.data() + raw.size(), value);
        if (ec != std::errc{} || ptr != raw.data() + raw.size())
            throw ValidationError(key, "line " + std::to_string(lineNo) + ": '" + std::string(raw) +
                                           "' is not a number");
        setParam(base, key, value);
    }
    return base;
}

Params loadConfig(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot read config file " + path.string());
    std::stringstream buf;
    buf << in.rdbuf();
    const std::string text = buf.str();
    if (path.extension() == ".json") {
        json j;
        try {
            j = json::parse(text);
        } catch (const json::parse_error& ex) {
            throw ValidationError("", path.string() + ": " + ex.what());
        }
        return paramsFromJson(j);
    }
    return parseConfig(text);
}

}  // namespace macroatlas
