#include "macroatlas/scenario.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <random>
#include <sstream>

#include "macroatlas/equilibrium.hpp"
#include "macroatlas/error.hpp"

namespace macroatlas {

namespace fs = std::filesystem;

namespace {

std::string utcNow() {
    const auto now = std::chrono::system_clock::now();
    const std::time_t t = std::chrono::system_clock::to_time_t(now);
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(now.time_since_epoch()).count() % 1000;
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[40];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%S", &tm);
    char out[48];
    std::snprintf(out, sizeof out, "%s.%03lldZ", buf, static_cast<long long>(ms));
    return out;
}

bool validId(const std::string& id) {
    if (id.empty() || id.size() > 64) return false;
    for (char c : id)
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == '_')) return false;
    return true;
}

}  // namespace

EconState solveScenario(const Params& p) { return shortRunGE(p); }

Params baselineParams(const Scenario& s) {
    Params p = s.params;
    for (auto it = s.shocks.rbegin(); it != s.shocks.rend(); ++it) setParam(p, it->field, it->oldValue);
    return p;
}

Scenario replay(const Scenario& s) {
    Scenario out = s;
    Params p = baselineParams(s);
    out.baseline = solveScenario(p);
    for (const auto& shock : s.shocks) setParam(p, shock.field, shock.newValue);
    out.params = p;
    out.current = solveScenario(p);
    return out;
}

nlohmann::json toJson(const PropagationPlan& plan) { return {{"dirty", plan.dirty}, {"trigger", plan.trigger}}; }

nlohmann::json toJson(const Scenario& s) {
    nlohmann::json shocks = nlohmann::json::array();
    for (const auto& r : s.shocks)
        shocks.push_back(
            {{"field", r.field}, {"oldValue", r.oldValue}, {"newValue", r.newValue}, {"timestamp", r.timestamp}});
    return {{"id", s.id},
            {"params", toJson(s.params)},
            {"baseline", toJson(s.baseline)},
            {"shocks", std::move(shocks)},
            {"current", toJson(s.current)},
            {"lastPlan", toJson(s.lastPlan)}};
}

Scenario scenarioFromJson(const nlohmann::json& j) {
    Scenario s;
    s.id = j.at("id").get<std::string>();
    s.params = paramsFromJson(j.at("params"));
    s.baseline = stateFromJson(j.at("baseline"));
    s.current = stateFromJson(j.at("current"));
    for (const auto& r : j.at("shocks"))
        s.shocks.push_back({r.at("field").get<std::string>(), r.at("oldValue").get<double>(),
                            r.at("newValue").get<double>(), r.at("timestamp").get<std::string>()});
    s.lastPlan.dirty = j.at("lastPlan").at("dirty").get<std::vector<int>>();
    s.lastPlan.trigger = j.at("lastPlan").at("trigger").get<std::vector<std::string>>();
    return s;
}

std::vector<FieldDelta> compareStates(const EconState& a, const EconState& b) {
    std::vector<FieldDelta> out;
    for (const auto& f : stateFields()) {
        const double va = a.*(f.member), vb = b.*(f.member);
        out.push_back({std::string(f.name), va, vb, vb - va, va != 0 ? vb / va : 0.0});
    }
    return out;
}

nlohmann::json toJson(const std::vector<FieldDelta>& deltas) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& d : deltas)
        arr.push_back({{"field", d.field}, {"a", d.a}, {"b", d.b}, {"delta", d.delta}, {"ratio", d.ratio}});
    return arr;
}

ScenarioStore::ScenarioStore(fs::path dir) : dir_(std::move(dir)) {
    std::error_code ec;
    fs::create_directories(dir_, ec);
    if (ec || !fs::is_directory(dir_)) throw IoError("cannot create data directory " + dir_.string());
}

fs::path ScenarioStore::pathFor(const std::string& id) const { return dir_ / (id + ".json"); }

std::mutex& ScenarioStore::writeLock(const std::string& id) {
    std::lock_guard guard(locksMutex_);
    auto& slot = writeLocks_[id];
    if (!slot) slot = std::make_unique<std::mutex>();
    return *slot;
}

std::string ScenarioStore::newId() {
    static thread_local std::mt19937_64 rng{std::random_device{}()};
    char buf[40];
    std::snprintf(buf, sizeof buf, "sc-%012llx-%04llx", static_cast<unsigned long long>(rng() & 0xffffffffffffULL),
                  static_cast<unsigned long long>(counter_.fetch_add(1) & 0xffff));
    return buf;
}

void ScenarioStore::persist(const Scenario& s) const {
    const fs::path target = pathFor(s.id);
    const fs::path tmp = dir_ / ("." + s.id + ".json.tmp");
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw IoError("cannot write " + tmp.string());
        out << toJson(s).dump(2) << '\n';
        out.flush();
        if (!out) throw IoError("short write to " + tmp.string());
    }
    std::error_code ec;
    fs::rename(tmp, target, ec);
    if (ec) throw IoError("cannot replace " + target.string() + ": " + ec.message());
}

Scenario ScenarioStore::create(const Params& p) {
    validate(p);
    Scenario s;
    s.params = p;
    s.baseline = solveScenario(p);
    s.current = s.baseline;
    s.id = newId();
    std::lock_guard guard(writeLock(s.id));
    persist(s);
    return s;
}

Scenario ScenarioStore::get(const std::string& id) const {
    if (!validId(id)) throw NotFoundError("unknown scenario '" + id + "'");
    std::ifstream in(pathFor(id), std::ios::binary);
    if (!in) throw NotFoundError("unknown scenario '" + id + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    try {
        return scenarioFromJson(nlohmann::json::parse(buf.str()));
    } catch (const nlohmann::json::exception& ex) {
        throw IoError("corrupt scenario file " + pathFor(id).string() + ": " + ex.what());
    }
}

std::vector<std::string> ScenarioStore::list() const {
    std::vector<std::string> ids;
    for (const auto& entry : fs::directory_iterator(dir_)) {
        const auto name = entry.path().filename().string();
        if (entry.is_regular_file() && entry.path().extension() == ".json" && name.front() != '.')
            ids.push_back(entry.path().stem().string());
    }
    std::sort(ids.begin(), ids.end());
    return ids;
}

std::pair<Scenario, PropagationPlan> ScenarioStore::applyShock(const std::string& id, const std::string& field,
                                                                double value) {
    if (!validId(id)) throw NotFoundError("unknown scenario '" + id + "'");
    std::lock_guard guard(writeLock(id));
    Scenario s = get(id);

    Params next = s.params;
    const double old = getParam(next, field);
    setParam(next, field, value);
    validate(next);
    const EconState solved = solveScenario(next);
    const std::string fields[] = {field};
    const PropagationPlan plan = canonicalGraph().propagate(fields);

    s.params = next;
    s.current = solved;
    s.lastPlan = plan;
    s.shocks.push_back({field, old, value, utcNow()});
    persist(s);
    return {std::move(s), plan};
}

PanelPayload ScenarioStore::panel(const std::string& id, int nodeId, Overlay overlay, const PanelRange& range) const {
    const Scenario s = get(id);
    const Params base = baselineParams(s);
    const bool dirty =
        std::find(s.lastPlan.dirty.begin(), s.lastPlan.dirty.end(), nodeId) != s.lastPlan.dirty.end();
    return buildPanel(nodeId, PanelInput{&s.params, &s.current}, PanelInput{&base, &s.baseline}, overlay, range,
                      dirty);
}

std::vector<FieldDelta> ScenarioStore::compare(const std::string& idA, const std::string& idB) const {
    return compareStates(get(idA).current, get(idB).current);
}

}  // namespace macroatlas
