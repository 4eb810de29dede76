#pragma once

#include <atomic>
#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "macroatlas/big_picture.hpp"
#include "macroatlas/panels.hpp"
#include "macroatlas/params.hpp"

namespace macroatlas {

struct ShockRecord {
    std::string field;
    double oldValue = 0.0;
    double newValue = 0.0;
    std::string timestamp;  // ISO 8601, UTC
};

struct Scenario {
    std::string id;
    Params params;  // after all shocks
    EconState baseline;
    std::vector<ShockRecord> shocks;
    EconState current;
    PropagationPlan lastPlan;
};

struct FieldDelta {
    std::string field;
    double a = 0.0;
    double b = 0.0;
    double delta = 0.0;  // b - a
    double ratio = 0.0;  // b / a, 0 when a == 0
};

// The engine solution a scenario tracks.
EconState solveScenario(const Params& p);

// Parameters before any shock, recovered by unwinding the history.
Params baselineParams(const Scenario& s);
// Rebuilds params and current from the baseline params and the shock history.
Scenario replay(const Scenario& s);

nlohmann::json toJson(const Scenario& s);
Scenario scenarioFromJson(const nlohmann::json& j);
nlohmann::json toJson(const PropagationPlan& plan);
nlohmann::json toJson(const std::vector<FieldDelta>& deltas);

std::vector<FieldDelta> compareStates(const EconState& a, const EconState& b);

// One JSON document per scenario under `dir`, replaced by write-then-rename.
// Writes to one scenario are serialized; reads and writes to different
// scenarios proceed independently.
class ScenarioStore {
public:
    explicit ScenarioStore(std::filesystem::path dir);

    Scenario create(const Params& p);
    Scenario get(const std::string& id) const;
    std::vector<std::string> list() const;
    // Validation or solver failures leave the persisted document untouched.
    std::pair<Scenario, PropagationPlan> applyShock(const std::string& id, const std::string& field, double value);
    PanelPayload panel(const std::string& id, int nodeId, Overlay overlay, const PanelRange& range = {}) const;
    std::vector<FieldDelta> compare(const std::string& idA, const std::string& idB) const;

    std::filesystem::path pathFor(const std::string& id) const;
    const std::filesystem::path& dir() const { return dir_; }

private:
    std::mutex& writeLock(const std::string& id);
    std::string newId();
    void persist(const Scenario& s) const;

    std::filesystem::path dir_;
    std::mutex locksMutex_;
    std::map<std::string, std::unique_ptr<std::mutex>> writeLocks_;
    std::atomic<unsigned long long> counter_{0};
};

}  // namespace macroatlas
