#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace macroatlas {

// One notation entry. The key is unique; the display symbol may be shared by
// overloaded notation (L is leisure, labor, or part of L(Y, i); I is income or
// investment; U is utility or unemployment; W is hours or the nominal wage).
struct SymbolEntry {
    std::string key;
    std::string symbol;
    std::string description;
    std::string unit;
    // "Params.x", "EconState.x", "<Type>.x", "op:<function>", "curve:<name>" or "notation:<marker>".
    std::string owner;
    bool inScope = true;
};

class SymbolRegistry {
public:
    explicit SymbolRegistry(std::vector<SymbolEntry> entries);

    static const SymbolRegistry& standard();

    std::span<const SymbolEntry> entries() const { return entries_; }
    const SymbolEntry* find(std::string_view key) const;
    // Throws NotFoundError for unknown keys.
    const SymbolEntry& at(std::string_view key) const;
    // Display symbol for a key.
    const std::string& label(std::string_view key) const { return at(key).symbol; }
    std::vector<const SymbolEntry*> withSymbol(std::string_view symbol) const;

private:
    std::vector<SymbolEntry> entries_;
};

nlohmann::json toJson(const SymbolRegistry& reg);

}  // namespace macroatlas
