#include <algorithm>
#include <charconv>
#include <csignal>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "macroatlas/big_picture.hpp"
#include "macroatlas/equilibrium.hpp"
#include "macroatlas/error.hpp"
#include "macroatlas/panels.hpp"
#include "macroatlas/params.hpp"
#include "macroatlas/scenario.hpp"
#include "macroatlas/server.hpp"
#include "macroatlas/svg.hpp"

namespace ma = macroatlas;

namespace {

enum Exit { kOk = 0, kValidation = 2, kConvergence = 3, kIo = 4 };

ma::Params loadParams(const std::string& path) { return path.empty() ? ma::Params{} : ma::loadConfig(path); }

double parseValue(const std::string& text) {
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size())
        throw ma::ValidationError("value", "cannot parse '" + text + "' as a number");
    return v;
}

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

void writeFile(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw ma::IoError("cannot open " + path + " for writing");
    out << text;
    if (!out) throw ma::IoError("write to " + path + " failed");
}

void printTable(const std::vector<std::pair<std::string, const ma::EconState*>>& cols) {
    std::printf("%-10s", "field");
    for (const auto& [title, _] : cols) std::printf(" %18s", title.c_str());
    std::printf("\n");
    for (const auto& f : ma::stateFields()) {
        std::printf("%-10s", std::string(f.name).c_str());
        for (const auto& [_, s] : cols) std::printf(" %18s", fmt(s->*(f.member)).c_str());
        std::printf("\n");
    }
}

int cmdSolve(const std::string& config, bool json) {
    const ma::Params p = loadParams(config);
    ma::validate(p);
    const ma::EconState sr = ma::shortRunGE(p), lr = ma::longRunGE(p);
    if (json) {
        std::cout << nlohmann::json{{"shortRun", ma::toJson(sr)}, {"longRun", ma::toJson(lr)}}.dump(2) << '\n';
    } else {
        printTable({{"short-run", &sr}, {"long-run", &lr}});
    }
    return kOk;
}

int cmdShock(const std::string& config, const std::string& field, const std::string& valueText, bool json) {
    const double value = parseValue(valueText);
    const ma::Params before = loadParams(config);
    ma::validate(before);
    ma::Params after = before;
    ma::setParam(after, field, value);
    ma::validate(after);
    const ma::EconState s0 = ma::shortRunGE(before), s1 = ma::shortRunGE(after);
    const std::string fields[] = {field};
    const auto& graph = ma::canonicalGraph();
    const ma::PropagationPlan plan = graph.propagate(fields);
    if (json) {
        nlohmann::json names = nlohmann::json::array();
        for (int id : plan.dirty) names.push_back(graph.node(id).name);
        std::cout << nlohmann::json{{"field", field},
                                    {"before", ma::toJson(s0)},
                                    {"after", ma::toJson(s1)},
                                    {"deltas", ma::toJson(ma::compareStates(s0, s1))},
                                    {"plan", ma::toJson(plan)},
                                    {"dirtyNames", names}}
                         .dump(2)
                  << '\n';
        return kOk;
    }
    std::printf("shock %s: %s -> %s\n\n", field.c_str(), fmt(ma::getParam(before, field)).c_str(), fmt(value).c_str());
    std::printf("%-10s %18s %18s %18s\n", "field", "before", "after", "delta");
    for (const auto& d : ma::compareStates(s0, s1))
        std::printf("%-10s %18s %18s %18s\n", d.field.c_str(), fmt(d.a).c_str(), fmt(d.b).c_str(), fmt(d.delta).c_str());
    std::printf("\ndirty diagrams:\n");
    for (int id : plan.dirty) std::printf("  %2d  %s\n", id, graph.node(id).name.c_str());
    return kOk;
}

int cmdExportGraph(const std::string& format, const std::string& out) {
    const auto& g = ma::canonicalGraph();
    if (format == "dot") {
        writeFile(out, ma::exportDot(g));
    } else if (format == "json") {
        writeFile(out, g.toJson().dump(2) + "\n");
    } else {
        throw ma::ValidationError("format", "unknown format '" + format + "' (dot or json)");
    }
    return kOk;
}

int cmdPlot(int node, const std::string& out, const std::string& config, const std::string& overlayText,
            const std::string& field, const std::string& valueText) {
    const ma::Overlay overlay = ma::overlayFromString(overlayText);
    const ma::Params base = loadParams(config);
    ma::validate(base);
    ma::Params cur = base;
    if (!field.empty()) {
        if (valueText.empty()) throw ma::ValidationError("value", "--field needs --value");
        ma::setParam(cur, field, parseValue(valueText));
        ma::validate(cur);
    }
    const ma::EconState s0 = ma::shortRunGE(base);
    const ma::EconState s1 = field.empty() ? s0 : ma::shortRunGE(cur);
    bool dirty = false;
    if (!field.empty()) {
        const std::string fields[] = {field};
        const auto plan = ma::canonicalGraph().propagate(fields);
        dirty = std::find(plan.dirty.begin(), plan.dirty.end(), node) != plan.dirty.end();
    }
    const auto panel = ma::buildPanel(node, {&cur, &s1}, ma::PanelInput{&base, &s0}, overlay, {}, dirty);
    writeFile(out, ma::renderSvg(panel));
    return kOk;
}

ma::ApiServer* gServer = nullptr;

void onSignal(int) {
    if (gServer) gServer->stop();
}

int cmdServe(std::string addr, int port, std::string data) {
    if (addr.empty()) {
        const char* env = std::getenv("MACROATLAS_ADDR");
        addr = env ? env : "127.0.0.1";
    }
    if (data.empty()) {
        const char* env = std::getenv("MACROATLAS_DATA");
        data = env ? env : "macroatlas-data";
    }
    auto [host, parsedPort] = ma::parseAddress(addr, "127.0.0.1", 8080);
    if (port >= 0) parsedPort = port;

    ma::ScenarioStore store(data);
    ma::ApiServer server(store);
    if (!server.bind(host, parsedPort)) throw ma::IoError("cannot bind " + host + ":" + std::to_string(parsedPort));
    gServer = &server;
    std::signal(SIGINT, onSignal);
    std::signal(SIGTERM, onSignal);
    std::fprintf(stderr, "listening on %s:%d, data in %s\n", host.c_str(), parsedPort, data.c_str());
    server.listen();
    gServer = nullptr;
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Linked macroeconomic diagrams: solve, shock, export and plot"};
    app.require_subcommand(1);

    std::string config, field, valueText, format = "dot", out, overlay = "current", addr, data;
    bool json = false;
    int node = 0, port = -1;

    auto* solve = app.add_subcommand("solve", "Print short-run and long-run equilibria");
    solve->add_option("--config", config, "Parameter file (key = value, or .json)");
    solve->add_flag("--json", json, "Emit JSON");

    auto* shock = app.add_subcommand("shock", "Apply one parameter shock and list the affected diagrams");
    shock->add_option("--config", config, "Parameter file");
    shock->add_option("--field", field, "Parameter name")->required();
    shock->add_option("--value", valueText, "New value")->required();
    shock->add_flag("--json", json, "Emit JSON");

    auto* exportGraph = app.add_subcommand("export-graph", "Write the diagram graph");
    exportGraph->add_option("--format", format, "dot or json");
    exportGraph->add_option("--out", out, "Output file (stdout when omitted)");

    auto* plot = app.add_subcommand("plot", "Render one diagram as SVG");
    plot->add_option("--node", node, "Diagram id (1-27)")->required();
    plot->add_option("--out", out, "Output file (stdout when omitted)");
    plot->add_option("--config", config, "Parameter file");
    plot->add_option("--overlay", overlay, "baseline, current or both");
    plot->add_option("--field", field, "Shock this parameter for the current curves");
    plot->add_option("--value", valueText, "Shocked value");

    auto* serve = app.add_subcommand("serve", "Run the HTTP/JSON scenario service");
    serve->add_option("--addr", addr, "host[:port] (default $MACROATLAS_ADDR or 127.0.0.1:8080)");
    serve->add_option("--port", port, "Port, overrides --addr");
    serve->add_option("--data", data, "Scenario directory (default $MACROATLAS_DATA or ./macroatlas-data)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& ex) {
        const int code = app.exit(ex);
        return code == 0 ? kOk : kValidation;
    }

    try {
        if (*solve) return cmdSolve(config, json);
        if (*shock) return cmdShock(config, field, valueText, json);
        if (*exportGraph) return cmdExportGraph(format, out);
        if (*plot) return cmdPlot(node, out, config, overlay, field, valueText);
        if (*serve) return cmdServe(addr, port, data);
    } catch (const ma::ValidationError& ex) {
        std::cerr << "validation error";
        if (!ex.field().empty()) std::cerr << " (" << ex.field() << ")";
        std::cerr << ": " << ex.what() << '\n';
        return kValidation;
    } catch (const ma::NotFoundError& ex) {
        std::cerr << "not found: " << ex.what() << '\n';
        return kValidation;
    } catch (const ma::SolverError& ex) {
        std::cerr << "solver error: " << ex.what() << '\n';
        return kConvergence;
    } catch (const ma::IoError& ex) {
        std::cerr << "I/O error: " << ex.what() << '\n';
        return kIo;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << '\n';
        return 1;
    }
    return kOk;
}
