#pragma once

#include <memory>
#include <string>

#include "macroatlas/scenario.hpp"

namespace macroatlas {

// HTTP/JSON front end over a ScenarioStore.
//
//   GET  /graph                              nodes, edges, owners
//   GET  /symbols                            symbol registry
//   GET  /scenarios                          stored scenario ids
//   POST /scenarios                          body {"params": {...}} (partial, defaults fill)
//   GET  /scenarios/{id}
//   POST /scenarios/{id}/shocks              body {"field": "Ms", "value": 1100}
//   GET  /scenarios/{id}/panels/{n}?overlay=baseline|current|both&xMin=&xMax=&yMin=&yMax=
//   GET  /compare?a={id}&b={id}
//
// Errors are {"error": message} with 400 (validation, "field" added), 404
// (unknown id) or 422 (solver failure, "kind" added).
class ApiServer {
public:
    explicit ApiServer(ScenarioStore& store);
    ~ApiServer();
    ApiServer(const ApiServer&) = delete;
    ApiServer& operator=(const ApiServer&) = delete;

    // Returns the bound port, or -1.
    int bindToAnyPort(const std::string& host);
    bool bind(const std::string& host, int port);
    // Blocks until stop().
    bool listen();
    void stop();
    void waitUntilReady() const;

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

// "host:port", "host" or ":port" into parts; missing pieces keep the defaults.
std::pair<std::string, int> parseAddress(const std::string& addr, std::string defaultHost = "127.0.0.1",
                                         int defaultPort = 8080);

}  // namespace macroatlas
