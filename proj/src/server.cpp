#include "macroatlas/server.hpp"

#include <charconv>

#include <httplib.h>

#include "macroatlas/error.hpp"
#include "macroatlas/symbols.hpp"

namespace macroatlas {

namespace {

void sendJson(httplib::Response& res, const nlohmann::json& body, int status = 200) {
    res.status = status;
    res.set_content(body.dump(), "application/json");
}

std::optional<double> queryNumber(const httplib::Request& req, const char* key) {
    if (!req.has_param(key)) return std::nullopt;
    const std::string raw = req.get_param_value(key);
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(raw.data(), raw.data() + raw.size(), v);
    if (ec != std::errc{} || ptr != raw.data() + raw.size())
        throw ValidationError(key, std::string("query parameter '") + key + "' is not a number");
    return v;
}

int parseNodeId(const std::string& raw) {
    int v = 0;
    const auto [ptr, ec] = std::from_chars(raw.data(), raw.data() + raw.size(), v);
    if (ec != std::errc{} || ptr != raw.data() + raw.size()) throw NotFoundError("unknown diagram '" + raw + "'");
    return v;
}

nlohmann::json parseBody(const httplib::Request& req) {
    if (req.body.empty()) return nlohmann::json::object();
    try {
        return nlohmann::json::parse(req.body);
    } catch (const nlohmann::json::parse_error& ex) {
        throw ValidationError("body", std::string("malformed JSON body: ") + ex.what());
    }
}

std::string_view kindName(SolverError::Kind k) {
    switch (k) {
        case SolverError::Kind::NonBracketing: return "NonBracketing";
        case SolverError::Kind::NoConvergence: return "NoConvergence";
        case SolverError::Kind::SingularJacobian: return "SingularJacobian";
        case SolverError::Kind::NoCrossing: return "NoCrossing";
    }
    return "";
}

// Runs a handler and maps library exceptions onto HTTP statuses.
template <typename Fn>
httplib::Server::Handler guarded(Fn fn) {
    return [fn](const httplib::Request& req, httplib::Response& res) {
        try {
            fn(req, res);
        } catch (const ValidationError& ex) {
            sendJson(res, {{"error", ex.what()}, {"field", ex.field()}}, 400);
        } catch (const NotFoundError& ex) {
            sendJson(res, {{"error", ex.what()}}, 404);
        } catch (const SolverError& ex) {
            sendJson(res, {{"error", ex.what()}, {"kind", kindName(ex.kind())}}, 422);
        } catch (const nlohmann::json::exception& ex) {
            sendJson(res, {{"error", ex.what()}}, 400);
        } catch (const std::exception& ex) {
            sendJson(res, {{"error", ex.what()}}, 500);
        }
    };
}

}  // namespace

struct ApiServer::Impl {
    ScenarioStore& store;
    httplib::Server http;

    explicit Impl(ScenarioStore& s) : store(s) { routes(); }

    void routes() {
        http.Get("/graph", guarded([](const httplib::Request&, httplib::Response& res) {
                     sendJson(res, canonicalGraph().toJson());
                 }));
        http.Get("/symbols", guarded([](const httplib::Request&, httplib::Response& res) {
                     sendJson(res, toJson(SymbolRegistry::standard()));
                 }));
        http.Get("/scenarios", guarded([this](const httplib::Request&, httplib::Response& res) {
                     sendJson(res, {{"ids", store.list()}});
                 }));
        http.Post("/scenarios", guarded([this](const httplib::Request& req, httplib::Response& res) {
                      const auto body = parseBody(req);
                      if (!body.is_object()) throw ValidationError("body", "body must be a JSON object");
                      const Params p = body.contains("params") ? paramsFromJson(body.at("params")) : Params{};
                      sendJson(res, toJson(store.create(p)), 201);
                  }));
        http.Get(R"(/scenarios/([A-Za-z0-9_-]+))", guarded([this](const httplib::Request& req, httplib::Response& res) {
                     sendJson(res, toJson(store.get(req.matches[1])));
                 }));
        http.Post(R"(/scenarios/([A-Za-z0-9_-]+)/shocks)",
                  guarded([this](const httplib::Request& req, httplib::Response& res) {
                      const auto body = parseBody(req);
                      if (!body.is_object() || !body.contains("field") || !body["field"].is_string())
                          throw ValidationError("field", "shock body needs a string 'field'");
                      if (!body.contains("value") || !body["value"].is_number())
                          throw ValidationError("value", "shock body needs a numeric 'value'");
                      auto [scenario, plan] =
                          store.applyShock(req.matches[1], body["field"].get<std::string>(), body["value"].get<double>());
                      sendJson(res, {{"scenario", toJson(scenario)}, {"plan", toJson(plan)}});
                  }));
        http.Get(R"(/scenarios/([A-Za-z0-9_-]+)/panels/([^/]+))",
                 guarded([this](const httplib::Request& req, httplib::Response& res) {
                     const Overlay overlay =
                         overlayFromString(req.has_param("overlay") ? req.get_param_value("overlay") : "current");
                     PanelRange range{queryNumber(req, "xMin"), queryNumber(req, "xMax"), queryNumber(req, "yMin"),
                                      queryNumber(req, "yMax")};
                     sendJson(res, toJson(store.panel(req.matches[1], parseNodeId(req.matches[2]), overlay, range)));
                 }));
        http.Get("/compare", guarded([this](const httplib::Request& req, httplib::Response& res) {
                     if (!req.has_param("a") || !req.has_param("b"))
                         throw ValidationError("a", "compare needs query parameters a and b");
                     const auto a = req.get_param_value("a"), b = req.get_param_value("b");
                     sendJson(res, {{"a", a}, {"b", b}, {"deltas", toJson(store.compare(a, b))}});
                 }));
    }
};

ApiServer::ApiServer(ScenarioStore& store) : impl_(std::make_unique<Impl>(store)) {}
ApiServer::~ApiServer() = default;

int ApiServer::bindToAnyPort(const std::string& host) { return impl_->http.bind_to_any_port(host); }
bool ApiServer::bind(const std::string& host, int port) { return impl_->http.bind_to_port(host, port); }
bool ApiServer::listen() { return impl_->http.listen_after_bind(); }
void ApiServer::stop() { impl_->http.stop(); }
void ApiServer::waitUntilReady() const { impl_->http.wait_until_ready(); }

std::pair<std::string, int> parseAddress(const std::string& addr, std::string defaultHost, int defaultPort) {
    if (addr.empty()) return {defaultHost, defaultPort};
    const auto colon = addr.rfind(':');
    if (colon == std::string::npos) return {addr, defaultPort};
    std::string host = addr.substr(0, colon);
    const std::string portText = addr.substr(colon + 1);
    int port = 0;
    const auto [ptr, ec] = std::from_chars(portText.data(), portText.data() + portText.size(), port);
    if (ec != std::errc{} || ptr != portText.data() + portText.size() || port < 0 || port > 65535)
        throw ValidationError("addr", "invalid port in address '" + addr + "'");
    return {host.empty() ? defaultHost : host, port};
}

}  // namespace macroatlas
