#include "svc/server.hpp"

#include <optional>

#include "httplib.h"

namespace zfsolve::svc {

namespace {

void reply(httplib::Response& res, const Response& r) {
  res.status = r.status;
  res.set_content(r.body, r.content_type);
}

std::optional<std::string> param(const httplib::Request& req, const char* name) {
  if (!req.has_param(name)) return std::nullopt;
  return req.get_param_value(name);
}

}  // namespace

void install_routes(httplib::Server& server, const BoardService& service, const std::string& allow_origin) {
  server.set_default_headers({{"Access-Control-Allow-Origin", allow_origin},
                              {"Access-Control-Allow-Methods", "GET, POST, OPTIONS"},
                              {"Access-Control-Allow-Headers", "Content-Type"}});

  server.Get("/healthz", [](const httplib::Request&, httplib::Response& res) {
    res.set_content("ok", "text/plain");
  });
  server.Post("/api/board/solve", [&service](const httplib::Request& req, httplib::Response& res) {
    reply(res, service.solve(req.body));
  });
  server.Post("/api/board/hint", [&service](const httplib::Request& req, httplib::Response& res) {
    reply(res, service.hint(req.body));
  });
  server.Get("/api/board/random", [&service](const httplib::Request& req, httplib::Response& res) {
    reply(res, service.random(param(req, "rows"), param(req, "cols"), param(req, "seed")));
  });
  server.Options(R"(/.*)", [](const httplib::Request&, httplib::Response& res) { res.status = 204; });
}

bool serve(const ServerOptions& options) {
  httplib::Server server;
  const BoardService service(options.limits);
  install_routes(server, service, options.allow_origin);
  return server.listen(options.host, options.port);
}

}  // namespace zfsolve::svc
