#pragma once

#include <string>

#include "svc/board_service.hpp"

namespace httplib {
class Server;
}

namespace zfsolve::svc {

struct ServerOptions {
  std::string host = "127.0.0.1";
  int port = 8080;
  std::string allow_origin = "*";
  Limits limits;
};

/// Registers the service endpoints, the CORS headers for `allow_origin` and
/// the OPTIONS preflight responses on `server`.
void install_routes(httplib::Server& server, const BoardService& service, const std::string& allow_origin);

/// Blocks serving requests. Returns false if the socket cannot be bound.
bool serve(const ServerOptions& options);

}  // namespace zfsolve::svc
