#pragma once

#include <cstddef>
#include <future>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "zfsolve/grid/lights_out.hpp"

namespace zfsolve::svc {

struct Response {
  int status = 200;
  std::string body;
  std::string content_type = "application/json";
};

struct Limits {
  std::size_t max_rows = 256;
  std::size_t max_cols = 256;
};

/// Request handlers of the lights-out service, independent of any HTTP
/// library. Solver handles are built once per grid shape and shared.
class BoardService {
 public:
  explicit BoardService(Limits limits = {}) : limits_(limits) {}

  /// POST /api/board/solve with {rows, cols, cells}.
  Response solve(std::string_view body) const;
  /// POST /api/board/hint with {rows, cols, cells}.
  Response hint(std::string_view body) const;
  /// GET /api/board/random; absent parameters are reported as 400, except
  /// seed which defaults to 0.
  Response random(const std::optional<std::string>& rows, const std::optional<std::string>& cols,
                  const std::optional<std::string>& seed) const;

  const Limits& limits() const { return limits_; }
  /// Number of grid shapes with a published or in-flight handle.
  std::size_t cached_handles() const;

  std::shared_ptr<const grid::LightsOut> handle(grid::GridSpec g) const;

 private:
  using HandleFuture = std::shared_future<std::shared_ptr<const grid::LightsOut>>;

  Limits limits_;
  mutable std::mutex mutex_;
  mutable std::map<std::pair<std::size_t, std::size_t>, HandleFuture> handles_;
};

}  // namespace zfsolve::svc
