#include "svc/board_service.hpp"

#include <charconv>
#include <stdexcept>

#include "json.hpp"

namespace zfsolve::svc {

using nlohmann::json;

namespace {

class BadRequest : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Response error(int status, const std::string& message) {
  return {status, json{{"error", message}}.dump()};
}

Response ok(const json& body) { return {200, body.dump()}; }

void check_shape(const Limits& limits, std::size_t rows, std::size_t cols) {
  if (rows == 0 || cols == 0) throw BadRequest("rows and cols must be positive");
  if (rows > limits.max_rows || cols > limits.max_cols) {
    throw BadRequest("board exceeds the size limit of " + std::to_string(limits.max_rows) + "x" +
                     std::to_string(limits.max_cols));
  }
}

std::size_t dimension(const json& body, const char* key) {
  const auto it = body.find(key);
  if (it == body.end() || !it->is_number_integer()) {
    throw BadRequest(std::string("'") + key + "' must be a positive integer");
  }
  const auto v = it->get<std::int64_t>();
  if (v <= 0) throw BadRequest(std::string("'") + key + "' must be a positive integer");
  return static_cast<std::size_t>(v);
}

grid::BoardState parse_board(std::string_view text, const Limits& limits) {
  const json body = json::parse(text, nullptr, false);
  if (body.is_discarded()) throw BadRequest("request body is not valid JSON");
  if (!body.is_object()) throw BadRequest("request body must be a JSON object");
  const auto rows = dimension(body, "rows");
  const auto cols = dimension(body, "cols");
  check_shape(limits, rows, cols);

  const auto cells = body.find("cells");
  if (cells == body.end() || !cells->is_array() || cells->size() != rows) {
    throw BadRequest("'cells' must be an array of " + std::to_string(rows) + " rows");
  }
  grid::BoardState board({rows, cols});
  for (std::size_t r = 0; r < rows; ++r) {
    const auto& row = (*cells)[r];
    if (!row.is_array() || row.size() != cols) {
      throw BadRequest("row " + std::to_string(r) + " of 'cells' must have " + std::to_string(cols) + " entries");
    }
    for (std::size_t c = 0; c < cols; ++c) {
      const auto& v = row[c];
      if (!v.is_number_integer() || (v.get<std::int64_t>() != 0 && v.get<std::int64_t>() != 1)) {
        throw BadRequest("cells must be 0 or 1");
      }
      if (v.get<std::int64_t>() == 1) board.set(r, c, true);
    }
  }
  return board;
}

json cells_json(const grid::BoardState& b) {
  json rows = json::array();
  for (std::size_t r = 0; r < b.spec().rows; ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < b.spec().cols; ++c) row.push_back(b.on(r, c) ? 1 : 0);
    rows.push_back(std::move(row));
  }
  return rows;
}

std::uint64_t parse_uint(const std::string& text, const char* name) {
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
    throw BadRequest(std::string("query parameter '") + name + "' must be a non-negative integer");
  }
  return v;
}

template <class F>
Response guarded(F&& f) {
  try {
    return f();
  } catch (const BadRequest& e) {
    return error(400, e.what());
  }
}

}  // namespace

std::shared_ptr<const grid::LightsOut> BoardService::handle(grid::GridSpec g) const {
  std::promise<std::shared_ptr<const grid::LightsOut>> promise;
  HandleFuture future;
  bool builder = false;
  {
    std::lock_guard lock(mutex_);
    const auto [it, inserted] = handles_.try_emplace({g.rows, g.cols});
    if (inserted) {
      it->second = promise.get_future().share();
      builder = true;
    }
    future = it->second;
  }
  // The first request for a shape builds the handle outside the lock; later
  // requests for the same shape block on the shared future.
  if (builder) {
    try {
      promise.set_value(std::make_shared<const grid::LightsOut>(g));
    } catch (...) {
      promise.set_exception(std::current_exception());
      std::lock_guard lock(mutex_);
      handles_.erase({g.rows, g.cols});
    }
  }
  return future.get();
}

std::size_t BoardService::cached_handles() const {
  std::lock_guard lock(mutex_);
  return handles_.size();
}

Response BoardService::solve(std::string_view body) const {
  return guarded([&] {
    const auto board = parse_board(body, limits_);
    const auto x = handle(board.spec())->solve(board);
    json out{{"rows", board.spec().rows}, {"cols", board.spec().cols}, {"solvable", x.has_value()}};
    if (x) {
      out["presses"] = cells_json(*x);
      out["pressCount"] = x->lit_count();
    } else {
      out["presses"] = nullptr;
      out["pressCount"] = nullptr;
    }
    return ok(out);
  });
}

Response BoardService::hint(std::string_view body) const {
  return guarded([&] {
    const auto board = parse_board(body, limits_);
    const auto x = handle(board.spec())->solve(board);
    json out{{"solvable", x.has_value()}, {"press", nullptr}};
    if (x) {
      if (const auto p = grid::first_press(*x)) out["press"] = {{"row", p->first + 1}, {"col", p->second + 1}};
    }
    return ok(out);
  });
}

Response BoardService::random(const std::optional<std::string>& rows, const std::optional<std::string>& cols,
                              const std::optional<std::string>& seed) const {
  return guarded([&] {
    if (!rows || !cols) throw BadRequest("query parameters 'rows' and 'cols' are required");
    const auto r = parse_uint(*rows, "rows");
    const auto c = parse_uint(*cols, "cols");
    check_shape(limits_, r, c);
    const auto s = seed ? parse_uint(*seed, "seed") : 0;
    const auto board = grid::random_solvable({r, c}, s);
    return ok(json{{"rows", r}, {"cols", c}, {"cells", cells_json(board)}});
  });
}

}  // namespace zfsolve::svc
