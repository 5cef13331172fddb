#include <charconv>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>

#include "zfsolve/io/formats.hpp"

namespace zfsolve::io {

ParseError::ParseError(const std::string& message, std::size_t line, std::size_t column)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) +
                         ": " + message),
      line_(line),
      column_(column) {}

namespace {

struct Token {
  std::string_view text;
  std::size_t line;
  std::size_t column;
};

// Splits input into lines of whitespace-separated tokens.
class LineScanner {
 public:
  explicit LineScanner(std::string_view text) : text_(text) {}

  // Next line with content; blank and '#' lines are skipped.
  std::optional<std::vector<Token>> next() {
    while (auto raw = next_raw()) {
      auto tokens = tokenize(*raw);
      if (tokens.empty() || tokens.front().text.front() == '#') continue;
      return tokens;
    }
    return std::nullopt;
  }

  // Next line verbatim (without the trailing newline / carriage return).
  std::optional<std::string_view> next_raw() {
    if (pos_ >= text_.size()) return std::nullopt;
    const auto end = text_.find('\n', pos_);
    std::string_view line = text_.substr(pos_, end == std::string_view::npos ? text_.size() - pos_ : end - pos_);
    pos_ = end == std::string_view::npos ? text_.size() : end + 1;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    ++line_;
    return line;
  }

  std::size_t line() const { return line_; }

 private:
  std::vector<Token> tokenize(std::string_view line) const {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
      if (i == line.size()) break;
      const std::size_t b = i;
      while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
      out.push_back({line.substr(b, i - b), line_, b + 1});
    }
    return out;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 0;
};

[[noreturn]] void fail(const Token& t, const std::string& message) {
  throw ParseError(message, t.line, t.column);
}

std::uint64_t to_uint(const Token& t) {
  std::uint64_t v = 0;
  const auto* first = t.text.data();
  const auto* last = first + t.text.size();
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last) {
    fail(t, "expected a non-negative integer, got '" + std::string(t.text) + "'");
  }
  return v;
}

std::size_t to_positive(const Token& t) {
  const auto v = to_uint(t);
  if (v == 0) fail(t, "expected a positive integer");
  return static_cast<std::size_t>(v);
}

la::Residue to_residue(const Token& t, const ff::FieldSpec& spec) {
  const auto v = to_uint(t);
  if (!spec.contains(v)) {
    fail(t, "value " + std::to_string(v) + " is not a canonical residue of " + spec.to_string());
  }
  return static_cast<la::Residue>(v);
}

void expect_count(const std::vector<Token>& tokens, std::size_t n, const char* what) {
  if (tokens.size() != n) {
    const auto& t = tokens.size() > n ? tokens[n] : tokens.back();
    fail(t, std::string("expected ") + what);
  }
}

std::vector<Token> require_line(LineScanner& s, const char* what) {
  auto line = s.next();
  if (!line) throw ParseError(std::string("unexpected end of input, expected ") + what, s.line() + 1, 1);
  return std::move(*line);
}

ff::FieldSpec parse_field(const std::vector<Token>& tokens) {
  if (tokens.front().text != "field") fail(tokens.front(), "expected 'field gf2' or 'field gfp <p>'");
  if (tokens.size() == 2 && tokens[1].text == "gf2") return ff::FieldSpec::gf2();
  if (tokens.size() == 3 && tokens[1].text == "gfp") {
    const auto p = to_uint(tokens[2]);
    try {
      if (p >= ff::FieldSpec::kMaxModulus) throw std::invalid_argument("modulus too large");
      return ff::FieldSpec::prime(static_cast<std::uint32_t>(p));
    } catch (const std::invalid_argument& e) {
      fail(tokens[2], e.what());
    }
  }
  fail(tokens.front(), "expected 'field gf2' or 'field gfp <p>'");
}

std::string field_line(const ff::FieldSpec& spec) { return "field " + spec.to_string() + "\n"; }

std::vector<Index> parse_labels(const std::vector<Token>& tokens, const char* keyword,
                                std::size_t count, std::size_t n) {
  if (tokens.front().text != keyword) fail(tokens.front(), std::string("expected '") + keyword + "'");
  if (tokens.size() != count + 1) fail(tokens.front(), "wrong number of labels");
  std::vector<Index> out;
  for (std::size_t i = 1; i < tokens.size(); ++i) {
    const auto v = to_positive(tokens[i]);
    if (v > n) fail(tokens[i], "vertex index out of range");
    out.push_back(v - 1);
  }
  return out;
}

}  // namespace

la::SparseMatrix parse_matrix(std::string_view text) {
  LineScanner s(text);
  const auto spec = parse_field(require_line(s, "field header"));
  const auto dims = require_line(s, "dimensions");
  expect_count(dims, 2, "'<rows> <cols>'");
  const auto rows = to_positive(dims[0]);
  const auto cols = to_positive(dims[1]);

  std::vector<la::Triplet> entries;
  std::set<std::pair<Index, Index>> seen;
  while (auto line = s.next()) {
    expect_count(*line, 3, "'<i> <j> <value>'");
    const auto i = to_positive((*line)[0]);
    const auto j = to_positive((*line)[1]);
    if (i > rows) fail((*line)[0], "row index out of range");
    if (j > cols) fail((*line)[1], "column index out of range");
    const auto v = to_residue((*line)[2], spec);
    if (!seen.emplace(i - 1, j - 1).second) fail((*line)[0], "duplicate entry");
    entries.push_back({i - 1, j - 1, v});
  }
  try {
    return la::SparseMatrix::from_triplets(spec, rows, cols, std::move(entries));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), s.line(), 1);
  }
}

std::string serialize_matrix(const la::SparseMatrix& a) {
  std::ostringstream os;
  os << field_line(a.spec()) << a.rows() << ' ' << a.cols() << '\n';
  for (const auto& t : a.triplets()) os << t.row + 1 << ' ' << t.col + 1 << ' ' << t.value << '\n';
  return os.str();
}

la::Vector parse_vector(std::string_view text, ff::FieldSpec spec) {
  LineScanner s(text);
  std::vector<la::Residue> values;
  while (auto line = s.next()) {
    expect_count(*line, 1, "one value per line");
    values.push_back(to_residue(line->front(), spec));
  }
  return la::Vector(spec, std::move(values));
}

std::string serialize_vector(const la::Vector& v) {
  std::string out;
  for (auto x : v.values()) {
    out += std::to_string(x);
    out += '\n';
  }
  return out;
}

std::vector<Index> parse_zfs(std::string_view text) {
  LineScanner s(text);
  std::vector<Index> z;
  std::vector<Index> sorted;
  while (auto line = s.next()) {
    expect_count(*line, 1, "one vertex index per line");
    const auto v = to_positive(line->front()) - 1;
    const auto it = std::lower_bound(sorted.begin(), sorted.end(), v);
    if (it != sorted.end() && *it == v) fail(line->front(), "repeated vertex");
    sorted.insert(it, v);
    z.push_back(v);
  }
  return z;
}

std::string serialize_zfs(std::span<const Index> z) {
  std::string out;
  for (auto v : z) {
    out += std::to_string(v + 1);
    out += '\n';
  }
  return out;
}

grid::BoardState parse_board(std::string_view text) {
  LineScanner s(text);
  const auto dims = require_line(s, "board dimensions");
  expect_count(dims, 2, "'<rows> <cols>'");
  const grid::GridSpec g{to_positive(dims[0]), to_positive(dims[1])};
  grid::BoardState board(g);
  for (std::size_t r = 0; r < g.rows; ++r) {
    const auto raw = s.next_raw();
    if (!raw) throw ParseError("unexpected end of board", s.line() + 1, 1);
    if (raw->size() != g.cols) {
      throw ParseError("expected " + std::to_string(g.cols) + " cells", s.line(),
                       std::min(raw->size(), g.cols) + 1);
    }
    for (std::size_t c = 0; c < g.cols; ++c) {
      const char ch = (*raw)[c];
      if (ch != '0' && ch != '1') throw ParseError("cell must be 0 or 1", s.line(), c + 1);
      if (ch == '1') board.set(r, c, true);
    }
  }
  if (auto extra = s.next()) fail(extra->front(), "trailing content after board");
  return board;
}

std::string serialize_board(const grid::BoardState& b) {
  const auto g = b.spec();
  std::string out = std::to_string(g.rows) + ' ' + std::to_string(g.cols) + '\n';
  for (std::size_t r = 0; r < g.rows; ++r) {
    for (std::size_t c = 0; c < g.cols; ++c) out += b.on(r, c) ? '1' : '0';
    out += '\n';
  }
  return out;
}

CoreCache parse_core_cache(std::string_view text) {
  LineScanner s(text);
  const auto magic = require_line(s, "'zfcore 1'");
  if (magic.size() != 2 || magic[0].text != "zfcore" || magic[1].text != "1") {
    fail(magic.front(), "expected 'zfcore 1'");
  }
  CoreCache cache;
  cache.spec = parse_field(require_line(s, "field header"));
  const auto size = require_line(s, "'size <n> <k>'");
  expect_count(size, 3, "'size <n> <k>'");
  if (size[0].text != "size") fail(size[0], "expected 'size <n> <k>'");
  cache.n = to_positive(size[1]);
  const auto k = to_positive(size[2]);
  if (k > cache.n) fail(size[2], "k exceeds n");

  cache.core.row_labels = parse_labels(require_line(s, "terminals"), "terminals", k, cache.n);
  cache.core.col_labels = parse_labels(require_line(s, "zfs"), "zfs", k, cache.n);
  cache.core.b = la::DenseMatrix(cache.spec, k, k);
  for (std::size_t i = 0; i < k; ++i) {
    const auto row = require_line(s, "core matrix row");
    expect_count(row, k, "k values per core row");
    for (std::size_t j = 0; j < k; ++j) cache.core.b.set(i, j, to_residue(row[j], cache.spec));
  }
  if (auto extra = s.next()) fail(extra->front(), "trailing content after core matrix");
  return cache;
}

std::string serialize_core_cache(const CoreCache& cache) {
  std::ostringstream os;
  const auto& c = cache.core;
  os << "zfcore 1\n" << field_line(cache.spec) << "size " << cache.n << ' ' << c.order() << '\n';
  os << "terminals";
  for (auto t : c.row_labels) os << ' ' << t + 1;
  os << "\nzfs";
  for (auto z : c.col_labels) os << ' ' << z + 1;
  os << '\n';
  for (std::size_t i = 0; i < c.b.rows(); ++i) {
    for (std::size_t j = 0; j < c.b.cols(); ++j) os << (j ? " " : "") << c.b.at(i, j);
    os << '\n';
  }
  return os.str();
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::filesystem::path& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

}  // namespace zfsolve::io
