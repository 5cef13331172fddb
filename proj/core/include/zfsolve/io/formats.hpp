#pragma once

#include <cstddef>
#include <filesystem>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "zfsolve/core/solver.hpp"
#include "zfsolve/ff.hpp"
#include "zfsolve/grid/lights_out.hpp"
#include "zfsolve/la/sparse_matrix.hpp"
#include "zfsolve/la/vector.hpp"

// Text formats. All indices in files are one-based.
//
//   matrix (.zfm)   field gf2 | field gfp <p>
//                   <rows> <cols>
//                   <i> <j> <value>      (one triplet per line)
//   vector          one value per line
//   zero forcing    one vertex index per line
//   board           <rows> <cols>, then rows lines of cols characters 0/1
//   core cache      zfcore 1
//                   field ...
//                   size <n> <k>
//                   terminals <t_1> ... <t_k>
//                   zfs <z_1> ... <z_k>
//                   k lines of k values (core matrix, row-major)
//
// Blank lines and lines starting with '#' are ignored, except inside boards.
namespace zfsolve::io {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column);

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

la::SparseMatrix parse_matrix(std::string_view text);
std::string serialize_matrix(const la::SparseMatrix& a);

la::Vector parse_vector(std::string_view text, ff::FieldSpec spec);
std::string serialize_vector(const la::Vector& v);

/// Throws ParseError on a zero index or a repeated vertex.
std::vector<Index> parse_zfs(std::string_view text);
std::string serialize_zfs(std::span<const Index> z);

grid::BoardState parse_board(std::string_view text);
std::string serialize_board(const grid::BoardState& b);

struct CoreCache {
  ff::FieldSpec spec;
  std::size_t n = 0;
  core::CoreMatrix core;

  friend bool operator==(const CoreCache&, const CoreCache&) = default;
};

CoreCache parse_core_cache(std::string_view text);
std::string serialize_core_cache(const CoreCache& cache);

/// Throws std::runtime_error if the file cannot be read / written.
std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view content);

}  // namespace zfsolve::io
