#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hamkit {

// Base of every error raised by the library.
struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct index_out_of_range : error {
  using error::error;
};

struct self_loop : error {
  using error::error;
};

struct same_vertex : error {
  using error::error;
};

struct invalid_k : error {
  using error::error;
};

struct invalid_params : error {
  using error::error;
};

struct invalid_probability : error {
  using error::error;
};

struct unsupported_header : error {
  using error::error;
};

// Input text could not be decoded. `line` is 1-based for edge lists and 0
// for graph6; `position` is a byte offset (graph6) or column (edge list).
struct parse_error : error {
  parse_error(const std::string& what, std::size_t line, std::size_t position)
      : error(what + " (line " + std::to_string(line) + ", position " +
              std::to_string(position) + ")"),
        line(line),
        position(position) {}
  std::size_t line;
  std::size_t position;
};

struct syntax_error : error {
  syntax_error(const std::string& what, std::size_t position)
      : error(what + " at position " + std::to_string(position)),
        position(position) {}
  std::size_t position;
};

struct zero_order_atom : syntax_error {
  using syntax_error::syntax_error;
};

// Raised when an exponential search refuses an instance outright (too many
// vertices for the bitmask kernels, or a host beyond the exact-scan limit).
struct budget_exceeded : error {
  using error::error;
};

struct vertex_inside_h : error {
  using error::error;
};

struct vertex_not_on_arc : error {
  using error::error;
};

// Every vertex of an attachment arc was insertible. Cannot happen on a longest
// cycle, so it means the caller's cycle was not longest.
struct all_insertible : error {
  all_insertible(const std::string& what, int attachment)
      : error(what), attachment(attachment) {}
  int attachment;
};

struct precondition_i_failed : error {
  precondition_i_failed(const std::string& what, int vertex)
      : error(what), vertex(vertex) {}
  int vertex;
};

struct precondition_ii_failed : error {
  precondition_ii_failed(const std::string& what, int x, int y, int edge_a,
                         int edge_b)
      : error(what), x(x), y(y), edge_a(edge_a), edge_b(edge_b) {}
  int x, y;
  int edge_a, edge_b;
};

// The merge loop made no progress although its preconditions held. This is a
// bug (or a wrong alpha passed by the caller), never a property of the input.
struct internal_merge_stuck : error {
  using error::error;
};

}  // namespace hamkit
