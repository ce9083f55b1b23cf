#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "rigi/graph.hpp"

namespace rigi {

/// Parse failure with the byte offset of the offending character in the
/// original input line.
class Graph6Error : public std::runtime_error {
 public:
  Graph6Error(const std::string& what, std::size_t byte_offset)
      : std::runtime_error(what + " (byte " + std::to_string(byte_offset) + ")"),
        offset_(byte_offset) {}

  std::size_t byte_offset() const { return offset_; }

 private:
  std::size_t offset_;
};

/// Decodes one graph6 line.  A leading ">>graph6<<" header is tolerated;
/// trailing CR/LF is ignored.  Throws Graph6Error on malformed input or
/// vertex counts outside [1, 64].
Graph from_graph6(std::string_view line);

/// Standard graph6 encoding, padding bits zero.  Never emits a header.
std::string to_graph6(const Graph& g);

}  // namespace rigi
