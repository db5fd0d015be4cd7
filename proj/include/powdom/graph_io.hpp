#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "powdom/graph.hpp"

namespace powdom {

/// Parse failure with the byte offset of the offending input position.
class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& msg, size_t offset)
        : std::runtime_error(msg + " (byte " + std::to_string(offset) + ")"), offset_(offset) {}
    size_t offset() const { return offset_; }

private:
    size_t offset_;
};

/// One graph6 line, optionally prefixed with ">>graph6<<". Trailing bytes
/// beyond the encoded length are rejected.
Graph parse_graph6(std::string_view line);

/// Standard printable graph6 encoding of g (no trailing newline).
std::string emit_graph6(const Graph& g);

enum class IndexBase { zero, one };

/// "n m" header followed by m "u v" lines. Duplicate edges collapse;
/// self-loops and out-of-range indices are errors.
Graph parse_edge_list(std::string_view text, IndexBase base = IndexBase::zero);

std::string emit_edge_list(const Graph& g, IndexBase base = IndexBase::zero);

/// {"n": int, "edges": [[u,v], ...]}
Graph parse_graph_json(std::string_view text);
std::string emit_graph_json(const Graph& g);

}  // namespace powdom
