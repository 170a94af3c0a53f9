#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace pp {

// Invalid graph data: out-of-range endpoints, duplicate edges, sinks.
struct graph_error : std::runtime_error {
    explicit graph_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Textual input rejected; `line` is 1-based.
struct parse_error : graph_error {
    parse_error(int line_no, const std::string& msg)
        : graph_error("line " + std::to_string(line_no) + ": " + msg), line(line_no) {}
    int line;
};

// A requested state space does not fit the configured table budget.
struct budget_error : std::runtime_error {
    explicit budget_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Default cap on table entries for the exhaustive game tables.
inline constexpr std::uint64_t kDefaultBudget = std::uint64_t(1) << 28;

}  // namespace pp
