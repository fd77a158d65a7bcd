#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace charwalk {

// Thrown when a computation exceeds a configured resource cap (node budget,
// coefficient-table size). Carries whatever statistics were gathered before
// the limit fired, so callers can report partial progress.
class resource_limit_error : public std::runtime_error {
public:
    explicit resource_limit_error(const std::string& what,
                                  std::uint64_t nodes_visited = 0,
                                  std::uint64_t pruned = 0)
        : std::runtime_error(what), nodes_visited_(nodes_visited), pruned_(pruned) {}

    std::uint64_t nodes_visited() const noexcept { return nodes_visited_; }
    std::uint64_t pruned() const noexcept { return pruned_; }

private:
    std::uint64_t nodes_visited_;
    std::uint64_t pruned_;
};

// Invalid experiment configuration (bad key=value file, missing option,
// out-of-domain epsilon, ...). Maps to CLI exit code 2.
class config_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Failed file read/write. Maps to CLI exit code 4.
class io_error : public std::runtime_error {
public:
    io_error(const std::string& what, std::string path)
        : std::runtime_error(what + ": " + path), path_(std::move(path)) {}

    const std::string& path() const noexcept { return path_; }

private:
    std::string path_;
};

} // namespace charwalk
