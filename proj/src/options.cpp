#include "gpc/options.hpp"

#include "gpc/error.hpp"

#include <cstdlib>
#include <string>

namespace gpc {

namespace {

template <typename T>
void read_env(const char* name, T& target) {
    const char* raw = std::getenv(name);
    if (raw == nullptr || *raw == '\0')
        return;
    try {
        std::size_t used = 0;
        auto value = std::stoull(raw, &used);
        if (used != std::string(raw).size() || value == 0)
            throw std::invalid_argument(name);
        target = static_cast<T>(value);
    } catch (const std::logic_error&) {
        throw PreconditionError(std::string(name) + " must be a positive integer, got '" + raw + "'");
    }
}

}  // namespace

SearchOptions SearchOptions::from_environment() {
    SearchOptions options;
    read_env("GPC_NODE_BUDGET", options.node_budget);
    read_env("GPC_VERTEX_CAP", options.vertex_cap);
    read_env("GPC_JOBS", options.jobs);
    return options;
}

}  // namespace gpc
