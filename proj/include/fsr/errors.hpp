#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace fsr {

struct StencilTooSmall : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct InvalidParameter : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct DegenerateStencil : std::runtime_error {
    explicit DegenerateStencil(int node)
        : std::runtime_error("degenerate LSQ stencil at node " + std::to_string(node)),
          node(node) {}
    int node;
};
struct InadmissibleState : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct RoeFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct IterationFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct InvalidSeries : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Thrown when pseudo-time or unsteady marching produces an inadmissible
/// state; carries the step index and a copy of the offending iterate.
struct SolverDivergence : std::runtime_error {
    SolverDivergence(const std::string& what, long step, std::vector<double> snapshot)
        : std::runtime_error(what), step(step), iterate(std::move(snapshot)) {}
    long step;
    std::vector<double> iterate;
};

} // namespace fsr
