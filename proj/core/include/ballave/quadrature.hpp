#pragma once

#include <vector>

namespace ballave {

/// Gauss-Legendre rule mapped to [0,1]; weights are positive and sum to 1.
struct QuadratureRule {
    std::vector<double> nodes;
    std::vector<double> weights;

    int node_count() const { return static_cast<int>(nodes.size()); }

    /// sum_i w_i g(u_i)
    template <typename G>
    double integrate(G&& g) const {
        double acc = 0.0;
        for (std::size_t i = 0; i < nodes.size(); ++i)
            acc += weights[i] * g(nodes[i]);
        return acc;
    }
};

/// Nodes/weights by Newton iteration on the Legendre polynomial; n >= 1.
QuadratureRule gauss_legendre(int n);

/// Shared default rule (64 nodes).
const QuadratureRule& default_rule();

} // namespace ballave
