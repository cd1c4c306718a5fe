#include "ballave/quadrature.hpp"

#include <cmath>
#include <stdexcept>

#include "ballave/grid.hpp"

namespace ballave {

QuadratureRule gauss_legendre(int n) {
    if (n < 1)
        throw std::invalid_argument("gauss_legendre needs n >= 1");
    QuadratureRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    // Roots of P_n on (-1,1), symmetric; solve the upper half by Newton.
    // Extended precision here: node error is amplified by the radius when the
    // rule meets oscillatory integrands, and the oracles ask for 1e-12 at s=50.
    for (int i = 0; i < (n + 1) / 2; ++i) {
        long double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
        long double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            long double p0 = 1.0L, p1 = x;
            for (int k = 2; k <= n; ++k) {
                const long double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0L);
            const long double dx = p1 / dp;
            x -= dx;
            if (std::abs(static_cast<double>(dx)) < 1e-17)
                break;
        }
        const long double w = 2.0L / ((1.0L - x * x) * dp * dp);
        // map [-1,1] -> [0,1]
        rule.nodes[i] = static_cast<double>(0.5L * (1.0L - x));
        rule.nodes[n - 1 - i] = static_cast<double>(0.5L * (1.0L + x));
        rule.weights[i] = static_cast<double>(0.5L * w);
        rule.weights[n - 1 - i] = static_cast<double>(0.5L * w);
    }
    return rule;
}

const QuadratureRule& default_rule() {
    static const QuadratureRule rule = gauss_legendre(64);
    return rule;
}

} // namespace ballave
