// linear_system.hpp — second-order linear system M q" + G q' + K q = 0, q = (x, y).

#pragma once

#include <Eigen/Dense>

namespace lee {

struct LinearSystem {
    Eigen::Matrix2d M;  // kinetic matrix, must be invertible
    Eigen::Matrix2d G;  // velocity coupling
    Eigen::Matrix2d K;  // position coupling

    // First-order form on u = (q, q'):  u' = F u with
    //   F = [[0, I], [-M^-1 K, -M^-1 G]].
    // Throws std::invalid_argument("degenerate kinetic term") if M is singular.
    Eigen::Matrix4d first_order() const;
};

}  // namespace lee
