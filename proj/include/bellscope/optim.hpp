#pragma once

// Dense quasi-Newton minimizer with central-difference gradients, sized for
// the few-dozen-parameter variational searches in this project.

#include <Eigen/Dense>

#include <functional>

namespace bellscope {

using ScalarFn = std::function<double(const Eigen::VectorXd&)>;

struct BfgsOptions {
    int max_iterations = 300;
    double gradient_tol = 3e-9;   // on the max-norm of the numerical gradient
    double fd_step = 1e-6;        // central-difference step
};

struct BfgsResult {
    Eigen::VectorXd x;
    double value = 0.0;
    int iterations = 0;
    bool converged = false;
};

Eigen::VectorXd central_difference_gradient(const ScalarFn& f, const Eigen::VectorXd& x,
                                            double step);

BfgsResult bfgs_minimize(const ScalarFn& f, Eigen::VectorXd x0, const BfgsOptions& opts = {});

}  // namespace bellscope
