#include "bellscope/optim.hpp"

#include <cmath>

namespace bellscope {

Eigen::VectorXd central_difference_gradient(const ScalarFn& f, const Eigen::VectorXd& x,
                                            double step) {
    Eigen::VectorXd g(x.size());
    Eigen::VectorXd xt = x;
    for (int i = 0; i < x.size(); ++i) {
        const double xi = x[i];
        xt[i] = xi + step;
        const double fp = f(xt);
        xt[i] = xi - step;
        const double fm = f(xt);
        xt[i] = xi;
        g[i] = (fp - fm) / (2.0 * step);
    }
    return g;
}

BfgsResult bfgs_minimize(const ScalarFn& f, Eigen::VectorXd x0, const BfgsOptions& opts) {
    const int n = int(x0.size());
    BfgsResult res;
    res.x = std::move(x0);
    res.value = f(res.x);

    Eigen::MatrixXd h = Eigen::MatrixXd::Identity(n, n);  // inverse-Hessian estimate
    Eigen::VectorXd g = central_difference_gradient(f, res.x, opts.fd_step);

    for (res.iterations = 0; res.iterations < opts.max_iterations; ++res.iterations) {
        if (g.cwiseAbs().maxCoeff() <= opts.gradient_tol) {
            res.converged = true;
            break;
        }
        Eigen::VectorXd d = -(h * g);
        double slope = g.dot(d);
        if (!(slope < 0.0)) {  // restart on a non-descent direction
            h.setIdentity();
            d = -g;
            slope = g.dot(d);
        }

        double alpha = 1.0;
        double fnew = res.value;
        bool moved = false;
        while (alpha > 1e-16) {
            fnew = f(res.x + alpha * d);
            if (fnew <= res.value + 1e-4 * alpha * slope) {
                moved = true;
                break;
            }
            alpha *= 0.5;
        }
        if (!moved) {
            // At the numerical-gradient noise floor.
            res.converged = true;
            break;
        }

        const Eigen::VectorXd xn = res.x + alpha * d;
        const Eigen::VectorXd gn = central_difference_gradient(f, xn, opts.fd_step);
        const Eigen::VectorXd s = xn - res.x;
        const Eigen::VectorXd yv = gn - g;
        const double sy = s.dot(yv);
        if (sy > 1e-12 * s.norm() * yv.norm()) {
            const double rho = 1.0 / sy;
            const Eigen::MatrixXd eye = Eigen::MatrixXd::Identity(n, n);
            h = (eye - rho * s * yv.transpose()) * h * (eye - rho * yv * s.transpose()) +
                rho * s * s.transpose();
        }

        const double df = res.value - fnew;
        res.x = xn;
        res.value = fnew;
        g = gn;
        if (df >= 0.0 && df <= 1e-15 * (1.0 + std::abs(res.value))) {
            res.converged = true;
            break;
        }
    }
    return res;
}

}  // namespace bellscope
