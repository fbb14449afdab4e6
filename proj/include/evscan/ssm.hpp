#pragma once

#include <cstddef>
#include <vector>

namespace evscan::ssm {

/// Continuous-time diagonal SSM: state evolution a (diagonal of A), input map
/// b (N x 1), readout c (1 x N), and time scale delta.
struct SsmParams {
    double delta = 1.0;
    std::vector<double> a;  // diagonal of A
    std::vector<double> b;
    std::vector<double> c;

    std::size_t state_dim() const { return a.size(); }
    void validate() const;  // throws std::invalid_argument
};

/// Zero-order-hold discretization: a_bar = exp(delta*a),
/// b_bar = (delta*a)^-1 (exp(delta*a) - 1) * delta*b, elementwise.
struct DiscreteSsm {
    std::vector<double> a_bar;
    std::vector<double> b_bar;
    std::vector<double> c;

    std::size_t state_dim() const { return a_bar.size(); }
};

DiscreteSsm discretize(const SsmParams& params);

/// Sequential recurrence h_t = a_bar*h_{t-1} + b_bar*x_t, y_t = c.h_t, h_0 = 0.
std::vector<double> scan_recurrent(const DiscreteSsm& d,
                                   const std::vector<double>& x);

/// Structured kernel k[j] = c . a_bar^j . b_bar for j = 0..length-1.
struct ScanKernel {
    std::vector<double> k;
};

ScanKernel build_kernel(const DiscreteSsm& d, std::size_t length);

/// Causal convolution y_t = sum_{j<=t} k[j] * x[t-j]; kernel and input must
/// have equal length.
std::vector<double> scan_convolutional(const ScanKernel& kernel,
                                       const std::vector<double>& x);

/// Time-varying recurrence: params[t] is discretized and applied at step t.
/// All steps must share the state dimension.
std::vector<double> selective_scan(const std::vector<SsmParams>& per_step,
                                   const std::vector<double>& x);

}  // namespace evscan::ssm
