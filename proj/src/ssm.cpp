#include "evscan/ssm.hpp"

#include <cmath>
#include <stdexcept>

namespace evscan::ssm {

namespace {

/// (exp(x) - 1) / x, with the 4-term Taylor series below |x| = 1e-4 where the
/// direct form loses precision (the limit at x = 0 is 1).
double expm1_over_x(double x) {
    if (std::abs(x) < 1e-4)
        return 1.0 + x / 2.0 + x * x / 6.0 + x * x * x / 24.0;
    return std::expm1(x) / x;
}

void check_finite(const std::vector<double>& v, const char* what) {
    for (double x : v)
        if (!std::isfinite(x))
            throw std::invalid_argument(std::string("non-finite ") + what);
}

}  // namespace

void SsmParams::validate() const {
    if (!(delta > 0.0)) throw std::invalid_argument("delta must be positive");
    if (a.empty() || b.size() != a.size() || c.size() != a.size())
        throw std::invalid_argument("inconsistent SSM parameter dimensions");
    check_finite(a, "A");
    check_finite(b, "B");
    check_finite(c, "C");
}

DiscreteSsm discretize(const SsmParams& params) {
    params.validate();
    const std::size_t n = params.state_dim();
    DiscreteSsm d;
    d.a_bar.resize(n);
    d.b_bar.resize(n);
    d.c = params.c;
    for (std::size_t i = 0; i < n; ++i) {
        const double x = params.delta * params.a[i];
        d.a_bar[i] = std::exp(x);
        d.b_bar[i] = expm1_over_x(x) * params.delta * params.b[i];
    }
    return d;
}

std::vector<double> scan_recurrent(const DiscreteSsm& d,
                                   const std::vector<double>& x) {
    if (x.empty()) throw std::invalid_argument("scan_recurrent: empty input");
    const std::size_t n = d.state_dim();
    std::vector<double> h(n, 0.0);
    std::vector<double> y(x.size());
    for (std::size_t t = 0; t < x.size(); ++t) {
        double out = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            h[i] = d.a_bar[i] * h[i] + d.b_bar[i] * x[t];
            out += d.c[i] * h[i];
        }
        y[t] = out;
    }
    return y;
}

ScanKernel build_kernel(const DiscreteSsm& d, std::size_t length) {
    if (length == 0) throw std::invalid_argument("build_kernel: zero length");
    const std::size_t n = d.state_dim();
    ScanKernel kernel;
    kernel.k.resize(length);
    std::vector<double> power(d.b_bar);  // a_bar^j . b_bar
    for (std::size_t j = 0; j < length; ++j) {
        double v = 0.0;
        for (std::size_t i = 0; i < n; ++i) v += d.c[i] * power[i];
        kernel.k[j] = v;
        if (j + 1 < length)
            for (std::size_t i = 0; i < n; ++i) power[i] *= d.a_bar[i];
    }
    return kernel;
}

std::vector<double> scan_convolutional(const ScanKernel& kernel,
                                       const std::vector<double>& x) {
    if (kernel.k.size() != x.size())
        throw std::invalid_argument("scan_convolutional: kernel/input length mismatch");
    const std::size_t m = x.size();
    std::vector<double> y(m, 0.0);
    for (std::size_t t = 0; t < m; ++t) {
        double acc = 0.0;
        for (std::size_t j = 0; j <= t; ++j) acc += kernel.k[j] * x[t - j];
        y[t] = acc;
    }
    return y;
}

std::vector<double> selective_scan(const std::vector<SsmParams>& per_step,
                                   const std::vector<double>& x) {
    if (per_step.size() != x.size())
        throw std::invalid_argument("selective_scan: one parameter set per timestep");
    if (x.empty()) throw std::invalid_argument("selective_scan: empty input");
    const std::size_t n = per_step.front().state_dim();
    std::vector<double> h(n, 0.0);
    std::vector<double> y(x.size());
    for (std::size_t t = 0; t < x.size(); ++t) {
        const SsmParams& p = per_step[t];
        if (p.state_dim() != n)
            throw std::invalid_argument("selective_scan: state dimension varies");
        p.validate();
        double out = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const double xa = p.delta * p.a[i];
            const double a_bar = std::exp(xa);
            const double b_bar = expm1_over_x(xa) * p.delta * p.b[i];
            h[i] = a_bar * h[i] + b_bar * x[t];
            out += p.c[i] * h[i];
        }
        y[t] = out;
    }
    return y;
}

}  // namespace evscan::ssm
