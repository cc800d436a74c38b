#pragma once

#include <filesystem>
#include <vector>

namespace cglv {

/// Tabulated modulus profile f(r) of the degree-+-1 vortex core, the
/// solution of f'' + f'/r - f/r^2 + f(1 - f^2) = 0 with f(0) = 0,
/// f(+inf) = 1. Beyond r_max the far-field closure 1 - 1/(2 r^2) is used.
struct RadialProfile {
    double r_max = 0.0;
    std::vector<double> r;   // r_j = j * r_max / (M-1)
    std::vector<double> f;
    std::vector<double> fp;  // f'(r_j)
    double slope_at_origin = 0.0;

    /// Cubic-Hermite interpolation on the table; tail closure beyond r_max.
    double evaluate(double rr) const;
    double evaluate_derivative(double rr) const;
};

struct ProfileOptions {
    double r_max = 20.0;
    int samples = 2000;
    double tol = 1e-4;  // residual is reconstructed by table differencing, O(dr^2)
};

RadialProfile solve_profile(double r_max, int samples, double tol);

/// Max-norm residual of the radial ODE over [0.1, r_max - 1], with f''
/// reconstructed by differencing the tabulated f'.
double profile_ode_residual(const RadialProfile& p);

void save_profile_csv(const std::filesystem::path& path, const RadialProfile& p);
RadialProfile load_profile_csv(const std::filesystem::path& path);

/// Disk-cached solve keyed by (r_max, samples, tol).
RadialProfile cached_profile(const std::filesystem::path& cache_dir, const ProfileOptions& opts);

}  // namespace cglv
