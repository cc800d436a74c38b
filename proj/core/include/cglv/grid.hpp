#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cglv {

using Complex = std::complex<double>;

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    Vec2() = default;
    Vec2(double x_, double y_) : x(x_), y(y_) {}

    Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
    Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
    Vec2 operator*(double s) const { return {x * s, y * s}; }
    Vec2 operator/(double s) const { return {x / s, y / s}; }
    Vec2& operator+=(const Vec2& o) { x += o.x; y += o.y; return *this; }
    Vec2& operator-=(const Vec2& o) { x -= o.x; y -= o.y; return *this; }

    double dot(const Vec2& o) const { return x * o.x + y * o.y; }
    /// Counter-clockwise quarter turn: (x, y) -> (-y, x).
    Vec2 perp() const { return {-y, x}; }
    double norm2() const { return x * x + y * y; }
    double norm() const;
};

inline Vec2 operator*(double s, const Vec2& v) { return v * s; }

/// Uniform node-centered grid on the origin-centered square [-L, L]^2.
struct GridSpec {
    double half_extent = 1.0;  // L
    int resolution = 3;        // N nodes per axis

    GridSpec() = default;
    GridSpec(double L, int N);

    double spacing() const { return 2.0 * half_extent / (resolution - 1); }
    long size() const { return static_cast<long>(resolution) * resolution; }
    double coord(int k) const { return -half_extent + k * spacing(); }
    Vec2 node(int ix, int iy) const { return {coord(ix), coord(iy)}; }
    long index(int ix, int iy) const { return static_cast<long>(iy) * resolution + ix; }

    bool operator==(const GridSpec& o) const = default;
};

template <typename T>
class Field {
public:
    Field() = default;
    explicit Field(const GridSpec& spec, T fill = T{})
        : spec_(spec), values_(spec.size(), fill) {}

    const GridSpec& spec() const { return spec_; }
    int n() const { return spec_.resolution; }

    T& at(int ix, int iy) { return values_[spec_.index(ix, iy)]; }
    const T& at(int ix, int iy) const { return values_[spec_.index(ix, iy)]; }

    T* data() { return values_.data(); }
    const T* data() const { return values_.data(); }
    const std::vector<T>& values() const { return values_; }
    std::vector<T>& values() { return values_; }

private:
    GridSpec spec_;
    std::vector<T> values_;
};

using ComplexField = Field<Complex>;
using ScalarField = Field<double>;
using VectorField = Field<Vec2>;

/// Integration region: the full square (minus a boundary margin), a disk,
/// or an annulus. Disk/annulus weights come from cell-inclusion fractions
/// with 4x4 subsampling of boundary cells.
struct Region {
    enum class Kind { square, disk, annulus };

    Kind kind = Kind::square;
    Vec2 center{};
    double r_inner = 0.0;
    double r_outer = 0.0;
    double margin = 0.0;  // square only: strip excluded along the boundary

    static Region square(double margin = 0.0);
    static Region disk(Vec2 center, double radius);
    static Region annulus(Vec2 center, double r_inner, double r_outer);

    std::string describe() const;
};

struct IntegralResult {
    double value = 0.0;
    bool empty_region = false;
};

/// Centered second-order differences in the interior, one-sided
/// second-order on the boundary.
std::pair<ComplexField, ComplexField> gradient(const ComplexField& f);
std::pair<ScalarField, ScalarField> gradient(const ScalarField& f);

/// 5-point stencil on interior nodes; boundary rows are left at zero
/// (the solver supplies boundary data separately).
ComplexField laplacian(const ComplexField& f);

IntegralResult integrate(const ScalarField& f, const Region& region);

/// Node weights realizing `integrate` (trapezoid on the square,
/// cell-fraction masks for disk/annulus).
ScalarField region_weights(const GridSpec& spec, const Region& region);

/// Deterministic pairwise tree sum.
double pairwise_sum(const double* v, long n);

/// Throws if the field contains a non-finite value; the message names the
/// first offending node and `context`.
void check_finite(const ComplexField& f, const std::string& context);
void check_finite(const ScalarField& f, const std::string& context);

}  // namespace cglv
