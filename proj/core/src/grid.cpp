#include "cglv/grid.hpp"

#include <cmath>

namespace cglv {

double Vec2::norm() const { return std::hypot(x, y); }

GridSpec::GridSpec(double L, int N) : half_extent(L), resolution(N) {
    if (N < 3) throw std::invalid_argument("GridSpec: resolution must be >= 3, got " + std::to_string(N));
    if (!(L > 0.0)) throw std::invalid_argument("GridSpec: half_extent must be positive");
}

Region Region::square(double margin) {
    Region r;
    r.kind = Kind::square;
    r.margin = margin;
    return r;
}

Region Region::disk(Vec2 center, double radius) {
    Region r;
    r.kind = Kind::disk;
    r.center = center;
    r.r_outer = radius;
    return r;
}

Region Region::annulus(Vec2 center, double r_inner, double r_outer) {
    if (r_inner >= r_outer) throw std::invalid_argument("Region::annulus: need r_inner < r_outer");
    Region r;
    r.kind = Kind::annulus;
    r.center = center;
    r.r_inner = r_inner;
    r.r_outer = r_outer;
    return r;
}

std::string Region::describe() const {
    switch (kind) {
        case Kind::square:
            return "square(margin=" + std::to_string(margin) + ")";
        case Kind::disk:
            return "disk(center=(" + std::to_string(center.x) + "," + std::to_string(center.y) +
                   "),r=" + std::to_string(r_outer) + ")";
        case Kind::annulus:
            return "annulus(center=(" + std::to_string(center.x) + "," + std::to_string(center.y) +
                   "),r=" + std::to_string(r_inner) + ".." + std::to_string(r_outer) + ")";
    }
    return "?";
}

namespace {

template <typename T>
std::pair<Field<T>, Field<T>> gradient_impl(const Field<T>& f) {
    const GridSpec& g = f.spec();
    const int n = g.resolution;
    if (n < 3) throw std::invalid_argument("gradient: need N >= 3");
    const double inv2h = 1.0 / (2.0 * g.spacing());

    Field<T> dx(g), dy(g);
    for (int iy = 0; iy < n; ++iy) {
        dx.at(0, iy) = (-3.0 * f.at(0, iy) + 4.0 * f.at(1, iy) - f.at(2, iy)) * inv2h;
        for (int ix = 1; ix < n - 1; ++ix)
            dx.at(ix, iy) = (f.at(ix + 1, iy) - f.at(ix - 1, iy)) * inv2h;
        dx.at(n - 1, iy) = (3.0 * f.at(n - 1, iy) - 4.0 * f.at(n - 2, iy) + f.at(n - 3, iy)) * inv2h;
    }
    for (int ix = 0; ix < n; ++ix) {
        dy.at(ix, 0) = (-3.0 * f.at(ix, 0) + 4.0 * f.at(ix, 1) - f.at(ix, 2)) * inv2h;
        dy.at(ix, n - 1) = (3.0 * f.at(ix, n - 1) - 4.0 * f.at(ix, n - 2) + f.at(ix, n - 3)) * inv2h;
    }
    for (int iy = 1; iy < n - 1; ++iy)
        for (int ix = 0; ix < n; ++ix)
            dy.at(ix, iy) = (f.at(ix, iy + 1) - f.at(ix, iy - 1)) * inv2h;
    return {std::move(dx), std::move(dy)};
}

}  // namespace

std::pair<ComplexField, ComplexField> gradient(const ComplexField& f) { return gradient_impl(f); }
std::pair<ScalarField, ScalarField> gradient(const ScalarField& f) { return gradient_impl(f); }

ComplexField laplacian(const ComplexField& f) {
    const GridSpec& g = f.spec();
    const int n = g.resolution;
    if (n < 3) throw std::invalid_argument("laplacian: need N >= 3");
    const double invh2 = 1.0 / (g.spacing() * g.spacing());

    ComplexField out(g);
    for (int iy = 1; iy < n - 1; ++iy)
        for (int ix = 1; ix < n - 1; ++ix)
            out.at(ix, iy) = (f.at(ix + 1, iy) + f.at(ix - 1, iy) + f.at(ix, iy + 1) +
                              f.at(ix, iy - 1) - 4.0 * f.at(ix, iy)) *
                             invh2;
    return out;
}

namespace {

// Fraction of the cell centered at `node` (side h) inside the radial band
// [r_inner, r_outer] around `center`, by 4x4 subsampling.
double cell_fraction(const Vec2& node, double h, const Vec2& center, double r_inner, double r_outer) {
    const double rc = (node - center).norm();
    const double half_diag = 0.7071067811865476 * h;
    if (rc + half_diag <= r_outer && rc - half_diag >= r_inner) return 1.0;
    if (rc - half_diag > r_outer || rc + half_diag < r_inner) return 0.0;
    int hits = 0;
    for (int sy = 0; sy < 4; ++sy) {
        const double oy = node.y + ((sy + 0.5) / 4.0 - 0.5) * h;
        for (int sx = 0; sx < 4; ++sx) {
            const double ox = node.x + ((sx + 0.5) / 4.0 - 0.5) * h;
            const double r = std::hypot(ox - center.x, oy - center.y);
            if (r <= r_outer && r >= r_inner) ++hits;
        }
    }
    return hits / 16.0;
}

}  // namespace

ScalarField region_weights(const GridSpec& spec, const Region& region) {
    const int n = spec.resolution;
    const double h = spec.spacing();
    ScalarField w(spec);

    if (region.kind == Region::Kind::square) {
        const int skip = static_cast<int>(std::ceil(region.margin / h - 1e-12));
        std::vector<double> w1(n, 0.0);
        for (int k = skip; k < n - skip; ++k)
            w1[k] = (k == skip || k == n - 1 - skip) ? 0.5 * h : h;
        if (skip >= n / 2) std::fill(w1.begin(), w1.end(), 0.0);
        for (int iy = 0; iy < n; ++iy)
            for (int ix = 0; ix < n; ++ix)
                w.at(ix, iy) = w1[ix] * w1[iy];
        return w;
    }

    const double r0 = region.kind == Region::Kind::annulus ? region.r_inner : 0.0;
    const double r1 = region.r_outer;
    const double cellarea = h * h;
    for (int iy = 0; iy < n; ++iy)
        for (int ix = 0; ix < n; ++ix) {
            const double frac = cell_fraction(spec.node(ix, iy), h, region.center, r0, r1);
            if (frac > 0.0) w.at(ix, iy) = frac * cellarea;
        }
    return w;
}

IntegralResult integrate(const ScalarField& f, const Region& region) {
    ScalarField w = region_weights(f.spec(), region);
    const long n = f.spec().size();
    std::vector<double> prod(n);
    bool any = false;
    for (long i = 0; i < n; ++i) {
        prod[i] = f.data()[i] * w.data()[i];
        any = any || w.data()[i] != 0.0;
    }
    IntegralResult res;
    res.empty_region = !any;
    res.value = any ? pairwise_sum(prod.data(), n) : 0.0;
    return res;
}

double pairwise_sum(const double* v, long n) {
    if (n <= 8) {
        double s = 0.0;
        for (long i = 0; i < n; ++i) s += v[i];
        return s;
    }
    const long half = n / 2;
    return pairwise_sum(v, half) + pairwise_sum(v + half, n - half);
}

namespace {

template <typename T>
void check_finite_impl(const Field<T>& f, const std::string& context) {
    const int n = f.spec().resolution;
    for (int iy = 0; iy < n; ++iy)
        for (int ix = 0; ix < n; ++ix) {
            const T& v = f.at(ix, iy);
            bool ok;
            if constexpr (std::is_same_v<T, Complex>)
                ok = std::isfinite(v.real()) && std::isfinite(v.imag());
            else
                ok = std::isfinite(v);
            if (!ok)
                throw std::runtime_error(context + ": non-finite value at node (" +
                                         std::to_string(ix) + "," + std::to_string(iy) + ")");
        }
}

}  // namespace

void check_finite(const ComplexField& f, const std::string& context) { check_finite_impl(f, context); }
void check_finite(const ScalarField& f, const std::string& context) { check_finite_impl(f, context); }

}  // namespace cglv
