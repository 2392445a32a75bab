#include "calibra/embedding.hpp"

#include <cmath>
#include <stdexcept>

#include "calibra/omega.hpp"

namespace calibra {

namespace {

constexpr int kCircleNodes = 2048;

double sqrt_kernel(const DiskPoint& x, double theta) {
    return std::sqrt(poisson_kernel(x, CirclePoint(theta)));
}

// Richardson-extrapolated central difference of theta -> sqrt(p(., theta))
// in the complex direction `dir` at the factor point x.
double fd_sqrt_kernel(const DiskPoint& x, std::complex<double> dir, double h, double theta) {
    auto at = [&](double t) { return sqrt_kernel(DiskPoint(x.z() + t * dir), theta); };
    const double d_h = (at(h) - at(-h)) / (2.0 * h);
    const double d_h2 = (at(h / 2.0) - at(-h / 2.0)) / h;
    return (4.0 * d_h2 - d_h) / 3.0;
}

}  // namespace

double phi0_evaluate(const PolyDiskPoint& x, const TorusPoint& theta) {
    if (x.n() != theta.n()) throw std::invalid_argument("phi0_evaluate: dimension mismatch");
    double v = 1.0;
    for (int i = 0; i < x.n(); ++i) v *= std::sqrt(poisson_kernel(x[i], theta[i]));
    return v;
}

double GramMatrix::det() const {
    std::vector<double> a = entries;
    const int m = dim;
    double d = 1.0;
    for (int col = 0; col < m; ++col) {
        int pivot = col;
        for (int r = col + 1; r < m; ++r)
            if (std::abs(a[static_cast<std::size_t>(r) * m + col]) >
                std::abs(a[static_cast<std::size_t>(pivot) * m + col]))
                pivot = r;
        if (a[static_cast<std::size_t>(pivot) * m + col] == 0.0) return 0.0;
        if (pivot != col) {
            for (int c = 0; c < m; ++c)
                std::swap(a[static_cast<std::size_t>(pivot) * m + c],
                          a[static_cast<std::size_t>(col) * m + c]);
            d = -d;
        }
        const double p = a[static_cast<std::size_t>(col) * m + col];
        d *= p;
        for (int r = col + 1; r < m; ++r) {
            const double f = a[static_cast<std::size_t>(r) * m + col] / p;
            for (int c = col; c < m; ++c)
                a[static_cast<std::size_t>(r) * m + c] -= f * a[static_cast<std::size_t>(col) * m + c];
        }
    }
    return d;
}

GramMatrix pullback_metric(const PolyDiskPoint& x, double step) {
    if (step < 1e-6 || step > 1e-3)
        throw std::invalid_argument("pullback_metric: step must lie in [1e-6, 1e-3]");
    const int n = x.n();
    const int dim = 2 * n;

    // Phi_0 is a product over factors, so every L2 pairing reduces to
    // one-dimensional circle integrals:
    //   <d_(i,c), d_(i,c')>  within a factor,
    //   <d_(i,c), sqrt p_i> <d_(j,c'), sqrt p_j>  across factors,
    // because the untouched factors integrate to |sqrt p|^2 = 1.
    const double h = two_pi / kCircleNodes;
    std::vector<std::array<std::array<double, 2>, 2>> block(static_cast<std::size_t>(n));
    std::vector<std::array<double, 2>> cross(static_cast<std::size_t>(n));
    std::vector<double> mass(static_cast<std::size_t>(n));

    const std::complex<double> dirs[2] = {{1.0, 0.0}, {0.0, 1.0}};
    for (int i = 0; i < n; ++i) {
        std::array<std::array<double, 2>, 2> blk{{{0.0, 0.0}, {0.0, 0.0}}};
        std::array<double, 2> crs{0.0, 0.0};
        double ms = 0.0;
        for (int node = 0; node < kCircleNodes; ++node) {
            const double theta = h * node;
            const double base = sqrt_kernel(x[i], theta);
            double d[2];
            for (int c = 0; c < 2; ++c) d[c] = fd_sqrt_kernel(x[i], dirs[c], step, theta);
            for (int c = 0; c < 2; ++c) {
                for (int cc = c; cc < 2; ++cc) blk[static_cast<std::size_t>(c)][static_cast<std::size_t>(cc)] += d[c] * d[cc];
                crs[static_cast<std::size_t>(c)] += d[c] * base;
            }
            ms += base * base;
        }
        for (int c = 0; c < 2; ++c)
            for (int cc = c; cc < 2; ++cc) {
                blk[static_cast<std::size_t>(c)][static_cast<std::size_t>(cc)] /= kCircleNodes;
                blk[static_cast<std::size_t>(cc)][static_cast<std::size_t>(c)] =
                    blk[static_cast<std::size_t>(c)][static_cast<std::size_t>(cc)];
            }
        for (int c = 0; c < 2; ++c) crs[static_cast<std::size_t>(c)] /= kCircleNodes;
        block[static_cast<std::size_t>(i)] = blk;
        cross[static_cast<std::size_t>(i)] = crs;
        mass[static_cast<std::size_t>(i)] = ms / kCircleNodes;
    }

    GramMatrix g;
    g.dim = dim;
    g.entries.assign(static_cast<std::size_t>(dim) * dim, 0.0);
    for (int i = 0; i < n; ++i) {
        for (int c = 0; c < 2; ++c) {
            for (int j = 0; j < n; ++j) {
                for (int cc = 0; cc < 2; ++cc) {
                    double v;
                    if (i == j) {
                        v = block[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)][static_cast<std::size_t>(cc)];
                        for (int l = 0; l < n; ++l)
                            if (l != i) v *= mass[static_cast<std::size_t>(l)];
                    } else {
                        v = cross[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] *
                            cross[static_cast<std::size_t>(j)][static_cast<std::size_t>(cc)];
                        for (int l = 0; l < n; ++l)
                            if (l != i && l != j) v *= mass[static_cast<std::size_t>(l)];
                    }
                    g.at(2 * i + c, 2 * j + cc) = v;
                }
            }
        }
    }
    return g;
}

double volume_density_ratio(const PolyDiskPoint& x) {
    const GramMatrix g = pullback_metric(x);
    double hyperbolic_density = 1.0;
    for (int i = 0; i < x.n(); ++i) {
        const double w = 1.0 - x[i].abs2();
        hyperbolic_density *= 4.0 / (w * w);
    }
    return std::sqrt(g.det()) / hyperbolic_density;
}

Frame tangent_frame_at_origin(int n, TangentFrameReport* report, int kmax) {
    Frame frame = standard_frame(n);
    if (report) {
        // One factor suffices: at the origin the differential in a factor
        // direction is a function of that circle alone, the others sit at
        // the constant 1.
        const double h = two_pi / kCircleNodes;
        const DiskPoint origin;
        TangentFrameReport rep;
        const std::complex<double> dirs[2] = {{1.0, 0.0}, {0.0, 1.0}};
        for (int c = 0; c < 2; ++c) {
            std::vector<double> d(kCircleNodes);
            for (int node = 0; node < kCircleNodes; ++node)
                d[static_cast<std::size_t>(node)] = fd_sqrt_kernel(origin, dirs[c], 1e-4, h * node);

            // band-limited Fourier data up to kmax
            double c0 = 0.0;
            std::vector<double> ak(static_cast<std::size_t>(kmax) + 1, 0.0),
                bk(static_cast<std::size_t>(kmax) + 1, 0.0);
            for (int node = 0; node < kCircleNodes; ++node) {
                const double t = h * node, v = d[static_cast<std::size_t>(node)];
                c0 += v;
                for (int k = 1; k <= kmax; ++k) {
                    ak[static_cast<std::size_t>(k)] += v * std::cos(k * t);
                    bk[static_cast<std::size_t>(k)] += v * std::sin(k * t);
                }
            }
            c0 /= kCircleNodes;
            for (int k = 1; k <= kmax; ++k) {
                ak[static_cast<std::size_t>(k)] *= 2.0 / kCircleNodes;
                bk[static_cast<std::size_t>(k)] *= 2.0 / kCircleNodes;
            }

            // norm^2 of the band-limited part, and of the span component
            double band2 = c0 * c0;
            for (int k = 1; k <= kmax; ++k)
                band2 += 0.5 * (ak[static_cast<std::size_t>(k)] * ak[static_cast<std::size_t>(k)] +
                                bk[static_cast<std::size_t>(k)] * bk[static_cast<std::size_t>(k)]);
            // Projections onto the unit modes sqrt2 cos theta, sqrt2 sin theta.
            const double pc = ak[1] / std::numbers::sqrt2;
            const double ps = bk[1] / std::numbers::sqrt2;
            double res2 = band2 - pc * pc - ps * ps;
            if (res2 < 0.0) res2 = 0.0;
            const double norm = std::sqrt(band2);
            rep.span_residual = std::max(rep.span_residual, std::sqrt(res2) / norm);

            // The pullback metric at the origin gives |dPhi| = 1/sqrt2.
            const double main = c == 0 ? pc : ps;
            const double other = c == 0 ? ps : pc;
            rep.scale_error = std::max(rep.scale_error,
                                       std::abs(main - 1.0 / std::numbers::sqrt2) + std::abs(other));
        }
        *report = rep;
    }
    return frame;
}

double equivariance_residual(const ProductAutomorphism& g, const PolyDiskPoint& x, int grid) {
    const int n = x.n();
    if (g.n() != n) throw std::invalid_argument("equivariance_residual: dimension mismatch");
    if (grid < 32) throw std::invalid_argument("equivariance_residual: grid must be >= 32");
    if (n > 2) throw std::invalid_argument("equivariance_residual: grid evaluation limited to n <= 2");

    const ProductAutomorphism ginv = g.inverse();
    const PolyDiskPoint gx = g.apply(x);
    std::vector<DiskPoint> go;
    go.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) go.push_back(g[i].apply(DiskPoint()));

    const double h = two_pi / grid;
    std::int64_t count = 1;
    for (int i = 0; i < n; ++i) count *= grid;

    double worst = 0.0;
    std::vector<double> angles(static_cast<std::size_t>(n));
    for (std::int64_t idx = 0; idx < count; ++idx) {
        std::int64_t rest = idx;
        for (int i = 0; i < n; ++i) {
            angles[static_cast<std::size_t>(i)] = h * static_cast<double>(rest % grid);
            rest /= grid;
        }
        const TorusPoint theta = TorusPoint::from_angles(angles);
        const double lhs = phi0_evaluate(gx, theta);
        double rhs = phi0_evaluate(x, ginv.apply(theta));
        for (int i = 0; i < n; ++i) rhs *= std::sqrt(poisson_kernel(go[static_cast<std::size_t>(i)], theta[i]));
        worst = std::max(worst, std::abs(lhs - rhs));
    }
    return worst;
}

}  // namespace calibra
