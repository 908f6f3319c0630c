#include "apath/gallery.hpp"

#include <cmath>
#include <map>
#include <random>
#include <stdexcept>

#include "apath/grid_interp.hpp"

namespace apath {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

double bump(double t) { return 16.0 * t * t * (1 - t) * (1 - t); }

APath random_lie_path(SpecPtr spec, int N, std::uint64_t seed, double amplitude, int modes) {
    if (spec->m != 0) throw std::invalid_argument("random_lie_path: spec must have pointlike base");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<Vec> coef(modes, Vec(spec->n));
    for (auto& c : coef)
        for (double& v : c) v = u(rng);

    auto fiber = [=](double t) {
        Vec a(spec->n, 0.0);
        double w = amplitude * bump(t);
        for (int k = 0; k < modes; ++k) {
            double s = w * std::sin((k + 1) * kPi * t) / modes;
            axpy(s, coef[k], a);
        }
        return a;
    };
    APath p = path_from_samples(spec, N, fiber, [](double) { return Vec{}; }, true);
    p.a.front() = zeros(spec->n);
    p.a.back() = zeros(spec->n);
    return p;
}

APath random_tangent_path(SpecPtr spec, int N, std::uint64_t seed, double amplitude,
                          const ChartPoint& gamma0) {
    if (spec->family != Family::tangent)
        throw std::invalid_argument("random_tangent_path: spec must be tangent");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    const int modes = 2;
    std::vector<Vec> coef(modes, Vec(spec->n));
    for (auto& c : coef)
        for (double& v : c) v = u(rng);
    auto fiber = [=](double t) {
        Vec a(spec->n, 0.0);
        double w = amplitude * bump(t);
        for (int k = 0; k < modes; ++k) axpy(w * std::sin((k + 1) * kPi * t) / modes, coef[k], a);
        return a;
    };
    APath p = integrate_base(spec, fiber, gamma0, N);
    p.a0_flag = true;
    p.a.front() = zeros(spec->n);
    p.a.back() = zeros(spec->n);
    return p;
}

APath circle_path(SpecPtr spec, int N, bool a0_window) {
    if (spec->m != 2 || spec->family != Family::tangent)
        throw std::invalid_argument("circle_path: needs the tangent algebroid on R^2");
    auto fiber = [](double t) {
        return Vec{2 * kPi * std::cos(2 * kPi * t), 2 * kPi * std::sin(2 * kPi * t)};
    };
    APath p = integrate_base(spec, fiber, {0.0, 0.0}, N);
    return a0_window ? reparam_tau(p) : p;
}

HomotopySheet sheet_constant(const APath& p, int Ne) {
    HomotopySheet s;
    s.spec = p.spec;
    s.Ne = Ne;
    s.Nt = p.N;
    s.a.assign(Ne + 1, p.a);
    s.gamma.assign(Ne + 1, p.gamma);
    s.joints = p.joints;
    return s;
}

HomotopySheet sheet_linear_tangent(const APath& p0, const APath& p1, int Ne) {
    if (p0.spec->family != Family::tangent || p0.N != p1.N)
        throw std::invalid_argument("sheet_linear_tangent: tangent paths on one grid required");
    if (dist2(p0.gamma.front(), p1.gamma.front()) > 1e-9 ||
        dist2(p0.gamma.back(), p1.gamma.back()) > 1e-9)
        throw std::invalid_argument("sheet_linear_tangent: endpoints differ");
    HomotopySheet s;
    s.spec = p0.spec;
    s.Ne = Ne;
    s.Nt = p0.N;
    s.a.resize(Ne + 1);
    s.gamma.resize(Ne + 1);
    for (int j = 0; j <= Ne; ++j) {
        double e = static_cast<double>(j) / Ne;
        s.a[j].resize(s.Nt + 1);
        s.gamma[j].resize(s.Nt + 1);
        for (int i = 0; i <= s.Nt; ++i) {
            s.a[j][i] = add(scale(1 - e, p0.a[i]), scale(e, p1.a[i]));
            s.gamma[j][i] = add(scale(1 - e, p0.gamma[i]), scale(e, p1.gamma[i]));
        }
    }
    return s;
}

HomotopySheet sheet_meridian_patch(SpecPtr twisted, int factor, double amplitude, int Ne,
                                   int Nt) {
    const int m = twisted->m;
    if (twisted->family != Family::twisted_surface || factor < 0 || 2 * factor >= m)
        throw std::invalid_argument("sheet_meridian_patch: bad spec or factor");
    auto q = [](double e) { return e * e * (3 - 2 * e); };
    auto wiggle = [](double t) { return 16 * t * t * (1 - t) * (1 - t); };
    auto dwiggle = [](double t) {
        return 32 * t * (1 - t) * (1 - t) - 32 * t * t * (1 - t);
    };

    HomotopySheet s;
    s.spec = twisted;
    s.Ne = Ne;
    s.Nt = Nt;
    s.a.resize(Ne + 1);
    s.gamma.resize(Ne + 1);
    for (int j = 0; j <= Ne; ++j) {
        double e = static_cast<double>(j) / Ne;
        s.a[j].resize(Nt + 1);
        s.gamma[j].resize(Nt + 1);
        for (int i = 0; i <= Nt; ++i) {
            double t = static_cast<double>(i) / Nt;
            ChartPoint g(m, 0.0);
            for (int f = 0; f < m / 2; ++f) {
                g[2 * f] = f == factor ? kPi * smoothstep5(t) : kPi / 2;
                g[2 * f + 1] = f == factor ? amplitude * q(e) * wiggle(t) : 0.0;
            }
            Vec a(m + 1, 0.0);
            a[2 * factor] = kPi * smoothstep5_deriv(t);
            a[2 * factor + 1] = amplitude * q(e) * dwiggle(t);
            s.a[j][i] = a;
            s.gamma[j][i] = g;
        }
        s.a[j][0] = zeros(m + 1);
        s.a[j][Nt] = zeros(m + 1);
    }
    return s;
}

HomotopySheet sheet_smooth_tangent(const APath& p0, const APath& p1, int Ne) {
    if (p0.spec->family != Family::tangent || p0.N != p1.N)
        throw std::invalid_argument("sheet_smooth_tangent: tangent paths on one grid required");
    HomotopySheet s = sheet_linear_tangent(p0, p1, Ne);
    for (int j = 0; j <= Ne; ++j) {
        double w = smoothstep5(static_cast<double>(j) / Ne);
        for (int i = 0; i <= s.Nt; ++i) {
            s.a[j][i] = add(scale(1 - w, p0.a[i]), scale(w, p1.a[i]));
            s.gamma[j][i] = add(scale(1 - w, p0.gamma[i]), scale(w, p1.gamma[i]));
        }
    }
    return s;
}

HomotopySheet sheet_lie_interpolate(const APath& p0, const APath& p1, int Ne) {
    if (p0.spec->m != 0 || p0.N != p1.N)
        throw std::invalid_argument("sheet_lie_interpolate: pointlike-base paths on one grid");
    HomotopySheet s;
    s.spec = p0.spec;
    s.Ne = Ne;
    s.Nt = p0.N;
    s.a.resize(Ne + 1);
    s.gamma.assign(Ne + 1, std::vector<Vec>(p0.N + 1, Vec{}));
    for (int j = 0; j <= Ne; ++j) {
        double e = static_cast<double>(j) / Ne;
        s.a[j].resize(s.Nt + 1);
        for (int i = 0; i <= s.Nt; ++i) s.a[j][i] = add(scale(1 - e, p0.a[i]), scale(e, p1.a[i]));
    }
    return s;
}

namespace {

struct WarpCoef {
    double c[3];
    double norm;
};

WarpCoef warp_coef_fresh(std::uint64_t seed) {
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    WarpCoef w{};
    for (double& v : w.c) v = u(rng);
    // Normalize so the derivative perturbation has sup-norm 1.
    double worst = 1e-12;
    for (int i = 0; i <= 2000; ++i) {
        double t = i / 2000.0;
        double d = 0.0;
        for (int k = 0; k < 3; ++k) {
            double kk = (k + 1) * kPi;
            d += w.c[k] * (kk * std::cos(kk * t) * t * (1 - t) + std::sin(kk * t) * (1 - 2 * t));
        }
        worst = std::max(worst, std::abs(d));
    }
    w.norm = worst;
    return w;
}

const WarpCoef& warp_coef(std::uint64_t seed) {
    thread_local std::map<std::uint64_t, WarpCoef> cache;
    auto it = cache.find(seed);
    if (it == cache.end()) it = cache.emplace(seed, warp_coef_fresh(seed)).first;
    return it->second;
}

}  // namespace

double warp(double t, std::uint64_t seed, double scale) {
    const WarpCoef& w = warp_coef(seed);
    double s = 0.0;
    for (int k = 0; k < 3; ++k) s += w.c[k] * std::sin((k + 1) * kPi * t) * t * (1 - t);
    return t + scale * s / w.norm;
}

double warp_deriv(double t, std::uint64_t seed, double scale) {
    const WarpCoef& w = warp_coef(seed);
    double d = 0.0;
    for (int k = 0; k < 3; ++k) {
        double kk = (k + 1) * kPi;
        d += w.c[k] * (kk * std::cos(kk * t) * t * (1 - t) + std::sin(kk * t) * (1 - 2 * t));
    }
    return 1.0 + scale * d / w.norm;
}

HomotopySheet sheet_reparam_sweep(const APath& p, int Ne, std::uint64_t seed, double warp_scale) {
    if (!(warp_scale < 1.0)) throw std::invalid_argument("sheet_reparam_sweep: warp_scale < 1");
    const int N = p.N;
    GridInterp fa(&p.a, N, p.joints);
    GridInterp fg(&p.gamma, N, p.joints);
    HomotopySheet s;
    s.spec = p.spec;
    s.Ne = Ne;
    s.Nt = N;
    s.a.resize(Ne + 1);
    s.gamma.resize(Ne + 1);
    for (int j = 0; j <= Ne; ++j) {
        double e = static_cast<double>(j) / Ne;
        s.a[j].resize(N + 1);
        s.gamma[j].resize(N + 1);
        for (int i = 0; i <= N; ++i) {
            double t = static_cast<double>(i) / N;
            double phi = (1 - e) * t + e * warp(t, seed, warp_scale);
            double dphi = (1 - e) + e * warp_deriv(t, seed, warp_scale);
            s.a[j][i] = scale(dphi, fa.eval(phi));
            s.gamma[j][i] = p.spec->m > 0 ? fg.eval(phi) : Vec{};
        }
        s.a[j][0] = zeros(p.spec->n);
        s.a[j][N] = zeros(p.spec->n);
        if (p.spec->m > 0) {
            s.gamma[j][0] = p.gamma.front();
            s.gamma[j][N] = p.gamma.back();
        }
    }
    return s;
}

namespace {

// Three-stage sweep with chart-fixed endpoints: spin the longitude up while
// sitting at the north pole, descend the meridian, spin back down at the
// south pole. The longitude amplitude follows the cubic ramp q(eps), so the
// family is genuinely nonlinear in eps.
struct MeridianStages {
    static double q(double e) { return e * e * (3 - 2 * e); }
    static double dq(double e) { return 6 * e * (1 - e); }

    double amp;   // 2 pi wraps * q(eps)
    double damp;  // eps-derivative of amp

    MeridianStages(int wraps, double eps) {
        amp = 2 * kPi * wraps * q(eps);
        damp = 2 * kPi * wraps * dq(eps);
    }

    double theta(double t) const {
        if (t <= 0.2) return 0.0;
        if (t >= 0.8) return kPi;
        return kPi * smoothstep5((t - 0.2) / 0.6);
    }
    double theta_t(double t) const {
        if (t <= 0.2 || t >= 0.8) return 0.0;
        return kPi * smoothstep5_deriv((t - 0.2) / 0.6) / 0.6;
    }
    double phi(double t) const {
        if (t <= 0.2) return amp * smoothstep5(5 * t);
        if (t >= 0.8) return amp * (1 - smoothstep5(5 * (t - 0.8)));
        return amp;
    }
    double phi_t(double t) const {
        if (t <= 0.2) return amp * 5 * smoothstep5_deriv(5 * t);
        if (t >= 0.8) return -amp * 5 * smoothstep5_deriv(5 * (t - 0.8));
        return 0.0;
    }
    double phi_eps(double t) const {
        if (t <= 0.2) return damp * smoothstep5(5 * t);
        if (t >= 0.8) return damp * (1 - smoothstep5(5 * (t - 0.8)));
        return damp;
    }
};

}  // namespace

Vec meridian_dt(int factors, int factor, int wraps, double eps, double t) {
    MeridianStages st(wraps, eps);
    Vec v(2 * factors, 0.0);
    v[2 * factor] = st.theta_t(t);
    v[2 * factor + 1] = st.phi_t(t);
    return v;
}

Vec meridian_deps(int factors, int factor, int wraps, double eps, double t) {
    MeridianStages st(wraps, eps);
    Vec v(2 * factors, 0.0);
    v[2 * factor + 1] = st.phi_eps(t);
    return v;
}

double meridian_theta(double t) { return MeridianStages(1, 0.0).theta(t); }

HomotopySheet sheet_meridian(SpecPtr twisted, const std::vector<double>& lambdas, int factor,
                             int wraps, int Ne, int Nt, MeridianU u_mode) {
    const int k = static_cast<int>(lambdas.size());
    if (twisted->family != Family::twisted_surface || twisted->m != 2 * k)
        throw std::invalid_argument("sheet_meridian: spec/lambda mismatch");
    if (factor < 0 || factor >= k) throw std::invalid_argument("sheet_meridian: bad factor");
    if (Nt % 5) throw std::invalid_argument("sheet_meridian: Nt must be a multiple of 5");
    const int m = twisted->m;

    // u-profile with unit time integral and A0-compatible ends.
    auto uprof = [](double t) { return 30.0 * t * t * (1 - t) * (1 - t); };

    // Flux of Omega through the sweep up to longitude eps:
    //   F(eps) = int_0^1 Omega(d_t gamma, d_eps gamma) dt,
    // by Simpson per row, then accumulated so that consecutive rows stay
    // equivalent: the u-integral absorbs the flux swept so far.
    std::vector<double> flux(Ne + 1, 0.0);
    if (u_mode == MeridianU::equivalence) {
        for (int j = 0; j <= Ne; ++j) {
            double e = static_cast<double>(j) / Ne;
            MeridianStages st(wraps, e);
            std::vector<double> integrand(Nt + 1);
            for (int i = 0; i <= Nt; ++i) {
                double t = static_cast<double>(i) / Nt;
                integrand[i] = lambdas[factor] * std::sin(st.theta(t)) *
                               (st.theta_t(t) * st.phi_eps(t));
            }
            flux[j] = simpson(integrand, 1.0 / Nt);
        }
    }
    // Fourth-order cumulative rule (exact for the cubic longitude ramp).
    std::vector<double> G(Ne + 1, 0.0);
    const double he = 1.0 / Ne;
    for (int j = 0; j < Ne; ++j) {
        double seg;
        if (j + 2 <= Ne)
            seg = he / 12.0 * (5 * flux[j] + 8 * flux[j + 1] - flux[j + 2]);
        else
            seg = he / 12.0 * (-flux[j - 1] + 8 * flux[j] + 5 * flux[j + 1]);
        G[j + 1] = G[j] - seg;
    }

    HomotopySheet s;
    s.spec = twisted;
    s.Ne = Ne;
    s.Nt = Nt;
    s.joints = {Nt / 5, 4 * Nt / 5};
    s.a.resize(Ne + 1);
    s.gamma.resize(Ne + 1);
    for (int j = 0; j <= Ne; ++j) {
        double e = static_cast<double>(j) / Ne;
        MeridianStages st(wraps, e);
        s.a[j].resize(Nt + 1);
        s.gamma[j].resize(Nt + 1);
        for (int i = 0; i <= Nt; ++i) {
            double t = static_cast<double>(i) / Nt;
            ChartPoint g(m, 0.0);
            for (int f = 0; f < k; ++f) {
                g[2 * f] = f == factor ? st.theta(t) : kPi / 2;
                g[2 * f + 1] = f == factor ? st.phi(t) : 0.0;
            }
            Vec a(m + 1, 0.0);
            a[2 * factor] = st.theta_t(t);
            a[2 * factor + 1] = st.phi_t(t);
            a[m] = u_mode == MeridianU::equivalence ? uprof(t) * G[j] : 0.0;
            s.a[j][i] = a;
            s.gamma[j][i] = g;
        }
        s.a[j][0] = zeros(m + 1);
        s.a[j][Nt] = zeros(m + 1);
    }
    return s;
}

}  // namespace apath
