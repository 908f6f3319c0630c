#include "apath/path.hpp"

#include <cmath>
#include <stdexcept>

#include "apath/grid_interp.hpp"

namespace apath {

double apath_residual(const APath& p) {
    const auto& spec = *p.spec;
    if (spec.m == 0) return 0.0;
    const double h = p.h();
    double worst = 0.0;
    for (int i = 0; i < p.N; ++i) {
        ChartPoint mid(spec.m);
        for (int d = 0; d < spec.m; ++d) mid[d] = 0.5 * (p.gamma[i][d] + p.gamma[i + 1][d]);
        Vec amid(spec.n);
        for (int d = 0; d < spec.n; ++d) amid[d] = 0.5 * (p.a[i][d] + p.a[i + 1][d]);
        Vec flow = spec.anchor_at(mid).apply(amid);
        double r = 0.0;
        for (int d = 0; d < spec.m; ++d) {
            double e = (p.gamma[i + 1][d] - p.gamma[i][d]) / h - flow[d];
            r += e * e;
        }
        worst = std::max(worst, std::sqrt(r));
    }
    return worst;
}

Report check_path(const APath& p, double path_tol, double deriv_tol) {
    Report rep;
    rep.note("module", "path_engine");
    rep.note("op", "check_path");
    rep.gate("apath_residual", apath_residual(p), path_tol);
    if (p.a0_flag) {
        double ends = std::max(norm_inf(p.a.front()), norm_inf(p.a.back()));
        rep.gate("a0_endpoint_value", ends, 0.0);
        double d0 = norm2(p.a[1]) / p.h();
        double d1 = norm2(p.a[p.N - 1]) / p.h();
        rep.gate("a0_endpoint_derivative", std::max(d0, d1), deriv_tol);
    }
    return rep;
}

APath integrate_base(SpecPtr spec, const std::function<Vec(double)>& fiber_samples,
                     const ChartPoint& gamma0, int N) {
    if (N < 8) throw std::invalid_argument("integrate_base: N must be at least 8");
    const auto& s = *spec;
    if (static_cast<int>(gamma0.size()) != s.m)
        throw std::invalid_argument("integrate_base: start point has wrong dimension");

    APath p;
    p.spec = spec;
    p.N = N;
    p.a.resize(N + 1);
    p.gamma.resize(N + 1);
    const double h = 1.0 / N;

    ChartPoint g = gamma0;
    p.gamma[0] = g;
    p.a[0] = fiber_samples(0.0);
    for (int i = 0; i < N; ++i) {
        const double t = i * h;
        if (s.m == 0) {
            p.gamma[i + 1] = g;
        } else {
            Vec a1 = fiber_samples(t);
            Vec a2 = fiber_samples(t + 0.5 * h);
            Vec a3 = fiber_samples(t + h);
            Vec k1 = s.anchor_at(g).apply(a1);
            Vec g2 = g; axpy(0.5 * h, k1, g2);
            Vec k2 = s.anchor_at(g2).apply(a2);
            Vec g3 = g; axpy(0.5 * h, k2, g3);
            Vec k3 = s.anchor_at(g3).apply(a2);
            Vec g4 = g; axpy(h, k3, g4);
            Vec k4 = s.anchor_at(g4).apply(a3);
            for (int d = 0; d < s.m; ++d)
                g[d] += h / 6.0 * (k1[d] + 2 * k2[d] + 2 * k3[d] + k4[d]);
            if (!s.in_chart(g)) throw ChartExitError(i + 1);
            p.gamma[i + 1] = g;
        }
        p.a[i + 1] = fiber_samples((i + 1) * h);
    }
    return p;
}

double smoothstep5(double t) { return t * t * t * (10.0 + t * (-15.0 + 6.0 * t)); }
double smoothstep5_deriv(double t) { return 30.0 * t * t * (1.0 - t) * (1.0 - t); }

APath reparam_tau(const APath& p) {
    const int N = p.N;
    GridInterp fa(&p.a, N, p.joints);
    GridInterp fg(&p.gamma, N, p.joints);

    APath r;
    r.spec = p.spec;
    r.N = N;
    r.a.resize(N + 1);
    r.gamma.resize(N + 1);
    r.a0_flag = true;
    for (int i = 0; i <= N; ++i) {
        double t = static_cast<double>(i) / N;
        double tau = smoothstep5(t);
        double dtau = smoothstep5_deriv(t);
        r.a[i] = scale(dtau, fa.eval(tau));
        r.gamma[i] = fg.eval(tau);
    }
    // tau' vanishes at both ends, so the boundary values are exact zeros.
    r.a[0] = zeros(p.spec->n);
    r.a[N] = zeros(p.spec->n);
    r.gamma[0] = p.gamma.front();
    r.gamma[N] = p.gamma.back();
    return r;
}

APath concat(const APath& p0_in, const APath& p1_in, double endpoint_tol) {
    if (p0_in.spec->n != p1_in.spec->n || p0_in.spec->m != p1_in.spec->m)
        throw std::invalid_argument("concat: incompatible specs");
    const APath* p0 = &p0_in;
    const APath* p1 = &p1_in;
    APath r0, r1;
    int N = std::max(p0_in.N, p1_in.N);
    if (N % 2) ++N;
    if (p0_in.N != N) { r0 = resample(p0_in, N); p0 = &r0; }
    if (p1_in.N != N) { r1 = resample(p1_in, N); p1 = &r1; }

    if (p0->spec->m > 0 && dist2(p0->gamma.back(), p1->gamma.front()) > endpoint_tol)
        throw std::invalid_argument("concat: endpoint mismatch");

    APath r;
    r.spec = p0->spec;
    r.N = N;
    r.a.resize(N + 1);
    r.gamma.resize(N + 1);
    const int half = N / 2;
    for (int i = 0; i <= half; ++i) {
        r.a[i] = scale(2.0, p0->a[2 * i]);
        r.gamma[i] = p0->gamma[2 * i];
    }
    for (int i = half + 1; i <= N; ++i) {
        r.a[i] = scale(2.0, p1->a[2 * i - N]);
        r.gamma[i] = p1->gamma[2 * i - N];
    }
    r.joints.push_back(half);
    for (int j : p0->joints)
        if (j % 2 == 0) r.joints.push_back(j / 2);
    for (int j : p1->joints)
        if (j % 2 == 0) r.joints.push_back(half + j / 2);
    std::sort(r.joints.begin(), r.joints.end());
    r.a0_flag = p0->a0_flag && p1->a0_flag;
    return r;
}

APath invert(const APath& p) {
    APath r;
    r.spec = p.spec;
    r.N = p.N;
    r.a.resize(p.N + 1);
    r.gamma.resize(p.N + 1);
    for (int i = 0; i <= p.N; ++i) {
        r.a[i] = scale(-1.0, p.a[p.N - i]);
        r.gamma[i] = p.gamma[p.N - i];
    }
    for (int j : p.joints) r.joints.push_back(p.N - j);
    std::sort(r.joints.begin(), r.joints.end());
    r.a0_flag = p.a0_flag;
    return r;
}

std::pair<ChartPoint, ChartPoint> endpoints(const APath& p) {
    return {p.gamma.front(), p.gamma.back()};
}

APath constant_path(SpecPtr spec, const ChartPoint& x, int N) {
    if (static_cast<int>(x.size()) != spec->m)
        throw std::invalid_argument("constant_path: point has wrong dimension");
    APath p;
    p.spec = spec;
    p.N = N;
    p.a.assign(N + 1, zeros(spec->n));
    p.gamma.assign(N + 1, x);
    p.a0_flag = true;
    return p;
}

APath resample(const APath& p, int N2) {
    for (int j : p.joints)
        if ((static_cast<long long>(j) * N2) % p.N != 0)
            throw std::invalid_argument("resample: joint does not land on the new grid");
    GridInterp fa(&p.a, p.N, p.joints);
    GridInterp fg(&p.gamma, p.N, p.joints);
    APath r;
    r.spec = p.spec;
    r.N = N2;
    r.a.resize(N2 + 1);
    r.gamma.resize(N2 + 1);
    for (int i = 0; i <= N2; ++i) {
        double t = static_cast<double>(i) / N2;
        r.a[i] = fa.eval(t);
        r.gamma[i] = fg.eval(t);
    }
    for (int j : p.joints) r.joints.push_back(static_cast<int>(static_cast<long long>(j) * N2 / p.N));
    r.a0_flag = p.a0_flag;
    return r;
}

APath path_from_samples(SpecPtr spec, int N, const std::function<Vec(double)>& fiber,
                        const std::function<Vec(double)>& base, bool a0) {
    APath p;
    p.spec = spec;
    p.N = N;
    p.a.resize(N + 1);
    p.gamma.resize(N + 1);
    for (int i = 0; i <= N; ++i) {
        double t = static_cast<double>(i) / N;
        p.a[i] = fiber(t);
        p.gamma[i] = base(t);
    }
    p.a0_flag = a0;
    return p;
}

}  // namespace apath
