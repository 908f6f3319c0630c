#pragma once

#include <algorithm>
#include <vector>

#include "apath/linalg.hpp"

namespace apath {

// Piecewise-cubic Lagrange evaluation of grid samples y_0..y_N at t_i = i/N.
// Stencils never cross the given breakpoints, so concatenation joints keep
// their one-sided smoothness.
class GridInterp {
public:
    GridInterp(const std::vector<Vec>* samples, int N, std::vector<int> joints)
        : y_(samples), N_(N) {
        bounds_.push_back(0);
        for (int j : joints)
            if (j > 0 && j < N) bounds_.push_back(j);
        bounds_.push_back(N);
        std::sort(bounds_.begin(), bounds_.end());
        bounds_.erase(std::unique(bounds_.begin(), bounds_.end()), bounds_.end());
    }

    Vec eval(double s) const {
        s = std::clamp(s, 0.0, 1.0);
        double u = s * N_;
        int cell = std::min(static_cast<int>(u), N_ - 1);

        // segment [lo, hi] containing the cell
        int lo = 0, hi = N_;
        for (std::size_t b = 0; b + 1 < bounds_.size(); ++b)
            if (cell >= bounds_[b] && cell < bounds_[b + 1]) {
                lo = bounds_[b];
                hi = bounds_[b + 1];
                break;
            }

        int width = hi - lo;
        int order = std::min(3, width);  // cubic when the segment allows it
        int start = cell - (order - 1) / 2;
        start = std::clamp(start, lo, hi - order);

        const std::size_t dim = (*y_)[0].size();
        Vec r(dim, 0.0);
        for (int k = 0; k <= order; ++k) {
            double w = 1.0;
            for (int l = 0; l <= order; ++l) {
                if (l == k) continue;
                w *= (u - (start + l)) / static_cast<double>(k - l);
            }
            const Vec& yk = (*y_)[static_cast<std::size_t>(start + k)];
            for (std::size_t d = 0; d < dim; ++d) r[d] += w * yk[d];
        }
        return r;
    }

private:
    const std::vector<Vec>* y_;
    int N_;
    std::vector<int> bounds_;
};

// Composite Simpson weights over an even number of intervals.
inline double simpson(const std::vector<double>& y, double h) {
    const int N = static_cast<int>(y.size()) - 1;
    double s = y[0] + y[static_cast<std::size_t>(N)];
    for (int i = 1; i < N; ++i) s += (i % 2 ? 4.0 : 2.0) * y[static_cast<std::size_t>(i)];
    return s * h / 3.0;
}

}  // namespace apath
