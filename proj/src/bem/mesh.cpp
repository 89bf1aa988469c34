#include "surfloss/bem.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace surfloss::bem {

const char* to_string(KernelKind k) {
    switch (k) {
        case KernelKind::planar: return "planar";
        case KernelKind::ring: return "ring";
        case KernelKind::flat_wire: return "flat_wire";
    }
    return "?";
}

double Element::width() const { return std::hypot(p1.x - p0.x, p1.y - p0.y); }

double Mesh::min_width() const {
    double w = std::numeric_limits<double>::infinity();
    for (const auto& e : elements) w = std::min(w, e.width());
    return w;
}

std::vector<double> graded(double L, double hmin, double hmax, double ratio) {
    if (!(L > 0.0) || !(hmin > 0.0) || !(hmax >= hmin) || !(ratio >= 1.0))
        throw std::invalid_argument("graded: invalid grading parameters");
    std::vector<double> s{0.0};
    double h = hmin;
    while (s.back() + h < L) {
        s.push_back(s.back() + h);
        h = std::min(h * ratio, hmax);
    }
    if (s.size() < 2) return {0.0, L};
    double f = L / s.back();
    for (auto& v : s) v *= f;
    s.back() = L;
    return s;
}

std::vector<double> graded_span(double a, double b, double hmin, double hmax, bool fine_a, bool fine_b,
                                double ratio) {
    double L = b - a;
    if (!(L > 0.0)) throw std::invalid_argument("graded_span: empty interval");
    std::vector<double> out;
    if (fine_a && fine_b) {
        auto h = graded(0.5 * L, hmin, hmax, ratio);
        for (double s : h) out.push_back(a + s);
        for (auto it = h.rbegin() + 1; it != h.rend(); ++it) out.push_back(b - *it);
    } else if (fine_a) {
        for (double s : graded(L, hmin, hmax, ratio)) out.push_back(a + s);
    } else if (fine_b) {
        auto h = graded(L, hmin, hmax, ratio);
        for (auto it = h.rbegin(); it != h.rend(); ++it) out.push_back(b - *it);
    } else {
        int n = std::max(1, int(std::ceil(L / hmax)));
        for (int i = 0; i <= n; ++i) out.push_back(a + L * i / n);
    }
    out.front() = a;
    out.back() = b;
    return out;
}

}  // namespace surfloss::bem
