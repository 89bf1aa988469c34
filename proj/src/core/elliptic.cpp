#include "surfloss/core.hpp"

#include <limits>

namespace surfloss {

namespace {

double agm_k(double m) {
    double a = 1.0;
    double b = std::sqrt(1.0 - m);
    for (int i = 0; i < 64; ++i) {
        double an = 0.5 * (a + b);
        double bn = std::sqrt(a * b);
        a = an;
        b = bn;
        if (std::abs(a - b) < 1e-15 * a) break;
    }
    return kPi / (2.0 * a);
}

}  // namespace

double ellipk(double m) {
    if (!std::isfinite(m) || m >= 1.0)
        throw std::domain_error("ellipk: parameter m must be finite and < 1, got " + std::to_string(m));
    if (m < 0.0) {
        // imaginary modulus: K(-n) = K(n/(1+n)) / sqrt(1+n)
        double n = -m;
        return agm_k(n / (1.0 + n)) / std::sqrt(1.0 + n);
    }
    return agm_k(m);
}

double ellipk_complement(double k) {
    if (!(k > 0.0 && k <= 1.0))
        throw std::domain_error("ellipk_complement: modulus must lie in (0,1]");
    return ellipk(1.0 - k * k);
}

double ck_ratio(double k) {
    if (!(k > 0.0 && k < 1.0))
        throw std::domain_error("ck_ratio: a/b must lie in (0,1)");
    return ellipk(k * k) / ellipk_complement(k);
}

double ck_ratio_log_approx(double k) {
    if (!(k > 0.0 && k < 1.0))
        throw std::domain_error("ck_ratio_log_approx: a/b must lie in (0,1)");
    double s = std::sqrt(k);
    return std::log(2.0 * (1.0 + s) / (1.0 - s)) / kPi;
}

}  // namespace surfloss
