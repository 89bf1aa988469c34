#pragma once

#include <cmath>
#include <compare>
#include <stdexcept>
#include <string>

namespace surfloss {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kEps0 = 8.8541878128e-12;

template <class Tag>
class Quantity {
public:
    constexpr Quantity() = default;
    constexpr explicit Quantity(double v) : v_(v) {}
    constexpr double value() const { return v_; }

    constexpr Quantity operator+(Quantity o) const { return Quantity(v_ + o.v_); }
    constexpr Quantity operator-(Quantity o) const { return Quantity(v_ - o.v_); }
    constexpr Quantity operator*(double s) const { return Quantity(v_ * s); }
    constexpr Quantity operator/(double s) const { return Quantity(v_ / s); }
    constexpr double operator/(Quantity o) const { return v_ / o.v_; }
    constexpr auto operator<=>(const Quantity&) const = default;

private:
    double v_ = 0.0;
};

using Length = Quantity<struct LengthTag>;
using Area = Quantity<struct AreaTag>;
using Capacitance = Quantity<struct CapacitanceTag>;
using Frequency = Quantity<struct FrequencyTag>;

constexpr Length metres(double v) { return Length(v); }
constexpr Length micrometres(double v) { return Length(v * 1e-6); }
constexpr Length nanometres(double v) { return Length(v * 1e-9); }
constexpr Capacitance farads(double v) { return Capacitance(v); }
constexpr Capacitance femtofarads(double v) { return Capacitance(v * 1e-15); }
constexpr Capacitance picofarads(double v) { return Capacitance(v * 1e-12); }
constexpr double to_um(Length l) { return l.value() * 1e6; }
constexpr double to_nm(Length l) { return l.value() * 1e9; }
constexpr double to_fF(Capacitance c) { return c.value() * 1e15; }

// complete elliptic integral of the first kind, parameter m = k^2
double ellipk(double m);
// K'(k) = K(sqrt(1 - k^2))
double ellipk_complement(double k);

// K(k)/K'(k)
double ck_ratio(double k);
double ck_ratio_log_approx(double k);

}  // namespace surfloss
