#ifndef HARVESTLAB_COMMON_HPP
#define HARVESTLAB_COMMON_HPP

#include <complex>
#include <stdexcept>
#include <string>

namespace harvestlab {

using Complex = std::complex<double>;

inline constexpr double pi          = 3.14159265358979323846;
inline constexpr double sqrt_pi     = 1.77245385090551602730;
inline constexpr double inv_sqrt_pi = 0.56418958354775628695;
inline constexpr double ln2         = 0.69314718055994530942;

// Thrown when an adaptive integral or an extrapolation cannot reach the
// requested tolerance; carries the error it did achieve.
class numerical_error : public std::runtime_error {
public:
    numerical_error(const std::string& msg, double achieved)
        : std::runtime_error(msg), achieved_(achieved) {}
    double achieved_error() const noexcept { return achieved_; }

private:
    double achieved_;
};

} // namespace harvestlab

#endif
