#include "foxh/log_gamma.hpp"

#include <array>
#include <cmath>
#include <numbers>

#include "foxh/error.hpp"

namespace foxh {

namespace {

using cplx = std::complex<double>;

constexpr double kLanczosG = 607.0 / 128.0;
constexpr std::array<double, 15> kLanczos = {
    0.99999999999999709182,     57.156235665862923517,      -59.597960355475491248,
    14.136097974741747174,      -0.49191381609762019978,    .33994649984811888699e-4,
    .46523628927048575665e-4,   -.98374475304879564677e-4,  .15808870322491248884e-3,
    -.21026444172410488319e-3,  .21743961811521264320e-3,   -.16431810653676389022e-3,
    .84418223983852743293e-4,   -.26190838401581408670e-4,  .36899182659531622704e-5,
};

const double kHalfLog2Pi = 0.5 * std::log(2.0 * std::numbers::pi);
const double kLogPi = std::log(std::numbers::pi);

cplx lanczos(cplx z) {
  // Gamma(z) = sqrt(2 pi) (z - 1/2 + g)^(z - 1/2) e^{-(z - 1/2 + g)} A(z - 1)
  const cplx w = z - 1.0;
  cplx series = kLanczos[0];
  for (std::size_t k = 1; k < kLanczos.size(); ++k) series += kLanczos[k] / (w + static_cast<double>(k));
  const cplx base = w + kLanczosG + 0.5;
  return kHalfLog2Pi + (w + 0.5) * std::log(base) - base + std::log(series);
}

// log sin(pi z) for Im z >= 0, continuous in the closed upper half plane:
// sin(pi z) = e^{-i pi z} (1 - e^{2 i pi z}) / (-2i).
cplx log_sin_pi_upper(cplx z) {
  const double x = z.real(), y = z.imag();
  // e^{2 i pi z} with the real part of z reduced mod 1 for an accurate phase.
  const double frac = x - std::floor(x);
  const cplx e2 = std::polar(std::exp(-2.0 * std::numbers::pi * y), 2.0 * std::numbers::pi * frac);
  return cplx(std::numbers::pi * y - std::numbers::ln2, std::numbers::pi * (0.5 - x)) + std::log(1.0 - e2);
}

}  // namespace

std::complex<double> log_gamma(std::complex<double> z) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
    throw Error(ErrorCode::DomainError, "log_gamma argument is not finite");
  if (z.real() >= 0.5) return lanczos(z);
  if (z.imag() < 0.0) return std::conj(log_gamma(std::conj(z)));
  const double nearest = std::round(z.real());
  if (std::abs(z - nearest) < 1e-14)
    throw Error(ErrorCode::PoleError, "log_gamma pole at z = " + std::to_string(nearest));
  return kLogPi - log_sin_pi_upper(z) - lanczos(1.0 - z);
}

}  // namespace foxh
