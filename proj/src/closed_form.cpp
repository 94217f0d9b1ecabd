#include <cmath>

#include "scatent/catalog.hpp"

namespace scatent {

namespace {
constexpr double kSingularDenominator = 1e-12;

void require(bool ok, const char* what) {
  if (!ok) throw Error(ErrorKind::ParameterOutOfRange, what);
}
}  // namespace

double closed_form_single_vertex_entropy(int d) {
  require(d >= 3, "single-vertex closed form needs d >= 3");
  const double dd = static_cast<double>(d) * d;
  const double m = static_cast<double>(d - 2) * (d - 2);
  return 4.0 * (d - 1) / dd * std::log2(dd / 4.0) + m / dd * std::log2(dd / m);
}

cplx closed_form_star_secular(int n, double k) {
  require(n >= 3, "star closed form needs n >= 3");
  const cplx z = std::polar(1.0, k);
  const cplx z2 = z * z;
  return (static_cast<double>(n) - (n - 4.0) * z2) * std::pow(1.0 + z2, n - 3) / static_cast<double>(n);
}

cplx closed_form_star_amplitude(int n, double k) {
  const cplx zeta = closed_form_star_secular(n, k);
  // n - (n - 4) z^2 never vanishes on the unit circle, so the determinant is
  // zero only through (1 + z^2)^(n-3), whose power cancels against the
  // numerator everywhere except at z = +-i itself.
  const cplx z = std::polar(1.0, k);
  if ((n > 3 && std::abs(1.0 + z * z) < kSingularDenominator) || !(std::abs(zeta) > 0.0)) {
    throw Error(ErrorKind::SingularPoint, "star secular determinant vanishes at k = " + std::to_string(k));
  }
  return 2.0 * z * std::pow(1.0 + z * z, n - 2) / (static_cast<double>(n) * zeta);
}

cplx closed_form_cycle_amplitude(int n, double k) {
  return -closed_form_cycle_amplitude_as_quoted(n, k);
}

cplx closed_form_cycle_amplitude_as_quoted(int n, double k) {
  require(n >= 2, "cycle closed form needs n >= 2");
  const cplx z = std::polar(1.0, k);
  const cplx zn = std::polar(1.0, n * k);
  const cplx z2 = z * z;
  const cplx den = 9.0 * z2 - z2 * z2 - zn * zn - 8.0 * zn * z2 + zn * zn * z2;
  if (std::abs(den) < kSingularDenominator) {
    throw Error(ErrorKind::SingularPoint, "cycle denominator vanishes at k = " + std::to_string(k));
  }
  return 4.0 * z * (zn - 1.0) * (zn + z2) / den;
}

}  // namespace scatent
