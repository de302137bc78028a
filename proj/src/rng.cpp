#include "cddohs/rng.hpp"

#include <cmath>

namespace cddohs {

double Rng::uniform(double lo, double hi) {
  const double u = unit();
  if (!(lo < hi)) return lo;
  const double r = lo + (hi - lo) * u;
  // lo + (hi - lo) * u can round up to hi for u close to 1.
  return r < hi ? r : std::nextafter(hi, lo);
}

}  // namespace cddohs
