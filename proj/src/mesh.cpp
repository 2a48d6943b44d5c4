#include "mmdg/mesh.hpp"

#include <cmath>
#include <string>

#include "mmdg/error.hpp"

namespace mmdg {

namespace {

int locate_zero_interface(Interval v, int nv) {
  const double dv = v.length() / nv;
  const double pos = -v.lo / dv;
  const long k = std::lround(pos);
  if (k < 0 || k > nv || std::abs(pos - k) > 1e-10 * nv) {
    throw ConfigError("mesh: v = 0 is not a velocity-element interface");
  }
  return static_cast<int>(k);
}

}  // namespace

PhaseMesh::PhaseMesh(Interval x, int nx, Interval v, int nv, int degree)
    : x_(x),
      v_(v),
      nx_(nx),
      nv_(nv),
      dx_(0.0),
      dv_(0.0),
      zero_interface_(0),
      basis_(degree < 0 ? 0 : degree) {
  if (nx < 1 || nv < 1) throw ConfigError("mesh: element counts must be >= 1");
  if (degree < 0) throw ConfigError("mesh: polynomial degree must be >= 0");
  if (!(x.hi > x.lo) || !(v.hi > v.lo)) {
    throw ConfigError("mesh: domain bounds must be strictly increasing");
  }
  dx_ = x.length() / nx;
  dv_ = v.length() / nv;
  zero_interface_ = locate_zero_interface(v, nv);
}

PhaseMesh build_mesh(double x_min, double x_max, int nx, double v_min,
                     double v_max, int nv, int degree) {
  return PhaseMesh({x_min, x_max}, nx, {v_min, v_max}, nv, degree);
}

}  // namespace mmdg
