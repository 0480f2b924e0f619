#include "slfast/problems.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace slfast {

std::vector<Control> unit_controls(int n_controls) {
  if (n_controls < 4 || n_controls % 4 != 0) {
    throw std::invalid_argument("control count must be a positive multiple of 4, got " +
                                std::to_string(n_controls));
  }
  std::vector<Control> controls;
  controls.reserve(n_controls);
  for (int k = 0; k < n_controls; ++k) {
    const double angle = 2.0 * std::numbers::pi * k / n_controls;
    double cx = std::cos(angle);
    double cy = std::sin(angle);
    // cos(π/2) etc. come out as ~1e-16; axis controls must be exactly axis-aligned
    // so that the degenerate interpolation weights vanish exactly.
    if (std::abs(cx) < 1e-12) cx = 0.0;
    if (std::abs(cy) < 1e-12) cy = 0.0;
    controls.push_back({k, {cx, cy}});
  }
  return controls;
}

double m_coeff(double lambda, double mu, Vec2 a) {
  const double s = lambda * a.x + mu * a.y;
  return 1.0 / std::sqrt(1.0 + s * s);
}

SinusoidValue sinusoid_C(const SinusoidParams& c, double x) {
  if (c.c3 == 0.0) {
    throw std::invalid_argument("sinusoid parameter c3 must be nonzero");
  }
  const double k = c.c2 * std::numbers::pi / c.c3;
  const double phase = k * x + c.c4;
  return {c.c1 * std::sin(phase), c.c1 * k * std::cos(phase)};
}

LayerParams layer_params(double x, double y, const SinusoidParams& c, LayerPair lower,
                         LayerPair upper) {
  const SinusoidValue cv = sinusoid_C(c, x);
  const LayerPair f = (y <= cv.value) ? lower : upper;
  const double ratio = (f.f2 * f.f2) / (f.f1 * f.f1);
  const double m = std::sqrt((ratio - 1.0) / (1.0 + cv.slope * cv.slope));
  return {f.f1, f.f2, m * cv.slope, -m};
}

std::string_view to_string(ProblemId id) {
  switch (id) {
    case ProblemId::kHjb1: return "hjb1";
    case ProblemId::kHjb2: return "hjb2";
    case ProblemId::kHjb3: return "hjb3";
    case ProblemId::kHjb4: return "hjb4";
    case ProblemId::kHjb5: return "hjb5";
    case ProblemId::kCustom: return "custom";
  }
  return "custom";
}

std::string_view to_string(DynamicsKind kind) {
  switch (kind) {
    case DynamicsKind::kIdentity: return "identity";
    case DynamicsKind::kTwoSpeed: return "two_speed";
    case DynamicsKind::kAnisotropic: return "anisotropic";
    case DynamicsKind::kLayered: return "layered";
    case DynamicsKind::kScaledAnisotropic: return "scaled_anisotropic";
  }
  return "identity";
}

LocalDynamics local_dynamics(const ProblemSpec& spec, double x, double y) {
  switch (spec.dynamics) {
    case DynamicsKind::kIdentity:
      return {1.0, 0.0, 0.0};
    case DynamicsKind::kTwoSpeed:
      return {x > spec.speed_threshold ? spec.speed_high : spec.speed_low, 0.0, 0.0};
    case DynamicsKind::kAnisotropic:
      return {1.0, spec.lambda, spec.mu};
    case DynamicsKind::kLayered: {
      const LayerParams lp = layer_params(x, y, spec.sinusoid, spec.lower_layer, spec.upper_layer);
      return {lp.f2, lp.p, lp.q};
    }
    case DynamicsKind::kScaledAnisotropic:
      return {1.0 + std::abs(x + y), spec.lambda, spec.mu};
  }
  return {};
}

Vec2 eval_dynamics(const ProblemSpec& spec, double x, double y, const Control& control) {
  return local_dynamics(spec, x, y).velocity(control.a);
}

ProblemSpec builtin(ProblemId id) {
  ProblemSpec spec;
  spec.id = id;
  spec.name = std::string(to_string(id));
  switch (id) {
    case ProblemId::kHjb1:
      spec.dynamics = DynamicsKind::kIdentity;
      break;
    case ProblemId::kHjb2:
      spec.dynamics = DynamicsKind::kTwoSpeed;
      spec.speed_low = 1.0;
      spec.speed_high = 5.0;
      spec.speed_threshold = 1.0;
      break;
    case ProblemId::kHjb3:
      spec.dynamics = DynamicsKind::kAnisotropic;
      spec.lambda = 10.0;
      spec.mu = 5.0;
      break;
    case ProblemId::kHjb4:
      spec.dynamics = DynamicsKind::kLayered;
      spec.xmin = spec.ymin = -0.5;
      spec.xmax = spec.ymax = 0.5;
      spec.sinusoid = {0.1225, 2.0, 0.5, 0.0};
      break;
    case ProblemId::kHjb5:
      spec.dynamics = DynamicsKind::kScaledAnisotropic;
      spec.lambda = 10.0;
      spec.mu = 5.0;
      break;
    case ProblemId::kCustom:
      throw std::invalid_argument("custom problems have no built-in definition");
  }
  return spec;
}

ProblemSpec builtin(std::string_view name) {
  std::string key;
  for (char ch : name) {
    if (ch == '-' || ch == '_') continue;
    key.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(ch))));
  }
  for (ProblemId id : {ProblemId::kHjb1, ProblemId::kHjb2, ProblemId::kHjb3, ProblemId::kHjb4,
                       ProblemId::kHjb5}) {
    if (key == to_string(id)) return builtin(id);
  }
  throw std::invalid_argument("unknown problem '" + std::string(name) + "'");
}

void validate(const ProblemSpec& spec) {
  if (spec.n_controls < 4 || spec.n_controls % 4 != 0) {
    throw std::invalid_argument("control count must be a positive multiple of 4");
  }
  if (!(spec.xmax > spec.xmin) || !(spec.ymax > spec.ymin)) {
    throw std::invalid_argument("domain bounds must satisfy max > min");
  }
  const double wx = spec.xmax - spec.xmin;
  const double wy = spec.ymax - spec.ymin;
  if (std::abs(wx - wy) > 1e-12 * std::max(wx, wy)) {
    throw std::invalid_argument("domain must be square");
  }
  switch (spec.dynamics) {
    case DynamicsKind::kTwoSpeed:
      if (!(spec.speed_low > 0.0) || !(spec.speed_high > 0.0)) {
        throw std::invalid_argument("two-speed dynamics need positive speeds");
      }
      break;
    case DynamicsKind::kLayered:
      for (const LayerPair& f : {spec.lower_layer, spec.upper_layer}) {
        if (!(f.f1 > 0.0) || !(f.f2 >= f.f1)) {
          throw std::invalid_argument("layer pairs need F2 >= F1 > 0");
        }
      }
      if (spec.sinusoid.c3 == 0.0) {
        throw std::invalid_argument("sinusoid parameter c3 must be nonzero");
      }
      break;
    default:
      break;
  }
}

Grid2D make_grid(const ProblemSpec& spec, int n) {
  const Vec2 target[] = {spec.target};
  return build_grid(spec.xmin, spec.xmax, spec.ymin, spec.ymax, n, target);
}

}  // namespace slfast
