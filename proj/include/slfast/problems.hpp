#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "slfast/grid.hpp"

namespace slfast {

/// A discrete control: unit direction a_k = (cos 2πk/N_c, sin 2πk/N_c).
struct Control {
  int index = 0;
  Vec2 a;
};

/// N_c equispaced unit vectors starting at angle 0. N_c must be a positive multiple of 4;
/// axis components are stored as exact zeros.
std::vector<Control> unit_controls(int n_controls);

/// Anisotropy factor (1 + (λ a₁ + μ a₂)²)^(-1/2), always in (0, 1].
double m_coeff(double lambda, double mu, Vec2 a);

struct SinusoidParams {
  double c1 = 0.0;
  double c2 = 0.0;
  double c3 = 1.0;
  double c4 = 0.0;
};

struct SinusoidValue {
  double value = 0.0;  // C(x)
  double slope = 0.0;  // C'(x)
};

/// C(x) = c₁ sin(c₂πx/c₃ + c₄) and its analytic derivative. Throws for c₃ = 0.
SinusoidValue sinusoid_C(const SinusoidParams& c, double x);

/// Speed pair (F₁, F₂) of one layer; F₂ ≥ F₁ > 0 is required.
struct LayerPair {
  double f1 = 0.0;
  double f2 = 0.0;
};

struct LayerParams {
  double f1 = 0.0;
  double f2 = 0.0;
  double p = 0.0;
  double q = 0.0;
};

/// Two-layer medium split by y = C(x). The lower layer includes the interface.
LayerParams layer_params(double x, double y, const SinusoidParams& c,
                         LayerPair lower = {0.5, 1.0}, LayerPair upper = {2.0, 3.0});

enum class ProblemId { kHjb1, kHjb2, kHjb3, kHjb4, kHjb5, kCustom };

/// Dynamics families. Every family has the form f(x, a) = s(x) · m_{λ(x),μ(x)}(a) · a with s > 0.
enum class DynamicsKind {
  kIdentity,           // a
  kTwoSpeed,           // (low + (high - low)·χ{x > threshold}) a
  kAnisotropic,        // m_{λ,μ}(a) a
  kLayered,            // F₂(x,y) m_{p(x,y),q(x,y)}(a) a
  kScaledAnisotropic,  // (1 + |x + y|) m_{λ,μ}(a) a
};

std::string_view to_string(ProblemId id);
std::string_view to_string(DynamicsKind kind);

struct ProblemSpec {
  std::string name;
  ProblemId id = ProblemId::kCustom;
  DynamicsKind dynamics = DynamicsKind::kIdentity;

  double xmin = -2.0;
  double xmax = 2.0;
  double ymin = -2.0;
  double ymax = 2.0;
  Vec2 target{0.0, 0.0};

  double lambda = 0.0;
  double mu = 0.0;
  SinusoidParams sinusoid;
  LayerPair lower_layer{0.5, 1.0};
  LayerPair upper_layer{2.0, 3.0};
  double speed_low = 1.0;
  double speed_high = 5.0;
  double speed_threshold = 1.0;

  int n_controls = 32;

  /// UFSM normally prunes on the control direction a. When set, it prunes on the
  /// direction of f(x, a) instead.
  bool prune_on_velocity = false;
};

/// Node-frozen part of the dynamics: f(a) = scale · m_{λ,μ}(a) · a.
struct LocalDynamics {
  double scale = 1.0;
  double lambda = 0.0;
  double mu = 0.0;

  Vec2 velocity(Vec2 a) const {
    const double s = scale * m_coeff(lambda, mu, a);
    return {s * a.x, s * a.y};
  }
};

LocalDynamics local_dynamics(const ProblemSpec& spec, double x, double y);

Vec2 eval_dynamics(const ProblemSpec& spec, double x, double y, const Control& control);

/// Built-in benchmark problems. Throws std::invalid_argument for kCustom.
ProblemSpec builtin(ProblemId id);

/// Accepts "hjb1".."hjb5" (case-insensitive, optional dash). Throws for unknown names.
ProblemSpec builtin(std::string_view name);

/// Throws std::invalid_argument when the spec is inconsistent (bad layer pairs,
/// non-positive speeds, unusable control count, non-square domain).
void validate(const ProblemSpec& spec);

/// Square grid over the problem's domain with the problem's target.
Grid2D make_grid(const ProblemSpec& spec, int n);

}  // namespace slfast
