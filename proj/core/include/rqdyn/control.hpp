#pragma once

#include "rqdyn/numerics.hpp"

#include <variant>
#include <vector>

namespace rqdyn {

struct ConstantControl {
  Vector u;
};

/// u_i(t) = amplitude_i * sin(omega t + phase_i)
struct SinusoidalControl {
  Vector amplitude;
  double omega = 0.0;  // rad/s
  Vector phase;        // per channel
};

/// Constant drive on [t_begin, t_end); zero outside all segments.
struct PiecewiseSegment {
  double t_begin = 0.0;
  double t_end = 0.0;
  Vector u;
};

struct PiecewiseControl {
  std::vector<PiecewiseSegment> segments;  // ordered, non-overlapping
};

class ControlInput {
 public:
  /// Identically-zero drive of the given dimension.
  static ControlInput zero(int dim);
  static ControlInput constant(Vector u);
  static ControlInput sinusoidal(Vector amplitude, double omega, Vector phase = {});
  static ControlInput piecewise(std::vector<PiecewiseSegment> segments);

  /// Constant drive from an external energy gradient: u = k_u .* dE / (R T).
  static ControlInput energy_gradient(const Vector& coupling_rate,
                                      const Vector& energy, double gas_constant,
                                      double temperature);

  int dim() const;
  Vector at(double t) const;

  bool is_constant() const;
  /// Value of a constant drive; throws std::logic_error otherwise.
  const Vector& constant_value() const;

  /// Segment boundaries where the drive may jump (piecewise only).
  std::vector<double> breakpoints() const;

 private:
  explicit ControlInput(std::variant<ConstantControl, SinusoidalControl, PiecewiseControl> impl)
      : impl_(std::move(impl)) {}

  std::variant<ConstantControl, SinusoidalControl, PiecewiseControl> impl_;
};

}  // namespace rqdyn
