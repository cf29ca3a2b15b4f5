#include "rqdyn/control.hpp"

#include <cmath>

namespace rqdyn {

namespace {

void require_finite(const Vector& v, const char* what) {
  if (!v.allFinite()) {
    throw std::invalid_argument(std::string(what) + ": non-finite entries");
  }
}

}  // namespace

ControlInput ControlInput::zero(int dim) {
  if (dim < 1) throw std::invalid_argument("ControlInput::zero: dim must be >= 1");
  return constant(Vector::Zero(dim));
}

ControlInput ControlInput::constant(Vector u) {
  require_finite(u, "ControlInput::constant");
  return ControlInput(ConstantControl{std::move(u)});
}

ControlInput ControlInput::sinusoidal(Vector amplitude, double omega, Vector phase) {
  require_finite(amplitude, "ControlInput::sinusoidal");
  if (!std::isfinite(omega)) {
    throw std::invalid_argument("ControlInput::sinusoidal: non-finite frequency");
  }
  if (phase.size() == 0) phase = Vector::Zero(amplitude.size());
  require_finite(phase, "ControlInput::sinusoidal");
  if (phase.size() != amplitude.size()) {
    throw std::invalid_argument("ControlInput::sinusoidal: phase dimension mismatch");
  }
  return ControlInput(SinusoidalControl{std::move(amplitude), omega, std::move(phase)});
}

ControlInput ControlInput::piecewise(std::vector<PiecewiseSegment> segments) {
  if (segments.empty()) {
    throw std::invalid_argument("ControlInput::piecewise: no segments");
  }
  const auto dim = segments.front().u.size();
  double last_end = -std::numeric_limits<double>::infinity();
  for (const auto& seg : segments) {
    require_finite(seg.u, "ControlInput::piecewise");
    if (seg.u.size() != dim) {
      throw std::invalid_argument("ControlInput::piecewise: segment dimension mismatch");
    }
    if (!std::isfinite(seg.t_begin) || !std::isfinite(seg.t_end) ||
        !(seg.t_begin < seg.t_end)) {
      throw std::invalid_argument("ControlInput::piecewise: segment times must satisfy t_begin < t_end");
    }
    if (seg.t_begin < last_end) {
      throw std::invalid_argument("ControlInput::piecewise: segments must be ordered and non-overlapping");
    }
    last_end = seg.t_end;
  }
  return ControlInput(PiecewiseControl{std::move(segments)});
}

ControlInput ControlInput::energy_gradient(const Vector& coupling_rate,
                                           const Vector& energy, double gas_constant,
                                           double temperature) {
  if (coupling_rate.size() != energy.size()) {
    throw std::invalid_argument("ControlInput::energy_gradient: dimension mismatch");
  }
  if (!(gas_constant > 0.0) || !(temperature > 0.0)) {
    throw std::invalid_argument("ControlInput::energy_gradient: R and T must be positive");
  }
  return constant(coupling_rate.cwiseProduct(energy) / (gas_constant * temperature));
}

int ControlInput::dim() const {
  if (const auto* c = std::get_if<ConstantControl>(&impl_)) {
    return static_cast<int>(c->u.size());
  }
  if (const auto* s = std::get_if<SinusoidalControl>(&impl_)) {
    return static_cast<int>(s->amplitude.size());
  }
  return static_cast<int>(std::get<PiecewiseControl>(impl_).segments.front().u.size());
}

Vector ControlInput::at(double t) const {
  if (const auto* c = std::get_if<ConstantControl>(&impl_)) {
    return c->u;
  }
  if (const auto* s = std::get_if<SinusoidalControl>(&impl_)) {
    return s->amplitude.array() * (s->omega * t + s->phase.array()).sin();
  }
  const auto& segments = std::get<PiecewiseControl>(impl_).segments;
  for (const auto& seg : segments) {
    if (t >= seg.t_begin && t < seg.t_end) return seg.u;
  }
  return Vector::Zero(dim());
}

bool ControlInput::is_constant() const {
  return std::holds_alternative<ConstantControl>(impl_);
}

const Vector& ControlInput::constant_value() const {
  if (const auto* c = std::get_if<ConstantControl>(&impl_)) {
    return c->u;
  }
  throw std::logic_error("ControlInput: not a constant drive");
}

std::vector<double> ControlInput::breakpoints() const {
  std::vector<double> knots;
  if (const auto* p = std::get_if<PiecewiseControl>(&impl_)) {
    for (const auto& seg : p->segments) {
      knots.push_back(seg.t_begin);
      knots.push_back(seg.t_end);
    }
  }
  return knots;
}

}  // namespace rqdyn
