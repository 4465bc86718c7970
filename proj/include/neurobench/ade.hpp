#pragma once

namespace neurobench {

/// Area / delay / energy of one circuit element, in nm^2, ps and aJ.
///
/// Addition is component-wise. Scaling names the component(s) it touches.
struct AdeTriple {
  double area = 0.0;
  double delay = 0.0;
  double energy = 0.0;

  AdeTriple& operator+=(const AdeTriple& other) {
    area += other.area;
    delay += other.delay;
    energy += other.energy;
    return *this;
  }

  friend AdeTriple operator+(AdeTriple lhs, const AdeTriple& rhs) { return lhs += rhs; }

  [[nodiscard]] AdeTriple scaled(double area_factor, double delay_factor,
                                 double energy_factor) const {
    return {area * area_factor, delay * delay_factor, energy * energy_factor};
  }
  [[nodiscard]] AdeTriple scaled_area(double k) const { return scaled(k, 1.0, 1.0); }
  [[nodiscard]] AdeTriple scaled_delay(double k) const { return scaled(1.0, k, 1.0); }
  [[nodiscard]] AdeTriple scaled_energy(double k) const { return scaled(1.0, 1.0, k); }

  bool operator==(const AdeTriple&) const = default;
};

}  // namespace neurobench
