#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "knotfib/diagram.hpp"

namespace knotfib {

/// Integer polynomial in z, coefficient i belongs to z^i, trailing zeros trimmed.
class ConwayPolynomial {
 public:
  ConwayPolynomial() = default;
  explicit ConwayPolynomial(std::vector<std::int64_t> coeffs);
  static ConwayPolynomial constant(std::int64_t c) { return ConwayPolynomial({c}); }
  static ConwayPolynomial z() { return ConwayPolynomial({0, 1}); }

  const std::vector<std::int64_t>& coeffs() const noexcept { return c_; }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  std::int64_t leading() const noexcept { return c_.empty() ? 0 : c_.back(); }
  std::int64_t operator[](std::size_t i) const noexcept { return i < c_.size() ? c_[i] : 0; }

  ConwayPolynomial operator+(const ConwayPolynomial& o) const;
  ConwayPolynomial operator-(const ConwayPolynomial& o) const;
  ConwayPolynomial operator*(const ConwayPolynomial& o) const;
  ConwayPolynomial operator-() const;
  friend bool operator==(const ConwayPolynomial&, const ConwayPolynomial&) = default;

  std::string to_string() const;

 private:
  void trim();
  std::vector<std::int64_t> c_;
};

class BoundExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ConwayOptions {
  int max_crossings = 16;
  bool use_cache = true;
};

/// Skein-relation evaluation.  Throws BoundExceeded above the crossing bound.
ConwayPolynomial conway(const Diagram& d, const ConwayOptions& opts = {});
void clear_conway_cache();

bool is_monic_of_degree(const ConwayPolynomial& p, int degree);

/// Coefficient of z^beta1, the determinant of a Seifert matrix of a surface
/// with first Betti number beta1.  Throws if p has larger degree.
std::int64_t seifert_determinant(const ConwayPolynomial& p, int beta1);

/// True for 1 + c z^2 + z^4 with c = 0 mod 4 and for 1 + c z^2 - z^4 with
/// c = 2 mod 4.
bool mm_forbidden(const ConwayPolynomial& p);

/// Laurent polynomial in s = t^(1/2); coefficient i belongs to s^(min_power + i).
struct AlexanderPolynomial {
  int min_power = 0;
  std::vector<std::int64_t> coeffs;
  std::string to_string() const;
};

/// Substitutes z = t^(1/2) - t^(-1/2).
AlexanderPolynomial alexander_from_conway(const ConwayPolynomial& p);

}  // namespace knotfib
