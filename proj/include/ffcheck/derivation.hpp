#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ffcheck/bivariate.hpp"
#include "ffcheck/function_field.hpp"
#include "ffcheck/report.hpp"

namespace ffcheck {

/// Genus-0 derivation frame: omega = dt / (t - v0) has simple poles at v0 and
/// infinity and no zeros, so df = f' omega with f' = (t - v0) df/dt.
class DerivationFrame {
 public:
  DerivationFrame(PlaceSet places, BigRational base_point)
      : places_(std::move(places)), base_(std::move(base_point)) {
    if (!places_.includes_infinity()) throw InvalidFrame("frame needs infinity in S");
    if (!places_.contains_point(base_)) throw InvalidFrame("base point " + to_string(base_) + " is not in S");
  }

  const PlaceSet& places() const noexcept { return places_; }
  const BigRational& base_point() const noexcept { return base_; }
  /// t - v0
  Polynomial pole_factor() const { return Polynomial{BigRational(-base_), BigRational(1)}; }

 private:
  PlaceSet places_;
  BigRational base_;
};

inline DerivationFrame make_frame(const PlaceSet& s, const BigRational& v0) { return DerivationFrame(s, v0); }

/// f' = (t - v0) df/dt.
inline RationalFunction dprime(const RationalFunction& f, const DerivationFrame& frame) {
  return RationalFunction(frame.pole_factor()) * f.derivative();
}

/// Places of S refined so that each of the given functions has a uniform
/// valuation along every returned polynomial.
inline std::vector<Polynomial> refined_places(const PlaceSet& s, const std::vector<RationalFunction>& fs) {
  if (s.finite_part().is_constant()) return {};
  std::vector<Polynomial> inputs{s.finite_part()};
  for (const auto& f : fs) {
    if (f.is_zero()) continue;
    inputs.push_back(f.num());
    inputs.push_back(f.den());
  }
  std::vector<Polynomial> out;
  for (auto& b : coprime_basis(inputs))
    if (s.finite_part().divisible_by(b)) out.push_back(std::move(b));
  return out;
}

struct LogDerivative {
  RationalFunction theta;
  SUnit unit;
};

/// theta = u'/u, asserting that its poles are simple and in S and that
/// H(theta) <= chi_S.
inline LogDerivative log_derivative(const SUnit& u, const DerivationFrame& frame) {
  if (!(u.places == frame.places())) throw InvalidInput("unit certified against another place set");
  const RationalFunction theta = dprime(u.value, frame) / u.value;
  const PlaceSet& s = frame.places();
  if (!theta.is_zero()) {
    const Polynomial& den = theta.den();
    if (!den.is_constant() && (!is_squarefree(den) || !s.finite_part().divisible_by(den)))
      throw TheoremViolation("logarithmic derivative " + to_string(theta) + " has a pole outside S or a multiple pole");
    if (valuation_at_infinity(theta) < -1)
      throw TheoremViolation("logarithmic derivative " + to_string(theta) + " has a multiple pole at infinity");
  }
  if (static_cast<long>(theta.height()) > s.euler_characteristic())
    throw TheoremViolation("height of " + to_string(theta) + " exceeds the Euler characteristic");
  return {theta, u};
}

/// H(a') <= H(a) + chi_S and v(a') >= v(a) - 1 at every place of S, for an
/// S-integer a.
inline BoundReport check_derivative_height(const RationalFunction& a, const DerivationFrame& frame) {
  const PlaceSet& s = frame.places();
  if (!is_sinteger(a, s)) throw InvalidInput(to_string(a) + " has poles outside S");
  const RationalFunction ap = dprime(a, frame);
  BoundReport rep;
  rep.check = "derivative-height";
  rep.inputs = {{"a", to_string(a)}, {"places", s.to_string()}, {"base_point", to_string(frame.base_point())}};
  const long h_ap = static_cast<long>(ap.height());
  const long bound = static_cast<long>(a.height()) + s.euler_characteristic();
  rep.lhs = std::to_string(h_ap);
  rep.rhs = std::to_string(bound);
  bool ok = h_ap <= bound;
  bool valuations_ok = true;
  if (!a.is_zero() && !ap.is_zero()) {
    for (const auto& p : refined_places(s, {a, ap})) {
      const long va = valuation_along(a, p);
      const long vap = valuation_along(ap, p);
      if (vap < va - 1) {
        valuations_ok = false;
        rep.notes.push_back("v(a') < v(a) - 1 along " + to_string(p));
      }
    }
    if (valuation_at_infinity(ap) < valuation_at_infinity(a) - 1) {
      valuations_ok = false;
      rep.notes.push_back("v(a') < v(a) - 1 at infinity");
    }
  }
  rep.branch = "height and valuations";
  rep.context = {{"a_prime", to_string(ap)},
                 {"chi", std::to_string(s.euler_characteristic())},
                 {"valuations_ok", valuations_ok ? "true" : "false"}};
  rep.set(ok && valuations_ok);
  return rep;
}

/// B = (u1'/u1) X dA/dX + (u2'/u2) Y dA/dY, the polynomial with
/// (A(u1, u2))' = B(u1, u2).
struct DerivativeImage {
  BivariatePolynomial b;
  bool identity_ok = false;
};

inline DerivativeImage poly_derivative_image(const BivariatePolynomial& a, const SUnit& u1, const SUnit& u2,
                                             const DerivationFrame& frame) {
  if (!a.has_constant_coefficients()) throw InvalidInput("A must have constant coefficients");
  const RationalFunction d1 = log_derivative(u1, frame).theta;
  const RationalFunction d2 = log_derivative(u2, frame).theta;
  const BivariatePolynomial b = BivariatePolynomial(d1) * BivariatePolynomial::X() * a.partial_x() +
                                BivariatePolynomial(d2) * BivariatePolynomial::Y() * a.partial_y();
  const RationalFunction lhs = dprime(a.evaluate(u1.value, u2.value), frame);
  const RationalFunction rhs = b.evaluate(u1.value, u2.value);
  if (lhs != rhs)
    throw TheoremViolation("derivative identity fails: " + to_string(lhs) + " != " + to_string(rhs));
  return {b, true};
}

}  // namespace ffcheck
