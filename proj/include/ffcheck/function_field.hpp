#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ffcheck/expression.hpp"
#include "ffcheck/linear_algebra.hpp"
#include "ffcheck/rational_function.hpp"

namespace ffcheck {

/// Finite set of places of the projective line: the roots of a monic
/// squarefree polynomial (a place of degree d stands for a Galois orbit of d
/// points) together with an optional point at infinity.
class PlaceSet {
 public:
  PlaceSet() : finite_(BigRational(1)) {}
  PlaceSet(const Polynomial& finite, bool infinity) : infinite_(infinity) {
    if (finite.is_zero()) throw InvalidInput("place set from the zero polynomial");
    finite_ = radical(finite);
  }
  /// Union of the roots of the given polynomials.
  PlaceSet(const std::vector<Polynomial>& polys, bool infinity) : PlaceSet(product(polys), infinity) {}

  static PlaceSet from_points(const std::vector<BigRational>& points, bool infinity) {
    std::vector<Polynomial> polys;
    for (const auto& p : points) polys.push_back(Polynomial{BigRational(-p), BigRational(1)});
    return PlaceSet(polys, infinity);
  }

  /// "t, t+1, inf"
  static PlaceSet parse(std::string_view text) {
    std::vector<Polynomial> polys;
    bool inf = false;
    std::size_t start = 0;
    while (start <= text.size()) {
      std::size_t end = text.find(',', start);
      if (end == std::string_view::npos) end = text.size();
      std::string_view item = text.substr(start, end - start);
      std::size_t lead = 0;
      while (lead < item.size() && item[lead] == ' ') ++lead;
      std::size_t trail = item.size();
      while (trail > lead && item[trail - 1] == ' ') --trail;
      std::string_view token = item.substr(lead, trail - lead);
      if (token.empty()) throw ParseError("empty place", start + lead);
      if (token == "inf") {
        inf = true;
      } else {
        try {
          Polynomial p = parse_polynomial(token);
          if (p.is_zero() || p.is_constant()) throw ParseError("place must be a nonconstant polynomial", 0);
          polys.push_back(std::move(p));
        } catch (const ParseError& e) {
          throw ParseError("bad place '" + std::string(token) + "'", start + lead + e.offset());
        }
      }
      start = end + 1;
    }
    return PlaceSet(polys, inf);
  }

  const Polynomial& finite_part() const noexcept { return finite_; }
  bool includes_infinity() const noexcept { return infinite_; }
  std::size_t cardinality() const { return finite_.degree() + (infinite_ ? 1 : 0); }
  long euler_characteristic() const { return static_cast<long>(cardinality()) - 2; }

  bool contains_point(const BigRational& x) const { return finite_(x) == 0; }
  /// Every root of p lies in S.
  bool contains_roots_of(const Polynomial& p) const {
    if (p.is_zero()) throw InvalidInput("roots of the zero polynomial");
    return split_by_support(p, finite_).first.is_constant();
  }

  PlaceSet united(const PlaceSet& o) const {
    return PlaceSet(finite_ * o.finite_, infinite_ || o.infinite_);
  }

  friend bool operator==(const PlaceSet& a, const PlaceSet& b) {
    return a.finite_ == b.finite_ && a.infinite_ == b.infinite_;
  }

  /// Rational points as linear factors, then any remaining irreducible part
  /// as one polynomial, then "inf"; parses back to the same set.
  std::string to_string() const;

 private:
  static Polynomial product(const std::vector<Polynomial>& polys) {
    Polynomial p(BigRational(1));
    for (const auto& q : polys) p = p * q;
    return p;
  }

  Polynomial finite_;
  bool infinite_ = false;
};

inline long euler_characteristic(const PlaceSet& s) { return s.euler_characteristic(); }

/// Refines polynomials into a pairwise coprime list of monic squarefree
/// polynomials such that every input has constant multiplicity along each
/// element. Built from squarefree decompositions by gcd splitting.
inline std::vector<Polynomial> coprime_basis(const std::vector<Polynomial>& inputs) {
  std::vector<Polynomial> basis;
  for (const auto& p : inputs) {
    if (p.is_zero()) throw InvalidInput("coprime basis of the zero polynomial");
    for (auto& [f, m] : squarefree_decomposition(p)) basis.push_back(f);
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < basis.size() && !changed; ++i)
      for (std::size_t j = i + 1; j < basis.size() && !changed; ++j) {
        const Polynomial g = poly_gcd(basis[i], basis[j]);
        if (g.is_constant()) continue;
        Polynomial a = basis[i].exact_div(g);
        Polynomial b = basis[j].exact_div(g);
        basis.erase(basis.begin() + static_cast<std::ptrdiff_t>(j));
        basis.erase(basis.begin() + static_cast<std::ptrdiff_t>(i));
        for (auto* q : {&a, &b})
          if (!q->is_constant()) basis.push_back(q->monic());
        basis.push_back(g.monic());
        changed = true;
      }
  }
  return basis;
}

/// Multiplicity of p along the squarefree polynomial b, assuming it is the
/// same at every root of b.
inline long order_along(Polynomial p, const Polynomial& b) {
  if (p.is_zero()) throw InvalidInput("order of the zero polynomial");
  long k = 0;
  for (;;) {
    auto [q, r] = p.divmod(b);
    if (!r.is_zero()) return k;
    p = std::move(q);
    ++k;
  }
}

/// Valuation of f along a squarefree polynomial on which it is uniform.
inline long valuation_along(const RationalFunction& f, const Polynomial& place) {
  if (f.is_zero()) throw InvalidInput("valuation of zero");
  return order_along(f.num(), place) - order_along(f.den(), place);
}

inline long valuation_at_infinity(const RationalFunction& f) {
  if (f.is_zero()) throw InvalidInput("valuation of zero");
  return static_cast<long>(f.den().degree()) - static_cast<long>(f.num().degree());
}

/// Formal integer combination of places.
class Divisor {
 public:
  struct Term {
    Polynomial place;  // monic squarefree
    long multiplicity;
  };

  Divisor() = default;
  Divisor(std::vector<Term> finite, long infinity) : terms_(std::move(finite)), infinity_(infinity) {
    canonicalize();
  }

  const std::vector<Term>& finite_terms() const noexcept { return terms_; }
  long infinity_multiplicity() const noexcept { return infinity_; }
  bool is_zero() const noexcept { return terms_.empty() && infinity_ == 0; }

  long degree() const {
    long d = infinity_;
    for (const auto& t : terms_) d += t.multiplicity * static_cast<long>(t.place.degree());
    return d;
  }
  /// Degree of the positive part.
  long positive_degree() const {
    long d = std::max(infinity_, 0L);
    for (const auto& t : terms_)
      if (t.multiplicity > 0) d += t.multiplicity * static_cast<long>(t.place.degree());
    return d;
  }
  /// Support as a single squarefree polynomial (finite part).
  Polynomial finite_support() const {
    Polynomial p(BigRational(1));
    for (const auto& t : terms_) p = p * t.place;
    return p;
  }

  friend Divisor operator+(const Divisor& a, const Divisor& b) {
    std::vector<Term> all = a.terms_;
    all.insert(all.end(), b.terms_.begin(), b.terms_.end());
    return Divisor(std::move(all), a.infinity_ + b.infinity_);
  }
  Divisor operator-() const {
    Divisor r = *this;
    for (auto& t : r.terms_) t.multiplicity = -t.multiplicity;
    r.infinity_ = -r.infinity_;
    return r;
  }
  friend Divisor operator-(const Divisor& a, const Divisor& b) { return a + (-b); }
  friend bool operator==(const Divisor& a, const Divisor& b) {
    if (a.infinity_ != b.infinity_ || a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
      if (a.terms_[i].multiplicity != b.terms_[i].multiplicity || a.terms_[i].place != b.terms_[i].place)
        return false;
    return true;
  }

  std::string to_string() const {
    std::string out = "(";
    bool first = true;
    for (const auto& t : terms_) {
      out += (first ? "" : ", ") + ffcheck::to_string(t.place) + ":" + (t.multiplicity > 0 ? "+" : "") +
             std::to_string(t.multiplicity);
      first = false;
    }
    if (infinity_ != 0)
      out += std::string(first ? "" : ", ") + "inf:" + (infinity_ > 0 ? "+" : "") + std::to_string(infinity_);
    return out + ")";
  }

 private:
  // Refine to a coprime basis, then merge places with equal multiplicity so
  // the representation is unique.
  void canonicalize() {
    std::vector<Polynomial> places;
    for (const auto& t : terms_) {
      if (t.place.is_zero() || t.place.is_constant()) throw InvalidInput("divisor term with a constant place");
      places.push_back(t.place);
    }
    const auto basis = coprime_basis(places);
    std::vector<std::pair<long, Polynomial>> merged;
    for (const auto& b : basis) {
      long m = 0;
      for (const auto& t : terms_)
        if (poly_gcd(t.place, b).degree() > 0) m += t.multiplicity;
      if (m == 0) continue;
      auto it = std::find_if(merged.begin(), merged.end(), [&](const auto& e) { return e.first == m; });
      if (it == merged.end()) merged.emplace_back(m, b);
      else it->second = it->second * b;
    }
    std::sort(merged.begin(), merged.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    terms_.clear();
    for (auto& [m, p] : merged) terms_.push_back({p.monic(), m});
  }

  std::vector<Term> terms_;
  long infinity_ = 0;
};

/// Zeros minus poles of a nonzero rational function, including infinity.
inline Divisor divisor_of(const RationalFunction& f) {
  if (f.is_zero()) throw InvalidInput("divisor of the zero function");
  std::vector<Divisor::Term> terms;
  for (auto& [p, m] : squarefree_decomposition(f.num())) terms.push_back({p, static_cast<long>(m)});
  for (auto& [p, m] : squarefree_decomposition(f.den())) terms.push_back({p, -static_cast<long>(m)});
  const long inf = static_cast<long>(f.den().degree()) - static_cast<long>(f.num().degree());
  return Divisor(std::move(terms), inf);
}

/// Number of poles, with multiplicity, outside S.
inline std::size_t height_outside(const RationalFunction& f, const PlaceSet& s) {
  if (f.is_zero()) return 0;
  std::size_t h = split_by_support(f.den(), s.finite_part()).first.degree();
  if (!s.includes_infinity() && f.num().degree() > f.den().degree()) h += f.num().degree() - f.den().degree();
  return h;
}

/// H(f_1 : ... : f_n) = -sum_v min_i v(f_i).
inline std::size_t projective_height(const std::vector<RationalFunction>& fs) {
  Polynomial common(BigRational(1));
  bool any = false;
  for (const auto& f : fs) {
    if (f.is_zero()) continue;
    any = true;
    common = poly_lcm(common, f.den());
  }
  if (!any) throw InvalidInput("projective height of the zero point");
  std::vector<Polynomial> gs;
  Polynomial g;
  for (const auto& f : fs) {
    if (f.is_zero()) continue;
    gs.push_back(f.num() * common.exact_div(f.den()));
    g = g.is_zero() ? gs.back().monic() : poly_gcd(g, gs.back());
  }
  std::size_t h = 0;
  for (const auto& q : gs) h = std::max(h, q.exact_div(g).degree());
  return h;
}

/// A nonzero rational function certified to have all zeros and poles in S.
struct SUnit {
  RationalFunction value;
  PlaceSet places;
};

/// Squarefree witness of the zeros and poles of f outside S, or "inf", or
/// empty if f is an S-unit.
inline std::string sunit_obstruction(const RationalFunction& f, const PlaceSet& s) {
  if (f.is_zero()) throw InvalidInput("zero is not a unit");
  const Polynomial outside = split_by_support(f.num() * f.den(), s.finite_part()).first;
  if (!outside.is_constant()) return to_string(radical(outside));
  if (!s.includes_infinity() && f.num().degree() != f.den().degree()) return "inf";
  return {};
}

inline SUnit certify_sunit(const RationalFunction& f, const PlaceSet& s) {
  const std::string witness = sunit_obstruction(f, s);
  if (!witness.empty()) throw NotAnSUnit(to_string(f) + " is not an S-unit", witness);
  return {f, s};
}

inline bool is_sunit(const RationalFunction& f, const PlaceSet& s) {
  return !f.is_zero() && sunit_obstruction(f, s).empty();
}

/// No poles outside S.
inline bool is_sinteger(const RationalFunction& f, const PlaceSet& s) { return height_outside(f, s) == 0; }

/// Generating relation u1^r * u2^s = mu, normalized with gcd(|r|,|s|) = 1 and
/// r > 0 or (r = 0, s > 0).
struct Relation {
  long r = 0;
  long s = 0;
  BigRational mu;
};

inline std::optional<Relation> multiplicative_dependence(const RationalFunction& u1, const RationalFunction& u2) {
  if (u1.is_zero() || u2.is_zero()) throw InvalidInput("multiplicative dependence of zero");
  const auto basis = coprime_basis({u1.num(), u1.den(), u2.num(), u2.den()});
  auto vector_of = [&](const RationalFunction& u) {
    std::vector<long> v;
    for (const auto& b : basis) v.push_back(order_along(u.num(), b) - order_along(u.den(), b));
    v.push_back(static_cast<long>(u.den().degree()) - static_cast<long>(u.num().degree()));
    return v;
  };
  const auto v1 = vector_of(u1);
  const auto v2 = vector_of(u2);
  auto is_null = [](const std::vector<long>& v) { return std::all_of(v.begin(), v.end(), [](long x) { return x == 0; }); };
  long r = 0;
  long s = 0;
  if (is_null(v1)) {
    r = 1;
  } else if (is_null(v2)) {
    s = 1;
  } else {
    std::size_t i = 0;
    while (v1[i] == 0) ++i;
    r = v2[i];
    s = -v1[i];
    const long g = std::gcd(r, s);
    r /= g;
    s /= g;
    for (std::size_t k = 0; k < v1.size(); ++k)
      if (r * v1[k] + s * v2[k] != 0) return std::nullopt;
  }
  if (r < 0 || (r == 0 && s < 0)) {
    r = -r;
    s = -s;
  }
  const RationalFunction value = u1.pow(r) * u2.pow(s);
  if (!value.is_constant()) throw InternalError("dependence relation does not give a constant");
  return Relation{r, s, value.constant_value()};
}

inline std::optional<Relation> multiplicative_dependence(const SUnit& u1, const SUnit& u2) {
  if (!(u1.places == u2.places)) throw InvalidInput("units certified against different place sets");
  return multiplicative_dependence(u1.value, u2.value);
}

/// det of the matrix whose j-th row holds the (j-1)-th t-derivatives.
inline RationalFunction wronskian(const std::vector<RationalFunction>& fs) {
  if (fs.empty()) throw InvalidInput("wronskian of an empty list");
  const std::size_t n = fs.size();
  Matrix<RationalFunction> m(n, std::vector<RationalFunction>(n));
  m[0] = fs;
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) m[j][i] = m[j - 1][i].derivative();
  return field_determinant(std::move(m));
}

/// Rational roots of a nonzero polynomial, each listed once, ascending.
inline std::vector<BigRational> rational_roots(const Polynomial& p) {
  if (p.is_zero()) throw InvalidInput("roots of the zero polynomial");
  std::vector<BigRational> roots;
  if (p.is_constant()) return roots;
  Polynomial q = radical(p);
  if (q.coeff(0) == 0) {
    roots.emplace_back(0);
    q = q.exact_div(Polynomial::variable());
  }
  if (!q.is_constant()) {
    BigInt den(1);
    for (const auto& c : q.coefficients()) den = lcm(den, c.get_den());
    auto divisors = [](BigInt n) {
      if (n < 0) n = -n;
      std::vector<BigInt> ds;
      for (BigInt d = 1; d * d <= n; ++d)
        if (n % d == 0) {
          ds.push_back(d);
          if (d * d != n) ds.push_back(BigInt(n / d));
        }
      return ds;
    };
    const BigInt a0 = q.coeff(0).get_num() * (den / q.coeff(0).get_den());
    const BigInt an = q.leading().get_num() * (den / q.leading().get_den());
    if (abs(a0) > BigInt(1) << 40 || abs(an) > BigInt(1) << 40)
      throw ResourceLimit("rational root search on large coefficients");
    for (const auto& num : divisors(a0))
      for (const auto& d : divisors(an))
        for (int sign : {1, -1}) {
          const BigRational x = make_rational(BigInt(num * sign), d);
          if (q(x) == 0 && std::find(roots.begin(), roots.end(), x) == roots.end()) roots.push_back(x);
        }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

inline std::string PlaceSet::to_string() const {
  std::vector<std::string> parts;
  Polynomial rest = finite_;
  if (!finite_.is_constant()) {
    try {
      for (const auto& r : rational_roots(finite_)) {
        const Polynomial lin{BigRational(-r), BigRational(1)};
        parts.push_back(ffcheck::to_string(lin));
        rest = rest.exact_div(lin);
      }
    } catch (const ResourceLimit&) {
      parts.clear();
      rest = finite_;
    }
  }
  if (!rest.is_constant()) parts.push_back(ffcheck::to_string(rest));
  if (infinite_) parts.push_back("inf");
  std::string out;
  for (const auto& p : parts) out += (out.empty() ? "" : ", ") + p;
  return out;
}

/// t = (a s + b) / (c s + d), ad - bc != 0.
struct MobiusMap {
  BigRational a, b, c, d;

  RationalFunction as_function() const {
    return RationalFunction(Polynomial{b, a}, Polynomial{d, c});
  }
  /// f(t) rewritten in the new variable s.
  RationalFunction pull_back(const RationalFunction& f) const { return f.compose(as_function()); }

  /// Places in the s-line lying over the places of S.
  PlaceSet pull_back(const PlaceSet& s) const {
    const Polynomial& p = s.finite_part();
    const std::size_t n = p.degree();
    // p((as+b)/(cs+d)) (cs+d)^n
    Polynomial acc;
    const Polynomial num{b, a};
    const Polynomial den{d, c};
    for (std::size_t i = 0; i <= n; ++i)
      acc += (num.pow(static_cast<unsigned>(i)) * den.pow(static_cast<unsigned>(n - i))).scaled(p.coeff(i));
    bool inf = false;
    Polynomial finite = acc;
    // s = infinity maps to a/c; it is in the preimage when acc loses degree.
    if (acc.degree() < n) inf = true;
    if (c == 0) {
      if (s.includes_infinity()) inf = true;
    } else if (s.includes_infinity()) {
      finite = finite * den;  // s = -d/c maps to infinity
    }
    return PlaceSet(finite, inf);
  }
};

/// A Möbius change of variable moving two rational points of S (or infinity
/// and one rational point) to 0 and infinity. Heights and Euler
/// characteristics are preserved.
inline MobiusMap normalizing_map(const PlaceSet& s) {
  const auto roots = rational_roots(s.finite_part());
  if (s.includes_infinity()) {
    if (roots.empty()) throw InvalidInput("place set has no rational finite point");
    return {BigRational(1), roots.front(), BigRational(0), BigRational(1)};  // t = s + r
  }
  if (roots.size() < 2) throw InvalidInput("place set has fewer than two rational points");
  // s = 0 -> r0, s = inf -> r1: t = (r1 s + r0) / (s + 1)
  return {roots[1], roots[0], BigRational(1), BigRational(1)};
}

}  // namespace ffcheck
