#pragma once

// Univariate polynomials over F_q: characteristic polynomials of matrices and
// factorization into distinct irreducible factors (squarefree part, distinct
// degree, then Cantor-Zassenhaus equal-degree splitting with a fixed seed).

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "skewbrace/field.hpp"
#include "skewbrace/matrix.hpp"

namespace skewbrace {

// Coefficients low to high, no trailing zeros; the zero polynomial is empty.
class Polynomial {
 public:
  explicit Polynomial(PrimeField field) : field_(field) {}
  Polynomial(PrimeField field, std::vector<FieldElement> coeffs)
      : field_(field), c_(std::move(coeffs)) {
    for (auto& x : c_) x %= field_.modulus();
    trim();
  }

  static Polynomial monomial(PrimeField f, std::size_t degree, FieldElement c = 1) {
    std::vector<FieldElement> v(degree + 1, 0);
    v[degree] = c;
    return Polynomial(f, std::move(v));
  }
  static Polynomial constant(PrimeField f, FieldElement c) {
    return Polynomial(f, {c});
  }

  const PrimeField& field() const noexcept { return field_; }
  bool is_zero() const noexcept { return c_.empty(); }
  // Degree of the zero polynomial is reported as -1.
  long degree() const noexcept { return static_cast<long>(c_.size()) - 1; }
  const std::vector<FieldElement>& coefficients() const noexcept { return c_; }
  FieldElement coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
  FieldElement leading() const { return c_.empty() ? 0 : c_.back(); }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }

  Polynomial monic() const {
    if (is_zero()) return *this;
    FieldElement inv = field_.inv(leading());
    Polynomial out = *this;
    for (auto& x : out.c_) x = field_.mul(x, inv);
    return out;
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<FieldElement> v(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.field_.add(a.coeff(i), b.coeff(i));
    return Polynomial(a.field_, std::move(v));
  }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    std::vector<FieldElement> v(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.field_.sub(a.coeff(i), b.coeff(i));
    return Polynomial(a.field_, std::move(v));
  }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial(a.field_);
    std::vector<FieldElement> v(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j)
        v[i + j] = a.field_.mul_add(v[i + j], a.c_[i], b.c_[j]);
    }
    return Polynomial(a.field_, std::move(v));
  }

  // Euclidean division; returns {quotient, remainder}.
  std::pair<Polynomial, Polynomial> divmod(const Polynomial& d) const {
    if (d.is_zero()) throw Error("polynomial division by zero");
    std::vector<FieldElement> r = c_;
    if (degree() < d.degree()) return {Polynomial(field_), *this};
    std::vector<FieldElement> q(c_.size() - d.c_.size() + 1, 0);
    FieldElement inv_lead = field_.inv(d.leading());
    for (long i = static_cast<long>(r.size()) - 1; i >= d.degree(); --i) {
      FieldElement coef = field_.mul(r[i], inv_lead);
      if (coef == 0) continue;
      std::size_t shift = static_cast<std::size_t>(i - d.degree());
      q[shift] = coef;
      FieldElement neg = field_.neg(coef);
      for (std::size_t j = 0; j < d.c_.size(); ++j)
        r[shift + j] = field_.mul_add(r[shift + j], neg, d.c_[j]);
    }
    return {Polynomial(field_, std::move(q)), Polynomial(field_, std::move(r))};
  }
  Polynomial operator%(const Polynomial& d) const { return divmod(d).second; }
  Polynomial operator/(const Polynomial& d) const { return divmod(d).first; }

  Polynomial derivative() const {
    if (c_.size() <= 1) return Polynomial(field_);
    std::vector<FieldElement> v(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i)
      v[i - 1] = field_.mul(c_[i], static_cast<FieldElement>(i % field_.modulus()));
    return Polynomial(field_, std::move(v));
  }

  FieldElement evaluate(FieldElement x) const {
    FieldElement acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = field_.mul_add(*it, acc, x);
    return acc;
  }

  // p(m) for a square matrix m, by Horner's rule.
  Matrix evaluate(const Matrix& m) const {
    Matrix acc(m.field(), m.rows(), m.cols());
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
      acc = acc * m + Matrix::scalar(m.field(), m.rows(), *it);
    return acc;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.field_ == b.field_ && a.c_ == b.c_;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  PrimeField field_;
  std::vector<FieldElement> c_;
};

inline Polynomial gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    Polynomial r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

// base^e mod m.
inline Polynomial powmod(Polynomial base, std::uint64_t e, const Polynomial& m) {
  Polynomial result = Polynomial::constant(m.field(), 1) % m;
  base = base % m;
  while (e > 0) {
    if (e & 1) result = (result * base) % m;
    base = (base * base) % m;
    e >>= 1;
  }
  return result;
}

// Characteristic polynomial det(xI - m) via reduction to upper Hessenberg
// form followed by the standard determinant recurrence.
inline Polynomial characteristic_polynomial(const Matrix& input) {
  if (!input.is_square()) throw DimensionMismatch("charpoly: matrix not square");
  const PrimeField f = input.field();
  const std::size_t n = input.rows();
  Matrix h = input;
  for (std::size_t m = 1; m + 1 < n; ++m) {
    std::size_t i = m;
    while (i < n && h(i, m - 1) == 0) ++i;
    if (i == n) continue;
    if (i != m) {
      // Swap rows and columns i and m (a similarity transformation).
      for (std::size_t j = 0; j < n; ++j) {
        auto t = h(i, j); h.set(i, j, h(m, j)); h.set(m, j, t);
      }
      for (std::size_t j = 0; j < n; ++j) {
        auto t = h(j, i); h.set(j, i, h(j, m)); h.set(j, m, t);
      }
    }
    FieldElement inv = f.inv(h(m, m - 1));
    for (std::size_t r = m + 1; r < n; ++r) {
      FieldElement u = f.mul(h(r, m - 1), inv);
      if (u == 0) continue;
      // row_r -= u * row_m; col_m += u * col_r
      for (std::size_t j = 0; j < n; ++j) h.set(r, j, f.sub(h(r, j), f.mul(u, h(m, j))));
      for (std::size_t j = 0; j < n; ++j) h.set(j, m, f.add(h(j, m), f.mul(u, h(j, r))));
    }
  }
  // p_0 = 1; p_k = (x - h_kk) p_{k-1} - sum_{i<k} h_ik * prod_{j=i+1..k} h_{j,j-1} * p_{i-1}
  std::vector<Polynomial> p;
  p.reserve(n + 1);
  p.push_back(Polynomial::constant(f, 1));
  const Polynomial x = Polynomial::monomial(f, 1);
  for (std::size_t k = 0; k < n; ++k) {
    Polynomial next = (x - Polynomial::constant(f, h(k, k))) * p[k];
    FieldElement t = 1;
    for (std::size_t i = k; i-- > 0;) {
      t = f.mul(t, h(i + 1, i));
      FieldElement coef = f.mul(t, h(i, k));
      if (coef != 0) next = next - p[i] * Polynomial::constant(f, coef);
    }
    p.push_back(std::move(next));
  }
  return p[n];
}

namespace detail {

// Squarefree factors of a monic polynomial (multiplicities dropped).
inline std::vector<Polynomial> squarefree_parts(const Polynomial& poly) {
  const PrimeField f = poly.field();
  std::vector<Polynomial> out;
  if (poly.degree() <= 0) return out;
  Polynomial c = gcd(poly, poly.derivative());
  Polynomial w = poly / c;
  while (w.degree() > 0) {
    Polynomial y = gcd(w, c);
    Polynomial z = w / y;
    if (z.degree() > 0) out.push_back(z.monic());
    w = y;
    c = c / y;
  }
  if (c.degree() > 0) {
    // c is a p-th power; in a prime field the p-th root of a coefficient is
    // the coefficient itself.
    const std::size_t p = f.modulus();
    std::vector<FieldElement> root;
    for (std::size_t i = 0; i < c.coefficients().size(); i += p) root.push_back(c.coeff(i));
    for (auto& part : squarefree_parts(Polynomial(f, root).monic())) out.push_back(part);
  }
  return out;
}

// Splits a squarefree monic product of irreducibles of degree k.
inline void equal_degree_split(const Polynomial& g, std::size_t k, std::mt19937_64& rng,
                               std::vector<Polynomial>& out) {
  const PrimeField f = g.field();
  if (static_cast<std::size_t>(g.degree()) == k) {
    out.push_back(g.monic());
    return;
  }
  const std::uint64_t q = f.modulus();
  std::uniform_int_distribution<std::uint64_t> coin(0, q - 1);
  for (;;) {
    std::vector<FieldElement> coeffs(static_cast<std::size_t>(g.degree()));
    for (auto& c : coeffs) c = static_cast<FieldElement>(coin(rng));
    Polynomial a(f, coeffs);
    if (a.degree() <= 0) continue;
    Polynomial d = gcd(a, g);
    if (d.degree() <= 0) {
      Polynomial b(f);
      if (q == 2) {
        // Trace map a + a^2 + ... + a^(2^(k-1)).
        Polynomial t = a % g;
        b = t;
        for (std::size_t i = 1; i < k; ++i) {
          t = (t * t) % g;
          b = b + t;
        }
      } else {
        // a^((q^k - 1)/2) = (a^(1 + q + ... + q^(k-1)))^((q-1)/2).
        Polynomial norm = Polynomial::constant(f, 1);
        Polynomial t = a % g;
        for (std::size_t i = 0; i < k; ++i) {
          norm = (norm * t) % g;
          t = powmod(t, q, g);
        }
        b = powmod(norm, (q - 1) / 2, g) - Polynomial::constant(f, 1);
      }
      d = gcd(b, g);
    }
    if (d.degree() > 0 && d.degree() < g.degree()) {
      equal_degree_split(d, k, rng, out);
      equal_degree_split(g / d, k, rng, out);
      return;
    }
  }
}

}  // namespace detail

// Distinct monic irreducible factors, sorted by (degree, coefficients).
inline std::vector<Polynomial> irreducible_factors(const Polynomial& poly) {
  const PrimeField f = poly.field();
  std::vector<Polynomial> out;
  std::mt19937_64 rng(0x5eedbeefULL);
  const Polynomial x = Polynomial::monomial(f, 1);
  for (Polynomial g : detail::squarefree_parts(poly.monic())) {
    Polynomial h = x % g;
    for (std::size_t k = 1; g.degree() > 0; ++k) {
      if (static_cast<long>(2 * k) > g.degree()) {
        out.push_back(g.monic());
        break;
      }
      h = powmod(h, f.modulus(), g);
      Polynomial gk = gcd(h - x, g);
      if (gk.degree() > 0) {
        detail::equal_degree_split(gk, k, rng, out);
        g = g / gk;
        h = h % g;
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const Polynomial& a, const Polynomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a.coefficients() < b.coefficients();
  });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Eigenvalues of m lying in F_q, ascending.
inline std::vector<FieldElement> eigenvalues_in_field(const Matrix& m) {
  std::vector<FieldElement> out;
  for (const auto& p : irreducible_factors(characteristic_polynomial(m)))
    if (p.degree() == 1) out.push_back(m.field().neg(p.coeff(0)));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace skewbrace
