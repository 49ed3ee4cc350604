// Copyright 2026 The vjpoly Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef VJPOLY_POLY_HPP_
#define VJPOLY_POLY_HPP_

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace vjpoly {

using Integer = mpz_class;

// Dense univariate polynomial in t with exact integer coefficients.
//
// coeffs()[i] is the coefficient of t^i. The representation is canonical:
// the last stored coefficient is nonzero, and the zero polynomial stores
// nothing. Every mutating operation re-canonicalizes.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<Integer> coeffs);
  IntPoly(std::initializer_list<long> coeffs);

  static IntPoly constant(const Integer& c);
  // c * t^k
  static IntPoly monomial(const Integer& c, std::size_t k);
  // t - root
  static IntPoly t_minus(long root);

  const std::vector<Integer>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  // std::nullopt for the zero polynomial.
  std::optional<std::size_t> degree() const;
  std::size_t size() const { return coeffs_.size(); }
  // Coefficient of t^i; zero past the degree.
  Integer coeff(std::size_t i) const;
  const Integer& leading() const { return coeffs_.back(); }

  IntPoly& operator+=(const IntPoly& other);
  IntPoly& operator-=(const IntPoly& other);
  IntPoly& operator*=(const IntPoly& other);
  IntPoly operator-() const;

  // this * t^k
  IntPoly shifted(std::size_t k) const;
  // this * c
  IntPoly scaled(const Integer& c) const;

  friend bool operator==(const IntPoly&, const IntPoly&) = default;

 private:
  void canonicalize();

  std::vector<Integer> coeffs_;
};

IntPoly add(const IntPoly& p, const IntPoly& q);
IntPoly sub(const IntPoly& p, const IntPoly& q);

// Product of p and q: schoolbook when either operand has fewer than
// kKroneckerThreshold coefficients, Kronecker substitution otherwise.
IntPoly mul(const IntPoly& p, const IntPoly& q);
IntPoly mul_schoolbook(const IntPoly& p, const IntPoly& q);
// `threshold` is the operand length below which recursion falls back to
// the schoolbook kernel. Values below 2 are clamped to 2.
IntPoly mul_karatsuba(const IntPoly& p, const IntPoly& q,
                      std::size_t threshold);

// Packs each operand into one integer, a coefficient per 64-bit-aligned
// slot, and leaves the product to GMP's sub-quadratic integer multiply.
IntPoly mul_kronecker(const IntPoly& p, const IntPoly& q);

// Cutovers picked with tools/mul_bench on coefficients of a few hundred
// bits: below kKaratsubaThreshold the karatsuba recursion switches to
// schoolbook, and mul() uses Kronecker from kKroneckerThreshold on.
inline constexpr std::size_t kKaratsubaThreshold = 24;
inline constexpr std::size_t kKroneckerThreshold = 16;

// Returns q with p == d * q. Throws Error(kNonExactDivision) if d does not
// divide p in Z[t], and Error(kInvalidSize) if d is zero.
IntPoly exact_div(const IntPoly& p, const IntPoly& d);

Integer eval(const IntPoly& p, const Integer& x);

IntPoly pow(const IntPoly& base, std::size_t exponent);

// Product of all factors, always multiplying the two shortest remaining
// ones so that small factors meet before they touch a large one. Empty
// input yields 1.
IntPoly product(std::vector<IntPoly> factors);

// t(t-1)...(t-n+1)
IntPoly chromatic_complete(long n);
// (t-1)^n + (-1)^n (t-1)
IntPoly chromatic_cycle(long n);
// t(t-1)^(n-1)
IntPoly chromatic_tree(long n);

// Human-readable form such as "t^3 - 3*t^2 + 2*t", for diagnostics.
std::string to_string(const IntPoly& p);

}  // namespace vjpoly

#endif  // VJPOLY_POLY_HPP_
