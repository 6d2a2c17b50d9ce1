#pragma once

#include <string>
#include <vector>

#include "satmon/errors.hpp"

namespace satmon {

/// A monomial x1^a1 * ... * xn^an stored as its exponent vector.
/// Immutable value type; the all-zero vector is the unit monomial 1.
/// Variable indices in the public API are 1-based, matching the x1..xn
/// text syntax; slots in exps() are 0-based.
class Monomial {
public:
  Monomial() = default;
  explicit Monomial(std::vector<int> exps);

  static Monomial unit(int n);
  static Monomial variable(int var, int n);

  int dim() const { return static_cast<int>(exps_.size()); }
  const std::vector<int>& exps() const { return exps_; }
  int exp(int var) const { return exps_[static_cast<std::size_t>(var - 1)]; }
  bool is_unit() const;

  friend bool operator==(const Monomial&, const Monomial&) = default;

private:
  std::vector<int> exps_;
};

/// An integer bound vector c; entries may go negative (c - l*e does).
/// A negative entry bounds nothing, since exponents are >= 0.
class BoundVector {
public:
  BoundVector() = default;
  explicit BoundVector(std::vector<int> bounds) : bounds_(std::move(bounds)) {}

  static BoundVector uniform(int n, int value);

  int dim() const { return static_cast<int>(bounds_.size()); }
  const std::vector<int>& entries() const { return bounds_; }
  int entry(int var) const { return bounds_[static_cast<std::size_t>(var - 1)]; }
  bool any_negative() const;

  BoundVector scaled(int k) const;      // k*c
  BoundVector shifted(int l) const;     // c - l*e
  BoundVector plus(const BoundVector&) const;

  friend bool operator==(const BoundVector&, const BoundVector&) = default;

private:
  std::vector<int> bounds_;
};

int total_degree(const Monomial& u);

/// Largest 1-based index with nonzero exponent; 0 for the unit monomial.
int max_index(const Monomial& u);

bool divides(const Monomial& u, const Monomial& v);

/// v / u; requires divides(u, v).
Monomial quotient(const Monomial& v, const Monomial& u);

Monomial mul(const Monomial& u, const Monomial& v);

/// u^k by scaling the exponent vector; checked like mul.
Monomial pow(const Monomial& u, int k);

bool is_bounded(const Monomial& u, const BoundVector& c);

/// x_i * u / x_j for i < j with x_j | u; preserves total degree.
Monomial exchange(const Monomial& u, int i, int j);

/// Canonical order: total degree ascending, then exponent-lexicographic
/// descending. Fixes generator serialization throughout.
bool canonical_less(const Monomial& a, const Monomial& b);

/// "x1^2*x3" form, zero exponents omitted, "1" for the unit.
std::string to_text(const Monomial& u);

/// Parses the textual syntax: '*'-separated factors "x<i>[^<e>]", or "1".
/// Case-insensitive, whitespace tolerated. n is the ambient dimension.
Monomial parse_monomial(const std::string& text, int n);

namespace detail {
void require_same_dim(int a, int b, const char* where);
int checked_exponent(long long value, const char* where);
} // namespace detail

} // namespace satmon
