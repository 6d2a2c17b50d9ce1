#include "satmon/monomial.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace satmon {

Caps& caps() {
  static Caps instance;
  return instance;
}

namespace detail {

void require_same_dim(int a, int b, const char* where) {
  if (a != b) {
    throw DimensionError(std::string(where) + ": dimension mismatch (" +
                         std::to_string(a) + " vs " + std::to_string(b) + ")");
  }
}

int checked_exponent(long long value, const char* where) {
  if (value < 0 || value > caps().exponent_cap) {
    throw ExponentOverflow(std::string(where) + ": exponent " +
                           std::to_string(value) + " outside [0, " +
                           std::to_string(caps().exponent_cap) + "]");
  }
  return static_cast<int>(value);
}

} // namespace detail

Monomial::Monomial(std::vector<int> exps) : exps_(std::move(exps)) {
  for (int e : exps_) {
    detail::checked_exponent(e, "Monomial");
  }
}

Monomial Monomial::unit(int n) {
  return Monomial(std::vector<int>(static_cast<std::size_t>(n), 0));
}

Monomial Monomial::variable(int var, int n) {
  if (var < 1 || var > n) {
    throw DimensionError("variable: index " + std::to_string(var) +
                         " outside 1.." + std::to_string(n));
  }
  std::vector<int> e(static_cast<std::size_t>(n), 0);
  e[static_cast<std::size_t>(var - 1)] = 1;
  return Monomial(std::move(e));
}

bool Monomial::is_unit() const {
  return std::all_of(exps_.begin(), exps_.end(), [](int e) { return e == 0; });
}

BoundVector BoundVector::uniform(int n, int value) {
  return BoundVector(std::vector<int>(static_cast<std::size_t>(n), value));
}

bool BoundVector::any_negative() const {
  return std::any_of(bounds_.begin(), bounds_.end(), [](int b) { return b < 0; });
}

BoundVector BoundVector::scaled(int k) const {
  std::vector<int> out(bounds_.size());
  for (std::size_t i = 0; i < bounds_.size(); ++i) {
    long long v = static_cast<long long>(bounds_[i]) * k;
    if (v > caps().exponent_cap || v < -static_cast<long long>(caps().exponent_cap)) {
      throw ExponentOverflow("BoundVector::scaled: entry out of range");
    }
    out[i] = static_cast<int>(v);
  }
  return BoundVector(std::move(out));
}

BoundVector BoundVector::shifted(int l) const {
  std::vector<int> out(bounds_.size());
  for (std::size_t i = 0; i < bounds_.size(); ++i) {
    out[i] = bounds_[i] - l;
  }
  return BoundVector(std::move(out));
}

BoundVector BoundVector::plus(const BoundVector& other) const {
  detail::require_same_dim(dim(), other.dim(), "BoundVector::plus");
  std::vector<int> out(bounds_.size());
  for (std::size_t i = 0; i < bounds_.size(); ++i) {
    out[i] = bounds_[i] + other.bounds_[i];
  }
  return BoundVector(std::move(out));
}

int total_degree(const Monomial& u) {
  int d = 0;
  for (int e : u.exps()) d += e;
  return d;
}

int max_index(const Monomial& u) {
  for (int i = u.dim(); i >= 1; --i) {
    if (u.exp(i) != 0) return i;
  }
  return 0;
}

bool divides(const Monomial& u, const Monomial& v) {
  detail::require_same_dim(u.dim(), v.dim(), "divides");
  for (int i = 0; i < u.dim(); ++i) {
    if (u.exps()[static_cast<std::size_t>(i)] > v.exps()[static_cast<std::size_t>(i)]) {
      return false;
    }
  }
  return true;
}

Monomial quotient(const Monomial& v, const Monomial& u) {
  if (!divides(u, v)) {
    throw NotApplicable("quotient: " + to_text(u) + " does not divide " + to_text(v));
  }
  std::vector<int> out(v.exps());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] -= u.exps()[i];
  }
  return Monomial(std::move(out));
}

Monomial mul(const Monomial& u, const Monomial& v) {
  detail::require_same_dim(u.dim(), v.dim(), "mul");
  std::vector<int> out(u.exps().size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = detail::checked_exponent(
        static_cast<long long>(u.exps()[i]) + v.exps()[i], "mul");
  }
  return Monomial(std::move(out));
}

Monomial pow(const Monomial& u, int k) {
  if (k < 0) throw NotApplicable("pow: negative power");
  std::vector<int> out(u.exps().size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = detail::checked_exponent(
        static_cast<long long>(u.exps()[i]) * k, "pow");
  }
  return Monomial(std::move(out));
}

bool is_bounded(const Monomial& u, const BoundVector& c) {
  detail::require_same_dim(u.dim(), c.dim(), "is_bounded");
  for (int i = 0; i < u.dim(); ++i) {
    if (u.exps()[static_cast<std::size_t>(i)] > c.entries()[static_cast<std::size_t>(i)]) {
      return false;
    }
  }
  return true;
}

Monomial exchange(const Monomial& u, int i, int j) {
  if (i < 1 || j > u.dim() || i >= j) {
    throw NotApplicable("exchange: need 1 <= i < j <= n, got i=" +
                        std::to_string(i) + " j=" + std::to_string(j));
  }
  if (u.exp(j) < 1) {
    throw NotApplicable("exchange: x" + std::to_string(j) + " does not divide " + to_text(u));
  }
  std::vector<int> out(u.exps());
  out[static_cast<std::size_t>(i - 1)] =
      detail::checked_exponent(static_cast<long long>(out[static_cast<std::size_t>(i - 1)]) + 1,
                               "exchange");
  out[static_cast<std::size_t>(j - 1)] -= 1;
  return Monomial(std::move(out));
}

bool canonical_less(const Monomial& a, const Monomial& b) {
  int da = total_degree(a);
  int db = total_degree(b);
  if (da != db) return da < db;
  return a.exps() > b.exps();
}

std::string to_text(const Monomial& u) {
  std::string out;
  for (int i = 1; i <= u.dim(); ++i) {
    int e = u.exp(i);
    if (e == 0) continue;
    if (!out.empty()) out += '*';
    out += 'x';
    out += std::to_string(i);
    if (e != 1) {
      out += '^';
      out += std::to_string(e);
    }
  }
  return out.empty() ? "1" : out;
}

Monomial parse_monomial(const std::string& text, int n) {
  std::vector<int> exps(static_cast<std::size_t>(n), 0);
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto parse_number = [&](const char* what) {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos) {
      throw ParseError("monomial '" + text + "': expected " + what + " at offset " +
                       std::to_string(start));
    }
    long long v = 0;
    for (std::size_t k = start; k < pos; ++k) {
      v = v * 10 + (text[k] - '0');
      if (v > caps().exponent_cap) {
        throw ExponentOverflow("monomial '" + text + "': number too large");
      }
    }
    return static_cast<int>(v);
  };

  bool first = true;
  for (;;) {
    skip_ws();
    if (pos >= text.size()) {
      if (first) throw ParseError("empty monomial");
      break;
    }
    if (!first) {
      if (text[pos] != '*') {
        throw ParseError("monomial '" + text + "': expected '*' at offset " +
                         std::to_string(pos));
      }
      ++pos;
      skip_ws();
    }
    first = false;
    if (text[pos] == '1') {
      ++pos;
      continue; // unit factor
    }
    char c = text[pos];
    if (c != 'x' && c != 'X') {
      throw ParseError("monomial '" + text + "': expected variable at offset " +
                       std::to_string(pos));
    }
    ++pos;
    int var = parse_number("variable index");
    if (var < 1 || var > n) {
      throw ParseError("monomial '" + text + "': variable x" + std::to_string(var) +
                       " outside 1.." + std::to_string(n));
    }
    int e = 1;
    skip_ws();
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      e = parse_number("exponent");
    }
    exps[static_cast<std::size_t>(var - 1)] = detail::checked_exponent(
        static_cast<long long>(exps[static_cast<std::size_t>(var - 1)]) + e, "parse_monomial");
  }
  return Monomial(std::move(exps));
}

} // namespace satmon
