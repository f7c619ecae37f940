/**
 * @file laurent.hpp
 * @brief Sparse-by-interface, dense-by-storage Laurent polynomials in v.
 */
#pragma once

#include "slopelab/rational.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace slopelab {

/// Degree of a Laurent polynomial; the zero polynomial has degree -infinity.
class Degree {
 public:
  Degree() = default;  // -infinity
  explicit Degree(int e) : exp_(e) {}
  static Degree neg_inf() { return Degree(); }

  bool is_neg_inf() const { return !exp_.has_value(); }
  int value() const {
    if (!exp_) throw std::logic_error("degree of the zero polynomial is -infinity");
    return *exp_;
  }

  friend bool operator==(const Degree& a, const Degree& b) { return a.exp_ == b.exp_; }
  friend bool operator<(const Degree& a, const Degree& b) {
    if (!a.exp_) return b.exp_.has_value();
    return b.exp_ && *a.exp_ < *b.exp_;
  }
  friend Degree operator+(const Degree& a, const Degree& b) {
    if (!a.exp_ || !b.exp_) return Degree();
    return Degree(*a.exp_ + *b.exp_);
  }
  std::string str() const { return exp_ ? std::to_string(*exp_) : "-inf"; }

 private:
  std::optional<int> exp_;
};

class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(const Integer& c) {  // NOLINT: constants convert implicitly
    if (c != 0) { lo_ = 0; c_.push_back(c); }
  }
  LaurentPoly(long c) : LaurentPoly(Integer(c)) {}  // NOLINT

  static LaurentPoly monomial(int e, const Integer& c = 1) {
    LaurentPoly p;
    if (c != 0) { p.lo_ = e; p.c_.push_back(c); }
    return p;
  }
  static LaurentPoly from_terms(const std::map<int, Integer>& terms) {
    LaurentPoly p;
    for (const auto& [e, c] : terms) p += monomial(e, c);
    return p;
  }

  bool is_zero() const { return c_.empty(); }
  Degree degree() const { return c_.empty() ? Degree() : Degree(lo_ + int(c_.size()) - 1); }
  Degree low_degree() const { return c_.empty() ? Degree() : Degree(lo_); }

  Integer coeff(int e) const {
    if (c_.empty() || e < lo_ || e >= lo_ + int(c_.size())) return 0;
    return c_[e - lo_];
  }

  /// Nonzero terms, ascending exponent.
  std::map<int, Integer> terms() const {
    std::map<int, Integer> out;
    for (std::size_t i = 0; i < c_.size(); ++i)
      if (c_[i] != 0) out.emplace(lo_ + int(i), c_[i]);
    return out;
  }

  LaurentPoly& operator+=(const LaurentPoly& o) { return add_scaled(o, 1); }
  LaurentPoly& operator-=(const LaurentPoly& o) { return add_scaled(o, -1); }

  LaurentPoly& operator*=(const Integer& k) {
    if (k == 0) { c_.clear(); lo_ = 0; return *this; }
    for (auto& c : c_) c *= k;
    return *this;
  }

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator-(LaurentPoly a) { return a *= Integer(-1); }
  friend LaurentPoly operator*(LaurentPoly a, const Integer& k) { return a *= k; }

  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly out;
    if (a.c_.empty() || b.c_.empty()) return out;
    out.lo_ = a.lo_ + b.lo_;
    out.c_.assign(a.c_.size() + b.c_.size() - 1, Integer(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j)
        mpz_addmul(out.c_[i + j].get_mpz_t(), a.c_[i].get_mpz_t(), b.c_[j].get_mpz_t());
    }
    out.trim();
    return out;
  }
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

  /// this += a * b, accumulated in place.
  LaurentPoly& add_product(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.c_.empty() || b.c_.empty()) return *this;
    int lo = a.lo_ + b.lo_;
    int hi = lo + int(a.c_.size() + b.c_.size()) - 2;
    reserve_range(lo, hi);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      std::size_t base = std::size_t(lo - lo_) + i;
      for (std::size_t j = 0; j < b.c_.size(); ++j)
        mpz_addmul(c_[base + j].get_mpz_t(), a.c_[i].get_mpz_t(), b.c_[j].get_mpz_t());
    }
    trim();
    return *this;
  }

  /// Multiply by v^k.
  LaurentPoly shifted(int k) const {
    LaurentPoly p = *this;
    if (!p.c_.empty()) p.lo_ += k;
    return p;
  }

  /// The substitution v -> v^{-1}.
  LaurentPoly mirrored() const {
    LaurentPoly p;
    if (c_.empty()) return p;
    p.lo_ = -(lo_ + int(c_.size()) - 1);
    p.c_.assign(c_.rbegin(), c_.rend());
    return p;
  }

  Integer eval_at_one() const {
    Integer s = 0;
    for (const auto& c : c_) s += c;
    return s;
  }

  /// Exact quotient this / d, or nullopt when d does not divide this.
  std::optional<LaurentPoly> divided_by(const LaurentPoly& d) const {
    if (d.is_zero()) throw std::domain_error("division by the zero polynomial");
    if (is_zero()) return LaurentPoly();
    LaurentPoly rem = *this;
    std::map<int, Integer> quot;
    const int dlo = d.lo_, dhi = d.lo_ + int(d.c_.size()) - 1;
    const Integer& lead = d.c_.back();
    const int qlo = lo_ - dlo;
    while (!rem.is_zero()) {
      int rhi = rem.degree().value();
      int e = rhi - dhi;
      if (e < qlo) return std::nullopt;
      const Integer& rc = rem.c_.back();
      if (!mpz_divisible_p(rc.get_mpz_t(), lead.get_mpz_t())) return std::nullopt;
      Integer qc = rc / lead;
      quot[e] = qc;
      rem -= d.shifted(e) * qc;
    }
    return from_terms(quot);
  }

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.lo_ == b.lo_ && a.c_ == b.c_;
  }
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

  /// Human-readable form, e.g. "v^18 - v^10 - v^6 - v^2".
  std::string str() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = int(c_.size()) - 1; i >= 0; --i) {
      const Integer& c = c_[i];
      if (c == 0) continue;
      int e = lo_ + i;
      Integer mag = abs(c);
      if (first) {
        if (c < 0) os << "-";
      } else {
        os << (c < 0 ? " - " : " + ");
      }
      first = false;
      if (e == 0) {
        os << mag.get_str();
        continue;
      }
      if (mag != 1) os << mag.get_str() << "*";
      os << "v";
      if (e != 1) os << "^" << e;
    }
    return os.str();
  }

 private:
  void trim() {
    std::size_t b = 0;
    while (b < c_.size() && c_[b] == 0) ++b;
    if (b == c_.size()) { c_.clear(); lo_ = 0; return; }
    std::size_t e = c_.size();
    while (c_[e - 1] == 0) --e;
    if (b > 0 || e < c_.size()) {
      c_ = std::vector<Integer>(c_.begin() + b, c_.begin() + e);
      lo_ += int(b);
    }
  }

  void reserve_range(int lo, int hi) {
    if (c_.empty()) {
      lo_ = lo;
      c_.assign(std::size_t(hi - lo + 1), Integer(0));
      return;
    }
    int cur_hi = lo_ + int(c_.size()) - 1;
    if (lo < lo_) {
      c_.insert(c_.begin(), std::size_t(lo_ - lo), Integer(0));
      lo_ = lo;
    }
    if (hi > cur_hi) c_.resize(c_.size() + std::size_t(hi - cur_hi), Integer(0));
  }

  LaurentPoly& add_scaled(const LaurentPoly& o, int sign) {
    if (o.c_.empty()) return *this;
    reserve_range(o.lo_, o.lo_ + int(o.c_.size()) - 1);
    std::size_t off = std::size_t(o.lo_ - lo_);
    for (std::size_t i = 0; i < o.c_.size(); ++i) {
      if (sign > 0) c_[off + i] += o.c_[i];
      else c_[off + i] -= o.c_[i];
    }
    trim();
    return *this;
  }

  int lo_ = 0;
  std::vector<Integer> c_;  // c_[i] is the coefficient of v^(lo_ + i)
};

inline LaurentPoly v_pow(int e) { return LaurentPoly::monomial(e); }

}  // namespace slopelab
