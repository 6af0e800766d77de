#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>

namespace ginprod {

// Everything in the symbolic pipeline is exact: counts and coefficients
// overflow 64 bits quickly (FC_6(10) already does), so the whole core runs
// on arbitrary-precision integers and rationals.
using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// Thrown when a request exceeds a configured enumeration cap.
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Laurent polynomial in the formal matrix size N with exact rational
/// coefficients.  This is the value type for finite-N expectation values,
/// e.g.  <Tr W^3> = 5*N + 1/N.
class NLaurent {
 public:
  NLaurent() = default;
  /*implicit*/ NLaurent(const BigRational& c) {
    if (c != 0) coeffs_[0] = c;
  }
  /*implicit*/ NLaurent(long c) : NLaurent(BigRational(c)) {}

  static NLaurent monomial(const BigRational& c, int exponent) {
    NLaurent p;
    if (c != 0) coeffs_of(p)[exponent] = c;
    return p;
  }

  void add_term(int exponent, const BigRational& c) {
    if (c == 0) return;
    auto it = coeffs_.find(exponent);
    if (it == coeffs_.end()) {
      coeffs_.emplace(exponent, c);
    } else {
      it->second += c;
      if (it->second == 0) coeffs_.erase(it);
    }
  }

  BigRational coefficient(int exponent) const {
    auto it = coeffs_.find(exponent);
    return it == coeffs_.end() ? BigRational(0) : it->second;
  }

  bool is_zero() const { return coeffs_.empty(); }
  int min_exponent() const { return coeffs_.empty() ? 0 : coeffs_.begin()->first; }
  int max_exponent() const { return coeffs_.empty() ? 0 : coeffs_.rbegin()->first; }

  /// Value as N -> infinity.  Requires max_exponent() <= 0 (a normalized
  /// moment); throws otherwise.
  BigRational limit_large_n() const {
    if (!coeffs_.empty() && max_exponent() > 0)
      throw std::domain_error("NLaurent::limit_large_n: diverges as N -> infinity");
    return coefficient(0);
  }

  /// Exact evaluation at a concrete integer size.
  BigRational evaluate(long n) const {
    if (n == 0) throw std::domain_error("NLaurent::evaluate: N = 0");
    BigRational acc = 0;
    for (const auto& [e, c] : coeffs_) {
      BigInt p = 1;
      for (int i = 0; i < (e < 0 ? -e : e); ++i) p *= n;
      acc += (e >= 0) ? c * BigRational(p) : c / BigRational(p);
    }
    return acc;
  }

  NLaurent& operator+=(const NLaurent& o) {
    for (const auto& [e, c] : o.coeffs_) add_term(e, c);
    return *this;
  }
  friend NLaurent operator+(NLaurent a, const NLaurent& b) { return a += b; }

  NLaurent& operator-=(const NLaurent& o) {
    for (const auto& [e, c] : o.coeffs_) add_term(e, -c);
    return *this;
  }
  friend NLaurent operator-(NLaurent a, const NLaurent& b) { return a -= b; }

  friend NLaurent operator*(const NLaurent& a, const NLaurent& b) {
    NLaurent r;
    for (const auto& [ea, ca] : a.coeffs_)
      for (const auto& [eb, cb] : b.coeffs_) r.add_term(ea + eb, ca * cb);
    return r;
  }
  NLaurent& operator*=(const NLaurent& o) { return *this = *this * o; }

  /// Multiply by c * N^exponent.
  NLaurent scaled(const BigRational& c, int exponent) const {
    NLaurent r;
    if (c == 0) return r;
    for (const auto& [e, k] : coeffs_) r.coeffs_.emplace(e + exponent, k * c);
    return r;
  }

  friend bool operator==(const NLaurent&, const NLaurent&) = default;

  const std::map<int, BigRational>& coefficients() const { return coeffs_; }

  /// Human-readable form, highest power first: "2*N^2 + 4", "5*N + 1/N",
  /// "12 + 21/N^2 + 3/N^4".
  std::string str() const;

 private:
  static std::map<int, BigRational>& coeffs_of(NLaurent& p) { return p.coeffs_; }
  std::map<int, BigRational> coeffs_;  // exponent -> nonzero coefficient
};

std::string to_string(const BigRational& q);

}  // namespace ginprod
