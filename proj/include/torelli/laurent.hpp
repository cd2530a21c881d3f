#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace torelli {

// Exact arbitrary-precision integer. Burau entries of long braid words
// overflow any fixed width, so the whole coefficient layer uses this.
using Int = boost::multiprecision::cpp_int;

// Integer Laurent polynomial: finitely supported map exponent -> nonzero
// coefficient. The zero polynomial has empty support.
class LaurentPoly {
public:
  LaurentPoly() = default;  // zero
  static LaurentPoly constant(Int c);
  static LaurentPoly monomial(Int coeff, int exp);
  static LaurentPoly t() { return monomial(1, 1); }

  bool is_zero() const noexcept { return terms_.empty(); }
  const std::map<int, Int>& terms() const noexcept { return terms_; }
  Int coeff(int exp) const;

  friend LaurentPoly operator+(const LaurentPoly&, const LaurentPoly&);
  friend LaurentPoly operator-(const LaurentPoly&, const LaurentPoly&);
  friend LaurentPoly operator*(const LaurentPoly&, const LaurentPoly&);
  LaurentPoly operator-() const;
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  // Exact substitution; only t0 in {+1,-1} keeps negative exponents in the
  // integers, anything else is rejected.
  Int evaluate(int t0) const;

  // Human form, terms by descending exponent: "-t^2 + 3t - 1"; zero is "0".
  std::string str() const;
  // JSON form: exponent-sorted [exp, coeff] pairs, e.g. [[0,-1],[1,3]].
  std::string json_terms() const;

private:
  std::map<int, Int> terms_;
  void add_term(int exp, const Int& c);
};

class IntMatrix;

// Square matrix over LaurentPoly.
class LaurentMatrix {
public:
  explicit LaurentMatrix(int dim);  // zero matrix
  static LaurentMatrix identity(int dim);

  int dim() const noexcept { return dim_; }
  const LaurentPoly& at(int r, int c) const;  // 0-based
  LaurentPoly& at(int r, int c);

  friend LaurentMatrix operator*(const LaurentMatrix&, const LaurentMatrix&);
  friend bool operator==(const LaurentMatrix&, const LaurentMatrix&) = default;

  std::string str() const;
  // {"dim":d,"entries":[[...],...]} with LaurentPoly::json_terms entries.
  std::string json() const;

private:
  int dim_;
  std::vector<LaurentPoly> entries_;  // row-major
};

// Square integer matrix, the target of specialization at t = +-1.
class IntMatrix {
public:
  explicit IntMatrix(int dim);  // zero matrix
  static IntMatrix identity(int dim);

  int dim() const noexcept { return dim_; }
  const Int& at(int r, int c) const;  // 0-based
  Int& at(int r, int c);

  bool is_identity() const;
  IntMatrix operator-() const;

  friend IntMatrix operator*(const IntMatrix&, const IntMatrix&);
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

  // Exact determinant (Bareiss fraction-free elimination). Test helper.
  Int determinant() const;

  std::string str() const;
  std::string json() const;  // nested integer arrays

private:
  int dim_;
  std::vector<Int> entries_;
};

// Entrywise substitution t -> t0; a ring homomorphism. t0 must be +-1.
IntMatrix evaluate_at(const LaurentMatrix& m, int t0);

}  // namespace torelli
