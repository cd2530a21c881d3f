#include "torelli/laurent.hpp"

namespace torelli {

namespace {

void check_dim(int dim) {
  if (dim < 1) throw std::invalid_argument("matrix dimension must be >= 1");
}

void check_same_dim(int a, int b) {
  if (a != b) throw std::invalid_argument("matrix dimension mismatch");
}

void check_pm1(int t0) {
  if (t0 != 1 && t0 != -1)
    throw std::domain_error(
        "evaluation point must be +1 or -1 (negative exponents are not "
        "integral elsewhere)");
}

std::string int_str(const Int& v) { return v.str(); }

}  // namespace

LaurentPoly LaurentPoly::constant(Int c) { return monomial(std::move(c), 0); }

LaurentPoly LaurentPoly::monomial(Int coeff, int exp) {
  LaurentPoly p;
  if (coeff != 0) p.terms_.emplace(exp, std::move(coeff));
  return p;
}

Int LaurentPoly::coeff(int exp) const {
  auto it = terms_.find(exp);
  return it == terms_.end() ? Int(0) : it->second;
}

void LaurentPoly::add_term(int exp, const Int& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(exp, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly operator+(const LaurentPoly& p, const LaurentPoly& q) {
  LaurentPoly r = p;
  for (const auto& [e, c] : q.terms_) r.add_term(e, c);
  return r;
}

LaurentPoly operator-(const LaurentPoly& p, const LaurentPoly& q) {
  return p + (-q);
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

LaurentPoly operator*(const LaurentPoly& p, const LaurentPoly& q) {
  LaurentPoly r;
  for (const auto& [e1, c1] : p.terms_)
    for (const auto& [e2, c2] : q.terms_) r.add_term(e1 + e2, c1 * c2);
  return r;
}

Int LaurentPoly::evaluate(int t0) const {
  check_pm1(t0);
  Int v = 0;
  for (const auto& [e, c] : terms_) {
    // (+-1)^e depends only on the parity of e.
    bool negate = (t0 == -1) && (e % 2 != 0);
    v += negate ? -c : c;
  }
  return v;
}

std::string LaurentPoly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    bool neg = c < 0;
    Int mag = neg ? Int(-c) : c;
    if (out.empty()) {
      if (neg) out += '-';
    } else {
      out += neg ? " - " : " + ";
    }
    if (mag != 1 || e == 0) out += int_str(mag);
    if (e != 0) {
      out += 't';
      if (e != 1) out += '^' + std::to_string(e);
    }
  }
  return out;
}

std::string LaurentPoly::json_terms() const {
  std::string out = "[";
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) out += ',';
    first = false;
    out += '[' + std::to_string(e) + ',' + int_str(c) + ']';
  }
  out += ']';
  return out;
}

LaurentMatrix::LaurentMatrix(int dim) : dim_(dim) {
  check_dim(dim);
  entries_.resize(static_cast<std::size_t>(dim) * dim);
}

LaurentMatrix LaurentMatrix::identity(int dim) {
  LaurentMatrix m(dim);
  for (int i = 0; i < dim; ++i) m.at(i, i) = LaurentPoly::constant(1);
  return m;
}

const LaurentPoly& LaurentMatrix::at(int r, int c) const {
  return entries_[static_cast<std::size_t>(r) * dim_ + c];
}

LaurentPoly& LaurentMatrix::at(int r, int c) {
  return entries_[static_cast<std::size_t>(r) * dim_ + c];
}

LaurentMatrix operator*(const LaurentMatrix& a, const LaurentMatrix& b) {
  check_same_dim(a.dim_, b.dim_);
  LaurentMatrix r(a.dim_);
  for (int i = 0; i < a.dim_; ++i)
    for (int k = 0; k < a.dim_; ++k) {
      const LaurentPoly& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      for (int j = 0; j < a.dim_; ++j) {
        if (b.at(k, j).is_zero()) continue;
        r.at(i, j) = r.at(i, j) + aik * b.at(k, j);
      }
    }
  return r;
}

std::string LaurentMatrix::str() const {
  std::string out;
  for (int i = 0; i < dim_; ++i) {
    out += '[';
    for (int j = 0; j < dim_; ++j) {
      if (j > 0) out += ", ";
      out += at(i, j).str();
    }
    out += ']';
    if (i + 1 < dim_) out += '\n';
  }
  return out;
}

std::string LaurentMatrix::json() const {
  std::string out = "{\"dim\":" + std::to_string(dim_) + ",\"entries\":[";
  for (int i = 0; i < dim_; ++i) {
    if (i > 0) out += ',';
    out += '[';
    for (int j = 0; j < dim_; ++j) {
      if (j > 0) out += ',';
      out += at(i, j).json_terms();
    }
    out += ']';
  }
  out += "]}";
  return out;
}

IntMatrix::IntMatrix(int dim) : dim_(dim) {
  check_dim(dim);
  entries_.resize(static_cast<std::size_t>(dim) * dim);
}

IntMatrix IntMatrix::identity(int dim) {
  IntMatrix m(dim);
  for (int i = 0; i < dim; ++i) m.at(i, i) = 1;
  return m;
}

const Int& IntMatrix::at(int r, int c) const {
  return entries_[static_cast<std::size_t>(r) * dim_ + c];
}

Int& IntMatrix::at(int r, int c) {
  return entries_[static_cast<std::size_t>(r) * dim_ + c];
}

bool IntMatrix::is_identity() const { return *this == identity(dim_); }

IntMatrix IntMatrix::operator-() const {
  IntMatrix r(dim_);
  for (std::size_t i = 0; i < entries_.size(); ++i) r.entries_[i] = -entries_[i];
  return r;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  check_same_dim(a.dim_, b.dim_);
  IntMatrix r(a.dim_);
  for (int i = 0; i < a.dim_; ++i)
    for (int k = 0; k < a.dim_; ++k) {
      const Int& aik = a.at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < a.dim_; ++j) r.at(i, j) += aik * b.at(k, j);
    }
  return r;
}

Int IntMatrix::determinant() const {
  // Bareiss: exact integer elimination, divisions stay exact.
  IntMatrix m = *this;
  Int prev = 1;
  int sign = 1;
  for (int k = 0; k + 1 < dim_; ++k) {
    if (m.at(k, k) == 0) {
      int pivot = -1;
      for (int r = k + 1; r < dim_; ++r)
        if (m.at(r, k) != 0) {
          pivot = r;
          break;
        }
      if (pivot < 0) return 0;
      for (int c = 0; c < dim_; ++c) std::swap(m.at(k, c), m.at(pivot, c));
      sign = -sign;
    }
    for (int i = k + 1; i < dim_; ++i)
      for (int j = k + 1; j < dim_; ++j) {
        Int num = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
        m.at(i, j) = num / prev;
      }
    prev = m.at(k, k);
  }
  return sign > 0 ? m.at(dim_ - 1, dim_ - 1) : Int(-m.at(dim_ - 1, dim_ - 1));
}

std::string IntMatrix::str() const {
  std::string out;
  for (int i = 0; i < dim_; ++i) {
    out += '[';
    for (int j = 0; j < dim_; ++j) {
      if (j > 0) out += ", ";
      out += int_str(at(i, j));
    }
    out += ']';
    if (i + 1 < dim_) out += '\n';
  }
  return out;
}

std::string IntMatrix::json() const {
  std::string out = "[";
  for (int i = 0; i < dim_; ++i) {
    if (i > 0) out += ',';
    out += '[';
    for (int j = 0; j < dim_; ++j) {
      if (j > 0) out += ',';
      out += int_str(at(i, j));
    }
    out += ']';
  }
  out += ']';
  return out;
}

IntMatrix evaluate_at(const LaurentMatrix& m, int t0) {
  check_pm1(t0);
  IntMatrix r(m.dim());
  for (int i = 0; i < m.dim(); ++i)
    for (int j = 0; j < m.dim(); ++j) r.at(i, j) = m.at(i, j).evaluate(t0);
  return r;
}

}  // namespace torelli
