#include "torelli/homology.hpp"

#include <stdexcept>

#include "torelli/epsilon.hpp"

namespace torelli {

namespace {

void check_genus(int genus) {
  if (genus < 1) throw std::invalid_argument("genus must be >= 1");
}

}  // namespace

BetaVector::BetaVector(int genus) : genus_(genus) {
  check_genus(genus);
  coords_.resize(2 * genus + 1, 0);
}

BetaVector::BetaVector(int genus, std::vector<Int> coords)
    : genus_(genus), coords_(std::move(coords)) {
  check_genus(genus);
  if (coords_.size() != static_cast<std::size_t>(2 * genus + 1))
    throw std::invalid_argument("BetaVector: expected 2g+1 coordinates");
}

BetaVector BetaVector::basis(int genus, int k) {
  BetaVector v(genus);
  if (k < 1 || k > v.size())
    throw std::invalid_argument("BetaVector: basis index out of range");
  v.coords_[k - 1] = 1;
  return v;
}

const Int& BetaVector::coord(int k) const {
  if (k < 1 || k > size())
    throw std::invalid_argument("BetaVector: coordinate index out of range");
  return coords_[k - 1];
}

std::string BetaVector::str() const {
  std::string out;
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    const Int& c = coords_[i];
    if (c == 0) continue;
    Int mag = c < 0 ? Int(-c) : c;
    if (out.empty()) {
      if (c < 0) out += '-';
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (mag != 1) out += mag.str();
    out += 'b' + std::to_string(i + 1);
  }
  return out.empty() ? "0" : out;
}

std::string BetaVector::json() const {
  std::string out = "[";
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i > 0) out += ',';
    out += coords_[i].str();
  }
  out += ']';
  return out;
}

IntMatrix letter_action(int genus, int index) {
  check_genus(genus);
  const int n = 2 * genus + 1;
  if (index < 1 || index > n)
    throw std::invalid_argument("letter_action: index out of range");
  IntMatrix m = IntMatrix::identity(n);
  for (int c = 0; c < n; ++c) m.at(index - 1, c) -= 2;
  return m;
}

IntMatrix action_matrix(const Word& w) {
  const int genus = genus_for_rank(w.rank());
  IntMatrix acc = IntMatrix::identity(w.rank());
  // Leftmost letter first: prepend each letter's matrix.
  for (Letter l : w.letters())
    acc = letter_action(genus, letter_index(l)) * acc;
  return acc;
}

BetaVector apply_action(const IntMatrix& m, const BetaVector& v) {
  if (m.dim() != v.size())
    throw std::invalid_argument("apply_action: dimension mismatch");
  std::vector<Int> out(static_cast<std::size_t>(m.dim()), 0);
  for (int r = 0; r < m.dim(); ++r)
    for (int c = 0; c < m.dim(); ++c) out[r] += m.at(r, c) * v.coord(c + 1);
  return BetaVector(v.genus(), std::move(out));
}

bool in_torelli_kernel(const Word& w) {
  genus_for_rank(w.rank());
  if (!w.is_even()) return false;
  // Track the image of b_1 only; applying M_i to a column vector v
  // subtracts 2*(sum of v) from coordinate i.
  std::vector<Int> v(static_cast<std::size_t>(w.rank()), 0);
  v[0] = 1;
  Int sum = 1;
  for (Letter l : w.letters()) {
    Int& target = v[letter_index(l) - 1];
    Int delta = 2 * sum;
    target -= delta;
    sum -= delta;
  }
  if (v[0] != 1) return false;
  for (std::size_t i = 1; i < v.size(); ++i)
    if (v[i] != 0) return false;
  return true;
}

}  // namespace torelli
