#include "torelli/burau.hpp"

#include <stdexcept>

namespace torelli {

LaurentMatrix burau_generator(int strands, int index, int sign) {
  if (strands < 2)
    throw std::invalid_argument("burau_generator: strand count must be >= 2");
  if (index < 1 || index > strands - 1)
    throw std::invalid_argument("burau_generator: generator index out of range");
  if (sign != 1 && sign != -1)
    throw std::invalid_argument("burau_generator: sign must be +-1");

  const int d = strands - 1;
  LaurentMatrix m = LaurentMatrix::identity(d);
  const int r = index - 1;  // 0-based row
  if (sign > 0) {
    m.at(r, r) = LaurentPoly::monomial(-1, 1);                  // -t
    if (index > 1) m.at(r, r - 1) = LaurentPoly::t();           // t
    if (index < d) m.at(r, r + 1) = LaurentPoly::constant(1);   // 1
  } else {
    m.at(r, r) = LaurentPoly::monomial(-1, -1);                 // -t^-1
    if (index > 1) m.at(r, r - 1) = LaurentPoly::constant(1);   // 1
    if (index < d) m.at(r, r + 1) = LaurentPoly::monomial(1, -1);  // t^-1
  }
  return m;
}

LaurentMatrix burau(const BraidWord& w) {
  LaurentMatrix m = LaurentMatrix::identity(w.strands() - 1);
  for (Letter l : w.letters())
    m = m * burau_generator(w.strands(), letter_index(l), letter_sign(l));
  return m;
}

IntMatrix burau_at(const BraidWord& w, int t0) {
  if (t0 != 1 && t0 != -1)
    throw std::domain_error("burau_at: specialization point must be +1 or -1");
  // Specializing generator-by-generator is equivalent (evaluation is a ring
  // homomorphism) and keeps entries small.
  IntMatrix m = IntMatrix::identity(w.strands() - 1);
  for (Letter l : w.letters())
    m = m * evaluate_at(
                burau_generator(w.strands(), letter_index(l), letter_sign(l)),
                t0);
  return m;
}

bool in_burau_kernel(const BraidWord& w) {
  return is_pure(w) && burau_at(w, -1).is_identity();
}

}  // namespace torelli
