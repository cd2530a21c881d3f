#include "torelli/epsilon.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <stdexcept>

#include "json_util.hpp"

/*
  The factorization routine rewrites a kernel word as an ordered product of
  conjugated normal generators (squares z_i^2 and commutators
  [z_i z_1, z_j z_1]).  It works in the free basis of the even subgroup

      g_i = z_i z_1   (i >= 1),      h_i = z_1 z_i   (i >= 2),

  with h_1 identified with g_1.  Letter pairs translate as

      z_a z_b       = (g_a g_1^-1) h_b
      z_a z_b^-1    = g_a g_b^-1
      z_a^-1 z_b    = h_a^-1 h_b
      z_a^-1 z_b^-1 = h_a^-1 g_1 g_b^-1.

  The pipeline then peels kernel elements off to the left, maintaining the
  invariant  w = (entries so far) * (remaining symbol word):

    1. every h_i is removed via h_i = g_i^-1 (g_i h_i), where
       g_i h_i = z_i z_1^2 z_i  =  (z_i z_1^2 z_i^-1) z_i^2
       is a conjugated square times a square;
    2. every g_1 is removed (g_1 = z_1^2 is itself a square);
    3. the leftover word in g_2..g_n is collected to the identity by
       bubble-sorting toward increasing index, leftmost inversion first;
       each adjacent swap x y -> y x emits the commutator [x, y], which is
       a conjugate of [g_i, g_j]^{+-1}.

  Collection terminates on the empty word: the emitted elements all lie in
  ker epsilon, so the leftover word keeps epsilon-value zero, and the
  epsilon-values of g_2..g_n are linearly independent, forcing every
  exponent sum to vanish.
*/

namespace torelli {

int genus_for_rank(int rank) {
  if (rank < 3 || rank % 2 == 0)
    throw std::invalid_argument(
        "rank must be of the form 2g+1 with g >= 1, got " +
        std::to_string(rank));
  return (rank - 1) / 2;
}

namespace {

void check_genus(int genus) {
  if (genus < 1) throw std::invalid_argument("genus must be >= 1");
}

void check_coord_index(const BalancedVector& v, int i) {
  if (i < 1 || i > v.size())
    throw std::invalid_argument("coordinate index out of range");
}

}  // namespace

BalancedVector::BalancedVector(int genus) : genus_(genus) {
  check_genus(genus);
  coords_.resize(2 * genus + 1, 0);
}

BalancedVector::BalancedVector(int genus, std::vector<long long> coords)
    : genus_(genus), coords_(std::move(coords)) {
  check_genus(genus);
  if (coords_.size() != static_cast<std::size_t>(2 * genus + 1))
    throw std::invalid_argument("BalancedVector: expected 2g+1 coordinates");
  long long sum = 0;
  for (long long c : coords_) sum += c;
  if (sum != 0)
    throw std::invalid_argument("BalancedVector: coordinate sum must be zero");
}

BalancedVector BalancedVector::basis_difference(int genus, int i, int j) {
  BalancedVector v(genus);
  check_coord_index(v, i);
  check_coord_index(v, j);
  v.coords_[i - 1] += 1;
  v.coords_[j - 1] -= 1;
  return v;
}

long long BalancedVector::coord(int i) const {
  check_coord_index(*this, i);
  return coords_[i - 1];
}

bool BalancedVector::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(),
                     [](long long c) { return c == 0; });
}

long long BalancedVector::height() const {
  long long h = 0;
  for (long long c : coords_) h += c < 0 ? -c : c;
  return h;
}

BalancedVector operator+(const BalancedVector& a, const BalancedVector& b) {
  if (a.genus_ != b.genus_)
    throw std::invalid_argument("BalancedVector: genus mismatch");
  BalancedVector r(a.genus_);
  for (std::size_t i = 0; i < r.coords_.size(); ++i)
    r.coords_[i] = a.coords_[i] + b.coords_[i];
  return r;
}

BalancedVector operator-(const BalancedVector& a, const BalancedVector& b) {
  return a + (-b);
}

BalancedVector BalancedVector::operator-() const {
  BalancedVector r(genus_);
  for (std::size_t i = 0; i < coords_.size(); ++i) r.coords_[i] = -coords_[i];
  return r;
}

std::string BalancedVector::str() const {
  std::string out;
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    long long c = coords_[i];
    if (c == 0) continue;
    long long mag = c < 0 ? -c : c;
    if (out.empty()) {
      if (c < 0) out += '-';
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (mag != 1) out += std::to_string(mag);
    out += 'e' + std::to_string(i + 1);
  }
  return out.empty() ? "0" : out;
}

std::string BalancedVector::json() const {
  std::string out = "[";
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(coords_[i]);
  }
  out += ']';
  return out;
}

namespace {

void enumerate_balanced(int pos, int size, long long budget, long long sum,
                        std::vector<long long>& buf,
                        std::vector<BalancedVector>& out, int genus) {
  if (pos == size - 1) {
    long long last = -sum;
    long long mag = last < 0 ? -last : last;
    if (mag <= budget) {
      buf[pos] = last;
      out.emplace_back(genus, buf);
    }
    return;
  }
  for (long long c = -budget; c <= budget; ++c) {
    long long mag = c < 0 ? -c : c;
    long long next_sum = sum + c;
    long long next_budget = budget - mag;
    // remaining coordinates must absorb -next_sum within the budget
    if ((next_sum < 0 ? -next_sum : next_sum) > next_budget) continue;
    buf[pos] = c;
    enumerate_balanced(pos + 1, size, next_budget, next_sum, buf, out, genus);
  }
}

}  // namespace

std::vector<BalancedVector> balanced_vectors_up_to_height(
    int genus, long long max_height) {
  check_genus(genus);
  if (max_height < 0)
    throw std::invalid_argument("balanced_vectors_up_to_height: negative bound");
  int size = 2 * genus + 1;
  std::vector<long long> buf(size, 0);
  std::vector<BalancedVector> out;
  enumerate_balanced(0, size, max_height, 0, buf, out, genus);
  return out;
}

BalancedVector epsilon(const Word& w) {
  int g = genus_for_rank(w.rank());
  if (!w.is_even())
    throw std::domain_error("epsilon: word must have even length");
  std::vector<long long> coords(w.rank(), 0);
  int positional_sign = +1;
  for (Letter l : w.letters()) {
    coords[letter_index(l) - 1] += positional_sign;  // letter sign is ignored
    positional_sign = -positional_sign;
  }
  return BalancedVector(g, std::move(coords));
}

bool in_ker_epsilon(const Word& w) {
  genus_for_rank(w.rank());
  if (!w.is_even()) return false;
  return epsilon(w).is_zero();
}

Word section(const BalancedVector& v) {
  int rank = v.size();
  std::vector<Letter> ls;
  for (int i = 2; i <= rank; ++i) {
    long long c = v.coord(i);
    for (long long k = 0; k < (c < 0 ? -c : c); ++k) {
      if (c > 0) {
        ls.push_back(i);
        ls.push_back(1);
      } else {
        ls.push_back(-1);
        ls.push_back(-i);
      }
    }
  }
  return Word(rank, ls);
}

SplitResult split(const Word& w) {
  BalancedVector v = epsilon(w);  // rejects odd words
  Word k = w * section(v).inverse();
  return SplitResult{std::move(k), std::move(v)};
}

std::vector<std::pair<int, int>> balanced_decompose(const BalancedVector& v) {
  std::vector<long long> c = v.coords();
  std::vector<std::pair<int, int>> pairs;
  for (;;) {
    int neg = -1, pos = -1;
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (neg < 0 && c[i] < 0) neg = static_cast<int>(i);
      if (pos < 0 && c[i] > 0) pos = static_cast<int>(i);
    }
    if (neg < 0 && pos < 0) break;
    assert(neg >= 0 && pos >= 0);  // sum zero: signs come in pairs
    pairs.emplace_back(pos + 1, neg + 1);
    --c[pos];
    ++c[neg];
  }
  return pairs;
}

std::vector<Word> schreier_generators(int genus, int radius) {
  check_genus(genus);
  if (radius < 0)
    throw std::invalid_argument("schreier_generators: radius must be >= 0");
  const int rank = 2 * genus + 1;

  // Free basis of the even subgroup, positives first, then inverses.
  std::vector<Word> basis;
  for (int i = 2; i <= rank; ++i) basis.push_back(Word(rank, {i, -1}));
  for (int i = 1; i <= rank; ++i) basis.push_back(Word(rank, {1, i}));
  const std::size_t positives = basis.size();
  for (std::size_t k = 0; k < positives; ++k)
    basis.push_back(basis[k].inverse());

  std::vector<Word> out;
  std::set<std::vector<Letter>> seen;
  for (const BalancedVector& v :
       balanced_vectors_up_to_height(genus, 2LL * radius)) {
    Word sv = section(v);
    for (const Word& x : basis) {
      Word svx = sv * x;
      Word gen = svx * section(epsilon(svx)).inverse();
      if (gen.is_identity()) continue;
      if (seen.insert(gen.letters()).second) out.push_back(gen);
    }
  }
  return out;
}

NormalGenerator NormalGenerator::square(int i) {
  if (i < 1) throw std::invalid_argument("NormalGenerator: index must be >= 1");
  return NormalGenerator(Kind::square, i, 0);
}

NormalGenerator NormalGenerator::comm(int i, int j) {
  if (i < 2 || j < 2 || i == j)
    throw std::invalid_argument(
        "NormalGenerator: commutator needs distinct indices >= 2");
  return NormalGenerator(Kind::comm, i, j);
}

Word NormalGenerator::expand(int rank) const {
  if (kind_ == Kind::square) {
    if (i_ > rank) throw std::invalid_argument("NormalGenerator: index > rank");
    return Word(rank, {i_, i_});
  }
  if (i_ > rank || j_ > rank)
    throw std::invalid_argument("NormalGenerator: index > rank");
  return commutator(Word(rank, {i_, 1}), Word(rank, {j_, 1}));
}

std::string NormalGenerator::str() const {
  if (kind_ == Kind::square) return "sq:" + std::to_string(i_);
  return "comm:" + std::to_string(i_) + ':' + std::to_string(j_);
}

Word expand(const Factorization& f, int rank) {
  Word acc(rank);
  for (const FactorEntry& entry : f) {
    if (entry.conjugator.rank() != rank)
      throw std::invalid_argument("Factorization: conjugator rank mismatch");
    if (entry.exponent != 1 && entry.exponent != -1)
      throw std::invalid_argument("Factorization: exponent must be +-1");
    Word g = entry.generator.expand(rank);
    if (entry.exponent < 0) g = g.inverse();
    acc = acc * conjugate(g, entry.conjugator);
  }
  return acc;
}

namespace {

// Symbol of the even-subgroup basis: g_i (is_h = false, index >= 1) or
// h_i (is_h = true, index >= 2), with a +-1 exponent.
struct Symbol {
  bool is_h;
  int index;
  int sign;
};

Symbol gsym(int i, int s) { return Symbol{false, i, s}; }

// h_1 is the same element as g_1.
Symbol hsym(int i, int s) {
  return i == 1 ? Symbol{false, 1, s} : Symbol{true, i, s};
}

bool cancels(const Symbol& a, const Symbol& b) {
  return a.is_h == b.is_h && a.index == b.index && a.sign == -b.sign;
}

void reduce_symbols(std::vector<Symbol>& syms) {
  std::vector<Symbol> out;
  out.reserve(syms.size());
  for (const Symbol& s : syms) {
    if (!out.empty() && cancels(out.back(), s)) {
      out.pop_back();
    } else {
      out.push_back(s);
    }
  }
  syms = std::move(out);
}

void append_symbol_letters(std::vector<Letter>& out, const Symbol& s) {
  if (!s.is_h) {  // g_i = z_i z_1
    if (s.sign > 0) {
      out.push_back(s.index);
      out.push_back(1);
    } else {
      out.push_back(-1);
      out.push_back(-s.index);
    }
  } else {  // h_i = z_1 z_i
    if (s.sign > 0) {
      out.push_back(1);
      out.push_back(s.index);
    } else {
      out.push_back(-s.index);
      out.push_back(-1);
    }
  }
}

Word expand_prefix(int rank, const std::vector<Symbol>& syms,
                   std::size_t count) {
  std::vector<Letter> ls;
  ls.reserve(2 * count);
  for (std::size_t k = 0; k < count; ++k) append_symbol_letters(ls, syms[k]);
  return Word(rank, ls);
}

std::vector<Symbol> pair_letters(const Word& w) {
  std::vector<Symbol> syms;
  const auto& ls = w.letters();
  for (std::size_t p = 0; p + 1 < ls.size(); p += 2) {
    const Letter a = ls[p], b = ls[p + 1];
    const int ia = letter_index(a), ib = letter_index(b);
    if (a > 0 && b > 0) {
      syms.push_back(gsym(ia, +1));
      syms.push_back(gsym(1, -1));
      syms.push_back(hsym(ib, +1));
    } else if (a > 0 && b < 0) {
      syms.push_back(gsym(ia, +1));
      syms.push_back(gsym(ib, -1));
    } else if (a < 0 && b > 0) {
      syms.push_back(hsym(ia, -1));
      syms.push_back(hsym(ib, +1));
    } else {
      syms.push_back(hsym(ia, -1));
      syms.push_back(gsym(1, +1));
      syms.push_back(gsym(ib, -1));
    }
  }
  reduce_symbols(syms);
  return syms;
}

}  // namespace

Factorization factor_kernel_word(const Word& w) {
  if (!in_ker_epsilon(w))
    throw std::domain_error("factor_kernel_word: word is not in ker epsilon");
  const int rank = w.rank();
  const Word id(rank);
  auto gword = [&](int i) { return Word(rank, {i, 1}); };  // z_i z_1

  std::vector<Symbol> syms = pair_letters(w);
  Factorization out;

  // Stage 1: remove h_i via h_i = g_i^-1 (g_i h_i); the kernel element
  // g_i h_i = (z_i z_1^2 z_i^-1) z_i^2 is pulled out past the prefix.
  for (;;) {
    std::size_t p = 0;
    while (p < syms.size() && !syms[p].is_h) ++p;
    if (p == syms.size()) break;
    const Symbol s = syms[p];
    const Word prefix = expand_prefix(rank, syms, p);
    const Word zi = Word(rank, {s.index});
    if (s.sign > 0) {
      Word c = prefix * gword(s.index).inverse();
      out.push_back({c * zi, NormalGenerator::square(1), +1});
      out.push_back({c, NormalGenerator::square(s.index), +1});
      syms[p] = gsym(s.index, -1);
    } else {
      out.push_back({prefix, NormalGenerator::square(s.index), -1});
      out.push_back({prefix * zi, NormalGenerator::square(1), -1});
      syms[p] = gsym(s.index, +1);
    }
    reduce_symbols(syms);
  }

  // Stage 2: remove g_1 = z_1^2, itself a normal generator.
  for (;;) {
    std::size_t p = 0;
    while (p < syms.size() && syms[p].index != 1) ++p;
    if (p == syms.size()) break;
    out.push_back({expand_prefix(rank, syms, p), NormalGenerator::square(1),
                   syms[p].sign});
    syms.erase(syms.begin() + static_cast<std::ptrdiff_t>(p));
    reduce_symbols(syms);
  }

  // Stage 3: collect the word in g_2..g_n to the identity. Adjacent swap
  // x y -> y x emits [x, y]; for x = g_i^s, y = g_j^r this is a conjugate
  // of [g_i, g_j]^{+-1}:
  //   [a, b]       ->  (id,          +1)
  //   [a^-1, b]    ->  (a^-1,        -1)
  //   [a, b^-1]    ->  (b^-1,        -1)
  //   [a^-1, b^-1] ->  (a^-1 b^-1,   +1)
  for (;;) {
    reduce_symbols(syms);
    if (syms.empty()) break;
    std::size_t p = 0;
    while (p + 1 < syms.size() && syms[p].index <= syms[p + 1].index) ++p;
    if (p + 1 >= syms.size())
      // A sorted nonempty leftover would reduce to powers of the g_i with
      // a nonzero exponent somewhere, contradicting epsilon = 0.
      throw std::logic_error("factor_kernel_word: collection stalled");
    const Symbol x = syms[p], y = syms[p + 1];
    const Word prefix = expand_prefix(rank, syms, p);
    Word c0 = id;
    int e = +1;
    if (x.sign < 0 && y.sign > 0) {
      c0 = gword(x.index).inverse();
      e = -1;
    } else if (x.sign > 0 && y.sign < 0) {
      c0 = gword(y.index).inverse();
      e = -1;
    } else if (x.sign < 0 && y.sign < 0) {
      c0 = gword(x.index).inverse() * gword(y.index).inverse();
    }
    out.push_back(
        {prefix * c0, NormalGenerator::comm(x.index, y.index), e});
    std::swap(syms[p], syms[p + 1]);
  }

  return out;
}

bool verify_factorization(const Word& w, const Factorization& f) {
  for (const FactorEntry& entry : f) {
    if (entry.conjugator.rank() != w.rank()) return false;
    if (entry.exponent != 1 && entry.exponent != -1) return false;
    if (entry.generator.i() > w.rank() || entry.generator.j() > w.rank())
      return false;
  }
  return expand(f, w.rank()) == w;
}

std::string factorization_json(const Factorization& f) {
  std::string out = "[";
  for (std::size_t k = 0; k < f.size(); ++k) {
    if (k > 0) out += ',';
    out += "{\"conj\":" + detail::json_quote(f[k].conjugator.str()) +
           ",\"gen\":" + detail::json_quote(f[k].generator.str()) +
           ",\"exp\":" + std::to_string(f[k].exponent) + '}';
  }
  out += ']';
  return out;
}

}  // namespace torelli
