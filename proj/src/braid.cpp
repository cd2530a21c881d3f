#include "torelli/braid.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "letters_io.hpp"

namespace torelli {

namespace {

void check_strands(int strands) {
  if (strands < 2)
    throw std::invalid_argument("BraidWord: strand count must be >= 2");
}

void check_braid_letters(int strands, std::span<const Letter> raw) {
  for (Letter l : raw) {
    if (l == 0 || letter_index(l) > strands - 1)
      throw std::invalid_argument("BraidWord: generator index out of range 1.." +
                                  std::to_string(strands - 1));
  }
}

}  // namespace

BraidWord::BraidWord(int strands) : strands_(strands) { check_strands(strands); }

BraidWord::BraidWord(int strands, std::span<const Letter> raw)
    : strands_(strands) {
  check_strands(strands);
  check_braid_letters(strands, raw);
  letters_ = reduce_letters(raw);
}

BraidWord::BraidWord(int strands, std::initializer_list<Letter> raw)
    : BraidWord(strands, std::span<const Letter>(raw.begin(), raw.size())) {}

BraidWord BraidWord::parse(std::string_view text, int strands) {
  check_strands(strands);
  return BraidWord(strands, detail::parse_letters(text, strands - 1, 's'));
}

BraidWord BraidWord::inverse() const {
  BraidWord w(strands_);
  w.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
    w.letters_.push_back(-*it);
  return w;
}

BraidWord operator*(const BraidWord& u, const BraidWord& v) {
  if (u.strands_ != v.strands_)
    throw std::invalid_argument("BraidWord: strand count mismatch in product");
  BraidWord w(u.strands_);
  w.letters_ = u.letters_;
  for (Letter l : v.letters_) {
    if (!w.letters_.empty() && w.letters_.back() == -l) {
      w.letters_.pop_back();
    } else {
      w.letters_.push_back(l);
    }
  }
  return w;
}

std::string BraidWord::str() const {
  return detail::print_letters(letters_, 's');
}

Permutation::Permutation(int degree) {
  if (degree < 1)
    throw std::invalid_argument("Permutation: degree must be >= 1");
  images_.resize(degree);
  std::iota(images_.begin(), images_.end(), 0);
}

Permutation Permutation::transposition(int degree, int i) {
  if (i < 1 || i + 1 > degree)
    throw std::invalid_argument("Permutation: transposition out of range");
  Permutation p(degree);
  std::swap(p.images_[i - 1], p.images_[i]);
  return p;
}

int Permutation::image_of(int x) const {
  if (x < 1 || x > degree())
    throw std::invalid_argument("Permutation: point out of range");
  return images_[x - 1] + 1;
}

bool Permutation::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (images_[i] != i) return false;
  return true;
}

Permutation Permutation::then(const Permutation& next) const {
  if (degree() != next.degree())
    throw std::invalid_argument("Permutation: degree mismatch");
  Permutation p(degree());
  for (int i = 0; i < degree(); ++i) p.images_[i] = next.images_[images_[i]];
  return p;
}

Permutation Permutation::inverse() const {
  Permutation p(degree());
  for (int i = 0; i < degree(); ++i) p.images_[images_[i]] = i;
  return p;
}

std::vector<int> Permutation::images() const {
  std::vector<int> out(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) out[i] = images_[i] + 1;
  return out;
}

std::string Permutation::str() const {
  std::string out;
  std::vector<bool> seen(images_.size(), false);
  for (int start = 0; start < degree(); ++start) {
    if (seen[start] || images_[start] == start) continue;
    out += '(';
    int x = start;
    bool first = true;
    do {
      if (!first) out += ' ';
      first = false;
      out += std::to_string(x + 1);
      seen[x] = true;
      x = images_[x];
    } while (x != start);
    out += ')';
  }
  return out.empty() ? "()" : out;
}

Permutation permutation(const BraidWord& w) {
  Permutation p(w.strands());
  for (Letter l : w.letters())
    p = p.then(Permutation::transposition(w.strands(), letter_index(l)));
  return p;
}

bool is_pure(const BraidWord& w) { return permutation(w).is_identity(); }

BraidWord center_word(int strands) {
  check_strands(strands);
  std::vector<Letter> ls;
  ls.reserve(static_cast<std::size_t>(strands) * (strands - 1));
  for (int rep = 0; rep < strands; ++rep)
    for (int i = 1; i <= strands - 1; ++i) ls.push_back(i);
  return BraidWord(strands, ls);
}

BraidWord pure_generator(int strands, int i, int j) {
  check_strands(strands);
  if (!(1 <= i && i < j && j <= strands))
    throw std::invalid_argument("pure_generator: need 1 <= i < j <= n");
  std::vector<Letter> conj;
  for (int k = j - 1; k >= i + 1; --k) conj.push_back(k);
  BraidWord d(strands, conj);
  return d * BraidWord(strands, {i, i}) * d.inverse();
}

}  // namespace torelli
