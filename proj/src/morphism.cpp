#include "brickwords/morphism.hpp"

#include <algorithm>
#include <numeric>

#include "brickwords/error.hpp"

namespace brickwords {

std::uint64_t ParikhVector::total() const noexcept {
  return std::accumulate(counts.begin(), counts.end(), std::uint64_t{0});
}

ParikhVector parikh(std::span<const Letter> word, std::size_t alphabet_size) {
  ParikhVector p{std::vector<std::uint64_t>(alphabet_size, 0)};
  for (Letter l : word) {
    if (l >= alphabet_size) throw DomainError("letter outside alphabet in parikh()");
    ++p.counts[l];
  }
  return p;
}

IncidenceMatrix IncidenceMatrix::identity(std::size_t dim) {
  IncidenceMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1;
  return m;
}

IncidenceMatrix IncidenceMatrix::from_rows(const std::vector<std::vector<std::uint64_t>>& rows) {
  IncidenceMatrix m(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size()) throw DomainError("incidence matrix must be square");
    for (std::size_t j = 0; j < rows.size(); ++j) m(i, j) = rows[i][j];
  }
  return m;
}

std::vector<std::vector<std::uint64_t>> IncidenceMatrix::rows() const {
  std::vector<std::vector<std::uint64_t>> out(dim_, std::vector<std::uint64_t>(dim_));
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) out[i][j] = (*this)(i, j);
  return out;
}

IncidenceMatrix IncidenceMatrix::operator*(const IncidenceMatrix& rhs) const {
  if (dim_ != rhs.dim_) throw DomainError("incidence matrix dimension mismatch");
  IncidenceMatrix out(dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t k = 0; k < dim_; ++k) {
      const std::uint64_t a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < dim_; ++j) out(i, j) += a * rhs(k, j);
    }
  return out;
}

ParikhVector IncidenceMatrix::operator*(const ParikhVector& v) const {
  if (v.counts.size() != dim_) throw DomainError("parikh vector dimension mismatch");
  ParikhVector out{std::vector<std::uint64_t>(dim_, 0)};
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) out.counts[i] += (*this)(i, j) * v.counts[j];
  return out;
}

IncidenceMatrix matrix_power(const IncidenceMatrix& m, unsigned k) {
  IncidenceMatrix result = IncidenceMatrix::identity(m.dim());
  IncidenceMatrix base = m;
  while (k > 0) {
    if (k & 1u) result = result * base;
    k >>= 1u;
    if (k > 0) base = base * base;
  }
  return result;
}

bool is_primitive(const IncidenceMatrix& m) {
  const std::size_t d = m.dim();
  if (d == 0) return false;
  // Boolean pattern powers P^k, k = 1 .. (d-1)^2 + 1.
  std::vector<char> base(d * d), cur(d * d), next(d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) base[i * d + j] = cur[i * d + j] = m(i, j) > 0;
  const std::size_t limit = (d - 1) * (d - 1) + 1;
  for (std::size_t k = 1;; ++k) {
    bool positive = true;
    for (char c : cur) positive = positive && c;
    if (positive) return true;
    if (k == limit) return false;
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) {
        char v = 0;
        for (std::size_t l = 0; l < d && !v; ++l) v = cur[i * d + l] && base[l * d + j];
        next[i * d + j] = v;
      }
    cur.swap(next);
  }
}

Morphism::Morphism(Alphabet source, Alphabet target, std::vector<Word> images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
  if (images_.size() != source_.size())
    throw DomainError("morphism needs exactly one image per source letter");
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i].empty()) throw DomainError("erasing image for letter '" + source_.token(i) + "'");
    for (Letter l : images_[i])
      if (!target_.contains(l)) throw DomainError("image letter outside target alphabet");
  }
}

Morphism Morphism::endo(Alphabet alphabet, std::vector<Word> images) {
  Alphabet target = alphabet;
  return Morphism(std::move(alphabet), std::move(target), std::move(images));
}

Morphism Morphism::identity(const Alphabet& alphabet) {
  std::vector<Word> images;
  for (Letter l = 0; l < alphabet.size(); ++l) images.push_back(Word{l});
  return endo(alphabet, std::move(images));
}

const Word& Morphism::image(Letter letter) const {
  if (letter >= images_.size())
    throw DomainError("letter index " + std::to_string(letter) + " not in morphism domain");
  return images_[letter];
}

std::size_t Morphism::max_image_length() const noexcept {
  std::size_t best = 0;
  for (const Word& w : images_) best = std::max(best, w.size());
  return best;
}

Word Morphism::apply(std::span<const Letter> word) const {
  Word out;
  out.reserve(image_length(word));
  for (Letter l : word) {
    const Word& img = image(l);
    out.insert(out.end(), img.begin(), img.end());
  }
  return out;
}

std::size_t Morphism::image_length(std::span<const Letter> word) const {
  std::size_t n = 0;
  for (Letter l : word) n += image(l).size();
  return n;
}

std::string Morphism::to_spec() const {
  std::string out;
  for (Letter l = 0; l < source_.size(); ++l) {
    if (l > 0) out.push_back(';');
    out += source_.token(l);
    out += "->";
    out += target_.format(images_[l]);
  }
  return out;
}

Morphism compose(const Morphism& outer, const Morphism& inner) {
  if (!(inner.target() == outer.source())) throw DomainError("cannot compose: alphabets do not match");
  std::vector<Word> images;
  images.reserve(inner.source().size());
  for (const Word& w : inner.images()) images.push_back(outer.apply(w));
  return Morphism(inner.source(), outer.target(), std::move(images));
}

Morphism power(const Morphism& m, unsigned k) {
  if (!m.is_endomorphism()) throw DomainError("power() needs an endomorphism");
  if (k == 0) throw DomainError("power() exponent must be >= 1");
  Morphism result = m;
  for (unsigned i = 1; i < k; ++i) result = compose(m, result);
  return result;
}

IncidenceMatrix incidence_matrix(const Morphism& m) {
  if (!m.is_endomorphism()) throw DomainError("incidence matrix needs an endomorphism");
  const std::size_t d = m.source().size();
  IncidenceMatrix out(d);
  for (Letter j = 0; j < d; ++j)
    for (Letter i : m.image(j)) ++out(i, j);
  return out;
}

bool is_prolongable(const Morphism& m, Letter seed) {
  if (!m.is_endomorphism() || seed >= m.source().size()) return false;
  const Word& img = m.image(seed);
  return img.size() >= 2 && img.front() == seed;
}

std::vector<Letter> prolongable_seeds(const Morphism& m) {
  if (!m.is_endomorphism()) throw DomainError("prolongable_seeds() needs an endomorphism");
  std::vector<Letter> out;
  for (Letter l = 0; l < m.source().size(); ++l)
    if (is_prolongable(m, l)) out.push_back(l);
  return out;
}

}  // namespace brickwords
