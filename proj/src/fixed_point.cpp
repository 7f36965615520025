#include "brickwords/fixed_point.hpp"

#include "brickwords/error.hpp"

namespace brickwords {

FixedPointStream::FixedPointStream(Morphism m, Letter seed) : morphism_(std::move(m)) {
  if (!morphism_.is_endomorphism()) throw DomainError("fixed points need an endomorphism");
  if (!is_prolongable(morphism_, seed)) {
    const std::string name = seed < morphism_.source().size() ? morphism_.source().token(seed) : "?";
    throw DomainError("seed '" + name + "' is not prolongable");
  }
  buffer_ = morphism_.image(seed);
}

void FixedPointStream::grow_to(std::size_t n) {
  while (buffer_.size() < n) {
    const Word& img = morphism_.image(buffer_[expanded_++]);
    buffer_.insert(buffer_.end(), img.begin(), img.end());
  }
}

Letter FixedPointStream::next() {
  grow_to(emitted_ + 1);
  return buffer_[emitted_++];
}

const Word& FixedPointStream::prefix(std::size_t n) {
  grow_to(n);
  return buffer_;
}

Word fixed_point_prefix(const Morphism& m, Letter seed, std::size_t n) {
  FixedPointStream stream(m, seed);
  const Word& buf = stream.prefix(n);
  return Word(buf.begin(), buf.begin() + static_cast<std::ptrdiff_t>(n));
}

}  // namespace brickwords
