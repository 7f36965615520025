#include <algorithm>
#include <array>
#include <cstdint>

#include "brickwords/bricks.hpp"
#include "brickwords/error.hpp"

namespace brickwords {
namespace {

struct Block {
  std::int64_t start;
  const Word* letters;
};

std::size_t token_width(const Alphabet& a) {
  std::size_t w = 1;
  for (const std::string& t : a.tokens()) w = std::max(w, t.size());
  return w;
}

std::string rtrim(std::string s) {
  while (!s.empty() && s.back() == ' ') s.pop_back();
  return s;
}

// Lays the two rows out without checking that the bricks join.
std::array<std::string, 2> draw(std::span<const Brick> bricks, const Morphism& phi0, const Morphism& phi1) {
  std::array<std::vector<Block>, 2> rows;
  std::int64_t col0 = 0;
  for (const Brick& b : bricks) {
    rows[0].push_back({col0, &phi0.image(b.head0())});
    rows[1].push_back({col0 + b.offset, &phi1.image(b.head1())});
    col0 += static_cast<std::int64_t>(phi0.image_length(b.head0()));
  }
  std::int64_t lo = 0;
  std::int64_t hi = 0;
  for (const auto& row : rows)
    for (const Block& blk : row) {
      lo = std::min(lo, blk.start);
      hi = std::max(hi, blk.start + static_cast<std::int64_t>(blk.letters->size()));
    }
  const std::size_t width = token_width(phi0.source());
  const std::size_t slot = width + 1;
  const std::size_t columns = static_cast<std::size_t>(hi - lo);
  std::array<std::string, 2> lines;
  for (int r = 0; r < 2; ++r) {
    std::string line(columns * slot + 1, ' ');
    for (const Block& blk : rows[r]) {
      const std::size_t first = static_cast<std::size_t>(blk.start - lo);
      line[first * slot] = '|';
      line[(first + blk.letters->size()) * slot] = '|';
      for (std::size_t k = 0; k < blk.letters->size(); ++k) {
        const std::string& tok = phi0.source().token((*blk.letters)[k]);
        line.replace((first + k) * slot + 1, tok.size(), tok);
      }
    }
    lines[r] = rtrim(std::move(line));
  }
  return lines;
}

}  // namespace

std::string render_diagram(std::span<const Brick> bricks, const Morphism& phi0, const Morphism& phi1) {
  for (std::size_t i = 0; i + 1 < bricks.size(); ++i) {
    if (!joins_with(bricks[i], bricks[i + 1], phi0, phi1))
      throw DomainError("brick " + format_brick(bricks[i], phi0.source()) + " does not join with " +
                        format_brick(bricks[i + 1], phi0.source()));
  }
  auto lines = draw(bricks, phi0, phi1);
  return lines[0] + "\n" + lines[1] + "\n";
}

std::string render_separately(std::span<const Brick> bricks, const Morphism& phi0, const Morphism& phi1) {
  std::array<std::string, 2> out;
  for (std::size_t i = 0; i < bricks.size(); ++i) {
    auto lines = draw(bricks.subspan(i, 1), phi0, phi1);
    const std::size_t w = std::max(lines[0].size(), lines[1].size());
    for (int r = 0; r < 2; ++r) {
      if (i > 0) out[r] += "   ";
      out[r] += lines[r] + std::string(w - lines[r].size(), ' ');
    }
  }
  return rtrim(out[0]) + "\n" + rtrim(out[1]) + "\n";
}

}  // namespace brickwords
