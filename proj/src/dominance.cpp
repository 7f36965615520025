#include "brickwords/dominance.hpp"

#include <algorithm>
#include <array>
#include <limits>

#include "brickwords/error.hpp"
#include "brickwords/fixed_point.hpp"

namespace brickwords {
namespace {

// Image rows of pi(context), in columns relative to the row-0 start of the
// first brick. A bounded context starts at column 0 of the fixed points.
struct Layout {
  std::array<std::vector<std::int64_t>, 2> start;
  std::array<std::vector<const Word*>, 2> image;
  std::array<std::int64_t, 2> lo{};
  std::array<std::int64_t, 2> hi{};
  bool bounded = false;
  bool contiguous = true;
};

Layout lay_out(const SimultaneousCoding& coding, const Word& context, bool bounded) {
  Layout l;
  l.bounded = bounded;
  std::int64_t col0 = 0;
  for (Letter x : context) {
    const Brick& b = coding.brick(x);
    l.start[0].push_back(col0);
    l.start[1].push_back(col0 + b.offset);
    l.image[0].push_back(&coding.phi0.image(b.head0()));
    l.image[1].push_back(&coding.phi1.image(b.head1()));
    col0 += static_cast<std::int64_t>(coding.phi0.image_length(b.head0()));
  }
  for (int r = 0; r < 2; ++r) {
    for (std::size_t m = 0; m + 1 < context.size(); ++m) {
      if (l.start[r][m] + static_cast<std::int64_t>(l.image[r][m]->size()) != l.start[r][m + 1])
        l.contiguous = false;
    }
    l.lo[r] = l.start[r].front();
    l.hi[r] = l.start[r].back() + static_cast<std::int64_t>(l.image[r].back()->size());
  }
  return l;
}

bool covered(const Layout& l, int row, std::int64_t a, std::int64_t b) {
  if (l.bounded) a = std::max<std::int64_t>(a, 0);
  return a >= l.lo[row] && b < l.hi[row];
}

std::size_t count_in(const Layout& l, int row, Letter letter, std::int64_t a, std::int64_t b) {
  std::size_t n = 0;
  for (std::size_t m = 0; m < l.start[row].size(); ++m) {
    const Word& img = *l.image[row][m];
    for (std::size_t k = 0; k < img.size(); ++k) {
      const std::int64_t col = l.start[row][m] + static_cast<std::int64_t>(k);
      if (col >= a && col <= b && img[k] == letter) ++n;
    }
  }
  return n;
}

struct Context {
  Word factor;
  std::size_t pos = 0;
  bool bounded = false;
};

struct Option {
  std::size_t k;
  std::size_t pos;
};

constexpr std::array<Option, 5> kOptions{{{2, 1}, {2, 0}, {3, 1}, {3, 0}, {3, 2}}};

std::vector<Context> contexts_for(Letter x, const Option& opt, const FactorSet& interior, const Word& prefix) {
  std::vector<Context> out;
  for (const Word& f : interior.factors)
    if (f[opt.pos] == x) out.push_back({f, opt.pos, false});
  for (std::size_t j = 0; j <= opt.pos; ++j) {
    if (prefix[j] != x) continue;
    const std::size_t len = j + opt.k - opt.pos;
    out.push_back({Word(prefix.begin(), prefix.begin() + static_cast<std::ptrdiff_t>(len)), j, true});
  }
  return out;
}

std::string span_text(std::int64_t a, std::int64_t b) {
  return "[" + std::to_string(a) + ", " + std::to_string(b) + "]";
}

}  // namespace

std::string to_string(CertificateVerdict verdict) {
  switch (verdict) {
    case CertificateVerdict::pass:
      return "pass";
    case CertificateVerdict::fail:
      return "fail";
    case CertificateVerdict::inconclusive:
      return "inconclusive";
  }
  return "inconclusive";
}

DominanceCertificate verify_letter_dominance(const CertifiedSystem& system, Letter letter,
                                             DominanceWindows windows, std::optional<int> dominating_row) {
  if (!system.verified()) throw PreconditionError("dominance needs a verified system");
  if (windows.back > windows.fwd) throw DomainError("dominance windows need back <= fwd");
  const SimultaneousCoding& coding = system.coding;
  const Alphabet& letters = coding.phi0.source();
  if (letter >= letters.size()) throw DomainError("letter outside the alphabet");
  if (dominating_row && *dominating_row != 0 && *dominating_row != 1)
    throw DomainError("dominating row must be 0 or 1");

  const Morphism& mu = system.candidate.mu;
  const Letter seed = system.candidate.seed;
  const Word prefix = fixed_point_prefix(mu, seed, 4);
  const std::array<Word, 2> start_images{coding.phi0.image(coding.brick(prefix[0]).head0()),
                                         coding.phi1.image(coding.brick(prefix[0]).head1())};

  DominanceCertificate cert;
  cert.letter = letter;
  cert.windows = windows;
  if (dominating_row) {
    cert.dominating_row = *dominating_row;
  } else if (start_images[0].front() == letter && start_images[1].front() != letter) {
    cert.dominating_row = 0;
  }
  const int big = cert.dominating_row;
  const int small = 1 - big;
  const auto back = static_cast<std::int64_t>(windows.back);
  const auto fwd = static_cast<std::int64_t>(windows.fwd);

  auto fail = [&](std::string why, const Word& context) {
    cert.verdict = CertificateVerdict::fail;
    cert.failure = std::move(why);
    const std::vector<Brick> bs = bricks_of(coding, context);
    try {
      cert.failure_diagram = render_diagram(bs, coding.phi0, coding.phi1);
    } catch (const DomainError&) {
      cert.failure_diagram = render_separately(bs, coding.phi0, coding.phi1);
    }
    return cert;
  };

  if (system.coding.brick(prefix[0]).offset != 0 || start_images[big].front() != letter) {
    return fail("(iii) row " + std::to_string(big) + " does not start with " + letters.token(letter),
                Word{prefix[0]});
  }

  const FactorSet i2 = interior_factor_closure(mu, seed, 2);
  const FactorSet i3 = interior_factor_closure(mu, seed, 3);
  bool unresolved = false;

  for (Letter x = 0; x < coding.bricks.size(); ++x) {
    for (int r = 0; r < 2; ++r) {
      const Brick& b = coding.brick(x);
      const Word& img = r == 0 ? coding.phi0.image(b.head0()) : coding.phi1.image(b.head1());
      for (std::size_t idx = 0; idx < img.size(); ++idx) {
        if (img[idx] != letter) continue;
        ++cert.occurrence_classes;
        bool resolved = false;
        for (const Option& opt : kOptions) {
          const FactorSet& interior = opt.k == 2 ? i2 : i3;
          const std::vector<Context> contexts = contexts_for(x, opt, interior, prefix);
          bool all_covered = true;
          std::vector<std::pair<Layout, const Context*>> laid;
          for (const Context& c : contexts) {
            Layout l = lay_out(coding, c.factor, c.bounded);
            const std::int64_t n = l.start[r][c.pos] + static_cast<std::int64_t>(idx);
            const bool initial = c.bounded && r == big && n == 0;
            const bool ok = !l.contiguous         ? false
                            : r == small           ? covered(l, big, n - back, n)
                            : initial              ? covered(l, small, 0, fwd)
                                                   : covered(l, small, n, n + fwd);
            if (!ok) {
              all_covered = false;
              break;
            }
            laid.emplace_back(std::move(l), &c);
          }
          if (!all_covered) continue;
          resolved = true;
          cert.checked_factors = std::max(cert.checked_factors, opt.k);
          for (const auto& [l, c] : laid) {
            const std::int64_t n = l.start[r][c->pos] + static_cast<std::int64_t>(idx);
            const std::string where = " at column " + std::to_string(n) + " of row " + std::to_string(r) +
                                      " in context " + coding.index_alphabet.format(c->factor) +
                                      " (position " + std::to_string(c->pos) + ")";
            if (r == small) {
              const std::size_t got = count_in(l, big, letter, n - back, n);
              if (got != 1)
                return fail("(i) " + std::to_string(got) + " partner(s) in row " + std::to_string(big) + " " +
                                span_text(n - back, n) + where,
                            c->factor);
            } else if (c->bounded && n == 0) {
              const std::size_t got = count_in(l, small, letter, 0, fwd);
              if (got != 0)
                return fail("(iii) initial occurrence has " + std::to_string(got) + " partner(s) in row " +
                                std::to_string(small) + " " + span_text(0, fwd),
                            c->factor);
              cert.initial_unpaired = 0;
            } else {
              const std::size_t got = count_in(l, small, letter, n, n + fwd);
              if (got != 1)
                return fail("(ii) " + std::to_string(got) + " partner(s) in row " + std::to_string(small) + " " +
                                span_text(n, n + fwd) + where,
                            c->factor);
            }
          }
          break;
        }
        if (!resolved) unresolved = true;
      }
    }
  }

  if (unresolved || !cert.initial_unpaired) {
    cert.verdict = CertificateVerdict::inconclusive;
    cert.failure = "some occurrence windows leave every 3-factor diagram";
    return cert;
  }
  cert.verdict = CertificateVerdict::pass;
  return cert;
}

PrefixCountScan scan_prefix_counts(const Morphism& phi0, const Morphism& phi1, Letter seed0, Letter seed1,
                                   Letter letter, std::size_t length, unsigned power) {
  if (length == 0) throw DomainError("scan length must be positive");
  if (power == 0) throw DomainError("power must be positive");
  if (letter >= phi0.source().size()) throw DomainError("letter outside the alphabet");
  FixedPointStream s0(power == 1 ? phi0 : brickwords::power(phi0, power), seed0);
  FixedPointStream s1(power == 1 ? phi1 : brickwords::power(phi1, power), seed1);
  PrefixCountScan scan;
  scan.length = length;
  scan.min_diff = std::numeric_limits<std::int64_t>::max();
  std::int64_t diff = 0;
  for (std::size_t n = 1; n <= length; ++n) {
    diff += (s1.next() == letter ? 1 : 0) - (s0.next() == letter ? 1 : 0);
    if (diff < scan.min_diff) {
      scan.min_diff = diff;
      scan.argmin = n;
    }
  }
  scan.all_positive = scan.min_diff > 0;
  return scan;
}

}  // namespace brickwords
