#include "brickwords/config.hpp"

#include <cctype>
#include <charconv>
#include <set>
#include <sstream>

#include "brickwords/error.hpp"
#include "brickwords/spec_parser.hpp"
#include "text_cursor.hpp"

namespace brickwords {
namespace {

using detail::TextCursor;

// A key or value with its position; line 0 marks a command-line override.
struct Located {
  std::string text;
  std::size_t line;
  std::size_t column;

  [[noreturn]] void fail(const std::string& msg) const {
    if (line == 0) throw DomainError("command-line option: " + msg);
    TextCursor::fail_at(msg, line, column);
  }
};

template <typename T>
T positive(const Located& v, const std::string& key) {
  T out{};
  const char* first = v.text.data();
  const char* last = first + v.text.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  if (ec != std::errc() || ptr != last) v.fail("expected an integer for '" + key + "'");
  if (out <= 0) v.fail("'" + key + "' must be positive");
  return out;
}

// phi1 rewritten over phi0's letter order.
Morphism reindex(const Morphism& phi1, const Alphabet& target, std::size_t line, std::size_t column) {
  const Alphabet& src = phi1.source();
  if (src.size() != target.size())
    TextCursor::fail_at("the two morphisms have different alphabets", line, column);
  std::vector<Letter> to_target(src.size());
  for (Letter x = 0; x < src.size(); ++x) {
    auto t = target.find(src.token(x));
    if (!t) TextCursor::fail_at("letter '" + src.token(x) + "' has no rule in the first morphism", line, column);
    to_target[x] = *t;
  }
  std::vector<Word> images(target.size());
  for (Letter x = 0; x < src.size(); ++x) {
    Word img;
    for (Letter y : phi1.image(x)) img.push_back(to_target[y]);
    images[to_target[x]] = std::move(img);
  }
  return Morphism::endo(target, std::move(images));
}

Letter only_seed(const Morphism& m, const std::string& which, const TextCursor& at) {
  const std::vector<Letter> seeds = prolongable_seeds(m);
  if (seeds.size() != 1)
    at.fail("seeds=... is required: " + which + " has " + std::to_string(seeds.size()) + " prolongable letters");
  return seeds.front();
}

void apply_option(RunConfig& cfg, const Located& key, const Located& value, std::optional<Located>& seeds) {
  const std::string& k = key.text;
  if (k == "seeds") {
    seeds = value;
  } else if (k == "order") {
    cfg.order = positive<std::size_t>(value, k);
  } else if (k == "length") {
    cfg.length = positive<std::size_t>(value, k);
  } else if (k == "offset-bound") {
    cfg.offset_bound = positive<std::int64_t>(value, k);
  } else if (k == "max-image-len") {
    cfg.inference.max_image_len = positive<std::size_t>(value, k);
  } else if (k == "horizon") {
    cfg.inference.horizon = positive<std::size_t>(value, k);
  } else if (k == "node-budget") {
    cfg.inference.node_budget = positive<std::uint64_t>(value, k);
  } else if (k == "scan") {
    cfg.scan = positive<std::size_t>(value, k);
  } else if (k == "power") {
    cfg.power = positive<unsigned>(value, k);
  } else if (k == "bound") {
    cfg.bound = positive<std::size_t>(value, k);
  } else if (k == "max-pairs") {
    cfg.max_pairs = positive<std::size_t>(value, k);
  } else if (k == "max-iterations") {
    cfg.max_iterations = positive<std::size_t>(value, k);
  } else if (k == "derived") {
    cfg.derived = value.text;
  } else if (k == "json") {
    cfg.json = value.text;
  } else {
    key.fail("unknown option '" + k + "'");
  }
}

}  // namespace

RunConfig parse_run_config(std::string_view text, const std::vector<std::pair<std::string, std::string>>& overrides) {
  TextCursor cur(text);
  cur.skip_space();
  if (cur.at_end()) cur.fail("empty config");
  RunConfig cfg;
  cfg.phi0 = detail::parse_morphism_at(cur);
  cur.skip_space();
  if (cur.peek() != '|') cur.fail("expected '|' between the two morphisms");
  cur.advance();
  cur.skip_space();
  if (cur.at_end()) cur.fail("expected a second morphism");
  const std::size_t line1 = cur.line();
  const std::size_t column1 = cur.column();
  cfg.phi1 = reindex(detail::parse_morphism_at(cur), cfg.phi0.source(), line1, column1);

  std::optional<Located> seeds;
  std::set<std::string> seen;
  while (true) {
    cur.skip_space();
    if (cur.at_end()) break;
    Located key{{}, cur.line(), cur.column()};
    while (!cur.at_end() && (std::isalnum(static_cast<unsigned char>(cur.peek())) || cur.peek() == '-'))
      key.text.push_back(cur.advance());
    if (key.text.empty()) cur.fail("expected an option 'key=value'");
    if (cur.peek() != '=') cur.fail("expected '=' after '" + key.text + "'");
    cur.advance();
    Located value{{}, cur.line(), cur.column()};
    while (!cur.at_end() && !std::isspace(static_cast<unsigned char>(cur.peek())) && cur.peek() != '#')
      value.text.push_back(cur.advance());
    if (value.text.empty()) value.fail("empty value for '" + key.text + "'");
    if (!seen.insert(key.text).second) key.fail("duplicate option '" + key.text + "'");

    apply_option(cfg, key, value, seeds);
  }
  for (const auto& [k, v] : overrides) apply_option(cfg, Located{k, 0, 0}, Located{v, 0, 0}, seeds);

  if (seeds) {
    const std::size_t comma = seeds->text.find(',');
    if (comma == std::string::npos) seeds->fail("seeds must be 'x,y'");
    const std::string s0 = seeds->text.substr(0, comma);
    const std::string s1 = seeds->text.substr(comma + 1);
    auto l0 = cfg.phi0.source().find(s0);
    auto l1 = cfg.phi0.source().find(s1);
    if (!l0) seeds->fail("unknown seed letter '" + s0 + "'");
    if (!l1) seeds->fail("unknown seed letter '" + s1 + "'");
    if (!is_prolongable(cfg.phi0, *l0)) seeds->fail("seed '" + s0 + "' is not prolongable for the first morphism");
    if (!is_prolongable(cfg.phi1, *l1)) seeds->fail("seed '" + s1 + "' is not prolongable for the second morphism");
    cfg.seed0 = *l0;
    cfg.seed1 = *l1;
  } else {
    cfg.seed0 = only_seed(cfg.phi0, "the first morphism", cur);
    cfg.seed1 = only_seed(cfg.phi1, "the second morphism", cur);
  }
  return cfg;
}

std::string format_run_config(const RunConfig& c) {
  const Alphabet& a = c.phi0.source();
  std::ostringstream out;
  out << c.phi0.to_spec() << " | " << c.phi1.to_spec() << "\n";
  out << "seeds=" << a.token(c.seed0) << "," << a.token(c.seed1) << "\n";
  out << "power=" << c.power << "\n";
  out << "order=" << c.order << "\n";
  out << "length=" << c.length << "\n";
  out << "offset-bound=" << c.offset_bound << "\n";
  out << "max-image-len=" << c.inference.max_image_len << "\n";
  out << "horizon=" << c.inference.horizon << "\n";
  out << "node-budget=" << c.inference.node_budget << "\n";
  out << "scan=" << c.scan << "\n";
  out << "bound=" << c.bound << "\n";
  out << "max-pairs=" << c.max_pairs << "\n";
  out << "max-iterations=" << c.max_iterations << "\n";
  if (c.derived) out << "derived=" << *c.derived << "\n";
  if (c.json) out << "json=" << *c.json << "\n";
  return out.str();
}

}  // namespace brickwords
