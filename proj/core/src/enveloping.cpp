#include "kei/enveloping.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "kei/error.hpp"

namespace kei {

namespace {

std::vector<Letter> rotated_variant(const ReducedWord& relator, std::size_t rotation,
                                    int direction) {
  auto l = relator.letters();
  std::vector<Letter> out;
  out.reserve(l.size());
  for (std::size_t i = 0; i < l.size(); ++i) out.push_back(l[(rotation + i) % l.size()]);
  if (direction == -1) {
    std::reverse(out.begin(), out.end());
    for (auto& letter : out) letter = letter.inverted();
  }
  return out;
}

ReducedWord splice(const ReducedWord& w, std::size_t position,
                   const std::vector<Letter>& inserted, std::size_t rank) {
  auto l = w.letters();
  std::vector<Letter> raw(l.begin(), l.begin() + static_cast<std::ptrdiff_t>(position));
  raw.insert(raw.end(), inserted.begin(), inserted.end());
  raw.insert(raw.end(), l.begin() + static_cast<std::ptrdiff_t>(position), l.end());
  return ReducedWord::reduce(raw, WordMode::free, rank);
}

struct Variant {
  std::vector<Letter> letters;
  std::size_t relator, rotation;
  int direction;
};

std::vector<Variant> distinct_variants(const PresentedGroup& p) {
  std::vector<Variant> out;
  std::set<std::vector<Letter>> seen;
  for (std::size_t r = 0; r < p.relators.size(); ++r) {
    const auto& rel = p.relators[r];
    for (std::size_t rot = 0; rot < rel.size(); ++rot)
      for (int dir : {1, -1}) {
        auto letters = rotated_variant(rel, rot, dir);
        if (seen.insert(letters).second) out.push_back({std::move(letters), r, rot, dir});
      }
  }
  return out;
}

ReducedWord generator_word(Generator g, bool inverse, std::size_t rank) {
  Letter l{g, inverse};
  return ReducedWord::reduce(std::span<const Letter>(&l, 1), WordMode::free, rank);
}

}  // namespace

PresentedGroup enveloping_presentation(const FiniteQuandle& q,
                                       std::optional<Alphabet> names) {
  const std::size_t n = q.size();
  if (!names) {
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i) labels.push_back("g" + std::to_string(i));
    names = Alphabet(std::move(labels));
  }
  if (names->size() != n)
    throw ValidationError("need one generator name per quandle element");
  PresentedGroup p{*names, {}};
  p.relators.reserve(n * n);
  for (Generator x = 0; x < n; ++x)
    for (Generator y = 0; y < n; ++y) {
      const Letter raw[] = {{x, false}, {y, false}, {x, true}, {q.op(x, y), true}};
      p.relators.push_back(ReducedWord::reduce(raw, WordMode::free, n));
    }
  return p;
}

PresentedGroup fiq_ball_presentation(const FreeKei& free, std::size_t radius) {
  const auto ball = free.ball(radius);
  std::unordered_map<FIQElement, Generator> index;
  std::vector<std::string> names;
  for (Generator i = 0; i < ball.size(); ++i) {
    index.emplace(ball[i], i);
    std::string name;
    for (char c : free.format(ball[i]))
      if (c != ' ') name += c;
    names.push_back(std::move(name));
  }
  PresentedGroup p{Alphabet(std::move(names)), {}};
  for (Generator x = 0; x < ball.size(); ++x)
    for (Generator y = 0; y < ball.size(); ++y) {
      auto it = index.find(free.op(ball[x], ball[y]));
      if (it == index.end()) continue;
      const Letter raw[] = {{x, false}, {y, false}, {x, true}, {it->second, true}};
      p.relators.push_back(ReducedWord::reduce(raw, WordMode::free, ball.size()));
    }
  return p;
}

ReducedWord apply_step(const PresentedGroup& p, const ReducedWord& w,
                       const DerivationStep& step) {
  if (step.relator >= p.relators.size())
    throw ValidationError("step refers to unknown relator " + std::to_string(step.relator));
  const auto& rel = p.relators[step.relator];
  if (rel.empty()) throw ValidationError("step inserts a trivial relator");
  if (step.rotation >= rel.size())
    throw ValidationError("step rotation is out of range");
  if (step.direction != 1 && step.direction != -1)
    throw ValidationError("step direction must be 1 or -1");
  if (step.position > w.size())
    throw ValidationError("step position " + std::to_string(step.position) +
                          " is past the end of a word of length " +
                          std::to_string(w.size()));
  return splice(w, step.position, rotated_variant(rel, step.rotation, step.direction),
                p.generators.size());
}

bool verify_certificate(const PresentedGroup& p, const DerivationCertificate& cert) {
  if (cert.start.mode() != WordMode::free || cert.end.mode() != WordMode::free)
    return false;
  ReducedWord w = cert.start;
  for (const auto& step : cert.steps) w = apply_step(p, w, step);
  return w == cert.end;
}

DerivationSearch derive_equal(const PresentedGroup& p, Generator a, Generator b,
                              const SearchOptions& options) {
  const std::size_t rank = p.generators.size();
  if (options.depth == 0) throw ValidationError("depth bound must be positive");
  if (a >= rank || b >= rank) throw ValidationError("generator index out of range");

  DerivationSearch result;
  const ReducedWord start =
      multiply(generator_word(a, false, rank), generator_word(b, true, rank));
  const ReducedWord goal(WordMode::free);
  if (start == goal) {
    result.certificate = DerivationCertificate{start, goal, {}};
    return result;
  }

  struct Node {
    ReducedWord word;
    std::size_t parent;
    DerivationStep step;
    std::size_t depth;
  };
  std::vector<Node> nodes;
  nodes.push_back({start, 0, {}, 0});
  std::unordered_set<ReducedWord> visited{start};
  const auto variants = distinct_variants(p);
  // One insertion shortens a word by at most the relator length, so a word
  // longer than that times the remaining steps can never reach the goal.
  std::size_t longest = 0;
  for (const auto& v : variants) longest = std::max(longest, v.letters.size());

  auto certificate_for = [&nodes, &start, &goal](std::size_t leaf) {
    DerivationCertificate cert{start, goal, {}};
    for (std::size_t i = leaf; i != 0; i = nodes[i].parent) cert.steps.push_back(nodes[i].step);
    std::reverse(cert.steps.begin(), cert.steps.end());
    return cert;
  };

  for (std::size_t head = 0; head < nodes.size(); ++head) {
    if (nodes[head].depth >= options.depth) break;
    const ReducedWord current = nodes[head].word;
    const std::size_t depth = nodes[head].depth;
    ++result.states_explored;
    auto letters = current.letters();
    for (std::size_t pos = 0; pos <= current.size(); ++pos) {
      for (const auto& v : variants) {
        // Only moves that cancel against a neighbour of the insertion point.
        const bool left = pos > 0 && letters[pos - 1] == v.letters.front().inverted();
        const bool right = pos < letters.size() && letters[pos] == v.letters.back().inverted();
        if (!left && !right) continue;
        auto next = splice(current, pos, v.letters, rank);
        if (next.size() > options.max_length ||
            next.size() > longest * (options.depth - depth - 1) || visited.contains(next))
          continue;
        DerivationStep step{pos, v.relator, v.rotation, v.direction};
        nodes.push_back({next, head, step, depth + 1});
        if (next == goal) {
          result.certificate = certificate_for(nodes.size() - 1);
          return result;
        }
        visited.insert(std::move(next));
        if (visited.size() >= options.max_states) {
          result.state_cap_hit = true;
          return result;
        }
      }
    }
  }
  return result;
}

std::string to_text(const PresentedGroup& p) {
  std::ostringstream out;
  for (const auto& name : p.generators.names()) out << "gen " << name << '\n';
  for (const auto& r : p.relators) out << "rel " << format_word(r, p.generators) << '\n';
  return out.str();
}

PresentedGroup parse_presentation(std::string_view text) {
  std::vector<std::string> names;
  std::vector<std::pair<std::size_t, std::string>> rel_lines;
  std::size_t line_no = 0, pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    ++line_no;
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string_view::npos || line[first] == '#') continue;
    line.remove_prefix(first);
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.remove_suffix(1);
    if (line.starts_with("gen ")) {
      if (!rel_lines.empty())
        throw ParseError(line_no, first + 1, "generators must precede relators");
      auto name = line.substr(4);
      name.remove_prefix(std::min(name.find_first_not_of(' '), name.size()));
      names.emplace_back(name);
    } else if (line.starts_with("rel ")) {
      rel_lines.emplace_back(line_no, std::string(line.substr(4)));
    } else {
      throw ParseError(line_no, first + 1, "expected 'gen <name>' or 'rel <word>'");
    }
  }
  PresentedGroup p{Alphabet(std::move(names)), {}};
  for (const auto& [line, word] : rel_lines) {
    try {
      p.relators.push_back(parse_word(word, p.generators, WordMode::free));
    } catch (const ParseError& e) {
      throw ParseError(line, e.column() + 4, e.what());
    }
  }
  return p;
}

nlohmann::json certificate_to_json(const DerivationCertificate& cert,
                                   const Alphabet& generators) {
  auto steps = nlohmann::json::array();
  for (const auto& s : cert.steps)
    steps.push_back({{"position", s.position},
                     {"relator", s.relator},
                     {"rotation", s.rotation},
                     {"direction", s.direction}});
  return {{"start", format_word(cert.start, generators)},
          {"end", format_word(cert.end, generators)},
          {"steps", std::move(steps)}};
}

DerivationCertificate certificate_from_json(const nlohmann::json& j,
                                            const Alphabet& generators) {
  try {
    DerivationCertificate cert;
    cert.start = parse_word(j.at("start").get<std::string>(), generators, WordMode::free);
    cert.end = parse_word(j.at("end").get<std::string>(), generators, WordMode::free);
    for (const auto& s : j.at("steps"))
      cert.steps.push_back({s.at("position").get<std::size_t>(),
                            s.at("relator").get<std::size_t>(),
                            s.at("rotation").get<std::size_t>(),
                            s.at("direction").get<int>()});
    return cert;
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("malformed certificate: ") + e.what());
  }
}

}  // namespace kei
