#include "permfunc/groups.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <mutex>
#include <numeric>
#include <unordered_set>

#include "permfunc/errors.hpp"

namespace permfunc {

struct GroupSpec::Closure {
  std::once_flag once;
  std::vector<Permutation> sorted;
};

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

std::vector<Permutation> generate_closure(int n, const std::vector<Permutation>& generators, std::uint64_t cap) {
  std::unordered_set<Permutation> seen;
  std::deque<Permutation> frontier;
  const Permutation id(n);
  seen.insert(id);
  frontier.push_back(id);
  while (!frontier.empty()) {
    Permutation g = std::move(frontier.front());
    frontier.pop_front();
    for (const auto& s : generators) {
      Permutation h = s * g;
      if (seen.insert(h).second) {
        if (seen.size() > cap) {
          throw DomainError("group order exceeds enumeration cap " + std::to_string(cap));
        }
        frontier.push_back(std::move(h));
      }
    }
  }
  std::vector<Permutation> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Point> free_points(int n, const std::vector<Point>& stabilized) {
  std::vector<bool> fixed(static_cast<std::size_t>(n), false);
  for (Point p : stabilized) {
    fixed[static_cast<std::size_t>(p - 1)] = true;
  }
  std::vector<Point> out;
  for (Point p = 1; p <= n; ++p) {
    if (!fixed[static_cast<std::size_t>(p - 1)]) {
      out.push_back(p);
    }
  }
  return out;
}

void require_cap(std::uint64_t order, std::uint64_t cap) {
  if (order > cap) {
    throw DomainError("group order " + std::to_string(order) + " exceeds enumeration cap " + std::to_string(cap));
  }
}

int parse_int(std::string_view text, std::string_view context) {
  if (text.empty() || !std::all_of(text.begin(), text.end(), [](char c) { return c >= '0' && c <= '9'; }) ||
      text.size() > 6) {
    throw ParseError("expected a positive integer in '" + std::string(context) + "'");
  }
  return std::stoi(std::string(text));
}

// Splits "(1 2),(1 2 3)" at commas that sit between cycle groups.
std::vector<std::string> split_generators(std::string_view text) {
  std::vector<std::string> out;
  std::string current;
  int depth = 0;
  for (char c : text) {
    if (c == '(') {
      ++depth;
    } else if (c == ')') {
      --depth;
    }
    if (c == ',' && depth == 0) {
      out.push_back(current);
      current.clear();
    } else {
      current.push_back(c);
    }
  }
  out.push_back(current);
  return out;
}

} // namespace

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int k = 2; k <= n; ++k) {
    if (f > std::numeric_limits<std::uint64_t>::max() / static_cast<std::uint64_t>(k)) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    f *= static_cast<std::uint64_t>(k);
  }
  return f;
}

GroupSpec::GroupSpec(int degree, GroupVariant variant)
    : degree_(degree), variant_(std::move(variant)), closure_(std::make_shared<Closure>()) {
  if (degree_ < 1) {
    throw DomainError("group degree must be positive");
  }
  std::visit(overloaded{
                 [](const Symmetric&) {},
                 [](const Alternating&) {},
                 [this](const CyclicGeneratedBy& c) {
                   if (c.generator.degree() != degree_) {
                     throw DomainError("cyclic generator degree differs from group degree");
                   }
                 },
                 [this](PointwiseStabilizer& s) {
                   for (Point p : s.points) {
                     if (p < 1 || p > degree_) {
                       throw DomainError("stabilized point " + std::to_string(p) + " outside [1, " +
                                         std::to_string(degree_) + "]");
                     }
                   }
                   std::sort(s.points.begin(), s.points.end());
                   s.points.erase(std::unique(s.points.begin(), s.points.end()), s.points.end());
                 },
                 [this](const GeneratedBy& g) {
                   for (const auto& p : g.generators) {
                     if (p.degree() != degree_) {
                       throw DomainError("generator degree differs from group degree");
                     }
                   }
                 },
             },
             variant_);
}

GroupSpec GroupSpec::cyclic(Permutation generator) {
  const int n = generator.degree();
  return {n, CyclicGeneratedBy{std::move(generator)}};
}

GroupSpec GroupSpec::stabilizer(int n, std::vector<Point> points) { return {n, PointwiseStabilizer{std::move(points)}}; }

GroupSpec GroupSpec::generated_by(int n, std::vector<Permutation> generators) {
  return {n, GeneratedBy{std::move(generators)}};
}

GroupSpec GroupSpec::parse(std::string_view text, int default_degree) {
  std::string_view body = text;
  int n = default_degree;
  if (const auto at = body.rfind('@'); at != std::string_view::npos) {
    n = parse_int(body.substr(at + 1), text);
    body = body.substr(0, at);
  }
  if (body.size() >= 2 && (body[0] == 'S' || body[0] == 'A') && body.find(':') == std::string_view::npos) {
    const int m = parse_int(body.substr(1), text);
    if (n != 0 && n != m) {
      throw ParseError("group '" + std::string(text) + "' conflicts with degree " + std::to_string(n));
    }
    return body[0] == 'S' ? symmetric(m) : alternating(m);
  }
  if (n < 1) {
    throw ParseError("group '" + std::string(text) + "' needs a degree (\"@n\" or --n)");
  }
  const auto colon = body.find(':');
  if (colon == std::string_view::npos) {
    throw ParseError("unknown group descriptor '" + std::string(text) + "'");
  }
  const auto kind = body.substr(0, colon);
  const auto args = body.substr(colon + 1);
  if (kind == "cyclic") {
    return {n, CyclicGeneratedBy{Permutation::parse(args, n)}};
  }
  if (kind == "stab") {
    std::vector<Point> points;
    std::size_t start = 0;
    while (start <= args.size()) {
      const auto comma = args.find(',', start);
      const auto piece = args.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
      if (!piece.empty()) {
        points.push_back(parse_int(piece, text));
      }
      if (comma == std::string_view::npos) {
        break;
      }
      start = comma + 1;
    }
    try {
      return stabilizer(n, std::move(points));
    } catch (const DomainError& e) {
      throw ParseError(e.what());
    }
  }
  if (kind == "gens") {
    std::vector<Permutation> gens;
    for (const auto& piece : split_generators(args)) {
      gens.push_back(Permutation::parse(piece, n));
    }
    return generated_by(n, std::move(gens));
  }
  throw ParseError("unknown group kind '" + std::string(kind) + "'");
}

std::string GroupSpec::to_string() const {
  const std::string at = "@" + std::to_string(degree_);
  return std::visit(overloaded{
                        [&](const Symmetric&) { return "S" + std::to_string(degree_); },
                        [&](const Alternating&) { return "A" + std::to_string(degree_); },
                        [&](const CyclicGeneratedBy& c) { return "cyclic:" + c.generator.to_string() + at; },
                        [&](const PointwiseStabilizer& s) {
                          std::string out = "stab:";
                          for (std::size_t k = 0; k < s.points.size(); ++k) {
                            out += (k ? "," : "") + std::to_string(s.points[k]);
                          }
                          return out + at;
                        },
                        [&](const GeneratedBy& g) {
                          std::string out = "gens:";
                          for (std::size_t k = 0; k < g.generators.size(); ++k) {
                            out += (k ? "," : "") + g.generators[k].to_string();
                          }
                          return out + at;
                        },
                    },
                    variant_);
}

const std::vector<Permutation>& GroupSpec::closure() const {
  std::call_once(closure_->once, [this] {
    const auto& g = std::get<GeneratedBy>(variant_);
    closure_->sorted = generate_closure(degree_, g.generators, kDefaultEnumerationCap);
  });
  return closure_->sorted;
}

bool GroupSpec::contains(const Permutation& sigma) const {
  if (sigma.degree() != degree_) {
    throw DomainError("contains: degree mismatch (" + std::to_string(sigma.degree()) + " vs " +
                      std::to_string(degree_) + ")");
  }
  return std::visit(overloaded{
                        [](const Symmetric&) { return true; },
                        [&](const Alternating&) { return sigma.sign() == 1; },
                        [&](const CyclicGeneratedBy& c) {
                          // sigma must be a power of g: walk the powers.
                          Permutation power(degree_);
                          const std::uint64_t order = c.generator.order();
                          for (std::uint64_t k = 0; k < order; ++k) {
                            if (power == sigma) {
                              return true;
                            }
                            power = c.generator * power;
                          }
                          return false;
                        },
                        [&](const PointwiseStabilizer& s) {
                          return std::all_of(s.points.begin(), s.points.end(),
                                             [&](Point p) { return sigma.fixes(p); });
                        },
                        [&](const GeneratedBy&) {
                          const auto& elems = closure();
                          return std::binary_search(elems.begin(), elems.end(), sigma);
                        },
                    },
                    variant_);
}

std::uint64_t GroupSpec::order() const {
  return std::visit(overloaded{
                        [&](const Symmetric&) { return factorial(degree_); },
                        [&](const Alternating&) { return degree_ == 1 ? std::uint64_t{1} : factorial(degree_) / 2; },
                        [](const CyclicGeneratedBy& c) { return c.generator.order(); },
                        [&](const PointwiseStabilizer& s) {
                          return factorial(degree_ - static_cast<int>(s.points.size()));
                        },
                        [&](const GeneratedBy&) { return static_cast<std::uint64_t>(closure().size()); },
                    },
                    variant_);
}

void for_each_element(const GroupSpec& group, const std::function<void(const Permutation&)>& visit,
                      std::uint64_t cap) {
  const int n = group.degree();
  std::visit(overloaded{
                 [&](const Symmetric&) {
                   require_cap(group.order(), cap);
                   std::vector<Point> images(static_cast<std::size_t>(n));
                   std::iota(images.begin(), images.end(), 1);
                   do {
                     visit(Permutation::from_images(images));
                   } while (std::next_permutation(images.begin(), images.end()));
                 },
                 [&](const Alternating&) {
                   require_cap(group.order(), cap);
                   std::vector<Point> images(static_cast<std::size_t>(n));
                   std::iota(images.begin(), images.end(), 1);
                   do {
                     auto p = Permutation::from_images(images);
                     if (p.sign() == 1) {
                       visit(p);
                     }
                   } while (std::next_permutation(images.begin(), images.end()));
                 },
                 [&](const CyclicGeneratedBy& c) {
                   require_cap(group.order(), cap);
                   std::vector<Permutation> elems;
                   Permutation power(n);
                   for (std::uint64_t k = 0; k < c.generator.order(); ++k) {
                     elems.push_back(power);
                     power = c.generator * power;
                   }
                   std::sort(elems.begin(), elems.end());
                   for (const auto& e : elems) {
                     visit(e);
                   }
                 },
                 [&](const PointwiseStabilizer& s) {
                   require_cap(group.order(), cap);
                   const auto moving = free_points(n, s.points);
                   std::vector<Point> values = moving;
                   std::vector<Point> images(static_cast<std::size_t>(n));
                   std::iota(images.begin(), images.end(), 1);
                   do {
                     for (std::size_t k = 0; k < moving.size(); ++k) {
                       images[static_cast<std::size_t>(moving[k] - 1)] = values[k];
                     }
                     visit(Permutation::from_images(images));
                   } while (std::next_permutation(values.begin(), values.end()));
                 },
                 [&](const GeneratedBy& g) {
                   const auto elems = generate_closure(n, g.generators, cap);
                   for (const auto& e : elems) {
                     visit(e);
                   }
                 },
             },
             group.variant());
}

FiniteSubgroup enumerate(const GroupSpec& group, std::uint64_t cap) {
  FiniteSubgroup out{group, {}};
  for_each_element(group, [&](const Permutation& p) { out.elements.push_back(p); }, cap);
  return out;
}

bool contains(const GroupSpec& group, const Permutation& sigma) { return group.contains(sigma); }

} // namespace permfunc
