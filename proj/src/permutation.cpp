#include "permfunc/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "permfunc/errors.hpp"

namespace permfunc {

namespace {

void require_same_degree(const Permutation& p, const Permutation& q, const char* what) {
  if (p.degree() != q.degree()) {
    throw DomainError(std::string(what) + ": degree mismatch (" + std::to_string(p.degree()) + " vs " +
                      std::to_string(q.degree()) + ")");
  }
}

} // namespace

Permutation::Permutation(int n) {
  if (n < 1 || n > 65535) {
    throw DomainError("permutation degree must be in [1, 65535], got " + std::to_string(n));
  }
  images_.resize(static_cast<std::size_t>(n));
  std::iota(images_.begin(), images_.end(), std::uint16_t{0});
}

Permutation Permutation::from_images(std::span<const Point> images) {
  const int n = static_cast<int>(images.size());
  Permutation p(n);
  std::vector<bool> seen(images.size(), false);
  for (std::size_t i = 0; i < images.size(); ++i) {
    const Point v = images[i];
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v - 1)]) {
      throw ParseError("image sequence is not a bijection on [" + std::to_string(n) + "]");
    }
    seen[static_cast<std::size_t>(v - 1)] = true;
    p.images_[i] = static_cast<std::uint16_t>(v - 1);
  }
  return p;
}

Permutation Permutation::from_cycles(int n, const std::vector<std::vector<Point>>& cycles) {
  Permutation result(n);
  // Rightmost cycle acts first.
  for (auto it = cycles.rbegin(); it != cycles.rend(); ++it) {
    const auto& cycle = *it;
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (Point v : cycle) {
      if (v < 1 || v > n) {
        throw ParseError("point " + std::to_string(v) + " outside [1, " + std::to_string(n) + "]");
      }
      if (seen[static_cast<std::size_t>(v - 1)]) {
        throw ParseError("point " + std::to_string(v) + " repeated within a cycle");
      }
      seen[static_cast<std::size_t>(v - 1)] = true;
    }
    if (cycle.size() < 2) {
      continue;
    }
    Permutation c(n);
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      c.images_[static_cast<std::size_t>(cycle[k] - 1)] =
          static_cast<std::uint16_t>(cycle[(k + 1) % cycle.size()] - 1);
    }
    result = c * result;
  }
  return result;
}

Permutation Permutation::parse(std::string_view text, int n) {
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
    }
  };
  skip_ws();
  if (text.substr(pos).starts_with("id")) {
    pos += 2;
    skip_ws();
    if (pos != text.size()) {
      throw ParseError("trailing characters after 'id' in '" + std::string(text) + "'");
    }
    return Permutation(n);
  }
  std::vector<std::vector<Point>> cycles;
  while (true) {
    skip_ws();
    if (pos == text.size()) {
      break;
    }
    if (text[pos] != '(') {
      throw ParseError("expected '(' in cycle notation '" + std::string(text) + "'");
    }
    ++pos;
    std::vector<Point> cycle;
    while (true) {
      skip_ws();
      if (pos == text.size()) {
        throw ParseError("unterminated cycle in '" + std::string(text) + "'");
      }
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[pos]))) {
        throw ParseError("unexpected character '" + std::string(1, text[pos]) + "' in '" + std::string(text) + "'");
      }
      long value = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        value = value * 10 + (text[pos] - '0');
        if (value > 65535) {
          throw ParseError("point out of range in '" + std::string(text) + "'");
        }
        ++pos;
      }
      cycle.push_back(static_cast<Point>(value));
    }
    cycles.push_back(std::move(cycle));
  }
  if (cycles.empty()) {
    throw ParseError("empty permutation text; use 'id' for the identity");
  }
  return from_cycles(n, cycles);
}

std::vector<Point> Permutation::images() const {
  std::vector<Point> out(images_.size());
  std::transform(images_.begin(), images_.end(), out.begin(), [](std::uint16_t v) { return Point(v) + 1; });
  return out;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) {
      return false;
    }
  }
  return true;
}

bool Permutation::is_involution() const {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[images_[i]] != i) {
      return false;
    }
  }
  return true;
}

std::vector<Point> Permutation::fixed_points() const {
  std::vector<Point> out;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] == i) {
      out.push_back(static_cast<Point>(i) + 1);
    }
  }
  return out;
}

int Permutation::fixed_count() const {
  int count = 0;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    count += images_[i] == i ? 1 : 0;
  }
  return count;
}

int Permutation::sign() const {
  const auto cs = cycle_structure(*this);
  int parity = 0;
  for (int l : cs.lengths) {
    parity += l - 1;
  }
  return parity % 2 == 0 ? 1 : -1;
}

std::uint64_t Permutation::order() const {
  std::uint64_t result = 1;
  for (int l : cycle_structure(*this).lengths) {
    result = std::lcm(result, static_cast<std::uint64_t>(l));
  }
  return result;
}

Permutation Permutation::inverse() const {
  Permutation out(degree());
  for (std::size_t i = 0; i < images_.size(); ++i) {
    out.images_[images_[i]] = static_cast<std::uint16_t>(i);
  }
  return out;
}

Permutation Permutation::pow(std::int64_t e) const {
  if (e < 0) {
    return inverse().pow(-e);
  }
  Permutation result(degree());
  Permutation base = *this;
  while (e > 0) {
    if (e & 1) {
      result = result * base;
    }
    e >>= 1;
    if (e > 0) {
      base = base * base;
    }
  }
  return result;
}

std::string Permutation::to_string() const {
  const auto dec = disjoint_cycles(*this);
  if (dec.cycles.empty()) {
    return "id";
  }
  std::ostringstream os;
  for (const auto& cycle : dec.cycles) {
    os << '(';
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      os << (k == 0 ? "" : " ") << cycle[k];
    }
    os << ')';
  }
  return os.str();
}

Permutation operator*(const Permutation& p, const Permutation& q) {
  require_same_degree(p, q, "compose");
  Permutation out(p.degree());
  for (std::size_t i = 0; i < q.images_.size(); ++i) {
    out.images_[i] = p.images_[q.images_[i]];
  }
  return out;
}

Permutation compose(const Permutation& p, const Permutation& q) { return p * q; }

Permutation inverse(const Permutation& p) { return p.inverse(); }

Permutation CycleDecomposition::to_permutation() const {
  return product_of(cycles.empty() ? 0 : ~std::uint64_t{0});
}

Permutation CycleDecomposition::product_of(std::uint64_t mask) const {
  std::vector<Point> images(static_cast<std::size_t>(degree));
  std::iota(images.begin(), images.end(), 1);
  // Disjoint cycles commute, so each one can be written in place.
  for (std::size_t k = 0; k < cycles.size(); ++k) {
    if (k < 64 && (mask >> k & 1U) == 0) {
      continue;
    }
    const auto& c = cycles[k];
    for (std::size_t j = 0; j < c.size(); ++j) {
      images[static_cast<std::size_t>(c[j] - 1)] = c[(j + 1) % c.size()];
    }
  }
  return Permutation::from_images(images);
}

int CycleStructure::degree() const {
  return std::accumulate(lengths.begin(), lengths.end(), fixed_count);
}

CycleDecomposition disjoint_cycles(const Permutation& p) {
  CycleDecomposition dec;
  dec.degree = p.degree();
  std::vector<bool> visited(static_cast<std::size_t>(p.degree()), false);
  // Scanning from the smallest unvisited point yields the canonical order directly.
  for (Point start = 1; start <= p.degree(); ++start) {
    if (visited[static_cast<std::size_t>(start - 1)]) {
      continue;
    }
    if (p.fixes(start)) {
      visited[static_cast<std::size_t>(start - 1)] = true;
      dec.fixed_points.push_back(start);
      continue;
    }
    std::vector<Point> cycle;
    for (Point v = start; !visited[static_cast<std::size_t>(v - 1)]; v = p(v)) {
      visited[static_cast<std::size_t>(v - 1)] = true;
      cycle.push_back(v);
    }
    dec.cycles.push_back(std::move(cycle));
  }
  return dec;
}

CycleStructure cycle_structure(const Permutation& p) {
  const auto dec = disjoint_cycles(p);
  CycleStructure cs;
  cs.fixed_count = static_cast<int>(dec.fixed_points.size());
  for (const auto& c : dec.cycles) {
    cs.lengths.push_back(static_cast<int>(c.size()));
  }
  std::sort(cs.lengths.begin(), cs.lengths.end(), std::greater<>());
  return cs;
}

void for_each_x_set(const Permutation& theta, const Permutation& tau,
                    const std::function<void(const XSetElement&)>& visit) {
  require_same_degree(theta, tau, "x_set");
  const auto dec = disjoint_cycles(theta.inverse() * tau);
  const int r = dec.cycle_count();
  if (r > kMaxXSetCycles) {
    throw DomainError("x_set: theta^-1 tau has " + std::to_string(r) + " cycles, limit is 62");
  }
  std::vector<int> lengths;
  for (const auto& c : dec.cycles) {
    lengths.push_back(static_cast<int>(c.size()));
  }
  const std::uint64_t count = std::uint64_t{1} << r;
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    XSetElement e{theta * dec.product_of(mask), mask, 0};
    for (int k = 0; k < r; ++k) {
      if (mask >> k & 1U) {
        e.t_sigma += lengths[static_cast<std::size_t>(k)];
      }
    }
    visit(e);
  }
}

std::vector<XSetElement> x_set(const Permutation& theta, const Permutation& tau) {
  std::vector<XSetElement> out;
  for_each_x_set(theta, tau, [&](const XSetElement& e) { out.push_back(e); });
  return out;
}

PartialMap shift_embed(const Permutation& f, int x_offset, int y_offset) {
  PartialMap map;
  for (Point i = 1; i <= f.degree(); ++i) {
    map.pairs.emplace_back(x_offset + i, y_offset + f(i));
  }
  return map;
}

Permutation disjoint_union(std::span<const PartialMap> maps, int total) {
  std::vector<Point> images(static_cast<std::size_t>(total), 0);
  std::vector<bool> hit(static_cast<std::size_t>(total), false);
  for (const auto& map : maps) {
    for (const auto& [from, to] : map.pairs) {
      if (from < 1 || from > total || to < 1 || to > total) {
        throw DomainError("disjoint_union: point outside [1, " + std::to_string(total) + "]");
      }
      if (images[static_cast<std::size_t>(from - 1)] != 0) {
        throw DomainError("disjoint_union: domains overlap at " + std::to_string(from));
      }
      if (hit[static_cast<std::size_t>(to - 1)]) {
        throw DomainError("disjoint_union: images overlap at " + std::to_string(to));
      }
      images[static_cast<std::size_t>(from - 1)] = to;
      hit[static_cast<std::size_t>(to - 1)] = true;
    }
  }
  if (std::find(images.begin(), images.end(), 0) != images.end()) {
    throw DomainError("disjoint_union: maps do not cover [1, " + std::to_string(total) + "]");
  }
  return Permutation::from_images(images);
}

} // namespace permfunc

std::size_t std::hash<permfunc::Permutation>::operator()(const permfunc::Permutation& p) const noexcept {
  std::size_t h = 1469598103934665603ULL;
  for (auto v : p.raw()) {
    h = (h ^ v) * 1099511628211ULL;
  }
  return h;
}
