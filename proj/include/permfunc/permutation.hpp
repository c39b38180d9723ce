#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace permfunc {

using Point = int;

/// Bijection on [n] = {1, ..., n}. Points are 1-based at every interface;
/// storage is 0-based. The degree is part of the value, so id in S_4 and
/// id in S_6 compare unequal.
class Permutation {
public:
  /// Identity of degree n (n >= 1).
  explicit Permutation(int n = 1);
  /// images[i - 1] = sigma(i), 1-based values. Throws ParseError when not a bijection on [n].
  static Permutation from_images(std::span<const Point> images);
  /// Product of the given cycles (1-based points), applied right to left.
  static Permutation from_cycles(int n, const std::vector<std::vector<Point>>& cycles);
  /// "(1 5 3)(2 6)" or "id"; degree supplied separately.
  static Permutation parse(std::string_view text, int n);

  [[nodiscard]] int degree() const { return static_cast<int>(images_.size()); }
  /// sigma(i) for 1-based i.
  [[nodiscard]] Point operator()(Point i) const { return images_[static_cast<std::size_t>(i - 1)] + 1; }
  /// 1-based image sequence.
  [[nodiscard]] std::vector<Point> images() const;

  [[nodiscard]] bool is_identity() const;
  [[nodiscard]] bool is_involution() const;
  [[nodiscard]] bool fixes(Point i) const { return (*this)(i) == i; }
  [[nodiscard]] std::vector<Point> fixed_points() const;
  [[nodiscard]] int fixed_count() const;
  /// +1 or -1.
  [[nodiscard]] int sign() const;
  /// Least common multiple of the cycle lengths.
  [[nodiscard]] std::uint64_t order() const;
  [[nodiscard]] Permutation inverse() const;
  [[nodiscard]] Permutation pow(std::int64_t e) const;

  /// Canonical cycle notation: "(1 5 3)(2 6)", or "id".
  [[nodiscard]] std::string to_string() const;

  /// (p * q)(i) = p(q(i)).
  friend Permutation operator*(const Permutation& p, const Permutation& q);
  friend bool operator==(const Permutation& a, const Permutation& b) = default;
  /// Lexicographic on image sequences (degree first).
  friend auto operator<=>(const Permutation& a, const Permutation& b) {
    if (auto c = a.images_.size() <=> b.images_.size(); c != 0) {
      return c;
    }
    return a.images_ <=> b.images_;
  }
  friend std::ostream& operator<<(std::ostream& os, const Permutation& p) { return os << p.to_string(); }

  /// 0-based raw images, for hashing and tight loops.
  [[nodiscard]] const std::vector<std::uint16_t>& raw() const { return images_; }

private:
  std::vector<std::uint16_t> images_;
};

Permutation compose(const Permutation& p, const Permutation& q);
Permutation inverse(const Permutation& p);

struct CycleDecomposition {
  int degree = 0;
  /// Each cycle starts at its minimal element; cycles sorted by that element.
  std::vector<std::vector<Point>> cycles;
  std::vector<Point> fixed_points;

  [[nodiscard]] int cycle_count() const { return static_cast<int>(cycles.size()); }
  /// Product of the cycles; reproduces the source permutation.
  [[nodiscard]] Permutation to_permutation() const;
  /// Product of the cycles selected by the bits of mask (bit k = cycles[k]).
  [[nodiscard]] Permutation product_of(std::uint64_t mask) const;
};

struct CycleStructure {
  /// Nontrivial cycle lengths, sorted descending.
  std::vector<int> lengths;
  int fixed_count = 0;

  [[nodiscard]] int degree() const;
  friend bool operator==(const CycleStructure&, const CycleStructure&) = default;
};

CycleDecomposition disjoint_cycles(const Permutation& p);
CycleStructure cycle_structure(const Permutation& p);

/// One member of X(theta, tau) = { sigma : sigma(i) in {theta(i), tau(i)} for all i }.
struct XSetElement {
  Permutation sigma;
  /// Bit k set when cycle k of the canonical decomposition of theta^-1 tau is chosen.
  std::uint64_t chosen = 0;
  /// Number of points moved through tau; equals the total length of chosen cycles.
  int t_sigma = 0;
};

inline constexpr int kMaxXSetCycles = 62;

/// The 2^r elements theta * prod_{k in I} C_k, ordered by increasing bitmask I.
/// Throws DomainError on degree mismatch or r > 62.
std::vector<XSetElement> x_set(const Permutation& theta, const Permutation& tau);

/// Visits the same elements as x_set without materialising the list.
void for_each_x_set(const Permutation& theta, const Permutation& tau,
                    const std::function<void(const XSetElement&)>& visit);

/// Partial map between finite point sets, stored as (source, target) pairs.
struct PartialMap {
  std::vector<std::pair<Point, Point>> pairs;
};

/// f_{x,y}: x + i -> y + f(i) for i in [n].
PartialMap shift_embed(const Permutation& f, int x_offset, int y_offset);

/// Extension of maps with pairwise disjoint domains into a permutation of
/// [total]. Throws DomainError on overlapping domains or images, or when the
/// union does not cover [total].
Permutation disjoint_union(std::span<const PartialMap> maps, int total);

} // namespace permfunc

template <>
struct std::hash<permfunc::Permutation> {
  std::size_t operator()(const permfunc::Permutation& p) const noexcept;
};
