#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "permfunc/permutation.hpp"

namespace permfunc {

inline constexpr std::uint64_t kDefaultEnumerationCap = 3'628'800; // 10!

struct Symmetric {};
struct Alternating {};
struct CyclicGeneratedBy {
  Permutation generator;
};
/// Permutations fixing every listed point.
struct PointwiseStabilizer {
  std::vector<Point> points;
};
struct GeneratedBy {
  std::vector<Permutation> generators;
};

using GroupVariant = std::variant<Symmetric, Alternating, CyclicGeneratedBy, PointwiseStabilizer, GeneratedBy>;

/// Symbolic subgroup of S_n. Membership is answered by a predicate where the
/// variant admits one; GeneratedBy computes its closure once, on first use,
/// and shares it between copies.
class GroupSpec {
public:
  GroupSpec(int degree, GroupVariant variant);

  static GroupSpec symmetric(int n) { return {n, Symmetric{}}; }
  static GroupSpec alternating(int n) { return {n, Alternating{}}; }
  static GroupSpec cyclic(Permutation generator);
  static GroupSpec stabilizer(int n, std::vector<Point> points);
  static GroupSpec generated_by(int n, std::vector<Permutation> generators);

  /// "S6", "A6", "cyclic:(1 2 3 4)", "stab:1,3,5@6", "gens:(1 2),(1 2 3)@3".
  /// The "@n" suffix is optional when default_degree is given.
  static GroupSpec parse(std::string_view text, int default_degree = 0);
  [[nodiscard]] std::string to_string() const;

  [[nodiscard]] int degree() const { return degree_; }
  [[nodiscard]] const GroupVariant& variant() const { return variant_; }

  /// Throws DomainError on degree mismatch.
  [[nodiscard]] bool contains(const Permutation& sigma) const;
  /// |G|, computed without enumeration except for GeneratedBy.
  [[nodiscard]] std::uint64_t order() const;

private:
  struct Closure;

  const std::vector<Permutation>& closure() const;

  int degree_;
  GroupVariant variant_;
  std::shared_ptr<Closure> closure_;
};

/// Enumerated subgroup. Elements are sorted lexicographically by image sequence.
struct FiniteSubgroup {
  GroupSpec spec;
  std::vector<Permutation> elements;

  [[nodiscard]] std::uint64_t order() const { return elements.size(); }
};

/// Streams the elements of G in lexicographic order. Throws DomainError when
/// |G| exceeds cap; nothing is visited in that case.
void for_each_element(const GroupSpec& group, const std::function<void(const Permutation&)>& visit,
                      std::uint64_t cap = kDefaultEnumerationCap);

FiniteSubgroup enumerate(const GroupSpec& group, std::uint64_t cap = kDefaultEnumerationCap);

bool contains(const GroupSpec& group, const Permutation& sigma);

std::uint64_t factorial(int n);

} // namespace permfunc
