#pragma once

#include <complex>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <unordered_map>
#include <variant>
#include <vector>

#include "permfunc/gaussian_rational.hpp"
#include "permfunc/permutation.hpp"

namespace permfunc {

/// Weakly decreasing positive parts.
class Partition {
public:
  explicit Partition(std::vector<int> parts);
  /// "[3,1]" or "3,1".
  static Partition parse(std::string_view text);

  [[nodiscard]] const std::vector<int>& parts() const { return parts_; }
  [[nodiscard]] int size() const;
  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

private:
  std::vector<int> parts_;
};

/// All partitions of n in reverse lexicographic order ([n] first, [1^n] last).
std::vector<Partition> partitions(int n);

/// Irreducible character value chi^lambda on the class with cycle type mu,
/// by border-strip removal. Results are memoised across calls.
std::int64_t mn_value(const Partition& lambda, const CycleStructure& mu);

struct TrivialCharacter {};
struct SignCharacter {};
struct IrreducibleCharacter {
  Partition shape;
};
/// Explicit values over an enumerated subgroup of S_n.
struct CharacterTable {
  int degree = 0;
  std::unordered_map<Permutation, GaussianRational> values;
};
struct TableCharacter {
  std::shared_ptr<const CharacterTable> table;
};
/// g^j -> zeta^(j * k) with zeta = exp(2 pi i / ord(g)).
struct LinearOfCyclic {
  Permutation generator;
  std::int64_t index = 1;
};

using CharacterVariant =
    std::variant<TrivialCharacter, SignCharacter, IrreducibleCharacter, TableCharacter, LinearOfCyclic>;

class CharacterSpec {
public:
  CharacterSpec(CharacterVariant v) : variant_(std::move(v)) {} // NOLINT(google-explicit-constructor)

  static CharacterSpec trivial() { return {TrivialCharacter{}}; }
  static CharacterSpec sign() { return {SignCharacter{}}; }
  static CharacterSpec irreducible(Partition shape) { return {IrreducibleCharacter{std::move(shape)}}; }
  static CharacterSpec linear_of_cyclic(Permutation generator, std::int64_t index) {
    return {LinearOfCyclic{std::move(generator), index}};
  }
  /// Checks that the domain is a subgroup, that values are constant on
  /// conjugacy classes of that subgroup and that |chi(g)| <= chi(id).
  /// Throws DomainError on failure unless validate is false.
  static CharacterSpec table(CharacterTable table, bool validate = true);
  /// JSON object mapping cycle notation to {"re": "p/q", "im": "p/q"}.
  static CharacterSpec table_from_json(std::string_view json_text, int degree, bool validate = true);
  /// "trivial", "sign", "irr:[3,1]"; tables are loaded separately.
  static CharacterSpec parse(std::string_view text);

  [[nodiscard]] const CharacterVariant& variant() const { return variant_; }
  [[nodiscard]] std::string to_string() const;

private:
  CharacterVariant variant_;
};

/// Exact chi(sigma). Throws DomainError when sigma is outside the character's
/// domain or the value is not a Gaussian rational.
GaussianRational evaluate(const CharacterSpec& chi, const Permutation& sigma);
/// conj(chi)(sigma) = chi(sigma^-1).
GaussianRational conjugate_evaluate(const CharacterSpec& chi, const Permutation& sigma);
/// Floating evaluation; defined for every variant including non-Gaussian
/// roots of unity.
std::complex<double> evaluate_numeric(const CharacterSpec& chi, const Permutation& sigma);
/// chi(id). For Irreducible this is the number of standard tableaux; other
/// variants need the degree n for the identity.
std::int64_t degree(const CharacterSpec& chi, int n);
/// chi(id) == 1.
bool is_linear(const CharacterSpec& chi, int n);

} // namespace permfunc
