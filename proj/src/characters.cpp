#include "permfunc/characters.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <numeric>

#include <nlohmann/json.hpp>

#include "permfunc/errors.hpp"
#include "permfunc/groups.hpp"
#include "permfunc/json_io.hpp"

namespace permfunc {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

using MnKey = std::pair<std::vector<int>, std::vector<int>>;

std::mutex& mn_mutex() {
  static std::mutex m;
  return m;
}

std::map<MnKey, std::int64_t>& mn_memo() {
  static std::map<MnKey, std::int64_t> memo;
  return memo;
}

// mu holds the remaining cycle lengths (fixed points as 1s), largest first.
std::int64_t mn_recursive(const std::vector<int>& lambda, const std::vector<int>& mu) {
  if (mu.empty()) {
    return lambda.empty() ? 1 : 0;
  }
  MnKey key{lambda, mu};
  {
    std::lock_guard lock(mn_mutex());
    if (auto it = mn_memo().find(key); it != mn_memo().end()) {
      return it->second;
    }
  }
  const int strip = mu.front();
  const std::vector<int> rest(mu.begin() + 1, mu.end());
  const int k = static_cast<int>(lambda.size());
  std::vector<int> beta(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) {
    beta[static_cast<std::size_t>(i)] = lambda[static_cast<std::size_t>(i)] + (k - 1 - i);
  }
  std::int64_t total = 0;
  for (int i = 0; i < k; ++i) {
    const int from = beta[static_cast<std::size_t>(i)];
    const int to = from - strip;
    if (to < 0 || std::find(beta.begin(), beta.end(), to) != beta.end()) {
      continue;
    }
    // Leg length of the removed border strip.
    const auto height = std::count_if(beta.begin(), beta.end(), [&](int b) { return b > to && b < from; });
    std::vector<int> moved = beta;
    moved[static_cast<std::size_t>(i)] = to;
    std::sort(moved.begin(), moved.end(), std::greater<>());
    std::vector<int> shrunk;
    for (int j = 0; j < k; ++j) {
      const int part = moved[static_cast<std::size_t>(j)] - (k - 1 - j);
      if (part > 0) {
        shrunk.push_back(part);
      }
    }
    const std::int64_t sub = mn_recursive(shrunk, rest);
    total += (height % 2 == 0 ? sub : -sub);
  }
  std::lock_guard lock(mn_mutex());
  mn_memo().emplace(std::move(key), total);
  return total;
}

GaussianRational quarter_turn(std::int64_t quarters) {
  switch (((quarters % 4) + 4) % 4) {
    case 0: return {1, 0};
    case 1: return {0, 1};
    case 2: return {-1, 0};
    default: return {0, -1};
  }
}

// Exponent j with sigma = g^j, or -1.
std::int64_t discrete_log(const Permutation& generator, const Permutation& sigma) {
  if (generator.degree() != sigma.degree()) {
    throw DomainError("character evaluated on a permutation of the wrong degree");
  }
  Permutation power(generator.degree());
  const auto order = static_cast<std::int64_t>(generator.order());
  for (std::int64_t j = 0; j < order; ++j) {
    if (power == sigma) {
      return j;
    }
    power = generator * power;
  }
  return -1;
}

const GaussianRational& table_lookup(const CharacterTable& table, const Permutation& sigma) {
  if (sigma.degree() != table.degree) {
    throw DomainError("character table degree differs from permutation degree");
  }
  const auto it = table.values.find(sigma);
  if (it == table.values.end()) {
    throw DomainError("permutation " + sigma.to_string() + " is not in the character table's domain");
  }
  return it->second;
}

void validate_table(const CharacterTable& table) {
  const Permutation id(table.degree);
  const auto id_it = table.values.find(id);
  if (id_it == table.values.end()) {
    throw DomainError("character table has no value at the identity");
  }
  const GaussianRational& chi_id = id_it->second;
  if (!chi_id.is_real() || sgn(chi_id.re()) <= 0 || chi_id.re().get_den() != 1) {
    throw DomainError("character value at the identity must be a positive integer");
  }
  const Rational bound = chi_id.norm();
  for (const auto& [g, value] : table.values) {
    if (value.norm() > bound) {
      throw DomainError("|chi(" + g.to_string() + ")| exceeds chi(id)");
    }
    if (!table.values.contains(g.inverse())) {
      throw DomainError("character table domain is not closed under inverses");
    }
    for (const auto& [h, unused] : table.values) {
      if (!table.values.contains(g * h)) {
        throw DomainError("character table domain is not closed under composition");
      }
      const auto conj_it = table.values.find(h * g * h.inverse());
      if (conj_it == table.values.end()) {
        throw DomainError("character table domain is not closed under conjugation");
      }
      if (!(conj_it->second == value)) {
        throw DomainError("character table is not a class function at " + g.to_string());
      }
    }
  }
}

} // namespace

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  if (std::any_of(parts_.begin(), parts_.end(), [](int p) { return p <= 0; })) {
    throw DomainError("partition parts must be positive");
  }
  if (!std::is_sorted(parts_.begin(), parts_.end(), std::greater<>())) {
    throw DomainError("partition parts must be weakly decreasing");
  }
}

Partition Partition::parse(std::string_view text) {
  std::string body(text);
  std::erase_if(body, [](char c) { return c == ' ' || c == '[' || c == ']'; });
  std::vector<int> parts;
  std::size_t start = 0;
  while (start < body.size()) {
    auto comma = body.find(',', start);
    if (comma == std::string::npos) {
      comma = body.size();
    }
    const auto piece = body.substr(start, comma - start);
    if (piece.empty() || piece.size() > 6 || !std::all_of(piece.begin(), piece.end(), ::isdigit)) {
      throw ParseError("malformed partition '" + std::string(text) + "'");
    }
    parts.push_back(std::stoi(piece));
    start = comma + 1;
  }
  if (parts.empty()) {
    throw ParseError("empty partition '" + std::string(text) + "'");
  }
  try {
    return Partition(std::move(parts));
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

std::string Partition::to_string() const {
  std::string out = "[";
  for (std::size_t k = 0; k < parts_.size(); ++k) {
    out += (k ? "," : "") + std::to_string(parts_[k]);
  }
  return out + "]";
}

std::vector<Partition> partitions(int n) {
  std::vector<Partition> out;
  std::vector<int> current;
  auto rec = [&](auto&& self, int remaining, int max_part) -> void {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      current.push_back(p);
      self(self, remaining - p, p);
      current.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

std::int64_t mn_value(const Partition& lambda, const CycleStructure& mu) {
  if (lambda.size() != mu.degree()) {
    throw DomainError("partition size " + std::to_string(lambda.size()) + " differs from class degree " +
                      std::to_string(mu.degree()));
  }
  std::vector<int> lengths = mu.lengths;
  lengths.insert(lengths.end(), static_cast<std::size_t>(mu.fixed_count), 1);
  std::sort(lengths.begin(), lengths.end(), std::greater<>());
  return mn_recursive(lambda.parts(), lengths);
}

CharacterSpec CharacterSpec::table(CharacterTable table, bool validate) {
  if (validate) {
    validate_table(table);
  }
  return {TableCharacter{std::make_shared<const CharacterTable>(std::move(table))}};
}

CharacterSpec CharacterSpec::table_from_json(std::string_view json_text, int degree, bool validate) {
  const auto doc = parse_json_document(json_text, "character table");
  CharacterTable table;
  table.degree = degree;
  for (const auto& [key, entry] : doc.items()) {
    const GaussianRational value = scalar_from_json(entry);
    if (!table.values.emplace(Permutation::parse(key, degree), value).second) {
      throw ParseError("duplicate character table entry '" + key + "'");
    }
  }
  return CharacterSpec::table(std::move(table), validate);
}

CharacterSpec CharacterSpec::parse(std::string_view text) {
  if (text == "trivial") {
    return trivial();
  }
  if (text == "sign") {
    return sign();
  }
  if (text.starts_with("irr:")) {
    return irreducible(Partition::parse(text.substr(4)));
  }
  throw ParseError("unknown character '" + std::string(text) + "'");
}

std::string CharacterSpec::to_string() const {
  return std::visit(overloaded{
                        [](const TrivialCharacter&) -> std::string { return "trivial"; },
                        [](const SignCharacter&) -> std::string { return "sign"; },
                        [](const IrreducibleCharacter& c) { return "irr:" + c.shape.to_string(); },
                        [](const TableCharacter&) -> std::string { return "table"; },
                        [](const LinearOfCyclic& c) {
                          return "linear:" + c.generator.to_string() + "^" + std::to_string(c.index);
                        },
                    },
                    variant_);
}

GaussianRational evaluate(const CharacterSpec& chi, const Permutation& sigma) {
  return std::visit(overloaded{
                        [](const TrivialCharacter&) { return GaussianRational(1); },
                        [&](const SignCharacter&) { return GaussianRational(sigma.sign()); },
                        [&](const IrreducibleCharacter& c) {
                          if (c.shape.size() != sigma.degree()) {
                            throw DomainError("irreducible character " + c.shape.to_string() +
                                              " evaluated in degree " + std::to_string(sigma.degree()));
                          }
                          return GaussianRational(static_cast<long>(mn_value(c.shape, cycle_structure(sigma))));
                        },
                        [&](const TableCharacter& c) { return table_lookup(*c.table, sigma); },
                        [&](const LinearOfCyclic& c) {
                          const std::int64_t j = discrete_log(c.generator, sigma);
                          if (j < 0) {
                            throw DomainError(sigma.to_string() + " is not a power of " + c.generator.to_string());
                          }
                          const auto order = static_cast<std::int64_t>(c.generator.order());
                          const std::int64_t e = ((j * c.index) % order + order) % order;
                          // zeta^e = exp(2 pi i e / order) is Gaussian only at quarter turns.
                          if ((4 * e) % order != 0) {
                            throw DomainError("character value exp(2 pi i " + std::to_string(e) + "/" +
                                              std::to_string(order) + ") is not a Gaussian rational");
                          }
                          return quarter_turn(4 * e / order);
                        },
                    },
                    chi.variant());
}

GaussianRational conjugate_evaluate(const CharacterSpec& chi, const Permutation& sigma) {
  return evaluate(chi, sigma.inverse());
}

std::complex<double> evaluate_numeric(const CharacterSpec& chi, const Permutation& sigma) {
  if (const auto* c = std::get_if<LinearOfCyclic>(&chi.variant())) {
    const std::int64_t j = discrete_log(c->generator, sigma);
    if (j < 0) {
      throw DomainError(sigma.to_string() + " is not a power of " + c->generator.to_string());
    }
    const auto order = static_cast<std::int64_t>(c->generator.order());
    const std::int64_t e = ((j * c->index) % order + order) % order;
    if ((4 * e) % order == 0) {
      return quarter_turn(4 * e / order).to_complex();
    }
    return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(e) / static_cast<double>(order));
  }
  return evaluate(chi, sigma).to_complex();
}

std::int64_t degree(const CharacterSpec& chi, int n) {
  if (const auto* c = std::get_if<IrreducibleCharacter>(&chi.variant())) {
    return mn_value(c->shape, CycleStructure{{}, c->shape.size()});
  }
  if (const auto* c = std::get_if<TableCharacter>(&chi.variant())) {
    return table_lookup(*c->table, Permutation(c->table->degree)).re().get_num().get_si();
  }
  if (const auto* c = std::get_if<LinearOfCyclic>(&chi.variant())) {
    n = c->generator.degree();
  }
  return evaluate(chi, Permutation(n)).re().get_num().get_si();
}

bool is_linear(const CharacterSpec& chi, int n) { return degree(chi, n) == 1; }

} // namespace permfunc
