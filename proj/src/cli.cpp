#include "permfunc/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <iomanip>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "permfunc/characters.hpp"
#include "permfunc/errors.hpp"
#include "permfunc/gmf.hpp"
#include "permfunc/groups.hpp"
#include "permfunc/json_io.hpp"
#include "permfunc/matrix.hpp"
#include "permfunc/permutation.hpp"

namespace permfunc::cli {

namespace {

struct Args {
  std::string a = "1";
  std::string b = "1";
  std::string theta = "id";
  std::string tau = "id";
  std::string pi = "id";
  std::string k = "1";
  std::string m = "0";
  int n = 0;
  std::string group;
  std::string character = "trivial";
  std::string method;
  std::string spec_path;
  bool json = false;
  unsigned threads = 1;
  int reps = 5;
};

class CheckFailed : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ParseError("cannot read '" + path + "'");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::vector<std::string> split_methods(const std::string& text, const std::string& fallback) {
  std::vector<std::string> out;
  std::stringstream ss(text.empty() ? fallback : text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) {
      out.push_back(item);
    }
  }
  return out;
}

struct Context {
  const Args& args;
  std::ostream& out;

  [[nodiscard]] int degree() const {
    if (args.n < 1) {
      throw ParseError("--n is required and must be positive");
    }
    return args.n;
  }
  [[nodiscard]] Permutation perm(const std::string& text) const { return Permutation::parse(text, degree()); }
  [[nodiscard]] GaussianRational scalar(const std::string& text) const { return GaussianRational::parse(text); }
  [[nodiscard]] GroupSpec group(int n) const {
    return args.group.empty() ? GroupSpec::symmetric(n) : GroupSpec::parse(args.group, n);
  }
  [[nodiscard]] CharacterSpec character(int n) const {
    if (args.character.starts_with("table:")) {
      return CharacterSpec::table_from_json(read_file(args.character.substr(6)), n);
    }
    return CharacterSpec::parse(args.character);
  }

  // Prints one result, or "method: value" lines when several routes ran;
  // differing values across routes count as a failed check.
  void print_results(const std::vector<GmfResult>& results) const {
    if (args.json) {
      if (results.size() == 1) {
        out << results.front().to_json() << '\n';
      } else {
        nlohmann::json all = nlohmann::json::array();
        for (const auto& r : results) {
          all.push_back(nlohmann::json::parse(r.to_json()));
        }
        out << all.dump() << '\n';
      }
    } else if (results.size() == 1) {
      out << results.front().value << '\n';
    } else {
      for (const auto& r : results) {
        out << to_string(r.method) << ": " << r.value << " (" << r.term_count << " terms)\n";
      }
    }
    for (const auto& r : results) {
      if (!(r.value == results.front().value)) {
        throw CheckFailed("evaluation routes disagree");
      }
    }
  }
};

int cmd_xset(const Context& ctx) {
  const auto theta = ctx.perm(ctx.args.theta);
  const auto tau = ctx.perm(ctx.args.tau);
  const auto elements = x_set(theta, tau);
  if (ctx.args.json) {
    nlohmann::json list = nlohmann::json::array();
    for (const auto& e : elements) {
      list.push_back({{"sigma", e.sigma.to_string()}, {"mask", e.chosen}, {"t", e.t_sigma}});
    }
    ctx.out << nlohmann::json{{"fixed", (theta.inverse() * tau).fixed_count()}, {"elements", list}}.dump() << '\n';
  } else {
    for (const auto& e : elements) {
      ctx.out << e.sigma << '\n';
    }
  }
  return kOk;
}

int cmd_linear(const Context& ctx, const std::string& kind) {
  const int n = ctx.degree();
  const auto a = ctx.scalar(ctx.args.a);
  const auto b = ctx.scalar(ctx.args.b);
  const auto theta = ctx.perm(ctx.args.theta);
  const auto tau = ctx.perm(ctx.args.tau);
  GroupSpec group = GroupSpec::symmetric(n);
  CharacterSpec chi = CharacterSpec::trivial();
  if (kind == "det") {
    chi = CharacterSpec::sign();
  } else if (kind == "gmf") {
    group = ctx.group(n);
    chi = ctx.character(n);
  }
  EngineOptions options;
  options.threads = ctx.args.threads;
  std::vector<GmfResult> results;
  for (const auto& method : split_methods(ctx.args.method, "formula")) {
    if (method == "formula") {
      results.push_back(gmf_linear_sum(a, b, theta, tau, group, chi));
    } else if (method == "naive") {
      results.push_back(gmf_naive(linear_sum(a, b, theta, tau), group, chi, options));
    } else if (method == "closed" && kind != "gmf") {
      results.push_back(kind == "det" ? det_linear_sum(a, b, theta, tau) : per_linear_sum(a, b, theta, tau));
    } else if (method == "cauchy-binet" && kind == "det") {
      results.push_back(det_cauchy_binet_sum(scalar_mul(a, perm_matrix(theta)), scalar_mul(b, perm_matrix(tau))));
    } else {
      throw ParseError("method '" + method + "' is not available for " + kind);
    }
  }
  ctx.print_results(results);
  return kOk;
}

int cmd_block(const Context& ctx) {
  if (ctx.args.spec_path.empty()) {
    throw ParseError("--spec is required");
  }
  const auto spec = BlockSpec::from_json(read_file(ctx.args.spec_path));
  spec.validate();
  const int total = spec.m * spec.n;
  const auto group = ctx.group(total);
  const auto chi = ctx.character(total);
  EngineOptions options;
  options.threads = ctx.args.threads;
  std::vector<GmfResult> results;
  for (const auto& method : split_methods(ctx.args.method, "block")) {
    if (method == "block" || method == "formula") {
      results.push_back(gmf_block(spec, group, chi));
    } else if (method == "naive") {
      results.push_back(gmf_naive(block_matrix(spec), group, chi, options));
    } else {
      throw ParseError("method '" + method + "' is not available for block-gmf");
    }
  }
  ctx.print_results(results);
  return kOk;
}

int cmd_s_det(const Context& ctx) {
  const int n = ctx.degree();
  const auto theta = ctx.perm(ctx.args.theta);
  std::vector<GmfResult> results;
  for (const auto& method : split_methods(ctx.args.method, "closed")) {
    if (method == "closed") {
      results.push_back({det_s_closed(theta), Method::ClosedForm, 1});
    } else if (method == "formula") {
      results.push_back(gmf_s_matrix(theta, GroupSpec::symmetric(n), CharacterSpec::sign()));
    } else if (method == "naive") {
      EngineOptions options;
      options.threads = ctx.args.threads;
      results.push_back(gmf_naive(s_matrix(theta), GroupSpec::symmetric(n), CharacterSpec::sign(), options));
    } else {
      throw ParseError("method '" + method + "' is not available for s-det");
    }
  }
  ctx.print_results(results);
  return kOk;
}

int cmd_psd(const Context& ctx) {
  const auto c = psd_classify(ctx.scalar(ctx.args.a), ctx.scalar(ctx.args.b), ctx.perm(ctx.args.theta),
                              ctx.perm(ctx.args.tau));
  if (ctx.args.json) {
    nlohmann::json doc{{"psd", c.is_psd()}};
    if (c.is_psd()) {
      doc["k"] = c.k.get_str();
      doc["m"] = c.m.get_str();
      doc["pi"] = c.pi.to_string();
      doc["condition"] = c.condition;
    }
    ctx.out << doc.dump() << '\n';
  } else if (c.is_psd()) {
    ctx.out << "PSD k=" << c.k.get_str() << " m=" << c.m.get_str() << " pi=" << c.pi << " condition=" << c.condition
            << '\n';
  } else {
    ctx.out << "NotPSD\n";
  }
  return kOk;
}

int cmd_singvals(const Context& ctx) {
  const auto spectrum = singular_values(ctx.scalar(ctx.args.a), ctx.scalar(ctx.args.b), ctx.perm(ctx.args.theta),
                                        ctx.perm(ctx.args.tau));
  if (ctx.args.json) {
    ctx.out << nlohmann::json{{"values", spectrum.values}}.dump() << '\n';
  } else {
    ctx.out << std::setprecision(17);
    for (double v : spectrum.values) {
      ctx.out << v << '\n';
    }
  }
  return kOk;
}

int report_comparison(const Context& ctx, const ExactComparison& c, const char* relation) {
  if (ctx.args.json) {
    ctx.out << nlohmann::json{{"lhs", scalar_to_json(c.lhs)}, {"rhs", scalar_to_json(c.rhs)}, {"holds", c.holds}}.dump()
            << '\n';
  } else {
    ctx.out << c.lhs << ' ' << relation << ' ' << c.rhs << ": " << (c.holds ? "holds" : "FAILS") << '\n';
  }
  return c.holds ? kOk : kCheckFailed;
}

int cmd_dominance(const Context& ctx) {
  const int n = ctx.degree();
  const auto k = parse_rational(ctx.args.k);
  const auto m = parse_rational(ctx.args.m);
  return report_comparison(ctx, check_dominance(k, m, ctx.perm(ctx.args.pi), ctx.character(n)), "<=");
}

int cmd_bound(const Context& ctx) {
  const int n = ctx.degree();
  const auto report = check_singular_bound(ctx.scalar(ctx.args.a), ctx.scalar(ctx.args.b), ctx.perm(ctx.args.theta),
                                           ctx.perm(ctx.args.tau), ctx.group(n), ctx.character(n));
  if (ctx.args.json) {
    ctx.out << nlohmann::json{{"lhs", report.lhs}, {"rhs", report.rhs}, {"holds", report.holds}}.dump() << '\n';
  } else {
    ctx.out << std::setprecision(17) << report.lhs << " <= " << report.rhs << ": "
            << (report.holds ? "holds" : "FAILS") << '\n';
  }
  return report.holds ? kOk : kCheckFailed;
}

int cmd_tensor(const Context& ctx) {
  const int n = ctx.degree();
  const auto a = ctx.scalar(ctx.args.a);
  const auto b = ctx.scalar(ctx.args.b);
  if (!a.is_real() || !b.is_real()) {
    throw DomainError("tensor-check needs real a and b");
  }
  const auto theta = ctx.perm(ctx.args.theta);
  const auto tau = ctx.perm(ctx.args.tau);
  const auto group = ctx.group(n);
  const auto chi = ctx.character(n);
  const auto tensor = tensor_oracle(a.re(), b.re(), theta, tau, group, chi);
  const auto formula = gmf_linear_sum(a, b, theta, tau, group, chi).value;
  const bool holds = tensor == formula;
  if (ctx.args.json) {
    ctx.out << nlohmann::json{{"tensor", scalar_to_json(tensor)}, {"formula", scalar_to_json(formula)},
                              {"holds", holds}}
                   .dump()
            << '\n';
  } else {
    ctx.out << "tensor/|G| = " << tensor << ", formula = " << formula << ": " << (holds ? "holds" : "FAILS") << '\n';
  }
  return holds ? kOk : kCheckFailed;
}

int cmd_bench(const Context& ctx) {
  const int n = ctx.degree();
  const auto a = ctx.scalar(ctx.args.a);
  const auto b = ctx.scalar(ctx.args.b);
  const auto theta = ctx.perm(ctx.args.theta);
  const auto tau = ctx.perm(ctx.args.tau);
  const auto group = GroupSpec::symmetric(n);
  const auto chi = CharacterSpec::sign();
  const auto expected = term_counts(theta, tau, group);
  const int reps = std::max(1, ctx.args.reps);

  struct Row {
    std::string name;
    std::optional<GmfResult> result;
    double median_us = 0;
    std::uint64_t expected_terms = 0;
  };
  auto time = [&](const std::string& name, std::uint64_t expected_terms, bool enabled,
                  const std::function<GmfResult()>& run) {
    Row row{name, std::nullopt, 0, expected_terms};
    if (!enabled) {
      return row;
    }
    std::vector<double> samples;
    for (int r = 0; r < reps; ++r) {
      const auto start = std::chrono::steady_clock::now();
      row.result = run();
      samples.push_back(std::chrono::duration<double, std::micro>(std::chrono::steady_clock::now() - start).count());
    }
    std::sort(samples.begin(), samples.end());
    row.median_us = samples[samples.size() / 2];
    return row;
  };
  EngineOptions options;
  options.threads = ctx.args.threads;
  const Matrix matrix = linear_sum(a, b, theta, tau);
  std::vector<Row> rows;
  rows.push_back(time("formula", expected.formula, true, [&] { return gmf_linear_sum(a, b, theta, tau, group, chi); }));
  rows.push_back(time("closed", std::uint64_t{1} << cycle_structure(theta.inverse() * tau).lengths.size(), true,
                      [&] { return det_linear_sum(a, b, theta, tau); }));
  rows.push_back(time("cauchy-binet", expected.cauchy_binet, n <= 10, [&] {
    return det_cauchy_binet_sum(scalar_mul(a, perm_matrix(theta)), scalar_mul(b, perm_matrix(tau)));
  }));
  rows.push_back(time("naive", expected.naive, n <= 9, [&] { return gmf_naive(matrix, group, chi, options); }));

  bool consistent = true;
  const GaussianRational reference = rows.front().result->value;
  for (const auto& row : rows) {
    if (row.result) {
      consistent = consistent && row.result->value == reference && row.result->term_count == row.expected_terms;
    }
  }
  if (ctx.args.json) {
    nlohmann::json list = nlohmann::json::array();
    for (const auto& row : rows) {
      nlohmann::json entry{{"method", row.name}, {"expected_terms", row.expected_terms}};
      if (row.result) {
        entry["terms"] = row.result->term_count;
        entry["value"] = scalar_to_json(row.result->value);
        entry["median_us"] = row.median_us;
      } else {
        entry["skipped"] = true;
      }
      list.push_back(std::move(entry));
    }
    ctx.out << nlohmann::json{{"rows", list}, {"consistent", consistent}}.dump() << '\n';
  } else {
    ctx.out << std::left << std::setw(14) << "method" << std::setw(12) << "terms" << std::setw(16) << "median_us"
            << "value\n";
    for (const auto& row : rows) {
      ctx.out << std::setw(14) << row.name;
      if (row.result) {
        ctx.out << std::setw(12) << row.result->term_count << std::setw(16) << std::fixed << std::setprecision(1)
                << row.median_us << row.result->value << '\n';
      } else {
        ctx.out << std::setw(12) << row.expected_terms << std::setw(16) << "skipped" << "-\n";
      }
    }
  }
  return consistent ? kOk : kCheckFailed;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact generalized matrix functions on sums of permutation matrices", "permfunc"};
  app.require_subcommand(1);
  Args parsed;

  auto add_scalars = [&](CLI::App* sub) {
    sub->add_option("--a", parsed.a, "coefficient of P_theta (Gaussian rational, e.g. 2, 1/2, 2-1i)");
    sub->add_option("--b", parsed.b, "coefficient of P_tau");
  };
  auto add_perms = [&](CLI::App* sub) {
    sub->add_option("--theta", parsed.theta, "permutation in cycle notation, e.g. \"(1 5 3)(2 6)\"");
    sub->add_option("--tau", parsed.tau, "permutation in cycle notation");
  };
  auto add_degree = [&](CLI::App* sub) { sub->add_option("--n", parsed.n, "degree")->required(); };
  auto add_common = [&](CLI::App* sub) {
    sub->add_flag("--json", parsed.json, "JSON output");
    sub->add_option("--threads", parsed.threads, "worker threads for naive sums")->check(CLI::PositiveNumber);
  };
  auto add_group_char = [&](CLI::App* sub) {
    sub->add_option("--group", parsed.group, "S6, A6, cyclic:(1 2 3 4), stab:1,3,5@6, gens:(1 2),(1 2 3)@3");
    sub->add_option("--character", parsed.character, "trivial, sign, irr:[3,1], table:<path>");
  };
  auto add_method = [&](CLI::App* sub) {
    sub->add_option("--method", parsed.method, "naive|formula|cauchy-binet|closed (comma-separated to compare)");
  };

  auto* xset = app.add_subcommand("xset", "list X(theta, tau)");
  add_perms(xset);
  add_degree(xset);
  add_common(xset);

  std::vector<std::pair<std::string, CLI::App*>> linear_cmds;
  for (const auto* name : {"gmf", "det", "per"}) {
    auto* sub = app.add_subcommand(name, std::string(name) + " of a P_theta + b P_tau");
    add_scalars(sub);
    add_perms(sub);
    add_degree(sub);
    add_method(sub);
    add_common(sub);
    if (std::string(name) == "gmf") {
      add_group_char(sub);
    }
    linear_cmds.emplace_back(name, sub);
  }

  auto* block = app.add_subcommand("block-gmf", "generalized matrix function of a block matrix");
  block->add_option("--spec", parsed.spec_path, "block spec JSON file")->required();
  add_group_char(block);
  add_method(block);
  add_common(block);

  auto* sdet = app.add_subcommand("s-det", "det(S_theta)");
  sdet->add_option("--theta", parsed.theta, "permutation in cycle notation");
  add_degree(sdet);
  add_method(sdet);
  add_common(sdet);

  auto* psd = app.add_subcommand("psd", "structural PSD classification of a P_theta + b P_tau");
  add_scalars(psd);
  add_perms(psd);
  add_degree(psd);
  add_common(psd);

  auto* singvals = app.add_subcommand("singvals", "singular values of a P_theta + b P_tau");
  add_scalars(singvals);
  add_perms(singvals);
  add_degree(singvals);
  add_common(singvals);

  auto* dominance = app.add_subcommand("dominance", "permanent dominance for k I + m P_pi");
  dominance->add_option("--k", parsed.k, "rational k");
  dominance->add_option("--m", parsed.m, "rational m");
  dominance->add_option("--pi", parsed.pi, "involution in cycle notation");
  dominance->add_option("--character", parsed.character, "trivial, sign, irr:[3,1], table:<path>");
  add_degree(dominance);
  add_common(dominance);

  auto* bound = app.add_subcommand("bound", "singular-value bound for a linear character");
  add_scalars(bound);
  add_perms(bound);
  add_degree(bound);
  add_group_char(bound);
  add_common(bound);

  auto* tensor = app.add_subcommand("tensor-check", "symmetrized tensor inner product against the formula");
  add_scalars(tensor);
  add_perms(tensor);
  add_degree(tensor);
  add_group_char(tensor);
  add_common(tensor);

  auto* bench = app.add_subcommand("bench", "compare evaluation routes for det(a P_theta + b P_tau)");
  add_scalars(bench);
  add_perms(bench);
  add_degree(bench);
  bench->add_option("--reps", parsed.reps, "repetitions per method");
  add_common(bench);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kParseError;
  }

  const Context ctx{parsed, out};
  try {
    if (xset->parsed()) {
      return cmd_xset(ctx);
    }
    for (const auto& [name, sub] : linear_cmds) {
      if (sub->parsed()) {
        return cmd_linear(ctx, name);
      }
    }
    if (block->parsed()) {
      return cmd_block(ctx);
    }
    if (sdet->parsed()) {
      return cmd_s_det(ctx);
    }
    if (psd->parsed()) {
      return cmd_psd(ctx);
    }
    if (singvals->parsed()) {
      return cmd_singvals(ctx);
    }
    if (dominance->parsed()) {
      return cmd_dominance(ctx);
    }
    if (bound->parsed()) {
      return cmd_bound(ctx);
    }
    if (tensor->parsed()) {
      return cmd_tensor(ctx);
    }
    if (bench->parsed()) {
      return cmd_bench(ctx);
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kParseError;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kDomainError;
  } catch (const CheckFailed& e) {
    err << "check failed: " << e.what() << '\n';
    return kCheckFailed;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternalError;
  }
  return kInternalError;
}

} // namespace permfunc::cli
