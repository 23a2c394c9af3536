#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bihilb/combinatorics.hpp"
#include "bihilb/errors.hpp"
#include "bihilb/experiments.hpp"
#include "bihilb/hilbert.hpp"
#include "bihilb/oracle/saturation.hpp"
#include "bihilb/parallel.hpp"
#include "bihilb/render.hpp"

using namespace bihilb;

namespace {

constexpr std::uint64_t kDefaultPrime = 2305843009213693951ull;  // 2^61 - 1

enum Exit { kOk = 0, kUsage = 1, kShape = 2, kPadding = 3, kMismatch = 4 };

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Config {
  std::optional<int> n, m;
  std::optional<std::int64_t> d, e;
  std::vector<std::int64_t> mu;
  std::vector<std::int64_t> degrees;
  std::vector<std::int64_t> window;
  std::string format = "text";
  std::uint64_t prime = kDefaultPrime;
  std::uint64_t seed = 1;
  std::string instance_path;
  std::string example;
  std::int64_t bound = -1;
  bool color = false;
  bool seed_given = false;
};

Shape need_shape(const Config& c) {
  if (!c.n || !c.m) throw UsageError("--n and --m are required");
  return Shape(*c.n, *c.m);
}

RegionSpec need_spec(const Config& c) {
  if (!c.d || !c.e) throw UsageError("--d and --e are required");
  return RegionSpec(need_shape(c), {*c.d, *c.e});
}

Bidegree need_mu(const Config& c) {
  if (c.mu.size() != 2) throw UsageError("--mu takes exactly two integers");
  return {c.mu[0], c.mu[1]};
}

DegreeList degree_pairs(const Config& c) {
  if (c.degrees.size() % 2 != 0) throw UsageError("--degrees takes pairs of integers");
  DegreeList out;
  for (std::size_t i = 0; i < c.degrees.size(); i += 2) out.push_back({c.degrees[i], c.degrees[i + 1]});
  return out;
}

Window window_or(const Config& c, Bidegree sigma) {
  if (c.window.empty()) return Window{{0, 0}, sigma + Bidegree{2, 2}};
  if (c.window.size() != 4) throw UsageError("--window takes four integers: lo_a lo_b hi_a hi_b");
  Window w{{c.window[0], c.window[1]}, {c.window[2], c.window[3]}};
  validate_window(w, false);
  return w;
}

oracle::PrimeField field_of(const Config& c) {
  try {
    return oracle::PrimeField(c.prime);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("--prime: ") + e.what());
  }
}

bool has_explicit_instance(const Config& c) { return !c.instance_path.empty() || !c.example.empty(); }

// Instance from --instance, --example, or random forms of the flagged degrees.
oracle::Instance load_instance(const Config& c) {
  if (!c.instance_path.empty() && !c.example.empty()) throw UsageError("--instance and --example are exclusive");
  if (!c.instance_path.empty()) {
    std::ifstream in(c.instance_path);
    if (!in) throw UsageError("cannot read " + c.instance_path);
    std::stringstream buf;
    buf << in.rdbuf();
    return oracle::parse_instance(buf.str());
  }
  const auto field = field_of(c);
  if (!c.example.empty()) {
    if (c.example != "diagonal") throw UsageError("unknown example '" + c.example + "' (available: diagonal)");
    return oracle::diagonal_example(field);
  }
  const Shape shape = need_shape(c);
  if (!c.degrees.empty()) return oracle::random_instance(shape, degree_pairs(c), field, c.seed);
  return oracle::random_instance(shape, need_spec(c).d, field, c.seed);
}

// Spec from flags, or read off an equal-degree instance. Flags that disagree
// with the instance are a ShapeMismatch.
RegionSpec spec_for(const Config& c, const oracle::Instance& inst) {
  const Bidegree d0 = inst.forms.front().degree;
  RegionSpec spec(inst.shape, d0);
  if (c.n || c.m || c.d || c.e) {
    spec = need_spec(c);
    if (!(spec.shape == inst.shape)) throw ShapeMismatch("instance shape differs from --n/--m");
  }
  for (const auto& f : inst.forms) {
    if (f.degree != spec.d) throw ShapeMismatch("instance form of bidegree " + f.degree.str() + " (spec needs " +
                                                spec.d.str() + ")");
  }
  return spec;
}

Bidegree instance_sigma(const oracle::Instance& inst) {
  Bidegree s{-(inst.shape.n + 1), -(inst.shape.m + 1)};
  for (const auto& f : inst.forms) s = s + f.degree;
  return s;
}

int cmd_chi(const Config& c) {
  const RegionSpec spec = need_spec(c);
  std::cout << chi_equal(spec.shape, spec.d, need_mu(c)).str() << "\n";
  return kOk;
}

int cmd_degree(const Config& c) {
  const Shape shape = need_shape(c);
  if (!c.degrees.empty()) {
    std::cout << degree_ci(shape, degree_pairs(c)).str() << "\n";
  } else {
    std::cout << degree_ci(shape, need_spec(c).d).str() << "\n";
  }
  return kOk;
}

int cmd_classify(const Config& c) {
  const RegionSpec spec = need_spec(c);
  std::cout << render_classification(classify(spec, need_mu(c)), parse_format(c.format));
  return kOk;
}

int cmd_table(const Config& c) {
  const RegionSpec spec = need_spec(c);
  const Window w = window_or(c, sigma(spec));
  const auto table = hf_table(spec, w, default_threads());
  std::cout << render_table(table, parse_format(c.format), c.color);
  return kOk;
}

int cmd_regularity(const Config& c) {
  const Format fmt = parse_format(c.format);
  if (!has_explicit_instance(c) && !c.seed_given) {
    const RegionSpec spec = need_spec(c);
    std::cout << (fmt == Format::Text ? "guaranteed: " : "") << render_staircase(guaranteed_regularity_staircase(spec), fmt);
    return kOk;
  }
  const auto inst = load_instance(c);
  const RegionSpec spec = spec_for(c, inst);
  const Window w = window_or(c, sigma(spec));
  const auto grid = oracle::hf_v_oracle(inst, w);
  oracle::validate_complete_intersection(inst, spec, grid);
  const auto stab = oracle::stabilization_staircase(grid, degree_ci(spec.shape, spec.d), spec);
  if (fmt == Format::Text) {
    std::cout << "guaranteed: " << render_staircase(guaranteed_regularity_staircase(spec), fmt);
    std::cout << "stabilization: " << render_staircase(stab, fmt);
  } else {
    std::cout << render_staircase(stab, fmt);
  }
  return kOk;
}

int cmd_oracle(const Config& c) {
  const auto inst = load_instance(c);
  const Window w = window_or(c, instance_sigma(inst));
  const auto grid = oracle::hf_v_oracle(inst, w);
  std::optional<RegionSpec> spec;
  const Bidegree d0 = inst.forms.front().degree;
  const bool equal = std::all_of(inst.forms.begin(), inst.forms.end(), [&](const auto& f) { return f.degree == d0; });
  if (equal && inst.forms.size() == static_cast<std::size_t>(inst.shape.r())) spec = RegionSpec(inst.shape, d0);
  std::cout << render_grid(grid, parse_format(c.format), c.color, spec ? &*spec : nullptr);
  return kOk;
}

int cmd_verify(const Config& c) {
  const auto inst = load_instance(c);
  const RegionSpec spec = spec_for(c, inst);
  const Window w = window_or(c, sigma(spec));
  std::string descriptor;
  if (!c.instance_path.empty()) {
    descriptor = c.instance_path;
  } else if (!c.example.empty()) {
    descriptor = c.example + " prime=" + std::to_string(inst.field.modulus());
  } else {
    descriptor = "seed=" + std::to_string(c.seed) + " prime=" + std::to_string(inst.field.modulus());
  }
  const auto report = verify_formula_vs_oracle(spec, w, inst, descriptor);
  std::cout << render_report(report, parse_format(c.format));
  return report.ok() ? kOk : kMismatch;
}

int cmd_generic(const Config& c) {
  GenericReport report;
  if (has_explicit_instance(c)) {
    const auto inst = load_instance(c);
    const RegionSpec spec = spec_for(c, inst);
    report = generic_projection_experiment(spec, inst, c.bound >= 0 ? c.bound : sigma(spec).a + sigma(spec).b + 4);
  } else {
    const RegionSpec spec = need_spec(c);
    const std::int64_t bound = c.bound >= 0 ? c.bound : sigma(spec).a + sigma(spec).b + 4;
    report = generic_projection_experiment(spec.shape, spec.d, c.prime, c.seed, bound);
  }
  std::cout << render_report(report, parse_format(c.format));
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bigraded Hilbert functions of complete-intersection points in P^n x P^m"};
  app.require_subcommand(1);
  Config cfg;

  auto shape_flags = [&](CLI::App* sub) {
    sub->add_option("--n", cfg.n, "x-variables are x_0..x_n");
    sub->add_option("--m", cfg.m, "y-variables are y_0..y_m");
    sub->add_option("--d", cfg.d, "x-degree of every form");
    sub->add_option("--e", cfg.e, "y-degree of every form");
    sub->add_option("--format", cfg.format, "text, csv or json")->check(CLI::IsMember({"text", "csv", "json"}));
  };
  auto window_flag = [&](CLI::App* sub) {
    sub->add_option("--window", cfg.window, "lo_a lo_b hi_a hi_b (default (0,0) to sigma+(2,2))")->expected(4);
  };
  std::vector<CLI::Option*> seed_opts;
  auto instance_flags = [&](CLI::App* sub) {
    sub->add_option("--instance", cfg.instance_path, "instance JSON file");
    sub->add_option("--example", cfg.example, "built-in instance: diagonal");
    sub->add_option("--prime", cfg.prime, "field characteristic for generated instances");
    seed_opts.push_back(sub->add_option("--seed", cfg.seed, "seed for random forms"));
  };

  auto* chi = app.add_subcommand("chi", "Koszul Euler characteristic chi(mu)");
  shape_flags(chi);
  chi->add_option("--mu", cfg.mu, "a b")->expected(2)->required();

  auto* degree = app.add_subcommand("degree", "degree of the complete intersection");
  shape_flags(degree);
  degree->add_option("--degrees", cfg.degrees, "bidegree pairs d_1 e_1 d_2 e_2 ...")->expected(2, -1);

  auto* cls = app.add_subcommand("classify", "region memberships and verdict at mu");
  shape_flags(cls);
  cls->add_option("--mu", cfg.mu, "a b")->expected(2)->required();

  auto* table = app.add_subcommand("table", "closed-form Hilbert function table");
  shape_flags(table);
  window_flag(table);
  table->add_flag("--color", cfg.color, "ANSI region colors in text output");

  auto* reg = app.add_subcommand("regularity", "guaranteed and observed regularity staircases");
  shape_flags(reg);
  window_flag(reg);
  instance_flags(reg);

  auto* orc = app.add_subcommand("oracle", "HF_V of an explicit instance over F_p");
  shape_flags(orc);
  window_flag(orc);
  instance_flags(orc);
  orc->add_option("--degrees", cfg.degrees, "bidegree pairs for random forms")->expected(2, -1);
  orc->add_flag("--color", cfg.color, "ANSI region colors in text output");

  auto* ver = app.add_subcommand("verify", "compare the closed form with the oracle");
  shape_flags(ver);
  window_flag(ver);
  instance_flags(ver);

  auto* gen = app.add_subcommand("generic", "axis profiles of a random complete intersection");
  shape_flags(gen);
  instance_flags(gen);
  gen->add_option("--bound", cfg.bound, "largest axis index (default sigma.a+sigma.b+4)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  for (auto* opt : seed_opts) cfg.seed_given |= opt->count() > 0;

  try {
    if (*chi) return cmd_chi(cfg);
    if (*degree) return cmd_degree(cfg);
    if (*cls) return cmd_classify(cfg);
    if (*table) return cmd_table(cfg);
    if (*reg) return cmd_regularity(cfg);
    if (*orc) return cmd_oracle(cfg);
    if (*ver) return cmd_verify(cfg);
    if (*gen) return cmd_generic(cfg);
  } catch (const NotCompleteIntersection& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kShape;
  } catch (const ShapeMismatch& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kShape;
  } catch (const PaddingExhausted& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kPadding;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
