#include "fastdice/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <optional>
#include <ostream>
#include <random>
#include <stdexcept>
#include <string_view>

#include <CLI11.hpp>

#include "fastdice/batch.hpp"
#include "fastdice/bench.hpp"
#include "fastdice/bernoulli.hpp"
#include "fastdice/bit_source.hpp"
#include "fastdice/cost.hpp"
#include "fastdice/dice_roller.hpp"
#include "fastdice/errors.hpp"
#include "fastdice/permutation.hpp"

namespace fastdice::cli {

namespace {

enum class Format { text, csv };

struct RunConfig {
  std::string seed_text = "0";
  std::uint64_t count = 1;
  std::string format_text;  // empty: the command's default
  Format format = Format::text;

  void resolve_format(Format fallback) {
    format = format_text.empty() ? fallback : (format_text == "csv" ? Format::csv : Format::text);
  }
};

struct UniformArgs {
  std::uint64_t n = 0;
  std::string batch = "1";
};

struct PermArgs {
  std::size_t n = 0;
  std::string method = "unrank";
};

struct BernoulliArgs {
  std::uint64_t num = 0;
  std::uint64_t den = 1;
};

struct CostArgs {
  std::uint64_t n_min = 1;
  std::uint64_t n_max = 1;
  std::optional<unsigned> asymptotic;
  std::optional<unsigned> batch;
};

struct BenchArgs {
  std::uint64_t n = 0;
  std::string batch = "1";
};

void add_common(CLI::App& cmd, RunConfig& config, bool count_required = false) {
  cmd.add_option("--seed", config.seed_text, "64-bit seed: decimal, 0x-hex, or 'random'")
      ->capture_default_str();
  auto* count = cmd.add_option("--count", config.count, "number of samples");
  if (count_required) count->required();
  cmd.add_option("--format", config.format_text, "output format: text | csv")
      ->check(CLI::IsMember({"text", "csv"}));
}

unsigned parse_batch(const std::string& text, std::uint64_t n) {
  if (text == "auto") return n < 2 ? 1 : auto_batch_size(n);
  unsigned j = 0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, j);
  if (ec != std::errc{} || ptr != end || j == 0) {
    throw InvalidArgument("--batch expects a positive integer or 'auto', got '" + text + "'");
  }
  return j;
}

void write_footer(std::ostream& out, std::uint64_t bits, std::string_view count_key,
                  std::uint64_t count) {
  out << "# bits=" << bits << ' ' << count_key << '=' << count;
}

void cmd_uniform(const RunConfig& config, const UniformArgs& args, std::ostream& out) {
  BufferedWordSource source(parse_seed(config.seed_text));
  const unsigned j = parse_batch(args.batch, args.n);
  detail::check_range(args.n);

  if (config.format == Format::csv) out << "value\n";
  std::uint64_t produced = 0;
  if (j == 1 || args.n == 1) {
    for (; produced < config.count; ++produced) out << fdr_uniform(source, args.n).value << '\n';
  } else {
    const auto plan = plan_batch(args.n, j);
    while (produced < config.count) {
      for (auto x : batch_uniform(source, plan)) {
        if (produced == config.count) break;
        out << x << '\n';
        ++produced;
      }
    }
  }
  write_footer(out, source.bits_consumed(), "count", config.count);
  if (j > 1 && args.n > 1) out << " batch=" << j;
  out << '\n';
}

void cmd_perm(const RunConfig& config, const PermArgs& args, std::ostream& out) {
  BufferedWordSource source(parse_seed(config.seed_text));
  Permutation (*draw)(RandomBitSource&, std::size_t) = nullptr;
  if (args.method == "fy") {
    draw = fisher_yates;
  } else if (args.method == "unrank") {
    draw = random_permutation_unranked;
  } else {
    draw = random_permutation_selection;
  }
  if (args.method != "fy") (void)factorial(args.n);

  const char sep = config.format == Format::csv ? ',' : ' ';
  if (config.format == Format::csv) {
    for (std::size_t i = 1; i <= args.n; ++i) out << (i > 1 ? "," : "") << 'p' << i;
    out << '\n';
  }
  for (std::uint64_t c = 0; c < config.count; ++c) {
    const auto perm = draw(source, args.n);
    for (std::size_t i = 0; i < perm.size(); ++i) out << (i ? std::string(1, sep) : "") << perm.values[i];
    out << '\n';
  }
  write_footer(out, source.bits_consumed(), "calls", config.count);
  out << '\n';
}

void cmd_bernoulli(const RunConfig& config, const BernoulliArgs& args, std::ostream& out) {
  BufferedWordSource source(parse_seed(config.seed_text));
  const Rational p{args.num, args.den};
  if (config.format == Format::csv) out << "value\n";
  std::uint64_t ones = 0;
  for (std::uint64_t c = 0; c < config.count; ++c) {
    const unsigned b = bernoulli_rational(source, p);
    ones += b;
    out << b << '\n';
  }
  write_footer(out, source.bits_consumed(), "count", config.count);
  out << " ones=" << ones << '\n';
}

void cmd_cost(const RunConfig& config, const CostArgs& args, std::ostream& out) {
  if (args.n_min == 0) throw InvalidArgument("--n-min must be at least 1");
  if (args.n_min > args.n_max) throw InvalidArgument("--n-min must not exceed --n-max");
  if (args.batch && *args.batch == 0) throw InvalidArgument("--batch must be positive");

  std::optional<AsymptoticParams> params;
  if (args.asymptotic) params = AsymptoticParams{*args.asymptotic};

  std::vector<std::string> header{"n", "u_exact", "log2n", "toll", "u_asymptotic"};
  if (args.batch) header.emplace_back("u_batch");

  std::vector<std::vector<std::string>> rows;
  for (std::uint64_t n = args.n_min;; ++n) {
    const auto row = cost_breakdown(n, params);
    std::vector<std::string> cells{std::to_string(n), format_real(row.exact_cost),
                                   format_real(row.log2n), format_real(row.toll),
                                   row.asymptotic ? format_real(*row.asymptotic) : ""};
    if (args.batch) {
      std::string cell;
      if (n >= 2) {
        try {
          cell = format_real(batch_cost(n, *args.batch));
        } catch (const Overflow&) {
        }
      } else {
        cell = format_real(0.0);
      }
      cells.push_back(cell);
    }
    rows.push_back(std::move(cells));
    if (n == args.n_max) break;
  }

  if (config.format == Format::csv) {
    const auto emit = [&out](const std::vector<std::string>& cells) {
      for (std::size_t i = 0; i < cells.size(); ++i) out << (i ? "," : "") << cells[i];
      out << '\n';
    };
    emit(header);
    for (const auto& r : rows) emit(r);
    return;
  }
  std::vector<std::size_t> width(header.size());
  for (std::size_t i = 0; i < header.size(); ++i) width[i] = header[i].size();
  for (const auto& r : rows) {
    for (std::size_t i = 0; i < r.size(); ++i) width[i] = std::max(width[i], r[i].size());
  }
  const auto emit = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) out << "  ";
      out << std::string(width[i] - cells[i].size(), ' ') << cells[i];
    }
    out << '\n';
  };
  emit(header);
  for (const auto& r : rows) emit(r);
}

void cmd_bench(const RunConfig& config, const BenchArgs& args, std::ostream& out) {
  BufferedWordSource source(parse_seed(config.seed_text));
  detail::check_range(args.n);
  const unsigned j = parse_batch(args.batch, args.n);
  const auto r = run_bench(source, args.n, config.count, j);

  const std::vector<std::pair<std::string, std::string>> fields{
      {"n", std::to_string(r.n)},
      {"batch", std::to_string(r.batch)},
      {"count", std::to_string(r.count)},
      {"total_bits", std::to_string(r.total_bits)},
      {"mean_bits", format_real(r.mean_bits_per_variate)},
      {"theory", format_real(r.theoretical)},
      {"abs_deviation", format_real(r.abs_deviation)},
      {"chi_square", format_real(r.uniformity.statistic)},
      {"dof", std::to_string(r.uniformity.degrees_of_freedom)},
      {"p_value", format_real(r.uniformity.p_value)},
  };
  if (config.format == Format::csv) {
    for (std::size_t i = 0; i < fields.size(); ++i) out << (i ? "," : "") << fields[i].first;
    out << '\n';
    for (std::size_t i = 0; i < fields.size(); ++i) out << (i ? "," : "") << fields[i].second;
    out << '\n';
  } else {
    for (const auto& [k, v] : fields) out << k << ": " << v << '\n';
  }
}

}  // namespace

std::uint64_t parse_seed(const std::string& text) {
  if (text == "random") {
    std::random_device device;
    return (static_cast<std::uint64_t>(device()) << 32) | device();
  }
  std::string_view digits = text;
  int base = 10;
  if (digits.size() > 2 && digits[0] == '0' && (digits[1] == 'x' || digits[1] == 'X')) {
    digits.remove_prefix(2);
    base = 16;
  }
  std::uint64_t seed = 0;
  const auto* end = digits.data() + digits.size();
  const auto [ptr, ec] = std::from_chars(digits.data(), end, seed, base);
  if (digits.empty() || ec != std::errc{} || ptr != end) {
    throw std::invalid_argument("invalid seed '" + text + "'");
  }
  return seed;
}

std::string format_real(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9g", x);
  return buf;
}

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Random-bit-optimal sampling: uniform, permutations, Bernoulli, cost tables"};
  app.name("fastdice");
  app.require_subcommand(1);

  RunConfig config;
  UniformArgs uniform;
  PermArgs perm;
  BernoulliArgs bern;
  CostArgs cost;
  BenchArgs bench;

  auto* uniform_cmd = app.add_subcommand("uniform", "uniform integers on [0, n)");
  uniform_cmd->add_option("--n", uniform.n, "range")->required();
  uniform_cmd->add_option("--batch", uniform.batch, "batch size J or 'auto'");
  add_common(*uniform_cmd, config);

  auto* perm_cmd = app.add_subcommand("perm", "uniform random permutations of {1..n}");
  perm_cmd->add_option("--n", perm.n, "size")->required();
  perm_cmd->add_option("--method", perm.method, "fy | unrank | lehmer")
      ->check(CLI::IsMember({"fy", "unrank", "lehmer"}))
      ->capture_default_str();
  add_common(*perm_cmd, config);

  auto* bern_cmd = app.add_subcommand("bernoulli", "Bernoulli(num/den) variates");
  bern_cmd->add_option("--num", bern.num, "numerator")->required();
  bern_cmd->add_option("--den", bern.den, "denominator")->required();
  add_common(*bern_cmd, config);

  auto* cost_cmd = app.add_subcommand("cost", "exact and asymptotic expected bit cost table");
  cost_cmd->add_option("--n-min", cost.n_min, "first range")->required();
  cost_cmd->add_option("--n-max", cost.n_max, "last range")->required();
  cost_cmd->add_option("--asymptotic", cost.asymptotic, "Fourier terms K of the fluctuation");
  cost_cmd->add_option("--batch", cost.batch, "also tabulate per-variate cost in batches of J");
  add_common(*cost_cmd, config);

  auto* bench_cmd = app.add_subcommand("bench", "measured bits per variate against theory");
  bench_cmd->add_option("--n", bench.n, "range")->required();
  bench_cmd->add_option("--batch", bench.batch, "batch size J or 'auto'");
  add_common(*bench_cmd, config, true);

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  // cost and bench default to CSV, the sampling commands to text.
  const bool table = cost_cmd->parsed() || bench_cmd->parsed();
  config.resolve_format(table ? Format::csv : Format::text);

  try {
    if (uniform_cmd->parsed()) {
      cmd_uniform(config, uniform, out);
    } else if (perm_cmd->parsed()) {
      cmd_perm(config, perm, out);
    } else if (bern_cmd->parsed()) {
      cmd_bernoulli(config, bern, out);
    } else if (cost_cmd->parsed()) {
      cmd_cost(config, cost, out);
    } else if (bench_cmd->parsed()) {
      cmd_bench(config, bench, out);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitOk;
}

}  // namespace fastdice::cli
