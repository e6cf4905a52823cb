#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "lstat/cli.hpp"
#include "lstat/coeff_cache.hpp"
#include "lstat/correlations.hpp"
#include "lstat/error.hpp"
#include "lstat/kernels.hpp"
#include "lstat/special.hpp"
#include "lstat/variance.hpp"
#include "lstat/zeros.hpp"
#include "options.hpp"

namespace lstat::cli {

namespace {

namespace fs = std::filesystem;

using Writer = std::function<void(std::ostream&)>;

void check_output_path(const std::string& output) {
  if (output == "-") return;
  const fs::path parent = fs::path(output).parent_path();
  if (!parent.empty() && !fs::is_directory(parent)) {
    throw invalid_argument_error("output directory " + parent.string() + " does not exist");
  }
}

void emit(const std::string& output, std::ostream& out, const Writer& write) {
  if (output == "-") {
    write(out);
    out.flush();
    return;
  }
  std::ofstream file(output, std::ios::binary | std::ios::trunc);
  if (!file) throw invalid_argument_error("cannot write " + output);
  write(file);
  file.flush();
  if (!file) throw data_integrity_error("write to " + output + " failed");
}

std::string selector_echo(const Selector& s) {
  std::string text = "spec=" + s.spec;
  if (!s.weierstrass.empty()) text += " weierstrass=" + s.weierstrass;
  if (s.conductor != 0) text += " conductor=" + std::to_string(s.conductor);
  if (s.spec == "ec") text += " bad_primes=" + s.bad_primes;
  return text;
}

void dry_run_report(std::ostream& out, const std::string& command, const Budget& b) {
  out << fmt::format("# lstat {} dry-run\nmemory_bytes,operations\n{:.0f},{:.0f}\n", command,
                     b.memory_bytes, b.operations);
}

int cmd_variance(const Common& common, const VarianceArgs& a, std::ostream& out,
                 std::ostream& err) {
  const LFunctionSpec spec = make_spec(common.selector);
  if (a.x < 1) throw invalid_argument_error("--x must be at least 1");
  std::vector<double> hs;
  if (!a.h_list.empty()) {
    hs = parse_grid(a.h_list);
  } else {
    hs = geometric_h_grid(a.h_min, a.h_max, a.ratio);
  }
  const double h_top = *std::max_element(hs.begin(), hs.end());
  if (!(h_top <= static_cast<double>(a.x))) throw invalid_argument_error("h must not exceed X");
  const auto limit = static_cast<std::int64_t>(std::floor(static_cast<double>(a.x) + h_top));
  check_output_path(common.output);
  if (common.dry_run) {
    Budget b = table_budget(spec, limit, common);
    b.operations += static_cast<double>(hs.size()) * static_cast<double>(a.x);
    dry_run_report(out, "variance", b);
    return exit_ok;
  }
  const auto table = build_table(spec, limit, common, err);
  const auto series = variance_scan(table, a.x, hs);
  emit(common.output, out, [&](std::ostream& o) {
    o << "# lstat variance " << selector_echo(common.selector) << " x=" << a.x;
    if (a.h_list.empty()) {
      o << " h_min=" << format_double(a.h_min) << " h_max=" << format_double(a.h_max)
        << " ratio=" << format_double(a.ratio);
    } else {
      o << " h_list=" << a.h_list;
    }
    o << '\n' << "h,log_x_over_h,var_over_h,pred_small_h,pred_universal\n";
    for (const auto& row : series.rows) {
      o << format_double(row.h) << ',' << format_double(row.log_ratio) << ','
        << format_double(row.empirical) << ',' << format_double(row.pred_small_h) << ','
        << format_double(row.pred_universal) << '\n';
    }
  });
  return exit_ok;
}

std::string per_shift_path(const std::string& output, std::int64_t r, bool several) {
  if (output == "-" || !several) return output;
  const fs::path p(output);
  fs::path name = p.stem();
  name += "-r" + std::to_string(r);
  name += p.extension();
  return (p.parent_path() / name).string();
}

int cmd_correlate(const Common& common, const CorrelateArgs& a, std::ostream& out,
                  std::ostream& err) {
  const LFunctionSpec spec = make_spec(common.selector);
  const auto shifts = parse_int_list(a.r);
  if (a.n < 1 || a.step < 1) throw invalid_argument_error("--n and --step must be positive");
  for (const auto r : shifts) {
    if (r < 0) throw invalid_argument_error("shifts must be non-negative");
  }
  const std::int64_t limit = a.n + *std::max_element(shifts.begin(), shifts.end());
  check_output_path(common.output);
  if (common.dry_run) {
    Budget b = table_budget(spec, limit, common);
    b.operations += static_cast<double>(shifts.size()) * static_cast<double>(a.n);
    dry_run_report(out, "correlate", b);
    return exit_ok;
  }
  const auto table = build_table(spec, limit, common, err);
  for (const auto r : shifts) {
    const auto series = correlation_scan(table, r, a.n, a.step);
    emit(per_shift_path(common.output, r, shifts.size() > 1), out, [&](std::ostream& o) {
      o << "# lstat correlate " << selector_echo(common.selector) << " r=" << r
        << " n=" << a.n << " step=" << a.step;
      if (series.hl_reference) o << " singular_series=" << format_double(*series.hl_reference);
      o << '\n' << "N,c_r_value\n";
      for (const auto& cp : series.checkpoints) o << cp.n << ',' << format_double(cp.value) << '\n';
    });
  }
  return exit_ok;
}

int cmd_hl(const Common& common, const HlArgs& a, std::ostream& out) {
  const auto shifts = parse_int_list(a.r);
  check_output_path(common.output);
  if (common.dry_run) {
    const double c = static_cast<double>(a.cutoff);
    dry_run_report(out, "hl", {c, static_cast<double>(shifts.size()) * c * std::log(c)});
    return exit_ok;
  }
  std::vector<SingularSeries> rows;
  for (const auto r : shifts) rows.push_back(singular_series(r, a.cutoff));
  emit(common.output, out, [&](std::ostream& o) {
    o << "# lstat hl r=" << a.r << " cutoff=" << a.cutoff << '\n'
      << "r,singular_series,tail_bound,twin_constant\n";
    for (const auto& s : rows) {
      o << s.r << ',' << format_double(s.value) << ',' << format_double(s.tail_bound) << ','
        << format_double(s.twin_constant) << '\n';
    }
  });
  return exit_ok;
}

int cmd_paircorr(const Common& common, const PaircorrArgs& a, std::ostream& out) {
  if (a.zeros.empty()) throw invalid_argument_error("--zeros is required");
  if (!fs::is_regular_file(a.zeros)) throw invalid_argument_error("no zeros file " + a.zeros);
  check_output_path(common.output);
  const auto zeros = load_zeros(a.zeros);
  if (common.dry_run) {
    const double n = static_cast<double>(zeros.count_up_to(a.t));
    dry_run_report(out, "paircorr", {8.0 * static_cast<double>(zeros.count()), n * n / 2});
    return exit_ok;
  }
  const auto r = pair_correlation_f(zeros, a.x, a.t, a.delta_cut);
  emit(common.output, out, [&](std::ostream& o) {
    o << "# lstat paircorr zeros=" << a.zeros << " x=" << format_double(a.x)
      << " t=" << format_double(a.t) << " delta_cut=" << format_double(a.delta_cut) << '\n'
      << "X,T,F,normalized,conj_small_x,conj_large_x,zeros_used,tail_bound\n"
      << format_double(r.x) << ',' << format_double(r.t) << ',' << format_double(r.f_value)
      << ',' << format_double(r.normalized) << ',' << format_double(r.conjecture_small_x) << ','
      << format_double(r.conjecture_large_x) << ',' << r.zeros_used << ','
      << format_double(r.tail_bound) << '\n';
  });
  return exit_ok;
}

int cmd_model(const Common& common, const ModelArgs& a, std::ostream& out) {
  const auto grid = parse_grid(a.x_grid);
  const double density = mean_density(LFunctionSpec::zeta(), a.t);
  check_output_path(common.output);
  if (common.dry_run) {
    const double c = static_cast<double>(a.cutoff);
    dry_run_report(out, "model", {c, 2.0 * static_cast<double>(grid.size()) * c / std::log(c)});
    return exit_ok;
  }
  const ZetaPairModel model(a.cutoff);
  emit(common.output, out, [&](std::ostream& o) {
    o << "# lstat model x_grid=" << a.x_grid << " t=" << format_double(a.t)
      << " cutoff=" << a.cutoff << " density=" << format_double(density) << '\n'
      << "x,sine_kernel,r2_diagonal,r2_offdiagonal,limit_diagonal,limit_offdiagonal\n";
    for (const double x : grid) {
      const double x2 = 2 * pi * pi * x * x;
      o << format_double(x) << ',' << format_double(sine_kernel(x)) << ','
        << format_double(model.rescaled_diagonal(x, density)) << ','
        << format_double(model.rescaled_offdiagonal(x, density)) << ','
        << format_double(-1.0 / x2) << ',' << format_double(std::cos(2 * pi * x) / x2) << '\n';
    }
  });
  return exit_ok;
}

int cmd_coeffs(const Common& common, const CoeffsArgs& a, std::ostream& out, std::ostream& err) {
  const LFunctionSpec spec = make_spec(common.selector);
  if (spec.kind() == LFunctionKind::zeta) {
    throw invalid_argument_error("zeta needs no coefficient cache");
  }
  const auto dir = cache_dir(common);
  if (!dir) throw invalid_argument_error("coeffs needs --cache-dir or LSTAT_CACHE_DIR");
  if (!a.legacy_list.empty() && !fs::is_regular_file(a.legacy_list)) {
    throw invalid_argument_error("no legacy list " + a.legacy_list);
  }
  if (a.legacy_list.empty() && a.limit < 2) throw invalid_argument_error("--limit is required");
  const fs::path path = *dir / cache_file_name(spec);
  if (common.dry_run) {
    Common fresh = common;
    fresh.cache_dir = "/nonexistent";
    dry_run_report(out, "coeffs", table_budget(spec, std::max<std::int64_t>(a.limit, 2), fresh));
    return exit_ok;
  }
  PrimeCoefficients c;
  std::string action;
  if (!a.legacy_list.empty()) {
    std::optional<std::int64_t> limit;
    if (a.limit > 0) limit = a.limit;
    c = import_legacy_list(a.legacy_list, spec.kind(), spec.conductor(), spec.weierstrass(), limit);
    action = "imported";
  } else if (fs::exists(path)) {
    c = cache_load(path);
    if (c.kind != spec.kind() || c.conductor != spec.conductor() ||
        c.weierstrass != spec.weierstrass()) {
      throw data_integrity_error(path.string() + " holds coefficients of a different L-function");
    }
    action = c.limit >= a.limit ? "valid" : "extended";
  } else {
    action = "computed";
  }
  if (action == "extended" || action == "computed") {
    c = spec.kind() == LFunctionKind::ramanujan_tau
            ? tau_coefficients(a.limit)
            : elliptic_coefficients(*spec.weierstrass(), spec.conductor(), a.limit);
  }
  if (action != "valid") {
    fs::create_directories(*dir);
    cache_store(path, c);
  }
  err << action << ' ' << path.string() << '\n';
  emit(common.output, out, [&](std::ostream& o) {
    o << "# lstat coeffs " << selector_echo(common.selector) << " limit=" << a.limit << '\n'
      << "path,kind,limit,primes,bad_primes,status\n"
      << path.string() << ',' << to_string(c.kind) << ',' << c.limit << ',' << c.primes.size()
      << ',' << c.bad_primes.size() << ',' << action << '\n';
  });
  return exit_ok;
}

void add_common(CLI::App* sub, Common& c, bool with_selector) {
  if (with_selector) {
    sub->add_option("--spec", c.selector.spec, "zeta, tau or ec");
    sub->add_option("--weierstrass", c.selector.weierstrass, "a1,a2,a3,a4,a6 for --spec ec");
    sub->add_option("--conductor", c.selector.conductor, "conductor for --spec ec");
    sub->add_option("--bad-primes", c.selector.bad_primes,
                    "Lambda at p | N: power-sum (default) or chebyshev");
    sub->add_option("--cache-dir", c.cache_dir, "coefficient cache directory");
  }
  sub->add_option("--output,-o", c.output, "output CSV path, - for stdout");
  sub->add_option("--threads", c.threads, "worker threads, 0 for the runtime default");
  sub->add_flag("--dry-run", c.dry_run, "print the compute budget and exit");
  sub->add_option("--config", c.config, "key=value file with default options");
}

/// Moves config-file defaults in front of the user's flags, right after the
/// subcommand name, so that later (user) values win.
std::vector<std::string> expand_config(std::vector<std::string> args) {
  for (std::size_t i = 1; i < args.size(); ++i) {
    std::string path;
    if (args[i] == "--config" && i + 1 < args.size()) {
      path = args[i + 1];
    } else if (args[i].rfind("--config=", 0) == 0) {
      path = args[i].substr(9);
    } else {
      continue;
    }
    auto defaults = config_arguments(path);
    if (args.size() > 1) args.insert(args.begin() + 2, defaults.begin(), defaults.end());
    return args;
  }
  return args;
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Statistics of arithmetic functions and L-function zeros"};
  app.option_defaults()->take_last();
  app.require_subcommand(1);

  Common common;
  VarianceArgs variance;
  CorrelateArgs correlate;
  HlArgs hl;
  PaircorrArgs paircorr;
  ModelArgs model;
  CoeffsArgs coeffs;

  auto* v = app.add_subcommand("variance", "Var(X, h) / h over a grid of window lengths");
  add_common(v, common, true);
  v->add_option("--x", variance.x, "upper end X of the averaging range")->required();
  v->add_option("--h-min", variance.h_min, "smallest h of the geometric grid")->capture_default_str();
  v->add_option("--h-max", variance.h_max, "largest h of the geometric grid")->capture_default_str();
  v->add_option("--ratio", variance.ratio, "ratio between consecutive h")->capture_default_str();
  v->add_option("--h-list", variance.h_list, "explicit h values, items a or a:b:step");

  auto* c = app.add_subcommand("correlate", "running correlation averages C(r, N)");
  add_common(c, common, true);
  c->add_option("--r", correlate.r, "comma separated shifts");
  c->add_option("--n", correlate.n, "largest N")->required();
  c->add_option("--step", correlate.step, "spacing of the reported N")->capture_default_str();

  auto* h = app.add_subcommand("hl", "Hardy-Littlewood singular series");
  add_common(h, common, false);
  h->add_option("--r", hl.r, "comma separated shifts");
  h->add_option("--cutoff", hl.cutoff, "largest prime in the Euler product")->capture_default_str();

  auto* p = app.add_subcommand("paircorr", "Montgomery's F(X, T) on a zero list");
  add_common(p, common, false);
  p->add_option("--zeros", paircorr.zeros, "file of zero ordinates, one per line")->required();
  p->add_option("--x", paircorr.x, "X > 1")->required();
  p->add_option("--t", paircorr.t, "height T, at most the largest ordinate")->required();
  p->add_option("--delta-cut", paircorr.delta_cut, "pair distance cut, inf for none");

  auto* m = app.add_subcommand("model", "sine kernel and the zeta R2 model on a grid");
  add_common(m, common, false);
  m->add_option("--x-grid", model.x_grid, "x values, items a or a:b:step")->capture_default_str();
  m->add_option("--t", model.t, "height T of the off-diagonal term")->capture_default_str();
  m->add_option("--cutoff", model.cutoff, "prime cutoff of the Euler products");

  auto* k = app.add_subcommand("coeffs", "build, validate or import the coefficient cache");
  add_common(k, common, true);
  k->add_option("--limit", coeffs.limit, "largest n the cache must cover");
  k->add_option("--legacy-list", coeffs.legacy_list, "one coefficient per prime, in order");

  try {
    args = expand_config(std::move(args));
    std::vector<std::string> reversed(args.rbegin(), args.rend() - 1);
    app.parse(std::move(reversed));
  } catch (const CLI::ParseError& e) {
    std::ostringstream text, diag;
    const int code = app.exit(e, text, diag);
    out << text.str();
    err << diag.str();
    return code == 0 ? exit_ok : exit_invalid;
  } catch (const lstat::error& e) {
    err << "error: " << e.what() << '\n';
    return exit_invalid;
  }

  try {
    if (common.threads < 0) throw invalid_argument_error("--threads must be >= 0");
    set_thread_count(common.threads);
    if (v->parsed()) return cmd_variance(common, variance, out, err);
    if (c->parsed()) return cmd_correlate(common, correlate, out, err);
    if (h->parsed()) return cmd_hl(common, hl, out);
    if (p->parsed()) return cmd_paircorr(common, paircorr, out);
    if (m->parsed()) return cmd_model(common, model, out);
    return cmd_coeffs(common, coeffs, out, err);
  } catch (const capacity_error& e) {
    err << "error: " << e.what() << '\n';
    return exit_capacity;
  } catch (const data_integrity_error& e) {
    err << "error: " << e.what() << '\n';
    return exit_data;
  } catch (const lstat::error& e) {
    err << "error: " << e.what() << '\n';
    return exit_invalid;
  } catch (const fs::filesystem_error& e) {
    err << "error: " << e.what() << '\n';
    return exit_data;
  }
}

}  // namespace lstat::cli
