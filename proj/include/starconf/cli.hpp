#pragma once

/// Command-line driver: verify, sweep, paper-examples, pn and hilbert.
///
/// Exit status: 0 on success (CERTIFIED or EMPTY), 1 when a check fails (a GAP
/// row, a failed reproduction, a Hilbert function mismatch), 2 on usage
/// errors, 3 on any other error.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "starconf/certificate.hpp"
#include "starconf/pn_lab.hpp"
#include "starconf/poly_io.hpp"
#include "starconf/reference_forms.hpp"
#include "starconf/tangent.hpp"

namespace starconf::cli {

enum ExitCode : int { kOk = 0, kCheckFailed = 1, kUsage = 2, kError = 3 };

class UsageError : public Error {
 public:
  using Error::Error;
};

enum class Format { Table, Csv, Json };

inline constexpr Count kSweepMaxL = 10;
inline constexpr Count kSweepMaxD = 15;
inline constexpr Count kPnMaxN = 3;
inline constexpr Count kPnMaxL = 6;
inline constexpr Count kPnMaxD = 7;

struct RunConfig {
  std::string subcommand;
  Count d = -1;
  Count l = -1;
  Count n = 3;
  Count dmin = 0;
  Count dmax = -1;
  Count lmin = 2;
  Count lmax = -1;
  Count tmax = 10;
  FieldChoice field;
  int trials = 3;
  std::uint64_t seed = 0;
  Format format = Format::Table;
  bool paper_forms = false;
  std::string forms_file;
  std::string export_config;
  int jobs = 1;
  bool verbose = false;
  bool timing = false;
  bool no_limits = false;
};

/// Parse one linear form per line; blank lines and lines starting with '#' are skipped.
template <ExactField K>
std::vector<LinearForm<K>> read_forms(const K& field, std::istream& in, std::size_t vars = 3) {
  std::vector<LinearForm<K>> forms;
  std::string line;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    forms.push_back(LinearForm<K>::from_poly(parse_poly(field, vars, line)));
  }
  return forms;
}

namespace detail {

inline std::string field_label(const FieldChoice& f) { return f.label(); }

inline std::string opt(const std::optional<Count>& v) { return v ? std::to_string(*v) : std::string(); }

inline void write_csv_header(std::ostream& out) {
  out << "d,l,field,lower_bound,theorem_value,min_upper_bound,verdict,seed,elapsed_ms\n";
}

inline void write_csv_row(std::ostream& out, const DimensionCertificate& c, std::uint64_t seed, long long elapsed_ms) {
  out << c.d << ',' << c.l << ',' << field_label(c.field) << ',' << opt(c.lower_bound) << ',' << opt(c.theorem_value)
      << ',' << opt(c.min_upper()) << ',' << to_string(c.verdict) << ',' << seed << ',' << elapsed_ms << '\n';
}

inline void write_table_header(std::ostream& out) {
  out << std::left << std::setw(4) << "d" << std::setw(4) << "l" << std::setw(8) << "lower" << std::setw(9) << "theorem"
      << std::setw(7) << "upper" << std::setw(10) << "branch" << "verdict\n";
}

inline void write_table_row(std::ostream& out, const DimensionCertificate& c) {
  out << std::left << std::setw(4) << c.d << std::setw(4) << c.l << std::setw(8) << opt(c.lower_bound) << std::setw(9)
      << opt(c.theorem_value) << std::setw(7) << opt(c.min_upper()) << std::setw(10) << to_string(c.branch)
      << to_string(c.verdict) << '\n';
}

inline void log_trials(std::ostream& log, const DimensionCertificate& c) {
  for (std::size_t t = 0; t < c.trial_dims.size(); ++t)
    log << "d=" << c.d << " l=" << c.l << " trial=" << t << " seed=" << c.seeds[t] << " tangent_dim=" << c.trial_dims[t]
        << '\n';
  if (!c.trial_dims.empty() &&
      std::any_of(c.trial_dims.begin(), c.trial_dims.end(), [&](Count x) { return x != c.trial_dims.front(); }))
    log << "d=" << c.d << " l=" << c.l << " note: trials disagree; the maximum is used\n";
}

template <ExactField K>
SamplingOptions<K> sampling_options(const RunConfig& cfg, const K& field, Count& l) {
  SamplingOptions<K> opts;
  if (!cfg.forms_file.empty()) {
    std::ifstream in(cfg.forms_file);
    if (!in) throw UsageError("cannot read forms file " + cfg.forms_file);
    auto forms = read_forms(field, in);
    if (l < 0) l = static_cast<Count>(forms.size());
    if (static_cast<Count>(forms.size()) != l)
      throw UsageError("forms file has " + std::to_string(forms.size()) + " forms but --l is " + std::to_string(l));
    opts.fixed_forms = std::move(forms);
  } else if (cfg.paper_forms) {
    if (l < 2) throw UsageError("--l must be at least 2");
    opts.fixed_forms = reference_forms(field, static_cast<std::size_t>(l));
    opts.multipliers = MultiplierPolicy::Structured;
  }
  return opts;
}

template <ExactField K>
void export_star(const std::string& path, const StarConfiguration<K>& star) {
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write " + path);
  out << star_to_json(star).dump(2) << '\n';
}

}  // namespace detail

inline int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& log) {
  if (cfg.d < 0) throw UsageError("--d must be given and non-negative");
  if (cfg.trials < 1) throw UsageError("--trials must be at least 1");
  return with_field(cfg.field, [&](const auto& field) {
    using K = std::decay_t<decltype(field)>;
    Count l = cfg.l;
    const auto opts = detail::sampling_options<K>(cfg, field, l);
    if (l < 2) throw UsageError("--l must be given and at least 2");
    const auto cert = certify(cfg.d, l, field, cfg.trials, cfg.seed, opts);
    if (cfg.verbose) detail::log_trials(log, cert);
    if (!cfg.export_config.empty()) {
      if (cert.verdict == Verdict::Empty) {
        auto forms = opts.fixed_forms ? *opts.fixed_forms : random_general_forms(static_cast<std::size_t>(l), cfg.seed, field);
        detail::export_star(cfg.export_config, build_star(std::move(forms)));
      } else {
        const auto best = std::max_element(cert.trial_dims.begin(), cert.trial_dims.end()) - cert.trial_dims.begin();
        detail::export_star(cfg.export_config, trial_problem(cfg.d, l, field, cert.seeds[best], opts).star);
      }
    }
    switch (cfg.format) {
      case Format::Json: out << to_json(cert).dump(2) << '\n'; break;
      case Format::Csv:
        detail::write_csv_header(out);
        detail::write_csv_row(out, cert, cfg.seed, 0);
        break;
      case Format::Table: {
        out << "d=" << cert.d << " l=" << cert.l << " field=" << cert.field.label() << '\n';
        out << "lower bound:   " << (cert.lower_bound ? std::to_string(*cert.lower_bound) : "-") << '\n';
        out << "theorem value: " << (cert.theorem_value ? std::to_string(*cert.theorem_value) : "empty") << " ("
            << to_string(cert.branch) << ")\n";
        out << "upper bounds: ";
        for (const auto& b : cert.upper_bounds) out << ' ' << b.source << '=' << b.value;
        out << (cert.upper_bounds.empty() ? " -\n" : "\n");
        out << "verdict:       " << to_string(cert.verdict) << '\n';
        break;
      }
    }
    return cert.verdict == Verdict::Gap ? kCheckFailed : kOk;
  });
}

inline int cmd_sweep(const RunConfig& cfg, std::ostream& out, std::ostream& log) {
  if (cfg.lmax < cfg.lmin || cfg.lmin < 2) throw UsageError("empty l range; need 2 <= lmin <= lmax");
  if (cfg.dmax < cfg.dmin || cfg.dmin < 0) throw UsageError("empty d range; need 0 <= dmin <= dmax");
  if (!cfg.no_limits && (cfg.lmax > kSweepMaxL || cfg.dmax > kSweepMaxD))
    throw UsageError("range exceeds desk limits (l <= " + std::to_string(kSweepMaxL) + ", d <= " +
                     std::to_string(kSweepMaxD) + "); pass --no-limits to override");
  if (cfg.trials < 1) throw UsageError("--trials must be at least 1");
  if (cfg.jobs < 1) throw UsageError("--jobs must be at least 1");

  struct Row {
    Count d, l;
    DimensionCertificate cert;
    long long elapsed_ms = 0;
    std::string error;
  };
  std::vector<Row> rows;
  for (Count l = cfg.lmin; l <= cfg.lmax; ++l)
    for (Count d = cfg.dmin; d <= cfg.dmax; ++d) rows.push_back({d, l, {}, 0, {}});

  with_field(cfg.field, [&](const auto& field) {
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      for (std::size_t i = next++; i < rows.size(); i = next++) {
        auto& row = rows[i];
        const auto start = std::chrono::steady_clock::now();
        try {
          row.cert = certify(row.d, row.l, field, cfg.trials, cfg.seed);
        } catch (const std::exception& e) {
          row.error = e.what();
        }
        row.elapsed_ms =
            std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
      }
    };
    std::vector<std::thread> pool;
    const auto workers = std::min<std::size_t>(static_cast<std::size_t>(cfg.jobs), rows.size());
    for (std::size_t i = 1; i < workers; ++i) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
  });

  std::size_t certified = 0, gap = 0, empty = 0, errors = 0;
  for (const auto& r : rows) {
    if (!r.error.empty()) {
      ++errors;
      log << "d=" << r.d << " l=" << r.l << " error: " << r.error << '\n';
      continue;
    }
    if (cfg.verbose) detail::log_trials(log, r.cert);
    certified += r.cert.verdict == Verdict::Certified;
    gap += r.cert.verdict == Verdict::Gap;
    empty += r.cert.verdict == Verdict::Empty;
  }

  std::ostringstream summary;
  summary << "summary: CERTIFIED=" << certified << " GAP=" << gap << " EMPTY=" << empty;
  if (errors) summary << " ERROR=" << errors;

  switch (cfg.format) {
    case Format::Json: {
      nlohmann::json j;
      j["certificates"] = nlohmann::json::array();
      for (const auto& r : rows)
        if (r.error.empty()) j["certificates"].push_back(to_json(r.cert));
      j["summary"] = {{"certified", certified}, {"gap", gap}, {"empty", empty}, {"error", errors}};
      out << j.dump(2) << '\n';
      break;
    }
    case Format::Csv:
      detail::write_csv_header(out);
      for (const auto& r : rows)
        if (r.error.empty()) detail::write_csv_row(out, r.cert, cfg.seed, cfg.timing ? r.elapsed_ms : 0);
      log << summary.str() << '\n';
      break;
    case Format::Table:
      out << "field=" << cfg.field.label() << " trials=" << cfg.trials << " seed=" << cfg.seed << '\n';
      detail::write_table_header(out);
      for (const auto& r : rows)
        if (r.error.empty()) detail::write_table_row(out, r.cert);
      out << summary.str() << '\n';
      break;
  }
  return gap || errors ? kCheckFailed : kOk;
}

struct PaperItem {
  std::string id;
  std::string description;
  Count expected;
  Count actual;
  bool pass() const { return expected == actual; }
};

/// Exact reproductions over Q with the explicit line arrangements.
inline std::vector<PaperItem> paper_examples() {
  const RationalField q;
  std::vector<PaperItem> items;
  {
    const std::vector<HomogeneousPoly<RationalField>> ones(5, HomogeneousPoly<RationalField>::one(q, 3));
    const auto p = make_tangent_problem(build_star(luroth_forms(q)), 4, ones);
    items.push_back({"a", "five lines, d=4, M_i=1: dim I_4", 14, tangent_dim_direct(p)});
  }
  const auto rows = six_line_rows();
  const auto cols = six_line_columns();
  {
    auto star = build_star(six_line_forms(q));
    auto m = theorem41_multipliers(star, 5);
    const auto p = make_tangent_problem(std::move(star), 5, std::move(m));
    items.push_back({"b", "six lines, d=5, M_i=1: rank of 12x12 evaluation matrix", 12, paper_matrix_rank(p, rows, cols)});
  }
  {
    auto star = build_star(six_line_forms(q));
    auto m = theorem41_multipliers(star, 6);
    const auto p = make_tangent_problem(std::move(star), 6, std::move(m));
    items.push_back({"c", "six lines, d=6, M_i=G: rank of 12x12 evaluation matrix", 12, paper_matrix_rank(p, rows, cols)});
  }
  {
    auto star = build_star(reference_forms(q, 7));
    auto m = theorem41_multipliers(star, 6);
    const auto p = make_tangent_problem(std::move(star), 6, std::move(m));
    items.push_back({"d", "seven lines, d=6, M_i=1: rank of 14x14 block matrix", 14,
                     paper_matrix_rank(p, block_rows(7), block_columns(7))});
  }
  {
    auto star = build_star(six_line_forms(q));
    auto m = theorem41_multipliers(star, 7);
    const auto p = make_tangent_problem(std::move(star), 7, std::move(m));
    items.push_back({"e", "six lines, d=7, structured M_i: rank of 12x12 evaluation matrix", 12,
                     paper_matrix_rank(p, rows, cols)});
  }
  return items;
}

inline int cmd_paper_examples(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  const auto items = paper_examples();
  const bool all_pass = std::all_of(items.begin(), items.end(), [](const auto& i) { return i.pass(); });
  if (cfg.format == Format::Json) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& i : items)
      j.push_back({{"item", i.id}, {"description", i.description}, {"expected", i.expected}, {"actual", i.actual},
                   {"status", i.pass() ? "PASS" : "FAIL"}});
    out << j.dump(2) << '\n';
  } else if (cfg.format == Format::Csv) {
    out << "item,expected,actual,status\n";
    for (const auto& i : items) out << i.id << ',' << i.expected << ',' << i.actual << ',' << (i.pass() ? "PASS" : "FAIL") << '\n';
  } else {
    for (const auto& i : items)
      out << (i.pass() ? "PASS" : "FAIL") << " (" << i.id << ") " << i.description << ": expected " << i.expected
          << ", got " << i.actual << '\n';
  }
  return all_pass ? kOk : kCheckFailed;
}

inline int cmd_pn(const RunConfig& cfg, std::ostream& out, std::ostream& log) {
  if (cfg.n < 2) throw UsageError("--n must be at least 2");
  if (cfg.trials < 1) throw UsageError("--trials must be at least 1");
  if (!cfg.no_limits && (cfg.n > kPnMaxN || cfg.lmax > kPnMaxL || cfg.dmax > kPnMaxD))
    throw UsageError("range exceeds desk limits (n <= 3, l <= 6, d <= 7); pass --no-limits to override");
  std::vector<std::pair<Count, Count>> cases;  // (d, l)
  for (Count l = std::max(cfg.n, cfg.lmin); l <= cfg.lmax; ++l)
    for (Count d = std::max(l - 1, cfg.dmin); d <= cfg.dmax; ++d) cases.emplace_back(d, l);
  if (cases.empty()) throw UsageError("empty (d, l) range");

  std::vector<ConjectureRow> rows;
  with_field(cfg.field, [&](const auto& field) {
    for (const auto& [d, l] : cases) rows.push_back(conjecture_row(cfg.n, d, l, field, cfg.trials, cfg.seed));
  });
  if (cfg.verbose)
    for (const auto& r : rows) log << "n=" << r.n << " d=" << r.d << " l=" << r.l << " lower=" << r.lower_bound << '\n';

  switch (cfg.format) {
    case Format::Json: {
      nlohmann::json j = nlohmann::json::array();
      for (const auto& r : rows)
        j.push_back({{"n", r.n}, {"d", r.d}, {"l", r.l}, {"lower_bound", r.lower_bound}, {"formula_min", r.formula_min},
                     {"status", to_string(r.status)}});
      out << j.dump(2) << '\n';
      break;
    }
    case Format::Csv:
      out << "n,d,l,lower_bound,formula_min,status\n";
      for (const auto& r : rows)
        out << r.n << ',' << r.d << ',' << r.l << ',' << r.lower_bound << ',' << r.formula_min << ',' << to_string(r.status)
            << '\n';
      break;
    case Format::Table:
      out << std::left << std::setw(4) << "n" << std::setw(4) << "d" << std::setw(4) << "l" << std::setw(8) << "lower"
          << std::setw(9) << "formula" << "status\n";
      for (const auto& r : rows)
        out << std::left << std::setw(4) << r.n << std::setw(4) << r.d << std::setw(4) << r.l << std::setw(8)
            << r.lower_bound << std::setw(9) << r.formula_min << to_string(r.status) << '\n';
      break;
  }
  return kOk;
}

inline int cmd_hilbert(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  if (cfg.tmax < 0) throw UsageError("--tmax must be non-negative");
  return with_field(cfg.field, [&](const auto& field) {
    using K = std::decay_t<decltype(field)>;
    Count l = cfg.l;
    auto opts = detail::sampling_options<K>(cfg, field, l);
    if (l < 2) throw UsageError("--l must be given and at least 2");
    auto forms = opts.fixed_forms ? *opts.fixed_forms : random_general_forms(static_cast<std::size_t>(l), cfg.seed, field);
    const auto star = build_star(std::move(forms));
    if (!cfg.export_config.empty()) detail::export_star(cfg.export_config, star);

    bool ok = true;
    nlohmann::json j = nlohmann::json::array();
    if (cfg.format == Format::Csv) out << "t,hf,formula,status\n";
    if (cfg.format == Format::Table) out << std::left << std::setw(4) << "t" << std::setw(6) << "hf" << std::setw(9) << "formula" << "status\n";
    for (Count t = 0; t <= cfg.tmax; ++t) {
      const auto hf = static_cast<Count>(hilbert_function(star, static_cast<unsigned>(t)));
      const Count formula = std::min(binomial(t + 2, 2), binomial(l, 2));
      const char* status = hf == formula ? "OK" : "MISMATCH";
      ok = ok && hf == formula;
      if (cfg.format == Format::Json) {
        j.push_back({{"t", t}, {"hf", hf}, {"formula", formula}, {"status", status}});
      } else if (cfg.format == Format::Csv) {
        out << t << ',' << hf << ',' << formula << ',' << status << '\n';
      } else {
        out << std::left << std::setw(4) << t << std::setw(6) << hf << std::setw(9) << formula << status << '\n';
      }
    }
    if (cfg.format == Format::Json) out << j.dump(2) << '\n';
    return ok ? kOk : kCheckFailed;
  });
}

inline int dispatch(const RunConfig& cfg, std::ostream& out, std::ostream& log) {
  if (cfg.subcommand == "verify") return cmd_verify(cfg, out, log);
  if (cfg.subcommand == "sweep") return cmd_sweep(cfg, out, log);
  if (cfg.subcommand == "paper-examples") return cmd_paper_examples(cfg, out, log);
  if (cfg.subcommand == "pn") return cmd_pn(cfg, out, log);
  if (cfg.subcommand == "hilbert") return cmd_hilbert(cfg, out, log);
  throw UsageError("unknown subcommand '" + cfg.subcommand + "'");
}

/// Parse `args` (without the program name) and run. `out` receives reports,
/// `err` diagnostics and verbose logging.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Dimension certificates for plane curves containing a star configuration"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::string format = "table";
  std::string field_name;
  std::uint64_t prime = 0;
  std::string output;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--field", field_name, "rational or prime")->check(CLI::IsMember({"rational", "prime"}));
    sub->add_option("--prime", prime, "prime modulus (implies --field prime)");
    sub->add_option("--format", format, "table, csv or json")->check(CLI::IsMember({"table", "csv", "json"}));
    sub->add_option("--output", output, "write the report to this file");
    sub->add_flag("--verbose", cfg.verbose, "log every trial");
  };
  auto sampling = [&](CLI::App* sub) {
    sub->add_option("--trials", cfg.trials, "random trials per case");
    sub->add_option("--seed", cfg.seed, "base seed");
  };

  auto* verify = app.add_subcommand("verify", "certify dim S(d,l) for one pair");
  verify->add_option("--d", cfg.d, "curve degree")->required();
  verify->add_option("--l", cfg.l, "number of lines");
  verify->add_flag("--paper-forms", cfg.paper_forms, "use the fixed reference line arrangement");
  verify->add_option("--forms-file", cfg.forms_file, "file with one linear form per line");
  verify->add_option("--export-config", cfg.export_config, "write the configuration as JSON");
  common(verify);
  sampling(verify);

  auto* sweep = app.add_subcommand("sweep", "certify every pair in a range");
  sweep->add_option("--dmax", cfg.dmax, "largest degree")->required();
  sweep->add_option("--lmax", cfg.lmax, "largest number of lines")->required();
  sweep->add_option("--dmin", cfg.dmin, "smallest degree");
  sweep->add_option("--lmin", cfg.lmin, "smallest number of lines");
  sweep->add_option("--jobs", cfg.jobs, "rows computed concurrently");
  sweep->add_flag("--timing", cfg.timing, "fill the elapsed_ms column");
  sweep->add_flag("--no-limits", cfg.no_limits, "allow ranges beyond desk scale");
  common(sweep);
  sampling(sweep);

  auto* paper = app.add_subcommand("paper-examples", "reproduce the explicit rank computations");
  common(paper);

  auto* pn = app.add_subcommand("pn", "hyperplane configurations in P^n");
  pn->add_option("--n", cfg.n, "ambient dimension")->required();
  pn->add_option("--dmax", cfg.dmax, "largest degree")->required();
  pn->add_option("--lmax", cfg.lmax, "largest number of hyperplanes")->required();
  pn->add_option("--dmin", cfg.dmin, "smallest degree");
  pn->add_option("--lmin", cfg.lmin, "smallest number of hyperplanes");
  pn->add_flag("--no-limits", cfg.no_limits, "allow ranges beyond desk scale");
  common(pn);
  sampling(pn);

  auto* hilbert = app.add_subcommand("hilbert", "Hilbert function of a star configuration");
  hilbert->add_option("--l", cfg.l, "number of lines");
  hilbert->add_option("--tmax", cfg.tmax, "largest degree");
  hilbert->add_flag("--paper-forms", cfg.paper_forms, "use the fixed reference line arrangement");
  hilbert->add_option("--forms-file", cfg.forms_file, "file with one linear form per line");
  hilbert->add_option("--export-config", cfg.export_config, "write the configuration as JSON");
  hilbert->add_option("--seed", cfg.seed, "seed for random lines");
  common(hilbert);

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
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  }

  for (auto* sub : app.get_subcommands()) cfg.subcommand = sub->get_name();
  cfg.format = format == "csv" ? Format::Csv : format == "json" ? Format::Json : Format::Table;

  try {
    cfg.field.prime = kDefaultPrime;
    if (const char* env = std::getenv("STARCONFIG_PRIME"); env && *env) cfg.field.prime = std::stoull(env);
    if (prime != 0) cfg.field.prime = prime;
    if (field_name == "rational" && prime != 0) throw UsageError("--prime conflicts with --field rational");
    cfg.field.rational = field_name == "rational";
    if (!cfg.field.rational && !is_prime(cfg.field.prime)) throw UsageError(std::to_string(cfg.field.prime) + " is not prime");
    if (cfg.paper_forms && !cfg.forms_file.empty()) throw UsageError("--paper-forms and --forms-file are exclusive");

    if (output.empty()) return dispatch(cfg, out, err);
    std::ofstream file(output);
    if (!file) throw UsageError("cannot write " + output);
    return dispatch(cfg, file, err);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kError;
  }
}

}  // namespace starconf::cli
