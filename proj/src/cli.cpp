#include "quartic/cli.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <fstream>
#include <ostream>
#include <thread>

#include <CLI11.hpp>

#include "quartic/classifier.hpp"
#include "quartic/error.hpp"
#include "quartic/oracle.hpp"
#include "quartic/report.hpp"
#include "quartic/simd/kernels.hpp"
#include "quartic/trig_reduction.hpp"

namespace quartic::cli {

namespace {

std::string_view trim(std::string_view s) {
  auto const first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  auto const last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

report::InputEcho echo_of(InputForm form, std::vector<double> const& coefficients) {
  return {form == InputForm::kGeneral ? "general" : "depressed", coefficients};
}

struct Outcome {
  Classification classification;
  report::Json json;
  int status = kSuccess;
};

Outcome evaluate(InputForm form, std::vector<double> const& coefficients,
                 bool verify, Tolerances const& tol) {
  DepressedQuartic const P = prepare(form, coefficients);
  Outcome o;
  o.classification = classify(P, tol);
  Classification const& c = o.classification;
  o.json = report::classification_json(echo_of(form, coefficients), c);
  o.status = c.degenerate() ? kDegenerate : kSuccess;
  if (verify) {
    auto const oracle_report = oracle::run_oracle(P);
    bool const agrees = oracle_report.n_real_distinct == c.n_real_distinct;
    o.json["oracle"] = report::oracle_json(oracle_report, agrees);
    if (!agrees) o.status = kOracleDisagreement;
  }
  return o;
}

}  // namespace

std::vector<double> parse_coefficients(std::string_view text) {
  std::vector<double> values;
  std::size_t start = 0;
  while (true) {
    std::size_t const comma = text.find(',', start);
    std::string_view const raw = text.substr(
        start, comma == std::string_view::npos ? std::string_view::npos
                                               : comma - start);
    std::string_view const token = trim(raw);
    double value = 0.0;
    char const* const first = token.data();
    char const* const last = token.data() + token.size();
    // from_chars rejects a leading '+'.
    char const* begin = first;
    if (begin != last && *begin == '+') ++begin;
    auto const [ptr, ec] = std::from_chars(begin, last, value);
    if (token.empty() || ec != std::errc() || ptr != last ||
        !std::isfinite(value)) {
      throw Error(ErrorKind::kInvalidInput,
                  "unparseable coefficient '" + std::string(token) + "'");
    }
    values.push_back(value);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return values;
}

DepressedQuartic prepare(InputForm form, std::vector<double> const& c) {
  if (form == InputForm::kDepressed) {
    if (c.size() != 3) {
      throw Error(ErrorKind::kInvalidInput,
                  "depressed form needs 3 coefficients m,p,q; got " +
                      std::to_string(c.size()));
    }
    DepressedQuartic P{c[0], c[1], c[2], 0.0};
    require_finite(P);
    return P;
  }
  if (c.size() != 5) {
    throw Error(ErrorKind::kInvalidInput,
                "general form needs 5 coefficients a4,a3,a2,a1,a0; got " +
                    std::to_string(c.size()));
  }
  if (c[0] == 0.0) {
    throw Error(ErrorKind::kInvalidInput, "leading coefficient a4 must be nonzero");
  }
  GeneralQuartic g{c[1] / c[0], c[2] / c[0], c[3] / c[0], c[4] / c[0]};
  return depress(g);
}

int run_classify(RunConfig const& cfg, std::ostream& out, std::ostream& err) {
  Outcome o;
  try {
    o = evaluate(cfg.form, cfg.coefficients, cfg.verify, cfg.tol);
  } catch (Error const& e) {
    err << "error (" << to_string(e.kind()) << "): " << e.what() << '\n';
    return kInputError;
  }

  if (cfg.json) {
    out << report::serialize(o.json) << '\n';
  } else {
    out << report::human_summary(echo_of(cfg.form, cfg.coefficients),
                                 o.classification);
    if (cfg.verify) {
      auto const& oj = o.json["oracle"];
      out << "oracle: sturm n_real=" << oj["n_real_distinct"].get<int>()
          << (oj["agrees"].get<bool>() ? " (agrees)" : " (DISAGREES)") << '\n';
    }
  }
  if (o.status == kDegenerate) {
    err << "warning: degenerate classification; compare with --verify\n";
  } else if (o.status == kOracleDisagreement) {
    err << "error: classifier and oracle disagree on the real-root count\n";
  }
  return o.status;
}

int sample_f(RunConfig const& cfg, std::ostream& out, std::ostream& err) {
  if (!cfg.sample_count || *cfg.sample_count < 2) {
    err << "error: --sample-f needs N >= 2\n";
    return kInputError;
  }
  TrigParams tp;
  try {
    DepressedQuartic const P = prepare(cfg.form, cfg.coefficients);
    if (!(P.m < 0.0)) {
      err << "error: trigonometric reduction requires m < 0\n";
      return kInputError;
    }
    tp = reduce(P);
  } catch (Error const& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  auto const angles = simd::make_angle_table(*cfg.sample_count);
  auto const values = simd::sample_reduced(tp, angles);
  out << "theta,f\n";
  for (std::size_t i = 0; i < values.size(); ++i) {
    out << report::format_double(angles.theta[i]) << ','
        << report::format_double(values[i]) << '\n';
  }
  return kSuccess;
}

int run_batch(RunConfig const& cfg, std::ostream& out, std::ostream& err) {
  std::ifstream in(*cfg.batch_file);
  if (!in) {
    err << "error: cannot open batch file '" << *cfg.batch_file << "'\n";
    return kInputError;
  }
  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);) lines.push_back(line);

  std::vector<std::string> records(lines.size());
  auto process = [&](std::size_t i) {
    report::Json record;
    record["line"] = i + 1;
    try {
      auto const values = parse_coefficients(trim(lines[i]));
      InputForm form;
      if (values.size() == 3) {
        form = InputForm::kDepressed;
      } else if (values.size() == 5) {
        form = InputForm::kGeneral;
      } else {
        throw Error(ErrorKind::kInvalidInput,
                    "expected 3 (m,p,q) or 5 (a4..a0) coefficients, got " +
                        std::to_string(values.size()));
      }
      Outcome o = evaluate(form, values, cfg.verify, cfg.tol);
      for (auto& [key, value] : o.json.items()) record[key] = value;
    } catch (Error const& e) {
      record["error"] = e.what();
    }
    records[i] = report::serialize(record);
  };

  std::size_t const workers = std::clamp<std::size_t>(
      std::thread::hardware_concurrency(), 1, std::max<std::size_t>(lines.size(), 1));
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> pool;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < lines.size(); i = next++) process(i);
    });
  }
  pool.clear();

  for (auto const& r : records) out << r << '\n';
  return kSuccess;
}

int run(int argc, char const* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Classify the real roots of a quartic via its trigonometric reduction"};
  app.name("quartic");
  std::string coeffs;
  std::string depressed;
  std::size_t sample_count = 0;
  std::string batch;
  double tol_scale = 1.0;
  RunConfig cfg;

  auto* general_opt = app.add_option("--coeffs", coeffs,
                                     "general quartic a4,a3,a2,a1,a0 (a4 != 0)");
  auto* depressed_opt =
      app.add_option("--depressed", depressed, "depressed quartic m,p,q");
  auto* batch_opt =
      app.add_option("--batch", batch, "file with one quartic per line");
  general_opt->excludes(depressed_opt)->excludes(batch_opt);
  depressed_opt->excludes(batch_opt);
  app.add_flag("--json", cfg.json, "emit a JSON report");
  app.add_flag("--verify", cfg.verify, "cross-check against the Sturm/root oracle");
  auto* sample_opt = app.add_option("--sample-f", sample_count,
                                    "write N samples of f on [0, pi] as CSV");
  app.add_option("--tol-scale", tol_scale, "multiply every tolerance")
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const&) {
    out << app.help();
    return kSuccess;
  } catch (CLI::ParseError const& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  cfg.tol.scale = tol_scale;

  if (*batch_opt) {
    cfg.batch_file = batch;
    return run_batch(cfg, out, err);
  }
  if (!*general_opt && !*depressed_opt) {
    err << "error: one of --coeffs, --depressed or --batch is required\n";
    return kInputError;
  }
  try {
    cfg.form = *general_opt ? InputForm::kGeneral : InputForm::kDepressed;
    cfg.coefficients = parse_coefficients(*general_opt ? coeffs : depressed);
  } catch (Error const& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  if (*sample_opt) {
    cfg.sample_count = sample_count;
    return sample_f(cfg, out, err);
  }
  return run_classify(cfg, out, err);
}

}  // namespace quartic::cli
