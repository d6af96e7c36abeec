#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "quartic/poly_core.hpp"
#include "quartic/tolerance.hpp"

namespace quartic::cli {

enum ExitStatus : int {
  kSuccess = 0,
  kInputError = 1,
  kDegenerate = 2,
  kOracleDisagreement = 3,
};

enum class InputForm { kGeneral, kDepressed };

struct RunConfig {
  InputForm form = InputForm::kDepressed;
  // a4..a0 for the general form, m, p, q for the depressed form.
  std::vector<double> coefficients;
  bool verify = false;
  bool json = false;
  std::optional<std::size_t> sample_count;
  std::optional<std::string> batch_file;
  Tolerances tol;
};

// Comma-separated reals. Throws quartic::Error(kInvalidInput) naming the
// first token that is not a finite number.
std::vector<double> parse_coefficients(std::string_view text);

// Divides by a4 and depresses a general quartic; passes m, p, q through.
DepressedQuartic prepare(InputForm form, std::vector<double> const& coefficients);

int run_classify(RunConfig const& cfg, std::ostream& out, std::ostream& err);

// CSV `theta,f` on N evenly spaced angles covering [0, pi].
int sample_f(RunConfig const& cfg, std::ostream& out, std::ostream& err);

// One JSON record per input line, in input order.
int run_batch(RunConfig const& cfg, std::ostream& out, std::ostream& err);

// Full command line: parses flags, then dispatches to one of the above.
int run(int argc, char const* const* argv, std::ostream& out, std::ostream& err);

}  // namespace quartic::cli
