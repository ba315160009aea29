#pragma once

// Log-log exponent fits and CSV / JSON serialization of every result type.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "thuemorse/correlation.hpp"
#include "thuemorse/counting.hpp"
#include "thuemorse/expsum.hpp"
#include "thuemorse/spectral.hpp"

namespace thuemorse {

struct LadderSample {
  Natural X;
  double value;
};

class SumLadder {
 public:
  SumLadder() = default;
  explicit SumLadder(std::string label) : label_(std::move(label)) {}

  /// X must be strictly larger than the previous sample's and value >= 0.
  void add(Natural X, double value);

  const std::string& label() const { return label_; }
  const std::vector<LadderSample>& samples() const { return samples_; }
  std::size_t size() const { return samples_.size(); }

 private:
  std::string label_;
  std::vector<LadderSample> samples_;
};

struct ExponentFit {
  double slope = 0.0;
  double intercept = 0.0;
  double max_residual = 0.0;
  Natural n_samples = 0;
  Natural clamped = 0;  // zero values raised to 1 before the log
};

/// Ordinary least squares of log2(max(value, 1)) on log2(X). Throws
/// std::invalid_argument with fewer than 3 samples or any X < 2.
ExponentFit fit_exponent(const SumLadder& ladder);

enum class Format { csv, json };

/// Integral values below 2^53 print without a decimal point; everything else
/// with 12 significant digits.
std::string format_real(double v);

/// One correlation ladder point; `check` is set when an oracle compared it.
struct CorrelationRow {
  Natural X;
  Natural r;
  std::int64_t value;
  std::optional<bool> check;
};

nlohmann::json to_json(const SumLadder& ladder);
nlohmann::json to_json(const ExponentFit& fit);
nlohmann::json to_json(const CountTable& table);
nlohmann::json to_json(const AdjacentTable& table);
nlohmann::json to_json(const SpectralReport& report, const IntegerMatrix& transfer);
nlohmann::json to_json(const PhaseScan& scan);

std::string emit(const SumLadder& ladder, Format format);
std::string emit(const ExponentFit& fit, Format format);
std::string emit(const std::vector<CountTable>& tables, Format format);
std::string emit(const std::vector<AdjacentTable>& tables, Format format);
std::string emit(const std::vector<CorrelationRow>& rows, Format format);
std::string emit(const std::vector<PhaseScan>& scans, Format format);
std::string emit(const SpectralReport& report, const IntegerMatrix& transfer, Format format);

/// Reads a CSV with at least the columns X and value. Several rows with the
/// same X collapse to their largest |value|; rows are sorted by X.
SumLadder parse_ladder_csv(std::string_view text, std::string label = "");

/// Inverse of emit(tables, Format::csv).
std::vector<CountTable> parse_count_csv(std::string_view text);

}  // namespace thuemorse
