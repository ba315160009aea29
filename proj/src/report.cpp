#include "thuemorse/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <map>
#include <sstream>
#include <stdexcept>

namespace thuemorse {

using nlohmann::json;

namespace {

// Rounded to 12 significant digits so JSON and CSV carry the same value.
double round12(double v) {
  if (!std::isfinite(v)) return v;
  return std::stod(format_real(v));
}

json int128_json(Int128 v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(v);
  return to_string(v);
}

std::vector<std::string> split_csv_line(std::string_view line) {
  std::vector<std::string> out;
  std::string cell;
  for (char ch : line) {
    if (ch == ',') {
      out.push_back(cell);
      cell.clear();
    } else if (ch != '\r') {
      cell.push_back(ch);
    }
  }
  out.push_back(cell);
  return out;
}

std::vector<std::string> lines_of(std::string_view text) {
  std::vector<std::string> lines;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string line(text.substr(start, end - start));
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty()) lines.push_back(std::move(line));
    start = end + 1;
  }
  return lines;
}

std::size_t column(const std::vector<std::string>& header, const std::string& name) {
  const auto it = std::find(header.begin(), header.end(), name);
  if (it == header.end()) throw std::invalid_argument("CSV is missing column '" + name + "'");
  return static_cast<std::size_t>(it - header.begin());
}

Natural parse_natural(const std::string& s) {
  std::size_t used = 0;
  const unsigned long long v = std::stoull(s, &used);
  if (used != s.size() || s.front() == '-') throw std::invalid_argument("not a natural number: " + s);
  return v;
}

double adjacent_main_term(const AdjacentTable& t, int i, int k) {
  return static_cast<double>(t.X) / (i == k ? 6.0 : 3.0);
}

}  // namespace

void SumLadder::add(Natural X, double value) {
  if (!samples_.empty() && X <= samples_.back().X) throw std::invalid_argument("ladder X must be strictly increasing");
  if (!(value >= 0.0)) throw std::invalid_argument("ladder values must be nonnegative");
  samples_.push_back({X, value});
}

ExponentFit fit_exponent(const SumLadder& ladder) {
  if (ladder.size() < 3) throw std::invalid_argument("need >= 3 samples");
  ExponentFit fit;
  fit.n_samples = ladder.size();
  std::vector<double> xs, ys;
  for (const auto& s : ladder.samples()) {
    if (s.X < 2) throw std::invalid_argument("ladder X must be at least 2");
    xs.push_back(std::log2(static_cast<double>(s.X)));
    if (s.value < 1.0) ++fit.clamped;
    ys.push_back(std::log2(std::max(s.value, 1.0)));
  }
  const auto n = static_cast<double>(xs.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
  }
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  for (std::size_t i = 0; i < xs.size(); ++i)
    fit.max_residual = std::max(fit.max_residual, std::abs(ys[i] - (fit.intercept + fit.slope * xs[i])));
  return fit;
}

std::string format_real(double v) {
  if (std::isfinite(v) && v == std::trunc(v) && std::abs(v) < 9007199254740992.0) {
    if (v == 0.0) return "0";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.0f", v);
    return buf;
  }
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

json to_json(const SumLadder& ladder) {
  json samples = json::array();
  for (const auto& s : ladder.samples()) {
    json value = round12(s.value);
    if (s.value == std::trunc(s.value) && std::abs(s.value) < 9007199254740992.0)
      value = static_cast<std::int64_t>(s.value);
    samples.push_back({{"X", s.X}, {"value", value}});
  }
  return {{"label", ladder.label()}, {"samples", samples}};
}

json to_json(const ExponentFit& fit) {
  return {{"slope", round12(fit.slope)},
          {"intercept", round12(fit.intercept)},
          {"max_residual", round12(fit.max_residual)},
          {"n_samples", fit.n_samples},
          {"clamped_values", fit.clamped}};
}

json to_json(const CountTable& t) {
  json cells = json::array();
  for (int i = 0; i < 2; ++i)
    for (int k = 0; k < 2; ++k)
      cells.push_back({{"i", i}, {"k", k}, {"cell", t.cell(i, k)}, {"deviation", round12(t.deviation(i, k))}});
  return {{"q", t.q}, {"r", t.r}, {"X", t.X}, {"main_term", round12(t.main_term())}, {"cells", cells}};
}

json to_json(const AdjacentTable& t) {
  json cells = json::array();
  for (int i = 0; i < 2; ++i)
    for (int k = 0; k < 2; ++k) {
      const double main = adjacent_main_term(t, i, k);
      cells.push_back({{"i", i},
                       {"k", k},
                       {"cell", t.cell(i, k)},
                       {"main_term", round12(main)},
                       {"deviation", round12(static_cast<double>(t.cell(i, k)) - main)}});
    }
  return {{"X", t.X}, {"cells", cells}};
}

json to_json(const SpectralReport& report, const IntegerMatrix& transfer) {
  json matrix = json::array();
  for (std::size_t i = 0; i < transfer.dim(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < transfer.dim(); ++j) row.push_back(int128_json(transfer(i, j)));
    matrix.push_back(row);
  }
  json coeffs = json::array();
  for (Int128 c : report.poly.poly().coefficients()) coeffs.push_back(int128_json(c));
  json eig = json::array();
  for (const auto& e : report.eigenvalues)
    eig.push_back({{"re", round12(e.value.real())},
                   {"im", round12(e.value.imag())},
                   {"modulus", round12(std::abs(e.value))},
                   {"multiplicity", e.multiplicity}});
  return {{"q", report.q},
          {"transfer", matrix},
          {"char_poly", {{"coefficients_ascending", coeffs}, {"text", report.poly.to_string()}}},
          {"eigenvalues", eig},
          {"radius", round12(report.radius)},
          {"exponent", round12(report.exponent)},
          {"clustering_agrees", report.clustering_agrees}};
}

json to_json(const PhaseScan& scan) {
  return {{"X", scan.X}, {"grid", scan.grid}, {"p", scan.p}, {"modulus", round12(scan.modulus)}};
}

std::string emit(const SumLadder& ladder, Format format) {
  if (format == Format::json) return to_json(ladder).dump(2) + "\n";
  std::string out = "X,value\n";
  for (const auto& s : ladder.samples()) out += std::to_string(s.X) + "," + format_real(s.value) + "\n";
  return out;
}

std::string emit(const ExponentFit& fit, Format format) {
  if (format == Format::json) return to_json(fit).dump(2) + "\n";
  return "slope,intercept,max_residual,n_samples,clamped_values\n" + format_real(fit.slope) + "," +
         format_real(fit.intercept) + "," + format_real(fit.max_residual) + "," + std::to_string(fit.n_samples) +
         "," + std::to_string(fit.clamped) + "\n";
}

std::string emit(const std::vector<CountTable>& tables, Format format) {
  if (format == Format::json) {
    json arr = json::array();
    for (const auto& t : tables) arr.push_back(to_json(t));
    return arr.dump(2) + "\n";
  }
  std::string out = "X,q,r,i,k,cell,deviation\n";
  for (const auto& t : tables)
    for (int i = 0; i < 2; ++i)
      for (int k = 0; k < 2; ++k)
        out += std::to_string(t.X) + "," + std::to_string(t.q) + "," + std::to_string(t.r) + "," +
               std::to_string(i) + "," + std::to_string(k) + "," + std::to_string(t.cell(i, k)) + "," +
               format_real(t.deviation(i, k)) + "\n";
  return out;
}

std::string emit(const std::vector<AdjacentTable>& tables, Format format) {
  if (format == Format::json) {
    json arr = json::array();
    for (const auto& t : tables) arr.push_back(to_json(t));
    return arr.dump(2) + "\n";
  }
  std::string out = "X,i,k,cell,main_term,deviation\n";
  for (const auto& t : tables)
    for (int i = 0; i < 2; ++i)
      for (int k = 0; k < 2; ++k) {
        const double main = adjacent_main_term(t, i, k);
        out += std::to_string(t.X) + "," + std::to_string(i) + "," + std::to_string(k) + "," +
               std::to_string(t.cell(i, k)) + "," + format_real(main) + "," +
               format_real(static_cast<double>(t.cell(i, k)) - main) + "\n";
      }
  return out;
}

std::string emit(const std::vector<CorrelationRow>& rows, Format format) {
  const bool checked = std::any_of(rows.begin(), rows.end(), [](const auto& r) { return r.check.has_value(); });
  if (format == Format::json) {
    json arr = json::array();
    for (const auto& row : rows) {
      json j = {{"X", row.X}, {"r", row.r}, {"value", row.value}};
      if (row.check) j["check"] = *row.check ? "ok" : "mismatch";
      arr.push_back(j);
    }
    return arr.dump(2) + "\n";
  }
  std::string out = checked ? "X,r,value,check\n" : "X,r,value\n";
  for (const auto& row : rows) {
    out += std::to_string(row.X) + "," + std::to_string(row.r) + "," + std::to_string(row.value);
    if (checked) out += "," + std::string(!row.check ? "skipped" : *row.check ? "ok" : "mismatch");
    out += "\n";
  }
  return out;
}

std::string emit(const std::vector<PhaseScan>& scans, Format format) {
  if (format == Format::json) {
    json arr = json::array();
    for (const auto& s : scans) arr.push_back(to_json(s));
    return arr.dump(2) + "\n";
  }
  std::string out = "X,grid,p,modulus\n";
  for (const auto& s : scans)
    out += std::to_string(s.X) + "," + std::to_string(s.grid) + "," + std::to_string(s.p) + "," +
           format_real(s.modulus) + "\n";
  return out;
}

std::string emit(const SpectralReport& report, const IntegerMatrix& transfer, Format format) {
  if (format == Format::json) return to_json(report, transfer).dump(2) + "\n";
  std::string out = "re,im,modulus,multiplicity\n";
  for (const auto& e : report.eigenvalues)
    out += format_real(e.value.real()) + "," + format_real(e.value.imag()) + "," + format_real(std::abs(e.value)) +
           "," + std::to_string(e.multiplicity) + "\n";
  return out;
}

SumLadder parse_ladder_csv(std::string_view text, std::string label) {
  const auto lines = lines_of(text);
  SumLadder ladder(std::move(label));
  if (lines.empty()) return ladder;
  const auto header = split_csv_line(lines.front());
  const std::size_t cx = column(header, "X");
  const std::size_t cv = column(header, "value");
  std::map<Natural, double> best;
  for (std::size_t n = 1; n < lines.size(); ++n) {
    const auto cells = split_csv_line(lines[n]);
    if (cells.size() <= std::max(cx, cv)) throw std::invalid_argument("CSV row " + std::to_string(n + 1) + " is short");
    const Natural X = parse_natural(cells[cx]);
    const double v = std::abs(std::stod(cells[cv]));
    auto [it, inserted] = best.emplace(X, v);
    if (!inserted) it->second = std::max(it->second, v);
  }
  for (const auto& [X, v] : best) ladder.add(X, v);
  return ladder;
}

std::vector<CountTable> parse_count_csv(std::string_view text) {
  const auto lines = lines_of(text);
  std::vector<CountTable> out;
  if (lines.empty()) return out;
  const auto header = split_csv_line(lines.front());
  const std::size_t cx = column(header, "X"), cq = column(header, "q"), cr = column(header, "r");
  const std::size_t ci = column(header, "i"), ck = column(header, "k"), cc = column(header, "cell");
  for (std::size_t n = 1; n < lines.size(); ++n) {
    const auto cells = split_csv_line(lines[n]);
    if (cells.size() < header.size()) throw std::invalid_argument("CSV row " + std::to_string(n + 1) + " is short");
    const Natural X = parse_natural(cells[cx]), q = parse_natural(cells[cq]), r = parse_natural(cells[cr]);
    const Natural i = parse_natural(cells[ci]), k = parse_natural(cells[ck]);
    if (i > 1 || k > 1) throw std::invalid_argument("class index must be 0 or 1");
    if (out.empty() || out.back().X != X || out.back().q != q || out.back().r != r) out.push_back(CountTable{q, r, X, {}});
    out.back().cells[i][k] = parse_natural(cells[cc]);
  }
  return out;
}

}  // namespace thuemorse
