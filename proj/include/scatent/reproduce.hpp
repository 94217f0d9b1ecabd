#pragma once

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "scatent/entropy.hpp"

namespace scatent {

// How a computed value is judged against its expectation.
//   Within:  |computed - expected| <= tolerance
//   AtLeast: computed >= expected - tolerance
//   Above:   computed >  expected + tolerance
enum class Comparison { Within, AtLeast, Above };

struct ExpectedValue {
  std::string label;
  double value = 0.0;
  double tolerance = 0.0;
  Comparison comparison = Comparison::Within;
  std::string provenance;  // what the expectation rests on
};

struct ReproductionTarget {
  std::string id;
  std::string description;
  std::vector<ExpectedValue> expected_values;
};

struct ReportRow {
  std::string label;
  double computed = 0.0;
  double expected = 0.0;
  double tolerance = 0.0;
  Comparison comparison = Comparison::Within;
  bool pass = false;
};

// The data behind a figure: one header and numeric rows. Empty cells are NaN.
struct FigureTable {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;
};

struct ReproductionReport {
  std::string target;
  std::vector<ReportRow> rows;  // sorted by label
  FigureTable figure;

  bool all_pass() const;
};

const std::vector<ReproductionTarget>& reproduction_targets();
const ReproductionTarget& find_target(std::string_view id);  // throws UnknownCatalogId

bool judge(Comparison comparison, double computed, double expected, double tolerance);
const char* to_string(Comparison comparison);

// Computation failures inside a target become failing rows, not exceptions.
ReproductionReport reproduce(std::string_view id, const QuadratureOptions& options = {});

// `label,computed,expected,tolerance,status`
void write_report_csv(std::ostream& out, const std::vector<ReportRow>& rows);
void write_figure_csv(std::ostream& out, const FigureTable& table);

}  // namespace scatent
