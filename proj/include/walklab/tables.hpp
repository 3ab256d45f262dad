#pragma once

#include "walklab/feasibility.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace walklab {

/// Literature annotation for one row of the published feasibility tables.
/// existence is a graph label, "?" (open) or "-" (excluded for a reason
/// outside the spectral conditions).
struct ReferenceRow {
  ThetaClass theta_class;
  long k;
  long n;
  std::string_view existence;
  std::string_view comment;
};

const std::vector<ReferenceRow>& reference_rows();
const ReferenceRow* find_reference(ThetaClass c, long k, long n);

/// A graph that realizes a row, given as a builder expression.
struct Realization {
  std::string label;
  std::string expression;
};

/// Registry lookup: C6⊗Jm, C8⊗Jm and the sporadic examples.
std::optional<Realization> registry_realization(ThetaClass c, long k, long n);

/// Builds the graph, compares its exact spectrum with the row and checks
/// that the walk is periodic.
bool verify_realization(const Realization& r, const FeasibleRow& row);

enum class TableFormat { Text, Csv, Json };
std::optional<TableFormat> parse_format(std::string_view name);

struct TableRow {
  FeasibleRow row;
  std::string status;       ///< eliminated, realized, known, excluded or open
  std::string comment;
  std::string realization;  ///< registry or literature label, "?" or "-"
  bool reference_mismatch = false;
};

/// Every class and even k <= k_max, sorted by (class, k, n).
std::vector<TableRow> build_tables(long k_max, const std::vector<ThetaClass>& classes = {
                                                   ThetaClass::Half, ThetaClass::Sqrt2, ThetaClass::Sqrt3});

/// One class, even k in [k_min, k_max]; an odd k_min == k_max throws like enumerate.
std::vector<TableRow> build_rows(ThetaClass c, long k_min, long k_max);

std::string render_tables(const std::vector<TableRow>& rows, TableFormat format);
std::string render_tables(long k_max, TableFormat format);

/// Plain string view of one CSV line in the table schema.
struct CsvRecord {
  std::vector<std::string> fields;
  friend bool operator==(const CsvRecord&, const CsvRecord&) = default;
};

inline constexpr std::string_view kCsvHeader = "class,k,n,a,b,q,q_x,status,comment,realization";

/// RFC 4180 reader; the first record must be the header. Throws ParseError.
std::vector<CsvRecord> read_csv(std::string_view text);
std::string write_csv(const std::vector<CsvRecord>& records);

}  // namespace walklab
