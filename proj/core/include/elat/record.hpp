// One row of a sweep: exact count, discrepancy, the bound breakdown and the
// verdict for a single (a, x). Every field is held as text in its emitted
// form, which makes CSV and JSON round trips byte-identical.

#pragma once

#include "elat/ellipsoid.hpp"
#include "elat/numeric.hpp"

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace elat::record {

/// Fixed CSV header.
inline constexpr std::string_view kCsvHeader =
    "a,x,n_count,volume,p_value,rhs_total,t1,t2,t3,t4,t5,t6,l_factor,y,z,precond_27,"
    "precond_28,holds,margin,wall_time_ms";

/// Placed in n_count when the cell's count exceeded the budget.
inline constexpr std::string_view kBudgetExceeded = "budget_exceeded";

enum class Format { csv, json };
Format parse_format(std::string_view text);

struct RunRecord {
  std::string a;
  std::string x;
  std::string n_count;  // exact integer, empty, or kBudgetExceeded
  std::string volume;
  std::string p_value;
  std::string rhs_total;
  std::array<std::string, 6> terms;
  std::string l_factor;
  std::string y;
  std::string z;
  std::string precond_27;  // "true" / "false" / empty
  std::string precond_28;
  std::string holds;       // empty when the precondition fails or the count is missing
  std::string margin;
  std::string wall_time_ms;

  bool operator==(const RunRecord&) const = default;
};

struct RecordOptions {
  bool with_count = true;
  bool with_bound = true;
  unsigned threads = 0;
  std::uint64_t budget = kDefaultBudget;
  bool timing = false;  // wall_time_ms stays empty otherwise, keeping output reproducible
};

/// Reals are formatted with working_digits() significant digits.
RunRecord make_record(const EllipsoidParams& p, const RecordOptions& options = {});

void write_csv(std::ostream& os, const std::vector<RunRecord>& rows);
void write_json(std::ostream& os, const std::vector<RunRecord>& rows);
void write(std::ostream& os, const std::vector<RunRecord>& rows, Format format);

/// Throws ParseError on a malformed document or header mismatch.
std::vector<RunRecord> read_csv(std::istream& is);
std::vector<RunRecord> read_json(std::istream& is);
std::vector<RunRecord> read(std::istream& is, Format format);

struct SweepSpec {
  std::vector<Rational> a_values;
  std::vector<Rational> x_values;
  std::uint64_t budget = kDefaultBudget;
  unsigned precision = kDefaultDigits;
  std::string output_path;  // empty: caller's stream
  Format format = Format::csv;
  unsigned threads = 0;
  bool timing = false;

  /// Nonempty lists, budget > 0, precision >= 15. Throws DomainError.
  void validate() const;
};

/// Rows sorted by a, then x, with duplicates removed. Budget overruns are
/// recorded in-row. Sets the working precision for the duration.
std::vector<RunRecord> run_sweep(const SweepSpec& spec);

}  // namespace elat::record
