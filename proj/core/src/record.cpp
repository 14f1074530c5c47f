#include "elat/record.hpp"

#include "elat/bound.hpp"
#include "elat/count.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <chrono>
#include <istream>
#include <ostream>
#include <sstream>

namespace elat::record {

namespace {

constexpr std::size_t kFields = 20;

std::string flag(bool b) { return b ? "true" : "false"; }

std::string real_str(const Real& v) { return format_real(v, working_digits()); }

// Field order of kCsvHeader.
std::array<std::string*, kFields> fields(RunRecord& r) {
  return {&r.a,        &r.x,        &r.n_count,  &r.volume,     &r.p_value,
          &r.rhs_total, &r.terms[0], &r.terms[1], &r.terms[2],   &r.terms[3],
          &r.terms[4], &r.terms[5], &r.l_factor, &r.y,          &r.z,
          &r.precond_27, &r.precond_28, &r.holds, &r.margin,   &r.wall_time_ms};
}

std::array<std::string, kFields> field_names() {
  std::array<std::string, kFields> names;
  std::string_view rest = kCsvHeader;
  for (std::size_t i = 0; i < kFields; ++i) {
    const auto comma = rest.find(',');
    names[i] = std::string(rest.substr(0, comma));
    rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
  }
  return names;
}

bool is_flag_field(std::size_t i) { return i == 15 || i == 16 || i == 17; }

}  // namespace

Format parse_format(std::string_view text) {
  if (text == "csv") return Format::csv;
  if (text == "json") return Format::json;
  throw ParseError("unknown format: " + std::string(text));
}

RunRecord make_record(const EllipsoidParams& p, const RecordOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  RunRecord r;
  r.a = to_string(p.a);
  r.x = to_string(p.x);

  std::optional<bound::BoundBreakdown> rhs;
  if (options.with_bound) {
    rhs = bound::theorem_rhs(p);
    r.rhs_total = real_str(rhs->total);
    for (std::size_t i = 0; i < 6; ++i) r.terms[i] = real_str(rhs->terms[i]);
    r.l_factor = real_str(rhs->l_factor);
    r.y = real_str(rhs->y);
    r.z = real_str(rhs->z);
    r.precond_27 = flag(rhs->precond_27);
    r.precond_28 = flag(rhs->precond_28);
  }

  if (options.with_count) {
    try {
      const auto d = count::discrepancy(p, {options.threads, options.budget});
      r.n_count = d.n_count.get_str();
      r.volume = real_str(d.volume);
      r.p_value = real_str(d.p_value);
      if (rhs && rhs->valid()) {
        const Real margin = rhs->total - abs(d.p_value);
        r.holds = flag(margin >= 0);
        r.margin = real_str(margin);
      }
    } catch (const BudgetExceeded&) {
      r.n_count = std::string(kBudgetExceeded);
    }
  }

  if (options.timing) {
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - start);
    r.wall_time_ms = std::to_string(ms.count());
  }
  return r;
}

void write_csv(std::ostream& os, const std::vector<RunRecord>& rows) {
  os << kCsvHeader << '\n';
  for (RunRecord r : rows) {
    const auto f = fields(r);
    for (std::size_t i = 0; i < kFields; ++i) {
      if (i) os << ',';
      os << *f[i];
    }
    os << '\n';
  }
}

void write_json(std::ostream& os, const std::vector<RunRecord>& rows) {
  const auto names = field_names();
  nlohmann::ordered_json doc = nlohmann::ordered_json::array();
  for (RunRecord r : rows) {
    const auto f = fields(r);
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < kFields; ++i) {
      const std::string& v = *f[i];
      if (v.empty()) {
        obj[names[i]] = nullptr;
      } else if (is_flag_field(i)) {
        obj[names[i]] = v == "true";
      } else {
        obj[names[i]] = v;
      }
    }
    doc.push_back(std::move(obj));
  }
  os << doc.dump(2) << '\n';
}

void write(std::ostream& os, const std::vector<RunRecord>& rows, Format format) {
  format == Format::csv ? write_csv(os, rows) : write_json(os, rows);
}

std::vector<RunRecord> read_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line) || line != kCsvHeader) throw ParseError("CSV header mismatch");
  std::vector<RunRecord> rows;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    RunRecord r;
    const auto f = fields(r);
    std::size_t pos = 0;
    for (std::size_t i = 0; i < kFields; ++i) {
      const auto comma = line.find(',', pos);
      if ((comma == std::string::npos) != (i + 1 == kFields)) {
        throw ParseError("CSV row has the wrong number of fields: " + line);
      }
      *f[i] = line.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
      pos = comma + 1;
    }
    rows.push_back(std::move(r));
  }
  return rows;
}

std::vector<RunRecord> read_json(std::istream& is) {
  nlohmann::ordered_json doc;
  try {
    is >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("JSON: ") + e.what());
  }
  if (!doc.is_array()) throw ParseError("JSON document must be an array of records");
  const auto names = field_names();
  std::vector<RunRecord> rows;
  for (const auto& obj : doc) {
    if (!obj.is_object() || obj.size() != kFields) throw ParseError("malformed JSON record");
    RunRecord r;
    const auto f = fields(r);
    for (std::size_t i = 0; i < kFields; ++i) {
      const auto it = obj.find(names[i]);
      if (it == obj.end()) throw ParseError("JSON record lacks field " + names[i]);
      if (it->is_null()) continue;
      if (is_flag_field(i) && it->is_boolean()) {
        *f[i] = flag(it->get<bool>());
      } else if (it->is_string()) {
        *f[i] = it->get<std::string>();
      } else {
        throw ParseError("JSON field " + names[i] + " has the wrong type");
      }
    }
    rows.push_back(std::move(r));
  }
  return rows;
}

std::vector<RunRecord> read(std::istream& is, Format format) {
  return format == Format::csv ? read_csv(is) : read_json(is);
}

void SweepSpec::validate() const {
  if (a_values.empty() || x_values.empty()) throw DomainError("sweep needs a and x values");
  if (budget == 0) throw DomainError("sweep budget must be positive");
  if (precision < 15) throw DomainError("sweep precision must be at least 15 digits");
}

std::vector<RunRecord> run_sweep(const SweepSpec& spec) {
  spec.validate();
  const ScopedPrecision scope(spec.precision);
  auto sorted = [](std::vector<Rational> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
  };
  const auto as = sorted(spec.a_values);
  const auto xs = sorted(spec.x_values);
  RecordOptions options;
  options.threads = spec.threads;
  options.budget = spec.budget;
  options.timing = spec.timing;
  std::vector<RunRecord> rows;
  rows.reserve(as.size() * xs.size());
  for (const Rational& a : as) {
    for (const Rational& x : xs) rows.push_back(make_record(EllipsoidParams(a, x), options));
  }
  return rows;
}

}  // namespace elat::record
