#include "unirank/dataset_io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>

#include "unirank/csv.hpp"

namespace unirank {

namespace {

class TableReader {
 public:
  TableReader(const csv::Table& table, std::vector<Issue>& issues) : table_(table), issues_(issues) {}

  /// Resolves required columns; false (with an issue) when one is missing.
  bool require(std::initializer_list<std::string_view> names) {
    bool ok = true;
    for (auto name : names) {
      if (table_.column(name) == std::string::npos) {
        issue(1, 0, "missing column '" + std::string(name) + "'");
        ok = false;
      }
    }
    return ok;
  }

  std::size_t rows() const noexcept { return table_.rows.size(); }

  /// Field text, or empty for a short row or an absent optional column.
  std::string_view text(std::size_t row, std::string_view name) const {
    const std::size_t col = table_.column(name);
    if (col == std::string::npos || col >= table_.rows[row].size()) return {};
    return table_.rows[row][col];
  }

  bool check_width(std::size_t row) {
    if (table_.rows[row].size() != table_.header.size()) {
      issue(table_.lines[row], 0,
            "expected " + std::to_string(table_.header.size()) + " fields, found " +
                std::to_string(table_.rows[row].size()));
      return false;
    }
    return true;
  }

  template <typename Int>
  std::optional<Int> integer(std::size_t row, std::string_view name) {
    const auto field = text(row, name);
    Int value{};
    const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (field.empty() || ec != std::errc{} || ptr != field.data() + field.size()) {
      bad_value(row, name, "integer");
      return std::nullopt;
    }
    return value;
  }

  std::optional<double> real(std::size_t row, std::string_view name) {
    const auto field = text(row, name);
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (field.empty() || ec != std::errc{} || ptr != field.data() + field.size() || !std::isfinite(value)) {
      bad_value(row, name, "number");
      return std::nullopt;
    }
    return value;
  }

  void issue(std::size_t line, std::size_t column, std::string message) {
    issues_.push_back(Issue{table_.path.filename().string(), line, column, std::move(message)});
  }

  void row_issue(std::size_t row, std::string_view name, std::string message) {
    const std::size_t col = table_.column(name);
    issue(table_.lines[row], col == std::string::npos ? 0 : col + 1, std::move(message));
  }

 private:
  void bad_value(std::size_t row, std::string_view name, const char* kind) {
    row_issue(row, name, std::string("'") + std::string(text(row, name)) + "' is not a valid " + kind +
                             " for " + std::string(name));
  }

  const csv::Table& table_;
  std::vector<Issue>& issues_;
};

std::optional<csv::Table> read_table(const std::filesystem::path& path, std::vector<Issue>& issues) {
  try {
    return csv::read(path);
  } catch (const ValidationError& e) {
    issues.insert(issues.end(), e.issues().begin(), e.issues().end());
    return std::nullopt;
  }
}

std::optional<std::string> optional_text(std::string_view field) {
  if (field.empty()) return std::nullopt;
  return std::string(field);
}

std::vector<std::string> split_categories(std::string_view text) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = std::min(text.find(';', start), text.size());
    auto part = text.substr(start, end - start);
    while (!part.empty() && part.front() == ' ') part.remove_prefix(1);
    while (!part.empty() && part.back() == ' ') part.remove_suffix(1);
    if (!part.empty()) out.emplace_back(part);
    start = end + 1;
  }
  return out;
}

void read_professors(const csv::Table& table, DatasetTables& out, std::vector<Issue>& issues) {
  TableReader r(table, issues);
  if (!r.require({"id", "university_id", "sds_id", "rank", "years_active"})) return;
  for (std::size_t i = 0; i < r.rows(); ++i) {
    if (!r.check_width(i)) continue;
    auto years = r.integer<int>(i, "years_active");
    if (!years) continue;
    out.professors.push_back(Professor{std::string(r.text(i, "id")), std::string(r.text(i, "university_id")),
                                       std::string(r.text(i, "sds_id")), std::string(r.text(i, "rank")), *years});
  }
}

void read_publications(const csv::Table& table, DatasetTables& out, std::vector<Issue>& issues) {
  TableReader r(table, issues);
  if (!r.require({"id", "year", "citations", "doc_type", "subject_categories"})) return;
  for (std::size_t i = 0; i < r.rows(); ++i) {
    if (!r.check_width(i)) continue;
    auto year = r.integer<int>(i, "year");
    auto citations = r.integer<std::int64_t>(i, "citations");
    if (!year || !citations) continue;
    out.publications.push_back(Publication{std::string(r.text(i, "id")), *year, *citations,
                                           std::string(r.text(i, "doc_type")),
                                           split_categories(r.text(i, "subject_categories"))});
  }
}

void read_authorships(const csv::Table& table, DatasetTables& out, std::vector<Issue>& issues) {
  TableReader r(table, issues);
  if (!r.require({"publication_id", "byline_position", "total_authors"})) return;
  for (std::size_t i = 0; i < r.rows(); ++i) {
    if (!r.check_width(i)) continue;
    auto position = r.integer<int>(i, "byline_position");
    auto total = r.integer<int>(i, "total_authors");
    if (!position || !total) continue;
    out.authorships.push_back(Authorship{std::string(r.text(i, "publication_id")), *position, *total,
                                         optional_text(r.text(i, "professor_id")),
                                         optional_text(r.text(i, "author_university_id"))});
  }
}

void read_salaries(const csv::Table& table, DatasetTables& out, std::vector<Issue>& issues) {
  TableReader r(table, issues);
  if (!r.require({"rank", "yearly_salary"})) return;
  for (std::size_t i = 0; i < r.rows(); ++i) {
    if (!r.check_width(i)) continue;
    auto salary = r.real(i, "yearly_salary");
    if (!salary) continue;
    if (!out.salaries.emplace(std::string(r.text(i, "rank")), *salary).second) {
      r.row_issue(i, "rank", "duplicate rank '" + std::string(r.text(i, "rank")) + "'");
    }
  }
}

void read_field_scheme_table(const csv::Table& table, DatasetTables& out, std::vector<Issue>& issues) {
  TableReader r(table, issues);
  if (!r.require({"sds_id", "uda_id", "counting_convention"})) return;
  for (std::size_t i = 0; i < r.rows(); ++i) {
    if (!r.check_width(i)) continue;
    auto convention = parse_counting_convention(r.text(i, "counting_convention"));
    if (!convention) {
      r.row_issue(i, "counting_convention",
                  "unknown counting convention '" + std::string(r.text(i, "counting_convention")) + "'");
      continue;
    }
    FieldAssignment field{std::string(r.text(i, "uda_id")), *convention};
    if (!out.field_scheme.emplace(std::string(r.text(i, "sds_id")), std::move(field)).second) {
      r.row_issue(i, "sds_id", "duplicate SDS '" + std::string(r.text(i, "sds_id")) + "'");
    }
  }
}

void read_baselines(const csv::Table& table, DatasetTables& out, std::vector<Issue>& issues) {
  TableReader r(table, issues);
  if (!r.require({"year", "subject_category", "mean_citations_of_cited"})) return;
  CitationBaselines baselines;
  for (std::size_t i = 0; i < r.rows(); ++i) {
    if (!r.check_width(i)) continue;
    auto year = r.integer<int>(i, "year");
    auto mean = r.real(i, "mean_citations_of_cited");
    if (!year || !mean) continue;
    std::string category(r.text(i, "subject_category"));
    if (baselines.lookup(*year, category)) {
      r.row_issue(i, "subject_category", "duplicate baseline cell (" + std::to_string(*year) + ", " + category + ")");
      continue;
    }
    if (*mean <= 0.0) {
      r.row_issue(i, "mean_citations_of_cited", "baseline must be > 0");
      continue;
    }
    baselines.set(*year, std::move(category), *mean);
  }
  out.baselines = std::move(baselines);
}

template <typename Fn>
void with_file(const std::filesystem::path& path, std::vector<Issue>& issues, DatasetTables& out, Fn fn) {
  if (auto table = read_table(path, issues)) fn(*table, out, issues);
}

}  // namespace

DatasetTables read_tables(const std::filesystem::path& dir) {
  std::vector<Issue> issues;
  DatasetTables tables;
  with_file(dir / kProfessorsFile, issues, tables, read_professors);
  with_file(dir / kPublicationsFile, issues, tables, read_publications);
  with_file(dir / kAuthorshipsFile, issues, tables, read_authorships);
  with_file(dir / kSalariesFile, issues, tables, read_salaries);
  with_file(dir / kFieldSchemeFile, issues, tables, read_field_scheme_table);
  if (std::filesystem::exists(dir / kBaselinesFile)) {
    with_file(dir / kBaselinesFile, issues, tables, read_baselines);
  }
  if (!issues.empty()) throw ValidationError(std::move(issues));
  return tables;
}

FieldScheme read_field_scheme(const std::filesystem::path& path) {
  std::vector<Issue> issues;
  DatasetTables tables;
  with_file(path, issues, tables, read_field_scheme_table);
  if (!issues.empty()) throw ValidationError(std::move(issues));
  return std::move(tables.field_scheme);
}

Dataset load_dataset(const std::filesystem::path& dir, const DatasetConfig& config) {
  return Dataset(read_tables(dir), config);
}

namespace {

std::ofstream open_output(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write " + path.string());
  return out;
}

}  // namespace

void write_tables(const DatasetTables& tables, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  {
    auto out = open_output(dir / kProfessorsFile);
    csv::write_row(out, {"id", "university_id", "sds_id", "rank", "years_active"});
    for (const auto& p : tables.professors) {
      csv::write_row(out, {p.id, p.university_id, p.sds_id, p.rank, std::to_string(p.years_active)});
    }
  }
  {
    auto out = open_output(dir / kPublicationsFile);
    csv::write_row(out, {"id", "year", "citations", "doc_type", "subject_categories"});
    for (const auto& p : tables.publications) {
      std::string categories;
      for (std::size_t i = 0; i < p.subject_categories.size(); ++i) {
        if (i != 0) categories += ';';
        categories += p.subject_categories[i];
      }
      csv::write_row(out, {p.id, std::to_string(p.year), std::to_string(p.citations), p.doc_type, categories});
    }
  }
  {
    auto out = open_output(dir / kAuthorshipsFile);
    csv::write_row(out, {"publication_id", "byline_position", "total_authors", "professor_id", "author_university_id"});
    for (const auto& a : tables.authorships) {
      csv::write_row(out, {a.publication_id, std::to_string(a.byline_position), std::to_string(a.total_authors),
                           a.professor_id.value_or(""), a.author_university_id.value_or("")});
    }
  }
  {
    auto out = open_output(dir / kSalariesFile);
    csv::write_row(out, {"rank", "yearly_salary"});
    for (const auto& [rank, salary] : tables.salaries) csv::write_row(out, {rank, csv::format_double(salary)});
  }
  {
    auto out = open_output(dir / kFieldSchemeFile);
    csv::write_row(out, {"sds_id", "uda_id", "counting_convention"});
    for (const auto& [sds, field] : tables.field_scheme) {
      csv::write_row(out, {sds, field.uda_id, std::string(to_string(field.convention))});
    }
  }
  if (tables.baselines) {
    auto out = open_output(dir / kBaselinesFile);
    csv::write_row(out, {"year", "subject_category", "mean_citations_of_cited"});
    for (const auto& [key, mean] : tables.baselines->cells()) {
      csv::write_row(out, {std::to_string(key.first), key.second, csv::format_double(mean)});
    }
  }
}

}  // namespace unirank
