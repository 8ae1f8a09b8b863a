#pragma once

#include <filesystem>

#include "unirank/model.hpp"

namespace unirank {

inline constexpr const char* kProfessorsFile = "professors.csv";
inline constexpr const char* kPublicationsFile = "publications.csv";
inline constexpr const char* kAuthorshipsFile = "authorships.csv";
inline constexpr const char* kSalariesFile = "salaries.csv";
inline constexpr const char* kFieldSchemeFile = "field_scheme.csv";
inline constexpr const char* kBaselinesFile = "baselines.csv";

/// Reads the input CSVs from `dir`. baselines.csv is optional. Throws
/// ValidationError with file/line/column for every malformed row.
DatasetTables read_tables(const std::filesystem::path& dir);

/// Reads a single field_scheme.csv.
FieldScheme read_field_scheme(const std::filesystem::path& path);

/// read_tables + Dataset validation.
Dataset load_dataset(const std::filesystem::path& dir, const DatasetConfig& config);

/// Writes the tables back in the input schema. Rows are written in table order.
void write_tables(const DatasetTables& tables, const std::filesystem::path& dir);

}  // namespace unirank
