#pragma once

#include <filesystem>
#include <string_view>

#include "unirank/model.hpp"

namespace unirank {

/// INI-style `key = value` lines; `#` starts a comment, `[section]` headers
/// are accepted and ignored. Unknown keys are an error. List values
/// (excluded_doc_types) are semicolon separated.
///
///   window_start, window_end, min_tenure_years, excluded_doc_types,
///   min_staff_sds, min_staff_uda, min_staff_overall,
///   intramural_end_share, extramural_end_share, extramural_inner_share
DatasetConfig parse_config(std::string_view text, DatasetConfig base = {});
DatasetConfig load_config(const std::filesystem::path& path, DatasetConfig base = {});

}  // namespace unirank
