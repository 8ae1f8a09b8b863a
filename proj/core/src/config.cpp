#include "unirank/config.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace unirank {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::string_view unquote(std::string_view s) {
  if (s.size() >= 2 && (s.front() == '"' || s.front() == '\'') && s.back() == s.front()) {
    return s.substr(1, s.size() - 2);
  }
  return s;
}

}  // namespace

DatasetConfig parse_config(std::string_view text, DatasetConfig config) {
  std::vector<Issue> issues;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = std::min(text.find('\n', start), text.size());
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;

    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty() || line.front() == '[') continue;

    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      issues.push_back(Issue{"config", line_no, 0, "expected key = value"});
      continue;
    }
    const std::string key(trim(line.substr(0, eq)));
    const std::string_view value = unquote(trim(line.substr(eq + 1)));

    auto bad = [&](const char* kind) {
      issues.push_back(Issue{"config", line_no, 0, "'" + std::string(value) + "' is not a valid " + kind + " for " + key});
    };
    auto as_int = [&](int& target) {
      int v = 0;
      auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
      if (value.empty() || ec != std::errc{} || ptr != value.data() + value.size()) return bad("integer");
      target = v;
    };
    auto as_double = [&](double& target) {
      double v = 0;
      auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
      if (value.empty() || ec != std::errc{} || ptr != value.data() + value.size()) return bad("number");
      target = v;
    };

    if (key == "window_start") as_int(config.window_start);
    else if (key == "window_end") as_int(config.window_end);
    else if (key == "min_tenure_years") as_int(config.min_tenure_years);
    else if (key == "min_staff_sds") as_int(config.min_staff_sds);
    else if (key == "min_staff_uda") as_int(config.min_staff_uda);
    else if (key == "min_staff_overall") as_int(config.min_staff_overall);
    else if (key == "intramural_end_share") as_double(config.credit.intramural_end);
    else if (key == "extramural_end_share") as_double(config.credit.extramural_end);
    else if (key == "extramural_inner_share") as_double(config.credit.extramural_inner);
    else if (key == "excluded_doc_types") {
      config.excluded_doc_types.clear();
      std::size_t pos = 0;
      while (pos <= value.size()) {
        const std::size_t stop = std::min(value.find(';', pos), value.size());
        auto item = trim(value.substr(pos, stop - pos));
        if (!item.empty()) config.excluded_doc_types.emplace_back(item);
        pos = stop + 1;
      }
    } else {
      issues.push_back(Issue{"config", line_no, 0, "unknown key '" + key + "'"});
    }
  }
  if (!issues.empty()) throw ValidationError(std::move(issues));
  config.validate();
  return config;
}

DatasetConfig load_config(const std::filesystem::path& path, DatasetConfig base) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open config " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_config(buffer.str(), std::move(base));
}

}  // namespace unirank
