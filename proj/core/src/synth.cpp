#include "unirank/synth.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>

namespace unirank {

void SynthSpec::validate() const {
  std::vector<Issue> issues;
  auto fail = [&](std::string message) { issues.push_back(Issue{"synth", 0, 0, std::move(message)}); };
  if (universities < 1) fail("universities must be >= 1");
  if (udas < 1) fail("udas must be >= 1");
  if (sds < 1) fail("sds must be >= 1");
  if (sds < udas) fail("need at least one SDS per UDA");
  if (professors_min < 1 || professors_max < professors_min) fail("need 1 <= professors_min <= professors_max");
  if (max_authors < 1) fail("max_authors must be >= 1");
  if (university_sd < 0.0 || individual_sd < 0.0) fail("dispersion parameters must be >= 0");
  if (publications_per_professor < 0.0 || citation_mean < 0.0) fail("rates must be >= 0");
  for (double p : {position_weighted_share, internal_coauthor_rate, uncited_share}) {
    if (p < 0.0 || p > 1.0) fail("shares must lie in [0, 1]");
  }
  if (window_end < window_start) fail("window_end precedes window_start");
  if (min_tenure_years < 1) fail("min_tenure_years must be >= 1");
  if (short_tenure_professors > 0 && min_tenure_years < 2) fail("short-tenure plants need min_tenure_years >= 2");
  if (!issues.empty()) throw ValidationError(std::move(issues));
}

namespace {

/// Platform-independent draws on top of mt19937_64.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  std::size_t below(std::size_t n) { return static_cast<std::size_t>(uniform() * static_cast<double>(n)); }

  double normal() {
    const double u1 = 1.0 - uniform();
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
  }

  std::int64_t poisson(double lambda) {
    if (lambda <= 0.0) return 0;
    if (lambda > 30.0) {
      return std::max<std::int64_t>(0, std::llround(lambda + std::sqrt(lambda) * normal()));
    }
    const double limit = std::exp(-lambda);
    std::int64_t k = 0;
    double p = uniform();
    while (p > limit) {
      ++k;
      p *= uniform();
    }
    return k;
  }

 private:
  std::mt19937_64 engine_;
};

std::string label(const char* prefix, std::size_t value, std::size_t count) {
  const int width = count >= 1000 ? 4 : count >= 100 ? 3 : 2;
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%s%0*zu", prefix, width, value);
  return buffer;
}

struct Staff {
  std::size_t university = 0;
  std::size_t sds = 0;
  double latent = 1.0;
};

}  // namespace

DatasetTables generate(const SynthSpec& spec) {
  spec.validate();
  Rng rng(spec.seed);
  DatasetTables tables;

  const std::vector<std::pair<std::string, double>> ranks{
      {"full", 110000.0}, {"associate", 78000.0}, {"assistant", 52000.0}};
  for (const auto& [rank, salary] : ranks) tables.salaries.emplace(rank, salary);

  std::vector<std::string> universities, sds_ids;
  for (std::size_t u = 0; u < spec.universities; ++u) universities.push_back(label("UNIV_", u + 1, spec.universities));
  for (std::size_t s = 0; s < spec.sds; ++s) {
    sds_ids.push_back(label("SDS", s + 1, spec.sds));
    const bool positional = rng.uniform() < spec.position_weighted_share;
    tables.field_scheme.emplace(sds_ids.back(),
                                FieldAssignment{label("UDA", s % spec.udas + 1, spec.udas),
                                                positional ? CountingConvention::position_weighted
                                                           : CountingConvention::alphabetical});
  }
  auto category = [&](std::size_t sds, char variant) { return "CAT" + sds_ids[sds].substr(3) + "_" + variant; };

  std::vector<double> university_effect;
  for (std::size_t u = 0; u < spec.universities; ++u) university_effect.push_back(spec.university_sd * rng.normal());

  const int window = spec.window_end - spec.window_start + 1;
  const int min_years = std::min(spec.min_tenure_years, window);
  std::vector<Staff> staff;
  std::vector<std::vector<std::size_t>> by_university(spec.universities);
  std::vector<std::vector<std::size_t>> by_cell(spec.universities * spec.sds);

  auto add_professor = [&](std::size_t u, std::size_t s, int years) {
    const double draw = rng.uniform();
    const std::string& rank = draw < 0.3 ? ranks[0].first : draw < 0.65 ? ranks[1].first : ranks[2].first;
    const std::size_t index = staff.size();
    tables.professors.push_back(Professor{"", universities[u], sds_ids[s], rank, years});
    staff.push_back(Staff{u, s, std::exp(university_effect[u] + spec.individual_sd * rng.normal())});
    by_university[u].push_back(index);
    by_cell[u * spec.sds + s].push_back(index);
  };

  for (std::size_t u = 0; u < spec.universities; ++u) {
    for (std::size_t s = 0; s < spec.sds; ++s) {
      const std::size_t count = spec.professors_min + rng.below(spec.professors_max - spec.professors_min + 1);
      for (std::size_t k = 0; k < count; ++k) {
        add_professor(u, s, min_years + static_cast<int>(rng.below(static_cast<std::size_t>(window - min_years + 1))));
      }
    }
  }
  for (std::size_t k = 0; k < spec.short_tenure_professors; ++k) {
    const int years = 1 + static_cast<int>(rng.below(static_cast<std::size_t>(spec.min_tenure_years - 1)));
    add_professor(k % spec.universities, k % spec.sds, years);
  }
  for (std::size_t j = 0; j < tables.professors.size(); ++j) {
    tables.professors[j].id = label("P", j + 1, std::max<std::size_t>(tables.professors.size(), 10000));
  }

  std::vector<double> cumulative;
  double total_latent = 0.0;
  for (const auto& s : staff) cumulative.push_back(total_latent += s.latent);
  const double mean_latent = total_latent / static_cast<double>(staff.size());
  auto pick_lead = [&] {
    const double target = rng.uniform() * total_latent;
    const auto it = std::upper_bound(cumulative.begin(), cumulative.end(), target);
    return std::min<std::size_t>(static_cast<std::size_t>(it - cumulative.begin()), staff.size() - 1);
  };

  const std::size_t regular = spec.publications != 0
                                  ? spec.publications
                                  : static_cast<std::size_t>(std::llround(spec.publications_per_professor *
                                                                           static_cast<double>(staff.size())));
  const std::size_t total = regular + spec.excluded_publications;

  for (std::size_t i = 0; i < total; ++i) {
    const std::size_t lead = pick_lead();
    const auto& lead_staff = staff[lead];

    Publication pub;
    pub.id = label("W", i + 1, std::max<std::size_t>(total, 100000));
    pub.year = spec.window_start + static_cast<int>(rng.below(static_cast<std::size_t>(window)));
    const bool uncited = rng.uniform() < spec.uncited_share;
    const double quality = std::sqrt(lead_staff.latent / mean_latent);
    pub.citations = uncited ? 0 : rng.poisson(spec.citation_mean * quality);
    pub.doc_type = i >= regular ? "meeting abstract" : rng.uniform() < 0.85 ? "article" : "review";
    const double cat_draw = rng.uniform();
    if (cat_draw < 0.2) {
      pub.subject_categories = {category(lead_staff.sds, 'a'), category(lead_staff.sds, 'b')};
    } else {
      pub.subject_categories = {category(lead_staff.sds, cat_draw < 0.6 ? 'a' : 'b')};
    }

    const std::size_t n = 1 + rng.below(spec.max_authors);
    std::vector<std::size_t> internal{lead};
    while (internal.size() < n && internal.size() < 4 && rng.uniform() < spec.internal_coauthor_rate) {
      const double where = rng.uniform();
      const std::vector<std::size_t>* pool = nullptr;
      if (where < 0.6) {
        pool = &by_cell[lead_staff.university * spec.sds + lead_staff.sds];
      } else if (where < 0.85) {
        pool = &by_university[lead_staff.university];
      } else {
        pool = &by_university[rng.below(spec.universities)];
      }
      const std::size_t candidate = (*pool)[rng.below(pool->size())];
      if (std::find(internal.begin(), internal.end(), candidate) == internal.end()) internal.push_back(candidate);
    }

    struct Slot {
      std::optional<std::size_t> professor;
      std::optional<std::string> affiliation;
    };
    std::vector<Slot> slots;
    for (std::size_t j : internal) {
      const bool declare = rng.uniform() < 0.6;
      slots.push_back(Slot{j, declare ? std::optional<std::string>(universities[staff[j].university]) : std::nullopt});
    }
    while (slots.size() < n) {
      const double draw = rng.uniform();
      if (draw < 0.4) {
        slots.push_back(Slot{std::nullopt, universities[rng.below(spec.universities)]});
      } else if (draw < 0.8) {
        slots.push_back(Slot{std::nullopt, "EXT_" + std::to_string(1 + rng.below(50))});
      } else {
        slots.push_back(Slot{std::nullopt, std::nullopt});
      }
    }
    for (std::size_t k = slots.size(); k > 1; --k) std::swap(slots[k - 1], slots[rng.below(k)]);

    for (std::size_t k = 0; k < slots.size(); ++k) {
      tables.authorships.push_back(Authorship{
          pub.id, static_cast<int>(k + 1), static_cast<int>(n),
          slots[k].professor ? std::optional<std::string>(tables.professors[*slots[k].professor].id) : std::nullopt,
          slots[k].affiliation});
    }
    tables.publications.push_back(std::move(pub));
  }

  CitationBaselines baselines;
  for (int year = spec.window_start; year <= spec.window_end; ++year) {
    for (std::size_t s = 0; s < spec.sds; ++s) {
      for (char variant : {'a', 'b'}) baselines.set(year, category(s, variant), 2.0 + 10.0 * rng.uniform());
    }
  }
  tables.baselines = std::move(baselines);
  return tables;
}

}  // namespace unirank
