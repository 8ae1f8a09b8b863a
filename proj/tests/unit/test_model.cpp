#include <gtest/gtest.h>

#include <fstream>

#include "builders.hpp"
#include "unirank/config.hpp"
#include "unirank/dataset_io.hpp"
#include "unirank/synth.hpp"

using namespace unirank;
using unirank::testing::TablesBuilder;

namespace {

bool mentions(const ValidationError& e, const std::string& needle) {
  for (const auto& issue : e.issues()) {
    if (issue.to_string().find(needle) != std::string::npos) return true;
  }
  return false;
}

template <typename F>
ValidationError capture(F&& f) {
  try {
    f();
  } catch (const ValidationError& e) {
    return e;
  }
  ADD_FAILURE() << "expected a ValidationError";
  return ValidationError("none");
}

}  // namespace

TEST(Dataset, MinimalFixtureLoads) {
  TablesBuilder b;
  b.professor("P1", "U1", "SDS_A").publication("W1", 3, {"P1"});
  const auto ds = b.build();
  EXPECT_EQ(ds.professors().size(), 1u);
  EXPECT_EQ(ds.publications().size(), 1u);
  EXPECT_EQ(ds.authorships_of(0).size(), 1u);
  EXPECT_EQ(ds.find_professor("P1"), 0u);
  EXPECT_FALSE(ds.find_professor("nobody"));
}

TEST(Dataset, DanglingPublicationReferenceIsNamed) {
  TablesBuilder b;
  b.professor("P1", "U1", "SDS_A").publication("W1", 3, {"P1"});
  b.tables.authorships.push_back({"W404", 1, 1, "P1", std::nullopt});
  const auto e = capture([&] { b.build(); });
  EXPECT_TRUE(mentions(e, "W404"));
}

TEST(Dataset, MissingSalaryRankIsNamed) {
  TablesBuilder b;
  b.professor("P1", "U1", "SDS_A", "emeritus");
  const auto e = capture([&] { b.build(); });
  EXPECT_TRUE(mentions(e, "emeritus"));
}

TEST(Dataset, UnknownSdsAndDuplicateIdsAreReported) {
  TablesBuilder b;
  b.professor("P1", "U1", "SDS_A").professor("P1", "U1", "SDS_A").professor("P2", "U1", "SDS_Z");
  const auto e = capture([&] { b.build(); });
  EXPECT_TRUE(mentions(e, "P1"));
  EXPECT_TRUE(mentions(e, "SDS_Z"));
  EXPECT_GE(e.issues().size(), 2u);
}

TEST(Dataset, BylineInvariantsAreChecked) {
  TablesBuilder b;
  b.professor("P1", "U1", "SDS_A").publication("W1", 3, {"P1", ""});
  b.tables.authorships[1].byline_position = 1;  // duplicate position
  EXPECT_THROW(b.build(), ValidationError);

  TablesBuilder c;
  c.professor("P1", "U1", "SDS_A").publication("W1", 3, {"P1", ""});
  c.tables.authorships[0].total_authors = 3;  // count disagrees with rows
  EXPECT_THROW(c.build(), ValidationError);
}

TEST(Dataset, ProfessorFieldsAreRangeChecked) {
  TablesBuilder b;
  b.professor("P1", "U1", "SDS_A", "full", 0).professor("P2", "U1", "SDS_A", "full", 6);
  const auto e = capture([&] { b.build(); });
  EXPECT_TRUE(mentions(e, "P1"));
  EXPECT_TRUE(mentions(e, "P2"));
}

TEST(Dataset, PublicationFieldsAreRangeChecked) {
  TablesBuilder b;
  b.professor("P1", "U1", "SDS_A").publication("W1", -1, {"P1"}).publication("W2", 1, {"P1"}, 2010, {});
  const auto e = capture([&] { b.build(); });
  EXPECT_TRUE(mentions(e, "W1"));
  EXPECT_TRUE(mentions(e, "W2"));
}

TEST(Dataset, AffiliationFallsBackToTheLinkedProfessor) {
  TablesBuilder b;
  b.professor("P1", "U1", "SDS_A").publication("W1", 3, {"P1", "@U2", ""});
  const auto ds = b.build();
  const auto line = ds.byline(0);
  EXPECT_EQ(ds.affiliation(ds.authorships()[line[0]]), "U1");
  EXPECT_EQ(ds.affiliation(ds.authorships()[line[1]]), "U2");
  EXPECT_FALSE(ds.affiliation(ds.authorships()[line[2]]));
}

TEST(DatasetIo, WriteThenReadRoundTrips) {
  SynthSpec spec;
  spec.universities = 3;
  spec.seed = 5;
  const auto tables = generate(spec);
  const auto dir = unirank::testing::scratch_dir("roundtrip");
  write_tables(tables, dir);
  const auto back = read_tables(dir);
  EXPECT_EQ(back.professors, tables.professors);
  EXPECT_EQ(back.publications, tables.publications);
  EXPECT_EQ(back.authorships, tables.authorships);
  EXPECT_EQ(back.salaries, tables.salaries);
  EXPECT_EQ(back.field_scheme, tables.field_scheme);
  EXPECT_EQ(back.baselines, tables.baselines);
}

TEST(DatasetIo, GeneratedThousandProfessorCorpusLoadsWithExactCounts) {
  SynthSpec spec;
  spec.universities = 25;
  spec.sds = 8;
  spec.professors_min = 5;
  spec.professors_max = 5;
  const auto tables = generate(spec);
  ASSERT_EQ(tables.professors.size(), 1000u);
  const auto dir = unirank::testing::scratch_dir("thousand");
  write_tables(tables, dir);
  const auto ds = load_dataset(dir, {});
  EXPECT_EQ(ds.professors().size(), 1000u);
  EXPECT_EQ(ds.publications().size(), tables.publications.size());
  EXPECT_EQ(ds.authorships().size(), tables.authorships.size());
}

TEST(DatasetIo, MalformedRowReportsFileLineAndColumn) {
  const auto dir = unirank::testing::scratch_dir("malformed");
  TablesBuilder b;
  b.professor("P1", "U1", "SDS_A").publication("W1", 3, {"P1"});
  write_tables(b.tables, dir);
  std::ofstream(dir / kProfessorsFile) << "id,university_id,sds_id,rank,years_active\nP1,U1,SDS_A,full,five\n";
  const auto e = capture([&] { read_tables(dir); });
  ASSERT_FALSE(e.issues().empty());
  const auto& issue = e.issues().front();
  EXPECT_NE(issue.file.find(kProfessorsFile), std::string::npos);
  EXPECT_EQ(issue.line, 2u);
  EXPECT_EQ(issue.column, 5u);
}

TEST(DatasetIo, MissingFileIsAValidationError) {
  const auto dir = unirank::testing::scratch_dir("missing");
  EXPECT_THROW(read_tables(dir), ValidationError);
}

TEST(Config, DefaultsMatchTheReferenceSetup) {
  const DatasetConfig c;
  EXPECT_EQ(c.min_tenure_years, 3);
  EXPECT_EQ(c.min_staff_sds, 2);
  EXPECT_EQ(c.min_staff_uda, 10);
  EXPECT_EQ(c.min_staff_overall, 30);
  EXPECT_EQ(c.window_length(), 5);
}

TEST(Config, ParsesKeysCommentsAndSections) {
  const auto c = parse_config(
      "# comment\n[dataset]\nwindow_start = 2004\nwindow_end=2010\nmin_staff_uda = 5\n"
      "excluded_doc_types = reply; letter\nextramural_inner_share = 0.1\n");
  EXPECT_EQ(c.window_start, 2004);
  EXPECT_EQ(c.window_end, 2010);
  EXPECT_EQ(c.min_staff_uda, 5);
  EXPECT_EQ(c.excluded_doc_types, (std::vector<std::string>{"reply", "letter"}));
  EXPECT_DOUBLE_EQ(c.credit.extramural_inner, 0.1);
  EXPECT_EQ(c.min_staff_sds, 2);
}

TEST(Config, RejectsUnknownKeysAndBadValues) {
  EXPECT_THROW(parse_config("window = 3\n"), ValidationError);
  EXPECT_THROW(parse_config("min_staff_sds = two\n"), ValidationError);
  EXPECT_THROW(parse_config("window_start = 2012\nwindow_end = 2010\n"), ValidationError);
  EXPECT_THROW(parse_config("min_staff_sds = 0\n"), ValidationError);
}
