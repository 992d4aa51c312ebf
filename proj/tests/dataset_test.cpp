#include <gtest/gtest.h>

#include <sstream>

#include "eventling/dataset.hpp"

namespace eventling {
namespace {

const Universe kAge(0, 80);

Dataset read(const std::string& text) {
  std::istringstream in(text);
  return read_dataset(in, kAge);
}

ErrorCode failure(const std::string& text, std::string* message = nullptr) {
  try {
    read(text);
  } catch (const Error& e) {
    if (message) *message = e.what();
    return e.code();
  }
  ADD_FAILURE() << "accepted:\n" << text;
  return ErrorCode::IoError;
}

TEST(ReadDataset, BasicWithComments) {
  const auto ds = read(
      "# age experiment\n"
      "subject,name,lo,hi\n"
      "\n"
      "a,young,10,30\n"
      "# skipped\n"
      "b, young , 15.5 ,25\n");
  ASSERT_EQ(ds.judgments.size(), 2u);
  EXPECT_EQ(ds.lines, (std::vector<std::size_t>{4, 6}));
  EXPECT_EQ(ds.judgments[1].region, Region::interval(15.5, 25, kAge));
  EXPECT_EQ(ds.judgments[1].name, "young");
  EXPECT_EQ(ds.judgments[0].polarity, Polarity::For);
  EXPECT_EQ(ds.subjects().size(), 2u);
  EXPECT_EQ(ds.names(), (std::vector<std::string>{"young"}));
}

TEST(ReadDataset, PolarityColumn) {
  const auto ds = read(
      "subject,name,lo,hi,polarity\n"
      "a,young,10,30,for\n"
      "a,young,40,80,against\n"
      "b,young,0,20,\n");
  ASSERT_EQ(ds.judgments.size(), 3u);
  EXPECT_EQ(ds.judgments[1].polarity, Polarity::Against);
  EXPECT_EQ(ds.judgments[2].polarity, Polarity::For);
}

TEST(ReadDataset, EmptyJudgmentKeepsSubject) {
  const auto ds = read("subject,name,lo,hi\na,young,10,30\nb,young,5,5\n");
  const auto m = ds.matrix();
  EXPECT_EQ(m.subjects().size(), 2u);
  EXPECT_TRUE(m.cell("young", 1, Polarity::For).is_empty());
}

TEST(ReadDataset, Errors) {
  std::string msg;
  EXPECT_EQ(failure("subject,name,lo,hi\na,young,30,10\n", &msg), ErrorCode::MalformedRow);
  EXPECT_NE(msg.find("line 2"), std::string::npos);
  EXPECT_EQ(failure("subject,name,lo,hi\na,young,x,10\n"), ErrorCode::MalformedRow);
  EXPECT_EQ(failure("subject,name,lo,hi\na,young,1,inf\n"), ErrorCode::MalformedRow);
  EXPECT_EQ(failure("subject,name,lo,hi\na,young,1\n"), ErrorCode::MalformedRow);
  EXPECT_EQ(failure("subject,name,lo,hi\n,young,1,2\n"), ErrorCode::MalformedRow);
  EXPECT_EQ(failure("subject,name,lo,hi\na,and,1,2\n"), ErrorCode::MalformedRow);
  EXPECT_EQ(failure("subject,name,lo,hi\na,young man,1,2\n"), ErrorCode::MalformedRow);
  EXPECT_EQ(failure("subject,name,lo,hi,polarity\na,young,1,2,maybe\n"), ErrorCode::MalformedRow);
  EXPECT_EQ(failure("name,subject,lo,hi\n"), ErrorCode::MalformedRow);
  EXPECT_EQ(failure(""), ErrorCode::MalformedRow);
  EXPECT_EQ(failure("subject,name,lo,hi\na,old,70,95\n", &msg), ErrorCode::OutOfUniverse);
  EXPECT_NE(msg.find("line 2"), std::string::npos);
}

TEST(ReadDataset, ContradictionSurfacesInMatrix) {
  const auto ds = read(
      "subject,name,lo,hi,polarity\n"
      "a,young,10,30,for\n"
      "a,young,20,40,against\n");
  EXPECT_THROW(ds.matrix(), Error);
}

TEST(ReadConfig, OverridesAndDefaults) {
  std::istringstream in(
      "# settings\n"
      "universe_lo = 10\n"
      "universe_hi=90\n"
      "very = 3\n"
      "step = 2.5\n"
      "precision = 3\n");
  const auto cfg = read_config(in);
  EXPECT_EQ(cfg.universe, Universe(10, 90));
  EXPECT_EQ(cfg.hedges.very, 3.0);
  EXPECT_EQ(cfg.hedges.more_or_less, 0.5);
  EXPECT_EQ(cfg.step, 2.5);
  EXPECT_EQ(cfg.precision, 3);
  EXPECT_NO_THROW(validate(cfg));
}

TEST(ReadConfig, Errors) {
  auto code = [](const std::string& text) {
    try {
      std::istringstream in(text);
      validate(read_config(in));
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::IoError;
  };
  EXPECT_EQ(code("colour = 3\n"), ErrorCode::ConfigError);
  EXPECT_EQ(code("very\n"), ErrorCode::ConfigError);
  EXPECT_EQ(code("very = fast\n"), ErrorCode::ConfigError);
  EXPECT_EQ(code("universe_lo = 90\n"), ErrorCode::ConfigError);
  EXPECT_EQ(code("very = 0\n"), ErrorCode::ConfigError);
  EXPECT_EQ(code("step = -1\n"), ErrorCode::ConfigError);
  EXPECT_EQ(code("precision = 0\n"), ErrorCode::ConfigError);
}

TEST(WriteExample, RowCountAndDeterminism) {
  std::ostringstream a, b, c;
  write_example(a, 1, 71);
  write_example(b, 1, 71);
  write_example(c, 2, 71);
  EXPECT_EQ(a.str(), b.str());
  EXPECT_NE(a.str(), c.str());
  const auto ds = read(a.str());
  EXPECT_EQ(ds.judgments.size(), 142u);
  EXPECT_EQ(ds.subjects().size(), 71u);
  EXPECT_EQ(ds.names(), (std::vector<std::string>{"young_man", "young_woman"}));
}

TEST(WriteExample, EndpointRanges) {
  std::ostringstream out;
  write_example(out, 17, 300);
  const ExampleRanges r;
  for (const auto& j : read(out.str()).judgments) {
    ASSERT_EQ(j.region.parts().size(), 1u);
    EXPECT_GE(j.region.parts()[0].lo, r.lo_min);
    EXPECT_LE(j.region.parts()[0].lo, r.lo_max);
    EXPECT_GE(j.region.parts()[0].hi, r.hi_min);
    EXPECT_LE(j.region.parts()[0].hi, r.hi_max);
  }
}

TEST(WriteExample, ZeroSubjects) {
  std::ostringstream out;
  try {
    write_example(out, 1, 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::EmptyPopulation);
  }
}

}  // namespace
}  // namespace eventling
