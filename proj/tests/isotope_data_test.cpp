#include <gtest/gtest.h>

#include <random>

#include "test_support.hpp"
#include "topiso/isotope_data.hpp"

namespace topiso {
namespace {

TEST(IsotopeData, DefaultTableCoversTestMolecules) {
  const auto& table = load_default_isotopes();
  for (const char* s : {"H", "C", "N", "O", "S", "Xe", "Sn", "Nd", "Dy", "Au", "Ca", "Ga", "Pd"})
    EXPECT_TRUE(table.contains(s)) << s;
  EXPECT_EQ(table.get("H").size(), 2u);
  EXPECT_EQ(table.get("O").size(), 3u);
  EXPECT_EQ(table.get("Au").size(), 1u);
}

// NIST lists nine stable xenon isotopes: 124, 126, 128, 129, 130, 131, 132, 134, 136.
TEST(IsotopeData, XenonHasNineIsotopes) {
  const auto& xe = load_default_isotopes().get("Xe");
  ASSERT_EQ(xe.size(), 9u);
  const int mass_numbers[] = {124, 126, 128, 129, 130, 131, 132, 134, 136};
  for (std::size_t i = 0; i < 9; ++i) EXPECT_EQ(std::lround(xe[i].mass), mass_numbers[i]);
}

TEST(IsotopeData, DefaultTableIsNormalizedAndSorted) {
  for (const auto& [symbol, isotopes] : load_default_isotopes().entries()) {
    double sum = 0.0;
    for (std::size_t i = 0; i < isotopes.size(); ++i) {
      sum += isotopes[i].abundance;
      EXPECT_GT(isotopes[i].abundance, 0.0) << symbol;
      if (i > 0) {
        EXPECT_LT(isotopes[i - 1].mass, isotopes[i].mass) << symbol;
      }
    }
    EXPECT_EQ(sum, 1.0) << symbol;
  }
}

TEST(IsotopeData, OxygenSixteen) {
  const auto& o = load_default_isotopes().get("O");
  EXPECT_DOUBLE_EQ(o[0].mass, 15.99491461956);
  EXPECT_DOUBLE_EQ(o[0].abundance, 0.99757);
}

TEST(IsotopeData, ParsesLinesCommentsAndBlanks) {
  const auto t = parse_isotope_table("# header\n\nX 1.0 0.5   # first\n  X 2.0 0.5\n");
  const auto& x = t.get("X");
  ASSERT_EQ(x.size(), 2u);
  EXPECT_EQ(x[0].mass, 1.0);
  EXPECT_EQ(x[1].mass, 2.0);
  EXPECT_EQ(x[0].abundance, 0.5);
}

TEST(IsotopeData, SortsIsotopesByMass) {
  const auto t = parse_isotope_table("Y 3.0 0.25\nY 1.0 0.75\n");
  EXPECT_EQ(t.get("Y")[0].mass, 1.0);
  EXPECT_EQ(t.get("Y")[0].abundance, 0.75);
}

TEST(IsotopeData, RejectsBadAbundanceSum) {
  try {
    parse_isotope_table("X 1.0 0.4\nX 2.0 0.4");
    FAIL() << "expected IsotopeTableError";
  } catch (const IsotopeTableError& e) {
    EXPECT_NE(std::string(e.what()).find("0.8"), std::string::npos) << e.what();
  }
}

TEST(IsotopeData, RenormalizesWithinTolerance) {
  const auto t = parse_isotope_table("X 1.0 0.499999\nX 2.0 0.500002");
  const auto& x = t.get("X");
  EXPECT_EQ(x[0].abundance + x[1].abundance, 1.0);
  EXPECT_NEAR(x[0].abundance, 0.499999 / 1.000001, 1e-15);
}

TEST(IsotopeData, MalformedLineReportsLineNumber) {
  try {
    parse_isotope_table("X 1.0 1.0\nY 2.0\n");
    FAIL();
  } catch (const IsotopeTableError& e) {
    EXPECT_EQ(e.line(), 2u);
  }
  try {
    parse_isotope_table("X 1.0 1.0\n\nY abc 1.0\n");
    FAIL();
  } catch (const IsotopeTableError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
  EXPECT_THROW(parse_isotope_table("X 1.0 1.0 7\n"), IsotopeTableError);
  EXPECT_THROW(parse_isotope_table("xy 1.0 1.0\n"), IsotopeTableError);
}

TEST(IsotopeData, RejectsNonPositiveValues) {
  EXPECT_THROW(parse_isotope_table("X 0 1.0\n"), IsotopeTableError);
  EXPECT_THROW(parse_isotope_table("X -1 1.0\n"), IsotopeTableError);
  EXPECT_THROW(parse_isotope_table("X 1.0 0\nX 2.0 1.0\n"), IsotopeTableError);
  EXPECT_THROW(parse_isotope_table("X 1.0 -0.1\nX 2.0 1.1\n"), IsotopeTableError);
}

TEST(IsotopeData, RejectsDuplicateIsotope) {
  try {
    parse_isotope_table("X 1.0 0.5\nX 1.0 0.5\n");
    FAIL();
  } catch (const IsotopeTableError& e) {
    EXPECT_EQ(e.line(), 2u);
  }
}

TEST(IsotopeData, UnknownElement) {
  try {
    load_default_isotopes().get("Qq");
    FAIL();
  } catch (const UnknownElementError& e) {
    EXPECT_EQ(e.symbol(), "Qq");
  }
}

TEST(IsotopeData, SerializeRoundTrip) {
  const auto& def = load_default_isotopes();
  const auto again = parse_isotope_table(serialize_isotope_table(def));
  ASSERT_EQ(again.size(), def.size());
  for (const auto& [symbol, isotopes] : def.entries()) {
    const auto& other = again.get(symbol);
    ASSERT_EQ(other.size(), isotopes.size());
    for (std::size_t i = 0; i < isotopes.size(); ++i) {
      EXPECT_EQ(other[i].mass, isotopes[i].mass);
      EXPECT_NEAR(other[i].abundance, isotopes[i].abundance, 1e-15 * isotopes[i].abundance);
    }
  }

  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const auto t = testing::random_table(rng, 4, 6);
    const auto back = parse_isotope_table(serialize_isotope_table(t));
    for (const auto& [symbol, isotopes] : t.entries())
      for (std::size_t i = 0; i < isotopes.size(); ++i) {
        EXPECT_EQ(back.get(symbol)[i].mass, isotopes[i].mass);
        EXPECT_NEAR(back.get(symbol)[i].abundance, isotopes[i].abundance, 1e-15 * isotopes[i].abundance);
      }
  }
}

TEST(IsotopeData, LoadsShippedAlternativeTable) {
  const auto t = load_isotope_file(std::string(TOPISO_DATA_DIR) + "/isotopes_isospec.txt");
  EXPECT_EQ(t.get("Xe").size(), 9u);
  EXPECT_EQ(t.get("H").size(), 2u);
  EXPECT_THROW(load_isotope_file("/nonexistent/table.txt"), IsotopeTableError);
}

}  // namespace
}  // namespace topiso
