#include "construction.hpp"

#include "doctest.h"
#include "error.hpp"
#include "numeric.hpp"

using namespace patchcount;

namespace {

const char* kFourBundleConfig =
    "k 4\n"
    "region R_3 density 1/32000000 log2_bound 1397192\n"
    "region R_4 density 1/1024 count 10233480626615962155895931163981261674\n";

}  // namespace

TEST_CASE("config parsing") {
  ConstructionConfig config = parse_construction_config(kFourBundleConfig);
  CHECK(config.k == 4);
  REQUIRE(config.regions.size() == 2);
  CHECK(config.regions[0].name == "R_3");
  CHECK(config.regions[0].density == Rational(1, 32000000));
  CHECK(std::holds_alternative<Rational>(config.regions[0].count_source));
  CHECK(std::holds_alternative<BigCount>(config.regions[1].count_source));
}

TEST_CASE("config validation") {
  CHECK_THROWS_AS(parse_construction_config("k 1\nregion A density 1 count 2\n"), Error);
  CHECK_THROWS_AS(parse_construction_config("region A density 1 count 2\n"), Error);
  CHECK_THROWS_AS(
      parse_construction_config("k 4\nregion A density 1 count 2\nregion A density 1 count 2\n"),
      Error);
  CHECK_THROWS_AS(parse_construction_config("k 4\nregion A density 0 count 2\n"), Error);
  CHECK_THROWS_AS(parse_construction_config("k 4\nregion A density 1 count 0\n"), Error);
  CHECK_THROWS_AS(parse_construction_config("k 4\nregion A density 1 weird 2\n"), Error);
  CHECK_THROWS_AS(parse_construction_config("k 4\n"), Error);
}

TEST_CASE("contribution rows reproduce the published table entries") {
  RegionSpec r4{"R_4", Rational(1, 1024),
                BigCount("10233480626615962155895931163981261674")};
  ContributionRow row = contribution(r4);
  CHECK(row.log2_count == "122.94");
  CHECK(row.contribution == "0.12006");

  RegionSpec r3{"R_3", Rational(1, 32000000), parse_decimal("1397192")};
  row = contribution(r3);
  CHECK(row.log2_count == "1397192.00");
  CHECK(row.contribution == "0.04366");
}

TEST_CASE("contribution of a unit-density region") {
  RegionSpec r{"R", Rational(1), BigCount(2)};
  CHECK(contribution(r).contribution == "1.00000");
}

TEST_CASE("contribution resolves generator sources") {
  RegionSpec grid{"G", Rational(1), CountFromGrid3{2}};
  ContributionRow row = contribution(grid);
  CHECK(row.log2_count == "4.32");  // count 20
  CHECK(row.seconds.has_value());

  RegionSpec complete{"C", Rational(1), CountFromComplete{3}};
  CHECK(contribution(complete).log2_count == "1.00");  // count 2

  RegionSpec missing{"M", Rational(1), CountFromPatchFile{"no/such/file.patch"}};
  CHECK_THROWS_AS(contribution(missing), Error);
}

TEST_CASE("amplification") {
  CHECK(amplify("0.16373", 4) == "0.21830");
  CHECK(amplify("0.24946", 12) == "0.27213");
  CHECK(amplify("0.10000", 2) == "0.20000");
  CHECK(amplify("0.21190", 6) == "0.25428");
  CHECK_THROWS_AS(amplify("0.1", 1), Error);
  CHECK_THROWS_AS(amplify("0", 4), Error);
}

TEST_CASE("densities from area data") {
  CHECK(density_from_areas(Rational(1, 32), Rational(32)) == Rational(1, 1024));
  CHECK(density_from_areas(Rational(1, 144), Rational(7)) == Rational(1, 1008));
  CHECK(density_from_areas(Rational(1), Rational(1)) == Rational(1));
  CHECK_THROWS_AS(density_from_areas(Rational(0), Rational(1)), Error);
  CHECK_THROWS_AS(density_from_areas(Rational(1), Rational(-1)), Error);
}

TEST_CASE("four-bundle report") {
  BoundReport report = assemble_bound(parse_construction_config(kFourBundleConfig));
  CHECK(report.k == 4);
  REQUIRE(report.rows.size() == 2);
  CHECK(report.rows[0].contribution == "0.04366");
  CHECK(report.rows[1].contribution == "0.12006");
  CHECK(report.c == "0.16372");
  CHECK(report.c_final == "0.21830");
  // the printed sum must certify at least the published constant
  CHECK(parse_decimal(report.c) >= parse_decimal("0.1637"));
  CHECK(parse_decimal(report.c_final) >= parse_decimal("0.2183"));

  std::string text = format_bound_report(report);
  CHECK(text.find("SUMMARY c=0.16372 k=4 c_final=0.21830") != std::string::npos);
}

TEST_CASE("more decimal places never weaken a certified value") {
  ConstructionConfig config = parse_construction_config(kFourBundleConfig);
  BoundOptions coarse;
  BoundOptions fine;
  fine.contribution_places = 9;
  BoundReport a = assemble_bound(config, coarse);
  BoundReport b = assemble_bound(config, fine);
  CHECK(parse_decimal(b.c) >= parse_decimal(a.c));
  CHECK(parse_decimal(b.c_final) >= parse_decimal(a.c_final));
  for (size_t i = 0; i < a.rows.size(); ++i)
    CHECK(parse_decimal(b.rows[i].contribution) >=
          parse_decimal(a.rows[i].contribution));
}

TEST_CASE("region errors carry the region name") {
  const char* broken =
      "k 4\n"
      "region R_bad density 1/2 patch missing.patch\n";
  try {
    assemble_bound(parse_construction_config(broken));
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("R_bad") != std::string::npos);
  }
}
