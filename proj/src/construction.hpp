#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "bipermutation.hpp"
#include "numeric.hpp"

namespace patchcount {

// Where a region's rerouting count comes from: an exact count, a certified
// log2 lower bound, a patch file counted at run time, or a generator.
struct CountFromPatchFile {
  std::string path;
};
struct CountFromGrid3 {
  long side;
};
struct CountFromComplete {
  int n;
};
using CountSource =
    std::variant<BigCount, Rational /* log2 lower bound */, CountFromPatchFile,
                 CountFromGrid3, CountFromComplete>;

struct RegionSpec {
  std::string name;
  Rational density;  // limit of (number of patches)/n^2
  CountSource count_source;
};

struct ConstructionConfig {
  int k = 0;  // number of bundles
  std::string label;
  std::vector<RegionSpec> regions;
};

struct ContributionRow {
  std::string name;
  std::string log2_count;     // rounded down, 2 places
  Rational density;
  std::string contribution;   // rounded down, 5 places
  std::optional<double> seconds;
};

struct BoundReport {
  int k = 0;
  std::vector<ContributionRow> rows;
  std::string c;        // rounded down, 5 places
  std::string c_final;  // (k/(k-1)) * c, rounded down, 5 places
};

// `k <int>` then one region per line:
// `region <name> density <rational> (count <int> | log2_bound <decimal> |
//  patch <path> | grid3 <l> | complete <n>)`
ConstructionConfig parse_construction_config(const std::string& text);
ConstructionConfig parse_construction_config_file(const std::string& path);

struct BoundOptions {
  int log2_places = 2;
  int contribution_places = 5;
  CountOptions count;          // for patch/generator sources
  std::string base_dir;        // patch paths resolve relative to this
};

// density * log2(count), every printed digit rounded down so the row stays a
// valid certificate.
ContributionRow contribution(const RegionSpec& region, const BoundOptions& options = {});

// Assembles the whole table. The sum and the amplified constant are computed
// from the unrounded row values and only rounded for printing.
BoundReport assemble_bound(const ConstructionConfig& config,
                           const BoundOptions& options = {});

// (k/(k-1)) * c on exact rationals, floor at 5 decimal places.
std::string amplify(const std::string& c_decimal, int k);

// Exact quotient of the limit region area coefficient by the patch area.
Rational density_from_areas(const Rational& region_area_coeff, const Rational& patch_area);

// Aligned table plus the machine-readable SUMMARY line.
std::string format_bound_report(const BoundReport& report);

}  // namespace patchcount
