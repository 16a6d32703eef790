#include "construction.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "error.hpp"
#include "geometry.hpp"
#include "lgv.hpp"
#include "oracle.hpp"

namespace patchcount {

namespace {

mpz_class pow10_z(int places) {
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(places));
  return p;
}

std::vector<std::string> tokenize(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> toks;
  std::string t;
  while (in >> t) toks.push_back(t);
  return toks;
}

}  // namespace

ConstructionConfig parse_construction_config(const std::string& text) {
  ConstructionConfig config;
  bool have_k = false;

  std::istringstream in(text);
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    auto toks = tokenize(raw);
    if (toks.empty() || toks[0][0] == '#') continue;
    if (toks[0] == "k") {
      if (have_k) fail_parse(line_no, 1, "second k statement");
      if (toks.size() != 2) fail_parse(line_no, 1, "k statement needs one integer");
      config.k = std::stoi(toks[1]);
      if (config.k < 2) fail_validation("k must be at least 2");
      have_k = true;
    } else if (toks[0] == "region") {
      if (toks.size() != 6 || toks[2] != "density")
        fail_parse(line_no, 1,
                   "expected: region <name> density <rational> <source> <value>");
      RegionSpec region;
      region.name = toks[1];
      region.density = parse_rational(toks[3]);
      if (region.density <= 0) fail_validation("region " + region.name + ": density must be positive");
      const std::string& kind = toks[4];
      const std::string& value = toks[5];
      if (kind == "count") {
        BigCount c;
        try {
          c = BigCount(value, 10);
        } catch (const std::invalid_argument&) {
          fail_parse(line_no, 1, "bad count '" + value + "'");
        }
        if (c <= 0) fail_validation("region " + region.name + ": count must be positive");
        region.count_source = c;
      } else if (kind == "log2_bound") {
        region.count_source = parse_decimal(value);
      } else if (kind == "patch") {
        region.count_source = CountFromPatchFile{value};
      } else if (kind == "grid3") {
        region.count_source = CountFromGrid3{std::stol(value)};
      } else if (kind == "complete") {
        region.count_source = CountFromComplete{std::stoi(value)};
      } else {
        fail_parse(line_no, 1, "unknown count source '" + kind + "'");
      }
      for (const auto& other : config.regions)
        if (other.name == region.name)
          fail_validation("duplicate region name " + region.name);
      config.regions.push_back(std::move(region));
    } else {
      fail_parse(line_no, 1, "unknown statement '" + toks[0] + "'");
    }
  }
  if (!have_k) fail_validation("missing k statement");
  if (config.regions.empty()) fail_validation("config has no regions");
  return config;
}

ConstructionConfig parse_construction_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Io, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  ConstructionConfig config = parse_construction_config(buf.str());
  config.label = std::filesystem::path(path).stem().string();
  return config;
}

namespace {

struct ResolvedRegion {
  Rational log2_lower;  // certified lower bound on log2 of the count
  std::string log2_display;
  std::optional<double> seconds;
};

// Certified scaled log2 at 12 places; far below the printing granularity.
constexpr int kInnerPlaces = 12;

ResolvedRegion resolve(const RegionSpec& region, const BoundOptions& options) {
  ResolvedRegion out;

  auto from_count = [&](const BigCount& count, std::optional<double> secs) {
    if (count <= 0)
      fail_validation("region " + region.name + ": count must be positive");
    out.log2_lower =
        Rational(log2_floor_scaled(count, kInnerPlaces), pow10_z(kInnerPlaces));
    out.log2_lower.canonicalize();
    out.log2_display = log2_floor_decimal(count, options.log2_places);
    out.seconds = secs;
  };

  if (const BigCount* inline_count = std::get_if<BigCount>(&region.count_source)) {
    from_count(*inline_count, std::nullopt);
  } else if (const Rational* bound = std::get_if<Rational>(&region.count_source)) {
    out.log2_lower = *bound;
    out.log2_display = floor_decimal(*bound, options.log2_places);
  } else {
    auto t0 = std::chrono::steady_clock::now();
    Bipermutation bip;
    if (const auto* file = std::get_if<CountFromPatchFile>(&region.count_source)) {
      std::filesystem::path p(file->path);
      if (p.is_relative() && !options.base_dir.empty())
        p = std::filesystem::path(options.base_dir) / p;
      bip = bipermutation_of_patch(parse_patch_file(p.string()));
    } else if (const auto* grid = std::get_if<CountFromGrid3>(&region.count_source)) {
      bip = bipermutation_of_patch(gen_grid3(grid->side));
    } else {
      bip = gen_complete(std::get<CountFromComplete>(region.count_source).n);
    }
    MemoTable memo;
    BigCount count = count_reroutings(bip, memo, options.count);
    double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    from_count(count, secs);
  }
  return out;
}

}  // namespace

ContributionRow contribution(const RegionSpec& region, const BoundOptions& options) {
  ResolvedRegion resolved = resolve(region, options);
  ContributionRow row;
  row.name = region.name;
  row.log2_count = resolved.log2_display;
  row.density = region.density;
  row.contribution =
      floor_decimal(region.density * resolved.log2_lower, options.contribution_places);
  row.seconds = resolved.seconds;
  return row;
}

BoundReport assemble_bound(const ConstructionConfig& config, const BoundOptions& options) {
  BoundReport report;
  report.k = config.k;

  Rational exact_sum = 0;
  for (const auto& region : config.regions) {
    ResolvedRegion resolved;
    try {
      resolved = resolve(region, options);
    } catch (const Error& e) {
      throw Error(e.kind(), "region " + region.name + ": " + e.what());
    }
    ContributionRow row;
    row.name = region.name;
    row.log2_count = resolved.log2_display;
    row.density = region.density;
    row.contribution = floor_decimal(region.density * resolved.log2_lower,
                                     options.contribution_places);
    row.seconds = resolved.seconds;
    report.rows.push_back(std::move(row));
    exact_sum += region.density * resolved.log2_lower;
  }

  report.c = floor_decimal(exact_sum, options.contribution_places);
  Rational amplified = exact_sum * Rational(config.k, config.k - 1);
  amplified.canonicalize();
  report.c_final = floor_decimal(amplified, options.contribution_places);
  return report;
}

std::string amplify(const std::string& c_decimal, int k) {
  if (k < 2) fail_validation("amplify needs k >= 2");
  Rational c = parse_decimal(c_decimal);
  if (c <= 0) fail_validation("amplify needs c > 0");
  Rational out = c * Rational(k, k - 1);
  out.canonicalize();
  return floor_decimal(out, 5);
}

Rational density_from_areas(const Rational& region_area_coeff, const Rational& patch_area) {
  if (region_area_coeff <= 0) fail_validation("region area coefficient must be positive");
  if (patch_area <= 0) fail_validation("patch area must be positive");
  Rational q = region_area_coeff / patch_area;
  q.canonicalize();
  return q;
}

std::string format_bound_report(const BoundReport& report) {
  std::ostringstream out;
  auto put = [&](const std::string& name, const std::string& log2s,
                 const std::string& dens, const std::string& contrib,
                 const std::string& time) {
    out << std::left << std::setw(8) << name << std::right << std::setw(22) << log2s
        << std::setw(16) << dens << std::setw(14) << contrib << std::setw(13) << time
        << "\n";
  };
  put("region", "log2(# reroutings)", "# of patches", "contribution", "time");

  double total_seconds = 0;
  bool any_seconds = false;
  for (const auto& row : report.rows) {
    std::string time = "-";
    if (row.seconds) {
      any_seconds = true;
      total_seconds += *row.seconds;
      std::ostringstream t;
      t << std::fixed << std::setprecision(2) << *row.seconds << "s";
      time = t.str();
    }
    put(row.name, row.log2_count, rational_to_string(row.density), row.contribution,
        time);
  }
  std::string total_time = "-";
  if (any_seconds) {
    std::ostringstream t;
    t << std::fixed << std::setprecision(2) << total_seconds << "s";
    total_time = t.str();
  }
  put("sum", "-", "-", report.c, total_time);
  out << "SUMMARY c=" << report.c << " k=" << report.k << " c_final=" << report.c_final
      << "\n";
  return out.str();
}

}  // namespace patchcount
