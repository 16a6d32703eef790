#include "verify.hpp"

#include <algorithm>
#include <filesystem>
#include <sstream>

#include "bipermutation.hpp"
#include "construction.hpp"
#include "error.hpp"
#include "geometry.hpp"
#include "lgv.hpp"
#include "numeric.hpp"
#include "oracle.hpp"

namespace patchcount {

namespace {

struct Expected {
  std::string table_path;
  // contribution column, scaled by 1e5
  std::vector<long> contributions;
  long sum_scaled;        // scaled by 1e5
  Rational c_floor;       // the constant the sum must certify
  Rational final_floor;   // the constant the amplified sum must certify
};

VerifyCheck check_complete_anchors(const VerifyOptions& options) {
  VerifyCheck check{1, "complete-patch anchors (n=3..7)"};
  const std::vector<std::pair<int, const char*>> anchors = {
      {3, "2"}, {4, "8"}, {5, "62"}, {6, "908"}, {7, "24698"}};
  MemoTable memo;
  CountOptions copt;
  copt.threads = options.threads;
  std::ostringstream detail;
  check.pass = true;
  for (const auto& [n, expected] : anchors) {
    BigCount got = count_reroutings(gen_complete(n), memo, copt);
    if (got != BigCount(expected)) {
      check.pass = false;
      detail << " n=" << n << " expected " << expected << " got " << got.get_str();
    }
  }
  if (check.pass) detail << "2 8 62 908 24698";
  check.detail = detail.str();
  return check;
}

VerifyCheck check_lgv_anchors() {
  VerifyCheck check{2, "non-crossing path determinant anchors"};
  check.pass = lgv_count(2) == 20;
  std::ostringstream detail;
  if (!check.pass) detail << " l=2 gave " << lgv_count(2).get_str();

  const std::vector<std::pair<long, long>> log2_anchors = {
      {10, 130523}, {20, 539561}, {50, 3444189}, {100, 13877972}};
  for (const auto& [l, expected_scaled] : log2_anchors) {
    BigCount scaled = log2_floor_scaled(lgv_count(l), 3);
    BigCount diff = scaled - expected_scaled;
    if (diff < -1 || diff > 1) {
      check.pass = false;
      detail << " l=" << l << " log2(milli)=" << scaled.get_str() << " expected "
             << expected_scaled;
    }
  }
  if (check.pass) detail << "det(l=2)=20; log2 at l=10,20,50,100 within 0.001";
  check.detail = detail.str();
  return check;
}

VerifyCheck check_cross_algorithms() {
  VerifyCheck check{3, "cross-algorithm equivalence"};
  CrosscheckReport report = crosscheck(3, 6);
  check.pass = report.mismatches == 0;
  std::ostringstream detail;
  if (check.pass) {
    detail << report.cases.size() << " cases agree";
  } else {
    for (const auto& c : report.cases)
      if (!c.pass) detail << " [" << c.name << ": " << c.detail << "]";
  }
  check.detail = detail.str();
  return check;
}

bool cut_invariant(const Bipermutation& bip, std::string* why) {
  auto pairs = crossing_pairs(bip);
  if (pairs.empty()) return true;
  std::vector<int> cuts;
  for (const auto& [a, b] : pairs) {
    cuts.push_back(a);
    cuts.push_back(b);
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  MemoTable memo;
  BigCount reference = count_reroutings(bip, memo);
  for (int z : cuts) {
    MemoTable fresh;
    BigCount via_z = count_with_cut(bip, z, fresh);
    if (via_z != reference) {
      *why = "[" + bip.to_string() + "] cut " + std::to_string(z) + ": " +
             via_z.get_str() + " vs " + reference.get_str();
      return false;
    }
  }
  for (int threads : {1, 4}) {
    MemoTable fresh;
    CountOptions copt;
    copt.threads = threads;
    BigCount threaded = count_reroutings(bip, fresh, copt);
    if (threaded != reference) {
      *why = "[" + bip.to_string() + "] threads=" + std::to_string(threads) + ": " +
             threaded.get_str() + " vs " + reference.get_str();
      return false;
    }
  }
  return true;
}

VerifyCheck check_cut_invariance() {
  VerifyCheck check{4, "cut invariance (exhaustive <=6, 200 random patches, threads 1/4)"};
  check.pass = true;
  std::string why;

  auto classes = enumerate_bipermutation_classes(6);
  for (const auto& bip : classes) {
    if (!cut_invariant(bip, &why)) {
      check.pass = false;
      check.detail = why;
      return check;
    }
  }

  auto patches = random_patches(200, 10, 20250810u);
  for (const auto& patch : patches) {
    if (!cut_invariant(bipermutation_of_patch(patch), &why)) {
      check.pass = false;
      check.detail = why;
      return check;
    }
  }
  check.detail = std::to_string(classes.size()) + " classes and " +
                 std::to_string(patches.size()) + " random patches";
  return check;
}

bool conserves_crossings(const Bipermutation& bip, int cut, std::string* why) {
  auto all_pairs = crossing_pairs(bip);
  std::vector<std::pair<int, int>> want;
  for (const auto& p : all_pairs)
    if (p.first != cut && p.second != cut) want.push_back(p);
  std::sort(want.begin(), want.end());

  CrossingPoset poset = crossing_poset(bip, cut);
  bool ok = true;
  for_each_linear_extension(poset, [&](const std::vector<int>& order) {
    if (!ok) return;
    auto [p1, p2] = split(bip, cut, order);
    std::vector<std::pair<int, int>> got = crossing_pairs(p1);
    auto more = crossing_pairs(p2);
    got.insert(got.end(), more.begin(), more.end());
    std::sort(got.begin(), got.end());
    if (got != want) {
      ok = false;
      *why = "[" + bip.to_string() + "] cut " + std::to_string(cut) +
             " loses or duplicates crossings";
    }
  });
  return ok;
}

VerifyCheck check_split_conservation() {
  VerifyCheck check{5, "split conservation (exhaustive <=6, all extensions)"};
  check.pass = true;
  long splits = 0;
  std::string why;
  for (const auto& bip : enumerate_bipermutation_classes(6)) {
    auto pairs = crossing_pairs(bip);
    std::vector<int> cuts;
    for (const auto& [a, b] : pairs) {
      cuts.push_back(a);
      cuts.push_back(b);
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    for (int z : cuts) {
      ++splits;
      if (!conserves_crossings(bip, z, &why)) {
        check.pass = false;
        check.detail = why;
        return check;
      }
    }
  }
  check.detail = std::to_string(splits) + " (class, cut) pairs";
  return check;
}

VerifyCheck check_bound_tables(const VerifyOptions& options) {
  VerifyCheck check{6, "bound assembly against the published tables"};
  check.pass = true;
  std::ostringstream detail;

  const std::vector<Expected> tables = {
      {"tables/k4.cfg",
       {4366, 12006},
       16373,
       parse_decimal("0.1637"),
       parse_decimal("0.2183")},
      {"tables/k6.cfg",
       {2911, 2668, 5480, 10130},
       21190,
       parse_decimal("0.2118"),
       parse_decimal("0.2542")},
      {"tables/k12.cfg",
       {970, 323, 1779, 178, 1461, 548, 647, 658, 1240, 452, 615, 722, 1748, 356,
        1022, 837, 1639, 2292, 7459},
       24946,
       parse_decimal("0.2494"),
       parse_decimal("0.2721")}};

  for (const auto& expected : tables) {
    std::filesystem::path cfg =
        std::filesystem::path(options.data_dir) / expected.table_path;
    ConstructionConfig config;
    BoundReport report;
    try {
      config = parse_construction_config_file(cfg.string());
      BoundOptions bopt;
      bopt.count.threads = options.threads;
      bopt.base_dir = options.data_dir;
      report = assemble_bound(config, bopt);
    } catch (const Error& e) {
      check.pass = false;
      detail << " [" << expected.table_path << ": " << e.what() << "]";
      continue;
    }
    if (report.rows.size() != expected.contributions.size()) {
      check.pass = false;
      detail << " [" << expected.table_path << ": row count mismatch]";
      continue;
    }
    auto scaled5 = [](const std::string& s) {
      Rational q = parse_decimal(s) * 100000;
      q.canonicalize();
      return q;
    };
    for (size_t i = 0; i < report.rows.size(); ++i) {
      Rational got = scaled5(report.rows[i].contribution);
      Rational diff = got - Rational(expected.contributions[i]);
      if (diff < -1 || diff > 1) {
        check.pass = false;
        detail << " [" << expected.table_path << " row " << report.rows[i].name
               << ": contribution " << report.rows[i].contribution << "]";
      }
    }
    Rational c_scaled = scaled5(report.c);
    Rational diff = c_scaled - Rational(expected.sum_scaled);
    if (diff < -1 || diff > 1) {
      check.pass = false;
      detail << " [" << expected.table_path << ": sum " << report.c << "]";
    }
    if (parse_decimal(report.c) < expected.c_floor) {
      check.pass = false;
      detail << " [" << expected.table_path << ": sum " << report.c
             << " fails to certify " << rational_to_string(expected.c_floor) << "]";
    }
    if (parse_decimal(report.c_final) < expected.final_floor) {
      check.pass = false;
      detail << " [" << expected.table_path << ": final " << report.c_final
             << " fails to certify " << rational_to_string(expected.final_floor)
             << "]";
    }
    if (check.pass)
      detail << " [" << config.label << ": c=" << report.c
             << " c_final=" << report.c_final << "]";
  }
  check.detail = detail.str();
  return check;
}

VerifyCheck check_p4_reproduction(const VerifyOptions& options) {
  VerifyCheck check{7, "large four-bundle patch reproduction (long run)"};
  if (!options.allow_long) {
    check.skipped = true;
    check.detail = "enable with --allow-long; multi-hour computation";
    return check;
  }
  std::filesystem::path path =
      std::filesystem::path(options.data_dir) / "patches" / "p4.patch";
  Bipermutation bip = bipermutation_of_patch(parse_patch_file(path.string()));
  MemoTable memo;
  CountOptions copt;
  copt.threads = options.threads;
  CountStats stats;
  BigCount got = count_reroutings(bip, memo, copt, &stats);
  BigCount expected("10233480626615962155895931163981261674");
  check.pass = got == expected;
  std::ostringstream detail;
  detail << "count=" << got.get_str() << " in " << stats.seconds << "s";
  check.detail = detail.str();
  return check;
}

}  // namespace

VerifyReport run_verification(const VerifyOptions& options) {
  VerifyReport report;
  report.checks.push_back(check_complete_anchors(options));
  report.checks.push_back(check_lgv_anchors());
  report.checks.push_back(check_cross_algorithms());
  report.checks.push_back(check_cut_invariance());
  report.checks.push_back(check_split_conservation());
  report.checks.push_back(check_bound_tables(options));
  report.checks.push_back(check_p4_reproduction(options));
  for (const auto& check : report.checks) {
    if (check.skipped)
      ++report.skipped;
    else if (!check.pass)
      ++report.failures;
  }
  return report;
}

std::string format_verify_report(const VerifyReport& report) {
  std::ostringstream out;
  for (const auto& check : report.checks) {
    const char* status = check.skipped ? "SKIP" : (check.pass ? "PASS" : "FAIL");
    out << status << " " << check.id << " " << check.name;
    if (!check.detail.empty()) out << ": " << check.detail;
    out << "\n";
  }
  out << "SUMMARY passed=" << (report.checks.size() - report.failures - report.skipped)
      << " failed=" << report.failures << " skipped=" << report.skipped << "\n";
  return out.str();
}

}  // namespace patchcount
