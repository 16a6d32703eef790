// Command-line front end; talks to the library through the C interface only.

#include <chrono>
#include <cstdio>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "patchcount.h"

namespace {

struct StringOut {
  char* s = nullptr;
  ~StringOut() { pc_string_free(s); }
};

int fail(pc_status status) {
  std::fprintf(stderr, "error: %s\n", pc_last_error());
  return status == PC_ERROR_INTERNAL ? 2 : 1;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

struct CountPatchArgs {
  std::string file, biperm;
  int complete = 0;
  long grid3 = 0;
  int threads = 1;
  long long memo_cap = 0;
  int log2_places = 2;
  bool allow_long = false;
};

// Anything beyond this many segments is a paper-scale run.
constexpr int kLongRunSegments = 24;
constexpr long kLongRunLgvSide = 400;

int run_count_patch(const CountPatchArgs& args) {
  pc_biperm* biperm = nullptr;
  pc_status st = PC_OK;
  if (!args.file.empty()) {
    pc_patch* patch = nullptr;
    st = pc_patch_parse_file(args.file.c_str(), &patch);
    if (st != PC_OK) return fail(st);
    st = pc_patch_bipermutation(patch, &biperm);
    pc_patch_free(patch);
  } else if (!args.biperm.empty()) {
    st = pc_biperm_parse(args.biperm.c_str(), &biperm);
  } else if (args.complete > 0) {
    st = pc_biperm_complete(args.complete, &biperm);
  } else {
    pc_patch* patch = nullptr;
    st = pc_patch_grid3(args.grid3, &patch);
    if (st != PC_OK) return fail(st);
    st = pc_patch_bipermutation(patch, &biperm);
    pc_patch_free(patch);
  }
  if (st != PC_OK) return fail(st);
  std::unique_ptr<pc_biperm, decltype(&pc_biperm_free)> guard(biperm, pc_biperm_free);

  int segments = 0;
  pc_biperm_segment_count(biperm, &segments);
  if (segments > kLongRunSegments && !args.allow_long) {
    std::fprintf(stderr,
                 "error: %d segments is a long run; pass --allow-long to proceed\n",
                 segments);
    return 1;
  }

  pc_count_options options{args.threads, args.memo_cap};
  pc_count_stats stats{};
  StringOut count;
  st = pc_count_reroutings(biperm, &options, &count.s, &stats);
  if (st != PC_OK) return fail(st);
  StringOut log2;
  st = pc_log2_decimal(count.s, args.log2_places, &log2.s);
  if (st != PC_OK) return fail(st);

  std::printf("count %s\n", count.s);
  std::printf("log2 %s\n", log2.s);
  std::printf("memo entries=%lld hits=%lld\n", stats.memo_entries, stats.memo_hits);
  std::printf("time %.3fs\n", stats.seconds);
  return 0;
}

long long parse_scaled_log2(const char* text) {
  // fixed-point decimal with exactly 3 fraction digits -> integer millis
  std::string s(text);
  auto dot = s.find('.');
  std::string digits = s.substr(0, dot) + s.substr(dot + 1);
  return std::stoll(digits);
}

int run_lgv(long side, const std::vector<long>& table, int log2_places,
            bool allow_long) {
  if (!table.empty()) {
    std::printf("%6s %16s %10s %10s\n", "l", "log2", "ratio", "time");
    for (long l : table) {
      if (l > kLongRunLgvSide && !allow_long) {
        std::fprintf(stderr, "error: side %ld is a long run; pass --allow-long\n", l);
        return 1;
      }
      auto t0 = std::chrono::steady_clock::now();
      StringOut log2;
      pc_status st = pc_lgv_log2(l, 3, &log2.s);
      if (st != PC_OK) return fail(st);
      double secs = seconds_since(t0);
      // ratio log2/l^2 at 4 places, rounded to nearest
      long long millis = parse_scaled_log2(log2.s);
      long long denom = l * l;
      long long ratio = (2 * millis * 10 + denom) / (2 * denom);
      std::printf("%6ld %16s %6lld.%04lld %9.2fs\n", l, log2.s, ratio / 10000,
                  ratio % 10000, secs);
    }
    return 0;
  }

  if (side > kLongRunLgvSide && !allow_long) {
    std::fprintf(stderr, "error: side %ld is a long run; pass --allow-long\n", side);
    return 1;
  }
  auto t0 = std::chrono::steady_clock::now();
  StringOut count;
  pc_status st = pc_lgv_count(side, &count.s);
  if (st != PC_OK) return fail(st);
  StringOut log2;
  st = pc_log2_decimal(count.s, log2_places, &log2.s);
  if (st != PC_OK) return fail(st);
  double secs = seconds_since(t0);

  const size_t digits = std::string(count.s).size();
  if (digits <= 1000)
    std::printf("count %s\n", count.s);
  else
    std::printf("digits %zu\n", digits);
  std::printf("log2 %s\n", log2.s);
  std::printf("time %.3fs\n", secs);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact rerouting counts for pseudoline patches and the "
               "resulting arrangement lower bounds"};
  app.require_subcommand(1);

  // count-patch
  CountPatchArgs cp;
  auto* count_patch = app.add_subcommand(
      "count-patch", "count the reroutings of one patch with the dynamic program");
  auto* opt_file = count_patch->add_option("--file", cp.file, "patch file");
  auto* opt_biperm =
      count_patch->add_option("--biperm", cp.biperm, "bipermutation token list");
  auto* opt_complete = count_patch->add_option(
      "--complete", cp.complete, "complete patch on n pairwise-crossing segments");
  auto* opt_grid3 =
      count_patch->add_option("--grid3", cp.grid3, "three-slope square of side l");
  opt_file->excludes(opt_biperm)->excludes(opt_complete)->excludes(opt_grid3);
  opt_biperm->excludes(opt_complete)->excludes(opt_grid3);
  opt_complete->excludes(opt_grid3);
  count_patch->add_option("--threads", cp.threads, "worker threads (default 1)");
  count_patch->add_option("--memo-cap", cp.memo_cap,
                          "memo entry cap, 0 = unbounded");
  count_patch->add_option("--log2-places", cp.log2_places,
                          "decimal places for the log2 line");
  count_patch->add_flag("--allow-long", cp.allow_long,
                        "permit multi-hour paper-scale runs");

  // lgv
  long side = 0;
  std::vector<long> table;
  int lgv_places = 3;
  bool lgv_allow_long = false;
  auto* lgv = app.add_subcommand(
      "lgv", "count reroutings of three-slope squares by determinant");
  auto* opt_side = lgv->add_option("--side", side, "side length l");
  auto* opt_table =
      lgv->add_option("--table", table, "comma-separated side lengths")
          ->delimiter(',');
  opt_side->excludes(opt_table);
  lgv->add_option("--log2-places", lgv_places, "decimal places for the log2 line");
  lgv->add_flag("--allow-long", lgv_allow_long, "permit multi-hour runs");

  // bound
  std::string config_path;
  int bound_threads = 1;
  auto* bound = app.add_subcommand(
      "bound", "assemble per-region counts into the lower-bound constant");
  bound->add_option("--config", config_path, "construction config file")->required();
  bound->add_option("--threads", bound_threads, "worker threads for counted regions");

  // oracle
  auto* oracle = app.add_subcommand("oracle", "independent verification counters");
  oracle->require_subcommand(1);
  int bn_n = 0;
  auto* oracle_bn =
      oracle->add_subcommand("bn", "arrangement numbers via reduced-word classes");
  oracle_bn->add_option("--n", bn_n, "number of pseudolines (2..6)")->required();
  int lmax = 2, nmax = 4;
  auto* oracle_cross = oracle->add_subcommand(
      "crosscheck", "agreement of the independent counting algorithms");
  oracle_cross->add_option("--lmax", lmax, "largest grid side");
  oracle_cross->add_option("--nmax", nmax, "largest complete patch");

  // verify
  std::string data_dir = ".";
  bool verify_allow_long = false;
  int verify_threads = 1;
  auto* verify = app.add_subcommand("verify", "run the full verification suite");
  verify->add_option("--data", data_dir, "repository root with tables/ and patches/");
  verify->add_flag("--allow-long", verify_allow_long,
                   "include the multi-hour reproduction");
  verify->add_option("--threads", verify_threads, "worker threads");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  if (count_patch->parsed()) {
    if (cp.file.empty() && cp.biperm.empty() && cp.complete == 0 && cp.grid3 == 0) {
      std::fprintf(stderr,
                   "error: one of --file/--biperm/--complete/--grid3 is required\n");
      return 1;
    }
    return run_count_patch(cp);
  }

  if (lgv->parsed()) {
    if (side == 0 && table.empty()) {
      std::fprintf(stderr, "error: one of --side/--table is required\n");
      return 1;
    }
    return run_lgv(side, table, lgv_places, lgv_allow_long);
  }

  if (bound->parsed()) {
    std::string base_dir = ".";
    auto slash = config_path.find_last_of('/');
    if (slash != std::string::npos) base_dir = config_path.substr(0, slash);
    StringOut report;
    pc_status st =
        pc_bound_report(config_path.c_str(), base_dir.c_str(), bound_threads, &report.s);
    if (st != PC_OK) return fail(st);
    std::fputs(report.s, stdout);
    return 0;
  }

  if (oracle->parsed()) {
    if (oracle_bn->parsed()) {
      StringOut out;
      pc_status st = pc_oracle_bn(bn_n, &out.s);
      if (st != PC_OK) return fail(st);
      std::printf("%s\n", out.s);
      return 0;
    }
    StringOut report;
    int mismatches = 0;
    pc_status st = pc_oracle_crosscheck(lmax, nmax, &report.s, &mismatches);
    if (st != PC_OK) return fail(st);
    std::fputs(report.s, stdout);
    return mismatches == 0 ? 0 : 2;
  }

  if (verify->parsed()) {
    StringOut report;
    int failures = 0;
    pc_status st = pc_verify(data_dir.c_str(), verify_allow_long ? 1 : 0,
                             verify_threads, &report.s, &failures);
    if (st != PC_OK) return fail(st);
    std::fputs(report.s, stdout);
    return failures == 0 ? 0 : 2;
  }

  return 1;
}
