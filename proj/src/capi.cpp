#include "patchcount.h"

#include <cstring>
#include <new>
#include <sstream>
#include <string>

#include "bipermutation.hpp"
#include "construction.hpp"
#include "error.hpp"
#include "geometry.hpp"
#include "lgv.hpp"
#include "numeric.hpp"
#include "oracle.hpp"
#include "verify.hpp"

using namespace patchcount;

struct pc_patch {
  PatchSpec spec;
};

struct pc_biperm {
  Bipermutation bip;
};

namespace {

thread_local std::string g_last_error = "no error";

pc_status status_of(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::Parse:
      return PC_ERROR_PARSE;
    case ErrorKind::Validation:
      return PC_ERROR_VALIDATE;
    case ErrorKind::Capacity:
      return PC_ERROR_CAPACITY;
    case ErrorKind::Io:
      return PC_ERROR_IO;
    case ErrorKind::Internal:
      return PC_ERROR_INTERNAL;
  }
  return PC_ERROR_INTERNAL;
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(::operator new(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <typename Fn>
pc_status guarded(Fn&& fn) {
  try {
    fn();
    return PC_OK;
  } catch (const Error& e) {
    g_last_error = e.what();
    return status_of(e);
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return PC_ERROR_CAPACITY;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return PC_ERROR_INTERNAL;
  }
}

pc_status require(bool ok, const char* what) {
  if (ok) return PC_OK;
  g_last_error = what;
  return PC_ERROR_ARGUMENT;
}

}  // namespace

extern "C" {

const char* pc_version(void) { return "1.0.0"; }

const char* pc_last_error(void) { return g_last_error.c_str(); }

void pc_string_free(char* s) { ::operator delete(s); }

pc_status pc_patch_parse(const char* text, pc_patch** out) {
  if (auto st = require(text && out, "null argument")) return st;
  return guarded([&] { *out = new pc_patch{parse_patch(text)}; });
}

pc_status pc_patch_parse_file(const char* path, pc_patch** out) {
  if (auto st = require(path && out, "null argument")) return st;
  return guarded([&] { *out = new pc_patch{parse_patch_file(path)}; });
}

pc_status pc_patch_grid3(long side, pc_patch** out) {
  if (auto st = require(out != nullptr, "null argument")) return st;
  return guarded([&] { *out = new pc_patch{gen_grid3(side)}; });
}

void pc_patch_free(pc_patch* patch) { delete patch; }

pc_status pc_patch_segment_count(const pc_patch* patch, int* out) {
  if (auto st = require(patch && out, "null argument")) return st;
  return guarded([&] {
    *out = static_cast<int>(segments_of_patch(patch->spec).size());
  });
}

pc_status pc_patch_area(const pc_patch* patch, char** out) {
  if (auto st = require(patch && out, "null argument")) return st;
  return guarded([&] {
    *out = dup_string(rational_to_string(polygon_area(patch->spec.boundary)));
  });
}

pc_status pc_patch_census(const pc_patch* patch, char** out) {
  if (auto st = require(patch && out, "null argument")) return st;
  return guarded([&] {
    std::ostringstream text;
    for (const auto& [order, count] : multicrossing_census(patch->spec))
      text << order << " " << count << "\n";
    *out = dup_string(text.str());
  });
}

pc_status pc_patch_bipermutation(const pc_patch* patch, pc_biperm** out) {
  if (auto st = require(patch && out, "null argument")) return st;
  return guarded([&] {
    *out = new pc_biperm{bipermutation_of_patch(patch->spec)};
  });
}

pc_status pc_biperm_parse(const char* text, pc_biperm** out) {
  if (auto st = require(text && out, "null argument")) return st;
  return guarded([&] { *out = new pc_biperm{Bipermutation::parse(text)}; });
}

pc_status pc_biperm_complete(int n, pc_biperm** out) {
  if (auto st = require(out != nullptr, "null argument")) return st;
  return guarded([&] { *out = new pc_biperm{gen_complete(n)}; });
}

void pc_biperm_free(pc_biperm* biperm) { delete biperm; }

pc_status pc_biperm_to_string(const pc_biperm* biperm, char** out) {
  if (auto st = require(biperm && out, "null argument")) return st;
  return guarded([&] { *out = dup_string(biperm->bip.to_string()); });
}

pc_status pc_biperm_segment_count(const pc_biperm* biperm, int* out) {
  if (auto st = require(biperm && out, "null argument")) return st;
  *out = biperm->bip.segment_count();
  return PC_OK;
}

pc_status pc_count_reroutings(const pc_biperm* biperm, const pc_count_options* options,
                              char** count_out, pc_count_stats* stats) {
  if (auto st = require(biperm && count_out, "null argument")) return st;
  return guarded([&] {
    CountOptions copt;
    if (options) {
      copt.threads = options->threads > 1 ? options->threads : 1;
      copt.memo_cap = options->memo_cap > 0
                          ? static_cast<std::uint64_t>(options->memo_cap)
                          : 0;
    }
    MemoTable memo(copt.memo_cap);
    CountStats cstats;
    BigCount count = count_reroutings(biperm->bip, memo, copt, &cstats);
    *count_out = dup_string(count.get_str());
    if (stats) {
      stats->memo_entries = static_cast<long long>(cstats.memo_entries);
      stats->memo_hits = static_cast<long long>(cstats.memo_hits);
      stats->seconds = cstats.seconds;
    }
  });
}

pc_status pc_log2_decimal(const char* count_decimal, int places, char** out) {
  if (auto st = require(count_decimal && out, "null argument")) return st;
  return guarded([&] {
    BigCount x;
    try {
      x = BigCount(count_decimal, 10);
    } catch (const std::invalid_argument&) {
      fail_validation(std::string("not an integer: '") + count_decimal + "'");
    }
    *out = dup_string(log2_floor_decimal(x, places));
  });
}

pc_status pc_lgv_count(long side, char** out) {
  if (auto st = require(out != nullptr, "null argument")) return st;
  return guarded([&] { *out = dup_string(lgv_count(side).get_str()); });
}

pc_status pc_lgv_log2(long side, int places, char** out) {
  if (auto st = require(out != nullptr, "null argument")) return st;
  return guarded([&] {
    *out = dup_string(log2_floor_decimal(lgv_count(side), places));
  });
}

pc_status pc_bound_report(const char* config_path, const char* base_dir, int threads,
                          char** report_out) {
  if (auto st = require(config_path && report_out, "null argument")) return st;
  return guarded([&] {
    ConstructionConfig config = parse_construction_config_file(config_path);
    BoundOptions bopt;
    if (base_dir) bopt.base_dir = base_dir;
    bopt.count.threads = threads > 1 ? threads : 1;
    *report_out = dup_string(format_bound_report(assemble_bound(config, bopt)));
  });
}

pc_status pc_oracle_bn(int n, char** out) {
  if (auto st = require(out != nullptr, "null argument")) return st;
  return guarded([&] {
    *out = dup_string(reduced_word_classes(n).classes.get_str());
  });
}

pc_status pc_oracle_crosscheck(int l_max, int n_max, char** report_out,
                               int* mismatches) {
  if (auto st = require(report_out != nullptr, "null argument")) return st;
  return guarded([&] {
    CrosscheckReport report = crosscheck(l_max, n_max);
    std::ostringstream text;
    for (const auto& c : report.cases)
      text << (c.pass ? "PASS" : "FAIL") << " " << c.name << ": " << c.detail << "\n";
    *report_out = dup_string(text.str());
    if (mismatches) *mismatches = report.mismatches;
  });
}

pc_status pc_verify(const char* data_dir, int allow_long, int threads,
                    char** report_out, int* failures) {
  if (auto st = require(report_out != nullptr, "null argument")) return st;
  return guarded([&] {
    VerifyOptions vopt;
    if (data_dir) vopt.data_dir = data_dir;
    vopt.allow_long = allow_long != 0;
    vopt.threads = threads > 1 ? threads : 1;
    VerifyReport report = run_verification(vopt);
    *report_out = dup_string(format_verify_report(report));
    if (failures) *failures = report.failures;
  });
}

}  // extern "C"
