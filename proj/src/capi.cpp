#include "asl2.h"

#include <functional>
#include <new>
#include <optional>
#include <stdexcept>
#include <string>

#include "asl2/commands.hpp"

struct asl2_report_s {
  asl2::cmd::CommandResult result;
  std::string json_cache;
};

namespace {

thread_local std::string g_last_error;
thread_local std::optional<long> g_seed;

std::optional<asl2::cmd::Window> opt_window(const char* window) {
  if (!window) return std::nullopt;
  return asl2::cmd::parse_window(window);
}

std::string require(const char* arg, const char* name) {
  if (!arg) throw std::invalid_argument(std::string(name) + " is required");
  return arg;
}

asl2_status wrap(asl2_report** out,
                 const std::function<asl2::cmd::CommandResult()>& fn) {
  if (!out) {
    g_last_error = "output handle is required";
    return ASL2_ERROR_INVALID_ARGUMENT;
  }
  try {
    auto* r = new asl2_report_s{fn(), {}};
    *out = r;
    g_last_error.clear();
    return ASL2_OK;
  } catch (const std::invalid_argument& e) {
    g_last_error = e.what();
    // Parse-shaped complaints come from the scalar/window/JSON readers.
    std::string w = e.what();
    if (w.find("scalar") != std::string::npos ||
        w.find("window must") != std::string::npos ||
        w.find("malformed") != std::string::npos ||
        w.find("denominator") != std::string::npos)
      return ASL2_ERROR_PARSE;
    return ASL2_ERROR_INVALID_ARGUMENT;
  } catch (const std::domain_error& e) {
    g_last_error = e.what();
    return ASL2_ERROR_DOMAIN;
  } catch (const nlohmann::json::exception& e) {
    g_last_error = e.what();
    return ASL2_ERROR_PARSE;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return ASL2_ERROR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown error";
    return ASL2_ERROR_INTERNAL;
  }
}

}  // namespace

extern "C" {

const char* asl2_version(void) { return "1.0.0"; }

const char* asl2_last_error(void) { return g_last_error.c_str(); }

void asl2_set_seed(long seed) { g_seed = seed; }

void asl2_clear_seed(void) { g_seed.reset(); }

asl2_status asl2_axioms(const char* structure_json, int complex_mode,
                        asl2_report** out) {
  return wrap(out, [&] {
    std::optional<std::string> file;
    if (structure_json) file = structure_json;
    return asl2::cmd::axioms(file, complex_mode != 0, g_seed);
  });
}

asl2_status asl2_rep_check(const char* weight, const char* window, int margin,
                           int force_generic, asl2_report** out) {
  return wrap(out, [&] {
    return asl2::cmd::rep_check(require(weight, "weight"), opt_window(window),
                                margin < 0 ? 8 : margin, force_generic != 0,
                                g_seed);
  });
}

asl2_status asl2_casimir_check(const char* weight, const char* window,
                               int margin, asl2_report** out) {
  return wrap(out, [&] {
    return asl2::cmd::casimir(require(weight, "weight"), opt_window(window),
                              margin < 0 ? 8 : margin, g_seed);
  });
}

asl2_status asl2_weights(const char* weight, const char* window,
                         int force_generic, asl2_report** out) {
  return wrap(out, [&] {
    return asl2::cmd::weights(require(weight, "weight"), opt_window(window),
                              force_generic != 0, g_seed);
  });
}

asl2_status asl2_classify(const char* weight, asl2_report** out) {
  return wrap(out, [&] {
    return asl2::cmd::classify(require(weight, "weight"), g_seed);
  });
}

asl2_status asl2_isomorphism(const char* weight_from, const char* weight_to,
                             const char* window_from, asl2_report** out) {
  return wrap(out, [&] {
    return asl2::cmd::iso(require(weight_from, "weight_from"),
                          require(weight_to, "weight_to"),
                          opt_window(window_from), g_seed);
  });
}

asl2_status asl2_nogo(long max_nm, long rhs, asl2_report** out) {
  return wrap(out, [&] { return asl2::cmd::nogo(max_nm, rhs, g_seed); });
}

asl2_status asl2_geom_check(const char* lambda, long degree_window,
                            int intertwine, const char* chain_window,
                            asl2_report** out) {
  return wrap(out, [&] {
    return asl2::cmd::geom(require(lambda, "lambda"),
                           degree_window <= 0 ? 12 : degree_window,
                           intertwine != 0, opt_window(chain_window),
                           g_seed);
  });
}

asl2_status asl2_tensor_check(const char* weight_left,
                              const char* weight_right,
                              const char* window_left,
                              const char* window_right, int margin,
                              int dump_residual, asl2_report** out) {
  return wrap(out, [&] {
    return asl2::cmd::tensor(require(weight_left, "weight_left"),
                             require(weight_right, "weight_right"),
                             opt_window(window_left), opt_window(window_right),
                             margin < 0 ? 8 : margin, dump_residual != 0,
                             g_seed);
  });
}

int asl2_report_pass(const asl2_report* r) {
  return r && r->result.pass ? 1 : 0;
}

const char* asl2_report_json(asl2_report* r) {
  if (!r) return "";
  if (r->json_cache.empty()) r->json_cache = r->result.json.dump(2) + "\n";
  return r->json_cache.c_str();
}

const char* asl2_report_text(asl2_report* r) {
  if (!r) return "";
  return r->result.text.c_str();
}

void asl2_report_free(asl2_report* r) { delete r; }

}  // extern "C"
