#include "schurkit/schurkit.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "schurkit/cde.hpp"
#include "schurkit/commands.hpp"
#include "schurkit/ncpl.hpp"
#include "schurkit/unimodal.hpp"

struct sk_engine {
  schurkit::CommandLimits limits;
  std::string last_error;
};

namespace {

char *dup_string(const std::string &s) {
  char *out = static_cast<char *>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <class F>
sk_status guarded(sk_engine *eng, F &&f) {
  if (!eng) return SK_ERROR_USAGE;
  eng->last_error.clear();
  try {
    return f();
  } catch (const schurkit::UsageError &e) {
    eng->last_error = e.what();
    return SK_ERROR_USAGE;
  } catch (const std::invalid_argument &e) {
    eng->last_error = e.what();
    return SK_ERROR_USAGE;
  } catch (const std::bad_alloc &) {
    eng->last_error = "out of memory";
    return SK_ERROR_NOMEM;
  } catch (const std::exception &e) {
    eng->last_error = e.what();
    return SK_ERROR_INTERNAL;
  }
}

sk_status emit(sk_engine *eng, const std::string &text, char **out) {
  if (!out) {
    eng->last_error = "null output pointer";
    return SK_ERROR_USAGE;
  }
  *out = dup_string(text);
  if (!*out) {
    eng->last_error = "out of memory";
    return SK_ERROR_NOMEM;
  }
  return SK_OK;
}

}  // namespace

extern "C" {

sk_engine *sk_engine_new(void) { return new (std::nothrow) sk_engine; }

void sk_engine_free(sk_engine *eng) { delete eng; }

const char *sk_last_error(const sk_engine *eng) {
  return eng ? eng->last_error.c_str() : "null engine";
}

sk_status sk_set_max_n(sk_engine *eng, int max_n) {
  return guarded(eng, [&]() {
    if (max_n < 1) throw schurkit::UsageError("max_n must be positive");
    eng->limits.max_n = max_n;
    return SK_OK;
  });
}

sk_status sk_set_max_k(sk_engine *eng, int max_k) {
  return guarded(eng, [&]() {
    if (max_k < 1) throw schurkit::UsageError("max_k must be positive");
    eng->limits.max_k = max_k;
    return SK_OK;
  });
}

sk_status sk_schur_expand(sk_engine *eng, const char *set_spec, int n, char **json_out) {
  return guarded(eng, [&]() {
    if (!set_spec) throw schurkit::UsageError("set_spec is null");
    return emit(eng, schurkit::cmd_schur_expand(set_spec, n, eng->limits), json_out);
  });
}

sk_status sk_cde_check(sk_engine *eng, const char *family, const char *params_json,
                       char **json_out) {
  return guarded(eng, [&]() {
    if (!family) throw schurkit::UsageError("family is null");
    return emit(eng,
                schurkit::cmd_cde_check(family, params_json ? params_json : "{}", eng->limits),
                json_out);
  });
}

sk_status sk_verify(sk_engine *eng, const char *suite, int *failures_out, char **json_out) {
  return guarded(eng, [&]() {
    if (!suite) throw schurkit::UsageError("suite is null");
    int failures = 0;
    const std::string text = schurkit::cmd_verify(suite, eng->limits, &failures);
    if (failures_out) *failures_out = failures;
    return emit(eng, text, json_out);
  });
}

sk_status sk_tree_dot(sk_engine *eng, const char *tree_json, char **dot_out) {
  return guarded(eng, [&]() {
    if (!tree_json) throw schurkit::UsageError("tree_json is null");
    return emit(eng, schurkit::cmd_tree_dot(tree_json), dot_out);
  });
}

sk_status sk_caterpillar_count(sk_engine *eng, int n, long long *out) {
  return guarded(eng, [&]() {
    if (!out) throw schurkit::UsageError("null output pointer");
    *out = static_cast<long long>(schurkit::enumerate_caterpillars(n).size());
    return SK_OK;
  });
}

sk_status sk_gannon_count(sk_engine *eng, int n, int m, long long *out) {
  return guarded(eng, [&]() {
    if (!out) throw schurkit::UsageError("null output pointer");
    *out = schurkit::gannon_count(n, m);
    return SK_OK;
  });
}

sk_status sk_is_generalized_pentagonal(sk_engine *eng, long long k, int *out) {
  return guarded(eng, [&]() {
    if (!out) throw schurkit::UsageError("null output pointer");
    *out = schurkit::is_generalized_pentagonal(k).pentagonal ? 1 : 0;
    return SK_OK;
  });
}

void sk_string_free(char *s) { std::free(s); }

const char *sk_status_name(sk_status s) {
  switch (s) {
    case SK_OK:
      return "ok";
    case SK_ERROR_USAGE:
      return "usage error";
    case SK_ERROR_INTERNAL:
      return "internal error";
    case SK_ERROR_NOMEM:
      return "out of memory";
  }
  return "unknown";
}

}  // extern "C"
