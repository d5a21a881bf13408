#include "schurkit/commands.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"
#include "schurkit/cde.hpp"
#include "schurkit/ncpl.hpp"
#include "schurkit/perm.hpp"
#include "schurkit/qsym.hpp"
#include "schurkit/subset.hpp"
#include "schurkit/unimodal.hpp"
#include "schurkit/verify.hpp"

namespace schurkit {

namespace {

using json = nlohmann::json;

std::vector<int> parse_int_list(const std::string& text, const char* what) {
  std::vector<int> out;
  std::string cleaned;
  for (char ch : text)
    if (ch != '{' && ch != '}' && ch != ' ') cleaned.push_back(ch);
  std::stringstream ss(cleaned);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    try {
      out.push_back(std::stoi(item));
    } catch (const std::exception&) {
      throw UsageError(std::string(what) + ": expected a comma-separated list of integers");
    }
  }
  return out;
}

SubsetOfRange subset_from_json(const json& j, int n, const char* what) {
  std::vector<int> members;
  if (j.is_string()) {
    members = parse_int_list(j.get<std::string>(), what);
  } else if (j.is_array()) {
    for (const auto& v : j) members.push_back(v.get<int>());
  } else {
    throw UsageError(std::string(what) + ": expected an array of integers");
  }
  try {
    return SubsetOfRange::from_members(n - 1, members);
  } catch (const std::exception& e) {
    throw UsageError(std::string(what) + ": " + e.what());
  }
}

json partition_to_json(const Partition& p) { return json(p.parts()); }

json poly_to_json(const IntPolynomial& p) {
  json arr = json::array();
  for (int k = 0; k <= p.degree(); ++k) arr.push_back(p.coeff(k));
  return arr;
}

json subset_to_json(const SubsetOfRange& s) { return json(s.members()); }

void check_n(int n, const CommandLimits& limits) {
  if (n < 1) throw UsageError("n must be positive");
  if (n > limits.max_n) {
    std::ostringstream os;
    os << "n = " << n << " exceeds the configured bound " << limits.max_n
       << " (raise with --max-n or SCHURKIT_MAX_N)";
    throw UsageError(os.str());
  }
}

json cde_verdict_to_json(const CdeVerdict& v) {
  json out;
  out["exists"] = v.exists;
  if (v.exists) out["quotient"] = poly_to_json(v.quotient);
  else out["reason"] = v.reason;
  return out;
}

std::vector<SubsetOfRange> descent_sets_of(const std::vector<Permutation>& perms) {
  std::vector<SubsetOfRange> out;
  out.reserve(perms.size());
  for (const Permutation& pi : perms) out.push_back(des_set(pi));
  return out;
}

}  // namespace

std::string cmd_schur_expand(const std::string& set_spec, int n, const CommandLimits& limits) {
  check_n(n, limits);
  if (n > sn_enumeration_bound()) set_sn_enumeration_bound(n);

  std::string kind = set_spec;
  std::string arg;
  if (auto colon = set_spec.find(':'); colon != std::string::npos) {
    kind = set_spec.substr(0, colon);
    arg = set_spec.substr(colon + 1);
  }

  std::vector<SubsetOfRange> des;
  int degree = n;
  json params = json::object();
  try {
    if (kind == "sn") {
      for_each_permutation(n, [&](const std::vector<int>& w) { des.push_back(des_set(Permutation(w))); });
    } else if (kind == "conj") {
      Partition lambda(parse_int_list(arg, "conj"));
      if (lambda.sum() != n) throw UsageError("conj: the cycle type must be a partition of n");
      params["lambda"] = partition_to_json(lambda);
      des = descent_sets_of(conjugacy_class(lambda));
    } else if (kind == "invk" || kind == "imajk") {
      const long long k = std::stoll(arg);
      params["k"] = k;
      des = descent_sets_of(kind == "invk" ? inv_class(k, n) : imaj_class(k, n));
    } else if (kind == "invdes") {
      const SubsetOfRange j = subset_from_json(json(arg), n, "invdes");
      params["J"] = subset_to_json(j);
      des = descent_sets_of(generalized_inv_des_class(DescentClassSpec::single(n, j)));
    } else if (kind == "uroot") {
      const int d = std::stoi(arg);
      params["d"] = d;
      des = descent_sets_of(roots_of_unity(d, n));
    } else if (kind == "caterpillars") {
      degree = n - 1;
      for (const Caterpillar& c : enumerate_caterpillars(n)) des.push_back(caterpillar_descent(c));
    } else {
      throw UsageError("unknown set spec: " + set_spec);
    }
  } catch (const UsageError&) {
    throw;
  } catch (const std::exception& e) {
    throw UsageError(std::string("set spec '") + set_spec + "': " + e.what());
  }

  const QSymVector q = qsym_of_set(degree, des);
  const bool symmetric = is_symmetric(q);
  const SchurExpandResult e = schur_expand(q);

  json out;
  out["command"] = "schur-expand";
  out["set"] = kind;
  out["params"] = params;
  out["n"] = n;
  out["degree"] = degree;
  out["set_size"] = des.size();
  out["symmetric"] = symmetric;
  out["in_schur_span"] = e.in_span;
  if (e.in_span) {
    json coeffs = json::array();
    for (const auto& [lambda, c] : e.coeffs)
      coeffs.push_back({{"partition", partition_to_json(lambda)}, {"coeff", c}});
    out["coeffs"] = std::move(coeffs);
    out["schur_positive"] = e.schur_positive;
  } else {
    out["coeffs"] = nullptr;
    out["schur_positive"] = false;
  }
  return out.dump(2);
}

std::string cmd_cde_check(const std::string& family, const std::string& params_json,
                          const CommandLimits& limits) {
  json params;
  try {
    params = params_json.empty() ? json::object() : json::parse(params_json);
  } catch (const std::exception& e) {
    throw UsageError(std::string("params: ") + e.what());
  }
  auto need_int = [&](const char* key) -> long long {
    if (!params.contains(key) || !params[key].is_number_integer())
      throw UsageError(std::string("family '") + family + "' needs integer parameter '" + key + "'");
    return params[key].get<long long>();
  };

  json out;
  out["command"] = "cde-check";
  out["family"] = family;

  try {
    if (family == "invk" || family == "imajk") {
      const long long k = need_int("k");
      const int n = static_cast<int>(need_int("n"));
      check_n(n, limits);
      if (k < 0 || k >= n)
        throw UsageError("the fixed-inversions criterion is proved only for 0 <= k < n");
      out["n"] = n;
      out["params"] = {{"k", k}};
      const IntPolynomial h = pd_poly(k);
      out["hook_poly"] = poly_to_json(h);
      json cde = cde_verdict_to_json(cde_exists(h));
      cde["pentagonal"] = is_generalized_pentagonal(k).pentagonal;
      out["cde"] = std::move(cde);
      if (cde_for_inv_k(k, n) != out["cde"]["exists"].get<bool>())
        throw std::logic_error("cde-check: criterion mismatch");
    } else if (family == "invdes" || family == "powerset" || family == "interval" ||
               family == "chain") {
      const int n = static_cast<int>(need_int("n"));
      check_n(n, limits);
      const SubsetOfRange j = subset_from_json(params.contains("J") ? params["J"] : json::array(),
                                               n, "J");
      DescentClassSpec spec = DescentClassSpec::single(n, j);
      json p;
      p["J"] = subset_to_json(j);
      if (family == "powerset") {
        spec = DescentClassSpec::power_set(n, j);
      } else if (family == "interval" || family == "chain") {
        const SubsetOfRange i =
            subset_from_json(params.contains("I") ? params["I"] : json::array(), n, "I");
        if (!i.subset_of(j)) throw UsageError("interval/chain: I must be contained in J");
        p["I"] = subset_to_json(i);
        spec = family == "interval" ? DescentClassSpec::interval(n, i, j)
                                    : DescentClassSpec::chain(n, i, j);
      }
      out["n"] = n;
      out["params"] = std::move(p);
      const IntPolynomial h = hook_poly(spec);
      out["hook_poly"] = poly_to_json(h);
      out["cde"] = cde_verdict_to_json(cde_exists(h));
      out["class_size"] = n <= 8 ? json(generalized_inv_des_class(spec).size()) : json(nullptr);
    } else if (family == "conj") {
      if (!params.contains("lambda")) throw UsageError("family 'conj' needs parameter 'lambda'");
      std::vector<int> parts;
      for (const auto& v : params["lambda"]) parts.push_back(v.get<int>());
      Partition lambda;
      try {
        lambda = Partition(parts);
      } catch (const std::exception& e) {
        throw UsageError(std::string("lambda: ") + e.what());
      }
      const int n = lambda.sum();
      check_n(n, limits);
      out["n"] = n;
      out["params"] = {{"lambda", partition_to_json(lambda)}};
      const bool exists = cde_for_conjugacy_class(lambda);
      json cde;
      cde["exists"] = exists;
      if (!exists) cde["reason"] = "cycle type is a square-free rectangle";
      if (n <= 8) {
        const IntPolynomial h = hook_poly_of_set(n, descent_sets_of(conjugacy_class(lambda)));
        out["hook_poly"] = poly_to_json(h);
        const CdeVerdict v = cde_exists(h);
        if (v.exists != exists) throw std::logic_error("cde-check: conjugacy class mismatch");
        if (v.exists) cde["quotient"] = poly_to_json(v.quotient);
      } else {
        out["hook_poly"] = nullptr;
      }
      out["cde"] = std::move(cde);
    } else if (family == "uroot") {
      const int d = static_cast<int>(need_int("d"));
      const int n = static_cast<int>(need_int("n"));
      check_n(n, limits);
      out["n"] = n;
      out["params"] = {{"d", d}};
      const UrootCdeResult r = cde_for_roots_of_unity(d, n);
      json cde;
      cde["status"] = r.status == UrootCdeStatus::Yes
                          ? "yes"
                          : (r.status == UrootCdeStatus::No ? "no" : "conjectural");
      cde["basis"] = r.basis;
      if (r.has_brute) {
        cde["exists"] = r.brute.exists;
        if (r.brute.exists) cde["quotient"] = poly_to_json(r.brute.quotient);
        else cde["reason"] = r.brute.reason;
        out["hook_poly"] =
            poly_to_json(hook_poly_of_set(n, descent_sets_of(roots_of_unity(d, n))));
      } else {
        if (r.status != UrootCdeStatus::Conjectural)
          cde["exists"] = r.status == UrootCdeStatus::Yes;
        out["hook_poly"] = nullptr;
      }
      out["cde"] = std::move(cde);
    } else {
      throw UsageError("unknown cde-check family: " + family);
    }
  } catch (const UsageError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  return out.dump(2);
}

std::string cmd_verify(const std::string& suite, const CommandLimits& limits, int* failures) {
  if (!is_verify_suite(suite)) throw UsageError("unknown verify suite: " + suite);
  VerifyOptions opts;
  opts.max_n = limits.max_n;
  opts.max_k = limits.max_k;
  const std::vector<CheckResult> results = run_verify_suite(suite, opts);
  int failed = 0;
  json checks = json::array();
  for (const CheckResult& r : results) {
    if (!r.pass) ++failed;
    checks.push_back({{"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
  }
  if (failures) *failures = failed;
  json out;
  out["command"] = "verify";
  out["suite"] = suite;
  out["max_n"] = limits.max_n;
  out["max_k"] = limits.max_k;
  out["checks"] = std::move(checks);
  out["pass"] = failed == 0;
  return out.dump(2);
}

std::string cmd_tree_dot(const std::string& tree_json) {
  try {
    auto [n, edges] = edges_from_json(tree_json);
    if (n < 1) throw UsageError("tree: n must be positive");
    for (const Edge& e : edges)
      if (e.b > n) throw UsageError("tree: edge endpoint outside [n]");
    return edges_to_dot(n, edges);
  } catch (const UsageError&) {
    throw;
  } catch (const std::exception& e) {
    throw UsageError(std::string("tree: ") + e.what());
  }
}

}  // namespace schurkit
