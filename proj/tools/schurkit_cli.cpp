// Command line front end; talks to the engine through the C API only.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "schurkit/schurkit.h"

namespace {

using json = nlohmann::json;

struct EngineGuard {
  sk_engine *eng = sk_engine_new();
  ~EngineGuard() { sk_engine_free(eng); }
};

struct StringGuard {
  char *s = nullptr;
  ~StringGuard() { sk_string_free(s); }
};

int report_error(const sk_engine *eng, sk_status status) {
  std::cerr << "error (" << sk_status_name(status) << "): " << sk_last_error(eng) << "\n";
  return status == SK_ERROR_USAGE ? 2 : 1;
}

std::string json_set_from_flag(const std::string &flag) {
  // Accepts "{1,2,3}", "1,2,3" or "{}".
  json arr = json::array();
  std::string cleaned;
  for (char ch : flag)
    if (ch != '{' && ch != '}' && ch != ' ') cleaned.push_back(ch);
  std::stringstream ss(cleaned);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    arr.push_back(std::stoll(item));
  }
  return arr.dump();
}

void print_poly_row(std::ostream &os, const json &poly) {
  if (poly.is_null()) {
    os << "(not computed)";
    return;
  }
  bool first = true;
  for (std::size_t k = 0; k < poly.size(); ++k) {
    const long long c = poly[k].get<long long>();
    if (c == 0) continue;
    if (!first) os << " + ";
    os << c;
    if (k >= 1) os << "*x^" << k;
    first = false;
  }
  if (first) os << "0";
}

void render_table(const json &doc) {
  const std::string command = doc.value("command", "");
  if (command == "schur-expand") {
    std::cout << "set        : " << doc["set"].get<std::string>() << "\n";
    std::cout << "n          : " << doc["n"] << "\n";
    std::cout << "degree     : " << doc["degree"] << "\n";
    std::cout << "set size   : " << doc["set_size"] << "\n";
    std::cout << "symmetric  : " << (doc["symmetric"].get<bool>() ? "yes" : "no") << "\n";
    if (!doc["in_schur_span"].get<bool>()) {
      std::cout << "expansion  : not in the integer Schur span\n";
      return;
    }
    std::cout << "positive   : " << (doc["schur_positive"].get<bool>() ? "yes" : "no") << "\n";
    std::cout << "expansion  :\n";
    for (const auto &item : doc["coeffs"]) {
      std::cout << "  " << item["coeff"] << " * s[";
      const auto &parts = item["partition"];
      for (std::size_t i = 0; i < parts.size(); ++i)
        std::cout << (i ? "," : "") << parts[i].get<int>();
      std::cout << "]\n";
    }
  } else if (command == "cde-check") {
    std::cout << "family     : " << doc["family"].get<std::string>() << "\n";
    std::cout << "n          : " << doc["n"] << "\n";
    std::cout << "params     : " << doc["params"].dump() << "\n";
    std::cout << "hook poly  : ";
    print_poly_row(std::cout, doc["hook_poly"]);
    std::cout << "\n";
    const auto &cde = doc["cde"];
    if (cde.contains("status")) std::cout << "status     : " << cde["status"].get<std::string>() << "\n";
    if (cde.contains("exists"))
      std::cout << "cde exists : " << (cde["exists"].get<bool>() ? "yes" : "no") << "\n";
    if (cde.contains("quotient")) {
      std::cout << "quotient   : ";
      print_poly_row(std::cout, cde["quotient"]);
      std::cout << "\n";
    }
    if (cde.contains("reason")) std::cout << "reason     : " << cde["reason"].get<std::string>() << "\n";
    if (cde.contains("basis")) std::cout << "basis      : " << cde["basis"].get<std::string>() << "\n";
  } else if (command == "verify") {
    for (const auto &check : doc["checks"]) {
      std::cout << (check["pass"].get<bool>() ? "PASS" : "FAIL") << "  "
                << check["name"].get<std::string>() << "  (" << check["detail"].get<std::string>()
                << ")\n";
    }
    std::cout << (doc["pass"].get<bool>() ? "PASS" : "FAIL") << "  suite "
              << doc["suite"].get<std::string>() << "\n";
  } else {
    std::cout << doc.dump(2) << "\n";
  }
}

int emit(const std::string &payload, bool table) {
  if (!table) {
    std::cout << payload << "\n";
    return 0;
  }
  render_table(json::parse(payload));
  return 0;
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"schurkit: exact verification toolkit for Schur-positive sets"};
  app.require_subcommand(1);

  int default_max_n = 7;
  if (const char *env = std::getenv("SCHURKIT_MAX_N")) {
    try {
      default_max_n = std::stoi(env);
    } catch (const std::exception &) {
      std::cerr << "error (usage error): SCHURKIT_MAX_N must be an integer\n";
      return 2;
    }
  }

  // schur-expand
  auto *se = app.add_subcommand("schur-expand", "Expand Q(A) in the Schur basis");
  std::string se_set;
  int se_n = 0;
  int se_max_n = default_max_n;
  bool se_table = false;
  se->add_option("--set", se_set, "Set spec: sn | conj:<parts> | invk:<k> | imajk:<k> | invdes:<set> | uroot:<d> | caterpillars")->required();
  se->add_option("--n", se_n, "Size of the ambient symmetric group")->required();
  se->add_option("--max-n", se_max_n, "Bound on n (default 7, or SCHURKIT_MAX_N)");
  se->add_flag("--table", se_table, "Human-readable output");

  // cde-check
  auto *cc = app.add_subcommand("cde-check", "Cyclic descent extension verdict for a family");
  std::string cc_family, cc_i, cc_j, cc_lambda;
  int cc_n = 0, cc_d = 0, cc_max_n = default_max_n;
  long long cc_k = -1;
  bool cc_table = false;
  cc->add_option("--family", cc_family, "invk | invdes | powerset | interval | chain | conj | uroot")->required();
  cc->add_option("--n", cc_n, "Size of the symmetric group");
  cc->add_option("--k", cc_k, "Inversion number (family invk)");
  cc->add_option("--d", cc_d, "Root order (family uroot)");
  cc->add_option("--I", cc_i, "Lower set, e.g. {} or {1,2}");
  cc->add_option("--J", cc_j, "Upper set, e.g. {1,2,3}");
  cc->add_option("--lambda", cc_lambda, "Cycle type, e.g. 2,2 (family conj)");
  cc->add_option("--max-n", cc_max_n, "Bound on n (default 7, or SCHURKIT_MAX_N)");
  cc->add_flag("--table", cc_table, "Human-readable output");

  // verify
  auto *ve = app.add_subcommand("verify", "Run a verification suite");
  std::string ve_suite = "all";
  int ve_max_n = default_max_n;
  int ve_max_k = 40;
  bool ve_table = false;
  ve->add_option("--suite", ve_suite, "caterpillar | qsym | cde | pentagonal | unimodal | all");
  ve->add_option("--max-n", ve_max_n, "Cap on n for every check (default 7, or SCHURKIT_MAX_N)");
  ve->add_option("--max-k", ve_max_k, "Depth of the pentagonal checks (default 40)");
  ve->add_flag("--table", ve_table, "Human-readable output");

  // dot
  auto *dt = app.add_subcommand("dot", "Render a tree JSON object as Graphviz");
  std::string dt_tree, dt_file;
  dt->add_option("--tree", dt_tree, "Tree JSON, e.g. {\"edges\":[[1,2]],\"n\":2}");
  dt->add_option("--file", dt_file, "Read the tree JSON from a file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  EngineGuard engine;
  if (!engine.eng) {
    std::cerr << "error: engine allocation failed\n";
    return 1;
  }

  if (se->parsed()) {
    if (sk_set_max_n(engine.eng, se_max_n) != SK_OK)
      return report_error(engine.eng, SK_ERROR_USAGE);
    StringGuard out;
    const sk_status st = sk_schur_expand(engine.eng, se_set.c_str(), se_n, &out.s);
    if (st != SK_OK) return report_error(engine.eng, st);
    return emit(out.s, se_table);
  }

  if (cc->parsed()) {
    if (sk_set_max_n(engine.eng, cc_max_n) != SK_OK)
      return report_error(engine.eng, SK_ERROR_USAGE);
    json params = json::object();
    if (cc->count("--n")) params["n"] = cc_n;
    if (cc->count("--k")) params["k"] = cc_k;
    if (cc->count("--d")) params["d"] = cc_d;
    try {
      if (cc->count("--I")) params["I"] = json::parse(json_set_from_flag(cc_i));
      if (cc->count("--J")) params["J"] = json::parse(json_set_from_flag(cc_j));
      if (cc->count("--lambda")) {
        json arr = json::array();
        std::stringstream ss(cc_lambda);
        std::string item;
        while (std::getline(ss, item, ','))
          if (!item.empty()) arr.push_back(std::stoll(item));
        params["lambda"] = std::move(arr);
      }
    } catch (const std::exception &e) {
      std::cerr << "error (usage error): " << e.what() << "\n";
      return 2;
    }
    StringGuard out;
    const sk_status st =
        sk_cde_check(engine.eng, cc_family.c_str(), params.dump().c_str(), &out.s);
    if (st != SK_OK) return report_error(engine.eng, st);
    return emit(out.s, cc_table);
  }

  if (ve->parsed()) {
    if (sk_set_max_n(engine.eng, ve_max_n) != SK_OK)
      return report_error(engine.eng, SK_ERROR_USAGE);
    if (sk_set_max_k(engine.eng, ve_max_k) != SK_OK)
      return report_error(engine.eng, SK_ERROR_USAGE);
    StringGuard out;
    int failures = 0;
    const auto start = std::chrono::steady_clock::now();
    const sk_status st = sk_verify(engine.eng, ve_suite.c_str(), &failures, &out.s);
    const auto wall =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
    if (st != SK_OK) return report_error(engine.eng, st);
    emit(out.s, ve_table);
    std::cerr << "verify suite '" << ve_suite << "': " << (failures == 0 ? "pass" : "FAIL")
              << ", wall time " << wall.count() << " ms\n";
    return failures == 0 ? 0 : 1;
  }

  if (dt->parsed()) {
    std::string text = dt_tree;
    if (!dt_file.empty()) {
      std::ifstream in(dt_file);
      if (!in) {
        std::cerr << "error (usage error): cannot read " << dt_file << "\n";
        return 2;
      }
      std::ostringstream buf;
      buf << in.rdbuf();
      text = buf.str();
    }
    if (text.empty()) {
      std::cerr << "error (usage error): dot needs --tree or --file\n";
      return 2;
    }
    StringGuard out;
    const sk_status st = sk_tree_dot(engine.eng, text.c_str(), &out.s);
    if (st != SK_OK) return report_error(engine.eng, st);
    std::cout << out.s;
    return 0;
  }

  return 2;
}
