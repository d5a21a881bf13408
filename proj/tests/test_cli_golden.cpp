// Golden-file tests freezing the CLI output schemas.
// Usage: test_cli_golden <cli-path> <golden-dir>   (REGEN_GOLDEN=1 rewrites)

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

struct Case {
  std::string name;
  std::string args;
  int expected_exit;
};

std::string run_command(const std::string& command, int* exit_code) {
  std::string output;
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) {
    *exit_code = -1;
    return output;
  }
  std::array<char, 4096> buf;
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) output.append(buf.data(), got);
  const int status = pclose(pipe);
  *exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return output;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 3) {
    std::cerr << "usage: test_cli_golden <cli-path> <golden-dir>\n";
    return 2;
  }
  const std::string cli = argv[1];
  const std::string dir = argv[2];
  const bool regen = std::getenv("REGEN_GOLDEN") != nullptr;

  const std::vector<Case> cases = {
      {"schur_expand_sn3", "schur-expand --set sn --n 3", 0},
      {"schur_expand_caterpillars5", "schur-expand --set caterpillars --n 5", 0},
      {"schur_expand_invdes1_3", "schur-expand --set invdes:{1} --n 3", 0},
      {"schur_expand_uroot2_4", "schur-expand --set uroot:2 --n 4", 0},
      {"cde_check_invk5_7", "cde-check --family invk --k 5 --n 7", 0},
      {"cde_check_chain", "cde-check --family chain --I {} --J {1,2,3} --n 4", 0},
      {"cde_check_uroot6_4", "cde-check --family uroot --d 6 --n 4", 0},
      {"cde_check_conj22", "cde-check --family conj --lambda 2,2", 0},
      {"verify_caterpillar_n5", "verify --suite caterpillar --max-n 5 2>/dev/null", 0},
      {"dot_tree", "dot --tree {\\\"edges\\\":[[1,4],[1,3],[1,2]],\\\"n\\\":4}", 0},
      {"usage_bad_set", "schur-expand --set bogus --n 3 2>&1", 2},
      {"usage_bound", "schur-expand --set sn --n 10 2>&1", 2},
  };

  int failures = 0;
  for (const Case& c : cases) {
    int exit_code = 0;
    const std::string got = run_command(cli + " " + c.args, &exit_code);
    const std::string path = dir + "/" + c.name + ".txt";
    if (regen) {
      std::ofstream out(path, std::ios::binary);
      out << got;
    }
    const std::string want = read_file(path);
    bool ok = exit_code == c.expected_exit;
    if (ok && got != want) ok = false;
    if (!ok) {
      ++failures;
      std::cout << "[FAIL] " << c.name << " (exit " << exit_code << ", expected "
                << c.expected_exit << ")\n";
      if (got != want) {
        std::cout << "---- got ----\n" << got << "---- want ----\n" << want << "----\n";
      }
    } else {
      std::cout << "[PASS] " << c.name << "\n";
    }
  }
  if (regen) std::cout << "(golden files regenerated)\n";
  return failures == 0 ? 0 : 1;
}
