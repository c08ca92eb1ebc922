// End-to-end checks of the lapsep CLI: exit codes, JSON output, file formats.
// Usage: cli_tests PATH_TO_LAPSEP

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>
#include <string>

namespace fs = std::filesystem;

namespace {

int g_failures = 0;

void check(bool ok, const std::string& what) {
  if (ok) {
    std::cout << "ok: " << what << '\n';
  } else {
    ++g_failures;
    std::cout << "FAILED: " << what << '\n';
  }
}

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run(const std::string& command) {
  RunResult result;
  FILE* pipe = popen((command + " 2>/dev/null").c_str(), "r");
  if (!pipe) return result;
  std::array<char, 4096> buffer;
  std::size_t got;
  while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
    result.out.append(buffer.data(), got);
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream out(path);
  out << content;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: cli_tests PATH_TO_LAPSEP\n";
    return 2;
  }
  const std::string cli = argv[1];
  const fs::path dir = fs::temp_directory_path() / "lapsep_cli_tests";
  fs::create_directories(dir);

  const fs::path k4 = dir / "k4.txt";
  write_file(k4, "0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n");
  const fs::path star = dir / "star.txt";
  write_file(star, "# star K_{1,3}\n0 1\n0 2\n0 3\n");
  const fs::path k2 = dir / "k2.txt";
  write_file(k2, "0 1\n");
  const fs::path k3 = dir / "k3.txt";
  write_file(k3, "0 1\n0 2\n1 2\n");
  const fs::path c6 = dir / "c6.txt";
  write_file(c6, "0 1\n1 2\n2 3\n3 4\n4 5\n5 0\n");
  const fs::path garbage = dir / "garbage.g6";
  write_file(garbage, "\x01\x02 nonsense\n");

  {
    const RunResult r = run(cli + " analyze --in " + k4.string() + " --dims 2,2");
    check(r.exit_code == 0, "analyze K_4 exits 0 (Separable)");
    const auto j = nlohmann::json::parse(r.out, nullptr, false);
    check(!j.is_discarded() && j.at("status") == "Separable", "analyze K_4 JSON status");
  }
  {
    const RunResult r = run(cli + " analyze --in " + star.string() + " --dims 2,2");
    check(r.exit_code == 1, "analyze K_{1,3} exits 1 (Entangled)");
    const auto j = nlohmann::json::parse(r.out, nullptr, false);
    check(!j.is_discarded() && j.at("status") == "Entangled" && j.contains("witness"),
          "analyze K_{1,3} has a degree witness");
  }
  {
    const RunResult r = run(cli + " analyze --in " + star.string() + " --dims 2,3");
    check(r.exit_code == 4, "dims product mismatch exits 4");
  }
  {
    const RunResult r = run(cli + " analyze --in " + garbage.string() + " --dims 2,2");
    check(r.exit_code == 3, "graph6 garbage exits 3");
  }
  {
    const RunResult r = run(cli + " analyze --in " + k4.string());
    check(r.exit_code == 3, "missing --dims is a parse error (exit 3)");
  }
  {
    // Labeling file round trip through analyze.
    const fs::path lab = dir / "labeling.json";
    write_file(lab,
               R"({"dims":[2,2],"labeling":[[1,1],[1,2],[2,1],[2,2]]})");
    const RunResult r = run(cli + " analyze --in " + k4.string() + " --dims 2,2" +
                            " --labeling " + lab.string());
    check(r.exit_code == 0, "analyze with explicit labeling");
  }
  {
    const RunResult r =
        run(cli + " search --in " + c6.string() + " --dims 2,3 --mode any");
    check(r.exit_code == 0, "search C_6 exits 0");
    const auto j = nlohmann::json::parse(r.out, nullptr, false);
    check(!j.is_discarded() && j.at("classification") == "entangling_found" &&
              j.contains("entangling_labeling"),
          "search C_6 finds a labeling via a construction");
  }
  {
    const RunResult r =
        run(cli + " search --in " + k4.string() + " --dims 2,2 --mode all");
    const auto j = nlohmann::json::parse(r.out, nullptr, false);
    check(r.exit_code == 0 && !j.is_discarded() &&
              j.at("classification") == "all_separable",
          "search K_4 --mode all reports all_separable");
  }
  {
    const RunResult r = run(cli + " product --mask strong " + k2.string() + " " +
                            k3.string());
    check(r.exit_code == 0, "product emits an edge list");
    int edges = 0;
    std::istringstream lines(r.out);
    std::string line;
    while (std::getline(lines, line))
      if (!line.empty()) ++edges;
    check(edges == 15, "strong(K_2,K_3) is K_6");
  }
  {
    const RunResult r = run(cli + " product --mask strong --certify " + k2.string() +
                            " " + k3.string());
    const auto j = nlohmann::json::parse(r.out, nullptr, false);
    check(r.exit_code == 0 && !j.is_discarded() &&
              j.at("certificate").at("residual").get<double>() < 1e-10,
          "product --certify validates");
  }
  {
    const RunResult r = run(cli + " product --mask 255 " + k2.string() + " " +
                            k2.string());
    int edges = 0;
    std::istringstream lines(r.out);
    std::string line;
    while (std::getline(lines, line))
      if (!line.empty()) ++edges;
    check(r.exit_code == 0 && edges == 6, "full mask product of K_2,K_2 is K_4");
  }
  {
    const RunResult r = run(cli + " census --experiment n4");
    check(r.exit_code == 0, "census n4 runs");
    int lines_count = 0, all_sep = 0;
    std::istringstream lines(r.out);
    std::string line;
    while (std::getline(lines, line)) {
      if (line.empty()) continue;
      ++lines_count;
      const auto j = nlohmann::json::parse(line, nullptr, false);
      check(!j.is_discarded() && j.contains("graph6"), "census line is JSON");
      if (!j.is_discarded() && j.value("classification", "") == "all_separable")
        ++all_sep;
    }
    check(lines_count == 11, "census n4 emits 11 classes");
    check(all_sep == 3, "census n4 finds 3 all-separable classes");
  }
  {
    const RunResult r = run(cli + " census --experiment bipartite --n 6 --dims 2,3");
    check(r.exit_code == 0, "census bipartite runs");
    std::istringstream lines(r.out);
    std::string line;
    int rows = 0;
    std::string first_class;
    while (std::getline(lines, line)) {
      if (line.empty()) continue;
      const auto j = nlohmann::json::parse(line, nullptr, false);
      if (j.is_discarded()) continue;
      ++rows;
      if (j.value("r", 0) == 1) first_class = j.value("classification", "");
    }
    check(rows == 3, "census bipartite emits r = 1..3");
    check(first_class == "all_entangled", "K_{1,5} is all-entangled");
  }
  {
    // regular9 on a small generated file: K_4 alone is skipped as complete.
    const fs::path g6 = dir / "one.g6";
    write_file(g6, "C~\n");
    const RunResult r = run(cli + " census --experiment regular9 --in " + g6.string() +
                            " --dims 2,2");
    const auto j = nlohmann::json::parse(r.out, nullptr, false);
    check(r.exit_code == 0 && !j.is_discarded() &&
              j.at("classification") == "skipped_complete",
          "census regular9 skips complete graphs");
  }

  std::cout << (g_failures == 0 ? "cli: all checks passed" : "cli: FAILURES") << '\n';
  return g_failures == 0 ? 0 : 1;
}
