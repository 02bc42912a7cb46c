// Standalone runner for the structural property suites.
#include <iostream>

#include "CLI11.hpp"
#include "itline/families.hpp"
#include "properties.hpp"

int main(int argc, char** argv) {
  CLI::App app{"structural property suites"};
  int max_vertices = 6;
  app.add_option("--max-vertices", max_vertices, "corpus order limit (<= 7)")->check(CLI::Range(1, 7));
  CLI11_PARSE(app, argc, argv);

  auto corpus = itline::enumerate_connected_graphs(max_vertices);
  namespace fam = itline::families;
  corpus.push_back({"fig1", fam::fig1()});
  corpus.push_back({"fig2-k2", fam::fig2(2)});
  corpus.push_back({"fig4a", fam::fig4a()});
  corpus.push_back({"petersen", fam::petersen()});

  bool all_ok = true;
  for (const auto& r : props::run_all(corpus)) {
    std::cout << (r.ok() ? "PASS " : "FAIL ") << r.name << " (" << r.checked << " checks)\n";
    for (const auto& f : r.failures) std::cout << "  " << f << "\n";
    all_ok = all_ok && r.ok();
  }
  return all_ok ? 0 : 1;
}
