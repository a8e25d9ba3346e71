// Checks the figure transcriptions against their captions and freezes them.
//   calibrate_figures <drafts dir> <fixtures dir> [--dry-run]
#include <iostream>
#include <string>
#include <vector>

#include "outerstring/figures.hpp"
#include "outerstring/io.hpp"

using namespace outerstring;

int main(int argc, char** argv) {
  if (argc < 3) {
    std::cerr << "usage: calibrate_figures <drafts dir> <fixtures dir> [--dry-run]\n";
    return 2;
  }
  const std::string drafts = argv[1], out = argv[2];
  const bool dry = argc > 3 && std::string(argv[3]) == "--dry-run";
  std::vector<CurveFamily> families;
  bool ok = true;
  for (int which = 1; which <= 4; ++which) {
    const std::string path = drafts + "/figure" + std::to_string(which) + ".json";
    std::cerr << "figure " << which << " (" << path << ")\n";
    try {
      auto f = load_family(path);
      for (const auto& r : figure_relations(which, f)) {
        std::cerr << "  " << (r.holds ? "ok   " : "FAIL ") << r.name << ": expected " << r.expected << ", measured "
                  << r.measured << "\n";
        ok = ok && r.holds;
      }
      families.push_back(std::move(f));
    } catch (const ValidationError& e) {
      ok = false;
      for (const auto& v : e.violations()) std::cerr << "  FAIL " << describe(v) << "\n";
    } catch (const Error& e) {
      ok = false;
      std::cerr << "  FAIL " << e.what() << "\n";
    }
  }
  if (!ok) {
    std::cerr << "not frozen: some captioned relation does not hold\n";
    return 1;
  }
  if (dry) return 0;
  for (int which = 1; which <= 4; ++which) {
    const std::string path = out + "/figure" + std::to_string(which) + ".json";
    write_text(path, dump(family_json(families[static_cast<std::size_t>(which - 1)])));
    std::cerr << "froze " << path << "\n";
  }
  std::cerr << "re-run cmake to compile the frozen fixtures in\n";
  return 0;
}
