// Rebuilds data/witnesses/*.json from the group files in data/groups.
//
//   isg_derive GROUPS_DIR OUT_DIR

#include <fstream>
#include <iostream>

#include "isg/error.hpp"
#include "isg/shipped.hpp"

int main(int argc, char** argv) {
  if (argc != 3) {
    std::cerr << "usage: isg_derive GROUPS_DIR OUT_DIR\n";
    return 2;
  }
  try {
    std::filesystem::path out_dir = argv[2];
    std::filesystem::create_directories(out_dir);
    for (const auto& w : isg::derive_shipped_witnesses(argv[1])) {
      auto path = out_dir / (w.name + ".json");
      std::ofstream out(path);
      out << isg::witness_to_json(w).dump(2) << '\n';
      if (!out) throw isg::Error("cannot write " + path.string());
      std::cout << path.string() << '\n';
    }
  } catch (const std::exception& e) {
    std::cerr << "isg_derive: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
