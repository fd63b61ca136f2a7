#include <filesystem>
#include <iostream>

#include "pi1lat/catalog.hpp"
#include "pi1lat/io.hpp"

// Writes every worked example as a CLI-readable JSON file.

int main(int argc, char** argv) {
  const std::string dir = argc > 1 ? argv[1] : "data/examples";
  std::filesystem::create_directories(dir);
  int count = 0;
  for (const pi1lat::NamedExample& ex : pi1lat::worked_examples()) {
    pi1lat::io::write_input_file(ex.input, dir + "/" + ex.name + ".json");
    ++count;
  }
  std::cout << "wrote " << count << " example files to " << dir << "\n";
  return 0;
}
