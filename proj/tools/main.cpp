#include <vector>

#include "vrda/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return vrda::cli::run(args);
}
