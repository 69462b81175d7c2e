#include <string>
#include <vector>

#include "tightframe/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return tightframe::cli::run(args);
}
