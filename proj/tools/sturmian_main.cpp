#include <iostream>
#include <string>
#include <vector>

#include "sturmian/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return sturmian::cli::run(std::move(args), std::cout, std::cerr);
}
