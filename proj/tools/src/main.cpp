#include <iostream>

#include "weilkit/cli.hpp"

int main(int argc, char** argv) {
  return weilkit::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cin);
}
