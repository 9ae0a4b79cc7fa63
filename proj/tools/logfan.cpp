#include <iostream>

#include "logfan/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return logfan::execute(args, std::cout, std::cerr);
}
