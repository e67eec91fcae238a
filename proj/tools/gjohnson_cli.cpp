#include <iostream>

#include "gjohnson/commands.hpp"

int main(int argc, char** argv) {
  return gjohnson::run_cli(argc, argv, std::cout, std::cerr);
}
