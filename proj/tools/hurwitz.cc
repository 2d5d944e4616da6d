#include <iostream>
#include <string>
#include <vector>

#include "hurwitz/cli.hh"

int main(int argc, char** argv)
{
  std::vector<std::string> args(argv, argv + argc);
  return hurwitz::cli::run(args, std::cout, std::cerr);
}
