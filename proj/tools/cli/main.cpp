#include <cstdlib>
#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) {
  std::optional<std::string> format;
  if (const char* env = std::getenv("RUNPOLY_FORMAT"); env && *env) format = env;
  const auto result = runpoly::cli::run({argv + 1, argv + argc}, format);
  std::cout << result.out;
  std::cerr << result.err;
  return result.exit_code;
}
