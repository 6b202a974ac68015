#include <iostream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "claims_manifest.hpp"

int main(int argc, char** argv)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    return semdef::cli::run_command(args, std::cout, std::cerr,
                                    semdef::io::json::parse(semdef::cli::builtin_manifest));
}
