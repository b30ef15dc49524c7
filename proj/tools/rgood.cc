#include <rgood/cli.hh>

#include <iostream>

auto main(int argc, char * argv[]) -> int
{
    return rgood::cli::run(argc, argv, std::cout, std::cerr);
}
