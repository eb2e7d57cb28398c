#include "cli.hpp"

int main(int argc, char** argv)
{
    return bottle::cli::run_cli(argc, argv);
}
