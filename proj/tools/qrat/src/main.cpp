#include "commands.hpp"

int main(int argc, char** argv)
{
    return qrat::cli::run(argc, argv);
}
