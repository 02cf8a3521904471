#include <iostream>
#include <string>
#include <vector>

#include "app.hpp"

int main(int argc, char** argv) {
    return mollow::cli::run(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
