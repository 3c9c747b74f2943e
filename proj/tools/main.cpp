// SPDX-License-Identifier: Apache-2.0
#include <iostream>

#include "adiclp/cli.hpp"

int main(int argc, char** argv) { return adiclp::run_cli(argc, argv, std::cout, std::cerr); }
