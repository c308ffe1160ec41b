#include "app.hpp"

int main(int argc, char** argv) { return qkg::cli::run(argc, argv); }
