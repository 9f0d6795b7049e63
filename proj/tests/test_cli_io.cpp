#include "testutil.hpp"
int main() { return testutil::finish("test_cli_io"); }
