#include "testutil.hpp"
int main() { return testutil::finish("test_mme_b"); }
