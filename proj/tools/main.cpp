#include <cstdio>

#include "cubiclass/orders.hpp"

int main(int argc, char** argv)
{
    (void)argc;
    (void)argv;
    std::printf("cubiclass (placeholder CLI)\n");
    return 0;
}
