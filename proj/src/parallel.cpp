// SPDX-License-Identifier: Apache-2.0
#include "neumat/parallel.hpp"

#include <cstdlib>

namespace neumat {

int max_threads() {
    if (const char* env = std::getenv("NEUMAT_THREADS")) {
        int v = std::atoi(env);
        if (v >= 1) return v;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

}  // namespace neumat
