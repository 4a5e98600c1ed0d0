// Copyright 2026 The spacking Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Times the serial enumeration scan against the OpenMP one and checks that
// both emit the same critical set.
//
//   bench_enumerate [sequence] [k] [n_max] [jobs]

#include <chrono>
#include <iostream>
#include <string>

#include "spack/critical.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

template <typename Fn>
double time_ms(Fn&& fn) {
    auto start = std::chrono::steady_clock::now();
    fn();
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
        .count();
}

}  // namespace

int main(int argc, char** argv) {
    std::string sequence = argc > 1 ? argv[1] : "2^inf";
    int k = argc > 2 ? std::stoi(argv[2]) : 3;
    int n_max = argc > 3 ? std::stoi(argv[3]) : 7;
#ifdef _OPENMP
    int jobs = argc > 4 ? std::stoi(argv[4]) : omp_get_max_threads();
#else
    int jobs = argc > 4 ? std::stoi(argv[4]) : 1;
#endif

    auto s = spack::PackingSequence::parse(sequence);
    std::vector<std::string> serial, parallel;
    double t_serial = time_ms([&] { serial = spack::enumerate_critical_serial(n_max, s, k); });
    double t_parallel =
        time_ms([&] { parallel = spack::enumerate_critical(n_max, s, k, jobs); });

    std::cout << "sequence=" << s.format() << " k=" << k << " n_max=" << n_max << "\n"
              << "serial:   " << t_serial << " ms, " << serial.size() << " graph(s)\n"
              << "parallel: " << t_parallel << " ms (" << jobs << " jobs), "
              << parallel.size() << " graph(s)\n"
              << "speedup:  " << (t_parallel > 0 ? t_serial / t_parallel : 0.0) << "x\n";
    if (serial != parallel) {
        std::cerr << "MISMATCH between serial and parallel results\n";
        return 1;
    }
    return 0;
}
