// Regenerates data/triangulations_n4_7.pc: every plane triangulation on
// 4..7 vertices, one canonical embedding each, planar_code format.
#include <fstream>
#include <iostream>

#include "dichroma/io.hpp"
#include "dichroma/oracle.hpp"

int main(int argc, char** argv) {
    std::string out = argc > 1 ? argv[1] : "data/triangulations_n4_7.pc";
    std::vector<dichroma::PlaneEmbedding> all;
    for (int n = 4; n <= 7; ++n) {
        auto ts = dichroma::oracle::enumerate_triangulations(n);
        std::cout << "n=" << n << ": " << ts.size() << " triangulations\n";
        for (auto& t : ts) all.push_back(std::move(t));
    }
    std::ofstream f(out, std::ios::binary);
    if (!f) {
        std::cerr << "cannot write " << out << "\n";
        return 1;
    }
    dichroma::io::write_planar_code(f, all);
    std::cout << "wrote " << all.size() << " graphs to " << out << "\n";
    return 0;
}
