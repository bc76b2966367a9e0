// Compares the parallel and serial linking-matrix search on corpus links.

#include <chrono>
#include <cstdlib>
#include <iostream>

#include "qa/corpus.hpp"

using namespace qa;

namespace {

double seconds(std::chrono::steady_clock::time_point a,
               std::chrono::steady_clock::time_point b) {
    return std::chrono::duration<double>(b - a).count();
}

}  // namespace

int main(int argc, char** argv) {
    std::string corpus_path = "data/corpus.json";
    if (const char* env = std::getenv("QA_CORPUS")) corpus_path = env;
    if (argc > 1) corpus_path = argv[1];

    Corpus c;
    try {
        c = load_corpus(corpus_path);
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }

    for (const auto& [id, link] : c.links) {
        FitProblem prob = fit_problem_for_link(c, id);
        const auto t0 = std::chrono::steady_clock::now();
        auto parallel = fit_linking_matrix(prob);
        const auto t1 = std::chrono::steady_clock::now();
        auto serial = fit_linking_matrix_serial(prob);
        const auto t2 = std::chrono::steady_clock::now();
        const bool same = parallel == serial;
        std::cout << id << ": " << parallel.size() << " solution(s), parallel "
                  << seconds(t0, t1) << "s, serial " << seconds(t1, t2) << "s, results "
                  << (same ? "identical" : "DIFFER") << "\n";
        if (!same) return 1;
    }
    return 0;
}
