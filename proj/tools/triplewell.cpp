#include <exception>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "triplewell/io.hpp"

int main(int argc, char** argv) {
    using namespace triplewell;

    std::vector<std::string> args(argv + 1, argv + argc);
    RunConfig cfg;
    try {
        cfg = parse_config(args);
    } catch (const ConfigError& e) {
        std::cerr << "triplewell: " << e.what() << "\n";
        return 2;
    }

    try {
        const OutputTable table = run_command(cfg);
        const std::string bytes = emit(table, cfg);
        if (cfg.output.empty()) {
            std::cout << bytes;
        } else {
            std::ofstream out(cfg.output, std::ios::binary);
            if (!out) {
                std::cerr << "triplewell: cannot open '" << cfg.output << "' for writing\n";
                return 3;
            }
            out << bytes;
            if (!out) {
                std::cerr << "triplewell: write to '" << cfg.output << "' failed\n";
                return 3;
            }
        }
    } catch (const ConfigError& e) {
        std::cerr << "triplewell: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "triplewell: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "triplewell: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
