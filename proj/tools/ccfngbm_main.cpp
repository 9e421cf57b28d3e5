#include <iostream>

#include "cli_args.hpp"

int main(int argc, char** argv) {
    ccfngbm::cli::RunConfig cfg;
    try {
        if (auto code = ccfngbm::cli::parse_args(argc, argv, cfg)) return *code;
    } catch (const ccfngbm::Error& e) {
        std::cerr << "{\"error\":{\"category\":\"" << ccfngbm::category_name(e.category())
                  << "\",\"exit_code\":" << ccfngbm::exit_code(e.category()) << ",\"message\":"
                  << ccfngbm::json(e.what()).dump() << "}}\n";
        return ccfngbm::exit_code(e.category());
    }
    return ccfngbm::cli::run(cfg, std::cout, std::cerr);
}
