#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace dworkcli {

enum Exit : int { ok = 0, verification_failed = 1, usage = 2, io = 3 };

struct Common {
    std::optional<std::string> cache_dir;
    double guard = 0.01;
    std::optional<double> tol;
    std::uint64_t seed = 1;
    std::size_t threads = 0;
};

struct FieldArgs {
    std::uint32_t p = 0;
    std::uint32_t e = 1;
    std::uint32_t generator_rank = 0;
    std::uint32_t zeta_root = 1;
};

struct CountArgs {
    std::uint32_t d = 0;
    FieldArgs field;
    std::uint64_t lambda = 0;
    std::string method = "all";
    std::string format = "text";
    bool conjecture = false;
};

struct VerifyArgs {
    std::string suite;
    std::optional<std::uint32_t> d;
    std::optional<std::uint32_t> p;
    std::uint32_t e = 1;
    std::uint32_t qmax = 61;
    std::uint32_t pmax = 47;
    std::uint32_t n = 100;
    bool verbose = false;
};

struct CosetsArgs {
    std::uint32_t d = 0;
    bool classify = false;
    bool list = false;
    std::string format = "text";
};

struct TableArgs {
    std::uint32_t d = 0;
    FieldArgs field;
    std::optional<std::uint64_t> lambda_min;
    std::optional<std::uint64_t> lambda_max;
    std::string format = "csv";
    std::optional<std::string> out;
    bool verify = false;
};

int cmd_count(const CountArgs& args, const Common& common, std::ostream& out);
int cmd_verify(const VerifyArgs& args, const Common& common, std::ostream& out);
int cmd_cosets(const CosetsArgs& args, std::ostream& out);
int cmd_table(const TableArgs& args, const Common& common, std::ostream& out);

} // namespace dworkcli
