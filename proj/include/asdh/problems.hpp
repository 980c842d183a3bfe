#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "asdh/problem.hpp"

namespace asdh {

class UnknownProblem : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class DimensionMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

enum class ScaleClass { large, small };

/// Catalog entry for one test problem. Large-scale problems take a free
/// dimension n (m follows from the structure); small-scale ones have
/// fixed (n, m). `block` is the variable-block size the dimension must
/// be divisible by. Entries with implemented == false are catalogued but
/// cannot be instantiated.
struct ProblemSpec {
    std::string id;  // "P1".."P30"
    std::string name;
    ScaleClass scale = ScaleClass::large;
    bool implemented = false;
    int fixed_n = 0;  // 0: dimension free
    int fixed_m = 0;
    int block = 1;
    std::string start_desc;
    std::string dims_desc;
};

/// All 30 catalog entries, in id order.
const std::vector<ProblemSpec>& catalog();

const ProblemSpec& find_spec(std::string_view id);

/// Ids of the implemented problems, in catalog order.
std::vector<std::string> implemented_ids();

/// Builds the problem with its canonical start point. For small-scale
/// problems n must equal the fixed dimension. Throws UnknownProblem for
/// ids outside the catalog or not implemented, DimensionMismatch for an
/// invalid n.
std::unique_ptr<NlsProblem> instantiate(std::string_view id, int n);

}  // namespace asdh
