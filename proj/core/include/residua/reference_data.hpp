#pragma once

#include <residua/linalg.hpp>
#include <residua/linform.hpp>

#include <string>
#include <vector>

namespace residua {

// Built-in classification data for the two exceptional types: the known
// generic orbits (by their values on the simple roots), their regularity
// loci, and the evaluation fibers at selected parameter points.  These back
// the f*/g* labels and the verification suites.

struct LabeledValues {
    std::string label;
    std::vector<LinForm> simple_values;  // over (k1, k2)
};

struct LabeledFactors {
    std::string label;
    std::vector<LinForm> factors;  // singular locus = union of their zero sets
};

struct ConfluenceGold {
    QVec kval;  // (k1, k2)
    // dominant-representative simple values -> labels of regular families
    // evaluating there
    std::vector<std::pair<QVec, std::vector<std::string>>> rows;
};

std::vector<LabeledValues> f4_simple_value_table();
std::vector<LabeledFactors> f4_regularity_table();
std::vector<ConfluenceGold> f4_confluence_table();

std::vector<LabeledValues> g2_simple_value_table();
std::vector<LabeledFactors> g2_regularity_table();
std::vector<ConfluenceGold> g2_confluence_table();

}  // namespace residua
