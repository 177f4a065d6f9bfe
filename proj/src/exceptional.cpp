#include "orbitcalc/exceptional.hpp"

#include <algorithm>

namespace orbitcalc {

namespace {

const std::vector<ExceptionalRow> e6_rows = {
    {"A5", {1, 1, 0, 0, 1, 0, 1}, "A1xA1", {Partition{2}, Partition{2}}},
    {"2A2+A1", {1, 1, 1, 1, 0, 1, 1}, "A2", {Partition{3}}},
};

const std::vector<int> e7_d6 = {1, 1, 0, 1, 1, 1, 1, 1};

const std::vector<ExceptionalRow> e7_rows = {
    {"D6", e7_d6, "2A7", {Partition{2, 2, 2, 2}}},
    {"E7(a4)", {1, 0, 1, 1, 1, 1, 0, 1}, "A1x2D4", {Partition{2}, Partition{3, 3, 1, 1}}},
    {"D6(a2)", e7_d6, "2A7", {Partition{4, 2, 2}}},
    {"D5(a1)+A1", e7_d6, "2A7", {Partition{4, 3, 1}}},
    {"A5+A1", {1, 1, 1, 0, 1, 0, 1, 1}, "A2xA2", {Partition{3}, Partition{3}}},
    {"D4+A1", e7_d6, "2A7", {Partition{4, 4}}},
    {"A3+A2+A1", e7_d6, "2A7", {Partition{5, 3}}},
    {"A3+2A1", e7_d6, "2A7", {Partition{6, 2}}},
    {"A2+3A1", e7_d6, "2A7", {Partition{7, 1}}},
    {"4A1", e7_d6, "2A7", {Partition{8}}},
};

const std::vector<std::string> e6_orbits = {
    "0",     "A1",     "2A1",   "3A1",  "A2",     "A2+A1", "2A2",    "A2+2A1", "A3",  "2A2+A1", "A3+A1",
    "D4(a1)", "A4",    "D4",    "A4+A1", "A5",    "D5(a1)", "E6(a3)", "D5",    "E6(a1)", "E6",
};

const std::vector<std::string> e7_orbits = {
    "0",         "A1",       "2A1",      "(3A1)''", "(3A1)'",   "A2",        "4A1",      "A2+A1",    "A2+2A1",
    "A3",        "2A2",      "A2+3A1",   "(A3+A1)''", "2A2+A1", "(A3+A1)'",  "D4(a1)",   "A3+2A1",   "D4",
    "D4(a1)+A1", "A3+A2",    "A4",       "A3+A2+A1", "(A5)''",  "D4+A1",     "A4+A1",    "D5(a1)",   "A4+A2",
    "(A5)'",     "A5+A1",    "D5(a1)+A1", "D6(a2)", "E6(a3)",   "D5",        "E7(a5)",   "A6",       "D5+A1",
    "D6(a1)",    "E7(a4)",   "D6",       "E6(a1)",  "E6",       "E7(a3)",    "E7(a2)",   "E7(a1)",   "E7",
};

void check_group(const std::string& group) {
    if (group != "E6" && group != "E7") throw DomainError("no exceptional table for '" + group + "'");
}

}  // namespace

const std::vector<ExceptionalRow>& exceptional_table(const std::string& group) {
    check_group(group);
    return group == "E6" ? e6_rows : e7_rows;
}

const std::vector<std::string>& exceptional_orbits(const std::string& group) {
    check_group(group);
    return group == "E6" ? e6_orbits : e7_orbits;
}

ExceptionalWitness exceptional_witness(const std::string& group, const std::string& orbit) {
    const auto& names = exceptional_orbits(group);
    if (std::find(names.begin(), names.end(), orbit) == names.end())
        throw DomainError("'" + orbit + "' is not a nilpotent orbit of " + group);
    for (auto& row : exceptional_table(group))
        if (row.orbit == orbit) return {group, orbit, "table", row};
    return {group, orbit, "default", {}};
}

}  // namespace orbitcalc
