#pragma once

#include <map>
#include <string>
#include <vector>

#include "nsg/triangulation.hpp"

namespace nsg {

// Shipped gluing tables, keyed by fixture id.  Surfaces attached to a
// fixture are stored alongside under short names.
struct FixtureData {
    std::string tri_text;
    std::map<std::string, std::string> surfaces;
    bool closed = true;
    int boundary_faces = 0;
};

inline const std::map<std::string, FixtureData>& fixture_table() {
    static const std::map<std::string, FixtureData> table = {
        {"ex6.1",
         {"tri 1\n"
          "0: 0(013) 0(012) 0(312) 0(230)\n",
          {},
          true,
          0}},
        {"ex6.4",
         {"tri 6\n"
          "0: 0(301) 0(120) 2(023) 1(123)\n"
          "1: 3(012) 2(103) 2(123) 0(123)\n"
          "2: 4(012) 1(103) 0(023) 1(023)\n"
          "3: 1(012) 5(013) 4(123) 4(023)\n"
          "4: 2(012) 5(203) 3(123) 3(023)\n"
          "5: 5(231) 3(013) 4(103) 5(201)\n",
          {},
          true,
          0}},
        {"ex6.5",
         {"tri 4\n"
          "0: 3(012) 1(013) 2(023) 1(123)\n"
          "1: 3(013) 0(013) 2(013) 0(123)\n"
          "2: 3(231) 1(023) 0(023) 3(023)\n"
          "3: 0(012) 1(012) 2(123) 2(201)\n",
          {},
          true,
          0}},
        {"ex6.7",
         {"tri 4\n"
          "0: 0(013) 0(012) bdy 1(123)\n"
          "1: 3(012) 3(013) 2(023) 0(123)\n"
          "2: 2(013) 2(012) 1(023) bdy\n"
          "3: 1(012) 1(013) 3(312) 3(230)\n",
          {},
          false,
          2}},
        {"ex6.8",
         {"tri 8\n"
          "0: 3(012) 1(013) 2(023) 1(123)\n"
          "1: 4(132) 0(013) 4(023) 0(123)\n"
          "2: 3(032) 5(013) 0(023) 3(321)\n"
          "3: 0(012) 6(013) 2(021) 2(321)\n"
          "4: 7(120) 7(013) 1(023) 1(021)\n"
          "5: 6(032) 2(013) 6(021) 7(320)\n"
          "6: 5(032) 3(013) 5(021) 7(123)\n"
          "7: 4(201) 4(013) 5(321) 6(123)\n",
          {{"s1",
            "surface std 8\n"
            "0: 0 0 0 0 ; 0 1 0\n"
            "1: 1 0 1 0 ; 0 0 0\n"
            "2: 0 0 0 1 ; 0 0 0\n"
            "3: 0 1 0 0 ; 0 0 0\n"
            "4: 1 1 1 0 ; 0 0 0\n"
            "5: 0 0 1 1 ; 0 0 0\n"
            "6: 0 1 1 0 ; 0 0 0\n"
            "7: 1 1 1 0 ; 0 0 0\n"},
           {"s2",
            "surface std 8\n"
            "0: 0 1 0 1 ; 0 1 0\n"
            "1: 1 1 1 1 ; 0 0 0\n"
            "2: 0 0 0 2 ; 0 0 0\n"
            "3: 0 2 0 0 ; 0 0 0\n"
            "4: 1 1 1 1 ; 0 0 0\n"
            "5: 0 0 0 2 ; 0 0 0\n"
            "6: 0 2 0 0 ; 0 0 0\n"
            "7: 1 1 0 0 ; 1 0 0\n"}},
          true,
          0}},
        {"ex6.9",
         {"tri 6\n"
          "0: 4(012) 3(013) 2(023) 1(123)\n"
          "1: 3(320) 4(230) 5(023) 0(123)\n"
          "2: 3(231) 4(321) 0(023) 5(123)\n"
          "3: 5(103) 0(013) 1(210) 2(201)\n"
          "4: 0(012) 5(102) 1(301) 2(310)\n"
          "5: 4(103) 3(102) 1(023) 2(123)\n",
          {},
          true,
          0}},
        {"ex6.10",
         {"tri 5\n"
          "0: 0(013) 0(012) 2(023) 1(123)\n"
          "1: 4(012) 4(013) 3(023) 0(123)\n"
          "2: 4(230) 4(231) 0(023) 3(123)\n"
          "3: 3(013) 3(012) 1(023) 2(123)\n"
          "4: 1(012) 1(013) 2(201) 2(301)\n",
          {},
          true,
          0}},
    };
    return table;
}

inline std::vector<std::string> fixture_names() {
    std::vector<std::string> names;
    for (const auto& [k, v] : fixture_table()) names.push_back(k);
    return names;
}

inline const FixtureData& fixture_data(const std::string& name) {
    const auto& table = fixture_table();
    auto it = table.find(name);
    if (it == table.end()) throw PreconditionError("unknown fixture '" + name + "'");
    return it->second;
}

inline Triangulation fixture_triangulation(const std::string& name) {
    return parse_triangulation(fixture_data(name).tri_text);
}

}  // namespace nsg
