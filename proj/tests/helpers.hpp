#pragma once

#include <gtest/gtest.h>

#include <facelab/facelab.hpp>

namespace th {

using namespace facelab;

inline SimplicialComplex K(std::initializer_list<std::initializer_list<int>> rows)
{
    std::vector<LabelFace> fs;
    for (auto& r : rows) {
        LabelFace f;
        for (int v : r) f.emplace_back(v);
        fs.push_back(f);
    }
    return SimplicialComplex::from_facets(fs);
}

inline LabelFace F(std::initializer_list<int> vs)
{
    LabelFace f;
    for (int v : vs) f.emplace_back(v);
    return f;
}

// 6-vertex real projective plane
inline SimplicialComplex rp2_6()
{
    return K({{1, 2, 3}, {1, 3, 4}, {1, 4, 5}, {1, 5, 6}, {1, 2, 6}, {2, 3, 5}, {2, 4, 5}, {2, 4, 6}, {3, 4, 6}, {3, 5, 6}});
}

inline SimplicialComplex suspension(const SimplicialComplex& X)
{
    return join(X, SimplicialComplex::from_facets({{Label("n")}, {Label("s")}}));
}

inline SimplicialComplex full_simplex(int d)
{
    LabelFace f;
    for (int i = 1; i <= d; ++i) f.emplace_back(i);
    return SimplicialComplex::from_facets({f});
}

} // namespace th

#define EXPECT_KIND(stmt, k)                                                                                            \
    do {                                                                                                                \
        try {                                                                                                           \
            stmt;                                                                                                       \
            ADD_FAILURE() << "expected " << k;                                                                         \
        } catch (const facelab::Error& e_) {                                                                            \
            EXPECT_EQ(e_.kind(), k) << e_.what();                                                                       \
        }                                                                                                               \
    } while (0)
