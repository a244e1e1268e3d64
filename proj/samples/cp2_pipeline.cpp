// Start from the 9-vertex CP2, find a spanning tree in an edge link, grow the
// complex to a requested (h1, h2) and audit the result.
//
//   sample_cp2_pipeline [h1 h2]

#include <cstdlib>
#include <iostream>

#include <facelab/facelab.hpp>

using namespace facelab;

int main(int argc, char** argv)
{
    Int a = argc > 2 ? std::atoll(argv[1]) : 6;
    Int b = argc > 2 ? std::atoll(argv[2]) : 20;
    try {
        auto C = *catalog("cp2_9").complex;
        LabelFace rho{Label(1), Label(2)};
        auto T = find_spanning_tree_in_link(C, rho);
        if (!T) {
            std::cerr << "no spanning tree in lk{1,2}\n";
            return 1;
        }
        std::cout << "tree of length " << T->length() << " spans " << T->vertex_order.size() << " link vertices\n";

        auto r = realize_g_pair(C, lift_facets(T->facets, rho), a, b);
        auto h = h_vector(r.complex);
        std::cout << "after " << r.log.size() - 1 << " steps: " << r.complex.num_vertices() << " vertices, h =";
        for (auto x : h) std::cout << " " << x;
        std::cout << "\n";

        auto R = audit(r.complex);
        std::cout << format_table(R);
        return R.has_proven_violation() ? 1 : 0;
    } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }
}
