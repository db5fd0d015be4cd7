#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "powdom/graph.hpp"

namespace powdom {

/// Claimed parameter profile of a generated instance. gamma_p / rad_p are the
/// values the construction is designed to attain; `note` marks profiles that
/// fall outside the claimed range ("base only", "extrapolated").
struct FamilyProfile {
    int n = 0;
    int delta = 0;
    std::optional<int> Delta;
    std::optional<int> gamma_p;
    std::optional<int> rad_p;
    std::string note;
};

struct FamilyInstance {
    Graph graph;
    std::string family;
    std::map<std::string, int> params;
    FamilyProfile expected;
};

FamilyInstance gen_complete(int n);                        // K_n, n >= 2
FamilyInstance gen_complete_minus_matching(int n);         // K_n - M, even n >= 4

/// Minimum degree 2 witness for the n - delta - 1 radius bound: hub vertices
/// x, y, z feeding two interleaved paths u_1..u_k, v_1..v_k. Vertex layout:
/// x=0, y=1, z=2, u_i=2+i, v_i=2+k+i.
FamilyInstance gen_G2(int k);  // k >= 3

/// Minimum degree 3 variant: x=0, y=1 then (i,j) row-major, i in 1..k, j in 1..3.
FamilyInstance gen_G3(int k);  // k >= 3

/// Minimum degree delta >= 4 variant: u,v,x,y = 0..3 then (i,j) row-major
/// with j in 1..delta-2.
FamilyInstance gen_Gd(int delta, int k);  // delta >= 4, k >= 3

/// K_{delta+3} minus a Hamilton cycle: delta-regular, radius 2.
FamilyInstance gen_regular(int delta);  // delta >= 2

/// Path v_1..v_k (indices 0..k-1) with a pendant triangle on each path vertex.
FamilyInstance gen_D(int k);  // k >= 1

/// Join-recursive family of order delta+3 with gamma_p = 2, rad_p = 1 for
/// delta >= 3. Bases: F(0), F(1), F(3), F(6); F(delta) = 2K_2 + F(delta-4).
/// There is no F(2).
FamilyInstance gen_F(int delta);  // delta >= 0, delta != 2

/// Split graph with clique S ∪ T and independent X ∪ Y ∪ Z; layout
/// s_1..s_g, t_1..t_{p-1}, x_1..x_g, y_1..y_g, z_1..z_{p-1}.
FamilyInstance gen_S(int p, int g);  // p >= 1, g >= 1

/// gamma disjoint stars K_{1,Delta} with edges subdivided into paths of
/// length rad, plus a path across one leaf of each star. Layout per star:
/// hub, then legs row-major hub-outward; the cross-path leaves are each
/// star's first-leg tip.
FamilyInstance gen_H(int Delta, int gamma, int rad);  // Delta >= 3

/// CLI dispatch by family name ("K", "K-M", "G2", "G3", "Gd", "Gdelta",
/// "D", "F", "S", "H").
FamilyInstance make_family(const std::string& name, const std::vector<int>& params);

/// Names accepted by make_family, with arities.
std::vector<std::pair<std::string, int>> family_catalog();

}  // namespace powdom
