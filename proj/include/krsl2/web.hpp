#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace krsl2 {

// The four edges of a crossing seen with both strands pointing up:
// incoming bottom-left/bottom-right, outgoing top-left/top-right.
struct CrossingEdges {
    int bl = -1, br = -1, tl = -1, tr = -1;
};

struct WebEdge {
    int thickness = 1;
    int src = -1;  // vertex id, -1 for a closed circle
    int dst = -1;
    std::vector<int> pd;  // diagram edge labels along a thin edge, in order
};

struct WebVertex {
    enum class Kind { merge, split };
    Kind kind = Kind::merge;
    int thick = -1;  // the thickness-2 edge
    int left = -1;   // thin edges, left and right with the thick edge vertical
    int right = -1;
    int crossing = -1;
};

// Planar trivalent web with thicknesses 1 and 2. Edges and vertices are
// numbered deterministically by the smallest diagram label they carry.
class Web {
public:
    Web() = default;

    // Resolve a diagram: crossing c becomes a dumbbell when dumbbell[c] is
    // set, otherwise the parallel smoothing bl->tl, br->tr.
    static Web from_resolution(int num_labels, const std::vector<CrossingEdges>& crossings,
                               const std::vector<bool>& dumbbell, int free_loops);
    // Disjoint union of thin circles without labels.
    static Web circles(int count);

    const std::vector<WebEdge>& edges() const { return edges_; }
    const std::vector<WebVertex>& vertices() const { return vertices_; }
    int num_labels() const { return num_labels_; }
    int edge_of_label(int label) const { return edge_of_label_.at(label); }

    // Thin edge ids feeding the dumbbell of crossing c (merge side) and
    // leaving it (split side): {bl, br, tl, tr}.
    struct Dumbbell {
        int crossing;
        int merge, split, thick;
        int a, b, c, d;  // thin web edges
    };
    std::vector<Dumbbell> dumbbells() const;
    int num_circles() const;  // thin closed circles, including free loops
    bool flow_ok() const;

    std::string describe() const;

private:
    int num_labels_ = 0;
    std::vector<WebEdge> edges_;
    std::vector<WebVertex> vertices_;
    std::vector<int> edge_of_label_;
};

enum class DotType { hollow, solid };

struct GreenDot {
    int host = -1;  // web edge id, -1 for floating
    DotType type = DotType::hollow;
    mpq_class mult;

    bool operator==(const GreenDot& o) const { return host == o.host && type == o.type && mult == o.mult; }
};

struct GreenDottedWeb {
    Web web;
    std::vector<GreenDot> dots;
};

// Merge dots of equal host and type, drop zero multiplicities, sort.
GreenDottedWeb greendot_normalize(const GreenDottedWeb& g);

}  // namespace krsl2
