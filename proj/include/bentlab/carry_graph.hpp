#pragma once

#include "bentlab/carry.hpp"

#include <string>
#include <vector>

namespace bentlab {

/// The finite weighted digraph whose length-n closed walks are in bijection
/// with valid two-chain carry computations for the additions
///   s = -a - b + v,  t = -a - b + u  (mod 3^n - 1)
/// under the alternating digit patterns v = (..., 2, 0), u = (..., 0, 2).
///
/// Vertices are tuples (a', b', c', d', v') with a', b' in {0,1,2},
/// c', d' in {-2,-1,0}, v' in {0,2}; there are exactly 3*3*3*3*2 = 162.
/// An arc (a',b',c',d',v') -> (a'',b'',c'',d'',v'') with weight
/// a' + b' + 2c'' + 2d'' exists whenever v'' = 2 - v' and both digit values
///   s' = -a'-b'+v'+c'-3c'',  t' = -a'-b'+v''+d'-3d''
/// land in {0,1,2}. Per-arc non-positivity of the weight proves the
/// inequality w(a)+w(b)+w(s)+w(t) >= 4k for every word length at once.
class CarryGraph {
public:
    static constexpr int kVertexCount = 162;

    struct Vertex {
        int a, b, c, d, v;
    };
    struct Arc {
        int from, to, weight;
    };

    CarryGraph();

    static int vertex_index(const Vertex& v);
    static Vertex vertex_at(int index);

    const std::vector<Arc>& arcs() const { return arcs_; }

    /// Looks up the arc between two vertex indices; returns false when it
    /// does not exist, otherwise writes the weight.
    bool arc_weight(int from, int to, int* weight) const;

    /// (max arc weight, whether all arcs are <= 0). The max must be exactly 0.
    std::pair<int, bool> verify_arcs_nonpositive() const;

    /// Graphviz rendering for documentation.
    std::string to_dot() const;

private:
    std::vector<Arc> arcs_;
    std::vector<int8_t> weight_matrix_;  // kVertexCount^2, sentinel for absent
};

struct CarryWalk {
    std::vector<int> vertices;  // length n+1, first == last
    std::vector<int> weights;   // per-step arc weights
    long long total_weight = 0;
};

/// Walk through the standard graph encoding the carry computation for
/// integers a, b at word length n = 2k. Every step is verified to be an arc;
/// the total weight equals 4k - (w(a)+w(b)+w(s)+w(t)).
CarryWalk instance_to_walk(long long a, long long b, int k, const CarryGraph& g);

/// Position-layered generalization for arbitrary ternary u, v with disjoint
/// digit supports. Layer i holds tuples (a', b', c', d'); arcs from layer i
/// to layer i+1 (cyclically) use the digit labels u_i, v_i.
class GeneralizedCarryGraph {
public:
    GeneralizedCarryGraph(const carry::DigitVector& u, const carry::DigitVector& v);

    int layers() const { return n_; }
    static constexpr int kPerLayer = 81;

    struct Arc {
        int layer;  // source layer
        int from, to;  // per-layer vertex indices
        int weight;
    };
    const std::vector<Arc>& arcs() const { return arcs_; }

    /// All arc weights must be <= 0; returns (max weight, verdict).
    std::pair<int, bool> verify_arcs_nonpositive() const;

    /// Closed walk for an (a, b) instance; total weight equals
    /// w(u)+w(v) - (w(a)+w(b)+w(s)+w(t)).
    CarryWalk instance_to_walk(long long a, long long b) const;

private:
    int n_;
    carry::DigitVector u_, v_;
    std::vector<Arc> arcs_;
};

}  // namespace bentlab
