#include "bentlab/carry_graph.hpp"

#include <stdexcept>

namespace bentlab {

namespace {

constexpr int8_t kNoArc = 127;

int floor_div3(int x) {
    return x >= 0 ? x / 3 : -((-x + 2) / 3);
}

}  // namespace

int CarryGraph::vertex_index(const Vertex& v) {
    if (v.a < 0 || v.a > 2 || v.b < 0 || v.b > 2 || v.c < -2 || v.c > 0 || v.d < -2 ||
        v.d > 0 || (v.v != 0 && v.v != 2))
        throw std::invalid_argument("CarryGraph: vertex out of range");
    return (((v.a * 3 + v.b) * 3 + (v.c + 2)) * 3 + (v.d + 2)) * 2 + v.v / 2;
}

CarryGraph::Vertex CarryGraph::vertex_at(int index) {
    if (index < 0 || index >= kVertexCount)
        throw std::out_of_range("CarryGraph: vertex index out of range");
    Vertex v{};
    v.v = (index % 2) * 2;
    index /= 2;
    v.d = index % 3 - 2;
    index /= 3;
    v.c = index % 3 - 2;
    index /= 3;
    v.b = index % 3;
    index /= 3;
    v.a = index % 3;
    return v;
}

CarryGraph::CarryGraph() {
    weight_matrix_.assign(kVertexCount * kVertexCount, kNoArc);
    for (int from = 0; from < kVertexCount; ++from) {
        Vertex s = vertex_at(from);
        int vpp = 2 - s.v;
        for (int to = 0; to < kVertexCount; ++to) {
            Vertex t = vertex_at(to);
            if (t.v != vpp) continue;
            int sp = -s.a - s.b + s.v + s.c - 3 * t.c;
            int tp = -s.a - s.b + vpp + s.d - 3 * t.d;
            if (sp < 0 || sp > 2 || tp < 0 || tp > 2) continue;
            int w = s.a + s.b + 2 * t.c + 2 * t.d;
            arcs_.push_back({from, to, w});
            weight_matrix_[from * kVertexCount + to] = static_cast<int8_t>(w);
        }
    }
}

bool CarryGraph::arc_weight(int from, int to, int* weight) const {
    int8_t w = weight_matrix_[from * kVertexCount + to];
    if (w == kNoArc) return false;
    if (weight) *weight = w;
    return true;
}

std::pair<int, bool> CarryGraph::verify_arcs_nonpositive() const {
    int max_w = arcs_.empty() ? 0 : arcs_[0].weight;
    for (const auto& arc : arcs_) max_w = std::max(max_w, arc.weight);
    return {max_w, max_w <= 0};
}

std::string CarryGraph::to_dot() const {
    std::string out = "digraph carry {\n";
    for (int i = 0; i < kVertexCount; ++i) {
        Vertex v = vertex_at(i);
        out += "  v" + std::to_string(i) + " [label=\"(" + std::to_string(v.a) + "," +
               std::to_string(v.b) + "," + std::to_string(v.c) + "," + std::to_string(v.d) +
               "," + std::to_string(v.v) + ")\"];\n";
    }
    for (const auto& arc : arcs_)
        out += "  v" + std::to_string(arc.from) + " -> v" + std::to_string(arc.to) +
               " [label=\"" + std::to_string(arc.weight) + "\"];\n";
    out += "}\n";
    return out;
}

CarryWalk instance_to_walk(long long a, long long b, int k, const CarryGraph& g) {
    if (k < 1 || k > 15) throw std::invalid_argument("instance_to_walk: bad k");
    const int n = 2 * k;
    auto uvz = carry::uvz_constants(k);
    auto da = carry::to_digits(a, 3, n);
    auto db = carry::to_digits(b, 3, n);

    carry::AwcInstance s_inst{3, n, {-1, -1, 1}, {da.value(), db.value(), uvz.v.value()}};
    carry::AwcInstance t_inst{3, n, {-1, -1, 1}, {da.value(), db.value(), uvz.u.value()}};
    auto s_sol = carry::awc_solve(s_inst);
    auto t_sol = carry::awc_solve(t_inst);

    // Step i walks (a_i, b_i, c_{i-1}, d_{i-1}, v_i) -> (a_{i+1}, b_{i+1}, c_i, d_i, v_{i+1}):
    // the s-chain consumes v_i and the t-chain u_i = v_{i-1} = 2 - v_i.
    CarryWalk walk;
    auto vertex_for = [&](int i) {
        CarryGraph::Vertex v;
        v.a = da.digits[i % n];
        v.b = db.digits[i % n];
        v.c = static_cast<int>(s_sol.carry_before(i % n));
        v.d = static_cast<int>(t_sol.carry_before(i % n));
        v.v = uvz.v.digits[i % n];
        return CarryGraph::vertex_index(v);
    };
    walk.vertices.push_back(vertex_for(0));
    for (int i = 0; i < n; ++i) {
        int to = vertex_for(i + 1);
        int w = 0;
        if (!g.arc_weight(walk.vertices.back(), to, &w))
            throw std::logic_error("instance_to_walk: step is not an arc");
        int expected = da.digits[i] + db.digits[i] +
                       2 * static_cast<int>(s_sol.carries[i]) +
                       2 * static_cast<int>(t_sol.carries[i]);
        if (w != expected) throw std::logic_error("instance_to_walk: arc weight mismatch");
        walk.weights.push_back(w);
        walk.total_weight += w;
        walk.vertices.push_back(to);
    }
    return walk;
}

GeneralizedCarryGraph::GeneralizedCarryGraph(const carry::DigitVector& u,
                                             const carry::DigitVector& v)
    : n_(u.n) {
    if (u.p != 3 || v.p != 3 || u.n != v.n || u.n < 1)
        throw std::invalid_argument("GeneralizedCarryGraph: u, v must be ternary, equal length");
    // Labels count mod 3^n - 1, so the all-2s vector collapses to zero; this
    // keeps the digit chains consistent with the canonical weight convention.
    u_ = carry::to_digits(u.value(), 3, n_);
    v_ = carry::to_digits(v.value(), 3, n_);
    for (int i = 0; i < n_; ++i)
        if (u_.digits[i] != 0 && v_.digits[i] != 0)
            throw std::invalid_argument("GeneralizedCarryGraph: digit supports overlap");

    // Per-layer vertex (a', b', c', d') encoded as ((a*3+b)*3+(c+2))*3+(d+2).
    for (int layer = 0; layer < n_; ++layer) {
        int vi = v_.digits[layer];
        int ui = u_.digits[layer];
        for (int from = 0; from < kPerLayer; ++from) {
            int d0 = from % 3 - 2;
            int c0 = (from / 3) % 3 - 2;
            int b0 = (from / 9) % 3;
            int a0 = from / 27;
            // Carries at this layer are forced by the next digit landing in
            // {0,1,2}; both stay within {-2,...,0}.
            int c1 = floor_div3(-a0 - b0 + vi + c0);
            int d1 = floor_div3(-a0 - b0 + ui + d0);
            int w = a0 + b0 + 2 * c1 + 2 * d1;
            for (int a1 = 0; a1 < 3; ++a1)
                for (int b1 = 0; b1 < 3; ++b1) {
                    int to = ((a1 * 3 + b1) * 3 + (c1 + 2)) * 3 + (d1 + 2);
                    arcs_.push_back({layer, from, to, w});
                }
        }
    }
}

std::pair<int, bool> GeneralizedCarryGraph::verify_arcs_nonpositive() const {
    int max_w = arcs_.empty() ? 0 : arcs_[0].weight;
    for (const auto& arc : arcs_) max_w = std::max(max_w, arc.weight);
    return {max_w, max_w <= 0};
}

CarryWalk GeneralizedCarryGraph::instance_to_walk(long long a, long long b) const {
    auto da = carry::to_digits(a, 3, n_);
    auto db = carry::to_digits(b, 3, n_);
    carry::AwcInstance s_inst{3, n_, {-1, -1, 1}, {da.value(), db.value(), v_.value()}};
    carry::AwcInstance t_inst{3, n_, {-1, -1, 1}, {da.value(), db.value(), u_.value()}};
    auto s_sol = carry::awc_solve(s_inst);
    auto t_sol = carry::awc_solve(t_inst);

    auto vertex_for = [&](int i) {
        int ai = da.digits[i % n_], bi = db.digits[i % n_];
        int ci = static_cast<int>(s_sol.carry_before(i % n_));
        int di = static_cast<int>(t_sol.carry_before(i % n_));
        return ((ai * 3 + bi) * 3 + (ci + 2)) * 3 + (di + 2);
    };
    CarryWalk walk;
    walk.vertices.push_back(vertex_for(0));
    for (int i = 0; i < n_; ++i) {
        int to = vertex_for(i + 1);
        int expected = da.digits[i] + db.digits[i] +
                       2 * static_cast<int>(s_sol.carries[i]) +
                       2 * static_cast<int>(t_sol.carries[i]);
        // Locate the arc in layer i.
        bool found = false;
        for (const auto& arc : arcs_) {
            if (arc.layer == i && arc.from == walk.vertices.back() && arc.to == to) {
                if (arc.weight != expected)
                    throw std::logic_error("GeneralizedCarryGraph: arc weight mismatch");
                found = true;
                break;
            }
        }
        if (!found) throw std::logic_error("GeneralizedCarryGraph: step is not an arc");
        walk.weights.push_back(expected);
        walk.total_weight += expected;
        walk.vertices.push_back(to);
    }
    return walk;
}

}  // namespace bentlab
