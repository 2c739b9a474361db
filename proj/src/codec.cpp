#include "egim/codec.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <queue>
#include <stdexcept>

namespace egim {

namespace {

int parity(uint32_t v) { return std::popcount(v) & 1; }

// window = (m_t << 0 semantics of the tap masks): bit i taps delay i.
uint8_t autoencoder_output(const GeneratorSet& gen, int state, int m) {
    const uint32_t window = static_cast<uint32_t>(m) | (static_cast<uint32_t>(state) << 1);
    const int o1 = parity(window & gen.g1);
    const int o2 = parity(window & gen.h2) & o1;
    const int o3 = parity(window & gen.h3) & o1;
    return static_cast<uint8_t>((o1 << 2) | (o2 << 1) | o3);
}

}  // namespace

Trellis build_trellis(const GeneratorSet& gen) {
    Trellis tr;
    tr.out_bits = 3;
    for (int s = 0; s < tr.n_states; ++s) {
        for (int m = 0; m < 2; ++m) {
            TrellisBranch b;
            b.next_state = static_cast<uint8_t>((m << 2) | (s >> 1));
            b.output = autoencoder_output(gen, s, m);
            tr.branch[static_cast<size_t>(s)][static_cast<size_t>(m)] = b;
        }
    }
    return tr;
}

Trellis benchmark_trellis() {
    // (15)8 = 1101 -> taps {m_t, m_{t-1}, m_{t-3}}, (17)8 = 1111 -> all four
    constexpr uint32_t kG1 = 0b1011;
    constexpr uint32_t kG2 = 0b1111;
    Trellis tr;
    tr.out_bits = 2;
    for (int s = 0; s < tr.n_states; ++s) {
        for (int m = 0; m < 2; ++m) {
            const uint32_t window = static_cast<uint32_t>(m) | (static_cast<uint32_t>(s) << 1);
            TrellisBranch b;
            b.next_state = static_cast<uint8_t>((m << 2) | (s >> 1));
            b.output = static_cast<uint8_t>((parity(window & kG1) << 1) | parity(window & kG2));
            tr.branch[static_cast<size_t>(s)][static_cast<size_t>(m)] = b;
        }
    }
    return tr;
}

std::vector<uint8_t> encode_with_trellis(const Trellis& tr, const BitVec& bits, bool terminated) {
    std::vector<uint8_t> out;
    out.reserve(bits.size() + (terminated ? 3 : 0));
    int state = 0;
    auto push = [&](int m) {
        const auto br = tr.step(state, m);
        out.push_back(br.output);
        state = br.next_state;
    };
    for (auto b : bits) push(b & 1);
    if (terminated)
        for (int i = 0; i < 3; ++i) push(0);
    return out;
}

AutoencoderCodec::AutoencoderCodec() : trellis_(build_trellis(GeneratorSet{})) {}

std::vector<Codeword> AutoencoderCodec::encode(const BitVec& bits, bool terminated) const {
    const auto raw = encode_with_trellis(trellis_, bits, terminated);
    std::vector<Codeword> cws;
    cws.reserve(raw.size());
    for (auto v : raw) cws.push_back({v, 3});
    return cws;
}

BenchmarkCodec::BenchmarkCodec() : trellis_(benchmark_trellis()) {}

std::vector<uint8_t> BenchmarkCodec::encode(const BitVec& bits, bool terminated) const {
    return encode_with_trellis(trellis_, bits, terminated);
}

CVec BenchmarkCodec::map(const std::vector<uint8_t>& pairs) const {
    CVec pts;
    pts.reserve(pairs.size());
    for (auto p : pairs) pts.push_back(payload_point(4, p));
    return pts;
}

namespace {

// Shared ACS + windowed-traceback search. Cost is int for hard decisions
// and double for LLR metrics; survivors store (prev_state << 1) | input.
template <typename M, typename BranchCost>
BitVec viterbi_core(size_t n_steps, const Trellis& tr, int tb, bool terminated,
                    BranchCost branch_cost) {
    if (tb < 1) throw std::invalid_argument("viterbi: traceback length must be >= 1");
    const int S = tr.n_states;
    const M inf = std::numeric_limits<M>::max() / 4;
    std::vector<M> metric(static_cast<size_t>(S), inf), next(static_cast<size_t>(S));
    metric[0] = 0;
    std::vector<uint8_t> survivor(n_steps * static_cast<size_t>(S));
    BitVec decoded;
    decoded.reserve(n_steps);

    auto best_state = [&]() {
        int s = 0;
        for (int i = 1; i < S; ++i)
            if (metric[static_cast<size_t>(i)] < metric[static_cast<size_t>(s)]) s = i;
        return s;
    };
    auto emit_upto = [&](size_t t_now, size_t emit_end, int from_state) {
        // decide bits for positions [decoded.size(), emit_end) by tracing
        // back from `from_state` at time t_now
        std::vector<uint8_t> tail;
        int s = from_state;
        for (size_t t = t_now + 1; t-- > decoded.size();) {
            const uint8_t sv = survivor[t * static_cast<size_t>(S) + static_cast<size_t>(s)];
            if (t < emit_end) tail.push_back(sv & 1u);
            s = sv >> 1;
        }
        decoded.insert(decoded.end(), tail.rbegin(), tail.rend());
    };

    for (size_t t = 0; t < n_steps; ++t) {
        std::fill(next.begin(), next.end(), inf);
        for (int s = 0; s < S; ++s) {
            if (metric[static_cast<size_t>(s)] >= inf) continue;
            for (int m = 0; m < 2; ++m) {
                const auto br = tr.step(s, m);
                const M w = metric[static_cast<size_t>(s)] + branch_cost(t, br.output);
                // strict <: the first candidate (lower state, input fixed
                // by the target state's top bit; input-0 branches come
                // from the same ordering) wins ties
                if (w < next[br.next_state]) {
                    next[br.next_state] = w;
                    survivor[t * static_cast<size_t>(S) + br.next_state] =
                        static_cast<uint8_t>((s << 1) | m);
                }
            }
        }
        metric.swap(next);
        if (t + 1 >= static_cast<size_t>(tb) && t + 1 < n_steps)
            emit_upto(t, t + 2 - static_cast<size_t>(tb), best_state());
    }
    if (n_steps > 0) emit_upto(n_steps - 1, n_steps, terminated ? 0 : best_state());
    if (terminated && decoded.size() >= 3) decoded.resize(decoded.size() - 3);
    return decoded;
}

}  // namespace

BitVec viterbi_hard(const std::vector<uint8_t>& codewords, const Trellis& tr, int tb,
                    bool terminated) {
    return viterbi_core<long>(codewords.size(), tr, tb, terminated,
                              [&](size_t t, uint8_t out) -> long {
                                  return std::popcount(static_cast<uint32_t>(out ^ codewords[t]));
                              });
}

BitVec viterbi_soft(const std::vector<std::vector<double>>& llrs, const Trellis& tr, int tb,
                    bool terminated) {
    const int nb = tr.out_bits;
    return viterbi_core<double>(llrs.size(), tr, tb, terminated,
                                [&](size_t t, uint8_t out) -> double {
                                    double c = 0.0;
                                    for (int b = 0; b < nb; ++b) {
                                        const int bit = (out >> (nb - 1 - b)) & 1;
                                        c += (2 * bit - 1) * llrs[t][static_cast<size_t>(b)];
                                    }
                                    return c;
                                });
}

int free_distance(const Trellis& tr) {
    // Dijkstra from every first divergence off state 0; re-merging into
    // state 0 ends a detour. Zero-weight branches exist, so plain BFS
    // would not do.
    const int S = tr.n_states;
    const int inf = std::numeric_limits<int>::max() / 2;
    std::vector<int> dist(static_cast<size_t>(S), inf);
    using Node = std::pair<int, int>;  // (weight, state)
    std::priority_queue<Node, std::vector<Node>, std::greater<>> pq;

    const auto first = tr.step(0, 1);
    const int w0 = std::popcount(static_cast<uint32_t>(first.output));
    int best = inf;
    if (first.next_state == 0) return w0;
    dist[first.next_state] = w0;
    pq.emplace(w0, first.next_state);

    while (!pq.empty()) {
        const auto [w, s] = pq.top();
        pq.pop();
        if (w > dist[static_cast<size_t>(s)]) continue;
        for (int m = 0; m < 2; ++m) {
            const auto br = tr.step(s, m);
            const int nw = w + std::popcount(static_cast<uint32_t>(br.output));
            if (br.next_state == 0) {
                best = std::min(best, nw);
            } else if (nw < dist[br.next_state]) {
                dist[br.next_state] = nw;
                pq.emplace(nw, br.next_state);
            }
        }
    }
    return best;
}

}  // namespace egim
