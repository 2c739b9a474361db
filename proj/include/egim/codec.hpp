#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "egim/bits.hpp"
#include "egim/constellation.hpp"

namespace egim {

/// Tap masks over (current bit, m_{t-1}, m_{t-2}, m_{t-3}); bit i of a
/// mask taps the input delayed by i. Outputs 2 and 3 are ANDed with
/// output 1, which forces the off codeword whenever output 1 is zero.
struct GeneratorSet {
    uint8_t g1 = 0b1111;  // x^3 + x^2 + x + 1
    uint8_t h2 = 0b1110;  // x^3 + x^2 + x
    uint8_t h3 = 0b1011;  // x^3 + x + 1
};

struct TrellisBranch {
    uint8_t next_state = 0;
    uint8_t output = 0;  // packed MSB-first, out_bits wide
};

/// Branch table of a memory-3 binary-input encoder. State packs
/// (m_{t-1}, m_{t-2}, m_{t-3}) MSB-first, so state 0 is the reset state
/// and next_state = (input << 2) | (state >> 1).
struct Trellis {
    int n_states = 8;
    int out_bits = 3;
    std::array<std::array<TrellisBranch, 2>, 8> branch{};

    /// Encode one step from `state` with input `m`.
    TrellisBranch step(int state, int m) const { return branch[static_cast<size_t>(state)][static_cast<size_t>(m)]; }
};

/// Enumerates all 16 branches of the nonlinear OFDM-IM autoencoder.
Trellis build_trellis(const GeneratorSet& gen);

/// Standard linear rate-1/2 constraint-length-4 code, generators
/// (15, 17) octal, used as the equal-symbol-rate benchmark.
Trellis benchmark_trellis();

/// Runs the trellis over `bits`; appends 3 flush zeros when terminated.
std::vector<uint8_t> encode_with_trellis(const Trellis& tr, const BitVec& bits, bool terminated);

/// Rate-1/3 nonlinear convolutional encoder whose outputs are the five
/// EGIM-4QAM codewords. One input bit per codeword: Sym_eff = 1.
class AutoencoderCodec {
public:
    AutoencoderCodec();

    const Trellis& trellis() const { return trellis_; }

    std::vector<Codeword> encode(const BitVec& bits, bool terminated = true) const;

private:
    Trellis trellis_;
};

/// Rate-1/2 benchmark mapped to 4QAM: one symbol per input bit, so the
/// effective symbol rate matches the autoencoder's.
class BenchmarkCodec {
public:
    BenchmarkCodec();

    const Trellis& trellis() const { return trellis_; }

    /// Coded bit pairs, packed 2 bits per entry.
    std::vector<uint8_t> encode(const BitVec& bits, bool terminated = true) const;

    /// Unit-power QPSK symbols of the coded pairs.
    CVec map(const std::vector<uint8_t>& pairs) const;

private:
    Trellis trellis_;
};

/// Minimum-Hamming-distance path with windowed traceback: the bit at
/// position t is decided after codeword t+tb-1 arrives. Ties prefer the
/// input-0 branch (the lower-indexed predecessor when inputs agree).
/// With `terminated`, the last 3 codewords are flush and the final
/// traceback is pinned to state 0.
BitVec viterbi_hard(const std::vector<uint8_t>& codewords, const Trellis& tr, int tb,
                    bool terminated = true);

/// Same search driven by per-bit LLRs (positive = bit 0 more likely);
/// branch cost is sum over codeword bits of (2b-1)*L, which reproduces
/// the Euclidean metric ordering under Gaussian noise.
BitVec viterbi_soft(const std::vector<std::vector<double>>& llrs, const Trellis& tr, int tb,
                    bool terminated = true);

/// Minimum output weight over all detours that leave the all-zero path
/// and re-merge (Dijkstra over the trellis).
int free_distance(const Trellis& tr);

}  // namespace egim
