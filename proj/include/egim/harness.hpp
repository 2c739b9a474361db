#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "egim/classical_im.hpp"
#include "egim/ofdm.hpp"

namespace egim {

enum class SchemeKind { egim4qam, egim8psk, classical_im, autoencoder, benchmark_codec };
enum class ChannelKind { awgn, rayleigh };
enum class Decision { hard, soft };

const char* scheme_name(SchemeKind s);
const char* channel_name(ChannelKind c);

/// Sweep configuration; mirrors the JSON config file (snake_case keys,
/// unknown keys rejected).
struct SimConfig {
    SchemeKind scheme = SchemeKind::egim4qam;
    ChannelKind channel = ChannelKind::rayleigh;
    PowerPolicy policy = PowerPolicy::power_saving;
    std::vector<double> snr_db{10.0, 20.0, 30.0};
    int n_fft = 64;
    int cp_len = 16;
    int taps = 10;
    int traceback = 12;
    uint64_t min_errors = 500;
    uint64_t max_frames = 2000000;
    uint64_t seed = 1;
    Decision decision = Decision::hard;  // coded schemes only
    GroupSpec group;                     // classical-im only

    static SimConfig from_json_text(const std::string& text);
    static SimConfig from_json_file(const std::string& path);
    void validate() const;

    bool coded() const {
        return scheme == SchemeKind::autoencoder || scheme == SchemeKind::benchmark_codec;
    }
    /// CSV scheme column; coded schemes carry the decision suffix.
    std::string scheme_label() const;
};

struct PointResult {
    double snr_db = 0.0;
    uint64_t frames = 0;
    uint64_t symbols = 0;
    uint64_t bits = 0;
    uint64_t symbol_errors = 0;
    uint64_t bit_errors = 0;
    double elapsed_s = 0.0;
    double analytic_ser = -1.0;  // set only on theory curves

    double ser() const {
        if (analytic_ser >= 0.0) return analytic_ser;
        return symbols ? static_cast<double>(symbol_errors) / static_cast<double>(symbols) : 0.0;
    }
    double ber() const { return bits ? static_cast<double>(bit_errors) / static_cast<double>(bits) : 0.0; }
};

struct SweepResult {
    std::string scheme;
    std::string channel;
    std::string policy;
    std::vector<PointResult> points;
};

/// Hard and soft decodings of the same noise realizations (so the
/// soft-vs-hard comparison is paired).
struct CodedPointStats {
    uint64_t frames = 0;
    uint64_t symbols = 0;
    uint64_t bits = 0;
    uint64_t symbol_errors = 0;
    uint64_t bit_errors_hard = 0;
    uint64_t bit_errors_soft = 0;
};

/// Monte Carlo sweep over cfg.snr_db. Frames are simulated until
/// min_errors symbol errors (uncoded) or decoded bit errors (coded), or
/// max_frames. Results are identical for identical (cfg, seed) whatever
/// the worker count. workers <= 0 selects hardware concurrency.
SweepResult run_sweep(const SimConfig& cfg, int workers = 1);

/// One coded SNR point, both decodings. cfg.scheme must be coded.
CodedPointStats run_coded_point(const SimConfig& cfg, double snr_db, int workers = 1);

struct DesyncTrial {
    uint64_t site = 0;          // injected codeword index
    uint64_t error_bits = 0;    // decoded/destuffed bit errors
    uint64_t first_error = 0;   // bit positions (valid when error_bits > 0)
    uint64_t last_error = 0;
    uint64_t footprint = 0;     // last - first + 1
    double downstream_rate = 0; // uncoded: error rate at and after the flip
};

struct DesyncReport {
    std::string scheme;
    uint64_t trials = 0;
    uint64_t trials_with_errors = 0;
    uint64_t max_footprint = 0;
    uint64_t max_error_bits = 0;
    uint64_t trials_over_traceback = 0;  // footprint > tb (coded)
    double mean_downstream_rate = 0.0;   // over trials with errors (uncoded)
    bool control_clean = false;          // no-injection run decodes clean
    std::vector<DesyncTrial> per_trial;
};

/// Error-propagation experiment: exactly one on/off symbol flip per
/// trial, footprint measured after destuffing (egim4qam) or after hard
/// Viterbi decoding (autoencoder).
DesyncReport run_desync(const SimConfig& cfg, uint64_t trials);

/// CSV with columns scheme,channel,policy,snr_db,frames,symbols,bits,
/// symbol_errors,bit_errors,ser,ber (UTF-8, LF).
void emit_csv(const SweepResult& result, const std::string& path);

/// Analytic SER curve in the same CSV shape (counts zero, policy "theory").
SweepResult theory_curve(SchemeKind scheme, const std::vector<double>& snr_db);

struct PlotSeries {
    std::string label;
    std::vector<std::pair<double, double>> points;  // (snr_db, rate)
    bool line = false;                              // line (theory) vs markers (sim)
};

/// Log-y SVG overlay of simulated points and analytic curves. No file is
/// written when nothing is plottable.
void emit_plot(const std::vector<PlotSeries>& series, const std::string& path,
               const std::string& y_label = "SER");

/// Minimal reader for the CSV emitted above; returns one series per
/// (scheme,channel,policy) with the chosen metric ("ser" or "ber").
std::vector<PlotSeries> csv_to_series(const std::string& path, const std::string& metric);

}  // namespace egim
