#include "egim/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "egim/analysis.hpp"
#include "egim/channel.hpp"
#include "egim/codec.hpp"
#include "egim/detection.hpp"
#include "egim/stuffing.hpp"

namespace egim {

namespace {

using json = nlohmann::json;

int popcount8(uint8_t v) { return __builtin_popcount(v); }

SchemeKind parse_scheme(const std::string& s) {
    if (s == "egim4qam") return SchemeKind::egim4qam;
    if (s == "egim8psk") return SchemeKind::egim8psk;
    if (s == "classical-im") return SchemeKind::classical_im;
    if (s == "autoencoder") return SchemeKind::autoencoder;
    if (s == "benchmark-codec") return SchemeKind::benchmark_codec;
    throw std::runtime_error("config: unknown scheme '" + s + "'");
}

ChannelKind parse_channel(const std::string& s) {
    if (s == "awgn") return ChannelKind::awgn;
    if (s == "rayleigh") return ChannelKind::rayleigh;
    throw std::runtime_error("config: unknown channel '" + s + "'");
}

PowerPolicy parse_policy(const std::string& s) {
    if (s == "power-saving") return PowerPolicy::power_saving;
    if (s == "reinvest") return PowerPolicy::reinvest;
    throw std::runtime_error("config: unknown policy '" + s + "'");
}

Decision parse_decision(const std::string& s) {
    if (s == "hard") return Decision::hard;
    if (s == "soft") return Decision::soft;
    throw std::runtime_error("config: unknown decision '" + s + "'");
}

}  // namespace

const char* scheme_name(SchemeKind s) {
    switch (s) {
        case SchemeKind::egim4qam: return "egim4qam";
        case SchemeKind::egim8psk: return "egim8psk";
        case SchemeKind::classical_im: return "classical-im";
        case SchemeKind::autoencoder: return "autoencoder";
        case SchemeKind::benchmark_codec: return "benchmark-codec";
    }
    return "?";
}

const char* channel_name(ChannelKind c) {
    return c == ChannelKind::awgn ? "awgn" : "rayleigh";
}

SimConfig SimConfig::from_json_text(const std::string& text) {
    json j = json::parse(text);
    if (!j.is_object()) throw std::runtime_error("config: top level must be an object");

    static const char* known[] = {"scheme",     "channel",    "policy",   "snr_db",
                                  "n_fft",      "cp_len",     "taps",     "traceback",
                                  "min_errors", "max_frames", "seed",     "decision",
                                  "group_n",    "group_k",    "mod_order"};
    for (auto it = j.begin(); it != j.end(); ++it) {
        bool ok = false;
        for (const char* k : known) ok = ok || it.key() == k;
        if (!ok) throw std::runtime_error("config: unknown key '" + it.key() + "'");
    }

    SimConfig c;
    if (j.contains("scheme")) c.scheme = parse_scheme(j.at("scheme").get<std::string>());
    if (j.contains("channel")) c.channel = parse_channel(j.at("channel").get<std::string>());
    if (j.contains("policy")) c.policy = parse_policy(j.at("policy").get<std::string>());
    if (j.contains("snr_db")) c.snr_db = j.at("snr_db").get<std::vector<double>>();
    if (j.contains("n_fft")) c.n_fft = j.at("n_fft").get<int>();
    if (j.contains("cp_len")) c.cp_len = j.at("cp_len").get<int>();
    if (j.contains("taps")) c.taps = j.at("taps").get<int>();
    if (j.contains("traceback")) c.traceback = j.at("traceback").get<int>();
    if (j.contains("min_errors")) c.min_errors = j.at("min_errors").get<uint64_t>();
    if (j.contains("max_frames")) c.max_frames = j.at("max_frames").get<uint64_t>();
    if (j.contains("seed")) c.seed = j.at("seed").get<uint64_t>();
    if (j.contains("decision")) c.decision = parse_decision(j.at("decision").get<std::string>());
    if (j.contains("group_n")) c.group.n = j.at("group_n").get<int>();
    if (j.contains("group_k")) c.group.k = j.at("group_k").get<int>();
    if (j.contains("mod_order")) c.group.mod_order = j.at("mod_order").get<int>();
    c.validate();
    return c;
}

SimConfig SimConfig::from_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("config: cannot open '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return from_json_text(ss.str());
}

void SimConfig::validate() const {
    if (n_fft < 4) throw std::runtime_error("config: n_fft too small");
    if (cp_len < 0 || cp_len >= n_fft) throw std::runtime_error("config: bad cp_len");
    if (channel == ChannelKind::rayleigh && (taps < 1 || taps > cp_len))
        throw std::runtime_error("config: need 1 <= taps <= cp_len");
    if (traceback < 1) throw std::runtime_error("config: traceback must be >= 1");
    if (min_errors < 1) throw std::runtime_error("config: min_errors must be >= 1");
    if (max_frames < 1) throw std::runtime_error("config: max_frames must be >= 1");
    if (snr_db.empty()) throw std::runtime_error("config: snr_db list is empty");
    if (scheme == SchemeKind::classical_im) {
        group.validate();
        if (n_fft % group.n != 0)
            throw std::runtime_error("config: n_fft must be a multiple of group_n");
    }
    if (coded() && n_fft < 8) throw std::runtime_error("config: coded frames need n_fft >= 8");
}

std::string SimConfig::scheme_label() const {
    std::string label = scheme_name(scheme);
    if (coded()) label += decision == Decision::hard ? "-hard" : "-soft";
    return label;
}

// ---------------------------------------------------------------------------
// Frame simulation

namespace {

struct FrameStats {
    uint64_t symbols = 0;
    uint64_t bits = 0;
    uint64_t symbol_errors = 0;
    uint64_t bit_errors_a = 0;  // uncoded / hard
    uint64_t bit_errors_b = 0;  // soft (coded schemes)
};

// Everything a frame needs, immutable across a point.
struct PointCtx {
    const SimConfig* cfg = nullptr;
    OfdmModem modem{64, 16};
    ConstellationTable tx_table = ConstellationTable::egim_4qam();  // egim schemes
    ConstellationTable det_table = ConstellationTable::egim_4qam();
    NoiseSpec noise;
    double scale = 1.0;  // policy scale on active symbols
    // coded schemes
    AutoencoderCodec auto_codec;
    BenchmarkCodec bench_codec;
    CVec coded_points;                 // detector candidates at unit channel
    std::vector<uint8_t> coded_packed; // candidate labels
    int coded_width = 0;
    const Trellis* trellis = nullptr;
};

PointCtx make_ctx(const SimConfig& cfg, double snr_db) {
    PointCtx ctx;
    ctx.cfg = &cfg;
    ctx.modem = OfdmModem(cfg.n_fft, cfg.cp_len);
    ctx.scale = policy_scale(cfg.policy);

    if (cfg.scheme == SchemeKind::egim4qam || cfg.scheme == SchemeKind::autoencoder) {
        ctx.tx_table = ConstellationTable::egim_4qam();
    } else if (cfg.scheme == SchemeKind::egim8psk) {
        ctx.tx_table = ConstellationTable::egim_8psk();
    }
    ctx.det_table = ctx.tx_table.scaled(ctx.scale);

    if (cfg.coded()) {
        // snr_db is Eb/N0: Eb follows from the average symbol energy under
        // this policy and the 3 flush bits per frame
        const double avg_sym_energy =
            cfg.scheme == SchemeKind::autoencoder ? 0.5 * ctx.scale * ctx.scale
                                                  : ctx.scale * ctx.scale;
        const double info_bits = static_cast<double>(cfg.n_fft - 3);
        const double eb = avg_sym_energy * static_cast<double>(cfg.n_fft) / info_bits;
        ctx.noise.es = ctx.scale * ctx.scale;  // active-symbol energy (MMSE reg)
        ctx.noise.n0 = eb * std::pow(10.0, -snr_db / 10.0);
        if (cfg.scheme == SchemeKind::autoencoder) {
            ctx.trellis = &ctx.auto_codec.trellis();
            ctx.coded_width = 3;
            for (size_t i = 0; i < ctx.det_table.size(); ++i) {
                ctx.coded_points.push_back(ctx.det_table.point(i));
                ctx.coded_packed.push_back(ctx.det_table.codeword(i).packed);
            }
        } else {
            ctx.trellis = &ctx.bench_codec.trellis();
            ctx.coded_width = 2;
            for (uint8_t v = 0; v < 4; ++v) {
                ctx.coded_points.push_back(payload_point(4, v) * ctx.scale);
                ctx.coded_packed.push_back(v);
            }
        }
    } else {
        // gamma_s = Es(active)/N0
        ctx.noise = NoiseSpec::from_snr_db(snr_db, ctx.scale * ctx.scale);
    }
    return ctx;
}

// shared channel leg: modulate, propagate, demodulate, (equalize)
CVec through_channel(const PointCtx& ctx, const CVec& freq, Rng& rng, bool equalize,
                     ChannelRealization* ch_out = nullptr) {
    const SimConfig& cfg = *ctx.cfg;
    const CVec time = ctx.modem.modulate(freq, cfg.policy);
    ChannelRealization ch = cfg.channel == ChannelKind::rayleigh
                                ? draw_channel(cfg.taps, cfg.n_fft, cfg.cp_len, rng)
                                : ChannelRealization::flat(cfg.n_fft);
    const CVec rx = propagate(time, ch, ctx.noise, rng);
    CVec rxf = ctx.modem.demodulate(rx);
    if (equalize && cfg.channel == ChannelKind::rayleigh)
        rxf = mmse_equalize(rxf, ch, ctx.noise);
    if (ch_out) *ch_out = std::move(ch);
    return rxf;
}

FrameStats sim_frame_uncoded_egim(const PointCtx& ctx, Rng& rng) {
    const SimConfig& cfg = *ctx.cfg;
    const int width = ctx.tx_table.codeword_width();
    const size_t n = static_cast<size_t>(cfg.n_fft);

    // supply the worst-case bit demand so frames never pad
    BitQueue queue(random_bits(rng, n * static_cast<size_t>(width)));
    const auto tx = stuff(queue, ctx.tx_table.modulation_order(), n);
    const CVec freq = map_codewords(tx.codewords, ctx.tx_table);
    const CVec eq = through_channel(ctx, freq, rng, true);

    FrameStats st;
    st.symbols = n;
    st.bits = n * static_cast<size_t>(width);
    for (size_t i = 0; i < n; ++i) {
        const Codeword det = ml_detect(eq[i], ctx.det_table);
        if (det.packed != tx.codewords[i].packed) {
            ++st.symbol_errors;
            st.bit_errors_a += popcount8(det.packed ^ tx.codewords[i].packed);
        }
    }
    return st;
}

FrameStats sim_frame_classical(const PointCtx& ctx, Rng& rng) {
    const SimConfig& cfg = *ctx.cfg;
    const GroupSpec& spec = cfg.group;
    const int groups = cfg.n_fft / spec.n;
    const size_t bits_per_frame =
        static_cast<size_t>(spec.bits_per_group()) * static_cast<size_t>(groups);

    const BitVec src = random_bits(rng, bits_per_frame);
    BitQueue queue(src);
    const CVec freq = classical_im_map(queue, spec, groups);
    const CVec eq = through_channel(ctx, freq, rng, true);

    FrameStats st;
    st.symbols = static_cast<uint64_t>(cfg.n_fft);
    st.bits = bits_per_frame;
    size_t bit_pos = 0;
    for (int g = 0; g < groups; ++g) {
        const auto dec = subblock_ml_detect(
            std::span<const cplx>(eq.data() + static_cast<size_t>(g) * spec.n,
                                  static_cast<size_t>(spec.n)),
            spec, ctx.scale);
        for (uint8_t b : dec.bits) {
            if (b != src[bit_pos]) ++st.bit_errors_a;
            ++bit_pos;
        }
        // rebuild the detected group to count per-subcarrier symbol errors
        const auto active = combination_unrank(dec.index_rank, spec.n, spec.k);
        const int bps = floor_log2(static_cast<uint64_t>(spec.mod_order));
        CVec rebuilt(static_cast<size_t>(spec.n), cplx(0, 0));
        for (int a = 0; a < spec.k; ++a) {
            uint8_t v = 0;
            for (int b = 0; b < bps; ++b)
                v = static_cast<uint8_t>((v << 1) |
                                         dec.bits[static_cast<size_t>(spec.p1() + a * bps + b)]);
            rebuilt[static_cast<size_t>(active[static_cast<size_t>(a)])] =
                payload_point(spec.mod_order, v);
        }
        for (int i = 0; i < spec.n; ++i)
            if (rebuilt[static_cast<size_t>(i)] != freq[static_cast<size_t>(g) * spec.n + i])
                ++st.symbol_errors;
    }
    return st;
}

FrameStats sim_frame_coded(const PointCtx& ctx, Rng& rng) {
    const SimConfig& cfg = *ctx.cfg;
    const size_t n = static_cast<size_t>(cfg.n_fft);
    const size_t n_info = n - 3;
    const BitVec src = random_bits(rng, n_info);

    std::vector<uint8_t> tx_packed;
    CVec freq;
    if (cfg.scheme == SchemeKind::autoencoder) {
        const auto cws = ctx.auto_codec.encode(src, true);
        freq = map_codewords(cws, ctx.tx_table);
        tx_packed.reserve(cws.size());
        for (const auto& cw : cws) tx_packed.push_back(cw.packed);
    } else {
        tx_packed = ctx.bench_codec.encode(src, true);
        freq = ctx.bench_codec.map(tx_packed);
    }

    ChannelRealization ch;
    const CVec rxf = through_channel(ctx, freq, rng, false, &ch);

    // perfect-CSI detection against per-subcarrier faded candidates
    const size_t npts = ctx.coded_points.size();
    CVec cand(npts);
    std::vector<uint8_t> hard(n);
    std::vector<std::vector<double>> llrs(n);
    FrameStats st;
    st.symbols = n;
    st.bits = n_info;
    for (size_t i = 0; i < n; ++i) {
        const cplx h = ch.freq_response[i];
        for (size_t p = 0; p < npts; ++p) cand[p] = ctx.coded_points[p] * h;
        const int idx = nearest_point(rxf[i], cand);
        hard[i] = ctx.coded_packed[static_cast<size_t>(idx)];
        if (hard[i] != tx_packed[i]) ++st.symbol_errors;
        auto& l = llrs[i];
        l.resize(static_cast<size_t>(ctx.coded_width));
        for (int b = 0; b < ctx.coded_width; ++b)
            l[static_cast<size_t>(b)] =
                llr_over_points(rxf[i], ctx.noise.n0, cand, ctx.coded_packed, ctx.coded_width, b);
    }

    const BitVec dec_hard = viterbi_hard(hard, *ctx.trellis, cfg.traceback, true);
    const BitVec dec_soft = viterbi_soft(llrs, *ctx.trellis, cfg.traceback, true);
    for (size_t i = 0; i < n_info; ++i) {
        if (dec_hard[i] != src[i]) ++st.bit_errors_a;
        if (dec_soft[i] != src[i]) ++st.bit_errors_b;
    }
    return st;
}

FrameStats sim_frame(const PointCtx& ctx, Rng& rng) {
    switch (ctx.cfg->scheme) {
        case SchemeKind::egim4qam:
        case SchemeKind::egim8psk:
            return sim_frame_uncoded_egim(ctx, rng);
        case SchemeKind::classical_im:
            return sim_frame_classical(ctx, rng);
        default:
            return sim_frame_coded(ctx, rng);
    }
}

constexpr uint64_t kChunk = 512;

// Runs frames in fixed chunks; worker threads stride inside a chunk, so
// the set of simulated frames (and their RNG streams) never depends on
// the worker count.
template <typename StopFn>
std::pair<std::vector<FrameStats>, uint64_t> run_point_frames(const PointCtx& ctx,
                                                              uint64_t point_idx, int workers,
                                                              StopFn stopped) {
    const SimConfig& cfg = *ctx.cfg;
    if (workers <= 0) workers = static_cast<int>(std::thread::hardware_concurrency());
    if (workers < 1) workers = 1;

    std::vector<FrameStats> acc(1);
    FrameStats total;
    uint64_t frames = 0;
    std::vector<FrameStats> slots(kChunk);
    while (frames < cfg.max_frames) {
        const uint64_t batch = std::min<uint64_t>(kChunk, cfg.max_frames - frames);
        const int nthreads = static_cast<int>(std::min<uint64_t>(batch, static_cast<uint64_t>(workers)));
        auto work = [&](int w) {
            for (uint64_t i = static_cast<uint64_t>(w); i < batch; i += static_cast<uint64_t>(nthreads)) {
                Rng rng = Rng::stream(cfg.seed, point_idx + 1, frames + i);
                slots[i] = sim_frame(ctx, rng);
            }
        };
        if (nthreads == 1) {
            work(0);
        } else {
            std::vector<std::thread> pool;
            pool.reserve(static_cast<size_t>(nthreads));
            for (int w = 0; w < nthreads; ++w) pool.emplace_back(work, w);
            for (auto& t : pool) t.join();
        }
        for (uint64_t i = 0; i < batch; ++i) {
            total.symbols += slots[i].symbols;
            total.bits += slots[i].bits;
            total.symbol_errors += slots[i].symbol_errors;
            total.bit_errors_a += slots[i].bit_errors_a;
            total.bit_errors_b += slots[i].bit_errors_b;
        }
        frames += batch;
        if (stopped(total)) break;
    }
    acc[0] = total;
    return {acc, frames};
}

}  // namespace

CodedPointStats run_coded_point(const SimConfig& cfg, double snr_db, int workers) {
    if (!cfg.coded()) throw std::invalid_argument("run_coded_point: scheme is not coded");
    const PointCtx ctx = make_ctx(cfg, snr_db);
    // the point index for the RNG stream must match run_sweep's
    uint64_t point_idx = 0;
    for (size_t i = 0; i < cfg.snr_db.size(); ++i)
        if (cfg.snr_db[i] == snr_db) point_idx = static_cast<uint64_t>(i);

    const auto stop = [&](const FrameStats& t) {
        const uint64_t sel = cfg.decision == Decision::hard ? t.bit_errors_a : t.bit_errors_b;
        return sel >= cfg.min_errors;
    };
    const auto [acc, frames] = run_point_frames(ctx, point_idx, workers, stop);
    CodedPointStats out;
    out.frames = frames;
    out.symbols = acc[0].symbols;
    out.bits = acc[0].bits;
    out.symbol_errors = acc[0].symbol_errors;
    out.bit_errors_hard = acc[0].bit_errors_a;
    out.bit_errors_soft = acc[0].bit_errors_b;
    return out;
}

SweepResult run_sweep(const SimConfig& cfg, int workers) {
    cfg.validate();
    SweepResult result;
    result.scheme = cfg.scheme_label();
    result.channel = channel_name(cfg.channel);
    result.policy = policy_name(cfg.policy);

    for (size_t p = 0; p < cfg.snr_db.size(); ++p) {
        const auto t0 = std::chrono::steady_clock::now();
        const PointCtx ctx = make_ctx(cfg, cfg.snr_db[p]);
        const auto stop = [&](const FrameStats& t) {
            if (cfg.coded()) {
                const uint64_t sel = cfg.decision == Decision::hard ? t.bit_errors_a : t.bit_errors_b;
                return sel >= cfg.min_errors;
            }
            return t.symbol_errors >= cfg.min_errors;
        };
        const auto [acc, frames] = run_point_frames(ctx, static_cast<uint64_t>(p), workers, stop);

        PointResult pr;
        pr.snr_db = cfg.snr_db[p];
        pr.frames = frames;
        pr.symbols = acc[0].symbols;
        pr.bits = acc[0].bits;
        pr.symbol_errors = acc[0].symbol_errors;
        pr.bit_errors = cfg.coded() && cfg.decision == Decision::soft ? acc[0].bit_errors_b
                                                                      : acc[0].bit_errors_a;
        pr.elapsed_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        result.points.push_back(pr);
    }
    return result;
}

// ---------------------------------------------------------------------------
// Desynchronization experiment

DesyncReport run_desync(const SimConfig& cfg, uint64_t trials) {
    if (cfg.scheme != SchemeKind::egim4qam && cfg.scheme != SchemeKind::autoencoder)
        throw std::invalid_argument("desync: scheme must be egim4qam or autoencoder");

    DesyncReport rep;
    rep.scheme = scheme_name(cfg.scheme);
    rep.trials = trials;

    const bool coded = cfg.scheme == SchemeKind::autoencoder;
    const size_t n_cw = coded ? 256 : 1024;
    const size_t n_info = coded ? n_cw - 3 : 0;
    AutoencoderCodec codec;
    const int mod_order = 4;

    double rate_sum = 0.0;

    auto flip_onoff = [&](uint8_t packed, int width, Rng& rng) -> uint8_t {
        if (packed == 0) {
            // off -> a uniformly chosen active codeword
            const uint8_t payload = static_cast<uint8_t>(rng.below(1ull << (width - 1)));
            return static_cast<uint8_t>((1u << (width - 1)) | payload);
        }
        return 0;
    };

    for (uint64_t trial = 0; trial < trials; ++trial) {
        Rng rng = Rng::stream(cfg.seed, 0xDE500 + (coded ? 1 : 0), trial);
        DesyncTrial t;
        if (!coded) {
            BitVec src = random_bits(rng, n_cw * 3);
            BitQueue queue(src);
            auto stuffed = stuff(queue, mod_order, n_cw);
            t.site = rng.below(n_cw);
            // bit position of the flipped codeword in the destuffed stream
            uint64_t pos = 0;
            for (uint64_t i = 0; i < t.site; ++i)
                pos += stuffed.codewords[i].index_bit() ? 3 : 1;
            stuffed.codewords[t.site].packed = flip_onoff(stuffed.codewords[t.site].packed, 3, rng);
            const BitVec out = destuff(stuffed.codewords, mod_order);
            const BitVec ref = destuff(stuff(BitQueue(src), mod_order, n_cw).codewords, mod_order);
            const size_t upto = std::min(out.size(), ref.size());
            uint64_t downstream = 0, down_errs = 0;
            for (size_t i = 0; i < upto; ++i) {
                if (out[i] != ref[i]) {
                    ++t.error_bits;
                    if (t.error_bits == 1) t.first_error = i;
                    t.last_error = i;
                }
                if (i >= pos) {
                    ++downstream;
                    if (out[i] != ref[i]) ++down_errs;
                }
            }
            t.downstream_rate = downstream ? static_cast<double>(down_errs) / downstream : 0.0;
            rate_sum += t.downstream_rate;
        } else {
            const BitVec src = random_bits(rng, n_info);
            auto cws = codec.encode(src, true);
            t.site = rng.below(n_cw);
            std::vector<uint8_t> packed(n_cw);
            for (size_t i = 0; i < n_cw; ++i) packed[i] = cws[i].packed;
            packed[t.site] = flip_onoff(packed[t.site], 3, rng);
            const BitVec dec = viterbi_hard(packed, codec.trellis(), cfg.traceback, true);
            for (size_t i = 0; i < n_info; ++i) {
                if (dec[i] != src[i]) {
                    ++t.error_bits;
                    if (t.error_bits == 1) t.first_error = i;
                    t.last_error = i;
                }
            }
        }
        if (t.error_bits) {
            ++rep.trials_with_errors;
            t.footprint = t.last_error - t.first_error + 1;
            rep.max_footprint = std::max(rep.max_footprint, t.footprint);
            rep.max_error_bits = std::max(rep.max_error_bits, t.error_bits);
            if (t.footprint > static_cast<uint64_t>(cfg.traceback)) ++rep.trials_over_traceback;
        }
        rep.per_trial.push_back(t);
    }
    if (!coded && rep.trials_with_errors)
        rep.mean_downstream_rate = rate_sum / static_cast<double>(trials);

    // no-injection control
    {
        Rng rng = Rng::stream(cfg.seed, 0xDE5FF, 0);
        if (!coded) {
            const BitVec src = random_bits(rng, n_cw * 3);
            const auto stuffed = stuff(BitQueue(src), mod_order, n_cw);
            const BitVec out = destuff(stuffed.codewords, mod_order);
            rep.control_clean = std::equal(out.begin(), out.begin() + static_cast<long>(stuffed.bits_consumed), src.begin());
        } else {
            const BitVec src = random_bits(rng, n_info);
            const auto cws = codec.encode(src, true);
            std::vector<uint8_t> packed(n_cw);
            for (size_t i = 0; i < n_cw; ++i) packed[i] = cws[i].packed;
            rep.control_clean = viterbi_hard(packed, codec.trellis(), cfg.traceback, true) == src;
        }
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Emission

namespace {

std::string format_double(const char* fmt, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, fmt, v);
    return buf;
}

}  // namespace

void emit_csv(const SweepResult& result, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("emit_csv: cannot open '" + path + "' for writing");
    out << "scheme,channel,policy,snr_db,frames,symbols,bits,symbol_errors,bit_errors,ser,ber\n";
    for (const auto& p : result.points) {
        out << result.scheme << ',' << result.channel << ',' << result.policy << ','
            << format_double("%g", p.snr_db) << ',' << p.frames << ',' << p.symbols << ','
            << p.bits << ',' << p.symbol_errors << ',' << p.bit_errors << ','
            << format_double("%.10e", p.ser()) << ',' << format_double("%.10e", p.ber()) << '\n';
    }
    if (!out) throw std::runtime_error("emit_csv: write failed for '" + path + "'");
}

SweepResult theory_curve(SchemeKind scheme, const std::vector<double>& snr_db) {
    if (scheme != SchemeKind::egim4qam && scheme != SchemeKind::egim8psk)
        throw std::invalid_argument("theory_curve: no closed form for this scheme");
    SweepResult r;
    r.scheme = scheme_name(scheme);
    r.channel = "rayleigh";
    r.policy = "theory";
    for (double db : snr_db) {
        PointResult p;
        p.snr_db = db;
        const double g = std::pow(10.0, db / 10.0);
        p.analytic_ser = scheme == SchemeKind::egim4qam ? ser_egim_4qam(g) : ser_egim_8psk(g);
        r.points.push_back(p);
    }
    return r;
}

std::vector<PlotSeries> csv_to_series(const std::string& path, const std::string& metric) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("csv_to_series: cannot open '" + path + "'");
    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error("csv_to_series: empty file " + path);
    std::vector<PlotSeries> series;
    auto find_series = [&](const std::string& label, bool line_style) -> PlotSeries& {
        for (auto& s : series)
            if (s.label == label) return s;
        series.push_back({label, {}, line_style});
        return series.back();
    };
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<std::string> f;
        std::stringstream ss(line);
        std::string tok;
        while (std::getline(ss, tok, ',')) f.push_back(tok);
        if (f.size() != 11) throw std::runtime_error("csv_to_series: malformed row in " + path);
        const std::string label = f[0] + "/" + f[1] + "/" + f[2];
        const double x = std::stod(f[3]);
        const double y = std::stod(metric == "ber" ? f[10] : f[9]);
        auto& s = find_series(label, f[2] == "theory");
        s.points.emplace_back(x, y);
    }
    return series;
}

}  // namespace egim
