// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.
#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "decsau/attacks.hpp"
#include "decsau/audio.hpp"
#include "decsau/cipher.hpp"
#include "decsau/dna.hpp"
#include "decsau/error.hpp"
#include "decsau/metrics.hpp"
#include "decsau/shuffle.hpp"
#include "test_support.hpp"

using namespace decsau;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

Outcome dna_xor_equivalence() {
    std::size_t failures = 0;
    std::size_t checked = 0;
    for (int r = 1; r <= 8; ++r) {
        const Rule rule(r);
        for (int a = 0; a < 256; ++a) {
            const auto qa = dna_encode(static_cast<std::uint8_t>(a), rule);
            for (int b = 0; b < 256; ++b) {
                const auto qb = dna_encode(static_cast<std::uint8_t>(b), rule);
                if (dna_decode(dna_xor(qa, qb, rule), rule) != (a ^ b)) ++failures;
                ++checked;
            }
        }
    }
    return {failures == 0, std::to_string(checked) + " triples, " + std::to_string(failures) + " failures"};
}

Outcome shuffle_involution() {
    std::mt19937_64 rng(1001);
    std::size_t failures = 0;
    for (int trial = 0; trial < 10000; ++trial) {
        const Block key = test::random_block(rng);
        const ShuffleMap m = build_shuffle_map(key);
        const Block x = test::random_block(rng);
        bool ok = apply_shuffle(apply_shuffle(x, m), m) == x;
        std::array<bool, 33> seen{};
        for (auto p : m.rc()) {
            ok = ok && p % 2 == 1 && !seen[p];
            seen[p] = true;
        }
        for (auto p : m.lc()) {
            ok = ok && p % 2 == 0 && p >= 2 && !seen[p];
            seen[p] = true;
        }
        for (std::size_t p = 1; p <= 32; ++p) ok = ok && seen[p] && m.image(m.image(p)) == p;
        if (!ok) ++failures;
    }
    return {failures == 0, "10000 key blocks, " + std::to_string(failures) + " failures"};
}

Outcome cycle_attack_recovers() {
    const MasterKey mk = MasterKey::from_bytes(test::kCycleDemoKey);
    bool ok = true;
    std::size_t fixtures = 0;
    bool short_cycles_fail = false;
    const std::vector<Bytes> payloads = {test::demo_clip().samples,
                                         synthesize_sine(700.0, 8000, 8000, 100).samples};
    for (const Bytes& plain : payloads) {
        const Bytes target = encrypt_stream(mk, plain).data;
        auto oracle = EncryptionOracle::simulated(mk);
        const Bytes recovered = cycle_attack(oracle, target);
        ok = ok && oracle.query_count() == 3 &&
             Bytes(recovered.begin(), recovered.begin() + static_cast<std::ptrdiff_t>(plain.size())) == plain;

        Bytes padded = plain;
        padded.resize(target.size(), 0);
        auto probe = EncryptionOracle::simulated(mk);
        const Bytes once = probe.query(target);
        const Bytes twice = probe.query(once);
        if (once != padded && twice != padded) short_cycles_fail = true;
        ++fixtures;
    }

    std::mt19937_64 rng(1003);
    std::size_t random_failures = 0;
    for (int trial = 0; trial < 100; ++trial) {
        const MasterKey k = test::random_master_key(rng);
        const Bytes plain = test::random_bytes(rng, 32 * (1 + rng() % 64));
        auto oracle = EncryptionOracle::simulated(k);
        if (cycle_attack(oracle, encrypt_stream(k, plain).data) != plain || oracle.query_count() != 3) {
            ++random_failures;
        }
    }
    return {ok && short_cycles_fail && random_failures == 0,
            std::to_string(fixtures) + " demo fixtures, 100 random keys (" + std::to_string(random_failures) +
                " failures), 1-2 re-encryptions recover: " + (short_cycles_fail ? "no" : "yes")};
}

Outcome differential_cpa_on_sine() {
    const MasterKey mk = MasterKey::from_bytes(test::kCpaDemoKey);
    const AudioClip sine = synthesize_sine(700.0, 8000, 8000, 100);
    const ByteStream target = encrypt_stream(mk, sine.samples);
    auto oracle = EncryptionOracle::simulated(mk);
    const CpaResult result = differential_cpa(oracle, target.data);

    const Bytes recovered(result.plaintext.begin(), result.plaintext.begin() + static_cast<std::ptrdiff_t>(sine.samples.size()));
    const bool exact = recovered == sine.samples;
    const Spectrum spectrum = magnitude_spectrum(recovered, sine.sample_rate);
    const bool peak = spectrum.peak_bin() == static_cast<std::size_t>(std::lround(700.0 / spectrum.bin_hz));

    const auto chain = key_chain(mk, result.key.block_count());
    bool white_box = chain.size() == target.data.size() / kBlockSize;
    for (std::size_t i = 0; white_box && i < chain.size(); ++i) {
        white_box = result.key.entries()[i].key == chain[i].bytes &&
                    result.key.entries()[i].shuffle == build_shuffle_map(chain[i].bytes);
    }
    const std::size_t queries = oracle.query_count();
    return {queries == 2 && exact && peak && white_box,
            std::to_string(queries) + " queries, " + std::to_string(chain.size()) + " blocks, byte-exact " +
                (exact ? "yes" : "no") + ", peak " + format_real(spectrum.peak_hz()) + " Hz, chain match " +
                (white_box ? "yes" : "no")};
}

Outcome chosen_ciphertext() {
    std::mt19937_64 rng(1005);
    const MasterKey mk = test::random_master_key(rng);
    bool ok = true;
    std::string detail;
    for (std::size_t n : {1u, 4u, 16u}) {
        for (const MasterKey& k : {MasterKey::from_bytes(test::kCpaDemoKey), mk}) {
            auto oracle = DecryptionOracle::simulated(k);
            const auto keys = chosen_ciphertext_attack(oracle, n);
            ok = ok && oracle.query_count() == 1 && keys == key_chain(k, n);
        }
        detail += "N=" + std::to_string(n) + " ";
    }
    return {ok, detail + "one query each, white-box match " + (ok ? "yes" : "no")};
}

Outcome key_chain_extension() {
    std::mt19937_64 rng(1006);
    std::size_t failures = 0;
    for (int trial = 0; trial < 100; ++trial) {
        const MasterKey mk = test::random_master_key(rng);
        const auto chain = key_chain(mk, 8);
        const auto extended = extend_key_chain(chain[0].bytes, mk.stream(), 8);
        bool ok = extended.size() == 8;
        for (std::size_t i = 0; ok && i < 8; ++i) ok = extended[i] == chain[i].bytes;
        if (!ok) ++failures;
    }
    return {failures == 0, "100 master keys, n=8, " + std::to_string(failures) + " failures"};
}

Outcome stream_round_trip() {
    std::mt19937_64 rng(1007);
    std::size_t failures = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        const MasterKey mk = test::random_master_key(rng);
        const Bytes plain = test::random_bytes(rng, rng() % 4097);
        if (decrypt_stream(mk, encrypt_stream(mk, plain)) != plain) ++failures;
    }
    return {failures == 0, "1000 pairs, " + std::to_string(failures) + " failures"};
}

Outcome effective_cipher() {
    std::mt19937_64 rng(1008);
    std::size_t failures = 0;
    for (int trial = 0; trial < 10000; ++trial) {
        const Block b = test::random_block(rng);
        const KeyBlock k = test::random_key_block(rng);
        const ChaoticStream s = test::random_stream(rng);
        if (encrypt_block(b, k, s) != apply_shuffle(xor_blocks(b, k.bytes), build_shuffle_map(k.bytes))) {
            ++failures;
        }
    }
    return {failures == 0, "10000 blocks, " + std::to_string(failures) + " failures"};
}

Outcome x0_bound() {
    const double bound = 142800.0 / 2097152.0;
    std::mt19937_64 rng(1009);
    std::size_t failures = 0;
    for (int trial = 0; trial < 10000; ++trial) {
        const Block key = test::random_block(rng);
        const bool zero = key == Block{};
        try {
            const double x0 = derive_x0(key);
            if (zero || !(x0 > 0.0 && x0 <= bound)) ++failures;
        } catch (const Error&) {
            if (!zero) ++failures;
        }
    }
    Block ff{};
    ff.fill(0xFF);
    const bool max_hit = derive_x0(ff) == bound;
    bool rejected = false;
    try {
        MasterKey::from_bytes(Block{});
    } catch (const Error& e) {
        rejected = e.code() == ErrorCode::DegenerateKey;
    }
    return {failures == 0 && max_hit && rejected,
            "10000 keys, " + std::to_string(failures) + " out of bound, max attained " + (max_hit ? "yes" : "no") +
                ", all-zero rejected " + (rejected ? "yes" : "no")};
}

Outcome golden_vectors() {
    const auto vectors = test::load_golden_vectors();
    std::size_t failures = 0;
    for (const auto& v : vectors) {
        const MasterKey mk = MasterKey::from_bytes(v.master_key);
        const KeyBlock k = key_chain(mk, v.block_index).back();
        const Block c = encrypt_block(v.plain, k, mk.stream());
        if (c != v.cipher || decrypt_block(c, k, mk.stream()) != v.plain) ++failures;
    }
    return {vectors.size() >= 5 && failures == 0,
            std::to_string(vectors.size()) + " vectors, " + std::to_string(failures) + " mismatches"};
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"AC1 DNA XOR equals bitwise XOR", dna_xor_equivalence},
        {"AC2 shuffle is a parity involution", shuffle_involution},
        {"AC3 cycle attack recovers after 3 re-encryptions", cycle_attack_recovers},
        {"AC4 differential CPA on 700 Hz sine", differential_cpa_on_sine},
        {"AC5 chosen-ciphertext attack exposes key chain", chosen_ciphertext},
        {"AC6 key chain extends from K1", key_chain_extension},
        {"AC7 stream round trip", stream_round_trip},
        {"AC8 effective cipher is shuffled XOR", effective_cipher},
        {"AC9 initial condition bound", x0_bound},
        {"AC10 golden vectors", golden_vectors},
    };
    int failed = 0;
    for (const auto& [name, run] : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome outcome;
        try {
            outcome = run();
        } catch (const std::exception& e) {
            outcome = {false, std::string("exception: ") + e.what()};
        }
        const double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("%s %s: %s (%.2f s)\n", outcome.pass ? "PASS" : "FAIL", name.c_str(), outcome.detail.c_str(),
                    seconds);
        if (!outcome.pass) ++failed;
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
