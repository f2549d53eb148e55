// decsau: command-line front end over the C library interface.
//
// Exit codes: 0 success, 1 data error (bad key, malformed file, failed
// attack, I/O), 2 usage error.

#include <unistd.h>

#include <cerrno>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "decsau/decsau.h"

namespace {

namespace fs = std::filesystem;

struct DataError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void check(decsau_status status) {
    if (status != DECSAU_OK) {
        throw DataError(std::string(decsau_status_name(status)) + ": " + decsau_last_error_message());
    }
}

template <auto Free>
struct Deleter {
    template <typename T>
    void operator()(T* p) const { Free(p); }
};

using Key = std::unique_ptr<decsau_key, Deleter<decsau_key_free>>;
using Clip = std::unique_ptr<decsau_clip, Deleter<decsau_clip_free>>;
using Container = std::unique_ptr<decsau_container, Deleter<decsau_container_free>>;
using OracleHandle = std::unique_ptr<decsau_oracle, Deleter<decsau_oracle_free>>;
using EqKey = std::unique_ptr<decsau_eqkey, Deleter<decsau_eqkey_free>>;

class Buffer {
public:
    Buffer() = default;
    Buffer(const Buffer&) = delete;
    Buffer& operator=(const Buffer&) = delete;
    ~Buffer() { decsau_buffer_free(&raw_); }

    decsau_buffer* out() { return &raw_; }
    const uint8_t* data() const { return raw_.data; }
    size_t size() const { return raw_.size; }
    std::string_view text() const { return {reinterpret_cast<const char*>(raw_.data), raw_.size}; }

private:
    decsau_buffer raw_{nullptr, 0};
};

std::vector<uint8_t> read_all(std::istream& in) {
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::vector<uint8_t> read_file(const std::string& path) {
    if (path == "-") return read_all(std::cin);
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("Io: cannot open " + path);
    return read_all(in);
}

void write_file(const std::string& path, const uint8_t* data, size_t size) {
    if (path == "-") {
        if (size > 0 && std::fwrite(data, 1, size, stdout) != size) throw DataError("Io: short write to stdout");
        std::fflush(stdout);
        return;
    }
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw DataError("Io: cannot create " + path);
    out.write(reinterpret_cast<const char*>(data), static_cast<std::streamsize>(size));
    if (!out) throw DataError("Io: write failed for " + path);
}

void write_text(const std::string& path, std::string_view text) {
    write_file(path, reinterpret_cast<const uint8_t*>(text.data()), text.size());
}

// HEX inline, or @FILE holding the key file.
Key load_key(const std::string& spec) {
    std::string text = spec;
    if (!spec.empty() && spec.front() == '@') {
        const auto bytes = read_file(spec.substr(1));
        text.assign(bytes.begin(), bytes.end());
    }
    decsau_key* key = nullptr;
    check(decsau_key_from_hex(text.c_str(), &key));
    return Key(key);
}

Clip load_wav(const std::string& path) {
    const auto bytes = read_file(path);
    decsau_clip* clip = nullptr;
    check(decsau_clip_parse_wav(bytes.data(), bytes.size(), &clip));
    return Clip(clip);
}

void save_wav(const std::string& path, uint32_t sample_rate, const uint8_t* samples, size_t size) {
    decsau_clip* raw = nullptr;
    check(decsau_clip_create(sample_rate, samples, size, &raw));
    Clip clip(raw);
    Buffer wav;
    check(decsau_clip_write_wav(clip.get(), wav.out()));
    write_file(path, wav.data(), wav.size());
}

Container load_container(const std::string& path) {
    const auto bytes = read_file(path);
    decsau_container* c = nullptr;
    check(decsau_container_read(bytes.data(), bytes.size(), &c));
    return Container(c);
}

// External oracle: the command reads raw bytes on stdin and answers on stdout.
struct CommandOracle {
    std::string command;

    static int transform(void* self, const uint8_t* input, size_t size, uint8_t* output) {
        return static_cast<CommandOracle*>(self)->run(input, size, output) ? 0 : 1;
    }

    bool run(const uint8_t* input, size_t size, uint8_t* output) const {
        char path[] = "/tmp/decsau-oracle-XXXXXX";
        const int fd = ::mkstemp(path);
        if (fd < 0) {
            std::cerr << "oracle: cannot create temporary file: " << std::strerror(errno) << "\n";
            return false;
        }
        const bool wrote = size == 0 || ::write(fd, input, size) == static_cast<ssize_t>(size);
        ::close(fd);
        bool ok = false;
        if (wrote) {
            const std::string line = command + " < '" + path + "'";
            if (FILE* pipe = ::popen(line.c_str(), "r")) {
                std::vector<uint8_t> reply;
                uint8_t chunk[4096];
                size_t got = 0;
                while ((got = std::fread(chunk, 1, sizeof chunk, pipe)) > 0) {
                    reply.insert(reply.end(), chunk, chunk + got);
                }
                const int status = ::pclose(pipe);
                if (status != 0) {
                    std::cerr << "oracle: command exited with status " << status << "\n";
                } else if (reply.size() != size) {
                    std::cerr << "oracle: expected " << size << " bytes, got " << reply.size() << "\n";
                } else {
                    std::copy(reply.begin(), reply.end(), output);
                    ok = true;
                }
            }
        }
        ::unlink(path);
        return ok;
    }
};

struct OracleOptions {
    std::string sim_key;
    std::string command;
};

void add_oracle_options(CLI::App* cmd, OracleOptions& o) {
    auto* group = cmd->add_option_group("oracle", "where chosen queries are sent");
    group->add_option("--sim-key", o.sim_key, "simulate the oracle in-process with this key (HEX or @FILE)");
    group->add_option("--oracle-cmd", o.command,
                      "shell command acting as the oracle (raw bytes on stdin/stdout)");
    group->require_option(1);
}

struct BoundOracle {
    OracleHandle handle;
    std::unique_ptr<CommandOracle> command;
};

BoundOracle bind_oracle(const OracleOptions& o, decsau_oracle_kind kind) {
    BoundOracle bound;
    decsau_oracle* raw = nullptr;
    if (!o.sim_key.empty()) {
        Key key = load_key(o.sim_key);
        check(decsau_oracle_simulated(kind, key.get(), &raw));
    } else {
        bound.command = std::make_unique<CommandOracle>(CommandOracle{o.command});
        check(decsau_oracle_from_callback(kind, &CommandOracle::transform, bound.command.get(), &raw));
    }
    bound.handle.reset(raw);
    return bound;
}

void report_queries(const decsau_oracle* oracle) {
    std::cout << "oracle queries: " << decsau_oracle_query_count(oracle) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"DECS-AU audio cipher: encryption, decryption and attacks"};
    app.require_subcommand(1);

    std::string key_spec, in_path, out_path, wav_out, target, eqkey_out, out_dir;
    bool raw_mode = false;
    std::size_t n_blocks = 0;
    OracleOptions oracle_opts;

    auto* keygen = app.add_subcommand("keygen", "generate a random 32-byte master key");
    keygen->add_option("--out", out_path, "key file (default: standard output)");

    auto* encrypt = app.add_subcommand("encrypt", "encrypt the samples of an 8-bit mono WAV");
    encrypt->add_option("--key", key_spec, "master key as HEX or @FILE")->required();
    encrypt->add_option("--in", in_path, "input WAV ('-' for standard input)");
    encrypt->add_option("--out", out_path, "output .decsau container ('-' for standard output)");
    encrypt->add_option("--wav-out", wav_out, "also write the cipher bytes as a playable WAV");
    encrypt->add_flag("--raw", raw_mode, "raw bytes in, raw zero-padded cipher bytes out");

    auto* decrypt = app.add_subcommand("decrypt", "decrypt a .decsau container to WAV");
    decrypt->add_option("--key", key_spec, "master key as HEX or @FILE")->required();
    decrypt->add_option("--in", in_path, "input .decsau container ('-' for standard input)");
    decrypt->add_option("--out", out_path, "output WAV ('-' for standard output)");
    decrypt->add_flag("--raw", raw_mode, "raw block-aligned cipher bytes in, raw bytes out");

    auto* cpa = app.add_subcommand("attack-cpa", "differential chosen-plaintext attack (2 queries)");
    add_oracle_options(cpa, oracle_opts);
    cpa->add_option("--target", target, "ciphertext container to break")->required();
    cpa->add_option("--out", out_path, "recovered WAV")->required();
    cpa->add_option("--dump-eqkey", eqkey_out, "write the recovered equivalent key");

    auto* cca = app.add_subcommand("attack-cca", "chosen-ciphertext key block recovery (1 query)");
    add_oracle_options(cca, oracle_opts);
    cca->add_option("--blocks", n_blocks, "number of key blocks to expose")->required()->check(CLI::PositiveNumber);
    cca->add_option("--out", out_path, "key block listing")->required();

    auto* cycle = app.add_subcommand("attack-cycle", "cycle attack by re-encryption (3 queries)");
    add_oracle_options(cycle, oracle_opts);
    cycle->add_option("--target", target, "ciphertext container to break")->required();
    cycle->add_option("--out", out_path, "recovered WAV")->required();

    auto* analyze = app.add_subcommand("analyze", "time/spectrum/statistics CSVs for a WAV");
    analyze->add_option("--in", in_path, "input WAV")->required();
    analyze->add_option("--out-dir", out_dir, "directory for time.csv, spectrum.csv, stats.csv")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (*keygen) {
            decsau_key* raw = nullptr;
            check(decsau_key_generate(&raw));
            Key key(raw);
            char hex[DECSAU_KEY_HEX_SIZE];
            check(decsau_key_to_hex(key.get(), hex));
            write_text(out_path.empty() ? "-" : out_path, std::string(hex) + "\n");
        } else if (*encrypt) {
            Key key = load_key(key_spec);
            if (raw_mode) {
                const auto plain = read_file(in_path.empty() ? "-" : in_path);
                Buffer cipher;
                check(decsau_encrypt(key.get(), plain.data(), plain.size(), cipher.out()));
                write_file(out_path.empty() ? "-" : out_path, cipher.data(), cipher.size());
            } else {
                if (in_path.empty() || out_path.empty()) throw UsageError("encrypt needs --in and --out");
                Clip clip = load_wav(in_path);
                size_t n = 0;
                const uint8_t* samples = decsau_clip_samples(clip.get(), &n);
                const uint32_t rate = decsau_clip_sample_rate(clip.get());
                Buffer cipher;
                check(decsau_encrypt(key.get(), samples, n, cipher.out()));
                decsau_container* raw = nullptr;
                check(decsau_container_create(n, rate, cipher.data(), cipher.size(), &raw));
                Container container(raw);
                Buffer file;
                check(decsau_container_write(container.get(), file.out()));
                write_file(out_path, file.data(), file.size());
                if (!wav_out.empty()) save_wav(wav_out, rate, cipher.data(), cipher.size());
            }
        } else if (*decrypt) {
            Key key = load_key(key_spec);
            if (raw_mode) {
                const auto cipher = read_file(in_path.empty() ? "-" : in_path);
                Buffer plain;
                check(decsau_decrypt(key.get(), cipher.data(), cipher.size(), cipher.size(), plain.out()));
                write_file(out_path.empty() ? "-" : out_path, plain.data(), plain.size());
            } else {
                if (in_path.empty() || out_path.empty()) throw UsageError("decrypt needs --in and --out");
                Container container = load_container(in_path);
                size_t n = 0;
                const uint8_t* payload = decsau_container_payload(container.get(), &n);
                Buffer plain;
                check(decsau_decrypt(key.get(), payload, n,
                                     decsau_container_original_length(container.get()), plain.out()));
                save_wav(out_path, decsau_container_sample_rate(container.get()), plain.data(), plain.size());
            }
        } else if (*cpa) {
            BoundOracle oracle = bind_oracle(oracle_opts, DECSAU_ORACLE_ENCRYPT);
            Container container = load_container(target);
            size_t n = 0;
            const uint8_t* payload = decsau_container_payload(container.get(), &n);
            decsau_eqkey* raw = nullptr;
            Buffer plain;
            check(decsau_attack_cpa(oracle.handle.get(), payload, n, &raw, plain.out()));
            EqKey eqkey(raw);
            report_queries(oracle.handle.get());
            std::cout << "blocks recovered: " << decsau_eqkey_block_count(eqkey.get()) << "\n";
            const auto length = static_cast<size_t>(decsau_container_original_length(container.get()));
            save_wav(out_path, decsau_container_sample_rate(container.get()), plain.data(), length);
            if (!eqkey_out.empty()) {
                Buffer dump;
                check(decsau_eqkey_dump(eqkey.get(), dump.out()));
                write_text(eqkey_out, dump.text());
            }
        } else if (*cca) {
            BoundOracle oracle = bind_oracle(oracle_opts, DECSAU_ORACLE_DECRYPT);
            Buffer keys;
            check(decsau_attack_cca(oracle.handle.get(), n_blocks, keys.out()));
            report_queries(oracle.handle.get());
            Buffer listing;
            check(decsau_format_key_blocks(keys.data(), keys.size(), listing.out()));
            write_text(out_path, listing.text());
        } else if (*cycle) {
            BoundOracle oracle = bind_oracle(oracle_opts, DECSAU_ORACLE_ENCRYPT);
            Container container = load_container(target);
            size_t n = 0;
            const uint8_t* payload = decsau_container_payload(container.get(), &n);
            Buffer plain;
            check(decsau_attack_cycle(oracle.handle.get(), payload, n, plain.out()));
            report_queries(oracle.handle.get());
            const auto length = static_cast<size_t>(decsau_container_original_length(container.get()));
            save_wav(out_path, decsau_container_sample_rate(container.get()), plain.data(), length);
        } else if (*analyze) {
            Clip clip = load_wav(in_path);
            size_t n = 0;
            const uint8_t* samples = decsau_clip_samples(clip.get(), &n);
            const uint32_t rate = decsau_clip_sample_rate(clip.get());
            std::error_code ec;
            fs::create_directories(out_dir, ec);
            if (ec) throw DataError("Io: cannot create " + out_dir + ": " + ec.message());
            const std::pair<decsau_csv_kind, const char*> outputs[] = {
                {DECSAU_CSV_TIME, "time.csv"},
                {DECSAU_CSV_SPECTRUM, "spectrum.csv"},
                {DECSAU_CSV_STATS, "stats.csv"},
            };
            for (const auto& [kind, name] : outputs) {
                Buffer csv;
                check(decsau_analysis_csv(samples, n, rate, kind, csv.out()));
                write_text((fs::path(out_dir) / name).string(), csv.text());
            }
        }
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
