#include <gtest/gtest.h>

#include <functional>
#include <random>

#include "decsau/attacks.hpp"
#include "decsau/error.hpp"
#include "decsau/formats.hpp"
#include "test_support.hpp"

using namespace decsau;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    ADD_FAILURE() << "no decsau::Error thrown";
    return ErrorCode::InvalidArgument;
}

}  // namespace

TEST(Hex, EncodeDecode) {
    EXPECT_EQ(to_hex(Bytes{0x00, 0xAB, 0x7f}), "00ab7f");
    EXPECT_EQ(from_hex("00AB7f"), (Bytes{0x00, 0xAB, 0x7F}));
    EXPECT_EQ(from_hex(""), Bytes{});
    EXPECT_EQ(code_of([] { from_hex("abc"); }), ErrorCode::InvalidArgument);
    EXPECT_EQ(code_of([] { from_hex("zz"); }), ErrorCode::InvalidArgument);
}

TEST(KeyText, RoundTripAndWhitespace) {
    const MasterKey mk = MasterKey::from_bytes(test::kCpaDemoKey);
    const std::string file = format_key_file(mk);
    EXPECT_EQ(file, "d6d0752a8580d93bd4ce20fa785d5ea0cd1d170d51b237e74052aa6ef17160ce\n");
    EXPECT_EQ(parse_key_text(file).bytes(), mk.bytes());
    EXPECT_EQ(parse_key_text("  D6D0752A8580D93BD4CE20FA785D5EA0CD1D170D51B237E74052AA6EF17160CE\r\n").bytes(),
              mk.bytes());
}

TEST(KeyText, Rejections) {
    EXPECT_EQ(code_of([] { parse_key_text("abcd"); }), ErrorCode::InvalidArgument);
    EXPECT_EQ(code_of([] { parse_key_text(std::string(64, 'g')); }), ErrorCode::InvalidArgument);
    EXPECT_EQ(code_of([] { parse_key_text(std::string(64, '0')); }), ErrorCode::DegenerateKey);
}

TEST(GoldenFile, ParseFormatRoundTrip) {
    const auto vectors = test::load_golden_vectors();
    ASSERT_GE(vectors.size(), 5u);
    const std::string text = format_golden_vectors(vectors);
    const auto again = parse_golden_vectors("# header\n\n" + text);
    ASSERT_EQ(again.size(), vectors.size());
    for (std::size_t i = 0; i < vectors.size(); ++i) {
        EXPECT_EQ(again[i].master_key, vectors[i].master_key);
        EXPECT_EQ(again[i].block_index, vectors[i].block_index);
        EXPECT_EQ(again[i].plain, vectors[i].plain);
        EXPECT_EQ(again[i].cipher, vectors[i].cipher);
    }
    EXPECT_EQ(code_of([] { parse_golden_vectors("aa, 1, bb\n"); }), ErrorCode::InvalidArgument);
}

TEST(EquivalentKeyText, Layout) {
    const EquivalentKey key({{Block{}, build_shuffle_map(Block{})}});
    EXPECT_EQ(format_equivalent_key(key),
              "1, " + std::string(64, '0') +
                  ", 1,3,5,7,9,11,13,15,17,19,21,23,25,27,29,31"
                  ", 2,4,6,8,10,12,14,16,18,20,22,24,26,28,30,32\n");
}

TEST(EquivalentKeyText, RoundTrip) {
    std::mt19937_64 rng(60);
    std::vector<EquivalentKeyEntry> entries;
    for (int i = 0; i < 9; ++i) {
        const Block k = test::random_block(rng);
        entries.push_back({k, build_shuffle_map(test::random_block(rng))});
    }
    const EquivalentKey parsed = parse_equivalent_key(format_equivalent_key(EquivalentKey(entries)));
    ASSERT_EQ(parsed.block_count(), entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) {
        EXPECT_EQ(parsed.entries()[i].key, entries[i].key);
        EXPECT_EQ(parsed.entries()[i].shuffle, entries[i].shuffle);
    }
}

TEST(EquivalentKeyText, Rejections) {
    const std::string line = format_equivalent_key(EquivalentKey({{Block{}, build_shuffle_map(Block{})}}));
    EXPECT_EQ(code_of([&] { parse_equivalent_key("2" + line.substr(1)); }), ErrorCode::InvalidArgument);
    EXPECT_EQ(code_of([&] { parse_equivalent_key(line.substr(0, line.size() - 4)); }), ErrorCode::InvalidArgument);
    std::string swapped = line;
    swapped.replace(swapped.find(", 1,3"), 5, ", 2,3");
    EXPECT_EQ(code_of([&] { parse_equivalent_key(swapped); }), ErrorCode::InvalidArgument);
}

TEST(KeyBlocksText, Layout) {
    const MasterKey mk = MasterKey::from_bytes(test::kCpaDemoKey);
    const auto chain = key_chain(mk, 2);
    EXPECT_EQ(format_key_blocks(chain), "1, 943db44f22bbe67a7107bb418c65201dc21935423329537d30a17c9a5c128bb2\n2, " +
                                            to_hex(chain[1].bytes) + "\n");
}
