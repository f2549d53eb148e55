/*
 * decsau.h - C interface to the DECS-AU audio block cipher and its attacks.
 *
 * Every fallible function returns a decsau_status. On failure the message of
 * the most recent error on the calling thread is available through
 * decsau_last_error_message(). Objects are opaque handles released with the
 * matching *_free function; freeing NULL is a no-op. Byte results are
 * returned in a decsau_buffer owned by the caller (release with
 * decsau_buffer_free). Text results are additionally NUL-terminated.
 */
#ifndef DECSAU_DECSAU_H
#define DECSAU_DECSAU_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(DECSAU_BUILDING_LIBRARY)
#    define DECSAU_API __declspec(dllexport)
#  else
#    define DECSAU_API __declspec(dllimport)
#  endif
#else
#  define DECSAU_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

#define DECSAU_BLOCK_SIZE 32
#define DECSAU_KEY_SIZE 32
/* 64 hex digits plus the terminating NUL. */
#define DECSAU_KEY_HEX_SIZE 65

typedef enum decsau_status {
    DECSAU_OK = 0,
    DECSAU_ERR_INVALID_ARGUMENT = 1,
    DECSAU_ERR_DEGENERATE_KEY = 2,
    DECSAU_ERR_DOMAIN = 3,
    DECSAU_ERR_MALFORMED_STREAM = 4,
    DECSAU_ERR_LENGTH_MISMATCH = 5,
    DECSAU_ERR_INCONSISTENT_DELTA = 6,
    DECSAU_ERR_UNSUPPORTED_FORMAT = 7,
    DECSAU_ERR_MALFORMED_RIFF = 8,
    DECSAU_ERR_BAD_MAGIC = 9,
    DECSAU_ERR_LENGTH_INCONSISTENCY = 10,
    DECSAU_ERR_ORACLE = 11,
    DECSAU_ERR_IO = 12,
    DECSAU_ERR_NO_MEMORY = 13,
    DECSAU_ERR_INTERNAL = 14
} decsau_status;

DECSAU_API const char* decsau_version(void);
/* Stable identifier such as "DegenerateKey"; never NULL. */
DECSAU_API const char* decsau_status_name(decsau_status status);
/* Message of the last failure on this thread, "" if none. */
DECSAU_API const char* decsau_last_error_message(void);

typedef struct decsau_buffer {
    uint8_t* data;
    size_t size;
} decsau_buffer;

DECSAU_API void decsau_buffer_free(decsau_buffer* buffer);

/* ---- keys and the cipher ------------------------------------------------ */

typedef struct decsau_key decsau_key;

DECSAU_API decsau_status decsau_key_from_bytes(const uint8_t* bytes, size_t size, decsau_key** out);
/* 64 hex digits, either case; surrounding whitespace is ignored. */
DECSAU_API decsau_status decsau_key_from_hex(const char* text, decsau_key** out);
/* Fresh random key from the system entropy source; never the all-zero key. */
DECSAU_API decsau_status decsau_key_generate(decsau_key** out);
/* Writes 64 lowercase hex digits and a NUL. */
DECSAU_API decsau_status decsau_key_to_hex(const decsau_key* key, char out[DECSAU_KEY_HEX_SIZE]);
DECSAU_API void decsau_key_free(decsau_key* key);

/* Zero-pads to a whole number of blocks; cipher_out->size is the padded length. */
DECSAU_API decsau_status decsau_encrypt(const decsau_key* key, const uint8_t* plain, size_t size,
                                        decsau_buffer* cipher_out);
/* size must be block-aligned and original_length must pad to exactly size. */
DECSAU_API decsau_status decsau_decrypt(const decsau_key* key, const uint8_t* cipher, size_t size,
                                        uint64_t original_length, decsau_buffer* plain_out);

/* ---- audio and the cipher container ------------------------------------- */

typedef struct decsau_clip decsau_clip;

/* Mono unsigned 8-bit PCM only. */
DECSAU_API decsau_status decsau_clip_parse_wav(const uint8_t* bytes, size_t size, decsau_clip** out);
DECSAU_API decsau_status decsau_clip_create(uint32_t sample_rate, const uint8_t* samples, size_t size,
                                            decsau_clip** out);
DECSAU_API decsau_status decsau_synthesize_sine(double freq_hz, uint32_t sample_rate, size_t n_samples,
                                                int amplitude, decsau_clip** out);
DECSAU_API uint32_t decsau_clip_sample_rate(const decsau_clip* clip);
DECSAU_API const uint8_t* decsau_clip_samples(const decsau_clip* clip, size_t* size);
DECSAU_API decsau_status decsau_clip_write_wav(const decsau_clip* clip, decsau_buffer* out);
DECSAU_API void decsau_clip_free(decsau_clip* clip);

typedef struct decsau_container decsau_container;

DECSAU_API decsau_status decsau_container_create(uint64_t original_length, uint32_t sample_rate,
                                                 const uint8_t* payload, size_t size,
                                                 decsau_container** out);
DECSAU_API decsau_status decsau_container_read(const uint8_t* bytes, size_t size, decsau_container** out);
DECSAU_API decsau_status decsau_container_write(const decsau_container* container, decsau_buffer* out);
DECSAU_API uint64_t decsau_container_original_length(const decsau_container* container);
DECSAU_API uint32_t decsau_container_sample_rate(const decsau_container* container);
DECSAU_API const uint8_t* decsau_container_payload(const decsau_container* container, size_t* size);
DECSAU_API void decsau_container_free(decsau_container* container);

/* ---- oracles ------------------------------------------------------------- */

typedef enum decsau_oracle_kind {
    DECSAU_ORACLE_ENCRYPT = 0,
    DECSAU_ORACLE_DECRYPT = 1
} decsau_oracle_kind;

/*
 * Black-box transform: read size bytes from input and write exactly size
 * bytes to output. Return 0 on success; any other value aborts the attack
 * with DECSAU_ERR_ORACLE.
 */
typedef int (*decsau_transform_fn)(void* user_data, const uint8_t* input, size_t size, uint8_t* output);

typedef struct decsau_oracle decsau_oracle;

DECSAU_API decsau_status decsau_oracle_from_callback(decsau_oracle_kind kind, decsau_transform_fn fn,
                                                     void* user_data, decsau_oracle** out);
/* In-process oracle holding a private copy of the key. */
DECSAU_API decsau_status decsau_oracle_simulated(decsau_oracle_kind kind, const decsau_key* key,
                                                 decsau_oracle** out);
DECSAU_API decsau_oracle_kind decsau_oracle_get_kind(const decsau_oracle* oracle);
DECSAU_API size_t decsau_oracle_query_count(const decsau_oracle* oracle);
DECSAU_API void decsau_oracle_free(decsau_oracle* oracle);

/* ---- attacks ------------------------------------------------------------- */

/* Per-block (key block, shuffle map) material recovered by the chosen-plaintext attack. */
typedef struct decsau_eqkey decsau_eqkey;

/*
 * Differential chosen-plaintext attack: two queries to an encryption oracle.
 * Either output pointer may be NULL when that result is not wanted.
 */
DECSAU_API decsau_status decsau_attack_cpa(decsau_oracle* oracle, const uint8_t* target, size_t size,
                                           decsau_eqkey** eqkey_out, decsau_buffer* plain_out);
/* One all-zero ciphertext to a decryption oracle; returns K_1..K_n concatenated. */
DECSAU_API decsau_status decsau_attack_cca(decsau_oracle* oracle, size_t n_blocks,
                                           decsau_buffer* key_blocks_out);
/* Three re-encryptions of the target through an encryption oracle. */
DECSAU_API decsau_status decsau_attack_cycle(decsau_oracle* oracle, const uint8_t* target, size_t size,
                                             decsau_buffer* plain_out);

DECSAU_API size_t decsau_eqkey_block_count(const decsau_eqkey* eqkey);
DECSAU_API decsau_status decsau_eqkey_decrypt(const decsau_eqkey* eqkey, const uint8_t* cipher,
                                              size_t size, decsau_buffer* plain_out);
/* Text dump, one line per block: `index, key_hex, rc_csv, lc_csv`. */
DECSAU_API decsau_status decsau_eqkey_dump(const decsau_eqkey* eqkey, decsau_buffer* text_out);
DECSAU_API decsau_status decsau_eqkey_parse(const char* text, size_t size, decsau_eqkey** out);
DECSAU_API void decsau_eqkey_free(decsau_eqkey* eqkey);

/* Text, one line per block: `index, key_hex`. size must be block-aligned. */
DECSAU_API decsau_status decsau_format_key_blocks(const uint8_t* key_blocks, size_t size,
                                                  decsau_buffer* text_out);

/* ---- signal analysis ----------------------------------------------------- */

typedef enum decsau_csv_kind {
    DECSAU_CSV_TIME = 0,     /* index,sample */
    DECSAU_CSV_SPECTRUM = 1, /* hz,magnitude */
    DECSAU_CSV_STATS = 2     /* name,value */
} decsau_csv_kind;

DECSAU_API decsau_status decsau_analysis_csv(const uint8_t* samples, size_t size, uint32_t sample_rate,
                                             decsau_csv_kind kind, decsau_buffer* text_out);

#ifdef __cplusplus
}
#endif

#endif /* DECSAU_DECSAU_H */
