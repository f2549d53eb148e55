/* The header must compile as plain C. */
#include <stdio.h>
#include <string.h>

#include "decsau/decsau.h"

int main(void) {
    decsau_key* key = NULL;
    decsau_buffer cipher = {0};
    decsau_buffer plain = {0};
    const uint8_t msg[5] = {'h', 'e', 'l', 'l', 'o'};
    int ok;

    if (decsau_key_from_hex("d6d0752a8580d93bd4ce20fa785d5ea0cd1d170d51b237e74052aa6ef17160ce", &key) != DECSAU_OK) {
        fprintf(stderr, "key: %s\n", decsau_last_error_message());
        return 1;
    }
    if (decsau_encrypt(key, msg, sizeof msg, &cipher) != DECSAU_OK || cipher.size != DECSAU_BLOCK_SIZE) return 1;
    if (decsau_decrypt(key, cipher.data, cipher.size, sizeof msg, &plain) != DECSAU_OK) return 1;
    ok = plain.size == sizeof msg && memcmp(plain.data, msg, sizeof msg) == 0;
    decsau_buffer_free(&cipher);
    decsau_buffer_free(&plain);
    decsau_key_free(key);
    printf("c api smoke: %s\n", ok ? "ok" : "mismatch");
    return ok ? 0 : 1;
}
