#include "qsec/saes.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

#include "qsec/errors.hpp"

namespace qsec {

namespace {

constexpr std::array<std::uint8_t, 16> kSbox = {0x9, 0x4, 0xA, 0xB, 0xD, 0x1, 0x8, 0x5,
                                                0x6, 0x2, 0x0, 0x3, 0xC, 0xE, 0xF, 0x7};
constexpr std::array<std::uint8_t, 16> kInvSbox = {0xA, 0x5, 0x9, 0xB, 0x1, 0x7, 0x8, 0xF,
                                                   0x6, 0x0, 0x2, 0x3, 0xC, 0x4, 0xD, 0xE};

constexpr std::uint8_t gf16_mul(std::uint8_t a, std::uint8_t b) {
    std::uint16_t p = 0;
    for (int i = 0; i < 4; ++i)
        if (b & (1 << i)) p ^= static_cast<std::uint16_t>(a) << i;
    for (int i = 7; i >= 4; --i)
        if (p & (1 << i)) p ^= 0b10011 << (i - 4);  // reduce mod x^4 + x + 1
    return static_cast<std::uint8_t>(p & 0xF);
}

constexpr std::array<std::uint8_t, 16> mul_table(std::uint8_t factor) {
    std::array<std::uint8_t, 16> t{};
    for (std::uint8_t i = 0; i < 16; ++i) t[i] = gf16_mul(factor, i);
    return t;
}

constexpr auto kMul2 = mul_table(2);
constexpr auto kMul4 = mul_table(4);
constexpr auto kMul9 = mul_table(9);

// State layout: the 16-bit value n0 n1 n2 n3 (n0 = most significant nibble)
// fills the 2x2 nibble matrix column-major, [n0 n2; n1 n3].
struct Nibbles {
    std::array<std::uint8_t, 4> n;
};

Nibbles split(std::uint16_t v) {
    return {{static_cast<std::uint8_t>((v >> 12) & 0xF), static_cast<std::uint8_t>((v >> 8) & 0xF),
             static_cast<std::uint8_t>((v >> 4) & 0xF), static_cast<std::uint8_t>(v & 0xF)}};
}

std::uint16_t join(const Nibbles& s) {
    return static_cast<std::uint16_t>((s.n[0] << 12) | (s.n[1] << 8) | (s.n[2] << 4) | s.n[3]);
}

std::uint8_t sub_nib_byte(std::uint8_t b) {
    return static_cast<std::uint8_t>((kSbox[(b >> 4) & 0xF] << 4) | kSbox[b & 0xF]);
}

std::uint8_t rot_nib(std::uint8_t b) {
    return static_cast<std::uint8_t>(((b << 4) | (b >> 4)) & 0xFF);
}

std::array<std::uint16_t, 3> expand_key(SaesKey key) {
    std::array<std::uint8_t, 6> w{};
    w[0] = static_cast<std::uint8_t>(key >> 8);
    w[1] = static_cast<std::uint8_t>(key & 0xFF);
    w[2] = static_cast<std::uint8_t>(w[0] ^ 0x80 ^ sub_nib_byte(rot_nib(w[1])));
    w[3] = static_cast<std::uint8_t>(w[2] ^ w[1]);
    w[4] = static_cast<std::uint8_t>(w[2] ^ 0x30 ^ sub_nib_byte(rot_nib(w[3])));
    w[5] = static_cast<std::uint8_t>(w[4] ^ w[3]);
    return {static_cast<std::uint16_t>((w[0] << 8) | w[1]),
            static_cast<std::uint16_t>((w[2] << 8) | w[3]),
            static_cast<std::uint16_t>((w[4] << 8) | w[5])};
}

Nibbles add_key(Nibbles s, std::uint16_t k) {
    const Nibbles kn = split(k);
    for (int i = 0; i < 4; ++i) s.n[i] ^= kn.n[i];
    return s;
}

Nibbles sub_nibs(Nibbles s, const std::array<std::uint8_t, 16>& box) {
    for (auto& x : s.n) x = box[x];
    return s;
}

// swap the bottom-row nibbles (positions 1 and 3 column-major); involutive
Nibbles shift_rows(Nibbles s) {
    std::swap(s.n[1], s.n[3]);
    return s;
}

Nibbles mix_columns(Nibbles s) {
    return {{static_cast<std::uint8_t>(s.n[0] ^ kMul4[s.n[1]]),
             static_cast<std::uint8_t>(kMul4[s.n[0]] ^ s.n[1]),
             static_cast<std::uint8_t>(s.n[2] ^ kMul4[s.n[3]]),
             static_cast<std::uint8_t>(kMul4[s.n[2]] ^ s.n[3])}};
}

Nibbles inv_mix_columns(Nibbles s) {
    return {{static_cast<std::uint8_t>(kMul9[s.n[0]] ^ kMul2[s.n[1]]),
             static_cast<std::uint8_t>(kMul2[s.n[0]] ^ kMul9[s.n[1]]),
             static_cast<std::uint8_t>(kMul9[s.n[2]] ^ kMul2[s.n[3]]),
             static_cast<std::uint8_t>(kMul2[s.n[2]] ^ kMul9[s.n[3]])}};
}

}  // namespace

SaesBlock saes_encrypt(SaesBlock plaintext, SaesKey key) {
    const auto rk = expand_key(key);
    Nibbles s = add_key(split(plaintext), rk[0]);
    s = add_key(mix_columns(shift_rows(sub_nibs(s, kSbox))), rk[1]);
    s = add_key(shift_rows(sub_nibs(s, kSbox)), rk[2]);
    return join(s);
}

SaesBlock saes_decrypt(SaesBlock ciphertext, SaesKey key) {
    const auto rk = expand_key(key);
    Nibbles s = add_key(split(ciphertext), rk[2]);
    s = sub_nibs(shift_rows(s), kInvSbox);
    s = inv_mix_columns(add_key(s, rk[1]));
    s = sub_nibs(shift_rows(s), kInvSbox);
    s = add_key(s, rk[0]);
    return join(s);
}

Oracle make_saes_oracle(SaesBlock plaintext, SaesBlock ciphertext,
                        std::uint64_t marked_count) {
    return Oracle{16,
                  [plaintext, ciphertext](std::uint64_t k) {
                      return saes_encrypt(plaintext, static_cast<SaesKey>(k)) == ciphertext;
                  },
                  marked_count};
}

KeySearchReport brute_force_key(SaesBlock plaintext, SaesBlock ciphertext) {
    KeySearchReport report;
    report.method = KeySearchMethod::Exhaustive;
    report.oracle_queries = 65536;
    for (std::uint32_t k = 0; k < 65536; ++k)
        if (saes_encrypt(plaintext, static_cast<SaesKey>(k)) == ciphertext)
            report.matching_keys.push_back(static_cast<SaesKey>(k));
    return report;
}

KeySearchReport grover_key_search(SaesBlock plaintext, SaesBlock ciphertext, Seed seed,
                                  std::uint32_t max_retries) {
    if (max_retries == 0)
        throw std::invalid_argument("grover_key_search: max_retries must be positive");
    const KeySearchReport exhaustive = brute_force_key(plaintext, ciphertext);
    const auto& solutions = exhaustive.matching_keys;
    if (solutions.empty())
        throw std::invalid_argument(
            "grover_key_search: no key maps the plaintext to the ciphertext");

    const GroverPlan plan = plan_iterations(16, solutions.size());
    KeySearchReport report;
    report.method = KeySearchMethod::GroverSim;
    report.grover_iterations = plan.iterations;
    report.predicted_success = plan.predicted_success;

    RngStream rng(seed);
    for (std::uint32_t attempt = 0; attempt < max_retries; ++attempt) {
        report.oracle_queries += plan.iterations;
        // sample from the post-iteration distribution: the marked mass is
        // spread uniformly over solutions, the remainder over non-solutions
        SaesKey candidate;
        if (rng.next_double() < plan.predicted_success) {
            candidate = solutions[rng.next_below(solutions.size())];
        } else {
            do {
                candidate = static_cast<SaesKey>(rng.next_below(65536));
            } while (std::binary_search(solutions.begin(), solutions.end(), candidate));
        }
        if (saes_encrypt(plaintext, candidate) == ciphertext) {
            report.matching_keys.push_back(candidate);
            return report;
        }
    }
    throw ProbabilisticFailure("grover_key_search: retry budget exhausted",
                               plan.predicted_success);
}

}  // namespace qsec
