// Reference Simplified-AES: 16-bit block, 16-bit key, two rounds over
// GF(2^4) mod x^4 + x + 1, in the Musa/Schaefer/Wedig form popularized by
// Stallings' appendix (S-box 9,4,A,B,D,1,8,5,6,2,0,3,C,E,F,7; round
// constants 0x80 and 0x30; MixColumns matrix [[1,4],[4,1]]).
//
// Plus the two key-recovery attacks: classical exhaustive search and the
// Grover-simulated search that uses the cipher as its oracle predicate.
#pragma once

#include <cstdint>
#include <vector>

#include "qsec/grover.hpp"
#include "qsec/rng.hpp"

namespace qsec {

using SaesBlock = std::uint16_t;
using SaesKey = std::uint16_t;

SaesBlock saes_encrypt(SaesBlock plaintext, SaesKey key);
SaesBlock saes_decrypt(SaesBlock ciphertext, SaesKey key);

// Grover oracle over the 16-bit key space: predicate(k) iff encrypt(p,k) = c.
Oracle make_saes_oracle(SaesBlock plaintext, SaesBlock ciphertext,
                        std::uint64_t marked_count);

enum class KeySearchMethod { Exhaustive, GroverSim };

struct KeySearchReport {
    std::vector<SaesKey> matching_keys;  // sorted; every entry re-encrypts p to c
    KeySearchMethod method = KeySearchMethod::Exhaustive;
    std::uint64_t oracle_queries = 0;
    std::uint64_t grover_iterations = 0;  // 0 for exhaustive search
    double predicted_success = 1.0;
};

// Enumerates all 2^16 keys; oracle_queries is exactly 65536. An empty
// matching set is a valid result for an unrelated (p, c) pair.
KeySearchReport brute_force_key(SaesBlock plaintext, SaesBlock ciphertext);

// Grover-simulated key recovery: plans iterations from the (brute-force
// verified) solution count, runs the subspace backend, samples a key from
// the resulting distribution and verifies it by re-encryption, resampling up
// to max_retries complete runs. Throws std::invalid_argument when no key
// matches and ProbabilisticFailure when the retry budget is exhausted.
KeySearchReport grover_key_search(SaesBlock plaintext, SaesBlock ciphertext, Seed seed,
                                  std::uint32_t max_retries = 8);

}  // namespace qsec
