#ifndef QSA_VERNAM_HPP
#define QSA_VERNAM_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "qsa/density_matrix.hpp"
#include "qsa/spin.hpp"

namespace qsa {

// Ordered string of bits. Hex conversion is most-significant-bit-first per
// byte (so "d" -> 1101).
class BitString {
 public:
  explicit BitString(std::vector<std::uint8_t> bits);

  static BitString from_hex(const std::string& hex);

  // Requires the length to be a multiple of 4.
  std::string to_hex() const;

  std::size_t size() const { return bits_.size(); }
  std::uint8_t bit(std::size_t i) const { return bits_[i]; }
  const std::vector<std::uint8_t>& bits() const { return bits_; }

  double ones_fraction() const;

  bool operator==(const BitString& other) const = default;

 private:
  std::vector<std::uint8_t> bits_;
};

// Bitwise addition modulo 2 without carry. Lengths must match.
BitString xor_bits(const BitString& a, const BitString& b);
BitString operator^(const BitString& a, const BitString& b);

// Deterministic pseudo-random bits: std::mt19937_64 seeded with `seed`,
// bits drawn most-significant-first from each successive 64-bit word.
BitString keygen(std::uint64_t seed, std::size_t length);

// Polarizer settings of one photon pair: photon 1 carries the key bit,
// photon 3 carries message xor key.
struct PhotonPairRecord {
  Direction pol1;
  Direction pol3;
};

// Encodes bit 0 as basis0 and bit 1 as basis1. The two settings must have
// orthogonal spinors (basis1 antipodal to basis0).
std::vector<PhotonPairRecord> alice_encode(const BitString& message,
                                           const BitString& key,
                                           const Direction& basis0,
                                           const Direction& basis1);

// Maps a recorded polarization back to its bit; BasisError if it matches
// neither setting within 1e-9.
int classify(const Direction& pol, const Direction& basis0,
             const Direction& basis1);

// bit i = classify(pol1) xor classify(pol3).
BitString bob_decode(const std::vector<PhotonPairRecord>& pairs,
                     const Direction& basis0, const Direction& basis1);

struct EveStats {
  double ones_fraction;
  double correlation_with_message;  // Pearson; 0 when either stream is constant
};

// What a passive observer of one photon stream (1 or 3) sees: the bit-1
// fraction of that stream and its empirical correlation with the message.
EveStats eve_single_photon_stats(const std::vector<PhotonPairRecord>& pairs,
                                 int which, const BitString& message,
                                 const Direction& basis0,
                                 const Direction& basis1);

// Product state of one pair: |chi(pol1)><chi(pol1)| (x) |chi(pol3)><chi(pol3)|,
// shape [2, 2].
DensityMatrix quantum_state_of_pair(const PhotonPairRecord& record);

struct ProtocolTranscript {
  std::uint64_t seed;
  BitString message;
  BitString key;
  std::vector<PhotonPairRecord> pairs;
  BitString decoded;
};

// Full noiseless round: key from seed, encode, decode.
ProtocolTranscript run_protocol(std::uint64_t seed, const BitString& message,
                                const Direction& basis0,
                                const Direction& basis1);

}  // namespace qsa

#endif  // QSA_VERNAM_HPP
