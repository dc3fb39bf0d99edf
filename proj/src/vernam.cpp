#include "qsa/vernam.hpp"

#include <cmath>
#include <random>

namespace qsa {

BitString::BitString(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
  if (bits_.empty()) throw LengthError("BitString: empty");
  for (std::uint8_t b : bits_) {
    if (b > 1) throw Error("BitString: bit value out of {0, 1}");
  }
}

BitString BitString::from_hex(const std::string& hex) {
  if (hex.empty()) throw Error("BitString::from_hex: empty string");
  std::vector<std::uint8_t> bits;
  bits.reserve(hex.size() * 4);
  for (char c : hex) {
    int nibble;
    if (c >= '0' && c <= '9') {
      nibble = c - '0';
    } else if (c >= 'a' && c <= 'f') {
      nibble = c - 'a' + 10;
    } else if (c >= 'A' && c <= 'F') {
      nibble = c - 'A' + 10;
    } else {
      throw Error(std::string("BitString::from_hex: invalid character '") + c +
                  "'");
    }
    for (int j = 3; j >= 0; --j) {
      bits.push_back(static_cast<std::uint8_t>((nibble >> j) & 1));
    }
  }
  return BitString(std::move(bits));
}

std::string BitString::to_hex() const {
  if (bits_.size() % 4 != 0) {
    throw LengthError("BitString::to_hex: length not a multiple of 4");
  }
  static const char digits[] = "0123456789abcdef";
  std::string hex;
  hex.reserve(bits_.size() / 4);
  for (std::size_t i = 0; i < bits_.size(); i += 4) {
    const int nibble = (bits_[i] << 3) | (bits_[i + 1] << 2) |
                       (bits_[i + 2] << 1) | bits_[i + 3];
    hex.push_back(digits[nibble]);
  }
  return hex;
}

double BitString::ones_fraction() const {
  std::size_t ones = 0;
  for (std::uint8_t b : bits_) ones += b;
  return static_cast<double>(ones) / static_cast<double>(bits_.size());
}

BitString xor_bits(const BitString& a, const BitString& b) {
  if (a.size() != b.size()) {
    throw LengthError("xor: lengths " + std::to_string(a.size()) + " vs " +
                      std::to_string(b.size()));
  }
  std::vector<std::uint8_t> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a.bit(i) ^ b.bit(i);
  return BitString(std::move(out));
}

BitString operator^(const BitString& a, const BitString& b) {
  return xor_bits(a, b);
}

BitString keygen(std::uint64_t seed, std::size_t length) {
  if (length == 0) throw LengthError("keygen: length must be >= 1");
  std::mt19937_64 engine(seed);
  std::vector<std::uint8_t> bits;
  bits.reserve(length);
  std::uint64_t word = 0;
  for (std::size_t i = 0; i < length; ++i) {
    const std::size_t j = i % 64;
    if (j == 0) word = engine();
    bits.push_back(static_cast<std::uint8_t>((word >> (63 - j)) & 1));
  }
  return BitString(std::move(bits));
}

std::vector<PhotonPairRecord> alice_encode(const BitString& message,
                                           const BitString& key,
                                           const Direction& basis0,
                                           const Direction& basis1) {
  if (message.size() != key.size()) {
    throw LengthError("alice_encode: message and key lengths differ");
  }
  if (!spinors_orthogonal(basis0, basis1)) {
    throw OrthogonalityError(
        "alice_encode: basis settings are not an orthogonal pair");
  }
  std::vector<PhotonPairRecord> pairs;
  pairs.reserve(message.size());
  for (std::size_t i = 0; i < message.size(); ++i) {
    const std::uint8_t k = key.bit(i);
    const std::uint8_t mk = message.bit(i) ^ k;
    pairs.push_back(PhotonPairRecord{k ? basis1 : basis0,
                                     mk ? basis1 : basis0});
  }
  return pairs;
}

int classify(const Direction& pol, const Direction& basis0,
             const Direction& basis1) {
  const StateVector v = chi(pol, 1);
  if (1.0 - std::abs(inner(v, chi(basis0, 1))) <= 1e-9) return 0;
  if (1.0 - std::abs(inner(v, chi(basis1, 1))) <= 1e-9) return 1;
  throw BasisError("classify: polarization matches neither basis setting");
}

BitString bob_decode(const std::vector<PhotonPairRecord>& pairs,
                     const Direction& basis0, const Direction& basis1) {
  if (pairs.empty()) throw LengthError("bob_decode: no pairs");
  std::vector<std::uint8_t> bits;
  bits.reserve(pairs.size());
  for (const PhotonPairRecord& rec : pairs) {
    bits.push_back(static_cast<std::uint8_t>(
        classify(rec.pol1, basis0, basis1) ^
        classify(rec.pol3, basis0, basis1)));
  }
  return BitString(std::move(bits));
}

namespace {

double pearson(const std::vector<double>& x, const std::vector<double>& y) {
  const double n = static_cast<double>(x.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
    syy += (y[i] - my) * (y[i] - my);
  }
  if (sxx == 0.0 || syy == 0.0) return 0.0;  // constant stream
  return sxy / std::sqrt(sxx * syy);
}

}  // namespace

EveStats eve_single_photon_stats(const std::vector<PhotonPairRecord>& pairs,
                                 int which, const BitString& message,
                                 const Direction& basis0,
                                 const Direction& basis1) {
  if (pairs.empty()) throw LengthError("eve_single_photon_stats: no pairs");
  if (which != 1 && which != 3) {
    throw Error("eve_single_photon_stats: stream must be 1 or 3");
  }
  if (message.size() != pairs.size()) {
    throw LengthError("eve_single_photon_stats: message/pairs length mismatch");
  }
  std::vector<double> stream(pairs.size()), msg(pairs.size());
  double ones = 0.0;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const Direction& pol = (which == 1) ? pairs[i].pol1 : pairs[i].pol3;
    stream[i] = static_cast<double>(classify(pol, basis0, basis1));
    msg[i] = static_cast<double>(message.bit(i));
    ones += stream[i];
  }
  return EveStats{ones / static_cast<double>(pairs.size()),
                  pearson(stream, msg)};
}

DensityMatrix quantum_state_of_pair(const PhotonPairRecord& record) {
  const StateVector pair_state =
      tensor_vec(chi(record.pol1, 1), chi(record.pol3, 1));
  return DensityMatrix::from_state(pair_state, FactorShape{2, 2});
}

ProtocolTranscript run_protocol(std::uint64_t seed, const BitString& message,
                                const Direction& basis0,
                                const Direction& basis1) {
  BitString key = keygen(seed, message.size());
  std::vector<PhotonPairRecord> pairs =
      alice_encode(message, key, basis0, basis1);
  BitString decoded = bob_decode(pairs, basis0, basis1);
  return ProtocolTranscript{seed, message, std::move(key), std::move(pairs),
                            std::move(decoded)};
}

}  // namespace qsa
