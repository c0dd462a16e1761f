#pragma once

// Seeded instance generators. All randomness flows through a splitmix64
// stream (a fixed 64-bit permutation of an incrementing state), mapped with
// the documented rules below, so a (kind, params, seed) triple produces the
// same matrix on every platform.

#include <cstdint>
#include <string>

#include "sigrect/matrix.hpp"

namespace sigrect {

// Stable PRNG wrapper: unit draws take the top 53 bits of a raw draw,
// bounded draws use rejection sampling on raw 64-bit words.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64();
    double next_unit();  // in [0,1), 53-bit resolution
    std::uint64_t next_below(std::uint64_t bound);
    std::uint64_t nonzero_mask(int bits);  // uniform nonzero `bits`-wide mask

  private:
    std::uint64_t splitmix();
    std::uint64_t state_;
};

enum class GeneratorKind { RandomDensity, RectangleSum, Identity, ComplementIdentity };

GeneratorKind generator_kind_from_string(const std::string& s);
std::string generator_kind_to_string(GeneratorKind kind);

struct GeneratorParams {
    int m = 0, n = 0;
    double density = 0.5;  // random-density only
    int rect_count = 0;    // rectangle-sum only
};

// identity / complement-identity use n only; random-density fills entries
// row-major with next_unit() < density; rectangle-sum ORs rect_count
// rectangles drawn as (nonzero row mask, nonzero column mask) pairs.
BoolMatrix generate_matrix(GeneratorKind kind, const GeneratorParams& params, std::uint64_t seed);

}  // namespace sigrect
