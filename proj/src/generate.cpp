#include "sigrect/generate.hpp"

namespace sigrect {

std::uint64_t Rng::splitmix() {
    std::uint64_t x = (state_ += 0x9e3779b97f4a7c15ULL);
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t Rng::next_u64() { return splitmix(); }

double Rng::next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

std::uint64_t Rng::next_below(std::uint64_t bound) {
    if (bound == 0) throw ValidationError("Rng::next_below: bound must be positive");
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x;
    do {
        x = next_u64();
    } while (x >= limit);
    return x % bound;
}

std::uint64_t Rng::nonzero_mask(int bits) {
    if (bits < 1 || bits > 64) throw ValidationError("Rng::nonzero_mask: bits must be in 1..64");
    const std::uint64_t full = bits == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << bits) - 1;
    std::uint64_t x;
    do {
        x = next_u64() & full;
    } while (x == 0);
    return x;
}

GeneratorKind generator_kind_from_string(const std::string& s) {
    if (s == "random-density") return GeneratorKind::RandomDensity;
    if (s == "rectangle-sum") return GeneratorKind::RectangleSum;
    if (s == "identity") return GeneratorKind::Identity;
    if (s == "complement-identity") return GeneratorKind::ComplementIdentity;
    throw ValidationError("unknown generator kind \"" + s + "\"");
}

std::string generator_kind_to_string(GeneratorKind kind) {
    switch (kind) {
        case GeneratorKind::RandomDensity: return "random-density";
        case GeneratorKind::RectangleSum: return "rectangle-sum";
        case GeneratorKind::Identity: return "identity";
        case GeneratorKind::ComplementIdentity: return "complement-identity";
    }
    throw ValidationError("unknown generator kind");
}

BoolMatrix generate_matrix(GeneratorKind kind, const GeneratorParams& params, std::uint64_t seed) {
    Rng rng(seed);
    switch (kind) {
        case GeneratorKind::Identity:
        case GeneratorKind::ComplementIdentity: {
            if (params.n < 1) throw ValidationError("generate_matrix: identity kinds require n >= 1");
            BoolMatrix out(params.n, params.n);
            for (int i = 0; i < params.n; ++i)
                for (int j = 0; j < params.n; ++j)
                    out.set(i, j, (kind == GeneratorKind::Identity) == (i == j) ? 1 : 0);
            return out;
        }
        case GeneratorKind::RandomDensity: {
            if (params.m < 1 || params.n < 1) throw ValidationError("generate_matrix: dimensions must be >= 1");
            if (params.density < 0.0 || params.density > 1.0)
                throw ValidationError("generate_matrix: density must be in [0,1]");
            BoolMatrix out(params.m, params.n);
            for (int i = 0; i < params.m; ++i)
                for (int j = 0; j < params.n; ++j) out.set(i, j, rng.next_unit() < params.density ? 1 : 0);
            return out;
        }
        case GeneratorKind::RectangleSum: {
            if (params.m < 1 || params.n < 1) throw ValidationError("generate_matrix: dimensions must be >= 1");
            if (params.rect_count < 0) throw ValidationError("generate_matrix: rectangle count must be >= 0");
            BoolMatrix out(params.m, params.n);
            for (int k = 0; k < params.rect_count; ++k) {
                const std::uint64_t rows = rng.nonzero_mask(params.m);
                const std::uint64_t cols = rng.nonzero_mask(params.n);
                for (int i = 0; i < params.m; ++i) {
                    if (!((rows >> i) & 1u)) continue;
                    for (int j = 0; j < params.n; ++j)
                        if ((cols >> j) & 1u) out.set(i, j, 1);
                }
            }
            return out;
        }
    }
    throw ValidationError("generate_matrix: unknown kind");
}

}  // namespace sigrect
