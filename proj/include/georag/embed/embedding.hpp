#pragma once

#include <string>
#include <vector>

namespace georag::embed {

/// A dense vector with the identity of the provider that produced it.
/// A zero vector (possible for degenerate inputs) is flagged rather than
/// rejected; cosine against it is defined as 0 so empty chunks rank last.
struct EmbeddingVector {
    std::vector<double> values;
    std::string provider_id;

    size_t dim() const { return values.size(); }
    double l2_norm() const;
    bool is_zero() const;

    /// Copy scaled to unit L2 norm; a zero vector is returned unchanged.
    EmbeddingVector normalized() const;
};

/// Cosine similarity in [-1, 1]. Zero-norm operands yield 0. Throws
/// std::invalid_argument on dimension mismatch.
double cosine(const EmbeddingVector& a, const EmbeddingVector& b);

} // namespace georag::embed
