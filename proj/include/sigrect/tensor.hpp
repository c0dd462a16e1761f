#pragma once

// Order-l Boolean tensors, slices and flattenings, and the recursive signed
// primitive-tensor decomposition: pick a coordinate, express the tensor as a
// +-1 combination of a maximal independent set of slices (via the flattening,
// reusing the matrix engine), and decompose those slices recursively. The
// base case l = 2 is the matrix engine verbatim.

#include <optional>
#include <vector>

#include "sigrect/decompose.hpp"
#include "sigrect/matrix.hpp"

namespace sigrect {

inline constexpr int kDefaultMaxTensorOrder = 4;
inline constexpr int kMaxTensorEntries = 1 << 20;

// 0/1 array over [n_1] x ... x [n_l], l >= 2, row-major with the last
// coordinate fastest. Each dimension is capped at kMaxCols so flattenings
// stay within the matrix column cap.
class BoolTensor {
  public:
    explicit BoolTensor(std::vector<int> dims);
    static BoolTensor from_entries(std::vector<int> dims, const std::vector<int>& entries);

    int order() const { return static_cast<int>(dims_.size()); }
    const std::vector<int>& dims() const { return dims_; }
    size_t entry_count() const { return data_.size(); }

    int at(const std::vector<int>& idx) const { return data_[flat_index(idx)]; }
    void set(const std::vector<int>& idx, int v);

    int at_flat(size_t pos) const { return data_.at(pos); }
    void set_flat(size_t pos, int v);

    bool is_zero() const;
    size_t flat_index(const std::vector<int>& idx) const;

    friend bool operator==(const BoolTensor& a, const BoolTensor& b) = default;

  private:
    std::vector<int> dims_;
    std::vector<std::uint8_t> data_;
};

// Product set Q_1 x ... x Q_l of an all-1 primitive tensor; all sets
// nonempty, sorted, deduplicated.
struct PrimitiveTensor {
    explicit PrimitiveTensor(std::vector<std::vector<int>> sets_in);

    std::vector<std::vector<int>> sets;

    friend bool operator==(const PrimitiveTensor& a, const PrimitiveTensor& b) = default;
};

struct SignedTensorTerm {
    SignedTensorTerm(int sign_in, PrimitiveTensor tensor_in);

    int sign;  // +1 or -1
    PrimitiveTensor tensor;

    friend bool operator==(const SignedTensorTerm& a, const SignedTensorTerm& b) = default;
};

struct SignedTensorDecomposition {
    explicit SignedTensorDecomposition(std::vector<int> dims_in) : dims(std::move(dims_in)) {}
    SignedTensorDecomposition(std::vector<int> dims_in, std::vector<SignedTensorTerm> terms_in);

    std::vector<int> dims;
    std::vector<SignedTensorTerm> terms;

    size_t size() const { return terms.size(); }

    friend bool operator==(const SignedTensorDecomposition& a, const SignedTensorDecomposition& b) = default;
};

// Integer tensor, for evaluating signed sums.
struct IntTensor {
    explicit IntTensor(std::vector<int> dims_in);

    std::vector<int> dims;
    std::vector<std::int64_t> data;  // row-major, last coordinate fastest

    std::int64_t at(const std::vector<int>& idx) const;

    friend bool operator==(const IntTensor& a, const IntTensor& b) = default;
};

// Fix coordinate lambda (0-based) to value v. Order l >= 3 drops the
// coordinate; order 2 returns the selected line as a single-column tensor.
BoolTensor slice(const BoolTensor& T, int lambda, int v);

// Column v is the row-major vectorization of the lambda-slice at v; rows run
// over the remaining coordinates in ascending coordinate order.
BoolMatrix flatten(const BoolTensor& T, int lambda);

// max over lambda of exact_rank(flatten(T, lambda))
int flattening_rank(const BoolTensor& T);

// Greedy maximal independent set of lambda-slices, as slice values; equals
// maximal_independent_columns on the flattening.
std::vector<int> maximal_independent_slices(const BoolTensor& T, int lambda, int cap = kDefaultIndependenceCap);

// Recursive signed decomposition into primitive tensors. lambda (0-based)
// applies to the top level only and defaults to the last coordinate;
// recursive calls use their own last coordinate.
SignedTensorDecomposition tensor_signed_decomposition(const BoolTensor& T, std::optional<int> lambda = std::nullopt,
                                                      int cap = kDefaultIndependenceCap,
                                                      int max_order = kDefaultMaxTensorOrder);

// Entrywise signed sum of the terms; the empty decomposition is all-zero.
IntTensor evaluate_tensor_decomposition(const SignedTensorDecomposition& d);

}  // namespace sigrect
