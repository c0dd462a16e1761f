#include "sigrect/tensor.hpp"

#include <algorithm>
#include <stdexcept>

namespace sigrect {

namespace {

size_t checked_entry_count(const std::vector<int>& dims) {
    if (dims.size() < 2) throw ValidationError("BoolTensor: order must be >= 2");
    size_t total = 1;
    for (const int d : dims) {
        if (d < 1) throw ValidationError("BoolTensor: dimensions must be >= 1");
        if (d > kMaxCols) throw ResourceLimitError("BoolTensor: dimension cap kMaxCols=64 exceeded");
        total *= static_cast<size_t>(d);
        if (total > kMaxTensorEntries) throw ResourceLimitError("BoolTensor: entry cap 2^20 exceeded");
    }
    return total;
}

void check_coordinate(const std::vector<int>& dims, int lambda) {
    if (lambda < 0 || lambda >= static_cast<int>(dims.size()))
        throw BoundsError("tensor: coordinate " + std::to_string(lambda) + " outside order " +
                          std::to_string(dims.size()));
}

std::vector<int> drop_coordinate(const std::vector<int>& dims, int lambda) {
    std::vector<int> out;
    for (int i = 0; i < static_cast<int>(dims.size()); ++i)
        if (i != lambda) out.push_back(dims[static_cast<size_t>(i)]);
    return out;
}

// odometer over a full index vector; returns false after the last index
bool advance_index(std::vector<int>& idx, const std::vector<int>& dims) {
    for (int k = static_cast<int>(dims.size()) - 1; k >= 0; --k) {
        if (++idx[static_cast<size_t>(k)] < dims[static_cast<size_t>(k)]) return true;
        idx[static_cast<size_t>(k)] = 0;
    }
    return false;
}

}  // namespace

BoolTensor::BoolTensor(std::vector<int> dims) : dims_(std::move(dims)) {
    data_.assign(checked_entry_count(dims_), 0);
}

BoolTensor BoolTensor::from_entries(std::vector<int> dims, const std::vector<int>& entries) {
    BoolTensor out(std::move(dims));
    if (entries.size() != out.data_.size())
        throw DimensionError("BoolTensor::from_entries: entry count does not match dimensions");
    for (size_t p = 0; p < entries.size(); ++p) out.set_flat(p, entries[p]);
    return out;
}

size_t BoolTensor::flat_index(const std::vector<int>& idx) const {
    if (idx.size() != dims_.size()) throw DimensionError("BoolTensor: index order mismatch");
    size_t pos = 0;
    for (size_t k = 0; k < dims_.size(); ++k) {
        if (idx[k] < 0 || idx[k] >= dims_[k])
            throw BoundsError("BoolTensor: coordinate " + std::to_string(k) + " value " + std::to_string(idx[k]) +
                              " outside [0," + std::to_string(dims_[k]) + ")");
        pos = pos * static_cast<size_t>(dims_[k]) + static_cast<size_t>(idx[k]);
    }
    return pos;
}

void BoolTensor::set(const std::vector<int>& idx, int v) { set_flat(flat_index(idx), v); }

void BoolTensor::set_flat(size_t pos, int v) {
    if (v != 0 && v != 1) throw ValidationError("BoolTensor: entry must be 0 or 1");
    data_.at(pos) = static_cast<std::uint8_t>(v);
}

bool BoolTensor::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](std::uint8_t x) { return x == 0; });
}

PrimitiveTensor::PrimitiveTensor(std::vector<std::vector<int>> sets_in) : sets(std::move(sets_in)) {
    if (sets.size() < 2) throw ValidationError("PrimitiveTensor: order must be >= 2");
    for (auto& q : sets) {
        std::sort(q.begin(), q.end());
        q.erase(std::unique(q.begin(), q.end()), q.end());
        if (q.empty()) throw ValidationError("PrimitiveTensor: empty coordinate set");
        if (q.front() < 0) throw BoundsError("PrimitiveTensor: negative index");
    }
}

SignedTensorTerm::SignedTensorTerm(int sign_in, PrimitiveTensor tensor_in)
    : sign(sign_in), tensor(std::move(tensor_in)) {
    if (sign != 1 && sign != -1) throw ValidationError("SignedTensorTerm: sign must be +1 or -1");
}

SignedTensorDecomposition::SignedTensorDecomposition(std::vector<int> dims_in, std::vector<SignedTensorTerm> terms_in)
    : dims(std::move(dims_in)), terms(std::move(terms_in)) {
    for (const auto& t : terms) {
        if (t.tensor.sets.size() != dims.size())
            throw DimensionError("SignedTensorDecomposition: term order does not match dims");
        for (size_t k = 0; k < dims.size(); ++k)
            if (t.tensor.sets[k].back() >= dims[k])
                throw BoundsError("SignedTensorDecomposition: term exceeds dimension " + std::to_string(k));
    }
}

IntTensor::IntTensor(std::vector<int> dims_in) : dims(std::move(dims_in)) {
    data.assign(checked_entry_count(dims), 0);
}

std::int64_t IntTensor::at(const std::vector<int>& idx) const {
    if (idx.size() != dims.size()) throw DimensionError("IntTensor: index order mismatch");
    size_t pos = 0;
    for (size_t k = 0; k < dims.size(); ++k) {
        if (idx[k] < 0 || idx[k] >= dims[k]) throw BoundsError("IntTensor: index out of range");
        pos = pos * static_cast<size_t>(dims[k]) + static_cast<size_t>(idx[k]);
    }
    return data[pos];
}

BoolTensor slice(const BoolTensor& T, int lambda, int v) {
    check_coordinate(T.dims(), lambda);
    if (v < 0 || v >= T.dims()[static_cast<size_t>(lambda)])
        throw BoundsError("slice: value " + std::to_string(v) + " outside coordinate " + std::to_string(lambda));

    if (T.order() == 2) {
        // order-1 result, represented as a single-column tensor
        const int other = 1 - lambda;
        BoolTensor out({T.dims()[static_cast<size_t>(other)], 1});
        std::vector<int> idx(2);
        for (int x = 0; x < T.dims()[static_cast<size_t>(other)]; ++x) {
            idx[static_cast<size_t>(lambda)] = v;
            idx[static_cast<size_t>(other)] = x;
            out.set({x, 0}, T.at(idx));
        }
        return out;
    }

    BoolTensor out(drop_coordinate(T.dims(), lambda));
    std::vector<int> sub(out.dims().size(), 0);
    std::vector<int> idx(T.dims().size());
    do {
        for (int k = 0, p = 0; k < T.order(); ++k) idx[static_cast<size_t>(k)] = (k == lambda) ? v : sub[static_cast<size_t>(p++)];
        out.set(sub, T.at(idx));
    } while (advance_index(sub, out.dims()));
    return out;
}

BoolMatrix flatten(const BoolTensor& T, int lambda) {
    check_coordinate(T.dims(), lambda);
    const int ncols = T.dims()[static_cast<size_t>(lambda)];
    const std::vector<int> rest = drop_coordinate(T.dims(), lambda);
    size_t nrows = 1;
    for (const int d : rest) nrows *= static_cast<size_t>(d);

    BoolMatrix out(static_cast<int>(nrows), ncols);
    std::vector<int> idx(T.dims().size(), 0);
    do {
        size_t row = 0;
        for (int k = 0; k < T.order(); ++k)
            if (k != lambda) row = row * static_cast<size_t>(T.dims()[static_cast<size_t>(k)]) + static_cast<size_t>(idx[static_cast<size_t>(k)]);
        out.set(static_cast<int>(row), idx[static_cast<size_t>(lambda)], T.at(idx));
    } while (advance_index(idx, T.dims()));
    return out;
}

int flattening_rank(const BoolTensor& T) {
    int best = 0;
    for (int lambda = 0; lambda < T.order(); ++lambda) best = std::max(best, exact_rank(flatten(T, lambda)));
    return best;
}

std::vector<int> maximal_independent_slices(const BoolTensor& T, int lambda, int cap) {
    check_coordinate(T.dims(), lambda);
    return maximal_independent_columns(flatten(T, lambda), {}, cap).columns;
}

namespace {

// insert the lambda-coordinate set into an order-(l-1) primitive tensor
PrimitiveTensor extend_term(const PrimitiveTensor& p, int lambda, const std::vector<int>& values) {
    std::vector<std::vector<int>> sets;
    sets.reserve(p.sets.size() + 1);
    for (int k = 0; k <= static_cast<int>(p.sets.size()); ++k) {
        if (k == lambda) sets.push_back(values);
        if (k < static_cast<int>(p.sets.size())) sets.push_back(p.sets[static_cast<size_t>(k)]);
    }
    return PrimitiveTensor(std::move(sets));
}

SignedTensorDecomposition decompose_impl(const BoolTensor& T, std::optional<int> lambda_opt, int cap, int max_order) {
    const int order = T.order();
    SignedTensorDecomposition d(T.dims());

    if (order == 2) {
        BoolMatrix M(T.dims()[0], T.dims()[1]);
        for (int i = 0; i < T.dims()[0]; ++i)
            for (int j = 0; j < T.dims()[1]; ++j) M.set(i, j, T.at({i, j}));
        for (const auto& term : signed_rectangle_decomposition(M, {}, cap).terms)
            d.terms.emplace_back(term.sign, PrimitiveTensor({term.rect.rows, term.rect.cols}));
        return d;
    }

    const int lambda = lambda_opt.value_or(order - 1);
    check_coordinate(T.dims(), lambda);
    if (T.is_zero()) return d;

    const BoolMatrix flat = flatten(T, lambda);
    const IndependentSet s = maximal_independent_columns(flat, {}, cap);
    const int nl = T.dims()[static_cast<size_t>(lambda)];

    std::vector<CoefficientVector> alpha;
    alpha.reserve(static_cast<size_t>(nl));
    for (int v = 0; v < nl; ++v) alpha.push_back(express_column(flat, s, v));

    for (size_t k = 0; k < s.columns.size(); ++k) {
        std::vector<int> plus, minus;
        for (int v = 0; v < nl; ++v) {
            if (alpha[static_cast<size_t>(v)].values[k] == 1) plus.push_back(v);
            if (alpha[static_cast<size_t>(v)].values[k] == -1) minus.push_back(v);
        }
        if (plus.empty() && minus.empty()) continue;  // slice used by no column

        const SignedTensorDecomposition sub =
            decompose_impl(slice(T, lambda, s.columns[k]), std::nullopt, cap, max_order);
        for (const auto& term : sub.terms)
            if (!plus.empty()) d.terms.emplace_back(term.sign, extend_term(term.tensor, lambda, plus));
        for (const auto& term : sub.terms)
            if (!minus.empty()) d.terms.emplace_back(-term.sign, extend_term(term.tensor, lambda, minus));
    }
    return d;
}

}  // namespace

SignedTensorDecomposition tensor_signed_decomposition(const BoolTensor& T, std::optional<int> lambda, int cap,
                                                      int max_order) {
    if (T.order() > max_order)
        throw ResourceLimitError("tensor_signed_decomposition: order " + std::to_string(T.order()) +
                                 " exceeds cap " + std::to_string(max_order));
    if (lambda) check_coordinate(T.dims(), *lambda);

    SignedTensorDecomposition d = decompose_impl(T, lambda, cap, max_order);

    const IntTensor value = evaluate_tensor_decomposition(d);
    std::vector<int> idx(T.dims().size(), 0);
    do {
        if (value.at(idx) != T.at(idx))
            throw std::logic_error("tensor_signed_decomposition: reconstruction failed");
    } while (advance_index(idx, T.dims()));
    return d;
}

IntTensor evaluate_tensor_decomposition(const SignedTensorDecomposition& d) {
    IntTensor out(d.dims);
    for (const auto& term : d.terms) {
        if (term.tensor.sets.size() != d.dims.size())
            throw DimensionError("evaluate_tensor_decomposition: term order does not match dims");
        std::vector<size_t> pick(term.tensor.sets.size(), 0);
        while (true) {
            size_t pos = 0;
            for (size_t k = 0; k < d.dims.size(); ++k) {
                const int x = term.tensor.sets[k][pick[k]];
                if (x >= d.dims[k]) throw BoundsError("evaluate_tensor_decomposition: term exceeds dims");
                pos = pos * static_cast<size_t>(d.dims[k]) + static_cast<size_t>(x);
            }
            out.data[pos] += term.sign;
            int k = static_cast<int>(pick.size()) - 1;
            for (; k >= 0; --k) {
                if (++pick[static_cast<size_t>(k)] < term.tensor.sets[static_cast<size_t>(k)].size()) break;
                pick[static_cast<size_t>(k)] = 0;
            }
            if (k < 0) break;
        }
    }
    return out;
}

}  // namespace sigrect
