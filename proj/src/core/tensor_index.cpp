#include "cyclex/core/tensor_index.hpp"

namespace cyclex {

std::size_t ipow(std::size_t d, int p)
{
    std::size_t r = 1;
    for (int k = 0; k < p; ++k)
        r *= d;
    return r;
}

TensorIndex::TensorIndex(std::vector<std::size_t> radix) : radix_(std::move(radix))
{
    for (auto r : radix_)
        size_ *= r;
}

TensorIndex TensorIndex::power(std::size_t d, int k)
{
    return TensorIndex(std::vector<std::size_t>(static_cast<std::size_t>(k), d));
}

TensorIndex TensorIndex::headed(std::size_t head, std::size_t d, int k)
{
    std::vector<std::size_t> r{head};
    r.insert(r.end(), static_cast<std::size_t>(k), d);
    return TensorIndex(std::move(r));
}

void TensorIndex::decode(std::size_t index, std::vector<std::size_t>& digits) const
{
    digits.resize(radix_.size());
    for (std::size_t k = radix_.size(); k-- > 0;) {
        digits[k] = index % radix_[k];
        index /= radix_[k];
    }
}

std::size_t TensorIndex::encode(const std::vector<std::size_t>& digits) const
{
    std::size_t index = 0;
    for (std::size_t k = 0; k < radix_.size(); ++k)
        index = index * radix_[k] + digits[k];
    return index;
}

SparseMatrix kron_power(const SparseMatrix& f, int k)
{
    SparseMatrix out = SparseMatrix::identity(1);
    for (int i = 0; i < k; ++i)
        out = kronecker(out, f);
    return out;
}

} // namespace cyclex
