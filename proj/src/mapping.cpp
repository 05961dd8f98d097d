#include "senav/mapping.hpp"

namespace senav {

std::size_t Bitmask::popcount() const {
    std::size_t n = 0;
    for (bool b : bits) n += b;
    return n;
}

std::string Bitmask::to_string() const {
    std::string out;
    out.reserve(bits.size());
    for (bool b : bits) out.push_back(b ? '1' : '0');
    return out;
}

Bitmask index_to_bitmask(BigCount index, std::size_t n) {
    if (n < 128 && index >= pow2(static_cast<unsigned>(n)))
        throw RangeError("index " + to_string(index) + " out of range for " +
                         std::to_string(n) + " elements");
    Bitmask mask;
    mask.bits.resize(n);
    for (std::size_t i = 0; i < n; ++i) mask.bits[i] = ((index >> i) & 1) != 0;
    return mask;
}

std::vector<long long> bitmask_to_elements(const Bitmask& bitmask,
                                           const PreprocessedInstance& prep) {
    if (bitmask.bits.size() != prep.size())
        throw RangeError("bitmask length does not match instance");
    std::vector<long long> out;
    for (std::size_t i = 0; i < bitmask.bits.size(); ++i) {
        bool bit = bitmask.bits[i];
        if (prep.sorted_elements[i] < 0) bit = !bit;
        if (bit) out.push_back(prep.sorted_elements[i]);
    }
    return out;
}

SolutionRecord decode_index(BigCount index, long long target,
                            const PreprocessedInstance& prep) {
    SolutionRecord record;
    record.target = target;
    record.preceding_index = index;
    Bitmask transformed = index_to_bitmask(index, prep.size());
    record.elements = bitmask_to_elements(transformed, prep);
    // The stored mask names the raw inclusion (negation rule applied), so its
    // popcount equals the element count.
    record.bitmask.bits.resize(prep.size());
    SumValue sum = 0;
    for (std::size_t i = 0; i < transformed.bits.size(); ++i) {
        bool bit = transformed.bits[i];
        if (prep.sorted_elements[i] < 0) bit = !bit;
        record.bitmask.bits[i] = bit;
        if (bit) {
            record.origin_positions.push_back(prep.origin_index[i]);
            sum = checked_add(sum, prep.sorted_elements[i]);
        }
    }
    if (sum != static_cast<SumValue>(target))
        throw RangeError("index " + to_string(index) + " does not sum to target " +
                         std::to_string(target));
    record.is_empty = record.elements.empty();
    return record;
}

}  // namespace senav
