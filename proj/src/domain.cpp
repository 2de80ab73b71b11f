#include "symbreak/domain.hpp"

#include <sstream>

namespace symbreak {

Domain Domain::range(int lo, int hi)
{
    if (lo < 0 || hi >= kCapacity)
        throw std::out_of_range("domain index outside [0, " + std::to_string(kCapacity) + ")");
    Domain d;
    for (int v = lo; v <= hi; ++v)
        d.words_[static_cast<unsigned>(v) >> 6] |= std::uint64_t{1} << (static_cast<unsigned>(v) & 63);
    d.recompute();
    return d;
}

void Domain::recompute()
{
    size_ = 0;
    min_ = 0;
    max_ = -1;
    bool first = true;
    for (unsigned w = 0; w < kWords; ++w) {
        if (!words_[w])
            continue;
        size_ += std::popcount(words_[w]);
        if (first) {
            min_ = static_cast<int>(w * 64 + static_cast<unsigned>(std::countr_zero(words_[w])));
            first = false;
        }
        max_ = static_cast<int>(w * 64 + 63 - static_cast<unsigned>(std::countl_zero(words_[w])));
    }
}

bool Domain::remove(int v)
{
    if (!contains(v))
        return false;
    words_[static_cast<unsigned>(v) >> 6] &= ~(std::uint64_t{1} << (static_cast<unsigned>(v) & 63));
    --size_;
    if (size_ == 0) {
        min_ = 0;
        max_ = -1;
    } else if (v == min_ || v == max_) {
        recompute();
    }
    return true;
}

bool Domain::restrict_to(int lo, int hi)
{
    if (lo <= min_ && hi >= max_)
        return false;
    if (lo > hi || hi < min_ || lo > max_) {
        bool changed = size_ > 0;
        words_.fill(0);
        recompute();
        return changed;
    }
    for (unsigned w = 0; w < kWords; ++w) {
        const int base = static_cast<int>(w * 64);
        std::uint64_t mask = ~std::uint64_t{0};
        if (lo > base)
            mask = lo >= base + 64 ? 0 : mask & (~std::uint64_t{0} << (lo - base));
        if (hi < base + 63)
            mask = hi < base ? 0 : mask & (~std::uint64_t{0} >> (63 - (hi - base)));
        words_[w] &= mask;
    }
    recompute();
    return true;
}

bool Domain::assign(int v)
{
    if (fixed() && min_ == v)
        return false;
    bool had = contains(v);
    words_.fill(0);
    if (had)
        words_[static_cast<unsigned>(v) >> 6] |= std::uint64_t{1} << (static_cast<unsigned>(v) & 63);
    recompute();
    return true;
}

bool Domain::intersect(const Domain& other)
{
    bool changed = false;
    for (unsigned w = 0; w < kWords; ++w) {
        std::uint64_t next = words_[w] & other.words_[w];
        changed |= next != words_[w];
        words_[w] = next;
    }
    if (changed)
        recompute();
    return changed;
}

std::string Domain::to_string() const
{
    std::ostringstream os;
    os << '{';
    bool first = true;
    for_each([&](int v) {
        os << (first ? "" : ",") << v;
        first = false;
    });
    os << '}';
    return os.str();
}

} // namespace symbreak
