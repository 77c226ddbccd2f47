#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace fillin {

// Fixed-capacity bit vector used for vertex sets in inner loops.
class Bits {
public:
    Bits() = default;
    explicit Bits(int n) : n_(n), w_((n + 63) / 64, 0) {}

    int capacity() const { return n_; }

    void set(int i) { w_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(int i) { w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }

    void clear()
    {
        for (auto& x : w_)
            x = 0;
    }

    void fill_all()
    {
        if (n_ == 0)
            return;
        for (auto& x : w_)
            x = ~std::uint64_t{0};
        trim();
    }

    Bits& operator|=(const Bits& o)
    {
        for (std::size_t i = 0; i < w_.size(); ++i)
            w_[i] |= o.w_[i];
        return *this;
    }

    Bits& operator&=(const Bits& o)
    {
        for (std::size_t i = 0; i < w_.size(); ++i)
            w_[i] &= o.w_[i];
        return *this;
    }

    // this := this & ~o
    Bits& and_not(const Bits& o)
    {
        for (std::size_t i = 0; i < w_.size(); ++i)
            w_[i] &= ~o.w_[i];
        return *this;
    }

    int count() const
    {
        int c = 0;
        for (auto x : w_)
            c += std::popcount(x);
        return c;
    }

    bool any() const
    {
        for (auto x : w_)
            if (x)
                return true;
        return false;
    }

    bool none() const { return !any(); }

    bool intersects(const Bits& o) const
    {
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & o.w_[i])
                return true;
        return false;
    }

    bool is_subset_of(const Bits& o) const
    {
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & ~o.w_[i])
                return false;
        return true;
    }

    // Smallest set bit, or -1.
    int first() const
    {
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i])
                return static_cast<int>(i * 64 + std::countr_zero(w_[i]));
        return -1;
    }

    template <class F>
    void for_each(F f) const
    {
        for (std::size_t i = 0; i < w_.size(); ++i) {
            std::uint64_t x = w_[i];
            while (x) {
                f(static_cast<int>(i * 64 + std::countr_zero(x)));
                x &= x - 1;
            }
        }
    }

    const std::vector<std::uint64_t>& words() const { return w_; }

    friend bool operator==(const Bits& a, const Bits& b)
    {
        return a.n_ == b.n_ && a.w_ == b.w_;
    }

private:
    void trim()
    {
        int rem = n_ & 63;
        if (rem)
            w_.back() &= (std::uint64_t{1} << rem) - 1;
    }

    int n_ = 0;
    std::vector<std::uint64_t> w_;
};

} // namespace fillin
