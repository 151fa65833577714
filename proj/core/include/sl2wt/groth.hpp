#pragma once

#include <cstdint>
#include <map>
#include <vector>

namespace sl2wt {

// Finitely supported integer combination of labels.
template <class Label>
class Groth {
public:
    using Map = std::map<Label, std::int64_t>;

    Groth() = default;
    explicit Groth(const Label& x, std::int64_t c = 1) { add(x, c); }

    void add(const Label& x, std::int64_t c = 1) {
        if (c == 0) return;
        auto it = terms_.find(x);
        if (it == terms_.end()) {
            terms_.emplace(x, c);
        } else if ((it->second += c) == 0) {
            terms_.erase(it);
        }
    }

    std::int64_t coefficient(const Label& x) const {
        auto it = terms_.find(x);
        return it == terms_.end() ? 0 : it->second;
    }

    const Map& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    std::int64_t total() const {
        std::int64_t n = 0;
        for (const auto& [x, c] : terms_) n += c;
        return n;
    }

    bool is_effective() const {
        for (const auto& [x, c] : terms_)
            if (c < 0) return false;
        return true;
    }

    std::vector<Label> support() const {
        std::vector<Label> out;
        for (const auto& [x, c] : terms_) out.push_back(x);
        return out;
    }

    Groth& operator+=(const Groth& o) {
        for (const auto& [x, c] : o.terms_) add(x, c);
        return *this;
    }
    Groth& operator-=(const Groth& o) {
        for (const auto& [x, c] : o.terms_) add(x, -c);
        return *this;
    }
    Groth& operator*=(std::int64_t n) {
        if (n == 0) terms_.clear();
        for (auto& [x, c] : terms_) c *= n;
        return *this;
    }

    friend Groth operator+(Groth a, const Groth& b) { return a += b; }
    friend Groth operator-(Groth a, const Groth& b) { return a -= b; }
    friend Groth operator*(Groth a, std::int64_t n) { return a *= n; }
    friend Groth operator*(std::int64_t n, Groth a) { return a *= n; }
    friend bool operator==(const Groth& a, const Groth& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const Groth& a, const Groth& b) { return !(a == b); }

    template <class F>
    Groth map(F f) const {
        Groth out;
        for (const auto& [x, c] : terms_) out.add(f(x), c);
        return out;
    }

private:
    Map terms_;
};

// Ordered layer lists, top layer first; entries within a layer are sorted.
template <class Label>
using Layers = std::vector<std::vector<Label>>;

}  // namespace sl2wt
