#pragma once

#include <string>
#include <vector>

namespace hopfbraid {

/// Ordered subset of {1..n}, always stored strictly increasing.
class Subset {
public:
    Subset(int ambient, std::vector<int> members);

    static Subset empty(int ambient) { return Subset(ambient, {}); }
    static Subset full(int ambient);

    int ambient() const { return ambient_; }
    int size() const { return static_cast<int>(members_.size()); }
    const std::vector<int>& members() const { return members_; }
    bool contains(int i) const;
    bool contains(const Subset& other) const;

    Subset unite(const Subset& other) const;

    /// All subsets of this set, ordered by increasing cardinality then
    /// lexicographically; the fixed order keeps report output deterministic.
    std::vector<Subset> subsets() const;

    /// All subsets of {1..n} in the same canonical order.
    static std::vector<Subset> all_subsets(int n);

    bool operator==(const Subset& rhs) const {
        return ambient_ == rhs.ambient_ && members_ == rhs.members_;
    }

    std::string str() const; // "{1,3}"

private:
    int ambient_;
    std::vector<int> members_;
};

} // namespace hopfbraid
