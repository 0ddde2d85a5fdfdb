#include "hopfbraid/subset.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace hopfbraid {

Subset::Subset(int ambient, std::vector<int> members)
    : ambient_(ambient), members_(std::move(members)) {
    if (ambient_ < 0)
        throw std::invalid_argument("Subset: negative ambient size");
    int prev = 0;
    for (int m : members_) {
        if (m <= prev)
            throw std::invalid_argument("Subset: members must be strictly increasing");
        if (m > ambient_)
            throw std::invalid_argument("Subset: member exceeds ambient size");
        prev = m;
    }
}

Subset Subset::full(int ambient) {
    std::vector<int> all(static_cast<size_t>(ambient));
    for (int i = 0; i < ambient; ++i)
        all[static_cast<size_t>(i)] = i + 1;
    return Subset(ambient, std::move(all));
}

bool Subset::contains(int i) const {
    return std::binary_search(members_.begin(), members_.end(), i);
}

bool Subset::contains(const Subset& other) const {
    return std::includes(members_.begin(), members_.end(),
                         other.members_.begin(), other.members_.end());
}

Subset Subset::unite(const Subset& other) const {
    std::vector<int> u;
    std::set_union(members_.begin(), members_.end(),
                   other.members_.begin(), other.members_.end(),
                   std::back_inserter(u));
    return Subset(std::max(ambient_, other.ambient_), std::move(u));
}

std::vector<Subset> Subset::subsets() const {
    const int k = size();
    std::vector<std::vector<int>> lists;
    for (unsigned mask = 0; mask < (1u << k); ++mask) {
        std::vector<int> sel;
        for (int i = 0; i < k; ++i)
            if (mask & (1u << i))
                sel.push_back(members_[static_cast<size_t>(i)]);
        lists.push_back(std::move(sel));
    }
    std::sort(lists.begin(), lists.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size())
            return a.size() < b.size();
        return a < b;
    });
    std::vector<Subset> out;
    out.reserve(lists.size());
    for (auto& l : lists)
        out.emplace_back(ambient_, std::move(l));
    return out;
}

std::vector<Subset> Subset::all_subsets(int n) {
    return full(n).subsets();
}

std::string Subset::str() const {
    std::ostringstream os;
    os << "{";
    for (size_t i = 0; i < members_.size(); ++i) {
        if (i)
            os << ",";
        os << members_[i];
    }
    os << "}";
    return os.str();
}

} // namespace hopfbraid
