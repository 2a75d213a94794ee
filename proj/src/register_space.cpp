#include "qic/register_space.hpp"

#include <algorithm>
#include <unordered_set>

namespace qic {

RegisterSpace::RegisterSpace(std::vector<Register> regs) : regs_(std::move(regs)) {
    std::unordered_set<std::string> seen;
    for (const auto& r : regs_) {
        if (r.label.empty()) throw Error("RegisterSpace: empty register label");
        if (r.dim < 1) throw Error("RegisterSpace: register '" + r.label + "' has dim 0");
        if (!seen.insert(r.label).second)
            throw Error("RegisterSpace: duplicate register label '" + r.label + "'");
        total_ *= r.dim;
    }
}

bool RegisterSpace::contains(const std::string& label) const {
    return std::any_of(regs_.begin(), regs_.end(),
                       [&](const Register& r) { return r.label == label; });
}

std::size_t RegisterSpace::position_of(const std::string& label) const {
    for (std::size_t i = 0; i < regs_.size(); ++i)
        if (regs_[i].label == label) return i;
    throw Error("unknown register label '" + label + "'");
}

std::size_t RegisterSpace::dim_of(const std::string& label) const {
    return regs_[position_of(label)].dim;
}

std::vector<std::size_t> RegisterSpace::dims() const {
    std::vector<std::size_t> d(regs_.size());
    for (std::size_t i = 0; i < regs_.size(); ++i) d[i] = regs_[i].dim;
    return d;
}

std::vector<std::size_t> RegisterSpace::positions_of(const std::vector<std::string>& labels) const {
    std::vector<std::size_t> pos;
    pos.reserve(labels.size());
    std::unordered_set<std::size_t> seen;
    for (const auto& l : labels) {
        std::size_t p = position_of(l);
        if (!seen.insert(p).second) throw Error("register '" + l + "' listed twice");
        pos.push_back(p);
    }
    return pos;
}

std::size_t RegisterSpace::dim_product(const std::vector<std::string>& labels) const {
    std::size_t d = 1;
    for (auto p : positions_of(labels)) d *= regs_[p].dim;
    return d;
}

std::vector<std::string> RegisterSpace::complement(const std::vector<std::string>& labels) const {
    std::unordered_set<std::size_t> keep(positions_of(labels).begin(),
                                         positions_of(labels).end());
    std::vector<std::string> out;
    for (std::size_t i = 0; i < regs_.size(); ++i)
        if (!keep.count(i)) out.push_back(regs_[i].label);
    return out;
}

RegisterSpace RegisterSpace::restricted_to(const std::vector<std::string>& labels) const {
    auto pos = positions_of(labels);
    std::unordered_set<std::size_t> keep(pos.begin(), pos.end());
    std::vector<Register> out;
    for (std::size_t i = 0; i < regs_.size(); ++i)
        if (keep.count(i)) out.push_back(regs_[i]);
    return RegisterSpace(std::move(out));
}

RegisterSpace RegisterSpace::reordered(const std::vector<std::string>& new_order) const {
    if (new_order.size() != regs_.size())
        throw Error("reordered: new order is not a permutation of the space");
    std::vector<Register> out;
    out.reserve(regs_.size());
    for (auto p : positions_of(new_order)) out.push_back(regs_[p]);
    return RegisterSpace(std::move(out));
}

RegisterSpace RegisterSpace::concat(const RegisterSpace& other) const {
    std::vector<Register> out = regs_;
    out.insert(out.end(), other.regs_.begin(), other.regs_.end());
    return RegisterSpace(std::move(out));
}

RegisterSpace RegisterSpace::renamed_with_suffix(const std::string& suffix) const {
    std::vector<Register> out = regs_;
    for (auto& r : out) r.label += suffix;
    return RegisterSpace(std::move(out));
}

bool RegisterSpace::same_as(const RegisterSpace& other) const {
    if (regs_.size() != other.regs_.size()) return false;
    for (std::size_t i = 0; i < regs_.size(); ++i)
        if (regs_[i].label != other.regs_[i].label || regs_[i].dim != other.regs_[i].dim)
            return false;
    return true;
}

}  // namespace qic
