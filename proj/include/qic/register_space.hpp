#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "qic/complex_matrix.hpp"

namespace qic {

/// Named quantum register. Labels are plain strings; uniqueness is enforced
/// per RegisterSpace, not globally.
struct Register {
    std::string label;
    std::size_t dim = 0;
};

/// Ordered list of named registers. All multipartite index arithmetic goes
/// through this type; the leftmost register is the most significant digit of
/// the row-major composite index.
class RegisterSpace {
public:
    RegisterSpace() = default;
    explicit RegisterSpace(std::vector<Register> regs);

    static RegisterSpace single(const std::string& label, std::size_t dim) {
        return RegisterSpace({{label, dim}});
    }

    const std::vector<Register>& registers() const { return regs_; }
    std::size_t size() const { return regs_.size(); }
    std::size_t total_dim() const { return total_; }
    bool empty() const { return regs_.empty(); }

    bool contains(const std::string& label) const;
    std::size_t position_of(const std::string& label) const;  // throws on unknown label
    std::size_t dim_of(const std::string& label) const;

    std::vector<std::size_t> dims() const;
    /// Positions of the given labels, in the order the labels are listed.
    std::vector<std::size_t> positions_of(const std::vector<std::string>& labels) const;
    /// Product of dims of the given labels.
    std::size_t dim_product(const std::vector<std::string>& labels) const;

    /// Registers not listed in `labels`, in space order.
    std::vector<std::string> complement(const std::vector<std::string>& labels) const;

    /// Subspace of the listed registers, in space order (set semantics).
    RegisterSpace restricted_to(const std::vector<std::string>& labels) const;
    /// Subspace of the listed registers, in the listed order.
    RegisterSpace reordered(const std::vector<std::string>& new_order) const;

    RegisterSpace concat(const RegisterSpace& other) const;
    RegisterSpace renamed_with_suffix(const std::string& suffix) const;

    bool same_as(const RegisterSpace& other) const;

private:
    std::vector<Register> regs_;
    std::size_t total_ = 1;
};

}  // namespace qic
