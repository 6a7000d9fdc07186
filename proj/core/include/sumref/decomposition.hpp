#pragma once

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "sumref/subspace.hpp"

namespace sumref {

template <FieldType F>
struct Summand {
    std::string label;
    Subspace<F> space;
};

struct ValidationReport {
    bool dims_sum_to_ambient = false;
    bool stacked_basis_invertible = false;
    std::vector<std::string> problems;

    bool valid() const { return dims_sum_to_ambient && stacked_basis_invertible && problems.empty(); }

    std::string describe() const {
        if (valid()) return "valid";
        std::string s;
        if (!dims_sum_to_ambient) s += "summand dimensions do not sum to the ambient dimension; ";
        if (!stacked_basis_invertible) s += "summands are not independent (stacked basis singular); ";
        for (const auto& p : problems) s += p + "; ";
        if (s.size() >= 2) s.resize(s.size() - 2);
        return s;
    }
};

/// An ordered, labeled family of subspaces presented as an internal
/// direct-sum decomposition of k^n, with one distinguished summand.
/// Construction never throws on mathematically invalid input; the
/// validation report records what failed, and the coordinate operations
/// refuse to run on an invalid decomposition.
template <FieldType F>
class Decomposition {
public:
    Decomposition(F field, std::size_t ambient, std::vector<Summand<F>> summands, std::size_t distinguished)
        : field_(std::move(field)), ambient_(ambient), summands_(std::move(summands)),
          distinguished_(distinguished) {
        validate();
    }

    const F& field() const { return field_; }
    std::size_t ambient_dim() const { return ambient_; }
    std::size_t count() const { return summands_.size(); }
    std::size_t distinguished_index() const { return distinguished_; }
    const Summand<F>& summand(std::size_t i) const { return summands_.at(i); }
    const Subspace<F>& distinguished_space() const { return summands_.at(distinguished_).space; }

    const ValidationReport& validation() const { return report_; }
    bool is_valid() const { return report_.valid(); }

    std::optional<std::size_t> index_of(const std::string& label) const {
        for (std::size_t i = 0; i < summands_.size(); ++i)
            if (summands_[i].label == label) return i;
        return std::nullopt;
    }

    /// Rows [first, second) of the stacked basis belonging to summand i.
    std::pair<std::size_t, std::size_t> block_range(std::size_t i) const {
        return {offsets_.at(i), offsets_.at(i) + summands_.at(i).space.dim()};
    }

    /// Coefficients of v with respect to the stacked summand bases,
    /// i.e. the unique c with c · stacked = v.
    Vec<F> coefficient_row(const Vec<F>& v) const {
        require_valid("coordinates");
        if (v.size() != ambient_) throw InvalidInput("coordinates: vector has wrong ambient dimension");
        return row_times_matrix(v, *stacked_inv_);
    }

    /// The unique per-summand components of v: component[i] lies in
    /// summand i and the components sum to v.
    std::vector<Vec<F>> coordinates(const Vec<F>& v) const {
        Vec<F> c = coefficient_row(v);
        std::vector<Vec<F>> parts;
        parts.reserve(summands_.size());
        for (std::size_t i = 0; i < summands_.size(); ++i) {
            auto [lo, hi] = block_range(i);
            Vec<F> part(ambient_, field_.zero());
            for (std::size_t r = lo; r < hi; ++r) {
                if (field_.is_zero(c[r])) continue;
                const auto& basis = summands_[i].space.basis();
                for (std::size_t j = 0; j < ambient_; ++j)
                    part[j] = field_.add(part[j], field_.mul(c[r], basis(r - lo, j)));
            }
            parts.push_back(std::move(part));
        }
        return parts;
    }

    /// Minimal index set S with U ⊆ ⊕_{i∈S} summand_i: exactly the
    /// summands on which some basis vector of U has a nonzero component.
    std::set<std::size_t> support(const Subspace<F>& u) const {
        require_valid("support");
        if (u.ambient_dim() != ambient_) throw InvalidInput("support: ambient dimension mismatch");
        std::set<std::size_t> result;
        for (std::size_t g = 0; g < u.dim(); ++g) {
            Vec<F> c = coefficient_row(u.basis().row(g));
            for (std::size_t i = 0; i < summands_.size(); ++i) {
                if (result.count(i)) continue;
                auto [lo, hi] = block_range(i);
                for (std::size_t r = lo; r < hi; ++r) {
                    if (!field_.is_zero(c[r])) {
                        result.insert(i);
                        break;
                    }
                }
            }
        }
        return result;
    }

    bool operator==(const Decomposition& o) const {
        if (!(field_ == o.field_) || ambient_ != o.ambient_ || distinguished_ != o.distinguished_ ||
            summands_.size() != o.summands_.size())
            return false;
        for (std::size_t i = 0; i < summands_.size(); ++i)
            if (summands_[i].label != o.summands_[i].label || !(summands_[i].space == o.summands_[i].space))
                return false;
        return true;
    }

private:
    void validate() {
        if (summands_.empty()) report_.problems.push_back("no summands");
        if (distinguished_ >= summands_.size()) report_.problems.push_back("distinguished index out of range");

        std::set<std::string> labels;
        std::size_t total = 0;
        offsets_.reserve(summands_.size());
        for (const auto& s : summands_) {
            offsets_.push_back(total);
            total += s.space.dim();
            if (!labels.insert(s.label).second) report_.problems.push_back("duplicate label '" + s.label + "'");
            if (s.space.ambient_dim() != ambient_)
                report_.problems.push_back("summand '" + s.label + "' has wrong ambient dimension");
            if (!(s.space.field() == field_))
                report_.problems.push_back("summand '" + s.label + "' is over a different field");
        }
        report_.dims_sum_to_ambient = (total == ambient_);
        if (!report_.problems.empty() || !report_.dims_sum_to_ambient) return;

        Matrix<F> stacked(field_, ambient_, ambient_);
        std::size_t r = 0;
        for (const auto& s : summands_)
            for (std::size_t i = 0; i < s.space.dim(); ++i) stacked.set_row(r++, s.space.basis().row(i));
        auto inv = inverted(stacked);
        report_.stacked_basis_invertible = inv.has_value();
        if (inv) stacked_inv_ = std::move(*inv);
    }

    void require_valid(const std::string& what) const {
        if (!is_valid()) throw InvalidInput(what + ": decomposition is invalid (" + report_.describe() + ")");
    }

    F field_;
    std::size_t ambient_;
    std::vector<Summand<F>> summands_;
    std::size_t distinguished_;
    ValidationReport report_;
    std::vector<std::size_t> offsets_;
    std::optional<Matrix<F>> stacked_inv_;
};

template <FieldType F>
const ValidationReport& validate_decomposition(const Decomposition<F>& d) {
    return d.validation();
}

/// Internal decomposition of k^n whose summands are the inverse images,
/// under the isomorphism v ↦ v·iso, of the coordinate blocks of the
/// stated sizes.
template <FieldType F>
Decomposition<F> pull_back_decomposition(const Matrix<F>& iso,
                                         const std::vector<std::pair<std::string, std::size_t>>& blocks,
                                         const std::string& distinguished_label) {
    const F& f = iso.field();
    const std::size_t n = iso.rows();
    if (iso.cols() != n) throw InvalidInput("pull_back_decomposition: matrix is not square");
    std::size_t total = 0;
    for (const auto& [label, d] : blocks) total += d;
    if (total != n) throw InvalidInput("pull_back_decomposition: block dimensions sum to " +
                                       std::to_string(total) + ", expected " + std::to_string(n));
    auto inv = inverted(iso);
    if (!inv) throw InvalidInput("pull_back_decomposition: matrix is singular");

    std::vector<Summand<F>> summands;
    std::optional<std::size_t> dist;
    std::size_t offset = 0;
    for (const auto& [label, d] : blocks) {
        std::vector<Vec<F>> rows;
        rows.reserve(d);
        for (std::size_t i = 0; i < d; ++i) rows.push_back(inv->row(offset + i));
        if (label == distinguished_label) dist = summands.size();
        summands.push_back({label, Subspace<F>::span_of(f, n, rows)});
        offset += d;
    }
    if (!dist) throw InvalidInput("pull_back_decomposition: distinguished label '" + distinguished_label +
                                  "' not among the blocks");
    return Decomposition<F>(f, n, std::move(summands), *dist);
}

} // namespace sumref
