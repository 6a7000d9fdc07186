#pragma once

#include <algorithm>
#include <set>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "sumref/instance.hpp"

namespace sumref {

struct CertCheck {
    std::string name;
    bool pass;
};

/// Witness that a refinement exists: label sets J0/I0 (sorted), the
/// refining summand Y with A ⊕ Y = B ⊕ (Σ_{J0} D_j), a complement of Y
/// inside Σ_{I0} C_i, and the identity checks that were run.
template <FieldType F>
struct RefinementCertificate {
    std::vector<std::string> j0;
    std::vector<std::string> i0;
    Subspace<F> y;
    Subspace<F> y_complement;
    std::vector<CertCheck> report;
};

using AnyCertificate = std::variant<RefinementCertificate<PrimeField>, RefinementCertificate<RationalField>>;

/// Which summand bases the refinement pulled into subspace arithmetic,
/// and how large the intermediate subspaces got. Coordinate solves
/// against the full stacked basis are deliberately not counted.
struct RefineTrace {
    std::set<std::size_t> side1_bases_used;
    std::set<std::size_t> side2_bases_used;
    std::size_t max_subspace_dim = 0;
    std::size_t hull_dim = 0;
};

template <FieldType F>
bool direct(const Subspace<F>& u, const Subspace<F>& w) {
    return intersect(u, w).is_zero();
}

/// Given a direct split `part ⊕ cosummand` of some module and a
/// submodule `between` with part ⊆ between ⊆ part + cosummand, the
/// induced complement of `part` inside `between` is cosummand ∩ between.
/// The split part = (part) ⊕ (returned value) is checked before returning.
template <FieldType F>
Subspace<F> induced_complement(const Subspace<F>& part, const Subspace<F>& cosummand,
                               const Subspace<F>& between) {
    if (!direct(part, cosummand))
        throw InvalidInput("induced_complement: the two summands are not independent");
    if (!between.contains(part))
        throw InvalidInput("induced_complement: first summand is not contained in the submodule");
    if (!sum(part, cosummand).contains(between))
        throw InvalidInput("induced_complement: submodule is not contained in the direct sum");

    Subspace<F> split = intersect(cosummand, between);
    if (!(sum(part, split) == between))
        throw InternalCheckFailure("induced_complement: split does not rebuild the submodule");
    if (!direct(part, split))
        throw InternalCheckFailure("induced_complement: split is not independent from the summand");
    return split;
}

template <FieldType F>
struct ChainSplit {
    Subspace<F> in_mid;  // ext ∩ mid, the part of ext that completes anchor to mid
    Subspace<F> off_mid; // ext ∩ (anchor + outer), its complement inside ext
};

/// Four-term refinement. Requires the chain
///     anchor ⊆ mid ⊆ anchor ⊕ ext ⊆ mid ⊕ outer
/// with anchor ⊕ ext and mid ⊕ outer direct. Produces
///     mid = anchor ⊕ (ext ∩ mid)
///     ext = (ext ∩ mid) ⊕ (ext ∩ (anchor ⊕ outer))
/// and checks the intermediate split identities before returning.
template <FieldType F>
ChainSplit<F> refine_chain(const Subspace<F>& anchor, const Subspace<F>& ext, const Subspace<F>& mid,
                           const Subspace<F>& outer) {
    if (!direct(anchor, ext)) throw InvalidInput("refine_chain: anchor and ext are not independent");
    if (!direct(mid, outer)) throw InvalidInput("refine_chain: mid and outer are not independent");
    Subspace<F> hull = sum(anchor, ext);
    if (!mid.contains(anchor)) throw InvalidInput("refine_chain: chain broken at anchor ⊆ mid");
    if (!hull.contains(mid)) throw InvalidInput("refine_chain: chain broken at mid ⊆ anchor + ext");
    if (!sum(mid, outer).contains(hull))
        throw InvalidInput("refine_chain: chain broken at anchor + ext ⊆ mid + outer");

    Subspace<F> in_mid = induced_complement(anchor, ext, mid);              // ext ∩ mid
    Subspace<F> outer_in_hull = induced_complement(mid, outer, hull);       // outer ∩ hull
    Subspace<F> off_mid = intersect(ext, sum(anchor, outer));

    // mid = anchor ⊕ (ext ∩ mid) is exactly what induced_complement certified.
    // The remaining split identities from the proof, re-derived here:
    if (!(sum(mid, outer_in_hull) == hull) || !direct(mid, outer_in_hull))
        throw InternalCheckFailure("refine_chain: hull does not split over mid");
    Subspace<F> three_way = sum(sum(anchor, in_mid), outer_in_hull);
    if (!(three_way == hull))
        throw InternalCheckFailure("refine_chain: three-part split does not rebuild the hull");
    Subspace<F> residual = intersect(sum(anchor, outer_in_hull), ext);
    if (!(sum(in_mid, residual) == ext) || !direct(in_mid, residual))
        throw InternalCheckFailure("refine_chain: ext does not split over mid");
    if (!(off_mid == residual))
        throw InternalCheckFailure("refine_chain: the two complement descriptions disagree");
    if (!(sum(in_mid, off_mid) == ext) || !direct(in_mid, off_mid))
        throw InternalCheckFailure("refine_chain: ext split identity failed");
    return {std::move(in_mid), std::move(off_mid)};
}

namespace detail {

template <FieldType F>
void note_dim(RefineTrace* trace, const Subspace<F>& s) {
    if (trace) trace->max_subspace_dim = std::max(trace->max_subspace_dim, s.dim());
}

/// Columns of the side-2 coefficient row belonging to the given summands.
template <FieldType F>
Matrix<F> coefficient_block(const Decomposition<F>& side, const Subspace<F>& space,
                            const std::vector<std::pair<std::size_t, std::size_t>>& ranges,
                            std::size_t width) {
    const F& f = side.field();
    Matrix<F> out(f, space.dim(), width);
    for (std::size_t r = 0; r < space.dim(); ++r) {
        Vec<F> c = side.coefficient_row(space.basis().row(r));
        std::size_t col = 0;
        for (auto [lo, hi] : ranges)
            for (std::size_t k = lo; k < hi; ++k) out(r, col++) = c[k];
    }
    return out;
}

template <FieldType F>
Subspace<F> lift_rows(const Matrix<F>& coeffs, const Subspace<F>& space) {
    std::vector<Vec<F>> rows;
    rows.reserve(coeffs.rows());
    for (std::size_t i = 0; i < coeffs.rows(); ++i)
        rows.push_back(row_times_matrix(coeffs.row(i), space.basis()));
    return Subspace<F>::span_of(space.field(), space.ambient_dim(), rows);
}

} // namespace detail

/// The constructive refinement. For a valid instance
///     A ⊕ (Σ_i C_i) = k^n = B ⊕ (Σ_j D_j)
/// computes finite label sets J0, I0 and a direct summand Y of
/// Σ_{I0} C_i with A ⊕ Y = B ⊕ (Σ_{J0} D_j), together with a complement
/// of Y. All subspace arithmetic stays inside the hull A + Σ_{I0} C_i;
/// the only full-width work is coordinate solves for support detection.
/// Any failed identity is an implementation bug and aborts loudly.
template <FieldType F>
RefinementCertificate<F> refine(const RefinementInstance<F>& inst, RefineTrace* trace = nullptr) {
    {
        auto problems = inst.problems();
        if (!problems.empty()) {
            std::string msg = "refine: invalid instance:";
            for (const auto& p : problems) msg += " " + p;
            throw InvalidInput(msg);
        }
    }
    const F& f = inst.field;
    const std::size_t n = inst.ambient;
    const Decomposition<F>& side1 = inst.side1;
    const Decomposition<F>& side2 = inst.side2;
    const std::size_t a_idx = side1.distinguished_index();
    const std::size_t b_idx = side2.distinguished_index();

    auto side1_space = [&](std::size_t i) -> const Subspace<F>& {
        if (trace) trace->side1_bases_used.insert(i);
        return side1.summand(i).space;
    };
    auto side2_space = [&](std::size_t i) -> const Subspace<F>& {
        if (trace) trace->side2_bases_used.insert(i);
        return side2.summand(i).space;
    };

    std::vector<CertCheck> report;
    auto ensure = [&](const std::string& name, bool pass) {
        report.push_back({name, pass});
        if (!pass) throw InternalCheckFailure("refine: identity '" + name + "' failed");
    };

    const Subspace<F>& a_space = side1_space(a_idx);
    detail::note_dim(trace, a_space);

    // Finite support of A on side 2; B's slot is forced into the block.
    std::set<std::size_t> j0_idx = side2.support(a_space);
    j0_idx.erase(b_idx);

    Subspace<F> b_aug = side2_space(b_idx);
    for (std::size_t j : j0_idx) b_aug = sum(b_aug, side2_space(j));
    detail::note_dim(trace, b_aug);
    ensure("a_inside_b_block", b_aug.contains(a_space));

    // Finite support of the augmented B block on side 1.
    std::set<std::size_t> i0_idx = side1.support(b_aug);
    i0_idx.erase(a_idx);

    Subspace<F> ext = Subspace<F>::zero(f, n); // Σ_{I0} C_i
    for (std::size_t i : i0_idx) ext = sum(ext, side1_space(i));
    detail::note_dim(trace, ext);
    Subspace<F> hull = sum(a_space, ext); // A ⊕ Σ_{I0} C_i
    detail::note_dim(trace, hull);
    if (trace) trace->hull_dim = hull.dim();
    ensure("b_block_inside_hull", hull.contains(b_aug));
    ensure("anchor_ext_independent", a_space.dim() + ext.dim() == hull.dim());

    // The chain hypothesis holds with Σ_{j∉J0} D_j as the outer summand.
    // That outer space is never materialized: membership in it is read
    // off side-2 coefficient rows, which keeps every subspace formed
    // here inside the hull.
    std::vector<std::pair<std::size_t, std::size_t>> b_block_ranges;
    std::size_t b_block_width = 0;
    {
        auto add = [&](std::size_t idx) {
            auto range = side2.block_range(idx);
            b_block_ranges.push_back(range);
            b_block_width += range.second - range.first;
        };
        add(b_idx);
        for (std::size_t j : j0_idx) add(j);
    }
    std::size_t outer_dim = n - b_block_width;
    ensure("b_block_outer_independent", b_aug.dim() == b_block_width);

    // outer ∩ hull = kernel of the projection of the hull onto the
    // augmented B block, computed in hull coordinates and lifted back.
    Matrix<F> hull_proj = detail::coefficient_block(side2, hull, b_block_ranges, b_block_width);
    Subspace<F> outer_in_hull = detail::lift_rows(left_kernel(hull_proj), hull);
    detail::note_dim(trace, outer_in_hull);

    // ext ∩ (A ⊕ outer): those x ∈ ext whose B-block coefficients lie in
    // the B-block image of A. Solved as a lifted kernel, independently of
    // the outer_in_hull route so the complement identity below is a real
    // cross-check.
    Matrix<F> ext_proj = detail::coefficient_block(side2, ext, b_block_ranges, b_block_width);
    Matrix<F> a_proj = detail::coefficient_block(side2, a_space, b_block_ranges, b_block_width);
    Subspace<F> off_mid(Subspace<F>::zero(f, n));
    {
        Matrix<F> stacked = Matrix<F>::vstack(ext_proj, a_proj);
        Matrix<F> ker = left_kernel(stacked);
        Matrix<F> ext_part(f, ker.rows(), ext.dim());
        for (std::size_t i = 0; i < ker.rows(); ++i)
            for (std::size_t j = 0; j < ext.dim(); ++j) ext_part(i, j) = ker(i, j);
        off_mid = detail::lift_rows(ext_part, ext);
    }
    detail::note_dim(trace, off_mid);

    Subspace<F> y = intersect(ext, b_aug);
    detail::note_dim(trace, y);

    // The split identities of the four-term refinement, with the outer
    // summand represented by outer_in_hull.
    ensure("b_block_equals_anchor_plus_y",
           sum(a_space, y) == b_aug && direct(a_space, y));
    ensure("hull_splits_over_b_block",
           sum(b_aug, outer_in_hull) == hull && direct(b_aug, outer_in_hull));
    ensure("hull_three_part_split",
           sum(sum(a_space, y), outer_in_hull) == hull &&
               b_aug.dim() + outer_in_hull.dim() == hull.dim());
    Subspace<F> anchor_outer_part = sum(a_space, outer_in_hull);
    detail::note_dim(trace, anchor_outer_part);
    Subspace<F> residual = intersect(anchor_outer_part, ext);
    detail::note_dim(trace, residual);
    ensure("ext_splits_over_b_block", sum(y, residual) == ext && direct(y, residual));
    ensure("complement_descriptions_agree", off_mid == residual);
    ensure("ext_equals_y_plus_complement", sum(y, off_mid) == ext && direct(y, off_mid));
    ensure("y_inside_ext", ext.contains(y));
    ensure("complement_inside_ext", ext.contains(off_mid));

    // Headline identity A ⊕ Y = B ⊕ (Σ_{J0} D_j), re-derived from the
    // pieces: the right side is b_aug by construction, directness of the
    // D side is side-2 validity plus the width count above.
    ensure("refined_sums_match", sum(a_space, y) == b_aug);
    (void)outer_dim;

    auto labels_of = [](const Decomposition<F>& side, const std::set<std::size_t>& idx) {
        std::vector<std::string> out;
        out.reserve(idx.size());
        for (std::size_t i : idx) out.push_back(side.summand(i).label);
        std::sort(out.begin(), out.end());
        return out;
    };

    return RefinementCertificate<F>{labels_of(side2, j0_idx), labels_of(side1, i0_idx), std::move(y),
                                    std::move(off_mid), std::move(report)};
}

/// Re-checks a certificate from raw bases only: no state is shared with
/// refine(). True iff
///   (a) A + Y = B + Σ_{J0} D_j,  (b) A ∩ Y = 0,
///   (c) the B side sum is direct over {B} ∪ J0,
///   (d) Y ⊕ Y_complement = Σ_{I0} C_i,  (e) Y ⊆ Σ_{I0} C_i.
template <FieldType F>
bool verify_certificate(const RefinementInstance<F>& inst, const RefinementCertificate<F>& cert,
                        std::vector<std::string>* failures = nullptr) {
    auto fail = [&](const std::string& why) {
        if (failures) failures->push_back(why);
        return false;
    };
    auto resolve = [&](const Decomposition<F>& side, const std::vector<std::string>& labels,
                       const char* which) {
        std::vector<std::size_t> idx;
        std::set<std::size_t> seen;
        for (const auto& label : labels) {
            auto i = side.index_of(label);
            if (!i) throw InvalidInput(std::string("verify_certificate: unknown label '") + label + "' in " + which);
            if (*i == side.distinguished_index())
                throw InvalidInput(std::string("verify_certificate: label '") + label + "' in " + which +
                                   " is the distinguished summand");
            if (!seen.insert(*i).second)
                throw InvalidInput(std::string("verify_certificate: duplicate label '") + label + "' in " + which);
            idx.push_back(*i);
        }
        return idx;
    };

    const F& f = inst.field;
    const std::size_t n = inst.ambient;
    std::vector<std::size_t> j0 = resolve(inst.side2, cert.j0, "J0");
    std::vector<std::size_t> i0 = resolve(inst.side1, cert.i0, "I0");

    if (cert.y.ambient_dim() != n || cert.y_complement.ambient_dim() != n)
        return fail("certificate subspaces have wrong ambient dimension");

    const Subspace<F>& a_space = inst.side1.distinguished_space();
    const Subspace<F>& b_space = inst.side2.distinguished_space();

    Subspace<F> d_sum = b_space;
    std::size_t d_dims = b_space.dim();
    for (std::size_t j : j0) {
        d_sum = sum(d_sum, inst.side2.summand(j).space);
        d_dims += inst.side2.summand(j).space.dim();
    }
    Subspace<F> c_sum = Subspace<F>::zero(f, n);
    std::size_t c_dims = 0;
    for (std::size_t i : i0) {
        c_sum = sum(c_sum, inst.side1.summand(i).space);
        c_dims += inst.side1.summand(i).space.dim();
    }

    bool ok = true;
    if (!(sum(a_space, cert.y) == d_sum)) ok = fail("A + Y differs from B + selected D summands");
    if (!direct(a_space, cert.y)) ok = fail("A and Y are not independent");
    if (d_sum.dim() != d_dims) ok = fail("B side sum is not direct over the selected summands");
    if (!(sum(cert.y, cert.y_complement) == c_sum)) ok = fail("Y + complement differs from the selected C summands");
    if (!direct(cert.y, cert.y_complement)) ok = fail("Y and its complement are not independent");
    if (c_sum.dim() != c_dims) ok = fail("C side sum is not direct over the selected summands");
    if (!c_sum.contains(cert.y)) ok = fail("Y is not contained in the selected C summands");
    return ok;
}

} // namespace sumref
