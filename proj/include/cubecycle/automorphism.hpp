#pragma once

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "cubecycle/core.hpp"
#include "cubecycle/topology.hpp"
#include "cubecycle/walk.hpp"

namespace cubecycle {

// A structured vertex relabeling of SSQ_n or BSQ_n.
//
//   xor_mask:     u -> u XOR mask. Preserves SSQ group constraints whenever
//                 the mask itself is a valid SSQ label.
//   group_affine: per 4-bit group, (a, b) -> (a + shift_a, b + shift_b) or
//                 (a + shift_a, shift_b - b) mod 4, plus an XOR mask on the
//                 2-bit suffix. The reflected form is what keeps the signed
//                 b-rule of BSQ intact when shift_a is odd.
//   group_perm:   permutes the 4-bit group positions 1..k.
//
// `verified` is only set by oracle verification; apply-to-walk requires it.
class Automorphism {
public:
    enum class Kind { xor_mask, group_affine, group_perm };

    struct GroupMap {
        unsigned shift_a = 0;  // mod 4
        unsigned shift_b = 0;  // mod 4
        bool reflect = false;  // b -> shift_b - b instead of b + shift_b
    };

    static Automorphism identity(CubeFamily family, Dimension dim) {
        return xor_mask(family, dim, Label{0});
    }

    static Automorphism xor_mask(CubeFamily family, Dimension dim, Label mask) {
        Automorphism a(Kind::xor_mask, family, dim);
        a.mask_ = mask;
        return a;
    }

    static Automorphism group_affine(CubeFamily family, Dimension dim,
                                     std::vector<GroupMap> maps, unsigned suffix_mask) {
        if (static_cast<int>(maps.size()) != dim.groups())
            throw_error(Errc::bad_argument, "need one group map per group");
        Automorphism a(Kind::group_affine, family, dim);
        a.maps_ = std::move(maps);
        a.suffix_mask_ = suffix_mask & 3u;
        return a;
    }

    static Automorphism group_perm(CubeFamily family, Dimension dim, std::vector<int> perm) {
        if (static_cast<int>(perm.size()) != dim.groups())
            throw_error(Errc::bad_argument, "permutation must cover groups 1..k");
        std::vector<int> seen(perm.size(), 0);
        for (int p : perm) {
            if (p < 1 || p > static_cast<int>(perm.size()) || seen[static_cast<std::size_t>(p - 1)]++)
                throw_error(Errc::bad_argument, "not a permutation of 1..k");
        }
        Automorphism a(Kind::group_perm, family, dim);
        a.perm_ = std::move(perm);
        return a;
    }

    Kind kind() const { return kind_; }
    CubeFamily family() const { return family_; }
    Dimension dim() const { return dim_; }
    bool verified() const { return verified_; }
    void mark_verified() { verified_ = true; }

    Label apply(Label u) const {
        switch (kind_) {
            case Kind::xor_mask:
                return Label{u.bits ^ mask_.bits};
            case Kind::group_affine: {
                Label out{u.bits & 3ull};
                out.bits ^= suffix_mask_;
                for (int j = 1; j <= dim_.groups(); ++j) {
                    const GroupMap& m = maps_[static_cast<std::size_t>(j - 1)];
                    unsigned g = group_value(u, j);
                    unsigned a = ((g >> 2) + m.shift_a) & 3u;
                    unsigned b = m.reflect ? (m.shift_b - (g & 3u)) & 3u : ((g & 3u) + m.shift_b) & 3u;
                    out = with_group(out, j, (a << 2) | b);
                }
                return out;
            }
            case Kind::group_perm: {
                Label out{u.bits & 3ull};
                // group j's value moves to position perm[j-1]
                for (int j = 1; j <= dim_.groups(); ++j)
                    out = with_group(out, perm_[static_cast<std::size_t>(j - 1)], group_value(u, j));
                return out;
            }
        }
        return u;
    }

    Automorphism inverse() const {
        Automorphism inv(kind_, family_, dim_);
        inv.verified_ = verified_;
        switch (kind_) {
            case Kind::xor_mask:
                inv.mask_ = mask_;
                break;
            case Kind::group_affine: {
                inv.suffix_mask_ = suffix_mask_;
                inv.maps_.reserve(maps_.size());
                for (const GroupMap& m : maps_) {
                    if (m.reflect)
                        inv.maps_.push_back(GroupMap{(0u - m.shift_a) & 3u, m.shift_b, true});
                    else
                        inv.maps_.push_back(GroupMap{(0u - m.shift_a) & 3u, (0u - m.shift_b) & 3u, false});
                }
                break;
            }
            case Kind::group_perm: {
                inv.perm_.assign(perm_.size(), 0);
                for (int j = 1; j <= static_cast<int>(perm_.size()); ++j)
                    inv.perm_[static_cast<std::size_t>(perm_[static_cast<std::size_t>(j - 1)] - 1)] = j;
                break;
            }
        }
        return inv;
    }

private:
    Automorphism(Kind kind, CubeFamily family, Dimension dim)
        : kind_(kind), family_(family), dim_(dim) {}

    Kind kind_;
    CubeFamily family_;
    Dimension dim_;
    bool verified_ = false;
    Label mask_{0};
    std::vector<GroupMap> maps_;
    unsigned suffix_mask_ = 0;
    std::vector<int> perm_;
};

namespace detail {

// Unverified translation sending u to the all-zero label; the public
// constructors in embedding.hpp verify before handing these out.
inline Automorphism raw_ssq_translation(Dimension dim, Label u) {
    validate_label(CubeFamily::ssq, dim, u.bits);
    return Automorphism::xor_mask(CubeFamily::ssq, dim, u);
}

inline Automorphism raw_bsq_translation(Dimension dim, Label u) {
    validate_label(CubeFamily::bsq, dim, u.bits);
    std::vector<Automorphism::GroupMap> maps;
    maps.reserve(static_cast<std::size_t>(dim.groups()));
    for (int j = 1; j <= dim.groups(); ++j) {
        unsigned g = group_value(u, j);
        unsigned a = g >> 2, b = g & 3u;
        if (a & 1u)
            maps.push_back(Automorphism::GroupMap{(0u - a) & 3u, b, true});
        else
            maps.push_back(Automorphism::GroupMap{(0u - a) & 3u, (0u - b) & 3u, false});
    }
    return Automorphism::group_affine(CubeFamily::bsq, dim, std::move(maps),
                                      static_cast<unsigned>(u.bits & 3u));
}

inline Automorphism raw_group_swap(CubeFamily family, Dimension dim, int j1, int j2) {
    if (j1 < 1 || j1 > dim.groups() || j2 < 1 || j2 > dim.groups())
        throw_error(Errc::index_out_of_range,
                    "group index out of range 1.." + std::to_string(dim.groups()));
    std::vector<int> perm(static_cast<std::size_t>(dim.groups()));
    std::iota(perm.begin(), perm.end(), 1);
    std::swap(perm[static_cast<std::size_t>(j1 - 1)], perm[static_cast<std::size_t>(j2 - 1)]);
    return Automorphism::group_perm(family, dim, std::move(perm));
}

}  // namespace detail

// Image of a walk under a verified automorphism.
inline Walk apply(const Automorphism& aut, const Walk& w) {
    if (!aut.verified())
        throw_error(Errc::unverified, "automorphism must be verified before applying to walks");
    Walk out{{}, w.closed};
    out.vertices.reserve(w.vertices.size());
    for (Label u : w.vertices) out.vertices.push_back(aut.apply(u));
    return out;
}

}  // namespace cubecycle
