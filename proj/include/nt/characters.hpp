#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "nt/arith.hpp"
#include "nt/expsum.hpp"
#include "nt/unitgroup.hpp"

namespace nt {

class CharacterGroup;
using GroupPtr = std::shared_ptr<const CharacterGroup>;

// Exponent vector of one prime-power component w.r.t. the fixed generators
// of UnitGroupBasis (one slot for odd p and 2^{<=2}, two slots for 2^{>=3}).
struct LocalExponents {
    std::array<i64, 2> a{0, 0};
    bool operator==(const LocalExponents&) const = default;
};

class DirichletCharacter {
public:
    DirichletCharacter() = default;
    DirichletCharacter(GroupPtr group, std::vector<LocalExponents> exps);

    i64 modulus() const;
    const CharacterGroup& group() const { return *group_; }
    GroupPtr group_ptr() const { return group_; }
    const std::vector<LocalExponents>& exponents() const { return exps_; }

    // exact value: chi(x) = e(index / root_order()), or nullopt when gcd(x,q)>1
    std::optional<i64> index(i64 x) const;
    cplx operator()(i64 x) const;

    DirichletCharacter operator*(const DirichletCharacter& other) const;
    DirichletCharacter conj() const;
    DirichletCharacter pow(i64 n) const;

    i64 conductor() const;
    bool is_primitive() const;
    bool is_trivial() const;
    bool is_even() const;  // chi(-1) == 1

    // induce to modulus Q with modulus() | Q
    DirichletCharacter lift_to(i64 Q) const;
    // the primitive character inducing this one (modulus = conductor)
    DirichletCharacter primitive_part() const;

    // flat index within the group's character enumeration (mixed radix)
    i64 flat_index() const;

    bool operator==(const DirichletCharacter& o) const {
        return modulus() == o.modulus() && exps_ == o.exps_;
    }

private:
    GroupPtr group_;
    std::vector<LocalExponents> exps_;
};

// The full character group modulo q, with unit-group generators, dlog and
// p-adic log tables shared read-only by all characters mod q.
class CharacterGroup : public std::enable_shared_from_this<CharacterGroup> {
public:
    struct Component {
        i64 p;
        int beta;
        i64 pbeta;
        UnitGroupBasis basis;
        std::optional<PadicLogTable> logs;   // present when beta >= 2
        std::array<i64, 2> part_order{1, 1};
        std::array<i64, 2> stride{0, 0};     // root_order / part_order
        int nparts = 0;
    };

    static GroupPtr get(i64 q);   // cached, thread-safe

    i64 modulus() const { return q_; }
    const Factorization& fact() const { return fact_; }
    i64 order() const { return phi_; }        // number of characters = phi(q)
    i64 root_order() const { return M_; }     // values are e(k/M)
    const RootTable& roots() const { return *roots_; }
    size_t ncomp() const { return comps_.size(); }
    const Component& comp(size_t i) const { return comps_[i]; }

    bool is_unit(i64 x) const;

    DirichletCharacter character(std::vector<LocalExponents> exps) const;
    DirichletCharacter character_by_flat_index(i64 idx) const;
    DirichletCharacter trivial() const;

    std::vector<DirichletCharacter> all_characters() const;
    std::vector<DirichletCharacter> primitive_characters() const;
    std::vector<DirichletCharacter> even_characters() const;

    explicit CharacterGroup(i64 q);  // prefer get()

private:
    friend class DirichletCharacter;
    i64 q_;
    Factorization fact_;
    i64 phi_;
    i64 M_;
    std::vector<Component> comps_;
    std::unique_ptr<RootTable> roots_;
};

enum class CharFilter { all, primitive, even };

std::vector<DirichletCharacter> enumerate_characters(i64 q, CharFilter filter = CharFilter::all);

// ----- Postnikov machinery -----

struct PostnikovIndex {
    i64 p;
    int beta;
    i64 modulus;  // p^{beta-1} (odd p) or 2^{beta-2} (p = 2)
    i64 value;    // ell mod modulus
};

// The index ell of chi(1+pt) = e_{p^beta}(ell log_p(1+pt)) on the given
// prime-power component (beta >= 2 for odd p, beta >= 3 for p = 2).
PostnikovIndex postnikov_index(const DirichletCharacter& chi, size_t comp_idx);

// Global conductor-dropping index: for d | h, d | q, q | d^2 and q not
// dividing h, the unique ell mod q/(h,q) with chi(1 + (h,q) u) = e_{q/(h,q)}(ell u).
i64 conductor_drop_index(const DirichletCharacter& chi, i64 h, i64 d);

// The coset {alpha * psi : psi mod d} inside the characters mod q, d | q.
std::vector<DirichletCharacter> coset(const DirichletCharacter& alpha, i64 d);

}  // namespace nt
