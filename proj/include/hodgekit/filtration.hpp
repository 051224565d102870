#pragma once

#include "hodgekit/subspace.hpp"

#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace hodgekit::filt {

enum class Direction { Decreasing, Increasing };

/// Finite filtration of Q(i)^n by subspaces.
///
/// Stored as a canonical list of steps (index, space): the filtration takes
/// the value of the last step whose index is <= the query index. Below the
/// first step it is the whole space (decreasing) or zero (increasing). The
/// first step is the last index carrying the whole space (resp. zero); the
/// last step is the first index carrying zero (resp. the whole space); every
/// step in between is an index where the value changes.
class Filtration {
public:
    Filtration() = default;

    /// Builds from specified values; gaps hold the previous value, missing
    /// ends are completed. Throws InvalidInput if the spaces are not nested.
    Filtration(Direction dir, std::size_t ambient, std::vector<std::pair<int, Subspace>> values);

    static Filtration decreasing(std::size_t ambient, std::vector<std::pair<int, Subspace>> values) {
        return Filtration(Direction::Decreasing, ambient, std::move(values));
    }
    static Filtration increasing(std::size_t ambient, std::vector<std::pair<int, Subspace>> values) {
        return Filtration(Direction::Increasing, ambient, std::move(values));
    }
    /// One graded piece at `index`: F^index = V, F^{index+1} = 0 (decreasing)
    /// or W_{index-1} = 0, W_index = V (increasing).
    static Filtration trivial(Direction dir, std::size_t ambient, int index);

    Direction direction() const { return dir_; }
    bool decreasing() const { return dir_ == Direction::Decreasing; }
    std::size_t ambient_dim() const { return ambient_; }
    const std::vector<std::pair<int, Subspace>>& steps() const { return steps_; }

    /// Value at an index (F^p or W_n).
    Subspace at(int index) const;
    /// (F^p, F^{p+1}) or (W_n, W_{n-1}).
    std::pair<Subspace, Subspace> gr_bounds(int index) const;
    Subquotient gr(int index) const;
    /// Indices with a nonzero graded piece, ascending.
    std::vector<int> jumps() const;
    /// Index range outside which the filtration is constant (inclusive,
    /// widened by one on each side so every change is observed).
    std::pair<int, int> index_range() const;

    /// (F[n])^p = F^{n+p}; (W[n])_q = W_{q-n}.
    Filtration shift(int n) const;
    Filtration conj() const;
    /// Increasing W as the decreasing filtration F^i = W_{-i}, and back.
    Filtration flipped() const;
    bool is_real() const;

    /// Image filtration under f (target ambient f.rows()).
    Filtration image_under(const Mat& f) const;
    /// Filtration on a subspace B, in the coordinates of B's RREF basis.
    Filtration restricted_to(const Subspace& b) const;
    /// Filtration induced on a subquotient (coordinates of `sq`).
    Filtration on_subquotient(const Subquotient& sq) const;

    friend bool operator==(const Filtration& a, const Filtration& b) {
        return a.dir_ == b.dir_ && a.ambient_ == b.ambient_ && a.steps_ == b.steps_;
    }

private:
    Direction dir_ = Direction::Decreasing;
    std::size_t ambient_ = 0;
    std::vector<std::pair<int, Subspace>> steps_;
};

/// Evaluates a filtration through a function of the index over a range and
/// builds the canonical result (helper shared by the derived filtrations).
template <class Fn>
Filtration tabulate(Direction dir, std::size_t ambient, int lo, int hi, Fn&& value_at) {
    std::vector<std::pair<int, Subspace>> values;
    for (int k = lo; k <= hi; ++k) values.emplace_back(k, value_at(k));
    return Filtration(dir, ambient, std::move(values));
}

/// A linear map between filtered spaces with f(F^n) ⊆ F^n checked at construction.
class FilteredMap {
public:
    FilteredMap(Mat map, Filtration source, Filtration target);

    const Mat& map() const { return map_; }
    const Filtration& source() const { return source_; }
    const Filtration& target() const { return target_; }

private:
    Mat map_;
    Filtration source_;
    Filtration target_;
};

/// true iff f(F^n) ⊆ G^n for every n.
bool is_compatible(const Mat& f, const Filtration& source, const Filtration& target);

struct InducedFiltrations {
    Filtration on_sub;       ///< on B, coordinates of B's RREF basis
    Filtration on_quotient;  ///< on ambient/B, quotient coordinates
    Subquotient quotient;    ///< presentation of ambient/B
};
InducedFiltrations induced(const Filtration& f, const Subspace& b);

struct GrPiece {
    int index;
    Subquotient piece;  ///< F^n / F^{n+1} (or W_n / W_{n-1}), projection from F^n
};
/// Nonzero graded pieces in ascending index order.
std::vector<GrPiece> gr(const Filtration& f);

struct StrictnessReport {
    bool strict = true;
    std::optional<int> index;  ///< first failing index
    Vec witness;               ///< a vector of (im f ∩ G^n) not in f(F^n)
};
StrictnessReport is_strict(const FilteredMap& f);
StrictnessReport is_strict(const Mat& f, const Filtration& source, const Filtration& target);

/// dim Gr^n_G Gr^m_F keyed by (m, n), and dim Gr^m_F Gr^n_G keyed the same
/// way; the two tables agree (Zassenhaus).
struct TwoFiltrationTable {
    std::map<std::pair<int, int>, std::size_t> g_of_f;
    std::map<std::pair<int, int>, std::size_t> f_of_g;
};
/// Throws Inconsistent if the two computations disagree.
TwoFiltrationTable two_filtration_gr(const Filtration& f, const Filtration& g);

struct OppositenessReport {
    bool opposite = false;
    /// A^{p,q} = F^p ∩ G^q for p+q = n when opposite.
    std::map<std::pair<int, int>, Subspace> pieces;
    /// First (p,q) with p+q != n and Gr^p_F Gr^q_G != 0 when not opposite.
    std::optional<std::pair<int, int>> offending;
};
OppositenessReport check_n_opposite(const Filtration& f, const Filtration& g, int n);

/// Filtration on the Kronecker product space: F^p = sum_a F^a ⊗ G^{p-a}
/// (same rule for increasing filtrations). Both must point the same way.
Filtration tensor(const Filtration& f, const Filtration& g);
/// Filtration on the dual space under the pairing sum_k x_k y_k:
/// F^p(V*) = ann F^{1-p}, W_a(V*) = ann W_{-a-1}.
Filtration dual(const Filtration& f);
/// Filtration on V ⊕ V' (coordinates of V first).
Filtration direct_sum(const Filtration& f, const Filtration& g);

/// Embeds a subspace of Q(i)^n into Q(i)^{offset+n+...} at the given offset.
Subspace embed(const Subspace& s, std::size_t offset, std::size_t ambient);

}  // namespace hodgekit::filt
