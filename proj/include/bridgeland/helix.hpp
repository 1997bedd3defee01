#pragma once

#include "bridgeland/lattice.hpp"

#include <Eigen/Core>

#include <cstddef>
#include <string>
#include <vector>

namespace bridgeland {

/// An exceptional object Sheaf[shift] at the level of K-theory. cls is the normalized
/// representative: rank > 0, or rank 0 and c1.H0 > 0, or rank 0, c1.H0 = 0 and ch2 > 0,
/// where H0 = reference_ample(surface).
struct ExcObject {
    std::string label;
    ChernCharacter cls;
    int shift = 0;

    /// (-1)^shift * cls
    ChernCharacter k_class() const;

    friend bool operator==(const ExcObject& lhs, const ExcObject& rhs) {
        return lhs.cls == rhs.cls && lhs.shift == rhs.shift;
    }
};

/// "O(-1,1)[1]", "O_E(E)", ...
std::string display_name(const ExcObject& e);

/// "O", "O(1,-2)" on P1xP1; "O", "O(E)", "O(-E-2F)", "O(2E+3F)" on BlpP2.
std::string line_bundle_label(Surface s, const NSClass& L);

/// Builds the object whose K-class is k: normalizes the sign and picks the shift of the
/// required parity among {base_shift, base_shift + 1}. Throws std::logic_error for k = 0.
ExcObject object_from_k_class(const ChernCharacter& k, int base_shift, std::string label);

/// Names line bundles and O_E(E) canonically, otherwise returns fallback.
std::string canonical_label(const ChernCharacter& cls, const std::string& fallback);

ExcObject line_bundle_object(Surface s, const NSClass& L, int shift = 0);

struct ExcCollection {
    Surface surface;
    std::vector<ExcObject> objects;

    std::size_t size() const { return objects.size(); }
    const ExcObject& operator[](std::size_t i) const { return objects[i]; }

    friend bool operator==(const ExcCollection& lhs, const ExcCollection& rhs) {
        return lhs.surface == rhs.surface && lhs.objects == rhs.objects;
    }
};

/// [L_A B] = [B] - chi([A], [B]) [A]. The shift of the result is shift(B) or shift(B) + 1.
ExcObject left_mutation(const ExcObject& A, const ExcObject& B);

/// L_{A_1} L_{A_2} ... L_{A_k} (B).
ExcObject left_mutation_through(const std::vector<ExcObject>& As, const ExcObject& B);

/// F_i = L_{E_1} ... L_{E_{i-1}} (E_i), returned in the order (F_n, ..., F_1). For a full
/// collection of length 4 the first output is checked against E_n (x) omega [2]; a mismatch throws
/// std::logic_error.
ExcCollection dual_collection(const ExcCollection& E);

struct QuiverData {
    /// arrows(i, j) = number of arrows from vertex i to vertex j (0-based), nonzero only for i < j.
    Eigen::Matrix<long, Eigen::Dynamic, Eigen::Dynamic> arrows;
    std::vector<std::string> labels;

    std::size_t size() const { return labels.size(); }
};

/// Arrow counts n_ij = dim Hom^1(F_j, F_i) for i < j, where vertex i (1-based) is F_i and F is
/// given in the order (F_n, ..., F_1) produced by dual_collection. concentration_assumed is the
/// caller's declaration that each Hom^*(F_j, F_i) lives in a single degree p in {1, 2}; the sign of
/// chi([F_j], [F_i]) then picks p, and only p = 1 contributes arrows. Throws
/// std::domain_error("concentration assumption fails for (i,j)") when that degree is incompatible
/// with the shifts of F_i and F_j.
QuiverData quiver_arrows(const ExcCollection& F, bool concentration_assumed,
                         const std::vector<std::string>& vertex_labels = {});

/// A helix generated by a base collection: E_{i-n} = E_i (x) omega, with shift(E_{i-n}) =
/// shift(E_i) + period_shift.
class Helix {
public:
    explicit Helix(ExcCollection base, int period_shift = 0);

    const ExcCollection& base() const { return base_; }
    int period_shift() const { return period_shift_; }
    std::size_t period() const { return base_.size(); }

    ExcObject object(long index) const;

private:
    ExcCollection base_;
    int period_shift_;
};

/// (E_start, ..., E_{start+n-1}).
ExcCollection thread(const Helix& h, long start);

/// Object-wise twist by O(L); shifts unchanged. Throws for non-integral L.
ExcCollection twist_collection(const ExcCollection& E, const NSClass& L);

/// The left tilt at E_star: in the thread ending at E_star, E^a is the set of objects with arrows
/// into E_star. E_star is replaced by L_{E^a}(E_star)[-1], placed just left of the left-most
/// object of E^a. Throws std::domain_error("height function with level -1 undefined") when no
/// arrows enter E_star.
Helix left_tilt(const Helix& h, long star);

}  // namespace bridgeland
