#ifndef CRMIN_FRAME_HPP
#define CRMIN_FRAME_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace crmin {

// The four variable frames a series can live in. t = (z, w) are the manifold
// coordinates, tau = (zeta, xi) the conjugate ones; Intrinsic is the chart
// (z, w, zeta) on the complexified manifold with xi eliminated.
enum class FrameKind { T, Tau, Intrinsic, Full };

const char* frame_kind_name(FrameKind k);

// A frame is value-comparable: two series may interact only when their
// frames agree exactly (same kind, same m, same d).
struct VariableFrame {
    FrameKind kind;
    int m; // CR dimension: number of z (and zeta) variables
    int d; // codimension: number of w (and xi) variables

    VariableFrame(FrameKind k, int cr_dim, int codim);

    std::size_t arity() const;

    // Variable order: z1..zm, w1..wd, zeta1..zetam, xi1..xid, with each block
    // present only when the frame contains it.
    std::string var_name(std::size_t index) const;
    std::optional<std::size_t> find_var(const std::string& name) const;

    // Block offsets; a block absent from the frame has no meaningful offset.
    std::size_t z_offset() const { return 0; }
    std::size_t w_offset() const { return static_cast<std::size_t>(m); }
    std::size_t zeta_offset() const;
    std::size_t xi_offset() const;

    bool has_zeta() const { return kind != FrameKind::T; }
    bool has_xi() const { return kind == FrameKind::Tau || kind == FrameKind::Full; }
    bool has_z() const { return kind != FrameKind::Tau; }
    bool has_w() const { return kind != FrameKind::Tau; }

    // Index permutation realizing the bar operator (z<->zeta, w<->xi).
    // Defined for T (target Tau), Tau (target T) and Full (self-map).
    std::vector<std::size_t> conjugate_slot_map() const;
    VariableFrame conjugate_frame() const;

    bool operator==(const VariableFrame& o) const {
        return kind == o.kind && m == o.m && d == o.d;
    }
    bool operator!=(const VariableFrame& o) const { return !(*this == o); }

    std::string describe() const;
};

} // namespace crmin

#endif
