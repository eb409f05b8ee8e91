#include "crmin/frame.hpp"

#include "crmin/errors.hpp"

namespace crmin {

const char* frame_kind_name(FrameKind k) {
    switch (k) {
        case FrameKind::T: return "T";
        case FrameKind::Tau: return "TAU";
        case FrameKind::Intrinsic: return "M_INTRINSIC";
        case FrameKind::Full: return "FULL";
    }
    return "?";
}

VariableFrame::VariableFrame(FrameKind k, int cr_dim, int codim) : kind(k), m(cr_dim), d(codim) {
    if (m < 1 || d < 1)
        throw ValidationError("frame requires m >= 1 and d >= 1");
}

std::size_t VariableFrame::arity() const {
    switch (kind) {
        case FrameKind::T:
        case FrameKind::Tau: return static_cast<std::size_t>(m + d);
        case FrameKind::Intrinsic: return static_cast<std::size_t>(2 * m + d);
        case FrameKind::Full: return static_cast<std::size_t>(2 * (m + d));
    }
    return 0;
}

std::size_t VariableFrame::zeta_offset() const {
    // In Tau the zeta block leads; elsewhere it follows z and w.
    return kind == FrameKind::Tau ? 0 : static_cast<std::size_t>(m + d);
}

std::size_t VariableFrame::xi_offset() const {
    return kind == FrameKind::Tau ? static_cast<std::size_t>(m)
                                  : static_cast<std::size_t>(2 * m + d);
}

std::string VariableFrame::var_name(std::size_t index) const {
    if (index >= arity())
        throw ValidationError("variable index out of range for frame " + describe());
    auto block = [&](std::size_t i) -> std::string {
        switch (kind) {
            case FrameKind::T:
                return i < static_cast<std::size_t>(m) ? "z" + std::to_string(i + 1)
                                                       : "w" + std::to_string(i - m + 1);
            case FrameKind::Tau:
                return i < static_cast<std::size_t>(m) ? "zeta" + std::to_string(i + 1)
                                                       : "xi" + std::to_string(i - m + 1);
            case FrameKind::Intrinsic:
                if (i < static_cast<std::size_t>(m)) return "z" + std::to_string(i + 1);
                if (i < static_cast<std::size_t>(m + d)) return "w" + std::to_string(i - m + 1);
                return "zeta" + std::to_string(i - m - d + 1);
            case FrameKind::Full:
                if (i < static_cast<std::size_t>(m)) return "z" + std::to_string(i + 1);
                if (i < static_cast<std::size_t>(m + d)) return "w" + std::to_string(i - m + 1);
                if (i < static_cast<std::size_t>(2 * m + d)) return "zeta" + std::to_string(i - m - d + 1);
                return "xi" + std::to_string(i - 2 * m - d + 1);
        }
        return "?";
    };
    return block(index);
}

std::optional<std::size_t> VariableFrame::find_var(const std::string& name) const {
    auto parse_indexed = [&](const std::string& prefix, int count) -> std::optional<int> {
        if (name.size() <= prefix.size() || name.compare(0, prefix.size(), prefix) != 0)
            return std::nullopt;
        int idx = 0;
        for (std::size_t i = prefix.size(); i < name.size(); ++i) {
            char c = name[i];
            if (c < '0' || c > '9') return std::nullopt;
            idx = idx * 10 + (c - '0');
            if (idx > count) return std::nullopt;
        }
        if (idx < 1 || idx > count) return std::nullopt;
        return idx - 1;
    };
    // "zeta" must be probed before "z": both are prefixes of "zeta1".
    if (has_zeta())
        if (auto i = parse_indexed("zeta", m)) return zeta_offset() + *i;
    if (has_xi())
        if (auto i = parse_indexed("xi", d)) return xi_offset() + *i;
    if (has_z())
        if (auto i = parse_indexed("z", m)) return z_offset() + *i;
    if (has_w())
        if (auto i = parse_indexed("w", d)) return w_offset() + *i;
    return std::nullopt;
}

std::vector<std::size_t> VariableFrame::conjugate_slot_map() const {
    std::vector<std::size_t> map(arity());
    switch (kind) {
        case FrameKind::T:
        case FrameKind::Tau:
            // z_i <-> zeta_i and w_j <-> xi_j occupy the same slots.
            for (std::size_t i = 0; i < map.size(); ++i) map[i] = i;
            return map;
        case FrameKind::Full: {
            std::size_t n = static_cast<std::size_t>(m + d);
            for (std::size_t i = 0; i < n; ++i) {
                map[i] = i + n; // z->zeta, w->xi
                map[i + n] = i; // zeta->z, xi->w
            }
            return map;
        }
        case FrameKind::Intrinsic:
            throw ValidationError("conjugation is not defined on the intrinsic frame");
    }
    return map;
}

VariableFrame VariableFrame::conjugate_frame() const {
    switch (kind) {
        case FrameKind::T: return {FrameKind::Tau, m, d};
        case FrameKind::Tau: return {FrameKind::T, m, d};
        case FrameKind::Full: return *this;
        case FrameKind::Intrinsic:
            throw ValidationError("conjugation is not defined on the intrinsic frame");
    }
    return *this;
}

std::string VariableFrame::describe() const {
    return std::string(frame_kind_name(kind)) + "(m=" + std::to_string(m) +
           ",d=" + std::to_string(d) + ")";
}

} // namespace crmin
