#ifndef DISCHARGEKIT_ERROR_HPP
#define DISCHARGEKIT_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace dischargekit {

enum class errc {
    loop_edge,
    duplicate_edge,
    dangling_vertex_index,
    disconnected_embedding,
    invalid_embedding,
    unsupported_length,
    vertex_not_on_cycle,
    size_limit_exceeded,
    overlapping_trios,
    parse_error,
};

inline std::string_view to_string(errc code)
{
    switch (code) {
    case errc::loop_edge: return "LoopEdge";
    case errc::duplicate_edge: return "DuplicateEdge";
    case errc::dangling_vertex_index: return "DanglingVertexIndex";
    case errc::disconnected_embedding: return "DisconnectedEmbedding";
    case errc::invalid_embedding: return "InvalidEmbedding";
    case errc::unsupported_length: return "UnsupportedLength";
    case errc::vertex_not_on_cycle: return "VertexNotOnCycle";
    case errc::size_limit_exceeded: return "SizeLimitExceeded";
    case errc::overlapping_trios: return "OverlappingTrios";
    case errc::parse_error: return "ParseError";
    }
    return "Unknown";
}

/// Every failure raised by the library carries one of the codes above.
class error : public std::runtime_error {
public:
    error(errc code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what)
        , code_(code)
    {
    }

    errc code() const noexcept { return code_; }

private:
    errc code_;
};

} // namespace dischargekit

#endif // DISCHARGEKIT_ERROR_HPP
