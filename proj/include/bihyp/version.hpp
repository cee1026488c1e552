#ifndef BIHYP_VERSION_HPP
#define BIHYP_VERSION_HPP

namespace bihyp {

inline constexpr const char* kVersion = "0.1.0";
inline constexpr const char* kToolName = "bihyp";

}  // namespace bihyp

#endif
