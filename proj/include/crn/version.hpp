#ifndef CRN_VERSION_HPP
#define CRN_VERSION_HPP

namespace crn {

inline constexpr const char* kToolName = "crnctl";
inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace crn

#endif
