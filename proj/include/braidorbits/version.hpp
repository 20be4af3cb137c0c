#ifndef BRAIDORBITS_VERSION_HPP
#define BRAIDORBITS_VERSION_HPP

namespace braidorbits {

// Bump when any algorithmic change can alter computed artifacts; cache
// keys and certificates embed it.
inline constexpr char kVersion[] = "braidorbits 1.0.0";

}  // namespace braidorbits

#endif  // BRAIDORBITS_VERSION_HPP
