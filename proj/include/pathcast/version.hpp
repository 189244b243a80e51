#ifndef PATHCAST_VERSION_HPP_
#define PATHCAST_VERSION_HPP_

#define PATHCAST_VERSION "0.1.0"

#endif  // PATHCAST_VERSION_HPP_
