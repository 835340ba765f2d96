#ifndef ENRIQUES_BUNDLED_HPP
#define ENRIQUES_BUNDLED_HPP

#include <cstddef>

namespace enriques::detail {

struct BundledFile {
    const char* name;
    const char* text;
};

// Generated at build time from data/cases/*.json (sorted by filename).
const BundledFile* bundled_files(std::size_t& count);

} // namespace enriques::detail

#endif
