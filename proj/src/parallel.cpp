#include "cremona/parallel.hpp"

#include <cstdlib>
#include <string>

namespace cremona {

unsigned worker_count() {
    if (const char* env = std::getenv("CREMONA_WORKERS")) {
        try {
            const long n = std::stol(env);
            if (n >= 1) return static_cast<unsigned>(n);
        } catch (const std::exception&) {
            // fall through to the default
        }
        return 1;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? hw : 1;
}

}  // namespace cremona
