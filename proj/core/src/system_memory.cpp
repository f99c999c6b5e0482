#include <unistd.h>

#include <fstream>
#include <sstream>
#include <string>

#include "gdseq/errors.hpp"

namespace gdseq {

std::size_t available_memory_bytes() {
    std::ifstream meminfo("/proc/meminfo");
    std::string line;
    while (std::getline(meminfo, line)) {
        if (line.rfind("MemAvailable:", 0) == 0) {
            std::istringstream fields(line.substr(13));
            std::size_t kib = 0;
            if (fields >> kib) {
                return kib * 1024;
            }
        }
    }
    const long pages = sysconf(_SC_AVPHYS_PAGES);
    const long page_size = sysconf(_SC_PAGESIZE);
    if (pages > 0 && page_size > 0) {
        return static_cast<std::size_t>(pages) * static_cast<std::size_t>(page_size);
    }
    return static_cast<std::size_t>(1) << 30;
}

}  // namespace gdseq
