#include "scffd/primes.hpp"

#include <mutex>
#include <vector>

namespace scffd {

bool is_prime_int(const Integer& n) {
    Integer a = abs_int(n);
    if (a < 2) return false;
    if (a < 4) return true;
    if (a % 2 == 0) return false;
    for (Integer d = 3; d * d <= a; d += 2)
        if (a % d == 0) return false;
    return true;
}

namespace {
std::vector<Integer>& prime_cache() {
    static std::vector<Integer> cache{2, 3, 5, 7, 11, 13};
    return cache;
}
std::mutex cache_mutex;
}  // namespace

Integer nth_prime(std::size_t index) {
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto& cache = prime_cache();
    while (cache.size() <= index) {
        Integer c = cache.back() + 2;
        while (!is_prime_int(c)) c += 2;
        cache.push_back(c);
    }
    return cache[index];
}

std::optional<std::size_t> prime_index(const Integer& n) {
    Integer a = abs_int(n);
    if (!is_prime_int(a)) return std::nullopt;
    std::size_t i = 0;
    while (true) {
        Integer p = nth_prime(i);
        if (p == a) return i;
        if (p > a) return std::nullopt;
        ++i;
    }
}

}  // namespace scffd
