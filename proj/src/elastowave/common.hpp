// Copyright 2026 The Elastowave Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ELASTOWAVE_COMMON_HPP
#define ELASTOWAVE_COMMON_HPP

#include <cstddef>
#include <cstdlib>
#include <functional>
#include <new>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace elastowave {

// Contract violations (wrong representation tag, insufficient jet depth, ...).
class contract_error : public std::logic_error {
  public:
    explicit contract_error(const std::string& what) : std::logic_error(what) {}
};

// Bad run configuration (out-of-range k, R0 > L/4, unknown keys, ...).
class config_error : public std::runtime_error {
  public:
    explicit config_error(const std::string& what) : std::runtime_error(what) {}
};

// 64-byte aligned allocator so FFTW new-array execution keeps SIMD kernels.
template <class T>
struct aligned_allocator {
    using value_type = T;
    static constexpr std::size_t alignment = 64;

    aligned_allocator() noexcept = default;
    template <class U>
    aligned_allocator(const aligned_allocator<U>&) noexcept {}

    T* allocate(std::size_t n) {
        void* p = std::aligned_alloc(alignment, ((n * sizeof(T) + alignment - 1) / alignment) * alignment);
        if (!p)
            throw std::bad_alloc();
        return static_cast<T*>(p);
    }
    void deallocate(T* p, std::size_t) noexcept { std::free(p); }

    template <class U>
    bool operator==(const aligned_allocator<U>&) const noexcept {
        return true;
    }
};

template <class T>
using avec = std::vector<T, aligned_allocator<T>>;

// Compensated (Kahan) accumulator; deterministic for a fixed visit order.
class kahan_sum {
  public:
    void add(double x) {
        double y = x - c_;
        double t = s_ + y;
        c_ = (t - s_) - y;
        s_ = t;
    }
    double value() const { return s_; }

  private:
    double s_ = 0.0;
    double c_ = 0.0;
};

// Thread cap from ELASTOWAVE_THREADS (default: hardware concurrency).
inline unsigned thread_budget() {
    if (const char* env = std::getenv("ELASTOWAVE_THREADS")) {
        long v = std::strtol(env, nullptr, 10);
        if (v >= 1)
            return static_cast<unsigned>(v);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 1;
}

// Static work partition over [0, count): item i always lands in the same
// chunk, so results do not depend on scheduling.
inline void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn) {
    unsigned nt = thread_budget();
    if (nt <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i)
            fn(i);
        return;
    }
    if (nt > count)
        nt = static_cast<unsigned>(count);
    std::vector<std::thread> pool;
    pool.reserve(nt);
    for (unsigned t = 0; t < nt; ++t) {
        pool.emplace_back([&, t]() {
            for (std::size_t i = t; i < count; i += nt)
                fn(i);
        });
    }
    for (auto& th : pool)
        th.join();
}

}  // namespace elastowave

#endif
