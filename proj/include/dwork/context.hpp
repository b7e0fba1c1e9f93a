#pragma once

#include "dwork/characters.hpp"
#include "dwork/gauss.hpp"

#include <filesystem>
#include <memory>
#include <mutex>
#include <optional>

namespace dwork {

struct ContextOptions {
    std::uint32_t zeta_root = 1;
    /// Directory for the on-disk Gauss table cache; none disables caching.
    std::optional<std::filesystem::path> cache_dir;
};

/// Field, characters, Gauss table and the lazily filled binom memo.
/// Immutable apart from the memo, whose rows are filled once under std::call_once.
class Context {
public:
    static std::shared_ptr<const Context> create(std::shared_ptr<const Field> field, const ContextOptions& opts = {});
    static std::shared_ptr<const Context> create(Field field, const ContextOptions& opts = {});

    const Field& field() const noexcept { return chars_.field(); }
    const Characters& chars() const noexcept { return chars_; }
    const GaussTable& gauss() const noexcept { return gauss_; }
    bool gauss_from_cache() const noexcept { return from_cache_; }

    std::uint32_t q() const noexcept { return field().q(); }
    CharIdx idx(std::int64_t j) const noexcept { return chars_.idx(j); }
    Cx g(std::int64_t j) const noexcept { return gauss_(j); }
    Cx chi(std::int64_t j, Elem x) const noexcept { return chars_.chi(j, x); }
    double sign(std::int64_t j) const noexcept { return chars_.sign(j); }

    /// binom(T^a, T^b); bit-identical across calls.
    Cx binom(std::int64_t a, std::int64_t b) const;

    Context(Characters chars, GaussTable gauss, bool from_cache);

private:
    void fill_row(CharIdx a) const;

    Characters chars_;
    GaussTable gauss_;
    bool from_cache_;
    // (dlog x, dlog(1-x)) for x not in {0, 1}
    std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs_;
    mutable std::unique_ptr<std::once_flag[]> row_once_;
    mutable std::vector<std::vector<Cx>> rows_;
};

std::filesystem::path gauss_cache_file(const std::filesystem::path& dir, const Characters& chars);
std::optional<GaussTable> load_gauss_cache(const std::filesystem::path& file, const Characters& chars);
void store_gauss_cache(const std::filesystem::path& file, const Characters& chars, const GaussTable& table);

} // namespace dwork
