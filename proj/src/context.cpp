#include "dwork/context.hpp"

#include "dwork/error.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace dwork {

namespace {

constexpr int kCacheVersion = 1;

nlohmann::json cache_key(const Characters& chars)
{
    const Field& f = chars.field();
    return {{"p", f.p()},
            {"e", f.e()},
            {"modulus", f.modulus()},
            {"generator", f.generator().v},
            {"zeta_root", chars.zeta_root()}};
}

} // namespace

Context::Context(Characters chars, GaussTable gauss, bool from_cache)
    : chars_(std::move(chars)), gauss_(std::move(gauss)), from_cache_(from_cache)
{
    const Field& f = chars_.field();
    pairs_.reserve(f.q());
    for (std::uint32_t v = 2; v < f.q(); ++v) {
        const Elem x{v};
        pairs_.emplace_back(f.dlog(x), f.dlog(f.sub(f.one(), x)));
    }
    row_once_ = std::make_unique<std::once_flag[]>(f.units());
    rows_.resize(f.units());
}

std::shared_ptr<const Context> Context::create(Field field, const ContextOptions& opts)
{
    return create(std::make_shared<const Field>(std::move(field)), opts);
}

std::shared_ptr<const Context> Context::create(std::shared_ptr<const Field> field, const ContextOptions& opts)
{
    Characters chars(std::move(field), opts.zeta_root);
    if (opts.cache_dir) {
        const auto file = gauss_cache_file(*opts.cache_dir, chars);
        if (auto cached = load_gauss_cache(file, chars))
            return std::make_shared<const Context>(std::move(chars), std::move(*cached), true);
        GaussTable table = GaussTable::compute(chars);
        store_gauss_cache(file, chars, table);
        return std::make_shared<const Context>(std::move(chars), std::move(table), false);
    }
    GaussTable table = GaussTable::compute(chars);
    return std::make_shared<const Context>(std::move(chars), std::move(table), false);
}

void Context::fill_row(CharIdx a) const
{
    const std::uint32_t n = field().units();
    const double inv_q = 1.0 / q();
    const auto& z = chars_.roots().zeta_q1;
    std::vector<Cx> row(n);
    for (std::uint32_t b = 0; b < n; ++b) {
        Cx acc = 0.0;
        for (auto [lx, l1x] : pairs_) {
            const std::uint64_t k = (std::uint64_t{a} * lx + std::uint64_t{n - b} % n * l1x) % n;
            acc += z[k];
        }
        row[b] = chars_.sign(b) * inv_q * acc;
    }
    rows_[a] = std::move(row);
}

Cx Context::binom(std::int64_t a, std::int64_t b) const
{
    const CharIdx ia = idx(a);
    std::call_once(row_once_[ia], [&] { fill_row(ia); });
    return rows_[ia][idx(b)];
}

std::filesystem::path gauss_cache_file(const std::filesystem::path& dir, const Characters& chars)
{
    const Field& f = chars.field();
    std::ostringstream name;
    name << "gauss-p" << f.p() << "-e" << f.e();
    if (!f.modulus().empty()) {
        name << "-m";
        for (std::size_t i = 0; i < f.modulus().size(); ++i)
            name << (i ? "_" : "") << f.modulus()[i];
    }
    name << "-g" << f.generator().v << "-z" << chars.zeta_root() << ".json";
    return dir / name.str();
}

std::optional<GaussTable> load_gauss_cache(const std::filesystem::path& file, const Characters& chars)
{
    std::ifstream in(file);
    if (!in)
        return std::nullopt;
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::CacheFormat, file.string() + ": " + e.what());
    }
    if (doc.value("version", 0) != kCacheVersion || doc.value("key", nlohmann::json{}) != cache_key(chars))
        throw Error(ErrorCode::CacheFormat, file.string() + ": key or version mismatch");
    const auto& vals = doc.at("values");
    if (!vals.is_array() || vals.size() != chars.field().units())
        throw Error(ErrorCode::CacheFormat, file.string() + ": wrong table length");
    std::vector<Cx> values;
    values.reserve(vals.size());
    for (const auto& v : vals)
        values.emplace_back(v.at(0).get<double>(), v.at(1).get<double>());
    return GaussTable(std::move(values));
}

void store_gauss_cache(const std::filesystem::path& file, const Characters& chars, const GaussTable& table)
{
    nlohmann::json vals = nlohmann::json::array();
    for (const Cx& v : table.values())
        vals.push_back({v.real(), v.imag()});
    const nlohmann::json doc = {{"version", kCacheVersion}, {"key", cache_key(chars)}, {"values", vals}};

    std::error_code ec;
    std::filesystem::create_directories(file.parent_path(), ec);
    auto tmp = file;
    tmp += ".tmp";
    {
        std::ofstream out(tmp);
        if (!out)
            throw Error(ErrorCode::Io, "cannot write Gauss cache " + tmp.string());
        out << doc.dump() << '\n';
        if (!out)
            throw Error(ErrorCode::Io, "short write to Gauss cache " + tmp.string());
    }
    std::filesystem::rename(tmp, file, ec);
    if (ec)
        throw Error(ErrorCode::Io, "cannot move Gauss cache into place: " + ec.message());
}

} // namespace dwork
