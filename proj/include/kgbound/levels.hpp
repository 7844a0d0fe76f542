#ifndef KGBOUND_LEVELS_HPP
#define KGBOUND_LEVELS_HPP

#include "error.hpp"

#include <string>
#include <string_view>

namespace kgb
{

/// E+ is tagged particle and E- antiparticle; validation may demote either.
enum class Branch
{
    particle,
    antiparticle
};

enum class LevelStatus
{
    bound,
    threshold,
    spurious,
    unreal
};

constexpr std::string_view to_string(Branch b) { return b == Branch::particle ? "particle" : "antiparticle"; }

constexpr std::string_view to_string(LevelStatus s)
{
    switch (s) {
        case LevelStatus::bound: return "bound";
        case LevelStatus::threshold: return "threshold";
        case LevelStatus::spurious: return "spurious";
        case LevelStatus::unreal: return "unreal";
    }
    return "unknown";
}

inline Branch parse_branch(std::string_view s)
{
    if (s == "particle")
        return Branch::particle;
    if (s == "antiparticle")
        return Branch::antiparticle;
    throw Error(ErrorCode::InvalidArgument, "unknown branch '" + std::string(s) + "'");
}

inline LevelStatus parse_status(std::string_view s)
{
    for (auto st : {LevelStatus::bound, LevelStatus::threshold, LevelStatus::spurious, LevelStatus::unreal})
        if (to_string(st) == s)
            return st;
    throw Error(ErrorCode::InvalidArgument, "unknown status '" + std::string(s) + "'");
}

struct EnergyLevel
{
    double energy = 0.0;
    Branch branch = Branch::particle;
    unsigned n = 0;
    unsigned l = 0;
    LevelStatus status = LevelStatus::unreal;
    double residual = 0.0;

    friend bool operator==(EnergyLevel const&, EnergyLevel const&) = default;
};

} // namespace kgb

#endif // KGBOUND_LEVELS_HPP
