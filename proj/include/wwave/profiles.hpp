#pragma once

#include <stdexcept>
#include <string>

namespace wwave {

/// Compactly supported data profiles. Every kind is nonnegative and vanishes
/// for |x| > radius; SmoothBump and CosineSquared have bounded second
/// derivatives across the support boundary, Hat does not.
enum class ProfileKind { SmoothBump, Hat, CosineSquared, Null };

struct Profile {
    ProfileKind kind = ProfileKind::SmoothBump;
    double radius = 1.0;

    static Profile smooth_bump(double R) { return {ProfileKind::SmoothBump, R}; }
    static Profile hat(double R) { return {ProfileKind::Hat, R}; }
    static Profile cosine_squared(double R) { return {ProfileKind::CosineSquared, R}; }
    static Profile null() { return {ProfileKind::Null, 1.0}; }

    bool is_null() const { return kind == ProfileKind::Null; }
};

/// Pointwise evaluation. Total: returns 0 outside the support, never throws.
double eval_profile(const Profile& profile, double x) noexcept;

/// ∫ profile dx over its full support (composite Gauss-Legendre with
/// breakpoints at the kinks, so Hat integrates exactly).
double profile_mass(const Profile& profile);

ProfileKind profile_kind_from_string(const std::string& name);
std::string to_string(ProfileKind kind);

}  // namespace wwave
