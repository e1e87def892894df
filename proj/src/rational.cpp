#include "fstruct/rational.hpp"

#include <cctype>

#include "fstruct/error.hpp"

namespace fstruct {

const char* error_kind_name(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::Parse: return "ParseError";
        case ErrorKind::InvalidArgument: return "InvalidArgument";
        case ErrorKind::DimensionMismatch: return "DimensionMismatch";
        case ErrorKind::DegenerateRowSelection: return "DegenerateRowSelection";
        case ErrorKind::QuotientDegenerate: return "QuotientDegenerate";
        case ErrorKind::QuotientNotFactorization: return "QuotientNotFactorization";
        case ErrorKind::ChartDegenerate: return "ChartDegenerate";
        case ErrorKind::NotFullDimensional: return "NotFullDimensional";
        case ErrorKind::NotPointed: return "NotPointed";
        case ErrorKind::BetaNotInterior: return "BetaNotInterior";
        case ErrorKind::RepeatedParameter: return "RepeatedParameter";
        case ErrorKind::DependentBasis: return "DependentBasis";
        case ErrorKind::NoCommonLattice: return "NoCommonLattice";
        case ErrorKind::DenominatorVanishes: return "DenominatorVanishes";
        case ErrorKind::Internal: return "InternalError";
    }
    return "Error";
}

namespace {

bool is_integer_literal(std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

}  // namespace

Rat parse_rat(std::string_view text) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
    const auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
    if (!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-' || den.front() == '+') {
        fail(ErrorKind::Parse, "not a rational literal: '" + std::string(text) + "'");
    }
    if (num.front() == '+') num.remove_prefix(1);
    mpz_class n(std::string(num), 10);
    mpz_class d(std::string(den), 10);
    if (d == 0) fail(ErrorKind::Parse, "zero denominator in '" + std::string(text) + "'");
    Rat r(n, d);
    r.canonicalize();
    return r;
}

std::string format_rat(const Rat& value) { return value.get_str(); }

Rat dot(const Vec& a, const Vec& b) {
    require(a.size() == b.size(), "dot: length mismatch");
    Rat sum = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (sgn(a[i]) != 0 && sgn(b[i]) != 0) sum += a[i] * b[i];
    }
    return sum;
}

bool is_zero(const Vec& v) {
    for (const Rat& x : v) {
        if (sgn(x) != 0) return false;
    }
    return true;
}

Vec scaled(const Vec& v, const Rat& factor) {
    Vec out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] * factor;
    return out;
}

Vec added(const Vec& a, const Vec& b) {
    require(a.size() == b.size(), "add: length mismatch");
    Vec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

Vec subtracted(const Vec& a, const Vec& b) {
    require(a.size() == b.size(), "subtract: length mismatch");
    Vec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

Vec zeros(std::size_t n) { return Vec(n, Rat(0)); }

Vec unit(std::size_t n, std::size_t index) {
    Vec v = zeros(n);
    v.at(index) = 1;
    return v;
}

Vec projective_normalized(const Vec& v) {
    for (const Rat& x : v) {
        if (sgn(x) != 0) return scaled(v, Rat(1) / x);
    }
    fail(ErrorKind::InvalidArgument, "zero vector has no projective class");
}

Vec ray_normalized(const Vec& v) {
    for (const Rat& x : v) {
        if (sgn(x) != 0) return scaled(v, Rat(1) / abs(x));
    }
    fail(ErrorKind::InvalidArgument, "zero vector has no ray");
}

bool proportional(const Vec& a, const Vec& b) {
    if (a.size() != b.size() || is_zero(a) || is_zero(b)) return false;
    return projective_normalized(a) == projective_normalized(b);
}

mpz_class lcm_of_denominators(const Vec& v) {
    mpz_class l = 1;
    for (const Rat& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    return l;
}

}  // namespace fstruct
