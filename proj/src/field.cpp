#include "quiverhom/field.hpp"

#include <cctype>

#include "quiverhom/error.hpp"

namespace qh {

std::string_view error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::InvalidQuiver: return "INVALID_QUIVER";
        case ErrorCode::ComposeMismatch: return "COMPOSE_MISMATCH";
        case ErrorCode::NotAdmissible: return "NOT_ADMISSIBLE";
        case ErrorCode::InfiniteDimensional: return "INFINITE_DIMENSIONAL";
        case ErrorCode::BadRelation: return "BAD_RELATION";
        case ErrorCode::ZeroPath: return "ZERO_PATH";
        case ErrorCode::UnsupportedIdeal: return "UNSUPPORTED_IDEAL";
        case ErrorCode::Indeterminate: return "INDETERMINATE";
        case ErrorCode::FieldMismatch: return "FIELD_MISMATCH";
        case ErrorCode::NoDecomposition: return "NO_DECOMPOSITION";
        case ErrorCode::Ambiguous: return "AMBIGUOUS";
        case ErrorCode::HypothesisViolated: return "HYPOTHESIS_VIOLATED";
        case ErrorCode::ParseError: return "PARSE_ERROR";
        case ErrorCode::InvalidArgument: return "INVALID_ARGUMENT";
        case ErrorCode::InvariantViolation: return "INVARIANT_VIOLATION";
    }
    return "UNKNOWN";
}

namespace {

bool is_probable_prime(std::uint32_t p) {
    if (p < 2) return false;
    for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

}  // namespace

Field Field::prime(std::uint32_t p) {
    require(p > 2 && is_probable_prime(p), ErrorCode::InvalidArgument,
            "prime field needs an odd prime, got " + std::to_string(p));
    return Field(p);
}

Scalar Field::reduce(const Scalar& x) const {
    if (p_ == 0) return x;
    mpz_class mod(p_);
    mpz_class num = x.get_num() % mod;
    if (num < 0) num += mod;
    if (x.get_den() == 1) return Scalar(num);
    mpz_class den = x.get_den() % mod;
    require(den != 0, ErrorCode::InvalidArgument, "denominator vanishes mod " + std::to_string(p_));
    mpz_class inv;
    mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), mod.get_mpz_t());
    mpz_class r = (num * inv) % mod;
    return Scalar(r);
}

Scalar Field::inv(const Scalar& a) const {
    require(a != 0, ErrorCode::InvalidArgument, "division by zero");
    if (p_ == 0) return Scalar(1) / a;
    mpz_class mod(p_);
    mpz_class r;
    mpz_class num = a.get_num();
    mpz_invert(r.get_mpz_t(), num.get_mpz_t(), mod.get_mpz_t());
    return Scalar(r);
}

Scalar Field::random(std::mt19937_64& rng, int bound) const {
    if (p_ != 0) {
        std::uniform_int_distribution<std::uint32_t> dist(0, p_ - 1);
        return Scalar(static_cast<unsigned long>(dist(rng)));
    }
    std::uniform_int_distribution<int> dist(-bound, bound);
    return Scalar(dist(rng));
}

std::string Field::name() const { return p_ == 0 ? std::string("Q") : "Fp " + std::to_string(p_); }

Scalar parse_rational(std::string_view text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    require(!s.empty(), ErrorCode::ParseError, "empty number");
    auto valid_int = [](std::string_view t, bool allow_sign) {
        std::size_t i = 0;
        if (allow_sign && i < t.size() && (t[i] == '-' || t[i] == '+')) ++i;
        if (i == t.size()) return false;
        for (; i < t.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
        return true;
    };
    auto slash = s.find('/');
    std::string num = s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    require(valid_int(num, true) && valid_int(den, false), ErrorCode::ParseError,
            "malformed rational '" + std::string(text) + "'");
    if (!num.empty() && num[0] == '+') num.erase(0, 1);
    mpz_class d(den);
    require(d != 0, ErrorCode::ParseError, "zero denominator in '" + std::string(text) + "'");
    Scalar q(mpz_class(num), d);
    q.canonicalize();
    return q;
}

std::string format_scalar(const Scalar& x) { return x.get_str(); }

}  // namespace qh
