#include "bunq/space.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cctype>
#include <utility>

#include "bunq/errors.hpp"

namespace bunq {

namespace {

SpaceModel checked(SpaceModel x)
{
    if (x.betti.empty() || x.betti[0] != 1)
        throw DomainError(fmt::format("b_0 must be 1 (connected space), got {}",
                                      x.betti.empty() ? 0 : x.betti[0]));
    for (size_t q = 0; q < x.betti.size(); ++q)
        if (x.betti[q] < 0)
            throw DomainError(fmt::format("negative Betti number b_{} = {}", q, x.betti[q]));
    return x;
}

} // namespace

long long SpaceModel::betti_at(int q) const
{
    if (q < 0 || q > dim())
        return 0;
    return betti[static_cast<size_t>(q)];
}

SpaceModel make_point()
{
    return checked({{1}, "point", true});
}

SpaceModel make_sphere(int m)
{
    if (m < 1)
        throw DomainError(fmt::format("sphere dimension must be >= 1, got {}", m));
    std::vector<long long> b(static_cast<size_t>(m) + 1, 0);
    b[0] = 1;
    b[static_cast<size_t>(m)] = 1;
    return checked({std::move(b), fmt::format("sphere:{}", m), m % 2 == 0});
}

SpaceModel make_curve(long long genus)
{
    if (genus < 0)
        throw DomainError(fmt::format("genus must be >= 0, got {}", genus));
    return checked({{1, 2 * genus, 1}, fmt::format("curve:{}", genus), genus == 0});
}

SpaceModel make_projective(int k)
{
    if (k < 0)
        throw DomainError(fmt::format("projective dimension must be >= 0, got {}", k));
    std::vector<long long> b(static_cast<size_t>(2 * k) + 1, 0);
    for (int q = 0; q <= k; ++q)
        b[static_cast<size_t>(2 * q)] = 1;
    return checked({std::move(b), fmt::format("proj:{}", k), true});
}

SpaceModel make_hypersurface(int k, long long d)
{
    if (k < 1)
        throw DomainError(fmt::format("hypersurface dimension must be >= 1, got {}", k));
    if (d < 0)
        throw DomainError(fmt::format("middle Betti number must be >= 0, got {}", d));
    if (k % 2 == 0 && d < 1)
        throw DomainError(fmt::format(
            "even-dimensional hypersurface needs middle Betti number >= 1, got {}", d));
    std::vector<long long> b(static_cast<size_t>(2 * k) + 1, 0);
    for (int j = 0; j < k; ++j)
        b[static_cast<size_t>(j)] = j % 2 == 0 ? 1 : 0; // weak Lefschetz: P^{k+1} below the middle
    b[static_cast<size_t>(k)] = d;
    for (int j = k + 1; j <= 2 * k; ++j)
        b[static_cast<size_t>(j)] = b[static_cast<size_t>(2 * k - j)]; // Poincare duality
    return checked({std::move(b), fmt::format("hyp:{},{}", k, d), k % 2 == 0});
}

SpaceModel make_custom(std::vector<long long> betti)
{
    std::string label = "betti:";
    for (size_t q = 0; q < betti.size(); ++q)
        label += fmt::format("{}{}", q == 0 ? "" : ",", betti[q]);
    // no cell-structure guarantee, even when all odd entries vanish
    return checked({std::move(betti), std::move(label), false});
}

SpaceModel product(const SpaceModel& a, const SpaceModel& b)
{
    std::vector<long long> c(a.betti.size() + b.betti.size() - 1, 0);
    for (size_t i = 0; i < a.betti.size(); ++i)
        for (size_t j = 0; j < b.betti.size(); ++j) {
            long long term = 0;
            if (__builtin_mul_overflow(a.betti[i], b.betti[j], &term) ||
                __builtin_add_overflow(c[i + j], term, &c[i + j]))
                throw DomainError(fmt::format(
                    "Betti number overflow in degree {} of prod({};{})", i + j, a.label,
                    b.label));
        }
    return checked({std::move(c), fmt::format("prod({};{})", a.label, b.label),
                    a.even_cells_only && b.even_cells_only});
}

namespace {

class SpaceParser {
  public:
    explicit SpaceParser(std::string_view text) : text_(text) {}

    SpaceModel parse()
    {
        SpaceModel x = parse_space();
        if (pos_ != text_.size())
            throw ParseError(fmt::format("unexpected trailing input \"{}\"", rest()));
        return x;
    }

  private:
    std::string_view text_;
    size_t pos_ = 0;

    std::string_view rest() const { return text_.substr(pos_); }

    bool eat(std::string_view token)
    {
        if (rest().substr(0, token.size()) != token)
            return false;
        pos_ += token.size();
        return true;
    }

    void expect(char c)
    {
        if (pos_ >= text_.size() || text_[pos_] != c)
            throw ParseError(fmt::format("expected \"{}\" at \"{}\"", c, rest()));
        ++pos_;
    }

    long long number()
    {
        size_t digits = 0;
        while (pos_ + digits < text_.size() &&
               std::isdigit(static_cast<unsigned char>(text_[pos_ + digits])))
            ++digits;
        if (digits == 0)
            throw ParseError(fmt::format("expected a number at \"{}\"", rest()));
        if (digits > 12)
            throw ParseError(fmt::format("number out of range at \"{}\"", rest()));
        long long value = 0;
        for (size_t i = 0; i < digits; ++i)
            value = value * 10 + (text_[pos_ + i] - '0');
        pos_ += digits;
        return value;
    }

    int small_number(const char* what, long long max)
    {
        const size_t at = pos_;
        const long long v = number();
        if (v > max)
            throw ParseError(fmt::format("{} {} exceeds the supported bound {} at \"{}\"", what, v,
                                         max, text_.substr(at)));
        return static_cast<int>(v);
    }

    SpaceModel parse_space()
    {
        const std::string_view at = rest();
        try {
            if (eat("point"))
                return make_point();
            if (eat("sphere:"))
                return make_sphere(small_number("sphere dimension", 100000));
            if (eat("curve:"))
                return make_curve(number());
            if (eat("proj:"))
                return make_projective(small_number("projective dimension", 100000));
            if (eat("hyp:")) {
                const int k = small_number("hypersurface dimension", 100000);
                expect(',');
                const long long d = number();
                return make_hypersurface(k, d);
            }
            if (eat("betti:")) {
                std::vector<long long> b;
                b.push_back(number());
                while (pos_ < text_.size() && text_[pos_] == ',') {
                    ++pos_;
                    b.push_back(number());
                }
                return make_custom(std::move(b));
            }
            if (eat("prod(")) {
                SpaceModel a = parse_space();
                expect(';');
                SpaceModel b = parse_space();
                expect(')');
                return product(a, b);
            }
        } catch (const DomainError& e) {
            throw ParseError(fmt::format("invalid space \"{}\": {}", at, e.what()));
        }
        throw ParseError(fmt::format("unknown space constructor at \"{}\"", at));
    }
};

} // namespace

SpaceModel parse_space(std::string_view text)
{
    if (text.empty())
        throw ParseError("empty space spec");
    return SpaceParser(text).parse();
}

} // namespace bunq
