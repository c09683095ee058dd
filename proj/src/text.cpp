#include "cpi/text.hpp"

#include <charconv>
#include <stdexcept>
#include <vector>

namespace cpi {

namespace {

std::string_view trim(std::string_view s)
{
    const auto ws = " \t\r\n";
    const auto b = s.find_first_not_of(ws);
    if (b == std::string_view::npos)
        return {};
    const auto e = s.find_last_not_of(ws);
    return s.substr(b, e - b + 1);
}

std::vector<std::string_view> split_on(std::string_view s, char sep)
{
    std::vector<std::string_view> out;
    std::size_t start = 0;
    for (;;) {
        const auto pos = s.find(sep, start);
        out.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos)
            return out;
        start = pos + 1;
    }
}

Int parse_int(std::string_view s, std::string_view what)
{
    s = trim(s);
    Int v = 0;
    const auto* end = s.data() + s.size();
    const auto [ptr, ec] = std::from_chars(s.data(), end, v);
    if (s.empty() || ec != std::errc{} || ptr != end)
        throw std::invalid_argument("cpi: cannot parse " + std::string(what) + " '" + std::string(s) + "'");
    return v;
}

std::vector<Int> parse_list(std::string_view s, std::string_view what)
{
    std::vector<Int> out;
    for (auto tok : split_on(s, ','))
        out.push_back(parse_int(tok, what));
    return out;
}

template <class Seq>
std::string join(const Seq& xs)
{
    std::string out;
    bool first = true;
    for (Int x : xs) {
        if (!first)
            out += ',';
        out += std::to_string(x);
        first = false;
    }
    return out;
}

} // namespace

ColoredPart parse_colored_part(std::string_view token)
{
    token = trim(token);
    const auto at = token.find('@');
    if (at == std::string_view::npos)
        throw std::invalid_argument("cpi: colored part '" + std::string(token) + "' lacks '@'");
    ColoredPart part;
    part.value = parse_int(token.substr(0, at), "part value");
    auto rest = token.substr(at + 1);
    if (!rest.empty() && (rest.back() == '+' || rest.back() == '-')) {
        part.sign = rest.back() == '+' ? Sign::plus : Sign::minus;
        rest.remove_suffix(1);
    }
    const Int cls = parse_int(rest, "class index");
    if (cls < 1 || cls > 1'000'000)
        throw std::invalid_argument("cpi: class index out of range in '" + std::string(token) + "'");
    part.class_index = static_cast<int>(cls);
    if (part.value <= 0)
        throw std::invalid_argument("cpi: part values must be positive in '" + std::string(token) + "'");
    return part;
}

ColoredPartition parse_colored(std::string_view text)
{
    text = trim(text);
    if (text.size() >= 2 && text.front() == '(' && text.back() == ')')
        text = trim(text.substr(1, text.size() - 2));
    std::vector<ColoredPart> parts;
    if (!text.empty())
        for (auto tok : split_on(text, ','))
            parts.push_back(parse_colored_part(tok));
    return ColoredPartition(std::move(parts));
}

std::string format_colored(const ColoredPartition& pi)
{
    if (pi.empty())
        return "()";
    std::string out;
    for (const auto& p : pi.parts()) {
        if (!out.empty())
            out += ',';
        out += std::to_string(p.value) + '@' + std::to_string(p.class_index) + (p.sign == Sign::plus ? '+' : '-');
    }
    return out;
}

ResidueSystem parse_system(std::string_view text)
{
    std::optional<Int> t;
    std::optional<std::vector<Int>> c;
    std::optional<std::vector<Int>> a;
    for (auto field : split_on(trim(text), ';')) {
        field = trim(field);
        if (field.empty())
            continue;
        const auto eq = field.find('=');
        if (eq == std::string_view::npos)
            throw std::invalid_argument("cpi: system field '" + std::string(field) + "' lacks '='");
        const auto key = trim(field.substr(0, eq));
        const auto val = field.substr(eq + 1);
        if (key == "t" && !t)
            t = parse_int(val, "t");
        else if (key == "C" && !c)
            c = parse_list(val, "modulus");
        else if (key == "A" && !a)
            a = parse_list(val, "residue");
        else
            throw std::invalid_argument("cpi: unexpected or repeated system field '" + std::string(key) + "'");
    }
    if (!t || !c || !a)
        throw std::invalid_argument("cpi: system needs t, C and A");
    if (*t != static_cast<Int>(c->size()) || *t != static_cast<Int>(a->size()))
        throw std::invalid_argument("cpi: C and A must list exactly t entries");
    return ResidueSystem(std::move(*c), std::move(*a));
}

std::string format_system(const ResidueSystem& system)
{
    return "t=" + std::to_string(system.t()) + ";C=" + join(system.moduli()) + ";A=" + join(system.residues());
}

std::string format_partition(const Partition& p)
{
    return '(' + join(p.parts()) + ')';
}

std::string format_tuple(const SolutionTuple& tuple)
{
    std::string out = "(";
    for (std::size_t i = 0; i < tuple.nus.size(); ++i) {
        if (i)
            out += ',';
        out += format_partition(tuple.nus[i]);
    }
    return out + ';' + join(tuple.ds) + ')';
}

std::string format_star(const StarElement& x)
{
    std::string out = x.side == StarSide::U ? "U[" : "V[";
    for (std::size_t i = 0; i < x.partitions.size(); ++i) {
        if (i)
            out += ',';
        out += format_partition(x.partitions[i]);
    }
    if (x.payload.kind == UVElement::Kind::lattice)
        out += std::string(";") + (x.side == StarSide::U ? "d=" : "e=") + join(x.payload.coords);
    else
        out += ";f=" + join(x.payload.coords) + '#' + std::to_string(x.payload.copy);
    return out + ']';
}

} // namespace cpi
