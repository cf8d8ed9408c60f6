#include "extremal/property.hpp"

#include "extremal/measures.hpp"

#include <cctype>
#include <stdexcept>

namespace extremal {

namespace {

template <class... Ts> struct Overloaded : Ts... { using Ts::operator()...; };
template <class... Ts> Overloaded(Ts...) -> Overloaded<Ts...>;

const SetFamily & slot_at(std::span<const SetFamily> families, int slot)
{
    if (slot < 0 || static_cast<std::size_t>(slot) >= families.size())
        throw std::invalid_argument("property refers to missing slot " + std::to_string(slot));
    return families[slot];
}

template <class Check>
bool for_slots(std::span<const SetFamily> families, int slot, Check check)
{
    if (slot != every_slot) return check(slot_at(families, slot));
    for (const SetFamily & f : families)
        if (! check(f)) return false;
    return true;
}

/// True if members from the listed slots can be chosen pairwise disjoint.
bool disjoint_choice(std::span<const SetFamily> families, const std::vector<int> & slots,
                     std::size_t depth, Mask used)
{
    if (depth == slots.size()) return true;
    for (KSet s : slot_at(families, slots[depth]))
        if (! (s.bits() & used) && disjoint_choice(families, slots, depth + 1, used | s.bits()))
            return true;
    return false;
}

bool overlapping_holds(std::span<const SetFamily> families, std::vector<int> slots)
{
    if (slots.empty()) {
        // A lone family is overlapping when no two members are disjoint.
        if (families.size() == 1) slots = {0, 0};
        else
            for (std::size_t i = 0; i < families.size(); ++i) slots.push_back(static_cast<int>(i));
    }
    return ! disjoint_choice(families, slots, 0, 0);
}

bool atom_holds(const Atom & a, std::span<const SetFamily> families)
{
    return std::visit(Overloaded{
        [&](const atom::TIntersecting & x) {
            return for_slots(families, x.slot, [&](const SetFamily & f) { return is_t_intersecting(f, x.t); });
        },
        [&](const atom::CrossTIntersecting & x) {
            return is_cross_t_intersecting(slot_at(families, x.slot_a), slot_at(families, x.slot_b), x.t);
        },
        [&](const atom::RhoAtMost & x) {
            return for_slots(families, x.slot, [&](const SetFamily & f) { return rho(f) <= x.bound; });
        },
        [&](const atom::MatchingAtMost & x) {
            return for_slots(families, x.slot, [&](const SetFamily & f) { return matching_number(f) <= x.s; });
        },
        [&](const atom::NonTrivial & x) {
            return for_slots(families, x.slot, [&](const SetFamily & f) {
                return ! f.empty() && f.common_part().empty();
            });
        },
        [&](const atom::Overlapping & x) { return overlapping_holds(families, x.slots); },
        [&](const atom::Custom & x) { return x.predicate(families); },
    }, a);
}

std::string slot_suffix(int slot)
{
    return slot == every_slot ? std::string() : "@" + std::to_string(slot);
}

std::string atom_text(const Atom & a)
{
    return std::visit(Overloaded{
        [](const atom::TIntersecting & x) {
            return "t-intersecting(" + std::to_string(x.t) + ")" + slot_suffix(x.slot);
        },
        [](const atom::CrossTIntersecting & x) {
            return "cross(" + std::to_string(x.slot_a) + "," + std::to_string(x.slot_b) + "," + std::to_string(x.t) + ")";
        },
        [](const atom::RhoAtMost & x) { return "rho<=" + x.bound.str() + slot_suffix(x.slot); },
        [](const atom::MatchingAtMost & x) { return "nu<=" + std::to_string(x.s) + slot_suffix(x.slot); },
        [](const atom::NonTrivial & x) { return "nontrivial" + slot_suffix(x.slot); },
        [](const atom::Overlapping & x) {
            std::string s = "overlapping";
            if (! x.slots.empty()) {
                s += '(';
                for (std::size_t i = 0; i < x.slots.size(); ++i) s += (i ? "," : "") + std::to_string(x.slots[i]);
                s += ')';
            }
            return s;
        },
        [](const atom::Custom & x) { return "custom:" + x.name; },
    }, a);
}

class Parser {
public:
    explicit Parser(std::string_view text)
    {
        for (char c : text)
            if (! std::isspace(static_cast<unsigned char>(c))) text_ += c;
    }

    PropertySpec parse()
    {
        PropertySpec spec;
        if (text_.empty() || text_ == "true") return spec;
        for (;;) {
            spec = spec & atom();
            if (pos_ == text_.size()) return spec;
            expect('&');
        }
    }

private:
    [[noreturn]] void fail(const std::string & what) const
    {
        throw std::invalid_argument("property '" + text_ + "' at offset " + std::to_string(pos_) + ": " + what);
    }

    bool accept(std::string_view word)
    {
        if (text_.compare(pos_, word.size(), word) != 0) return false;
        pos_ += word.size();
        return true;
    }

    void expect(char c)
    {
        if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    int integer()
    {
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) fail("expected an integer");
        return std::stoi(text_.substr(start, pos_ - start));
    }

    Rational rational()
    {
        std::size_t start = pos_;
        while (pos_ < text_.size() && (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '/')) ++pos_;
        try {
            return Rational::parse(text_.substr(start, pos_ - start));
        }
        catch (const std::exception &) {
            fail("expected a rational p/q");
        }
    }

    int slot()
    {
        if (pos_ < text_.size() && text_[pos_] == '@') {
            ++pos_;
            return integer();
        }
        return every_slot;
    }

    PropertySpec atom()
    {
        if (accept("t-intersecting(")) {
            int t = integer();
            expect(')');
            return PropertySpec::t_intersecting(t, slot());
        }
        if (accept("intersecting")) return PropertySpec::intersecting(slot());
        if (accept("cross(")) {
            int a = integer();
            expect(',');
            int b = integer();
            int t = 1;
            if (accept(",")) {
                accept("t=");
                t = integer();
            }
            expect(')');
            return PropertySpec::cross_t_intersecting(a, b, t);
        }
        if (accept("rho<=")) {
            Rational bound = rational();
            return PropertySpec::rho_at_most(bound, slot());
        }
        if (accept("nu<=")) {
            int s = integer();
            return PropertySpec::matching_at_most(s, slot());
        }
        if (accept("nontrivial")) return PropertySpec::non_trivial(slot());
        if (accept("overlapping")) {
            std::vector<int> slots;
            if (accept("(")) {
                slots.push_back(integer());
                while (accept(",")) slots.push_back(integer());
                expect(')');
            }
            return PropertySpec::overlapping(std::move(slots));
        }
        fail("unknown atom");
    }

    std::string text_;
    std::size_t pos_ = 0;
};

} // namespace

PropertySpec PropertySpec::t_intersecting(int t, int slot)
{
    PropertySpec p;
    p.atoms_.push_back(atom::TIntersecting{slot, t});
    return p;
}

PropertySpec PropertySpec::cross_t_intersecting(int slot_a, int slot_b, int t)
{
    PropertySpec p;
    p.atoms_.push_back(atom::CrossTIntersecting{slot_a, slot_b, t});
    return p;
}

PropertySpec PropertySpec::rho_at_most(Rational bound, int slot)
{
    PropertySpec p;
    p.atoms_.push_back(atom::RhoAtMost{slot, bound});
    return p;
}

PropertySpec PropertySpec::matching_at_most(int s, int slot)
{
    PropertySpec p;
    p.atoms_.push_back(atom::MatchingAtMost{slot, s});
    return p;
}

PropertySpec PropertySpec::non_trivial(int slot)
{
    PropertySpec p;
    p.atoms_.push_back(atom::NonTrivial{slot});
    return p;
}

PropertySpec PropertySpec::overlapping(std::vector<int> slots)
{
    PropertySpec p;
    p.atoms_.push_back(atom::Overlapping{std::move(slots)});
    return p;
}

PropertySpec PropertySpec::custom(std::string name, std::function<bool(std::span<const SetFamily>)> predicate)
{
    PropertySpec p;
    p.atoms_.push_back(atom::Custom{std::move(name), std::move(predicate)});
    return p;
}

PropertySpec PropertySpec::all_of(std::vector<PropertySpec> parts)
{
    PropertySpec p;
    for (auto & part : parts)
        for (auto & a : part.atoms_) p.atoms_.push_back(std::move(a));
    return p;
}

PropertySpec PropertySpec::operator&(const PropertySpec & other) const
{
    PropertySpec p = *this;
    p.atoms_.insert(p.atoms_.end(), other.atoms_.begin(), other.atoms_.end());
    return p;
}

bool PropertySpec::holds(std::span<const SetFamily> families) const
{
    for (const Atom & a : atoms_)
        if (! atom_holds(a, families)) return false;
    return true;
}

std::string PropertySpec::str() const
{
    if (atoms_.empty()) return "true";
    std::string s;
    for (const Atom & a : atoms_) {
        if (! s.empty()) s += '&';
        s += atom_text(a);
    }
    return s;
}

PropertySpec PropertySpec::parse(std::string_view text)
{
    return Parser(text).parse();
}

} // namespace extremal
