#include "extremal/family_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace extremal {

namespace {

std::string strip(const std::string & line)
{
    std::string s = line.substr(0, line.find('#'));
    auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) return {};
    auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

KSet parse_member(const std::string & text, int line_no)
{
    if (text == "{}") return KSet();
    std::vector<int> elements;
    std::stringstream ss(text);
    std::string item;
    int previous = 0;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        int e = 0;
        try {
            e = std::stoi(item, &used);
        }
        catch (const std::exception &) {
            used = 0;
        }
        if (used == 0 || strip(item.substr(used)).size() != 0)
            throw std::invalid_argument("line " + std::to_string(line_no) + ": bad element '" + item + "'");
        if (e <= previous)
            throw std::invalid_argument("line " + std::to_string(line_no) + ": elements must be ascending");
        previous = e;
        elements.push_back(e);
    }
    return KSet::of(elements);
}

} // namespace

SetFamily read_family(std::istream & in)
{
    std::string line;
    int line_no = 0;
    int n = -1, k = -1;
    std::vector<KSet> members;
    while (std::getline(in, line)) {
        ++line_no;
        std::string s = strip(line);
        if (s.empty()) continue;
        if (n < 0) {
            std::istringstream header(s);
            if (! (header >> n >> k) || ! (header >> std::ws).eof())
                throw std::invalid_argument("line " + std::to_string(line_no) + ": expected header 'n k'");
            continue;
        }
        members.push_back(parse_member(s, line_no));
    }
    if (n < 0)
        throw std::invalid_argument("missing 'n k' header");
    return SetFamily(n, k, std::move(members));
}

SetFamily read_family_file(const std::string & path)
{
    std::ifstream in(path);
    if (! in)
        throw std::runtime_error("cannot open " + path);
    return read_family(in);
}

void write_family(std::ostream & out, const SetFamily & family)
{
    out << family.ground_size() << ' ' << family.uniformity() << '\n';
    for (KSet s : family)
        out << s.str() << '\n';
}

void write_family_file(const std::string & path, const SetFamily & family)
{
    std::ofstream out(path);
    if (! out)
        throw std::runtime_error("cannot write " + path);
    write_family(out, family);
}

std::string to_text(const SetFamily & family)
{
    std::ostringstream out;
    write_family(out, family);
    return out.str();
}

SetFamily from_text(const std::string & text)
{
    std::istringstream in(text);
    return read_family(in);
}

} // namespace extremal
