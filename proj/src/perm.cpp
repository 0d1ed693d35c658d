#include "symgame/perm.hpp"

#include "symgame/error.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <sstream>

namespace symgame {

Perm::Perm(std::vector<int> image) : image_(std::move(image)) {
    std::vector<bool> seen(image_.size(), false);
    for (int v : image_) {
        if (v < 0 || v >= static_cast<int>(image_.size()) || seen[v])
            throw ValidationError("permutation image is not a bijection");
        seen[v] = true;
    }
}

Perm Perm::identity(int n) {
    if (n < 0) throw ValidationError("negative permutation degree");
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 0);
    return Perm(std::move(img));
}

int Perm::operator()(int i) const {
    if (i < 0 || i >= size()) throw ValidationError("permutation applied to out-of-range point");
    return image_[i];
}

Perm Perm::inverse() const {
    std::vector<int> inv(image_.size());
    for (int i = 0; i < size(); ++i) inv[image_[i]] = i;
    return Perm(std::move(inv));
}

bool Perm::is_identity() const {
    for (int i = 0; i < size(); ++i)
        if (image_[i] != i) return false;
    return true;
}

Perm Perm::from_cycles(std::string_view text, int n) {
    if (n < 0) throw ValidationError("negative permutation degree");
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 0);
    std::vector<bool> used(n, false);

    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    skip_ws();
    if (pos == text.size()) throw ParseError("empty permutation text");
    bool any_cycle = false;
    while (pos < text.size()) {
        skip_ws();
        if (pos == text.size()) break;
        if (text[pos] != '(') throw ParseError("expected '(' in cycle notation");
        ++pos;
        std::vector<int> cycle;
        while (true) {
            skip_ws();
            if (pos == text.size()) throw ParseError("unterminated cycle");
            if (text[pos] == ')') {
                ++pos;
                break;
            }
            if (!std::isdigit(static_cast<unsigned char>(text[pos])))
                throw ParseError("expected point or ')' in cycle notation");
            int value = 0;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
                value = value * 10 + (text[pos] - '0');
                ++pos;
            }
            if (value < 1 || value > n)
                throw ValidationError("cycle point " + std::to_string(value) +
                                      " outside 1.." + std::to_string(n));
            if (used[value - 1])
                throw ValidationError("cycle point " + std::to_string(value) + " repeated");
            used[value - 1] = true;
            cycle.push_back(value - 1);
            skip_ws();
            if (pos < text.size() && text[pos] == ',') ++pos; // tolerate comma separators
        }
        any_cycle = true;
        for (std::size_t k = 0; k < cycle.size(); ++k)
            img[cycle[k]] = cycle[(k + 1) % cycle.size()];
    }
    if (!any_cycle) throw ParseError("no cycles in permutation text");
    return Perm(std::move(img));
}

std::string Perm::cycle_string() const {
    std::vector<bool> seen(image_.size(), false);
    std::ostringstream out;
    bool wrote = false;
    for (int start = 0; start < size(); ++start) {
        if (seen[start] || image_[start] == start) {
            seen[start] = true;
            continue;
        }
        out << '(';
        int i = start;
        bool first = true;
        while (!seen[i]) {
            seen[i] = true;
            if (!first) out << ' ';
            out << (i + 1);
            first = false;
            i = image_[i];
        }
        out << ')';
        wrote = true;
    }
    if (!wrote) return "()";
    return out.str();
}

Perm compose(const Perm& tau, const Perm& pi) {
    if (tau.size() != pi.size())
        throw PreconditionError("composition requires permutations of equal degree");
    std::vector<int> img(pi.size());
    for (int i = 0; i < pi.size(); ++i) img[i] = tau(pi(i));
    return Perm(std::move(img));
}

std::vector<int> act_on_profile(const Perm& pi, const std::vector<int>& s) {
    if (static_cast<int>(s.size()) != pi.size())
        throw PreconditionError("profile length does not match permutation degree");
    std::vector<int> result(s.size());
    for (int i = 0; i < pi.size(); ++i) result[pi(i)] = s[i];
    return result;
}

std::vector<Perm> all_perms(int n) {
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 0);
    std::vector<Perm> out;
    out.reserve(factorial(n));
    do {
        out.push_back(Perm(img));
    } while (std::next_permutation(img.begin(), img.end()));
    return out;
}

std::vector<Perm> transpositions(int n) {
    std::vector<Perm> out;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            std::vector<int> img(n);
            std::iota(img.begin(), img.end(), 0);
            std::swap(img[i], img[j]);
            out.push_back(Perm(std::move(img)));
        }
    }
    return out;
}

std::size_t factorial(int n) {
    std::size_t acc = 1;
    for (int k = 2; k <= n; ++k) acc *= static_cast<std::size_t>(k);
    return acc;
}

PermGroup::PermGroup(int degree, std::vector<Perm> elements, std::vector<Perm> generators)
    : degree_(degree), elements_(std::move(elements)), generators_(std::move(generators)) {}

PermGroup PermGroup::closure(std::vector<Perm> generators, int degree) {
    for (const Perm& g : generators)
        if (g.size() != degree)
            throw PreconditionError("generator degree does not match group degree");
    std::set<Perm> seen;
    std::vector<Perm> frontier;
    Perm id = Perm::identity(degree);
    seen.insert(id);
    frontier.push_back(id);
    while (!frontier.empty()) {
        Perm current = frontier.back();
        frontier.pop_back();
        for (const Perm& g : generators) {
            Perm next = compose(g, current);
            if (seen.insert(next).second) frontier.push_back(next);
        }
    }
    std::vector<Perm> elements(seen.begin(), seen.end());
    return PermGroup(degree, std::move(elements), std::move(generators));
}

PermGroup PermGroup::trivial(int degree) {
    return closure({}, degree);
}

PermGroup PermGroup::symmetric(int degree) {
    std::vector<Perm> gens = transpositions(degree);
    PermGroup g = closure(std::move(gens), degree);
    return g;
}

bool PermGroup::contains(const Perm& p) const {
    return std::binary_search(elements_.begin(), elements_.end(), p);
}

bool PermGroup::is_transitive() const {
    if (degree_ == 0) return true;
    std::vector<bool> reached(degree_, false);
    reached[0] = true;
    std::size_t count = 1;
    std::vector<int> stack{0};
    while (!stack.empty()) {
        int point = stack.back();
        stack.pop_back();
        for (const Perm& g : elements_) {
            int next = g(point);
            if (!reached[next]) {
                reached[next] = true;
                ++count;
                stack.push_back(next);
            }
        }
    }
    return count == static_cast<std::size_t>(degree_);
}

bool PermGroup::is_full_symmetric() const {
    return order() == factorial(degree_);
}

PermGroup PermGroup::stabiliser(int point) const {
    if (point < 0 || point >= degree_)
        throw ValidationError("stabiliser point out of range");
    std::vector<Perm> kept;
    for (const Perm& g : elements_)
        if (g(point) == point) kept.push_back(g);
    return PermGroup(degree_, kept, kept);
}

std::vector<std::vector<int>> PermGroup::orbits() const {
    std::vector<std::vector<int>> result;
    std::vector<bool> seen(degree_, false);
    for (int start = 0; start < degree_; ++start) {
        if (seen[start]) continue;
        std::vector<int> orbit;
        std::vector<int> stack{start};
        seen[start] = true;
        while (!stack.empty()) {
            int point = stack.back();
            stack.pop_back();
            orbit.push_back(point);
            for (const Perm& g : elements_) {
                int next = g(point);
                if (!seen[next]) {
                    seen[next] = true;
                    stack.push_back(next);
                }
            }
        }
        std::sort(orbit.begin(), orbit.end());
        result.push_back(std::move(orbit));
    }
    return result;
}

bool PermGroup::satisfies_group_axioms() const {
    if (!contains(Perm::identity(degree_))) return false;
    for (const Perm& a : elements_) {
        if (!contains(a.inverse())) return false;
        for (const Perm& b : elements_)
            if (!contains(compose(a, b))) return false;
    }
    return true;
}

} // namespace symgame
