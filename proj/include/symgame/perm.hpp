#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace symgame {

// A permutation of {0, ..., n-1}, stored as its image vector.
// Text forms use 1-based cycle notation: "(1 2 3)(4 5)", identity "()".
class Perm {
public:
    explicit Perm(std::vector<int> image);
    static Perm identity(int n);
    // Parses cycle notation over points 1..n. Throws ParseError on syntax
    // problems and ValidationError when a point repeats or exceeds n.
    static Perm from_cycles(std::string_view text, int n);

    int size() const { return static_cast<int>(image_.size()); }
    int operator()(int i) const;
    const std::vector<int>& image() const { return image_; }

    Perm inverse() const;
    bool is_identity() const;
    std::string cycle_string() const;

    friend auto operator<=>(const Perm&, const Perm&) = default;

private:
    std::vector<int> image_;
};

// Composition acting left-to-right through function application:
// (tau * pi)(i) = tau(pi(i)).
Perm compose(const Perm& tau, const Perm& pi);

// Left action on an indexed tuple: the result r satisfies r[pi(i)] = s[i],
// i.e. r[j] = s[pi^{-1}(j)]. All entries must share one index range for the
// result to be meaningful; callers enforce that where it matters.
std::vector<int> act_on_profile(const Perm& pi, const std::vector<int>& s);

// All permutations of {0..n-1} in lexicographic order of image vectors.
std::vector<Perm> all_perms(int n);

// The transpositions of {0..n-1}, ordered lexicographically by (i, j).
std::vector<Perm> transpositions(int n);

std::size_t factorial(int n);

// A permutation group on {0..n-1}: closed element set plus the generators
// it was built from. Element order is deterministic (sorted by image).
class PermGroup {
public:
    static PermGroup closure(std::vector<Perm> generators, int degree);
    static PermGroup trivial(int degree);
    static PermGroup symmetric(int degree);

    int degree() const { return degree_; }
    std::size_t order() const { return elements_.size(); }
    const std::vector<Perm>& elements() const { return elements_; }
    const std::vector<Perm>& generators() const { return generators_; }

    bool contains(const Perm& p) const;
    // One orbit on {0..degree-1}, i.e. every point reachable from every other.
    bool is_transitive() const;
    // The full symmetric group on the degree.
    bool is_full_symmetric() const;
    PermGroup stabiliser(int point) const;
    // Orbit partition of {0..degree-1}; blocks sorted by least element.
    std::vector<std::vector<int>> orbits() const;

    // Identity present, closed under composition and inverse. Always true
    // for closure() output; exposed so tests can assert it independently.
    bool satisfies_group_axioms() const;

private:
    PermGroup(int degree, std::vector<Perm> elements, std::vector<Perm> generators);

    int degree_ = 0;
    std::vector<Perm> elements_;
    std::vector<Perm> generators_;
};

} // namespace symgame
