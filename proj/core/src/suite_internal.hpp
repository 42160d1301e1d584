#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <jwcat/functor_ck.hpp>
#include <jwcat/functor_p.hpp>
#include <jwcat/koszul.hpp>
#include <jwcat/suite.hpp>

namespace jwcat::detail
{

struct Outcome
{
    Verdict verdict = Verdict::Fail;
    std::string detail;
    std::vector<std::string> witnesses;
};

inline Outcome pass(std::string detail = {}, std::vector<std::string> w = {})
{
    return {Verdict::Pass, std::move(detail), std::move(w)};
}

inline Outcome fail(std::string detail, std::vector<std::string> w = {})
{
    return {Verdict::Fail, std::move(detail), std::move(w)};
}

inline Outcome inconclusive(std::string detail, std::vector<std::string> w = {})
{
    return {Verdict::Inconclusive, std::move(detail), std::move(w)};
}

// Worst of two verdicts: fail over inconclusive over pass.
Verdict worst(Verdict a, Verdict b);

// Objects shared between checks, computed on first use. Keys are
// (vertex, internal shift) of a projective in degree 0.
class Context
{
public:
    explicit Context(const VerificationConfig &cfg);

    int window() const { return window_; }
    int order() const { return order_; }
    int depth() const { return window_ + 2; }

    ComplexPtr point(int vertex, int shift = 0) const;

    const PImage &P(int vertex, int shift = 0);
    const KoszulImage &D(int vertex, int shift = 0);     // D of the projective
    const KoszulImage &DP(int vertex, int shift = 0);    // D of P of the projective
    const CKImage &CKD(int vertex, int shift = 0);       // CK of D of the projective
    const CKImage &CK(int vertex, int shift = 0);        // CK of the projective
    const IsoResult &theorem_iso(int vertex, int shift = 0);
    const Reduction &reduced_DP(int vertex, int shift = 0);

    // Reductions met so far, in order of first use.
    void record(const std::string &name, const Reduction &r);
    const std::vector<std::pair<std::string, Reduction>> &corpus() const { return corpus_; }

private:
    using Key = std::pair<int, int>;
    int window_;
    int order_;
    std::map<Key, PImage> p_;
    std::map<Key, KoszulImage> d_;
    std::map<Key, KoszulImage> dp_;
    std::map<Key, CKImage> ckd_;
    std::map<Key, CKImage> ck_;
    std::map<Key, IsoResult> iso_;
    std::map<Key, Reduction> dp_red_;
    std::vector<std::pair<std::string, Reduction>> corpus_;
};

using CheckFn = std::function<Outcome(Context &)>;

struct CheckSpec
{
    std::string group;
    std::string name;
    std::string anchor;
    std::string title;
    CheckFn run;
};

// All checks in execution order.
std::vector<CheckSpec> all_checks(const VerificationConfig &cfg);

std::string key_name(int vertex, int shift);

} // namespace jwcat::detail
