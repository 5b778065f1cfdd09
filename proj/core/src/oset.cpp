#include "markovhull/oset.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "markovhull/semilattice.hpp"

namespace markovhull {

namespace {

std::string literal_list(const std::vector<CanonicalElement>& els) {
    std::string out;
    for (const auto& e : els) {
        if (!out.empty()) out += ", ";
        out += e.to_literal();
    }
    return out.empty() ? "(none)" : out;
}

// The up-closure minus O, sorted.
std::vector<CanonicalElement> upset_complement(const std::vector<CanonicalElement>& O) {
    auto up = upset_of_oset(O);
    std::vector<CanonicalElement> out;
    for (const auto& e : up)
        if (std::find(O.begin(), O.end(), e) == O.end()) out.push_back(e);
    return out;
}

} // namespace

void validate_oset(const MatrixRef& T, const std::vector<CanonicalElement>& O) {
    if (!T) throw usage_error("null transition matrix");
    if (O.empty()) throw input_error("a candidate set needs at least one idempotent");
    for (const auto& e : O) {
        if (e.matrix() != T && !(*e.matrix() == *T))
            throw input_error("candidate member is defined over a different matrix");
        if (e.is_zero()) throw input_error("a candidate set cannot contain the zero element");
        if (!e.is_idempotent())
            throw input_error("candidate member " + e.to_literal() + " is not idempotent");
    }
    for (std::size_t i = 0; i < O.size(); ++i)
        for (std::size_t j = i + 1; j < O.size(); ++j)
            if (O[i] == O[j])
                throw input_error("candidate member " + O[i].to_literal() + " is repeated");
}

std::vector<CanonicalElement> upset_of_oset(const std::vector<CanonicalElement>& O) {
    std::set<CanonicalElement> acc;
    for (const auto& o : O) {
        acc.insert(o);
        for (const auto& e : strict_upset(o)) acc.insert(e);
    }
    return {acc.begin(), acc.end()};
}

AxiomReport check_O1(const MatrixRef& T, const std::vector<CanonicalElement>& O) {
    validate_oset(T, O);
    AxiomReport r{"O1", true, ""};
    std::size_t checked = 0;
    for (std::size_t i = 0; i < O.size(); ++i)
        for (std::size_t j = 0; j < O.size(); ++j) {
            if (i == j) continue;
            ++checked;
            if (!multiply(O[i], O[j]).is_zero()) {
                r.pass = false;
                r.notes = "product " + O[i].to_literal() + " * " + O[j].to_literal() +
                          " is nonzero";
                return r;
            }
        }
    r.notes = std::to_string(checked) + " ordered pairs, all products zero";
    return r;
}

AxiomReport check_O2(const MatrixRef& T, const std::vector<CanonicalElement>& O) {
    validate_oset(T, O);
    AxiomReport r{"O2", true, ""};
    // Finite reduction: let M be the longest word in O. For an idempotent
    // (s, X, s) with |s| > M no member can lie above it (members have
    // shorter words), and lying below a member (t, Y, t) only asks whether
    // t is a prefix of s with s[|t|] in Y, which depends on the first
    // M + 1 letters of s alone and not on X. Every legal word of length
    // M + 1 occurs as such a prefix and appears here with some valid X, so
    // if all idempotents with |s| <= M + 1 are comparable to a member, all
    // longer ones are too.
    std::size_t M = 0;
    for (const auto& o : O) M = std::max(M, o.left().size());
    const auto idempotents = enumerate_idempotents(T, static_cast<int>(M) + 1);
    for (const auto& e : idempotents) {
        bool comparable = false;
        for (const auto& o : O)
            if (leq(e, o) || leq(o, e)) {
                comparable = true;
                break;
            }
        if (!comparable) {
            r.pass = false;
            r.notes = "idempotent " + e.to_literal() + " is comparable to no member";
            return r;
        }
    }
    r.notes = "all " + std::to_string(idempotents.size()) + " idempotents with |s| <= " +
              std::to_string(M + 1) + " comparable; longer words reduce to these";
    return r;
}

AxiomReport check_O3(const MatrixRef& T, const std::vector<CanonicalElement>& O) {
    validate_oset(T, O);
    AxiomReport r{"O3", true, ""};
    const auto up = upset_of_oset(O);
    const auto rest = upset_complement(O);
    auto closed = [&](const std::vector<CanonicalElement>& set, std::string& why) {
        for (const auto& a : set)
            for (const auto& b : set) {
                const auto p = multiply(a, b);
                if (p.is_zero()) continue;
                if (std::find(set.begin(), set.end(), p) == set.end()) {
                    why = a.to_literal() + " * " + b.to_literal() + " = " + p.to_literal() +
                          " escapes the set";
                    return false;
                }
            }
        return true;
    };
    std::string why;
    if (!closed(up, why)) {
        r.pass = false;
        r.notes = "up-closure with zero is not closed: " + why;
        return r;
    }
    if (!closed(rest, why)) {
        r.pass = false;
        r.notes = "up-closure minus the candidate set, with zero, is not closed: " + why;
        return r;
    }
    r.notes = "up-closure has " + std::to_string(up.size()) +
              " elements; both sets closed under multiplication";
    return r;
}

AxiomReport check_O4(const MatrixRef& T, const std::vector<CanonicalElement>& O) {
    validate_oset(T, O);
    AxiomReport r{"O4", true, ""};
    const auto rest = upset_complement(O);
    std::map<std::vector<std::size_t>, CanonicalElement> seen;
    for (const auto& e : rest) {
        std::vector<std::size_t> down;
        for (std::size_t i = 0; i < O.size(); ++i)
            if (leq(O[i], e)) down.push_back(i);
        auto [it, fresh] = seen.emplace(down, e);
        if (!fresh) {
            r.pass = false;
            r.notes = it->second.to_literal() + " and " + e.to_literal() +
                      " lie above the same members";
            return r;
        }
    }
    r.notes = std::to_string(rest.size()) + " elements above the candidate set, down-sets all distinct";
    return r;
}

AxiomReport check_O5(const MatrixRef& T, const std::vector<CanonicalElement>& O) {
    validate_oset(T, O);
    AxiomReport r{"O5", true, ""};
    const auto rest = upset_complement(O);
    std::ostringstream notes;
    for (const auto& o : O) {
        std::vector<CanonicalElement> partners;
        for (const auto& e : rest)
            if (d_related(o, e)) partners.push_back(e);
        if (notes.tellp() > 0) notes << "; ";
        notes << o.to_literal() << " ~ " << literal_list(partners);
        if (partners.size() > 1) {
            r.pass = false;
            r.notes = o.to_literal() + " has " + std::to_string(partners.size()) +
                      " D-equivalent elements above the candidate set: " +
                      literal_list(partners);
            return r;
        }
    }
    r.notes = notes.str();
    return r;
}

std::vector<AxiomReport> check_all_axioms(const MatrixRef& T,
                                          const std::vector<CanonicalElement>& O) {
    return {check_O1(T, O), check_O2(T, O), check_O3(T, O), check_O4(T, O), check_O5(T, O)};
}

std::vector<AlphabetEntry> extract_alphabet(const MatrixRef& T,
                                            const std::vector<CanonicalElement>& O) {
    validate_oset(T, O);
    const auto rest = upset_complement(O);
    std::vector<AlphabetEntry> out;
    for (const auto& o : O)
        for (const auto& alpha : rest)
            if (o.middle() == alpha.middle())
                out.push_back({"g" + std::to_string(out.size()),
                               CanonicalElement::make(T, o.left(), o.middle(), alpha.left())});
    return out;
}

MatrixRef induced_matrix(const std::vector<AlphabetEntry>& alphabet) {
    if (alphabet.empty()) throw input_error("cannot build a matrix on an empty alphabet");
    std::vector<std::string> names;
    std::vector<std::vector<int>> entries;
    for (const auto& a : alphabet) names.push_back(a.name);
    for (const auto& a : alphabet) {
        std::vector<int> row;
        for (const auto& b : alphabet)
            row.push_back(multiply(a.element, b.element).is_zero() ? 0 : 1);
        entries.push_back(std::move(row));
    }
    return make_matrix(std::move(names), entries);
}

GenerationResult generation_search(const MatrixRef& T,
                                   const std::vector<AlphabetEntry>& alphabet, int bound) {
    if (!T) throw usage_error("null transition matrix");
    if (bound < 0) throw input_error("generation bound must be nonnegative");
    GenerationResult result;
    result.bound = bound;

    std::vector<std::pair<std::string, CanonicalElement>> targets;
    for (std::size_t a = 0; a < T->size(); ++a)
        targets.emplace_back(T->letter_name(static_cast<Letter>(a)),
                             CanonicalElement::generator(T, Word(1, static_cast<char>(a))));

    std::vector<std::pair<std::string, CanonicalElement>> steps;
    for (const auto& entry : alphabet) {
        steps.emplace_back(entry.name, entry.element);
        steps.emplace_back(entry.name + "^-1", entry.element.inverse());
    }

    std::map<CanonicalElement, std::vector<std::string>> reached;
    std::deque<CanonicalElement> queue;
    auto within = [&](const CanonicalElement& e) {
        return static_cast<int>(e.left().size()) <= bound &&
               static_cast<int>(e.right().size()) <= bound;
    };
    auto visit = [&](const CanonicalElement& e, std::vector<std::string> expr) {
        if (e.is_zero() || !within(e)) return;
        if (reached.emplace(e, std::move(expr)).second) queue.push_back(e);
    };
    for (const auto& [token, el] : steps) visit(el, {token});

    auto all_found = [&]() {
        for (const auto& [name, el] : targets)
            if (!reached.count(el)) return false;
        return true;
    };
    while (!queue.empty() && !all_found()) {
        const CanonicalElement cur = queue.front();
        queue.pop_front();
        const auto& expr = reached.at(cur);
        for (const auto& [token, el] : steps) {
            auto next_expr = expr;
            next_expr.push_back(token);
            visit(multiply(cur, el), std::move(next_expr));
        }
    }

    result.closure_size = reached.size();
    result.complete = true;
    for (const auto& [name, el] : targets) {
        auto it = reached.find(el);
        if (it == reached.end()) {
            result.complete = false;
            continue;
        }
        result.witnesses.push_back({name, el, it->second});
    }
    return result;
}

namespace {

void replay_witnesses(const Certificate& cert) {
    std::map<std::string, CanonicalElement> lookup;
    for (const auto& entry : cert.alphabet) {
        lookup.emplace(entry.name, entry.element);
        lookup.emplace(entry.name + "^-1", entry.element.inverse());
    }
    for (const auto& w : cert.generation.witnesses) {
        if (w.expression.empty()) throw std::logic_error("generation witness has no factors");
        auto it = lookup.find(w.expression.front());
        if (it == lookup.end())
            throw std::logic_error("generation witness names an unknown generator");
        CanonicalElement acc = it->second;
        for (std::size_t i = 1; i < w.expression.size(); ++i) {
            auto jt = lookup.find(w.expression[i]);
            if (jt == lookup.end())
                throw std::logic_error("generation witness names an unknown generator");
            acc = multiply(acc, jt->second);
        }
        if (!(acc == w.target))
            throw std::logic_error("generation witness for " + w.target_name +
                                   " does not multiply back to the letter map");
    }
}

} // namespace

Certificate build_certificate(const MatrixRef& T, const std::vector<CanonicalElement>& O,
                              int gen_bound) {
    validate_oset(T, O);
    Certificate cert;
    cert.matrix = T;
    cert.oset = O;
    cert.axioms = check_all_axioms(T, O);
    cert.generation.bound = gen_bound;

    for (const auto& a : cert.axioms)
        if (!a.pass) {
            cert.verdict = "INVALID";
            cert.note = "axiom " + a.axiom + " fails: " + a.notes;
            return cert;
        }

    cert.alphabet = extract_alphabet(T, O);
    if (cert.alphabet.empty()) {
        cert.verdict = "INCONCLUSIVE";
        cert.note = "the extracted alphabet is empty";
        return cert;
    }
    try {
        cert.induced = induced_matrix(cert.alphabet);
    } catch (const input_error& e) {
        cert.verdict = "INCONCLUSIVE";
        cert.note = std::string("the induced matrix is malformed: ") + e.what();
        return cert;
    }

    cert.generation = generation_search(T, cert.alphabet, gen_bound);
    replay_witnesses(cert);
    if (cert.generation.complete) {
        cert.verdict = "VALID";
        cert.note = "axioms hold and every letter map is a product of the new generators";
    } else {
        cert.verdict = "INCONCLUSIVE";
        cert.note = "axioms hold but generation was not established within word-length bound " +
                    std::to_string(gen_bound);
    }
    return cert;
}

} // namespace markovhull
