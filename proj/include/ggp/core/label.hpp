#pragma once

#include <map>
#include <string>
#include <vector>

#include "ggp/core/coord.hpp"

namespace ggp {

/// A unitary supercuspidal rho of GL_degree, up to unramified twist.
struct CuspidalLabel {
    std::string id;
    int degree = 1;
    std::string dual_id;
};

/// The set of cuspidal labels an invocation works with. Every label's dual must
/// be present, with matching degree, and dual(dual(x)) = x.
class LabelSet {
public:
    LabelSet() = default;

    explicit LabelSet(const std::vector<CuspidalLabel>& labels) {
        for (const auto& l : labels) {
            if (l.id.empty()) throw Error("label id must be non-empty");
            if (l.degree < 1) throw Error("label " + l.id + ": degree must be >= 1");
            if (!labels_.emplace(l.id, l).second) throw Error("duplicate label " + l.id);
        }
        for (const auto& [id, l] : labels_) {
            auto it = labels_.find(l.dual_id);
            if (it == labels_.end())
                throw Error("label " + id + ": dual " + l.dual_id + " is not declared");
            if (it->second.dual_id != id)
                throw Error("label " + id + ": dual of dual is not itself");
            if (it->second.degree != l.degree)
                throw Error("label " + id + ": dual has a different degree");
        }
    }

    /// The ambient default: one self-dual label "rho" of degree 1.
    static LabelSet single(std::string id = "rho", int degree = 1) {
        return LabelSet({CuspidalLabel{id, degree, id}});
    }

    const CuspidalLabel& at(const std::string& id) const {
        auto it = labels_.find(id);
        if (it == labels_.end()) throw Error("unknown cuspidal label \"" + id + "\"");
        return it->second;
    }

    bool contains(const std::string& id) const { return labels_.count(id) != 0; }
    int degree(const std::string& id) const { return at(id).degree; }
    const std::string& dual(const std::string& id) const { return at(id).dual_id; }
    bool self_dual(const std::string& id) const { return dual(id) == id; }

    std::vector<CuspidalLabel> all() const {
        std::vector<CuspidalLabel> out;
        for (const auto& [id, l] : labels_) out.push_back(l);
        return out;
    }

private:
    std::map<std::string, CuspidalLabel> labels_;
};

}  // namespace ggp
