#include "hyperpoly/linear_expr.hpp"

#include <sstream>

namespace hyperpoly {

LinearExpr LinearExpr::variable(const std::string& name) {
    LinearExpr e;
    e.coeffs_[name] = DtScalar(1);
    return e;
}

DtScalar LinearExpr::coeff(const std::string& name) const {
    auto it = coeffs_.find(name);
    return it == coeffs_.end() ? DtScalar() : it->second;
}

void LinearExpr::set_coeff(const std::string& name, DtScalar c) {
    if (c.is_zero())
        coeffs_.erase(name);
    else
        coeffs_[name] = std::move(c);
}

LinearExpr LinearExpr::operator+(const LinearExpr& o) const {
    LinearExpr out = *this;
    for (const auto& [v, c] : o.coeffs_) out.set_coeff(v, out.coeff(v) + c);
    out.constant_ = constant_ + o.constant_;
    return out;
}

LinearExpr LinearExpr::operator-(const LinearExpr& o) const {
    LinearExpr out = *this;
    for (const auto& [v, c] : o.coeffs_) out.set_coeff(v, out.coeff(v) - c);
    out.constant_ = constant_ - o.constant_;
    return out;
}

LinearExpr LinearExpr::operator-() const {
    LinearExpr out;
    for (const auto& [v, c] : coeffs_) out.coeffs_[v] = -c;
    out.constant_ = -constant_;
    return out;
}

LinearExpr LinearExpr::scaled(const DtScalar& k) const {
    LinearExpr out;
    if (k.is_zero()) return out;
    for (const auto& [v, c] : coeffs_) out.set_coeff(v, c * k);
    out.constant_ = constant_ * k;
    return out;
}

DtScalar LinearExpr::eval(const std::map<std::string, DtScalar>& point) const {
    DtScalar acc = constant_;
    for (const auto& [v, c] : coeffs_) {
        auto it = point.find(v);
        if (it != point.end()) acc = acc + c * it->second;
    }
    return acc;
}

bool LinearExpr::operator<(const LinearExpr& o) const {
    auto key = [](const LinearExpr& e) {
        std::ostringstream s;
        for (const auto& [v, c] : e.coeffs_) s << v << ":" << c.str() << ";";
        s << "#" << e.constant_.str();
        return s.str();
    };
    return key(*this) < key(o);
}

std::string LinearExpr::str() const {
    std::ostringstream out;
    bool first = true;
    for (const auto& [v, c] : coeffs_) {
        std::string cs = c.abs().str();
        if (first) {
            if (c.sign() < 0) out << "-";
            first = false;
        } else {
            out << (c.sign() < 0 ? " - " : " + ");
        }
        if (cs == "1")
            out << v;
        else
            out << cs << "*" << v;
    }
    if (first) return constant_.str();
    if (!constant_.is_zero())
        out << (constant_.sign() < 0 ? " - " : " + ") << (-constant_).abs().str()
            << "";
    return out.str();
}

Constraint::Constraint(LinearExpr e, Relation r) : expr(std::move(e)), relation(r) {
    // Canonical scaling: divide by |first nonzero coefficient|, so that
    // syntactic comparison identifies positively proportional
    // constraints; flip EQ0 so the pivot is +1.
    const DtScalar* pivot = nullptr;
    if (!expr.coeffs().empty())
        pivot = &expr.coeffs().begin()->second;
    else if (!expr.constant().is_zero())
        pivot = &expr.constant();
    if (!pivot) return;
    DtScalar scale = pivot->abs().inverse();
    if (relation == Relation::EQ0 && pivot->sign() < 0) scale = -scale;
    expr = expr.scaled(scale);
}

bool Constraint::operator<(const Constraint& o) const {
    if (relation != o.relation) return relation < o.relation;
    return expr < o.expr;
}

bool Constraint::satisfied_by(const std::map<std::string, DtScalar>& point) const {
    int s = expr.eval(point).sign();
    return relation == Relation::EQ0 ? s == 0 : s >= 0;
}

Constraint constraint_geq(const LinearExpr& lhs, const LinearExpr& rhs) {
    return Constraint(lhs - rhs, Relation::GEQ0);
}
Constraint constraint_leq(const LinearExpr& lhs, const LinearExpr& rhs) {
    return Constraint(rhs - lhs, Relation::GEQ0);
}
Constraint constraint_eq(const LinearExpr& lhs, const LinearExpr& rhs) {
    return Constraint(lhs - rhs, Relation::EQ0);
}

std::string Constraint::str() const {
    const char* rel = relation == Relation::EQ0 ? "=" : ">=";
    const auto& cs = expr.coeffs();
    if (cs.size() == 1) {
        // Solve for the variable: x >= c or x <= c.
        const auto& [v, c] = *cs.begin();
        DtScalar bound = (-expr.constant()) / c;
        if (relation == Relation::EQ0) return v + " = " + bound.str();
        return v + (c.sign() > 0 ? " >= " : " <= ") + bound.str();
    }
    // Variables left, constant right: "x + 2*l <= 5" style.
    LinearExpr vars = expr;
    vars.set_constant(DtScalar(0));
    DtScalar rhs = -expr.constant();
    return vars.str() + " " + rel + " " + rhs.str();
}

DtScalar Generator::coord(const std::string& name) const {
    auto it = coords.find(name);
    return it == coords.end() ? DtScalar() : it->second;
}

bool Generator::operator<(const Generator& o) const {
    if (kind != o.kind) return kind < o.kind;
    auto key = [](const Generator& g) {
        std::ostringstream s;
        for (const auto& [v, c] : g.coords) s << v << ":" << c.str() << ";";
        return s.str();
    };
    return key(*this) < key(o);
}

std::string Generator::str() const {
    std::ostringstream out;
    switch (kind) {
        case GeneratorKind::POINT: out << "point("; break;
        case GeneratorKind::RAY: out << "ray("; break;
        case GeneratorKind::LINE: out << "line("; break;
    }
    bool first = true;
    for (const auto& [v, c] : coords) {
        if (!first) out << ", ";
        first = false;
        out << v << "=" << c.str();
    }
    out << ")";
    return out.str();
}

}  // namespace hyperpoly
