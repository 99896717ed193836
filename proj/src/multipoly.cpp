#include "multipoly.hpp"

#include <numeric>
#include <stdexcept>

namespace folis::verifier {

namespace {

long total_degree(const Exponents& e) {
    return std::accumulate(e.begin(), e.end(), 0L);
}

void check_same_space(const MultiPoly& a, const MultiPoly& b) {
    if (a.num_vars() != b.num_vars()) {
        throw std::invalid_argument("polynomial variable-count mismatch");
    }
}

}  // namespace

MultiPoly::MultiPoly(int num_vars) : num_vars_(num_vars) {
    if (num_vars < 1) throw std::invalid_argument("polynomial needs at least one variable");
}

MultiPoly MultiPoly::constant(int num_vars, const BigRat& c) {
    MultiPoly p(num_vars);
    p.add_term(Exponents(static_cast<size_t>(num_vars), 0), c);
    return p;
}

MultiPoly MultiPoly::variable(int num_vars, int index) {
    if (index < 0 || index >= num_vars) throw std::invalid_argument("variable index out of range");
    MultiPoly p(num_vars);
    Exponents e(static_cast<size_t>(num_vars), 0);
    e[static_cast<size_t>(index)] = 1;
    p.add_term(e, BigRat(1));
    return p;
}

MultiPoly MultiPoly::monomial(int num_vars, Exponents exps, const BigRat& c) {
    if (static_cast<int>(exps.size()) != num_vars) {
        throw std::invalid_argument("exponent vector length mismatch");
    }
    for (int e : exps) {
        if (e < 0) throw std::invalid_argument("negative exponent");
    }
    MultiPoly p(num_vars);
    p.add_term(exps, c);
    return p;
}

long MultiPoly::degree() const {
    long d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, total_degree(e));
    return d;
}

bool MultiPoly::is_homogeneous() const {
    long d = -2;
    for (const auto& [e, c] : terms_) {
        long td = total_degree(e);
        if (d == -2) d = td;
        if (td != d) return false;
    }
    return true;
}

void MultiPoly::add_term(const Exponents& exps, const BigRat& c) {
    if (static_cast<int>(exps.size()) != num_vars_) {
        throw std::invalid_argument("exponent vector length mismatch");
    }
    if (c == 0) return;
    auto it = terms_.find(exps);
    if (it == terms_.end()) {
        terms_.emplace(exps, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

MultiPoly MultiPoly::operator+(const MultiPoly& rhs) const {
    check_same_space(*this, rhs);
    MultiPoly r = *this;
    for (const auto& [e, c] : rhs.terms_) r.add_term(e, c);
    return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& rhs) const {
    check_same_space(*this, rhs);
    MultiPoly r = *this;
    for (const auto& [e, c] : rhs.terms_) r.add_term(e, -c);
    return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& rhs) const {
    check_same_space(*this, rhs);
    MultiPoly r(num_vars_);
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : rhs.terms_) {
            Exponents e(ea.size());
            for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

MultiPoly MultiPoly::operator-() const { return scaled(BigRat(-1)); }

MultiPoly MultiPoly::scaled(const BigRat& c) const {
    MultiPoly r(num_vars_);
    if (c == 0) return r;
    for (const auto& [e, coeff] : terms_) r.terms_.emplace(e, coeff * c);
    return r;
}

bool MultiPoly::operator==(const MultiPoly& rhs) const {
    return num_vars_ == rhs.num_vars_ && terms_ == rhs.terms_;
}

MultiPoly MultiPoly::partial_derivative(int var) const {
    if (var < 0 || var >= num_vars_) throw std::invalid_argument("variable index out of range");
    MultiPoly r(num_vars_);
    for (const auto& [e, c] : terms_) {
        int ev = e[static_cast<size_t>(var)];
        if (ev == 0) continue;
        Exponents d = e;
        d[static_cast<size_t>(var)] = ev - 1;
        r.add_term(d, c * ev);
    }
    return r;
}

BigRat MultiPoly::evaluate(const std::vector<BigRat>& point) const {
    if (static_cast<int>(point.size()) != num_vars_) {
        throw std::invalid_argument("evaluation point dimension mismatch");
    }
    BigRat acc(0);
    for (const auto& [e, c] : terms_) {
        BigRat t = c;
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] != 0) t *= rpow(point[i], static_cast<unsigned long>(e[i]));
        }
        acc += t;
    }
    return acc;
}

std::complex<double> MultiPoly::evaluate(const std::vector<std::complex<double>>& point) const {
    if (static_cast<int>(point.size()) != num_vars_) {
        throw std::invalid_argument("evaluation point dimension mismatch");
    }
    std::complex<double> acc(0.0, 0.0);
    for (const auto& [e, c] : terms_) {
        std::complex<double> t(to_double(c), 0.0);
        for (size_t i = 0; i < e.size(); ++i) {
            for (int rep = 0; rep < e[i]; ++rep) t *= point[i];
        }
        acc += t;
    }
    return acc;
}

MultiPoly MultiPoly::homogeneous_part(long deg) const {
    MultiPoly r(num_vars_);
    for (const auto& [e, c] : terms_) {
        if (total_degree(e) == deg) r.terms_.emplace(e, c);
    }
    return r;
}

bool MultiPoly::divisible_by_variable(int var) const {
    for (const auto& [e, c] : terms_) {
        if (e[static_cast<size_t>(var)] == 0) return false;
    }
    return true;
}

MultiPoly MultiPoly::divided_by_variable(int var) const {
    MultiPoly r(num_vars_);
    for (const auto& [e, c] : terms_) {
        if (e[static_cast<size_t>(var)] == 0) {
            throw std::invalid_argument("polynomial not divisible by requested variable");
        }
        Exponents q = e;
        --q[static_cast<size_t>(var)];
        r.terms_.emplace(q, c);
    }
    return r;
}

MultiPoly MultiPoly::insert_variable(int at) const {
    if (at < 0 || at > num_vars_) throw std::invalid_argument("insertion position out of range");
    MultiPoly r(num_vars_ + 1);
    for (const auto& [e, c] : terms_) {
        Exponents w = e;
        w.insert(w.begin() + at, 0);
        r.terms_.emplace(w, c);
    }
    return r;
}

MultiPoly MultiPoly::raise_to_degree(int var, long target_degree) const {
    MultiPoly r(num_vars_);
    for (const auto& [e, c] : terms_) {
        long td = total_degree(e);
        if (td > target_degree) {
            throw std::invalid_argument("raise_to_degree: term already above target degree");
        }
        Exponents w = e;
        w[static_cast<size_t>(var)] += static_cast<int>(target_degree - td);
        r.terms_.emplace(w, c);
    }
    return r;
}

MultiPoly MultiPoly::substitute_one(int var) const {
    if (num_vars_ < 2) throw std::invalid_argument("substitute_one: need at least two variables");
    if (var < 0 || var >= num_vars_) throw std::invalid_argument("variable index out of range");
    MultiPoly r(num_vars_ - 1);
    for (const auto& [e, c] : terms_) {
        Exponents w = e;
        w.erase(w.begin() + var);
        r.add_term(w, c);
    }
    return r;
}

std::string MultiPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [e, c] : terms_) {
        BigRat coeff = c;
        if (out.empty()) {
            // leading term keeps its sign attached
        } else if (coeff < 0) {
            out += " - ";
            coeff = -coeff;
        } else {
            out += " + ";
        }
        out += folis::to_string(coeff);
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            out += " * z" + std::to_string(i + 1);
            if (e[i] > 1) out += "^" + std::to_string(e[i]);
        }
    }
    return out;
}

}  // namespace folis::verifier
