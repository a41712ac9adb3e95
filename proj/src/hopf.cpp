#include "skein/hopf.hpp"

#include <fstream>
#include <functional>
#include <sstream>

namespace skein {

namespace {
Scalar parse_field_scalar(const std::string& tok, long order) {
    // comma-separated rational coordinates in the power basis of Q(zeta_order)
    std::vector<Rat> coords;
    std::string cur;
    for (char ch : tok) {
        if (ch == ',') {
            coords.push_back(rat_parse(cur));
            cur.clear();
        } else {
            cur += ch;
        }
    }
    coords.push_back(rat_parse(cur));
    if (order == 1 && coords.size() == 1) return Scalar(Cyclotomic(coords[0], 1));
    return Scalar(Cyclotomic::from_poly(order, coords));
}

std::string field_scalar_str(const Scalar& s, long order) {
    Cyclotomic c = s.as_cyclotomic(order);
    if (c.order() != order) c = c.embedded(order);
    std::string out;
    const auto& coords = c.coords();
    size_t last = 0;
    for (size_t i = 0; i < coords.size(); ++i)
        if (!skein::is_zero(coords[i])) last = i;
    for (size_t i = 0; i <= last; ++i) {
        if (i) out += ",";
        out += rat_str(coords[i]);
    }
    return out;
}
} // namespace

std::vector<Scalar> HopfAlgebraData::basis(size_t i) const {
    std::vector<Scalar> v(dim, Scalar(0));
    v[i] = Scalar(Cyclotomic(Rat(1), field_order));
    return v;
}

std::vector<Scalar> HopfAlgebraData::mul(const std::vector<Scalar>& a,
                                         const std::vector<Scalar>& b) const {
    std::vector<Scalar> out(dim, Scalar(0));
    for (size_t i = 0; i < dim; ++i) {
        if (a[i].is_zero()) continue;
        for (size_t j = 0; j < dim; ++j) {
            if (b[j].is_zero()) continue;
            auto it = mult.find({i, j});
            if (it == mult.end()) continue;
            const auto& col = it->second;
            Scalar c = a[i] * b[j];
            for (size_t k = 0; k < dim; ++k)
                if (!col[k].is_zero()) out[k] += c * col[k];
        }
    }
    return out;
}

Scalar HopfAlgebraData::eps(const std::vector<Scalar>& a) const {
    Scalar s(0);
    for (size_t i = 0; i < dim; ++i)
        if (!a[i].is_zero()) s += a[i] * counit[i];
    return s;
}

std::vector<Scalar> HopfAlgebraData::antipode_apply(const std::vector<Scalar>& a) const {
    std::vector<Scalar> out(dim, Scalar(0));
    for (size_t j = 0; j < dim; ++j) {
        if (a[j].is_zero()) continue;
        for (size_t i = 0; i < dim; ++i)
            if (!antipode.at(i, j).is_zero()) out[i] += antipode.at(i, j) * a[j];
    }
    return out;
}

std::vector<Scalar> HopfAlgebraData::invert_element(const std::vector<Scalar>& a) const {
    Mat lm(dim, dim);
    for (size_t j = 0; j < dim; ++j)
        for (size_t i = 0; i < dim; ++i) {
            if (a[i].is_zero()) continue;
            auto it = mult.find({i, j});
            if (it == mult.end()) continue;
            for (size_t k = 0; k < dim; ++k)
                if (!it->second[k].is_zero()) lm.at(k, j) += a[i] * it->second[k];
        }
    std::vector<Scalar> x;
    if (!solve(lm, unit, x)) throw std::domain_error("element is not invertible");
    return x;
}

const ModuleData& HopfPackage::module(const std::string& name) const {
    for (const auto& m : modules)
        if (m.name == name) return m;
    throw std::domain_error("unknown module '" + name + "'");
}

bool HopfPackage::has_module(const std::string& name) const {
    for (const auto& m : modules)
        if (m.name == name) return true;
    return false;
}

// ------------------------------------------------------------------- loader

HopfPackage parse_hopf_text(const std::string& text, bool skip_validate) {
    HopfPackage pkg;
    HopfAlgebraData& H = pkg.algebra;
    std::istringstream is(text);
    std::string line;
    std::string section;
    ModuleData* cur_module = nullptr;
    auto need_dim = [&]() {
        if (H.dim == 0) throw std::runtime_error("hopf file: dim must come first");
    };
    while (std::getline(is, line)) {
        // strip comments
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream ls(line);
        std::string w;
        if (!(ls >> w)) continue;
        if (w == "hopf") { ls >> H.name; continue; }
        if (w == "field") { ls >> H.field_order; continue; }
        if (w == "dim") {
            ls >> H.dim;
            H.unit.assign(H.dim, Scalar(0));
            H.counit.assign(H.dim, Scalar(0));
            H.coprod.assign(H.dim, {});
            H.antipode = Mat(H.dim, H.dim);
            H.rmatrix = Mat(H.dim, H.dim);
            H.ribbon.assign(H.dim, Scalar(0));
            H.pivot.assign(H.dim, Scalar(0));
            H.rintegral.assign(H.dim, Scalar(0));
            H.cointegral.assign(H.dim, Scalar(0));
            continue;
        }
        if (w == "labels") {
            std::string l;
            while (ls >> l) H.labels.push_back(l);
            continue;
        }
        if (w == "module") {
            need_dim();
            ModuleData m;
            ls >> m.name;
            std::string kw;
            while (ls >> kw) {
                if (kw == "rank") { ls >> m.rank; }
                else if (kw == "simple") m.flag_simple = true;
                else if (kw == "projective") m.flag_projective = true;
                else if (kw == "covers") ls >> m.covers;
                else throw std::runtime_error("hopf file: unknown module keyword " + kw);
            }
            m.action.assign(H.dim, Mat(m.rank, m.rank));
            pkg.modules.push_back(std::move(m));
            cur_module = &pkg.modules.back();
            section = "module";
            continue;
        }
        if (w == "end") { section.clear(); cur_module = nullptr; continue; }
        if (w == "mult" || w == "coprod" || w == "unit" || w == "counit" ||
            w == "antipode" || w == "rmatrix" || w == "ribbon" || w == "pivot" ||
            w == "rintegral" || w == "cointegral") {
            need_dim();
            section = w;
            continue;
        }
        // data line in the current section
        std::istringstream ds(line);
        if (section == "mult" || section == "coprod") {
            size_t i, j, k;
            std::string sv;
            ds >> i >> j >> k >> sv;
            Scalar c = parse_field_scalar(sv, H.field_order);
            if (section == "mult") {
                auto& col = H.mult[{i, j}];
                if (col.empty()) col.assign(H.dim, Scalar(0));
                col[k] += c;
            } else {
                H.coprod[i].push_back({j, k, c});
            }
        } else if (section == "unit" || section == "counit" || section == "ribbon" ||
                   section == "pivot" || section == "rintegral" || section == "cointegral") {
            size_t k;
            std::string sv;
            ds >> k >> sv;
            Scalar c = parse_field_scalar(sv, H.field_order);
            if (section == "unit") H.unit[k] += c;
            else if (section == "counit") H.counit[k] += c;
            else if (section == "ribbon") H.ribbon[k] += c;
            else if (section == "pivot") H.pivot[k] += c;
            else if (section == "rintegral") H.rintegral[k] += c;
            else H.cointegral[k] += c;
        } else if (section == "antipode" || section == "rmatrix") {
            size_t i, j;
            std::string sv;
            ds >> i >> j >> sv;
            Scalar c = parse_field_scalar(sv, H.field_order);
            if (section == "antipode") H.antipode.at(i, j) += c;
            else H.rmatrix.at(i, j) += c;
        } else if (section == "module") {
            size_t h, r, c;
            std::string sv;
            ds >> h >> r >> c >> sv;
            cur_module->action[h].at(r, c) += parse_field_scalar(sv, H.field_order);
        } else {
            throw std::runtime_error("hopf file: stray data line: " + line);
        }
    }
    // fill missing mult columns with zero
    for (size_t i = 0; i < H.dim; ++i)
        for (size_t j = 0; j < H.dim; ++j)
            if (!H.mult.count({i, j})) H.mult[{i, j}].assign(H.dim, Scalar(0));
    if (!skip_validate) {
        AxiomReport rep = validate_hopf(pkg, true);
        if (!rep.all_passed())
            throw std::runtime_error("hopf data failed validation:\n" + rep.str());
    }
    return pkg;
}

HopfPackage load_hopf_file(const std::string& path, bool skip_validate) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open hopf data file " + path);
    std::stringstream ss;
    ss << f.rdbuf();
    return parse_hopf_text(ss.str(), skip_validate);
}

std::string hopf_to_text(const HopfPackage& pkg) {
    const HopfAlgebraData& H = pkg.algebra;
    std::ostringstream os;
    os << "hopf " << H.name << "\n";
    os << "field " << H.field_order << "\n";
    os << "dim " << H.dim << "\n";
    os << "labels";
    for (const auto& l : H.labels) os << " " << l;
    os << "\n";
    os << "mult\n";
    for (const auto& [ij, col] : H.mult)
        for (size_t k = 0; k < H.dim; ++k)
            if (!col[k].is_zero())
                os << ij.first << " " << ij.second << " " << k << " "
                   << field_scalar_str(col[k], H.field_order) << "\n";
    os << "end\n";
    auto emit_vec = [&](const char* name, const std::vector<Scalar>& v) {
        os << name << "\n";
        for (size_t k = 0; k < H.dim; ++k)
            if (!v[k].is_zero())
                os << k << " " << field_scalar_str(v[k], H.field_order) << "\n";
        os << "end\n";
    };
    emit_vec("unit", H.unit);
    os << "coprod\n";
    for (size_t i = 0; i < H.dim; ++i)
        for (const auto& [j, k, c] : H.coprod[i])
            os << i << " " << j << " " << k << " " << field_scalar_str(c, H.field_order)
               << "\n";
    os << "end\n";
    emit_vec("counit", H.counit);
    auto emit_mat = [&](const char* name, const Mat& m) {
        os << name << "\n";
        for (size_t i = 0; i < m.rows(); ++i)
            for (size_t j = 0; j < m.cols(); ++j)
                if (!m.at(i, j).is_zero())
                    os << i << " " << j << " " << field_scalar_str(m.at(i, j), H.field_order)
                       << "\n";
        os << "end\n";
    };
    emit_mat("antipode", H.antipode);
    emit_mat("rmatrix", H.rmatrix);
    emit_vec("ribbon", H.ribbon);
    emit_vec("pivot", H.pivot);
    emit_vec("rintegral", H.rintegral);
    emit_vec("cointegral", H.cointegral);
    for (const auto& m : pkg.modules) {
        os << "module " << m.name << " rank " << m.rank;
        if (m.flag_simple) os << " simple";
        if (m.flag_projective) os << " projective";
        if (!m.covers.empty()) os << " covers " << m.covers;
        os << "\n";
        for (size_t h = 0; h < H.dim; ++h)
            for (size_t r = 0; r < m.rank; ++r)
                for (size_t c = 0; c < m.rank; ++c)
                    if (!m.action[h].at(r, c).is_zero())
                        os << h << " " << r << " " << c << " "
                           << field_scalar_str(m.action[h].at(r, c), H.field_order) << "\n";
        os << "end\n";
    }
    return os.str();
}

// -------------------------------------------------------------- module ops

ModuleData module_trivial(const HopfAlgebraData& H) {
    ModuleData m;
    m.name = "trivial";
    m.rank = 1;
    m.flag_simple = true;
    m.action.assign(H.dim, Mat(1, 1));
    for (size_t h = 0; h < H.dim; ++h) m.action[h].at(0, 0) = H.counit[h];
    return m;
}

ModuleData module_regular(const HopfAlgebraData& H) {
    ModuleData m;
    m.name = "regular";
    m.rank = H.dim;
    m.flag_projective = true;
    m.action.assign(H.dim, Mat(H.dim, H.dim));
    for (size_t h = 0; h < H.dim; ++h)
        for (size_t c = 0; c < H.dim; ++c) {
            const auto& col = H.mult.at({h, c});
            for (size_t r = 0; r < H.dim; ++r) m.action[h].at(r, c) = col[r];
        }
    return m;
}

ModuleData module_dual(const HopfAlgebraData& H, const ModuleData& m) {
    ModuleData d;
    d.name = m.name + "*";
    d.rank = m.rank;
    d.action.assign(H.dim, Mat(m.rank, m.rank));
    for (size_t h = 0; h < H.dim; ++h) {
        // rho*(e_h) = rho(S(e_h))^T
        Mat acc(m.rank, m.rank);
        for (size_t i = 0; i < H.dim; ++i)
            if (!H.antipode.at(i, h).is_zero())
                acc = acc + m.action[i] * H.antipode.at(i, h);
        d.action[h] = acc.transpose();
    }
    return d;
}

ModuleData module_tensor(const HopfAlgebraData& H, const ModuleData& a, const ModuleData& b) {
    ModuleData t;
    t.name = a.name + "." + b.name;
    t.rank = a.rank * b.rank;
    t.action.assign(H.dim, Mat(t.rank, t.rank));
    for (size_t h = 0; h < H.dim; ++h) {
        Mat acc(t.rank, t.rank);
        for (const auto& [j, k, c] : H.coprod[h])
            acc = acc + a.action[j].kron(b.action[k]) * c;
        t.action[h] = acc;
    }
    return t;
}

ModuleData module_direct_sum(const HopfAlgebraData& H, const ModuleData& a,
                             const ModuleData& b) {
    ModuleData s;
    s.name = a.name + "+" + b.name;
    s.rank = a.rank + b.rank;
    s.action.assign(H.dim, Mat(s.rank, s.rank));
    for (size_t h = 0; h < H.dim; ++h) {
        for (size_t i = 0; i < a.rank; ++i)
            for (size_t j = 0; j < a.rank; ++j) s.action[h].at(i, j) = a.action[h].at(i, j);
        for (size_t i = 0; i < b.rank; ++i)
            for (size_t j = 0; j < b.rank; ++j)
                s.action[h].at(a.rank + i, a.rank + j) = b.action[h].at(i, j);
    }
    return s;
}

std::vector<Mat> hom_space(const HopfAlgebraData& H, const ModuleData& a, const ModuleData& b) {
    // unknowns f (b.rank x a.rank): f rho_a(h) = rho_b(h) f for all basis h
    size_t nun = b.rank * a.rank;
    std::vector<std::vector<Scalar>> rows;
    for (size_t h = 0; h < H.dim; ++h) {
        const Mat& A = a.action[h];
        const Mat& B = b.action[h];
        bool azero = A.is_zero(), bzero = B.is_zero();
        if (azero && bzero) continue;
        for (size_t r = 0; r < b.rank; ++r)
            for (size_t c = 0; c < a.rank; ++c) {
                std::vector<Scalar> row(nun, Scalar(0));
                bool nz = false;
                for (size_t t = 0; t < a.rank; ++t)
                    if (!A.at(t, c).is_zero()) {
                        row[r * a.rank + t] += A.at(t, c);
                        nz = true;
                    }
                for (size_t t = 0; t < b.rank; ++t)
                    if (!B.at(r, t).is_zero()) {
                        row[t * a.rank + c] -= B.at(r, t);
                        nz = true;
                    }
                if (nz) rows.push_back(std::move(row));
            }
    }
    Mat sys(rows.size(), nun);
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < nun; ++j) sys.at(i, j) = rows[i][j];
    std::vector<Mat> basis;
    for (const auto& v : nullspace(sys)) {
        Mat f(b.rank, a.rank);
        for (size_t r = 0; r < b.rank; ++r)
            for (size_t c = 0; c < a.rank; ++c) f.at(r, c) = v[r * a.rank + c];
        basis.push_back(std::move(f));
    }
    return basis;
}

namespace {
Mat act_elem(const ModuleData& m, const std::vector<Scalar>& elem) {
    Mat acc(m.rank, m.rank);
    for (size_t h = 0; h < elem.size(); ++h)
        if (!elem[h].is_zero()) acc = acc + m.action[h] * elem[h];
    return acc;
}
} // namespace

Mat braiding(const HopfAlgebraData& H, const ModuleData& a, const ModuleData& b) {
    // flip o (R action): (b (x) a)-valued
    size_t ra = a.rank, rb = b.rank;
    Mat out(rb * ra, ra * rb);
    for (size_t i = 0; i < H.dim; ++i)
        for (size_t j = 0; j < H.dim; ++j) {
            const Scalar& c = H.rmatrix.at(i, j);
            if (c.is_zero()) continue;
            const Mat& A = a.action[i];
            const Mat& B = b.action[j];
            for (size_t p = 0; p < ra; ++p)
                for (size_t q = 0; q < ra; ++q) {
                    if (A.at(p, q).is_zero()) continue;
                    for (size_t s = 0; s < rb; ++s)
                        for (size_t t = 0; t < rb; ++t) {
                            if (B.at(s, t).is_zero()) continue;
                            // input (q,t) in a(x)b; after R: (p,s); after flip: (s,p)
                            out.at(s * ra + p, q * rb + t) += c * A.at(p, q) * B.at(s, t);
                        }
                }
        }
    return out;
}

Mat braiding_inverse(const HopfAlgebraData& H, const ModuleData& a, const ModuleData& b) {
    // inverse of the braiding b (x) a -> a (x) b
    return inverse(braiding(H, b, a));
}

Mat twist(const HopfAlgebraData& H, const ModuleData& m) { return act_elem(m, H.ribbon); }

Mat twist_inverse(const HopfAlgebraData& H, const ModuleData& m) {
    return act_elem(m, H.invert_element(H.ribbon));
}

Mat pivot_action(const HopfAlgebraData& H, const ModuleData& m) { return act_elem(m, H.pivot); }

Scalar qdim(const HopfAlgebraData& H, const ModuleData& m) {
    return pivot_action(H, m).trace();
}

Scalar qtrace(const HopfAlgebraData& H, const ModuleData& m, const Mat& f) {
    return (pivot_action(H, m) * f).trace();
}

Mat partial_qtrace_right(const HopfAlgebraData& H, const ModuleData& a, const ModuleData& b,
                         const Mat& f) {
    Mat g = pivot_action(H, b);
    Mat out(a.rank, a.rank);
    for (size_t i = 0; i < a.rank; ++i)
        for (size_t ip = 0; ip < a.rank; ++ip) {
            Scalar s(0);
            for (size_t j = 0; j < b.rank; ++j)
                for (size_t jp = 0; jp < b.rank; ++jp) {
                    const Scalar& v = f.at(i * b.rank + j, ip * b.rank + jp);
                    if (!v.is_zero() && !g.at(jp, j).is_zero()) s += v * g.at(jp, j);
                }
            out.at(i, ip) = s;
        }
    return out;
}

Mat coev(const HopfAlgebraData& H, const ModuleData& m) {
    (void)H;
    Mat out(m.rank * m.rank, 1);
    for (size_t i = 0; i < m.rank; ++i) out.at(i * m.rank + i, 0) = Scalar(1);
    return out;
}

Mat ev(const HopfAlgebraData& H, const ModuleData& m) {
    (void)H;
    Mat out(1, m.rank * m.rank);
    for (size_t i = 0; i < m.rank; ++i) out.at(0, i * m.rank + i) = Scalar(1);
    return out;
}

Mat ev_tilde(const HopfAlgebraData& H, const ModuleData& m) {
    Mat g = pivot_action(H, m);
    Mat out(1, m.rank * m.rank);
    // ev~(e_i (x) e_j*) = e_j*(g e_i) = g[j,i]
    for (size_t i = 0; i < m.rank; ++i)
        for (size_t j = 0; j < m.rank; ++j) out.at(0, i * m.rank + j) = g.at(j, i);
    return out;
}

Mat coev_tilde(const HopfAlgebraData& H, const ModuleData& m) {
    Mat ginv = inverse(pivot_action(H, m));
    Mat out(m.rank * m.rank, 1);
    // coev~ = sum e_i* (x) g^{-1} e_i ; first factor is the dual module
    for (size_t i = 0; i < m.rank; ++i)
        for (size_t j = 0; j < m.rank; ++j) out.at(i * m.rank + j, 0) = ginv.at(j, i);
    return out;
}

bool is_projective(const HopfAlgebraData& H, const ModuleData& m) {
    // m is projective iff the surjection H^rank(m) -> m (e_h (x) c -> rho(e_h) v_c)
    // splits; equivalently some intertwiner s: m -> H^rank has p o s = id.
    ModuleData reg = module_regular(H);
    // p: H (x) k^rank -> m given on the a-th free column by rho(.)applied:
    // p(h (x) c) = rho(h) e_c. A splitting is an intertwiner s with p s = id.
    // Work with the free module F = reg^{(rank)} realized as rank copies.
    std::vector<Mat> hom = hom_space(H, m, reg); // intertwiners m -> H (single copy)
    // splitting s = sum over copies c: s_c: m -> H; condition:
    // sum_c rho_m(s_c(v) acting...) no -- p on copy c sends h to rho(h) e_c.
    // p(s(v)) = sum_c rho(s_c(v)) e_c.
    // Solve for coefficients x_{c,t}: s_c = sum_t x_{c,t} hom[t] with p o s = id.
    size_t nb = hom.size();
    if (nb == 0) return m.rank == 0;
    size_t nun = m.rank * nb; // copies c in 0..rank-1, basis t
    Mat sys(m.rank * m.rank, nun);
    for (size_t c = 0; c < m.rank; ++c)
        for (size_t t = 0; t < nb; ++t) {
            // contribution of x_{c,t} to p(s(e_v)) = rho(hom[t] e_v) e_c
            for (size_t v = 0; v < m.rank; ++v) {
                // hom[t] e_v is an element of H with coords hom[t].at(h, v)
                for (size_t out = 0; out < m.rank; ++out) {
                    Scalar s(0);
                    for (size_t h = 0; h < H.dim; ++h)
                        if (!hom[t].at(h, v).is_zero())
                            s += hom[t].at(h, v) * m.action[h].at(out, c);
                    if (!s.is_zero()) sys.at(out * m.rank + v, c * nb + t) += s;
                }
            }
        }
    std::vector<Scalar> rhs(m.rank * m.rank, Scalar(0));
    for (size_t v = 0; v < m.rank; ++v) rhs[v * m.rank + v] = Scalar(1);
    std::vector<Scalar> x;
    return solve(sys, rhs, x);
}

// ------------------------------------------------------------------ axioms

bool AxiomReport::all_passed() const {
    for (const auto& [name, ok] : checks)
        if (!ok) return false;
    return true;
}

std::string AxiomReport::str() const {
    std::ostringstream os;
    for (const auto& [name, ok] : checks)
        os << (ok ? "pass  " : "FAIL  ") << name << "\n";
    return os.str();
}

namespace {

using Elem = std::vector<Scalar>;
using Tens = std::map<std::pair<size_t, size_t>, Scalar>; // element of H (x) H

Tens tens_of(const HopfAlgebraData& H, const Mat& mat) {
    Tens t;
    for (size_t i = 0; i < H.dim; ++i)
        for (size_t j = 0; j < H.dim; ++j)
            if (!mat.at(i, j).is_zero()) t[{i, j}] = mat.at(i, j);
    return t;
}

Tens tens_mul(const HopfAlgebraData& H, const Tens& x, const Tens& y) {
    Tens out;
    for (const auto& [ab, c1] : x)
        for (const auto& [cd, c2] : y) {
            const auto& col1 = H.mult.at({ab.first, cd.first});
            const auto& col2 = H.mult.at({ab.second, cd.second});
            Scalar c = c1 * c2;
            for (size_t p = 0; p < H.dim; ++p) {
                if (col1[p].is_zero()) continue;
                for (size_t q = 0; q < H.dim; ++q)
                    if (!col2[q].is_zero()) {
                        Scalar add = c * col1[p] * col2[q];
                        auto it = out.find({p, q});
                        if (it == out.end()) out[{p, q}] = add;
                        else {
                            it->second += add;
                            if (it->second.is_zero()) out.erase(it);
                        }
                    }
            }
        }
    return out;
}

Tens tens_flip(const Tens& x) {
    Tens out;
    for (const auto& [ab, c] : x) out[{ab.second, ab.first}] = c;
    return out;
}

bool tens_equal(const Tens& a, const Tens& b) {
    auto clean = [](const Tens& t) {
        Tens o;
        for (const auto& [k, v] : t)
            if (!v.is_zero()) o[k] = v;
        return o;
    };
    return clean(a) == clean(b);
}

Tens delta_of(const HopfAlgebraData& H, const Elem& a) {
    Tens out;
    for (size_t i = 0; i < H.dim; ++i) {
        if (a[i].is_zero()) continue;
        for (const auto& [j, k, c] : H.coprod[i]) {
            auto it = out.find({j, k});
            Scalar add = a[i] * c;
            if (it == out.end()) out[{j, k}] = add;
            else {
                it->second += add;
                if (it->second.is_zero()) out.erase(it);
            }
        }
    }
    return out;
}

} // namespace

AxiomReport validate_hopf(const HopfPackage& pkg, bool stop_at_first) {
    const HopfAlgebraData& H = pkg.algebra;
    AxiomReport rep;
    auto add = [&](const std::string& name, bool ok) {
        rep.checks.push_back({name, ok});
        return !ok && stop_at_first;
    };
    const size_t n = H.dim;

    // dimension consistency
    {
        bool ok = H.unit.size() == n && H.counit.size() == n && H.coprod.size() == n &&
                  H.antipode.rows() == n && H.antipode.cols() == n && H.rmatrix.rows() == n;
        if (add("dimensions", ok)) return rep;
    }

    // unit
    {
        bool ok = true;
        for (size_t i = 0; i < n && ok; ++i)
            ok = H.mul(H.unit, H.basis(i)) == H.basis(i) &&
                 H.mul(H.basis(i), H.unit) == H.basis(i);
        if (add("hopf.unit", ok)) return rep;
    }
    // associativity
    {
        bool ok = true;
        for (size_t i = 0; i < n && ok; ++i)
            for (size_t j = 0; j < n && ok; ++j)
                for (size_t k = 0; k < n && ok; ++k) {
                    Elem l = H.mul(H.mul(H.basis(i), H.basis(j)), H.basis(k));
                    Elem r = H.mul(H.basis(i), H.mul(H.basis(j), H.basis(k)));
                    ok = l == r;
                }
        if (add("hopf.associativity", ok)) return rep;
    }
    // counit
    {
        bool ok = true;
        for (size_t i = 0; i < n && ok; ++i) {
            Elem l(n, Scalar(0)), r(n, Scalar(0));
            for (const auto& [j, k, c] : H.coprod[i]) {
                l[k] += c * H.counit[j];
                r[j] += c * H.counit[k];
            }
            ok = l == H.basis(i) && r == H.basis(i);
        }
        if (add("hopf.counit", ok)) return rep;
    }
    // coassociativity
    {
        bool ok = true;
        for (size_t i = 0; i < n && ok; ++i) {
            std::map<std::tuple<size_t, size_t, size_t>, Scalar> l, r;
            for (const auto& [j, k, c] : H.coprod[i]) {
                for (const auto& [a, b, c2] : H.coprod[j]) {
                    auto key = std::make_tuple(a, b, k);
                    l[key] += c * c2;
                }
                for (const auto& [a, b, c2] : H.coprod[k]) {
                    auto key = std::make_tuple(j, a, b);
                    r[key] += c * c2;
                }
            }
            for (auto it = l.begin(); it != l.end();)
                it = it->second.is_zero() ? l.erase(it) : std::next(it);
            for (auto it = r.begin(); it != r.end();)
                it = it->second.is_zero() ? r.erase(it) : std::next(it);
            ok = l == r;
        }
        if (add("hopf.coassociativity", ok)) return rep;
    }
    // bialgebra: Delta(ab) = Delta(a)Delta(b)
    {
        bool ok = true;
        for (size_t i = 0; i < n && ok; ++i)
            for (size_t j = 0; j < n && ok; ++j) {
                Tens lhs = delta_of(H, H.mul(H.basis(i), H.basis(j)));
                Tens rhs = tens_mul(H, delta_of(H, H.basis(i)), delta_of(H, H.basis(j)));
                ok = tens_equal(lhs, rhs);
            }
        if (add("hopf.bialgebra", ok)) return rep;
    }
    // antipode
    {
        bool ok = true;
        for (size_t i = 0; i < n && ok; ++i) {
            Elem acc1(n, Scalar(0)), acc2(n, Scalar(0));
            for (const auto& [j, k, c] : H.coprod[i]) {
                Elem sj = H.antipode_apply(H.basis(j));
                Elem sk = H.antipode_apply(H.basis(k));
                Elem p1 = H.mul(sj, H.basis(k));
                Elem p2 = H.mul(H.basis(j), sk);
                for (size_t t = 0; t < n; ++t) {
                    acc1[t] += c * p1[t];
                    acc2[t] += c * p2[t];
                }
            }
            Elem want(n, Scalar(0));
            for (size_t t = 0; t < n; ++t) want[t] = H.counit[i] * H.unit[t];
            ok = acc1 == want && acc2 == want;
        }
        if (add("hopf.antipode", ok)) return rep;
    }

    Tens R = tens_of(H, H.rmatrix);
    Tens R21 = tens_flip(R);
    // R invertible with inverse (S (x) id)R
    {
        Tens Rinv;
        for (const auto& [ij, c] : R) {
            Elem s = H.antipode_apply(H.basis(ij.first));
            for (size_t t = 0; t < n; ++t)
                if (!s[t].is_zero()) {
                    Rinv[{t, ij.second}] += c * s[t];
                }
        }
        Tens prod = tens_mul(H, R, Rinv);
        Tens one;
        for (size_t i = 0; i < n; ++i)
            if (!H.unit[i].is_zero())
                for (size_t j = 0; j < n; ++j)
                    if (!H.unit[j].is_zero()) one[{i, j}] = H.unit[i] * H.unit[j];
        if (add("qt.r_invertible", tens_equal(prod, one))) return rep;
    }
    // Delta^op(a) R = R Delta(a)
    {
        bool ok = true;
        for (size_t i = 0; i < n && ok; ++i) {
            Tens l = tens_mul(H, tens_flip(delta_of(H, H.basis(i))), R);
            Tens r = tens_mul(H, R, delta_of(H, H.basis(i)));
            ok = tens_equal(l, r);
        }
        if (add("qt.intertwines", ok)) return rep;
    }
    // hexagons in H^3
    {
        using T3 = std::map<std::tuple<size_t, size_t, size_t>, Scalar>;
        auto clean3 = [](T3& t) {
            for (auto it = t.begin(); it != t.end();)
                it = it->second.is_zero() ? t.erase(it) : std::next(it);
        };
        T3 lhs1;
        for (const auto& [ij, c] : R)
            for (const auto& [pq, c2] : delta_of(H, H.basis(ij.first)))
                lhs1[{pq.first, pq.second, ij.second}] += c * c2;
        T3 rhs1;
        for (const auto& [ij, c1] : R)
            for (const auto& [kl, c2] : R) {
                const auto& col = H.mult.at({ij.second, kl.second});
                for (size_t t = 0; t < n; ++t)
                    if (!col[t].is_zero()) rhs1[{ij.first, kl.first, t}] += c1 * c2 * col[t];
            }
        clean3(lhs1);
        clean3(rhs1);
        if (add("qt.hexagon1", lhs1 == rhs1)) return rep;

        T3 lhs2;
        for (const auto& [ij, c] : R)
            for (const auto& [pq, c2] : delta_of(H, H.basis(ij.second)))
                lhs2[{ij.first, pq.first, pq.second}] += c * c2;
        T3 rhs2;
        for (const auto& [ij, c1] : R)      // R13
            for (const auto& [kl, c2] : R) { // R12
                const auto& col = H.mult.at({ij.first, kl.first});
                for (size_t t = 0; t < n; ++t)
                    if (!col[t].is_zero()) rhs2[{t, kl.second, ij.second}] += c1 * c2 * col[t];
            }
        clean3(lhs2);
        clean3(rhs2);
        if (add("qt.hexagon2", lhs2 == rhs2)) return rep;

        // Yang-Baxter R12 R13 R23 = R23 R13 R12
        T3 lhs3, rhs3;
        for (const auto& [ab, c1] : R)
            for (const auto& [cd, c2] : R)
                for (const auto& [ef, c3] : R) {
                    // R12 R13 R23: legs (a c, b e, d f)
                    {
                        const auto& col1 = H.mult.at({ab.first, cd.first});
                        for (size_t x = 0; x < n; ++x) {
                            if (col1[x].is_zero()) continue;
                            const auto& col2 = H.mult.at({ab.second, ef.first});
                            for (size_t y = 0; y < n; ++y) {
                                if (col2[y].is_zero()) continue;
                                const auto& col3 = H.mult.at({cd.second, ef.second});
                                for (size_t z = 0; z < n; ++z)
                                    if (!col3[z].is_zero())
                                        lhs3[{x, y, z}] +=
                                            c1 * c2 * c3 * col1[x] * col2[y] * col3[z];
                            }
                        }
                    }
                    // R23 R13 R12: first factor acts on legs 2,3 etc.
                    {
                        // order of multiplication: (R23)(R13)(R12): leg1 = c e hmm:
                        // R23 = (1,a',b'), R13 = (c',1,d'), R12 = (e',f',1)
                        // product legs: (c' e', a' f', b' d')
                        const auto& col1 = H.mult.at({cd.first, ef.first});
                        for (size_t x = 0; x < n; ++x) {
                            if (col1[x].is_zero()) continue;
                            const auto& col2 = H.mult.at({ab.first, ef.second});
                            for (size_t y = 0; y < n; ++y) {
                                if (col2[y].is_zero()) continue;
                                const auto& col3 = H.mult.at({ab.second, cd.second});
                                for (size_t z = 0; z < n; ++z)
                                    if (!col3[z].is_zero())
                                        rhs3[{x, y, z}] +=
                                            c1 * c2 * c3 * col1[x] * col2[y] * col3[z];
                            }
                        }
                    }
                }
        clean3(lhs3);
        clean3(rhs3);
        if (add("qt.yang_baxter", lhs3 == rhs3)) return rep;
    }

    // Drinfeld element u = S(b) a, ribbon axioms
    Elem u(n, Scalar(0));
    for (const auto& [ij, c] : R) {
        Elem s = H.antipode_apply(H.basis(ij.second));
        Elem p = H.mul(s, H.basis(ij.first));
        for (size_t t = 0; t < n; ++t) u[t] += c * p[t];
    }
    {
        bool central = true;
        for (size_t i = 0; i < n && central; ++i)
            central = H.mul(H.ribbon, H.basis(i)) == H.mul(H.basis(i), H.ribbon);
        if (add("ribbon.central", central)) return rep;
        Elem uSu = H.mul(u, H.antipode_apply(u));
        if (add("ribbon.v_squared", H.mul(H.ribbon, H.ribbon) == uSu)) return rep;
        if (add("ribbon.s_fixed", H.antipode_apply(H.ribbon) == H.ribbon)) return rep;
        if (add("ribbon.counit_one", H.eps(H.ribbon) == Scalar(1))) return rep;
        // Delta(v) (R21 R) = v (x) v
        Tens M = tens_mul(H, R21, R);
        Tens lhs = tens_mul(H, M, delta_of(H, H.ribbon));
        Tens vv;
        for (size_t i = 0; i < n; ++i)
            if (!H.ribbon[i].is_zero())
                for (size_t j = 0; j < n; ++j)
                    if (!H.ribbon[j].is_zero()) vv[{i, j}] = H.ribbon[i] * H.ribbon[j];
        if (add("ribbon.monodromy", tens_equal(lhs, vv))) return rep;
    }
    // pivot: g = u v^{-1}, group-like, implements S^2
    {
        Elem vinv;
        bool ok = true;
        try {
            vinv = H.invert_element(H.ribbon);
        } catch (...) {
            ok = false;
        }
        bool stored_ok = false;
        if (ok) {
            Elem g = H.mul(u, vinv);
            stored_ok = g == H.pivot;
            Tens cop = delta_of(H, H.pivot);
            Tens gg;
            for (size_t i = 0; i < n; ++i)
                if (!H.pivot[i].is_zero())
                    for (size_t j = 0; j < n; ++j)
                        if (!H.pivot[j].is_zero()) gg[{i, j}] = H.pivot[i] * H.pivot[j];
            stored_ok = stored_ok && tens_equal(cop, gg);
            // S^2 = g (.) g^{-1}
            Elem ginv = H.invert_element(H.pivot);
            for (size_t i = 0; i < n && stored_ok; ++i) {
                Elem s2 = H.antipode_apply(H.antipode_apply(H.basis(i)));
                Elem conj = H.mul(H.mul(H.pivot, H.basis(i)), ginv);
                stored_ok = s2 == conj;
            }
        }
        if (add("ribbon.pivot", ok && stored_ok)) return rep;
    }
    // integrals
    {
        // right integral: (mu (x) id) Delta(a) = mu(a) 1
        bool ok = true;
        for (size_t i = 0; i < n && ok; ++i) {
            Elem acc(n, Scalar(0));
            for (const auto& [j, k, c] : H.coprod[i]) acc[k] += c * H.rintegral[j];
            Elem want(n, Scalar(0));
            for (size_t t = 0; t < n; ++t) want[t] = H.rintegral[i] * H.unit[t];
            ok = acc == want;
        }
        bool nonzero = false;
        for (const auto& c : H.rintegral) nonzero = nonzero || !c.is_zero();
        if (add("integral.right", ok && nonzero)) return rep;
        // unimodularity: the same mu is also a left integral
        bool ok2 = true;
        for (size_t i = 0; i < n && ok2; ++i) {
            Elem acc(n, Scalar(0));
            for (const auto& [j, k, c] : H.coprod[i]) acc[j] += c * H.rintegral[k];
            Elem want(n, Scalar(0));
            for (size_t t = 0; t < n; ++t) want[t] = H.rintegral[i] * H.unit[t];
            ok2 = acc == want;
        }
        if (add("integral.unimodular_dual", ok2)) return rep;
        // two-sided cointegral
        bool ok3 = true;
        for (size_t i = 0; i < n && ok3; ++i) {
            Elem l = H.mul(H.basis(i), H.cointegral);
            Elem r = H.mul(H.cointegral, H.basis(i));
            Elem want(n, Scalar(0));
            for (size_t t = 0; t < n; ++t) want[t] = H.counit[i] * H.cointegral[t];
            ok3 = l == want && r == want;
        }
        bool nz = false;
        for (const auto& c : H.cointegral) nz = nz || !c.is_zero();
        if (add("integral.cointegral_two_sided", ok3 && nz)) return rep;
    }
    // factorizable: Drinfeld map has full rank
    {
        Tens M = tens_mul(H, R21, R);
        Mat dr(n, n);
        for (const auto& [ij, c] : M) dr.at(ij.second, ij.first) += c;
        if (add("factorizable.drinfeld_rank", rank(dr) == n)) return rep;
    }
    // modules
    for (const auto& m : pkg.modules) {
        bool ok = true;
        Mat unit_act(m.rank, m.rank);
        for (size_t h = 0; h < n; ++h)
            if (!H.unit[h].is_zero()) unit_act = unit_act + m.action[h] * H.unit[h];
        ok = unit_act == Mat::identity(m.rank);
        for (size_t i = 0; i < n && ok; ++i)
            for (size_t j = 0; j < n && ok; ++j) {
                Mat lhs = Mat(m.rank, m.rank);
                const auto& col = H.mult.at({i, j});
                for (size_t k = 0; k < n; ++k)
                    if (!col[k].is_zero()) lhs = lhs + m.action[k] * col[k];
                ok = lhs == m.action[i] * m.action[j];
            }
        if (add("module." + m.name, ok)) return rep;
    }
    return rep;
}

} // namespace skein
