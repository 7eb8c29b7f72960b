#include "json_io.hpp"

#include "errors.hpp"

namespace hartogs {

namespace {

Json complex_to_json(C z) { return Json::array({z.real(), z.imag()}); }

C complex_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 2)
        throw Error(Errc::parse_error, "complex values are [re, im] pairs");
    return C(j[0].get<double>(), j[1].get<double>());
}

Json cvec_to_json(const CVec& v) {
    Json arr = Json::array();
    for (C z : v) arr.push_back(complex_to_json(z));
    return arr;
}

CVec cvec_from_json(const Json& j) {
    CVec v;
    for (const Json& e : j) v.push_back(complex_from_json(e));
    return v;
}

Json exponents_to_json(const ExponentVec& p) {
    Json arr = Json::array();
    for (const Exponent& e : p) arr.push_back(format_exponent(e));
    return arr;
}

ExponentVec exponents_from_json(const Json& j) {
    std::vector<std::string> items;
    for (const Json& e : j) items.push_back(e.get<std::string>());
    return parse_exponent_vec(items);
}

Json perm_to_json(const Perm& p) { return Json(p); }

Perm perm_from_json(const Json& j) { return j.get<Perm>(); }

template <typename T>
T expect(const Json& j, const char* key) {
    if (!j.contains(key))
        throw Error(Errc::parse_error, std::string("missing field '") + key + "'");
    try {
        return j.at(key).get<T>();
    } catch (const Json::exception&) {
        throw Error(Errc::parse_error, std::string("bad field '") + key + "'");
    }
}

} // namespace

Json domain_to_json(const HartogsDomain& d) {
    return Json{{"p", exponents_to_json(d.p)}, {"q", exponents_to_json(d.q)}};
}

HartogsDomain domain_from_json(const Json& j) {
    if (!j.contains("p") || !j.contains("q"))
        throw Error(Errc::parse_error, "domain descriptor needs fields p and q");
    return HartogsDomain{exponents_from_json(j.at("p")), exponents_from_json(j.at("q"))};
}

Json witness_to_json(const ExistenceWitness& w) {
    Json j;
    if (const auto* kl = std::get_if<WitnessKL>(&w)) {
        j["k"] = kl->k;
        j["l"] = kl->l;
    } else if (const auto* ks = std::get_if<WitnessKSigma>(&w)) {
        j["k"] = ks->k;
        j["sigma"] = perm_to_json(ks->sigma);
    } else if (const auto* sr = std::get_if<WitnessSigmaR>(&w)) {
        j["sigma"] = perm_to_json(sr->sigma);
        j["r"] = sr->r;
    } else {
        const auto& st = std::get<WitnessSigmaTau>(w);
        j["sigma"] = perm_to_json(st.sigma);
        j["tau"] = perm_to_json(st.tau);
    }
    return j;
}

Json ellipsoid_aut_to_json(const EllipsoidAut& a) {
    Json j;
    CVec av(a.H.a.data(), a.H.a.data() + a.H.a.size());
    j["a"] = cvec_to_json(av);
    Json q = Json::array();
    for (int i = 0; i < a.k; ++i) {
        Json row = Json::array();
        for (int c = 0; c < a.k; ++c) row.push_back(complex_to_json(a.H.Q(i, c)));
        q.push_back(row);
    }
    j["Q"] = q;
    j["zetas"] = cvec_to_json(a.zetas);
    // Report sigma on original coordinates.
    Perm orig(a.dim());
    for (int i = 0; i < a.dim(); ++i) orig[a.norm[i]] = a.norm[a.sigma[i]];
    j["sigma"] = perm_to_json(orig);
    return j;
}

EllipsoidAut ellipsoid_aut_from_json(const Json& j, const ExponentVec& p) {
    CVec av = cvec_from_json(j.at("a"));
    const int k = static_cast<int>(av.size());
    BallAut ball;
    ball.a = Vec(k);
    for (int i = 0; i < k; ++i) ball.a(i) = av[i];
    ball.Q = Mat::Identity(k, k);
    const Json& q = j.at("Q");
    if (static_cast<int>(q.size()) != k)
        throw Error(Errc::parse_error, "Q must be a k x k matrix");
    for (int i = 0; i < k; ++i)
        for (int c = 0; c < k; ++c) ball.Q(i, c) = complex_from_json(q.at(i).at(c));
    CVec zetas = cvec_from_json(j.at("zetas"));
    Perm sigma = j.contains("sigma") ? perm_from_json(j.at("sigma"))
                                     : identity_perm(static_cast<int>(p.size()));
    return EllipsoidAut::make(p, ball, zetas, sigma);
}

Json ellipsoid_map_to_json(const EllipsoidProperMap& m) {
    Json j;
    j["p"] = exponents_to_json(m.p);
    j["q"] = exponents_to_json(m.q);
    j["sigma"] = perm_to_json(m.sigma);
    j["r"] = m.r;
    j["phi"] = ellipsoid_aut_to_json(m.phi);
    return j;
}

EllipsoidProperMap ellipsoid_map_from_json(const Json& j) {
    ExponentVec p = exponents_from_json(j.at("p"));
    ExponentVec q = exponents_from_json(j.at("q"));
    Perm sigma = perm_from_json(j.at("sigma"));
    auto r = expect<std::vector<long long>>(j, "r");
    const int n = static_cast<int>(p.size());
    ExponentVec inter(n);
    for (int i = 0; i < n; ++i) {
        if (sigma[i] < 0 || sigma[i] >= n)
            throw Error(Errc::parse_error, "sigma out of range");
        if (r[i] < 1) throw Error(Errc::parse_error, "power entries must be >= 1");
        inter[i] = Exponent(p[sigma[i]].ratio / Rational(r[i]), p[sigma[i]].lambda_pow);
    }
    EllipsoidAut phi = j.contains("phi") && !j.at("phi").is_null()
                           ? ellipsoid_aut_from_json(j.at("phi"), inter)
                           : EllipsoidAut::identity(inter);
    return EllipsoidProperMap::make(p, q, sigma, r, phi);
}

Json map_to_json(const HartogsProperMap& m) {
    Json j;
    j["case"] = m.case_tag();
    j["src"] = domain_to_json(m.src);
    j["dst"] = domain_to_json(m.dst);
    if (const auto* c = std::get_if<Case11>(&m.form)) {
        j["zeta"] = complex_to_json(c->zeta);
        j["xi"] = complex_to_json(c->xi);
        j["k"] = c->k;
        j["l"] = c->l;
        j["b"] = c->b;
        if (c->blaschke) {
            Json zeros = Json::array();
            for (const BlaschkeZero& z : c->blaschke->zeros)
                zeros.push_back(Json{{"alpha", complex_to_json(z.alpha)}, {"mult", z.mult}});
            j["blaschke"] = Json{{"zeros", zeros},
                                 {"unimodular", complex_to_json(c->blaschke->unimodular)}};
            j["pprime"] = c->pprime;
            j["qprime"] = c->qprime;
        }
    } else if (const auto* c = std::get_if<Case1m>(&m.form)) {
        j["zeta"] = complex_to_json(c->zeta);
        j["k"] = c->k;
        j["h"] = ellipsoid_map_to_json(c->h);
    } else if (const auto* c = std::get_if<CaseN1>(&m.form)) {
        j["xi"] = complex_to_json(c->xi);
        j["r"] = c->r;
        j["f"] = ellipsoid_map_to_json(c->f);
    } else {
        const auto& nm = std::get<CaseNM>(m.form);
        j["g"] = ellipsoid_map_to_json(nm.g);
        j["h"] = ellipsoid_map_to_json(nm.h);
    }
    return j;
}

HartogsProperMap map_from_json(const Json& j) {
    HartogsProperMap m;
    m.src = domain_from_json(j.at("src"));
    m.dst = domain_from_json(j.at("dst"));
    std::string tag = expect<std::string>(j, "case");
    if (tag == "11") {
        Case11 c;
        c.zeta = complex_from_json(j.at("zeta"));
        c.xi = complex_from_json(j.at("xi"));
        c.k = expect<long long>(j, "k");
        c.l = expect<long long>(j, "l");
        c.b = expect<long long>(j, "b");
        if (j.contains("blaschke") && !j.at("blaschke").is_null()) {
            BlaschkeProduct b;
            for (const Json& z : j.at("blaschke").at("zeros"))
                b.zeros.push_back(BlaschkeZero{complex_from_json(z.at("alpha")),
                                               z.at("mult").get<int>()});
            b.unimodular = complex_from_json(j.at("blaschke").at("unimodular"));
            c.blaschke = std::move(b);
            c.pprime = expect<long long>(j, "pprime");
            c.qprime = expect<long long>(j, "qprime");
        }
        m.form = std::move(c);
    } else if (tag == "1m") {
        Case1m c{complex_from_json(j.at("zeta")), expect<long long>(j, "k"),
                 ellipsoid_map_from_json(j.at("h"))};
        m.form = std::move(c);
    } else if (tag == "n1") {
        CaseN1 c{complex_from_json(j.at("xi")), expect<long long>(j, "r"),
                 ellipsoid_map_from_json(j.at("f"))};
        m.form = std::move(c);
    } else if (tag == "nm") {
        CaseNM c{ellipsoid_map_from_json(j.at("g")), ellipsoid_map_from_json(j.at("h"))};
        m.form = std::move(c);
    } else {
        throw Error(Errc::parse_error, "unknown map case '" + tag + "'");
    }
    return m;
}

Json aut_to_json(const HartogsAut& a) {
    Json j;
    j["regime"] = a.regime();
    j["domain"] = domain_to_json(a.dom);
    if (const auto* f = std::get_if<Aut11>(&a.form)) {
        j["phi"] = Json{{"alpha", complex_to_json(f->phi.alpha)},
                        {"eta", complex_to_json(f->phi.eta)}};
        j["xi"] = complex_to_json(f->xi);
    } else if (const auto* f = std::get_if<Aut1m>(&a.form)) {
        j["zeta"] = complex_to_json(f->zeta);
        j["h"] = ellipsoid_aut_to_json(f->h);
    } else if (const auto* f = std::get_if<AutN1>(&a.form)) {
        j["g"] = ellipsoid_aut_to_json(f->g);
        j["xi"] = complex_to_json(f->xi);
    } else {
        const auto& nm = std::get<AutNM>(a.form);
        j["g"] = ellipsoid_aut_to_json(nm.g);
        j["h"] = ellipsoid_aut_to_json(nm.h);
    }
    return j;
}

HartogsAut aut_from_json(const Json& j) {
    HartogsAut a;
    a.dom = domain_from_json(j.at("domain"));
    std::string regime = expect<std::string>(j, "regime");
    if (regime == "11") {
        Aut11 f;
        f.phi.alpha = complex_from_json(j.at("phi").at("alpha"));
        f.phi.eta = complex_from_json(j.at("phi").at("eta"));
        f.xi = complex_from_json(j.at("xi"));
        a.form = f;
    } else if (regime == "1m") {
        a.form = Aut1m{complex_from_json(j.at("zeta")),
                       ellipsoid_aut_from_json(j.at("h"), a.dom.q)};
    } else if (regime == "n1") {
        a.form = AutN1{ellipsoid_aut_from_json(j.at("g"), a.dom.p),
                       complex_from_json(j.at("xi"))};
    } else if (regime == "nm") {
        a.form = AutNM{ellipsoid_aut_from_json(j.at("g"), a.dom.p),
                       ellipsoid_aut_from_json(j.at("h"), a.dom.q)};
    } else {
        throw Error(Errc::parse_error, "unknown automorphism regime '" + regime + "'");
    }
    return a;
}

Json family_to_json(const AutFamilyInfo& f) {
    Json j;
    j["regime"] = f.regime;
    j["phi_must_fix_origin"] = f.phi_must_fix_origin;
    j["recentering_allowed"] = f.recentering_allowed;
    j["ball_dim_z"] = f.ball_dim_z;
    j["ball_dim_w"] = f.ball_dim_w;
    j["z_permutable_classes"] = f.z_classes;
    j["w_permutable_classes"] = f.w_classes;
    return j;
}

Json report_to_json(const VerificationReport& r) {
    return Json{{"property", r.property},
                {"samples", r.samples},
                {"worst_residual", r.worst_residual},
                {"pass", r.pass},
                {"seed", r.seed}};
}

std::vector<ZW> points_from_json(const Json& j, int n, int m) {
    if (!j.is_array()) throw Error(Errc::parse_error, "points file must be a JSON array");
    std::vector<ZW> pts;
    // Either a single flat point or an array of points.
    auto parse_point = [&](const Json& e) {
        CVec coords = cvec_from_json(e);
        if (static_cast<int>(coords.size()) != n + m)
            throw Error(Errc::parse_error, "point must have n + m coordinates");
        ZW pt;
        pt.z.assign(coords.begin(), coords.begin() + n);
        pt.w.assign(coords.begin() + n, coords.end());
        return pt;
    };
    if (!j.empty() && j.at(0).is_array() && !j.at(0).empty() && j.at(0).at(0).is_array()) {
        for (const Json& e : j) pts.push_back(parse_point(e));
    } else {
        pts.push_back(parse_point(j));
    }
    return pts;
}

Json point_to_json(const ZW& pt) {
    Json arr = Json::array();
    for (C z : pt.z) arr.push_back(complex_to_json(z));
    for (C w : pt.w) arr.push_back(complex_to_json(w));
    return arr;
}

} // namespace hartogs
