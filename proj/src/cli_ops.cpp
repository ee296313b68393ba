#include "cliffq/cli_ops.hpp"

#include <array>
#include <cmath>
#include <sstream>

#include "cliffq/algebra.hpp"
#include "cliffq/invertibility.hpp"
#include "cliffq/io.hpp"
#include "cliffq/rigid.hpp"
#include "cliffq/spacetime.hpp"

namespace cliffq {
namespace cli {

using io::json;

namespace {

std::string dump(const json& j) { return j.dump(2) + "\n"; }

CliResult usage_error(const std::string& detail) {
    json err{{"error", {{"kind", "usage"}, {"detail", detail}}}};
    return {2, "", dump(err)};
}

CliResult domain_error(const DomainError& e) {
    json err{{"error", {{"kind", e.kind()}, {"detail", e.what()}}}};
    return {3, "", dump(err)};
}

std::string signed_blade_name(const Signature& sig, const SignedBlade& sb) {
    return (sb.sign < 0 ? "-" : "") + blade_name(sig, sb.blade);
}

json matrix_json(const RationalMatrix& m) {
    json rows = json::array();
    for (int r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (int c = 0; c < m.cols(); ++c) row.push_back(m.at(r, c).to_string());
        rows.push_back(std::move(row));
    }
    return rows;
}

json matrix_json(const ComplexMatrix& m) {
    json rows = json::array();
    for (int r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (int c = 0; c < m.cols(); ++c) row.push_back(m.at(r, c).to_string());
        rows.push_back(std::move(row));
    }
    return rows;
}

json matrix_json(const QuaternionMatrix& m) {
    json rows = json::array();
    for (int r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (int c = 0; c < m.cols(); ++c) row.push_back(m.at(r, c).to_string());
        rows.push_back(std::move(row));
    }
    return rows;
}

template <class S>
std::array<Multivector<S>, 3> parse_point_set(const Signature& sig, const json& obj) {
    std::array<Multivector<S>, 3> out{Multivector<S>(sig), Multivector<S>(sig),
                                      Multivector<S>(sig)};
    static const char* names[3] = {"A", "B", "C"};
    for (int i = 0; i < 3; ++i) {
        const json& coords = obj.at(names[i]);
        if (!coords.is_array() || coords.size() != 3)
            throw std::invalid_argument(std::string("scene: point ") + names[i] +
                                        " must be an array of three rationals");
        Multivector<S> p(sig);
        for (int slot = 0; slot < 3; ++slot)
            p.add_term(Blade(1) << slot, io::parse_scalar<S>(coords[slot].get<std::string>()));
        out[i] = p;
    }
    return out;
}

template <class S>
json rotate_report(const std::array<Multivector<S>, 3>& points,
                   const std::array<Multivector<S>, 3>& images, const ScalarDomain<S>& dom,
                   bool approx) {
    RigidMotion<S> motion = recover_rigid_motion(points, images, dom);
    const Signature& sig = points[0].signature();

    json translation = json::array();
    for (int slot = 0; slot < 3; ++slot)
        translation.push_back(scalar_traits<S>::to_string(motion.translation.coef(Blade(1) << slot)));

    json versor = json::object();
    for (const auto& [blade, coef] : motion.rotation.versor().terms())
        versor[blade_name(sig, blade)] = scalar_traits<S>::to_string(coef);

    json residuals = json::object();
    static const char* names[3] = {"A", "B", "C"};
    for (int i = 0; i < 3; ++i) {
        Multivector<S> r = motion.apply(points[i]) - images[i];
        residuals[names[i]] = scalar_traits<S>::to_string(-(r * r).scalar_part());
    }

    json out{{"translation", std::move(translation)},
             {"versor", std::move(versor)},
             {"residuals", std::move(residuals)}};

    if (approx) {
        // Human-readable axis/angle: versor = w + bivector, axis is the dual
        // of the bivector part, full angle twice the half-angle. The versor
        // sign is free; canonicalize to w >= 0 so angles land in [0, pi].
        double w = scalar_traits<S>::to_double(motion.rotation.versor().coef(kScalarBlade));
        double qx = scalar_traits<S>::to_double(motion.rotation.versor().coef(0b110u));
        double qy = -scalar_traits<S>::to_double(motion.rotation.versor().coef(0b101u));
        double qz = scalar_traits<S>::to_double(motion.rotation.versor().coef(0b011u));
        if (w < 0) {
            w = -w;
            qx = -qx;
            qy = -qy;
            qz = -qz;
        }
        double n = std::sqrt(qx * qx + qy * qy + qz * qz);
        json axis = json::array();
        if (n > 0.0)
            axis = {scalar_traits<double>::to_string(qx / n), scalar_traits<double>::to_string(qy / n),
                    scalar_traits<double>::to_string(qz / n)};
        else
            axis = {"0", "0", "0"};
        double angle = 2.0 * std::atan2(n, w);
        out["axis_angle"] = {{"axis", std::move(axis)},
                             {"angle_rad", scalar_traits<double>::to_string(angle)}};
    }
    return out;
}

struct ParsedEvent {
    Rational t, x, y, z, c;
};

std::vector<ParsedEvent> parse_events(const json& j) {
    const json* list = nullptr;
    if (j.is_array())
        list = &j;
    else if (j.contains("events"))
        list = &j.at("events");
    else
        throw std::invalid_argument("events: expected an array or an object with \"events\"");
    std::vector<ParsedEvent> out;
    for (const json& e : *list) {
        ParsedEvent p;
        p.t = Rational::from_string(e.at("t").get<std::string>());
        p.x = Rational::from_string(e.at("x").get<std::string>());
        p.y = Rational::from_string(e.at("y").get<std::string>());
        p.z = Rational::from_string(e.at("z").get<std::string>());
        p.c = e.contains("c") ? Rational::from_string(e.at("c").get<std::string>()) : Rational(1);
        if (p.c <= Rational(0)) throw std::invalid_argument("events: c must be positive");
        out.push_back(std::move(p));
    }
    return out;
}

std::array<Rational, 3> parse_beta(const std::string& text) {
    std::array<Rational, 3> beta{Rational(0), Rational(0), Rational(0)};
    std::stringstream ss(text);
    std::string item;
    int i = 0;
    while (std::getline(ss, item, ',')) {
        if (i >= 3) throw std::invalid_argument("beta: expected three comma-separated rationals");
        beta[i++] = Rational::from_string(item);
    }
    if (i != 3) throw std::invalid_argument("beta: expected three comma-separated rationals");
    return beta;
}

template <class S>
json boost_report(const std::vector<ParsedEvent>& events, const std::array<Rational, 3>& beta_q) {
    std::array<S, 3> beta{scalar_traits<S>::from_rational(beta_q[0]),
                          scalar_traits<S>::from_rational(beta_q[1]),
                          scalar_traits<S>::from_rational(beta_q[2])};
    Boost<S> boost = Boost<S>::from_beta(beta);

    json report{{"beta", {beta_q[0].to_string(), beta_q[1].to_string(), beta_q[2].to_string()}},
                {"gamma", scalar_traits<S>::to_string(boost.gamma)}};
    json out_events = json::array();
    for (const ParsedEvent& pe : events) {
        S c = scalar_traits<S>::from_rational(pe.c);
        Event<S> ev = Event<S>::from_time(scalar_traits<S>::from_rational(pe.t),
                                          scalar_traits<S>::from_rational(pe.x),
                                          scalar_traits<S>::from_rational(pe.y),
                                          scalar_traits<S>::from_rational(pe.z), c);
        Event<S> prime = lorentz_transform(boost, ev);
        Event<S> origin{};
        json rec{{"input",
                  {{"t", pe.t.to_string()},
                   {"x", pe.x.to_string()},
                   {"y", pe.y.to_string()},
                   {"z", pe.z.to_string()},
                   {"c", pe.c.to_string()}}},
                 {"output",
                  {{"t", scalar_traits<S>::to_string(prime.ct / c)},
                   {"x", scalar_traits<S>::to_string(prime.x)},
                   {"y", scalar_traits<S>::to_string(prime.y)},
                   {"z", scalar_traits<S>::to_string(prime.z)},
                   {"c", pe.c.to_string()}}},
                 {"interval_sq_before", scalar_traits<S>::to_string(interval_sq(ev, origin))},
                 {"interval_sq_after", scalar_traits<S>::to_string(interval_sq(prime, origin))}};
        out_events.push_back(std::move(rec));
    }
    report["events"] = std::move(out_events);
    return report;
}

}  // namespace

CliResult run_table(const std::string& signature_text, const std::string& format) {
    try {
        Signature sig = Signature::parse(signature_text);
        CayleyTable table = cayley_table(sig);
        if (format == "csv") {
            std::string out;
            for (Blade b : table.order) out += "," + blade_name(sig, b);
            out += "\n";
            for (std::size_t r = 0; r < table.order.size(); ++r) {
                out += blade_name(sig, table.order[r]);
                for (std::size_t c = 0; c < table.order.size(); ++c)
                    out += "," + signed_blade_name(sig, table.at(r, c));
                out += "\n";
            }
            return {0, out, ""};
        }
        if (format == "json") {
            json blades = json::array();
            for (Blade b : table.order) blades.push_back(blade_name(sig, b));
            json rows = json::array();
            for (std::size_t r = 0; r < table.order.size(); ++r) {
                json row = json::array();
                for (std::size_t c = 0; c < table.order.size(); ++c)
                    row.push_back(signed_blade_name(sig, table.at(r, c)));
                rows.push_back(std::move(row));
            }
            return {0, dump(json{{"signature", sig.name()}, {"blades", blades}, {"table", rows}}), ""};
        }
        return usage_error("table: unknown format '" + format + "' (expected csv or json)");
    } catch (const std::invalid_argument& e) {
        return usage_error(e.what());
    }
}

CliResult run_census(const std::string& signature_text) {
    try {
        Signature sig = Signature::parse(signature_text);
        auto [plus, minus] = square_census(sig);
        return {0, dump(json{{"signature", sig.name()}, {"plus", plus}, {"minus", minus}}), ""};
    } catch (const std::invalid_argument& e) {
        return usage_error(e.what());
    }
}

CliResult run_rep(const std::string& signature_text, const std::string& target) {
    try {
        Signature sig = Signature::parse(signature_text);
        AnyRepresentation any = build_representation(sig, target);
        return std::visit(
            [&](const auto& rep) -> CliResult {
                HomomorphismReport hom = verify_homomorphism(rep);
                json images = json::object();
                for (const auto& [blade, img] : rep.images)
                    images[blade_name(sig, blade)] = matrix_json(img);
                json out{{"signature", sig.name()},
                         {"target", target},
                         {"verdict", hom.passed() ? "pass" : "fail"},
                         {"pairs", hom.pairs_checked},
                         {"violations", hom.violations},
                         {"square_census", {{"plus", hom.census.first}, {"minus", hom.census.second}}},
                         {"images", std::move(images)}};
                return {0, dump(out), ""};
            },
            any);
    } catch (const DomainError& e) {
        return domain_error(e);
    } catch (const std::invalid_argument& e) {
        return usage_error(e.what());
    }
}

CliResult run_rotate(const std::string& scene_json_text, bool approx, double tol) {
    json scene;
    try {
        scene = json::parse(scene_json_text);
    } catch (const json::exception& e) {
        return usage_error(std::string("scene: ") + e.what());
    }
    try {
        const Signature sig(0, 3);
        if (approx) {
            auto points = parse_point_set<double>(sig, scene.at("points"));
            auto images = parse_point_set<double>(sig, scene.at("images"));
            ScalarDomain<double> dom{tol};
            return {0, dump(rotate_report<double>(points, images, dom, true)), ""};
        }
        auto points = parse_point_set<Rational>(sig, scene.at("points"));
        auto images = parse_point_set<Rational>(sig, scene.at("images"));
        return {0, dump(rotate_report<Rational>(points, images, {}, false)), ""};
    } catch (const DomainError& e) {
        return domain_error(e);
    } catch (const json::exception& e) {
        return usage_error(std::string("scene: ") + e.what());
    } catch (const std::invalid_argument& e) {
        return usage_error(e.what());
    }
}

CliResult run_boost(const std::string& events_json_text, const std::string& beta_text, bool approx,
                    double tol) {
    (void)tol;
    json events_json;
    try {
        events_json = json::parse(events_json_text);
    } catch (const json::exception& e) {
        return usage_error(std::string("events: ") + e.what());
    }
    try {
        std::vector<ParsedEvent> events = parse_events(events_json);
        std::array<Rational, 3> beta = parse_beta(beta_text);

        Rational beta_sq = beta[0] * beta[0] + beta[1] * beta[1] + beta[2] * beta[2];
        bool pythagorean =
            beta_sq < Rational(1) && exact_sqrt(Rational(1) - beta_sq).has_value();
        if (!approx) {
            return {0, dump(boost_report<Rational>(events, beta)), ""};
        }
        std::string warn;
        if (beta_sq < Rational(1) && !pythagorean)
            warn = dump(json{{"warning", "gamma is irrational for this velocity; results are "
                                         "floating-point approximations"}});
        return {0, dump(boost_report<double>(events, beta)), warn};
    } catch (const DomainError& e) {
        return domain_error(e);
    } catch (const json::exception& e) {
        return usage_error(std::string("events: ") + e.what());
    } catch (const std::invalid_argument& e) {
        return usage_error(e.what());
    }
}

CliResult run_invert(const std::string& multivector_json_text) {
    json mv_json;
    try {
        mv_json = json::parse(multivector_json_text);
    } catch (const json::exception& e) {
        return usage_error(std::string("multivector: ") + e.what());
    }
    try {
        Multivector<Rational> a = io::multivector_from_json<Rational>(mv_json);
        if (!(a.signature() == spacetime_signature()))
            return usage_error("invert: multivector must live in Cl(1,3)");
        InvertOutcome outcome = invert(a);
        if (outcome.inverse) {
            return {0, dump(json{{"inverse", io::multivector_to_json(*outcome.inverse)}}), ""};
        }
        const NullClassification& c = outcome.classification;
        json witness = json::object();
        if (c.interval_sq) witness["interval_sq"] = c.interval_sq->to_string();
        if (c.field_witness) {
            witness["E_sq_minus_B_sq"] = c.field_witness->first.to_string();
            witness["E_dot_B"] = c.field_witness->second.to_string();
        }
        witness["block_det"] = c.determinant.to_string();
        json out{{"singular", {{"kind", c.kind_name()}, {"witness", std::move(witness)}}}};
        return {3, dump(out), ""};
    } catch (const DomainError& e) {
        return domain_error(e);
    } catch (const json::exception& e) {
        return usage_error(std::string("multivector: ") + e.what());
    } catch (const std::invalid_argument& e) {
        return usage_error(e.what());
    }
}

}  // namespace cli
}  // namespace cliffq
