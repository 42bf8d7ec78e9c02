#include "trig/jsonio.hpp"

#include "trig/parse.hpp"

namespace trig {

namespace {

Rat rat_from_string(const std::string& s) {
    Rat r;
    if (mpq_set_str(r.get_mpq_t(), s.c_str(), 10) != 0)
        throw Error(ErrorKind::parse, "bad coefficient string '" + s + "'");
    r.canonicalize();
    return r;
}

template <class K, class Conv>
LinearMatrix<K> matrix_from_json(const Json& j, Conv conv) {
    if (!j.contains("r") || !j.contains("d") || !j.contains("entries"))
        throw Error(ErrorKind::parse, "matrix JSON needs r, d, entries");
    int r = j.at("r").get<int>();
    int d = j.at("d").get<int>();
    LinearMatrix<K> l(r, d);
    const Json& rows = j.at("entries");
    if (static_cast<int>(rows.size()) != r + d)
        throw Error(ErrorKind::parse, "matrix JSON needs r+d rows");
    for (int i = 0; i < r + d; ++i) {
        const Json& row = rows.at(i);
        if (static_cast<int>(row.size()) != d)
            throw Error(ErrorKind::parse, "matrix JSON needs d columns");
        for (int k = 0; k < d; ++k) {
            const Json& pair = row.at(k);
            if (pair.size() != 2)
                throw Error(ErrorKind::parse,
                            "matrix entry must be [c1, c2]");
            auto coeff_str = [&](const Json& e) {
                return e.is_string() ? e.get<std::string>() : e.dump();
            };
            Rat c1 = rat_from_string(coeff_str(pair.at(0)));
            Rat c2 = rat_from_string(coeff_str(pair.at(1)));
            l.set(i, k, BinaryForm<K>(1, {conv(c1), conv(c2)}));
        }
    }
    return l;
}

} // namespace

LinearMatrix<Rat> matrix_from_json_q(const Json& j) {
    return matrix_from_json<Rat>(j, [](const Rat& x) { return x; });
}

LinearMatrix<Fp> matrix_from_json_fp(const Json& j, std::uint64_t p) {
    Fp::check_modulus(p);
    return matrix_from_json<Fp>(j,
                                [&](const Rat& x) { return rat_to_fp(x, p); });
}

Json matrix_to_json(const LinearMatrix<Rat>& l) {
    Json rows = Json::array();
    for (int i = 0; i < l.rows(); ++i) {
        Json row = Json::array();
        for (int k = 0; k < l.cols(); ++k) {
            row.push_back(Json::array({to_string(l.at(i, k).coeff(0)),
                                       to_string(l.at(i, k).coeff(1))}));
        }
        rows.push_back(row);
    }
    Json out;
    out["r"] = l.r();
    out["d"] = l.d();
    out["entries"] = rows;
    return out;
}

namespace {

template <class K, class FormParse>
TrigonalDatum<K> datum_from_json(const Json& j, FormParse parse_one) {
    if (!j.contains("m") || !j.contains("n") || !j.contains("phi"))
        throw Error(ErrorKind::parse, "datum JSON needs m, n, phi");
    long m = j.at("m").get<long>();
    long n = j.at("n").get<long>();
    const Json& phi = j.at("phi");
    if (phi.size() != 4)
        throw Error(ErrorKind::parse, "datum JSON needs 4 phi forms");
    long degs[4] = {2 * m - n, m, n, 2 * n - m};
    std::array<BinaryForm<K>, 4> forms{BinaryForm<K>(0), BinaryForm<K>(0),
                                       BinaryForm<K>(0), BinaryForm<K>(0)};
    for (int i = 0; i < 4; ++i) {
        int want = degs[i] < 0 ? -1 : static_cast<int>(degs[i]);
        forms[i] = parse_one(phi.at(i).get<std::string>(),
                             degs[i] < 0 ? -1 : want);
        if (degs[i] < 0 && !forms[i].is_zero_form())
            throw contract_error("phi" + std::to_string(i) +
                                 " must vanish (negative degree)");
    }
    return TrigonalDatum<K>(m, n, std::move(forms));
}

} // namespace

TrigonalDatum<Rat> datum_from_json_q(const Json& j) {
    return datum_from_json<Rat>(j, [](const std::string& s, int deg) {
        return parse_form_q(s, "t0", "t1", deg);
    });
}

TrigonalDatum<Fp> datum_from_json_fp(const Json& j, std::uint64_t p) {
    Fp::check_modulus(p);
    return datum_from_json<Fp>(j, [&](const std::string& s, int deg) {
        return parse_form_fp(s, p, "t0", "t1", deg);
    });
}

Json probe_json(const ProbeResult& r) {
    Json out;
    out["trials"] = r.trials;
    out["degenerate"] = r.degenerate;
    out["exhaustive"] = r.exhaustive;
    out["degenerate_fraction"] =
        std::to_string(r.degenerate) + "/" + std::to_string(r.trials);
    Json hist = Json::object();
    for (const auto& [type, count] : r.histogram) {
        std::string key;
        for (std::size_t i = 0; i < type.size(); ++i) {
            if (i) key += ",";
            key += std::to_string(type[i]);
        }
        hist[key] = count;
    }
    out["stratum_histogram"] = hist;
    return out;
}

Json picard_row_json(const PicardRow& r) {
    Json out;
    out["g"] = r.g;
    out["a"] = r.a.get_str();
    out["b"] = r.b.get_str();
    out["group"] = group_string(r.free_rank, r.torsion);
    return out;
}

} // namespace trig
