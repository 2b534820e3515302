#include "dp6/json_io.hpp"

#include <sstream>

#include "dp6/errors.hpp"

namespace dp6::io {

using classify::BilinearPencil;
using classify::ConfigP1P1;
using classify::PointConfigP2;
using classify::Tensor222;
using lattice::DivisorClass;
using nlohmann::json;

// --- rationals -------------------------------------------------------------

OrderedJson rat_to_json(const Rat& q) {
    if (is_integer(q)) {
        Int n = num(q);
        // keep plain JSON numbers within the exactly-representable range
        if (n >= Int(-9007199254740991LL) && n <= Int(9007199254740991LL))
            return OrderedJson(static_cast<int64_t>(n));
    }
    return OrderedJson(rat_to_string(q));
}

Rat rat_from_json(const json& j) {
    try {
        if (j.is_number_integer()) return Rat(Int(j.get<int64_t>()));
        if (j.is_string()) return rat_from_string(j.get<std::string>());
    } catch (const std::exception& e) {
        throw domain_error("ParseError", "", std::string("bad rational: ") + e.what());
    }
    throw domain_error("ParseError", "", "rational must be an integer or a \"p/q\" string");
}

// --- inputs ----------------------------------------------------------------

namespace {

linalg::Mat parse_matrix(const json& j, size_t rows, size_t cols, const std::string& what) {
    if (!j.is_array() || j.size() != rows)
        throw domain_error("ParseError", "", what + ": expected " + std::to_string(rows) + " rows");
    linalg::Mat m(rows, cols);
    for (size_t i = 0; i < rows; ++i) {
        if (!j[i].is_array() || j[i].size() != cols)
            throw domain_error("ParseError", "",
                               what + ": expected " + std::to_string(cols) + " columns");
        for (size_t c = 0; c < cols; ++c) m.at(i, c) = rat_from_json(j[i][c]);
    }
    return m;
}

classify::Point2 parse_point2(const json& j, const std::string& what) {
    if (!j.is_array() || j.size() != 3)
        throw domain_error("ParseError", "", what + ": expected [x,y,z]");
    return {rat_from_json(j[0]), rat_from_json(j[1]), rat_from_json(j[2])};
}

classify::PointP1P1 parse_point_p1p1(const json& j, const std::string& what) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_array() || j[0].size() != 2 ||
        !j[1].is_array() || j[1].size() != 2)
        throw domain_error("ParseError", "", what + ": expected [[u,v],[u,v]]");
    return {{rat_from_json(j[0][0]), rat_from_json(j[0][1])},
            {rat_from_json(j[1][0]), rat_from_json(j[1][1])}};
}

const json& field(const json& j, const char* name) {
    auto it = j.find(name);
    if (it == j.end())
        throw domain_error("ParseError", "", std::string("missing field \"") + name + "\"");
    return *it;
}

}  // namespace

BilinearPencil parse_pencil(const json& j) {
    return {parse_matrix(field(j, "b0"), 3, 3, "b0"), parse_matrix(field(j, "b1"), 3, 3, "b1")};
}

Tensor222 parse_tensor(const json& j) {
    const json& t = field(j, "t");
    if (!t.is_array() || t.size() != 2)
        throw domain_error("ParseError", "", "t: expected a 2x2x2 array");
    Tensor222 out;
    for (size_t i = 0; i < 2; ++i) {
        if (!t[i].is_array() || t[i].size() != 2)
            throw domain_error("ParseError", "", "t: expected a 2x2x2 array");
        for (size_t jj = 0; jj < 2; ++jj) {
            if (!t[i][jj].is_array() || t[i][jj].size() != 2)
                throw domain_error("ParseError", "", "t: expected a 2x2x2 array");
            for (size_t k = 0; k < 2; ++k) out.t[i][jj][k] = rat_from_json(t[i][jj][k]);
        }
    }
    return out;
}

PointConfigP2 parse_blowup_p2(const json& j) {
    std::string kind = field(j, "kind").get<std::string>();
    PointConfigP2 cfg;
    if (kind == "points") {
        cfg.kind = PointConfigP2::Kind::Points;
        const json& pts = field(j, "points");
        if (!pts.is_array() || pts.size() != 3)
            throw domain_error("ParseError", "", "points: expected three [x,y,z] entries");
        for (const json& p : pts) cfg.points.push_back(parse_point2(p, "point"));
    } else if (kind == "jet2") {
        cfg.kind = PointConfigP2::Kind::Jet2;
        cfg.point = parse_point2(field(j, "point"), "point");
        cfg.tangent = parse_point2(field(j, "tangent"), "tangent");
        cfg.third = parse_point2(field(j, "third"), "third");
    } else if (kind == "jet3") {
        cfg.kind = PointConfigP2::Kind::Jet3;
        cfg.point = parse_point2(field(j, "point"), "point");
        cfg.tangent = parse_point2(field(j, "tangent"), "tangent");
        cfg.c = rat_from_json(field(j, "c"));
    } else {
        throw domain_error("ParseError", "", "kind must be points, jet2 or jet3");
    }
    return cfg;
}

ConfigP1P1 parse_blowup_p1p1(const json& j) {
    std::string kind = field(j, "kind").get<std::string>();
    ConfigP1P1 cfg;
    if (kind == "points") {
        cfg.kind = ConfigP1P1::Kind::Points;
        const json& pts = field(j, "points");
        if (!pts.is_array() || pts.size() != 2)
            throw domain_error("ParseError", "", "points: expected two [[u,v],[u,v]] entries");
        for (const json& p : pts) cfg.points.push_back(parse_point_p1p1(p, "point"));
    } else if (kind == "jet") {
        cfg.kind = ConfigP1P1::Kind::Jet;
        cfg.point = parse_point_p1p1(field(j, "point"), "point");
        const json& t = field(j, "tangent");
        if (!t.is_array() || t.size() != 2)
            throw domain_error("ParseError", "", "tangent: expected [du,dv]");
        cfg.du = rat_from_json(t[0]);
        cfg.dv = rat_from_json(t[1]);
    } else {
        throw domain_error("ParseError", "", "kind must be points or jet");
    }
    return cfg;
}

// --- outputs ---------------------------------------------------------------

namespace {

std::string singularities_str(const surface::DP6Type& t) {
    if (t.singularities.empty()) return "-";
    std::string s;
    for (size_t i = 0; i < t.singularities.size(); ++i) {
        if (i) s += " + ";
        s += (t.singularities[i] == surface::Singularity::A1) ? "A1" : "A2";
    }
    return s;
}

OrderedJson partition_json(const surface::ZeroDimScheme& z) {
    OrderedJson arr = OrderedJson::array();
    for (int p : z.partition) arr.push_back(p);
    return arr;
}

OrderedJson blocks_json(const std::vector<sod::BlockDescription>& blocks) {
    OrderedJson arr = OrderedJson::array();
    for (const auto& b : blocks) {
        OrderedJson fac = OrderedJson::array();
        for (const auto& f : b.factors) fac.push_back(f.is_point() ? "Pt" : "R" + std::to_string(f.m));
        arr.push_back(fac);
    }
    return arr;
}

}  // namespace

OrderedJson report_to_json(const classify::ClassificationReport& r) {
    const surface::DP6Type& t = surface::type_info(r.type);
    OrderedJson j;
    j["family"] = r.family;
    j["type"] = r.type;
    OrderedJson deltas = OrderedJson::array();
    for (surface::Delta d : t.delta_set) deltas.push_back(surface::delta_name(d));
    j["delta_set"] = deltas;
    j["singularities"] = singularities_str(t);
    j["toric"] = t.toric;
    j["z1"] = partition_json(r.z1);
    j["z2"] = partition_json(r.z2);
    j["z3"] = partition_json(r.z3);
    j["brauer_orders"] = OrderedJson::array({2, 3});
    OrderedJson diag;
    for (const auto& [k, v] : r.diagnostics) diag[k] = v;
    j["diagnostics"] = diag;
    j["fiber_bundle_dims"] = OrderedJson{{"F2", 1}, {"F3", 2}, {"F4", 3}};
    return j;
}

std::string report_to_table(const classify::ClassificationReport& r) {
    const surface::DP6Type& t = surface::type_info(r.type);
    std::ostringstream out;
    out << "family          " << r.family << "\n";
    out << "type            " << r.type << "\n";
    std::string deltas;
    for (surface::Delta d : t.delta_set) {
        if (!deltas.empty()) deltas += ", ";
        deltas += surface::delta_name(d);
    }
    out << "delta set       " << (deltas.empty() ? "-" : deltas) << "\n";
    out << "singularities   " << singularities_str(t) << "\n";
    out << "z1 z2 z3        " << r.z1.str() << " " << r.z2.str() << " " << r.z3.str() << "\n";
    out << "brauer orders   2, 3\n";
    out << "fiber dims      F2=1 F3=2 F4=3\n";
    for (const auto& [k, v] : r.diagnostics) out << "| " << k << " = " << v << "\n";
    return out.str();
}

OrderedJson type_row_json(const surface::DP6Type& t) {
    OrderedJson j;
    j["type"] = t.id;
    OrderedJson deltas = OrderedJson::array();
    for (surface::Delta d : t.delta_set) deltas.push_back(surface::delta_name(d));
    j["delta_set"] = deltas;
    j["singularities"] = singularities_str(t);
    j["toric"] = t.toric;
    OrderedJson curves = OrderedJson::array();
    for (const auto& c : surface::negative_curves(t).minus_one) curves.push_back(divisor_to_json(c));
    j["minus_one_curves"] = curves;
    j["blocks"] = blocks_json(sod::identify_blocks(t));
    j["z1"] = partition_json(surface::z_scheme(t, 1));
    j["z2"] = partition_json(surface::z_scheme(t, 2));
    j["z3"] = partition_json(surface::z_scheme(t, 3));
    return j;
}

std::string type_table_text(const std::vector<int>& type_ids) {
    std::ostringstream out;
    out << "type  delta set        sing     toric  A1    A2              A3          "
        << "Z1   Z2       Z3\n";
    for (int id : type_ids) {
        const surface::DP6Type& t = surface::type_info(id);
        auto blocks = sod::identify_blocks(t);
        std::string deltas;
        for (surface::Delta d : t.delta_set) {
            if (!deltas.empty()) deltas += ",";
            deltas += surface::delta_name(d);
        }
        if (deltas.empty()) deltas = "-";
        auto pad = [](std::string s, size_t w) {
            if (s.size() < w) s += std::string(w - s.size(), ' ');
            return s;
        };
        out << pad(std::to_string(t.id), 6) << pad(deltas, 17)
            << pad(singularities_str(t), 9) << pad(t.toric ? "yes" : "no", 7)
            << pad(blocks[0].str(), 6) << pad(blocks[1].str(), 16) << pad(blocks[2].str(), 12)
            << pad(surface::z_scheme(t, 1).str(), 5) << pad(surface::z_scheme(t, 2).str(), 9)
            << surface::z_scheme(t, 3).str() << "\n";
    }
    return out.str();
}

OrderedJson divisor_to_json(const DivisorClass& d) {
    return OrderedJson::array({rat_to_json(Rat(d.a)), rat_to_json(Rat(d.b1)),
                               rat_to_json(Rat(d.b2)), rat_to_json(Rat(d.b3))});
}

DivisorClass divisor_from_json(const json& j) {
    if (!j.is_array() || j.size() != 4)
        throw domain_error("ParseError", "", "divisor class must be [a,b1,b2,b3]");
    auto as_int = [](const json& x) {
        Rat q = rat_from_json(x);
        if (!is_integer(q)) throw domain_error("ParseError", "", "divisor entries are integers");
        return num(q);
    };
    return {as_int(j[0]), as_int(j[1]), as_int(j[2]), as_int(j[3])};
}

OrderedJson module_to_json(const auslander::QuiverModule& m) {
    OrderedJson j;
    j["dim"] = m.dim;
    auto mats = [](const std::vector<linalg::Mat>& v) {
        OrderedJson arr = OrderedJson::array();
        for (const auto& mat : v) {
            OrderedJson rows = OrderedJson::array();
            for (size_t r = 0; r < mat.rows(); ++r) {
                OrderedJson row = OrderedJson::array();
                for (size_t c = 0; c < mat.cols(); ++c) row.push_back(rat_to_json(mat.at(r, c)));
                rows.push_back(row);
            }
            arr.push_back(rows);
        }
        return arr;
    };
    j["alpha"] = mats(m.alpha);
    j["beta"] = mats(m.beta);
    return j;
}

auslander::QuiverModule module_from_json(const json& j) {
    const json& dims = field(j, "dim");
    if (!dims.is_array() || dims.empty())
        throw domain_error("ParseError", "", "dim: expected a nonempty array");
    auslander::QuiverModule m = auslander::zero_module(static_cast<int>(dims.size()));
    for (size_t i = 0; i < dims.size(); ++i) m.dim[i] = dims[i].get<int>();
    auto mats = [&](const json& arr, bool is_alpha) {
        if (!arr.is_array() || arr.size() != static_cast<size_t>(m.m - 1))
            throw domain_error("ParseError", "", "expected m-1 arrow matrices");
        std::vector<linalg::Mat> out;
        for (size_t l = 0; l < arr.size(); ++l) {
            size_t rows = static_cast<size_t>(is_alpha ? m.dim[l] : m.dim[l + 1]);
            size_t cols = static_cast<size_t>(is_alpha ? m.dim[l + 1] : m.dim[l]);
            out.push_back(parse_matrix(arr[l], rows, cols, is_alpha ? "alpha" : "beta"));
        }
        return out;
    };
    m.alpha = mats(field(j, "alpha"), true);
    m.beta = mats(field(j, "beta"), false);
    m.check();
    return m;
}

OrderedJson gram_to_json(const sod::GramMatrix& g) {
    OrderedJson rows = OrderedJson::array();
    for (size_t i = 0; i < 6; ++i) {
        OrderedJson row = OrderedJson::array();
        for (size_t j = 0; j < 6; ++j) {
            OrderedJson dims = OrderedJson::array();
            for (const Int& d : g.at(i, j)) dims.push_back(static_cast<int64_t>(d));
            row.push_back(dims);
        }
        rows.push_back(row);
    }
    return rows;
}

std::string digest(const std::string& bytes) {
    uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char buf[17];
    snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return std::string(buf);
}

OrderedJson run_report(const std::string& command, const std::string& input_digest,
                       OrderedJson results) {
    OrderedJson j;
    j["command"] = command;
    j["input_digest"] = input_digest;
    j["versions"] = OrderedJson{{"dp6", kVersion}};
    j["results"] = std::move(results);
    return j;
}

}  // namespace dp6::io
