#include "tckit/io.hpp"

#include <fstream>
#include <sstream>

namespace tckit {

using nlohmann::json;

namespace {

mpq_class parse_rational(const std::string& s)
{
    std::string t;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c)))
            t += c;
    bool ok = !t.empty();
    std::size_t slash = t.find('/');
    auto digits = [](const std::string& x, bool sign) {
        std::size_t i = (sign && !x.empty() && (x[0] == '-' || x[0] == '+')) ? 1 : 0;
        if (i >= x.size())
            return false;
        for (; i < x.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(x[i])))
                return false;
        return true;
    };
    if (slash == std::string::npos)
        ok = ok && digits(t, true);
    else
        ok = ok && digits(t.substr(0, slash), true) && digits(t.substr(slash + 1), false);
    if (!ok)
        throw ParseError("malformed rational '" + s + "'");
    if (t[0] == '+')
        t.erase(0, 1);
    mpq_class q;
    try {
        q = mpq_class(t, 10);
    } catch (const std::invalid_argument&) {
        throw ParseError("malformed rational '" + s + "'");
    }
    if (q.get_den() == 0)
        throw ParseError("zero denominator in '" + s + "'");
    q.canonicalize();
    return q;
}

std::string rational_text(const mpq_class& q) { return q.get_str(); }

const json& need(const json& j, const char* key, const std::string& where)
{
    if (!j.is_object() || !j.contains(key))
        throw ParseError(where + ": missing key '" + key + "'");
    return j.at(key);
}

std::string need_string(const json& j, const char* key, const std::string& where)
{
    const json& v = need(j, key, where);
    if (!v.is_string())
        throw ParseError(where + "." + key + ": expected a string");
    return v.get<std::string>();
}

} // namespace

json scalar_to_json(const Scalar& s)
{
    const FieldSpec& f = s.field();
    switch (f.kind) {
    case FieldKind::Rational:
        return rational_text(s.rational_value());
    case FieldKind::Cyclotomic: {
        json c = json::array();
        for (const auto& q : s.coeffs())
            c.push_back(rational_text(q));
        return json{{"zeta", f.order}, {"coeffs", c}};
    }
    case FieldKind::Prime:
        return json{{"mod", f.p}, {"val", s.prime_value()}};
    }
    return nullptr;
}

Scalar scalar_from_json(const json& j, const FieldSpec& field)
{
    if (j.is_number_integer())
        return Scalar::from_int(field, j.get<long>());
    if (j.is_string())
        return Scalar::from_rational(field, parse_rational(j.get<std::string>()));
    if (j.is_object() && j.contains("zeta")) {
        if (field.kind != FieldKind::Cyclotomic || !j.at("zeta").is_number_unsigned() ||
            j.at("zeta").get<std::uint64_t>() != field.order)
            throw ParseError("cyclotomic scalar does not match field " + field.to_string());
        const json& c = need(j, "coeffs", "scalar");
        if (!c.is_array() || c.empty())
            throw ParseError("scalar coeffs must be a nonempty array");
        std::vector<mpq_class> raw;
        for (const auto& x : c) {
            if (x.is_number_integer())
                raw.emplace_back(x.get<long>());
            else if (x.is_string())
                raw.push_back(parse_rational(x.get<std::string>()));
            else
                throw ParseError("scalar coefficient must be a string or integer");
        }
        return Scalar::cyclotomic(field.order, raw);
    }
    if (j.is_object() && j.contains("mod")) {
        if (field.kind != FieldKind::Prime || !j.at("mod").is_number_unsigned() ||
            j.at("mod").get<std::uint64_t>() != field.p)
            throw ParseError("prime-field scalar does not match field " + field.to_string());
        const json& v = need(j, "val", "scalar");
        if (!v.is_number_unsigned() || v.get<std::uint64_t>() >= field.p)
            throw ParseError("prime-field value must be an integer in [0, p)");
        return Scalar::prime_element(field, v.get<std::uint64_t>());
    }
    throw ParseError("malformed scalar " + j.dump());
}

json category_to_json(const FSymbolTable& F, const std::string& name)
{
    const FusionRing& R = F.ring();
    json j;
    j["format"] = "tckit-category/1";
    j["name"] = name;
    j["field"] = F.field().to_string();
    j["labels"] = R.labels();
    j["unit"] = R.label(R.unit());
    json dual = json::object();
    for (int i = 0; i < R.rank(); ++i)
        dual[R.label(i)] = R.label(R.dual(i));
    j["dual"] = dual;
    json fusion = json::array();
    for (int a = 0; a < R.rank(); ++a)
        for (int b = 0; b < R.rank(); ++b)
            for (int c : R.products(a, b))
                fusion.push_back({R.label(a), R.label(b), R.label(c)});
    j["fusion"] = fusion;
    json fs = json::array();
    for (const auto& [h, v] : F.entries())
        fs.push_back({{"a", R.label(h[0])},
                      {"b", R.label(h[1])},
                      {"c", R.label(h[2])},
                      {"d", R.label(h[3])},
                      {"e", R.label(h[4])},
                      {"f", R.label(h[5])},
                      {"value", scalar_to_json(v)}});
    j["F"] = fs;
    return j;
}

FSymbolTable category_from_json(const json& j, const LoadOptions& opt)
{
    if (!j.is_object())
        throw ParseError("category document must be a JSON object");
    FieldSpec field = FieldSpec::parse(need_string(j, "field", "category"));
    const json& labels = need(j, "labels", "category");
    if (!labels.is_array() || labels.empty())
        throw ParseError("labels must be a nonempty array");
    std::vector<std::string> names;
    for (const auto& l : labels) {
        if (!l.is_string())
            throw ParseError("labels must be strings");
        names.push_back(l.get<std::string>());
    }
    auto index = [&](const json& x, const std::string& where) {
        if (!x.is_string())
            throw ParseError(where + ": expected a label string");
        for (std::size_t i = 0; i < names.size(); ++i)
            if (names[i] == x.get<std::string>())
                return static_cast<int>(i);
        throw ParseError(where + ": unknown label '" + x.get<std::string>() + "'");
    };
    FusionRingData d = FusionRingData::empty(names, index(need(j, "unit", "category"), "unit"));
    if (j.contains("dual")) {
        const json& dual = j.at("dual");
        if (!dual.is_object())
            throw ParseError("dual must be an object mapping labels to labels");
        for (auto it = dual.begin(); it != dual.end(); ++it)
            d.dual[index(json(it.key()), "dual")] = index(it.value(), "dual." + it.key());
    }
    const json& fusion = need(j, "fusion", "category");
    if (!fusion.is_array())
        throw ParseError("fusion must be an array of [a, b, c] triples");
    for (std::size_t t = 0; t < fusion.size(); ++t) {
        std::string where = "fusion[" + std::to_string(t) + "]";
        if (!fusion[t].is_array() || fusion[t].size() != 3)
            throw ParseError(where + ": expected [a, b, c]");
        d.set(index(fusion[t][0], where), index(fusion[t][1], where), index(fusion[t][2], where));
    }
    FusionRing ring = validate_ring(d);

    std::map<Hexatuple, Scalar> entries;
    const json& fs = need(j, "F", "category");
    if (!fs.is_array())
        throw ParseError("F must be an array");
    for (std::size_t t = 0; t < fs.size(); ++t) {
        std::string where = "F[" + std::to_string(t) + "]";
        const json& e = fs[t];
        Hexatuple h{};
        const char* keys[] = {"a", "b", "c", "d", "e", "f"};
        for (int k = 0; k < 6; ++k)
            h[k] = index(need(e, keys[k], where), where + "." + keys[k]);
        Scalar v = [&] {
            try {
                return scalar_from_json(need(e, "value", where), field);
            } catch (const ParseError& err) {
                throw ParseError(where + ".value: " + err.what());
            }
        }();
        if (!entries.emplace(h, v).second)
            throw ParseError(where + ": duplicate entry " + hexatuple_text(ring, h));
    }
    FSymbolTable F = FSymbolTable::create(ring, field, entries);
    if (opt.check_pentagon) {
        PentagonReport rep = pentagon_check(F);
        if (!rep.ok)
            throw ValidationError(rep.describe(ring));
    }
    return F;
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ParseError("cannot read '" + path + "'");
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

FSymbolTable load_category(const std::string& path, const LoadOptions& opt)
{
    json j;
    try {
        j = json::parse(read_file(path));
    } catch (const json::parse_error& e) {
        throw ParseError(path + ": " + e.what());
    }
    return category_from_json(j, opt);
}

std::vector<Point2> parse_polygon(const std::string& text)
{
    std::vector<Point2> pts;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto h = line.find('#'); h != std::string::npos)
            line.erase(h);
        for (char& c : line)
            if (c == ',')
                c = ' ';
        std::istringstream ls(line);
        std::vector<std::string> tok;
        for (std::string t; ls >> t;)
            tok.push_back(t);
        if (tok.empty())
            continue;
        if (tok.size() != 2)
            throw ParseError("line " + std::to_string(lineno) + ": expected two coordinates");
        try {
            pts.push_back(Point2{parse_rational(tok[0]), parse_rational(tok[1])});
        } catch (const ParseError& e) {
            throw ParseError("line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    return pts;
}

} // namespace tckit
