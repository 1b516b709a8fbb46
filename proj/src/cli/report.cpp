#include "shiftdec/report.hpp"

#include <cmath>

#include "shiftdec/error.hpp"

namespace shiftdec {

Json report_record(const SearchReport & report, bool timing)
{
    Json params = Json::object();
    for (const auto & [name, value] : report.task.params)
        params[name] = value;

    Json witnesses = Json::array();
    if (report.task.p != 0) {
        const Field field = Field::make(report.task.p);
        for (const auto & w : report.witnesses) {
            if (!w.verify(field))
                throw Error(Errc::InternalMismatch, "witness fails re-validation: A=" + w.a.to_string());
            Json entry = Json::object();
            entry["A"] = w.a.elements();
            if (w.b)
                entry["B"] = w.b->elements();
            witnesses.push_back(std::move(entry));
        }
    }

    Json rec = Json::object();
    rec["task"] = report.task.task;
    rec["p"] = report.task.p;
    rec["subgroup_order"] = report.task.subgroup_order;
    rec["params"] = std::move(params);
    rec["witnesses"] = std::move(witnesses);
    rec["exhaustive"] = report.exhaustive;
    rec["nodes"] = report.nodes;
    const double ms = timing ? std::round(std::chrono::duration<double, std::milli>(report.elapsed).count() * 1000.0) / 1000.0
                             : 0.0;
    rec["elapsed_ms"] = ms;
    if (!report.task.variant.empty())
        rec["variant"] = report.task.variant;
    if (report.clique_number)
        rec["clique"] = *report.clique_number;
    if (report.oracle_agrees)
        rec["oracle_agrees"] = *report.oracle_agrees;
    return rec;
}

void write_line(std::ostream & out, const Json & record)
{
    out << record.dump() << '\n';
}

} // namespace shiftdec
