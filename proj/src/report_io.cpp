#include <fstream>
#include <iomanip>
#include <sstream>

#include <json.hpp>

#include <georag/errors.hpp>
#include <georag/eval/benchmark.hpp>

namespace georag::eval {

namespace {

using nlohmann::json;

std::string fmt(double v) {
    std::ostringstream os;
    os << std::setprecision(12) << v;
    return os.str();
}

std::ofstream open_out(const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw Error("cannot open report file for writing: " + path.string());
    return out;
}

json variant_params(const VariantSpec& spec) {
    json params;
    params["mode"] = spec.mode == VariantMode::retrieval ? "retrieval"
                     : spec.mode == VariantMode::norag   ? "norag"
                                                         : "random_docs";
    params["alpha"] = spec.fusion.alpha;
    params["top_k"] = spec.fusion.top_k;
    params["expansion_factor"] = spec.fusion.expansion_factor;
    return params;
}

} // namespace

void write_report_json(const MetricReport& report, const std::filesystem::path& path) {
    json root;
    root["seeds"] = report.seeds;
    root["baseline"] = report.baseline;
    root["warnings"] = report.warnings;

    json variants = json::array();
    for (const auto& vr : report.variants) {
        json v;
        v["id"] = vr.spec.id;
        v["params"] = variant_params(vr.spec);
        json metrics;
        for (const auto& [name, agg] : vr.metrics) {
            metrics[name] = {{"mean", agg.mean},
                             {"per_seed", agg.per_seed},
                             {"n", agg.n_defined}};
        }
        v["metrics"] = std::move(metrics);
        variants.push_back(std::move(v));
    }
    root["variants"] = std::move(variants);

    json subdomains;
    for (const auto& [sub, by_variant] : report.per_subdomain) {
        for (const auto& [variant, metrics] : by_variant) {
            for (const auto& [name, mean] : metrics) {
                subdomains[sub][variant][name] = mean;
            }
        }
    }
    root["per_subdomain"] = std::move(subdomains);

    json significance;
    for (const auto& [variant, metrics] : report.significance) {
        for (const auto& [name, sig] : metrics) {
            significance[variant][name] = {{"p_value", sig.p_value},
                                           {"cliffs_delta", sig.cliffs_delta},
                                           {"n", sig.n}};
        }
    }
    root["significance"] = std::move(significance);

    auto out = open_out(path);
    out << root.dump(2) << "\n";
}

void write_report_csv(const MetricReport& report, const std::filesystem::path& path) {
    auto out = open_out(path);
    out << "variant,metric,mean";
    for (size_t i = 0; i < report.seeds.size(); ++i) out << ",seed" << report.seeds[i];
    out << ",n,p_value_vs_baseline,cliffs_delta_vs_baseline\n";

    for (const auto& vr : report.variants) {
        for (const auto& [name, agg] : vr.metrics) {
            out << vr.spec.id << "," << name << "," << fmt(agg.mean);
            for (double v : agg.per_seed) out << "," << fmt(v);
            for (size_t i = agg.per_seed.size(); i < report.seeds.size(); ++i) out << ",";
            out << "," << agg.n_defined;
            const auto vit = report.significance.find(vr.spec.id);
            if (vit != report.significance.end() && vit->second.count(name)) {
                const auto& sig = vit->second.at(name);
                out << "," << fmt(sig.p_value) << "," << fmt(sig.cliffs_delta);
            } else {
                out << ",,";
            }
            out << "\n";
        }
    }
}

void write_subdomain_csv(const MetricReport& report, const std::filesystem::path& path) {
    auto out = open_out(path);
    out << "subdomain,variant,metric,mean\n";
    for (const auto& [sub, by_variant] : report.per_subdomain) {
        for (const auto& [variant, metrics] : by_variant) {
            for (const auto& [name, mean] : metrics) {
                out << sub << "," << variant << "," << name << "," << fmt(mean) << "\n";
            }
        }
    }
}

void write_matrix_csv(const DomainMatrix& matrix, const std::filesystem::path& path) {
    auto out = open_out(path);
    out << "subdomain";
    for (const auto& label : matrix.labels) out << "," << label;
    out << "\n";
    for (size_t i = 0; i < matrix.labels.size(); ++i) {
        out << matrix.labels[i];
        for (size_t j = 0; j < matrix.labels.size(); ++j) {
            out << ",";
            if (matrix.values[i][j]) out << fmt(*matrix.values[i][j]);
        }
        out << "\n";
    }
}

} // namespace georag::eval
