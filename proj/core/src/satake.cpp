#include "extsq/satake.hpp"

#include <cmath>
#include <fstream>
#include <random>
#include <stdexcept>

#include <json.hpp>

namespace extsq {

const std::vector<std::complex<double>>& SatakeData::alphas(std::uint64_t p) const {
    auto it = entries.find(p);
    if (it == entries.end())
        throw std::runtime_error("SatakeData: missing prime " + std::to_string(p));
    return it->second;
}

std::vector<std::uint64_t> SatakeData::primes() const {
    std::vector<std::uint64_t> out;
    out.reserve(entries.size());
    for (const auto& [p, tuple] : entries) out.push_back(p);
    return out;
}

void validate_satake(const SatakeData& data) {
    if (data.n < 2) throw std::runtime_error("Satake data: n must be at least 2");
    for (const auto& [p, tuple] : data.entries) {
        if (tuple.size() != data.n)
            throw std::runtime_error("Satake data: tuple at prime " + std::to_string(p) +
                                     " has length " + std::to_string(tuple.size()) +
                                     ", expected " + std::to_string(data.n));
        std::complex<double> product = 1.0;
        for (const auto& alpha : tuple) product *= alpha;
        if (std::abs(product - 1.0) > satake_product_tolerance)
            throw std::runtime_error("Satake data: alpha product at prime " +
                                     std::to_string(p) + " is not 1 (|product - 1| = " +
                                     std::to_string(std::abs(product - 1.0)) + ")");
    }
}

SatakeData load_satake(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open Satake file " + path.string());
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error("Satake file " + path.string() + ": " + e.what());
    }

    SatakeData data;
    try {
        data.n = doc.at("n").get<std::uint32_t>();
        data.label = doc.value("label", "");
        for (const auto& entry : doc.at("primes")) {
            const std::uint64_t p = entry.at("p").get<std::uint64_t>();
            if (p < 2) throw std::runtime_error("Satake data: invalid prime " + std::to_string(p));
            std::vector<std::complex<double>> tuple;
            for (const auto& pair : entry.at("alpha")) {
                if (!pair.is_array() || pair.size() != 2)
                    throw std::runtime_error(
                        "Satake data: alpha entries must be [re, im] pairs at prime " +
                        std::to_string(p));
                tuple.emplace_back(pair[0].get<double>(), pair[1].get<double>());
            }
            if (data.entries.count(p))
                throw std::runtime_error("Satake data: duplicate prime " + std::to_string(p));
            data.entries.emplace(p, std::move(tuple));
        }
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error("Satake file " + path.string() + ": " + e.what());
    }
    validate_satake(data);
    return data;
}

void save_satake(const SatakeData& data, const std::filesystem::path& path) {
    nlohmann::json doc;
    doc["n"] = data.n;
    doc["label"] = data.label;
    nlohmann::json primes = nlohmann::json::array();
    for (const auto& [p, tuple] : data.entries) {
        nlohmann::json entry;
        entry["p"] = p;
        nlohmann::json alphas = nlohmann::json::array();
        for (const auto& alpha : tuple)
            alphas.push_back(nlohmann::json::array({alpha.real(), alpha.imag()}));
        entry["alpha"] = alphas;
        primes.push_back(entry);
    }
    doc["primes"] = primes;
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write Satake file " + path.string());
    out << doc.dump(2) << '\n';
}

SatakeData random_unimodular_satake(std::uint32_t n,
                                    const std::vector<std::uint64_t>& primes,
                                    std::uint64_t seed, std::string label) {
    if (n < 2) throw std::invalid_argument("random_unimodular_satake: n must be at least 2");
    SatakeData data;
    data.n = n;
    data.label = std::move(label);
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * 3.141592653589793238462643);
    for (std::uint64_t p : primes) {
        std::vector<std::complex<double>> tuple;
        std::complex<double> product = 1.0;
        for (std::uint32_t i = 0; i + 1 < n; ++i) {
            std::complex<double> alpha = std::polar(1.0, angle(rng));
            product *= alpha;
            tuple.push_back(alpha);
        }
        tuple.push_back(1.0 / product);  // forces a unimodular product
        data.entries.emplace(p, std::move(tuple));
    }
    validate_satake(data);
    return data;
}

}  // namespace extsq
